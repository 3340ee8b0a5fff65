#include "app.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "addbase/basis.hpp"
#include "addbase/census.hpp"
#include "addbase/error.hpp"
#include "addbase/essentia.hpp"
#include "addbase/oracle.hpp"
#include "addbase/serialize.hpp"
#include "addbase/text.hpp"

namespace addbase::cli {
namespace {

using nlohmann::json;

struct Window {
  Int lo = 0;
  Int hi = 0;
};

Window parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(Errc::InvalidInput, "window must be LO:HI");
  auto number = [&](std::string_view part) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw Error(Errc::InvalidInput, "window bound '" + std::string(part) + "' is not an integer");
    }
    return v;
  };
  std::string_view view(text);
  Window w{number(view.substr(0, colon)), number(view.substr(colon + 1))};
  if (w.lo > w.hi) throw Error(Errc::InvalidRange, "window LO > HI");
  return w;
}

std::string list(const std::vector<Int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

std::string list(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Options {
  bool json_output = false;
  std::string set_text;
  std::string p_text;
  std::string window_text;
  Int h_max = 5;
  CensusConfig census;
  std::string census_window = "0:120";
};

int do_analyze(const Options& o, std::ostream& out) {
  const auto s = parse_set(o.set_text);
  const auto report = analyze(s);
  if (o.json_output) {
    json j = report;
    j["set"] = s;
    emit(out, j);
    return kOk;
  }
  out << "set:       " << format_set(s) << '\n'
      << "is_basis:  " << (report.is_basis ? "true" : "false") << '\n'
      << "diff_gcd:  " << report.diff_gcd << '\n';
  if (report.order) out << "order:     " << *report.order << '\n';
  if (!report.is_basis) out << "reason:    " << report.failure_reason() << '\n';
  return kOk;
}

int do_order(const Options& o, std::ostream& out) {
  const auto s = parse_set(o.set_text);
  const Int h = order(s);
  if (o.json_output) {
    emit(out, {{"set", s}, {"order", h}});
  } else {
    out << h << '\n';
  }
  return kOk;
}

int do_essential_elements(const Options& o, std::ostream& out) {
  const auto s = parse_set(o.set_text);
  const auto elements = essential_elements(s);
  if (o.json_output) {
    emit(out, {{"set", s}, {"essential_elements", elements}});
  } else {
    out << list(elements) << '\n';
  }
  return kOk;
}

int do_essential_subsets(const Options& o, std::ostream& out) {
  const auto s = parse_set(o.set_text);
  const auto family = essential_subsets(s);
  if (o.json_output) {
    emit(out, json(family));
    return kOk;
  }
  if (family.empty()) out << "no essential subsets\n";
  for (std::size_t i = 0; i < family.size(); ++i) {
    out << "P_" << i + 1 << " = " << list(family[i].members) << "  d=" << family[i].d_value
        << "  primes=" << list(family[i].witness_primes) << '\n';
  }
  return kOk;
}

int do_verify(const Options& o, std::ostream& out) {
  const auto s = parse_set(o.set_text);
  const auto p = parse_set(o.p_text);
  const auto verdict = explain_essentiality(s, p);
  if (o.json_output) {
    emit(out, json(verdict));
  } else {
    out << (verdict.holds() ? "true" : "false");
    if (!verdict.holds()) out << " (" << verdict.reason() << ')';
    out << '\n';
  }
  return kOk;
}

int do_trace(const Options& o, std::ostream& out) {
  const auto s = parse_set(o.set_text);
  const auto trace = proof_trace(s);
  if (o.json_output) {
    emit(out, json(trace));
    return kOk;
  }
  for (std::size_t i = 0; i < trace.family.size(); ++i) {
    out << "P_" << i + 1 << " = " << list(trace.family[i].members) << '\n';
  }
  if (trace.degenerate()) out << "card I <= 1\n";
  if (trace.alpha) out << "alpha = " << *trace.alpha << '\n';
  out << "Lambda = " << list(trace.lambda_set) << '\n';
  for (const auto& c : trace.choice) out << "i(" << c.x << ") = " << c.index << '\n';
  for (const auto& p : trace.j_sets) out << "J_{" << p.x << "," << p.y << "} = " << list(p.indices) << '\n';
  out << "I~ = " << list(trace.i_tilde) << "  I = " << list(trace.index_set()) << '\n';
  return kOk;
}

int do_oracle(const Options& o, std::ostream& out) {
  const auto s = parse_set(o.set_text);
  if (s.empty()) throw Error(Errc::EmptySet, "oracle needs a nonempty set");
  const Int m = s.modulus();
  Window w{10 * m * o.h_max, 10 * m * o.h_max + 6 * m * o.h_max};
  if (!o.window_text.empty()) w = parse_window(o.window_text);

  const auto windows = sumset_ladder(s, o.h_max, w.lo, w.hi);
  const auto empirical = empirical_order(s, o.h_max, w.lo, w.hi);
  const auto structural = analyze(s);
  const auto evidence = windowed_basis_verdict(s, w.lo, w.hi);
  // Orders above h_max and non-bases must both leave the window uncovered.
  bool agrees = evidence.basis() == structural.is_basis;
  if (structural.is_basis && *structural.order <= o.h_max) {
    agrees = agrees && empirical.order == structural.order;
  } else {
    agrees = agrees && !empirical.order;
  }

  if (o.json_output) {
    emit(out, {{"set", s},
               {"window", {w.lo, w.hi}},
               {"sumsets", windows},
               {"empirical_order", empirical},
               {"window_gcd", evidence.window_gcd},
               {"windowed_basis", evidence.basis()},
               {"structural", structural},
               {"agrees", agrees}});
    return kOk;
  }
  out << "window [" << w.lo << ", " << w.hi << ")\n";
  for (const auto& win : windows) {
    out << "h=" << win.h() << "  covered " << win.count() << "/" << (w.hi - w.lo)
        << (win.full() ? "  full" : "") << '\n';
  }
  out << "empirical order: " << empirical.to_string() << '\n'
      << "window gcd:      " << evidence.window_gcd << '\n'
      << "structural:      " << (structural.is_basis ? "basis of order " + std::to_string(*structural.order)
                                                     : "not a basis (" + structural.failure_reason() + ")")
      << '\n'
      << "agrees:          " << (agrees ? "yes" : "no") << '\n';
  return kOk;
}

int do_census(Options o, std::ostream& out) {
  const Window w = parse_window(o.census_window);
  o.census.window_lo = w.lo;
  o.census.window_hi = w.hi;
  const auto report = run_census(o.census);
  if (o.json_output) {
    emit(out, json(report));
  } else {
    out << "trials " << o.census.trials << "  seed " << o.census.seed << '\n';
    for (const auto& [law, tally] : report.laws) {
      out << "  " << law << ": " << tally.checks << " checks, " << tally.violations << " violations\n";
    }
    out << "essential subset counts:";
    for (const auto& [size, count] : report.family_sizes) out << ' ' << size << ':' << count;
    out << "\npairs checked " << report.pairs_checked << ", bound equalities "
        << report.bound_equalities << " (max omega " << report.max_bound_equality << ")\n";
    for (const auto& v : report.violations) {
      out << json{{"law", v.law}, {"trial", v.trial}, {"set", v.set}, {"detail", v.detail}}.dump()
          << '\n';
    }
  }
  return report.clean() ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Additive bases given as eventually periodic integer sets"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json_output, "Machine-readable JSON output");

  const std::string set_help = "Set: 'E={..}; m=M; R={..}; N0=N', JSON, or naturals/evens/odds/kN";
  std::function<int()> action;
  auto command = [&](const char* name, const char* help, std::function<int()> fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("set", o.set_text, set_help)->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  command("analyze", "Decide basis-ness and compute the order", [&] { return do_analyze(o, out); });
  command("order", "Order of a basis", [&] { return do_order(o, out); });
  command("essential-elements", "Essential elements of a basis",
          [&] { return do_essential_elements(o, out); });
  command("essential-subsets", "All essential subsets of a basis",
          [&] { return do_essential_subsets(o, out); });
  auto* verify = command("verify", "Check that P is an essentiality of the basis",
                         [&] { return do_verify(o, out); });
  verify->add_option("--p", o.p_text, "Candidate essentiality P")->required();
  command("trace", "Replay the finiteness argument on the essential family",
          [&] { return do_trace(o, out); });
  auto* oracle = command("oracle", "Brute-force windowed sumset evidence",
                         [&] { return do_oracle(o, out); });
  oracle->add_option("--window", o.window_text, "Window LO:HI (default 10·m·h : 16·m·h)");
  oracle->add_option("--h-max", o.h_max, "Largest number of summands")->check(CLI::PositiveNumber);

  auto* census = app.add_subcommand("census", "Check every law over a seeded random corpus");
  census->add_option("--trials", o.census.trials, "Number of corpus bases");
  census->add_option("--seed", o.census.seed, "64-bit seed");
  census->add_option("--m-max", o.census.modulus_max, "Largest modulus");
  census->add_option("--e-max", o.census.exceptional_max, "Largest exceptional part");
  census->add_option("--density", o.census.residue_density, "Residue density in (0,1]");
  census->add_option("--window", o.census_window, "Pair window LO:HI for the J_{x,y} bound");
  census->add_flag("--order-oracle", o.census.order_oracle, "Also compare orders with windowed sumsets");
  census->callback([&] { action = [&] { return do_census(o, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    return action ? action() : kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::NotABasis ? kPrecondition : kInputError;
  } catch (const LawViolation& e) {
    err << "law violation: " << e.what() << '\n';
    return kViolation;
  }
}

}  // namespace addbase::cli
