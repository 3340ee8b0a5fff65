#include "addbase/serialize.hpp"

#include "addbase/error.hpp"

namespace addbase {

using nlohmann::json;

void to_json(json& j, const PeriodicSet& s) {
  j = json{{"exceptional", s.exceptional()},
           {"modulus", s.modulus()},
           {"residues", s.residues()},
           {"threshold", s.threshold()}};
}

void to_json(json& j, const BasisReport& r) {
  j = json{{"is_basis", r.is_basis},
           {"diff_gcd", r.diff_gcd},
           {"order", r.order ? json(*r.order) : json(nullptr)},
           {"failure_reason", r.is_basis ? json(nullptr) : json(r.failure_reason())}};
}

void to_json(json& j, const EssentialSubset& p) {
  j = json{{"members", p.members}, {"d_value", p.d_value}, {"witness_primes", p.witness_primes}};
}

void to_json(json& j, const EssentialityVerdict& v) {
  j = json{{"essentiality", v.holds()},
           {"reason", v.reason()},
           {"witness", v.witness ? json(*v.witness) : json(nullptr)}};
}

void to_json(json& j, const CoprimeReport& r) {
  j = json{{"d_values", {r.d_first, r.d_second}}, {"gcd", r.gcd}, {"coprime", r.gcd == 1}};
}

void to_json(json& j, const ProofTrace& t) {
  json choice = json::array();
  for (const auto& c : t.choice) choice.push_back({{"x", c.x}, {"i", c.index}});
  json pairs = json::array();
  for (const auto& p : t.j_sets) pairs.push_back({{"x", p.x}, {"y", p.y}, {"indices", p.indices}});
  j = json{{"family", t.family},
           {"index_set", t.index_set()},
           {"alpha", t.alpha ? json(*t.alpha) : json(nullptr)},
           {"lambda_set", t.lambda_set},
           {"choice", choice},
           {"j_sets", pairs},
           {"i_tilde", t.i_tilde},
           {"degenerate", t.degenerate()}};
}

void to_json(json& j, const SumsetWindow& w) {
  j = json{{"h", w.h()}, {"lo", w.lo()}, {"hi", w.hi()}, {"count", w.count()}, {"bitmap", w.hex()}};
}

void to_json(json& j, const EmpiricalOrder& e) {
  j = json{{"h_max", e.h_max}, {"order", e.order ? json(*e.order) : json(nullptr)},
           {"verdict", e.to_string()}};
}

PeriodicSet set_from_json(const json& j) {
  if (!j.is_object()) throw ParseError(0, "set description must be a JSON object");
  RawDescription raw;
  auto int_list = [&](const char* key) {
    std::vector<Int> out;
    if (!j.contains(key)) return out;
    const auto& v = j.at(key);
    if (!v.is_array()) throw ParseError(0, std::string("'") + key + "' must be an array");
    for (const auto& x : v) {
      if (!x.is_number_integer()) throw ParseError(0, std::string("'") + key + "' must hold integers");
      out.push_back(x.get<Int>());
    }
    return out;
  };
  auto integer = [&](const char* key, Int fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw ParseError(0, std::string("'") + key + "' must be an integer");
    return v.get<Int>();
  };
  for (const auto& [key, unused] : j.items()) {
    if (key != "exceptional" && key != "modulus" && key != "residues" && key != "threshold") {
      throw ParseError(0, "unknown field '" + key + "'");
    }
  }
  raw.exceptional = int_list("exceptional");
  raw.modulus = integer("modulus", 1);
  raw.residues = int_list("residues");
  raw.threshold = integer("threshold", 0);
  return canonicalize(std::move(raw));
}

}  // namespace addbase
