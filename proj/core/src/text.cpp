#include "addbase/text.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include <nlohmann/json.hpp>

#include "addbase/error.hpp"
#include "addbase/serialize.hpp"

namespace addbase {
namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view src) : src_(src) {}

  RawDescription parse() {
    RawDescription raw;
    bool seen_e = false, seen_m = false, seen_r = false, seen_n0 = false;
    skip_ws();
    if (at_end()) fail("empty set description");
    while (!at_end()) {
      const std::size_t key_pos = pos_;
      const std::string key = parse_key();
      skip_ws();
      expect('=');
      skip_ws();
      auto once = [&](bool& seen) {
        if (seen) fail_at(key_pos, "duplicate clause '" + key + "'");
        seen = true;
      };
      if (key == "E") {
        once(seen_e);
        raw.exceptional = parse_list();
      } else if (key == "m") {
        once(seen_m);
        raw.modulus = parse_int();
      } else if (key == "R") {
        once(seen_r);
        raw.residues = parse_list();
      } else if (key == "N0") {
        once(seen_n0);
        raw.threshold = parse_int();
      } else {
        fail_at(key_pos, "unknown clause '" + key + "' (expected E, m, R or N0)");
      }
      skip_ws();
      if (at_end()) break;
      expect(';');
      skip_ws();
    }
    return raw;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw ParseError(pos, what);
  }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" +
           (at_end() ? " but input ended" : std::string(" but found '") + peek() + "'"));
    }
    ++pos_;
  }

  std::string parse_key() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a clause name");
    return std::string(src_.substr(start, pos_ - start));
  }

  Int parse_int() {
    const char* first = src_.data() + pos_;
    const char* last = src_.data() + src_.size();
    if (first != last && *first == '+') ++first;
    Int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail("integer out of 64-bit range");
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - src_.data());
    return value;
  }

  std::vector<Int> parse_list() {
    expect('{');
    std::vector<Int> out;
    skip_ws();
    if (peek() == '}') {
      ++pos_;
      return out;
    }
    while (true) {
      skip_ws();
      out.push_back(parse_int());
      skip_ws();
      if (peek() == '}') {
        ++pos_;
        return out;
      }
      expect(',');
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<PeriodicSet> named_set(std::string_view name) {
  if (name == "naturals" || name == "N") return PeriodicSet::naturals();
  if (name == "evens") return PeriodicSet::progression(2, 0);
  if (name == "odds") return PeriodicSet::progression(2, 1);
  if (name.size() >= 2 && name.back() == 'N') {
    Int k = 0;
    auto digits = name.substr(0, name.size() - 1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && k >= 1) {
      return PeriodicSet::progression(k, 0);
    }
  }
  return std::nullopt;
}

std::string join(const std::vector<Int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

}  // namespace

PeriodicSet parse_set(std::string_view input) {
  const std::string_view text = trim(input);
  const std::size_t offset = static_cast<std::size_t>(text.data() - input.data());
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(offset + (e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
    }
    return set_from_json(j);
  }
  if (auto named = named_set(text)) return *named;
  return canonicalize(TextParser(input).parse());
}

std::string format_set(const PeriodicSet& s) {
  return "E=" + join(s.exceptional()) + "; m=" + std::to_string(s.modulus()) +
         "; R=" + join(s.residues()) + "; N0=" + std::to_string(s.threshold());
}

}  // namespace addbase
