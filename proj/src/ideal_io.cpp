#include "artinres/ideal_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "artinres/errors.hpp"

namespace artinres {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::uint64_t parse_natural(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError("expected a natural number for " + std::string(what) + ", got '" + std::string(s) + "'");
  }
  return v;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// x<k> with k >= 1, yielding k - 1.
std::optional<std::size_t> indexed_name(std::string_view s) {
  if (s.size() < 2 || s[0] != 'x' || s[1] == '0') return std::nullopt;
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), k);
  if (ec != std::errc{} || ptr != s.data() + s.size() || k == 0) return std::nullopt;
  return k - 1;
}

using Factors = std::vector<std::pair<std::string, std::uint32_t>>;

Factors parse_monomial_factors(std::string_view token) {
  Factors out;
  if (token == "1") return out;
  for (std::string_view f : split(token, '*')) {
    std::string_view name = f;
    std::uint32_t power = 1;
    if (auto caret = f.find('^'); caret != std::string_view::npos) {
      name = trim(f.substr(0, caret));
      std::uint64_t e = parse_natural(trim(f.substr(caret + 1)), "an exponent");
      if (e > 1'000'000) throw InputError("exponent too large in '" + std::string(token) + "'");
      power = static_cast<std::uint32_t>(e);
    }
    if (!valid_name(name)) throw InputError("malformed monomial '" + std::string(token) + "'");
    out.emplace_back(std::string(name), power);
  }
  return out;
}

std::vector<std::string> names_from_header(std::string_view value) {
  value = trim(value);
  if (!value.empty() && std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    std::uint64_t d = parse_natural(value, "the variable count");
    if (d == 0 || d > 64) throw InputError("variable count must be between 1 and 64");
    std::vector<std::string> names;
    for (std::uint64_t i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
    return names;
  }
  std::vector<std::string> names;
  for (std::string_view n : split(value, ',')) {
    if (!valid_name(n)) throw InputError("bad variable name '" + std::string(n) + "'");
    names.emplace_back(n);
  }
  return names;
}

std::vector<std::string> infer_names(const std::vector<Factors>& monomials) {
  std::size_t max_indexed = 0;
  std::vector<std::string> others;
  for (const Factors& m : monomials) {
    for (const auto& [name, power] : m) {
      if (auto k = indexed_name(name)) {
        max_indexed = std::max(max_indexed, *k + 1);
      } else if (std::find(others.begin(), others.end(), name) == others.end()) {
        others.push_back(name);
      }
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= max_indexed; ++i) names.push_back("x" + std::to_string(i));
  names.insert(names.end(), others.begin(), others.end());
  return names;
}

}  // namespace

MonomialIdeal parse_ideal_text(std::string_view text, const IdealSyntax& syntax) {
  std::vector<std::string> names = syntax.vars;
  std::uint32_t p = syntax.char_p;
  std::vector<Factors> monomials;

  std::size_t line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (auto colon = line.find(':'); colon != std::string_view::npos) {
      std::string_view key = trim(line.substr(0, colon));
      std::string_view value = trim(line.substr(colon + 1));
      if (key == "vars" || key == "ring") {
        if (syntax.vars.empty()) names = names_from_header(value);
      } else if (key == "char" || key == "p") {
        if (!syntax.force_char) p = static_cast<std::uint32_t>(parse_natural(value, "the characteristic"));
      } else {
        throw InputError("line " + std::to_string(line_no) + ": unknown header '" + std::string(key) + "'");
      }
      continue;
    }
    for (std::string_view token : split(line, ',')) {
      if (token.empty()) continue;
      try {
        monomials.push_back(parse_monomial_factors(token));
      } catch (const InputError& e) {
        throw InputError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }

  if (names.empty()) names = infer_names(monomials);
  if (names.empty()) throw InputError("cannot determine the variables; add a 'vars:' line");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) throw InputError("duplicate variable name '" + names[i] + "'");
  }

  RingSpec ring(names.size(), p, names);
  std::vector<Monomial> gens;
  for (const Factors& m : monomials) {
    std::vector<std::uint32_t> e(names.size(), 0);
    for (const auto& [name, power] : m) {
      auto it = index.find(name);
      if (it == index.end()) throw InputError("unknown variable '" + name + "'");
      e[it->second] += power;
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal parse_ideal_json(const nlohmann::json& j, const IdealSyntax& syntax) {
  if (!j.is_object() || !j.contains("gens") || !j.contains("vars")) {
    throw InputError("ideal JSON needs \"vars\" and \"gens\"");
  }
  std::vector<std::string> names = syntax.vars;
  std::size_t d = 0;
  const auto& vars = j.at("vars");
  if (vars.is_number_unsigned()) {
    d = vars.get<std::size_t>();
  } else if (vars.is_array()) {
    d = vars.size();
    if (names.empty()) {
      for (const auto& n : vars) names.push_back(n.get<std::string>());
    }
  } else {
    throw InputError("\"vars\" must be a count or a list of names");
  }
  if (!names.empty() && names.size() != d) throw InputError("--vars does not match the JSON variable count");
  std::uint32_t p = syntax.char_p;
  if (j.contains("p") && !syntax.force_char) p = j.at("p").get<std::uint32_t>();
  RingSpec ring(d, p, names);
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) {
    if (!g.is_array()) throw InputError("each generator must be an exponent list");
    std::vector<std::uint32_t> e;
    for (const auto& x : g) {
      if (!x.is_number_unsigned()) throw InputError("exponents must be natural numbers");
      e.push_back(x.get<std::uint32_t>());
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal read_ideal_file(const std::string& path, const IdealSyntax& syntax) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(path + ": " + e.what());
    }
    return parse_ideal_json(j, syntax);
  }
  return parse_ideal_text(text, syntax);
}

nlohmann::json ideal_to_json(const MonomialIdeal& i) {
  nlohmann::json j;
  const RingSpec& ring = i.ring();
  if (ring.names.empty()) {
    j["vars"] = ring.num_vars;
  } else {
    j["vars"] = ring.names;
  }
  j["p"] = ring.char_p;
  j["gens"] = nlohmann::json::array();
  for (const Monomial& g : i.generators()) j["gens"].push_back(g.exponents());
  return j;
}

}  // namespace artinres
