#pragma once

// Reading and writing monomial ideals.
//
// Text form: one or more monomials per line separated by commas, '#' starts a comment.
// Monomials are products of variables with optional exponents: x1^2*x3, x*y^2, 1.
// Optional header lines fix the ring:
//   vars: x,y,z      (or a count: vars: 4, meaning x1..x4)
//   char: 32003
// Without a vars line, names x1, x2, ... are placed by index and any other names in
// order of first appearance.
//
// JSON form: {"vars": d, "p": p, "gens": [[e_1, ..., e_d], ...]}; "vars" may also be
// a list of names.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "artinres/monomial.hpp"

namespace artinres {

struct IdealSyntax {
  /// Variable names fixed up front; an empty list lets the input decide.
  std::vector<std::string> vars;
  /// Characteristic used when the input does not declare one.
  std::uint32_t char_p = kDefaultPrime;
  /// When true, char_p overrides a characteristic declared in the input.
  bool force_char = false;
};

MonomialIdeal parse_ideal_text(std::string_view text, const IdealSyntax& syntax = {});
MonomialIdeal parse_ideal_json(const nlohmann::json& j, const IdealSyntax& syntax = {});
/// Dispatches on content: a leading '{' means JSON.
MonomialIdeal read_ideal_file(const std::string& path, const IdealSyntax& syntax = {});

nlohmann::json ideal_to_json(const MonomialIdeal& i);

}  // namespace artinres
