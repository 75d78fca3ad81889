#include "internal.hpp"

namespace artinres {

const ClaimRegistry& default_registry() {
  static const ClaimRegistry reg = [] {
    ClaimRegistry r;
    detail::register_canonical_claims(r);
    detail::register_gap_claims(r);
    detail::register_type_claims(r);
    return r;
  }();
  return reg;
}

const std::vector<OutOfScope>& out_of_scope_citations() {
  static const std::vector<OutOfScope> items = {
      {"Fact c2", "used only through the height-two type formula checked by hilbert-burch-type"},
      {"Prop. ram (reduction steps)", "the reduction to the graded case is a proof device; only its conclusion is checked"},
      {"Cor. red", "statement about reductions of ideals, not monomial data"},
      {"Symbolic-power corollaries", "symbolic powers are not computed"},
      {"Prop. her(ii)", "needs a non-monomial construction"},
      {"Observation F, G (general local rings)", "only the monomial graded instances are checked"},
      {"Proofs", "arguments are not mechanized; only their numerical conclusions are checked"},
  };
  return items;
}

}  // namespace artinres
