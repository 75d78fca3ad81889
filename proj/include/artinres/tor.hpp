#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "artinres/resolution.hpp"

namespace artinres {

struct TorProfile {
  /// lengths[i] = l(Tor_i^R(M, N)) for i = 0..n.
  std::vector<std::uint64_t> lengths;
};

/// Homology lengths of F. (x)_R N, where F. is the minimal resolution of the first
/// argument, through Tor_n.
TorProfile tor_profile(const GradedModule& m, const GradedModule& n, std::size_t steps, const Limits& limits = {});
/// Same, reusing a resolution of M that reaches at least F_{steps+1}.
TorProfile tor_profile(const ResolutionR& res, const GradedModule& n, std::size_t steps, const Limits& limits = {});

/// l(M (x)_R N) computed directly as M (x)_k N modulo the relations x m (x) n - m (x) x n.
std::uint64_t tensor_length(const GradedModule& m, const GradedModule& n, const Limits& limits = {});

/// Hom_R(M, R) as a graded module, solving the commutation constraints degree by degree.
GradedModule dual_module(const GradedModule& m, const Limits& limits = {});

}  // namespace artinres
