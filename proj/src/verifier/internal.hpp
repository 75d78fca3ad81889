#pragma once

#include <functional>
#include <string>
#include <vector>

#include "artinres/claims.hpp"
#include "artinres/verifier.hpp"

namespace artinres::detail {

/// Runs one check; resource or hypothesis errors become a skipped result under the given
/// id so one oversized case does not hide the rest of a suite.
ClaimResult guarded(const std::string& id, const std::string& citation, const std::string& inputs,
                    const std::function<ClaimResult()>& body, ClaimKind kind = ClaimKind::asserted);

/// Betti numbers as a JSON list.
nlohmann::ordered_json json_list(const std::vector<std::uint64_t>& v);

std::string ring_label(const MonomialIdeal& ideal);

/// Ideal from generator text in variables x, y, z, w (x1..xd beyond four variables).
MonomialIdeal example_ideal(std::size_t d, std::uint32_t p, const std::string& gens);

void register_canonical_claims(ClaimRegistry& reg);
void register_gap_claims(ClaimRegistry& reg);
void register_type_claims(ClaimRegistry& reg);

}  // namespace artinres::detail
