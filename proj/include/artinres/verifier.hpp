#pragma once

// Claim results, the claim registry, and the batch runner behind `artinres verify`.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "artinres/linalg.hpp"
#include "artinres/modulus.hpp"

namespace artinres {

enum class Verdict { pass, fail, skipped };

/// asserted claims decide the exit status; recorded claims report raw values for a statement
/// whose literal form is known to be off; conjectures are fuzz-checked but never required.
enum class ClaimKind { asserted, recorded, conjecture };

std::string to_string(Verdict v);
std::string to_string(ClaimKind k);

struct ClaimResult {
  std::string claim_id;
  std::string inputs;
  nlohmann::ordered_json computed = nlohmann::ordered_json::object();
  Verdict verdict = Verdict::pass;
  /// Skip reason, or which comparison failed.
  std::string reason;
  std::string citation;
  ClaimKind kind = ClaimKind::asserted;

  bool blocking_failure() const noexcept { return kind == ClaimKind::asserted && verdict == Verdict::fail; }
  nlohmann::ordered_json to_json() const;
};

/// Accumulates named comparisons. Every comparison lands in computed["checks"] with both
/// sides, so a failing result always carries the violated inequality.
class ClaimBuilder {
 public:
  ClaimBuilder(std::string id, std::string citation, std::string inputs, ClaimKind kind = ClaimKind::asserted);

  ClaimBuilder& value(const std::string& key, nlohmann::ordered_json v);
  bool ge(const std::string& what, std::int64_t lhs, std::int64_t rhs);
  bool gt(const std::string& what, std::int64_t lhs, std::int64_t rhs);
  bool eq(const std::string& what, std::int64_t lhs, std::int64_t rhs);
  bool eq(const std::string& what, const nlohmann::ordered_json& lhs, const nlohmann::ordered_json& rhs);
  bool truth(const std::string& what, bool holds);
  /// Marks the result skipped; later comparisons are still recorded.
  void skip(std::string reason);
  void note(const std::string& text);
  bool failed() const noexcept { return !failures_.empty(); }

  ClaimResult finish();

 private:
  bool record(const std::string& what, nlohmann::ordered_json lhs, const std::string& op,
              nlohmann::ordered_json rhs, bool holds);

  ClaimResult r_;
  std::vector<std::string> failures_;
  std::optional<std::string> skip_reason_;
  std::vector<std::string> notes_;
};

/// R_{d,n} selector from --ring d=2,n=3.
struct RingParams {
  std::size_t d = 2;
  std::size_t n = 2;
};

/// Parses "d=2,n=3"; throws InputError.
RingParams parse_ring_params(const std::string& text);

struct RunConfig {
  std::uint32_t p = kDefaultPrime;
  std::uint64_t seed = 1;
  /// Number of random ideals appended by the fuzz family.
  std::size_t fuzz = 0;
  std::optional<RingParams> ring;
  Limits limits;
};

struct ClaimSpec {
  std::string id;
  std::string citation;
  std::string summary;
  ClaimKind kind = ClaimKind::asserted;
  std::function<std::vector<ClaimResult>(const RunConfig&)> run;
};

class ClaimRegistry {
 public:
  /// Throws std::logic_error on a duplicate id or an empty citation.
  void add(ClaimSpec spec);
  const ClaimSpec* find(const std::string& id) const;
  const std::vector<ClaimSpec>& claims() const noexcept { return claims_; }

 private:
  std::vector<ClaimSpec> claims_;
};

/// Every claim of the catalog with its built-in example suite.
const ClaimRegistry& default_registry();

/// Cited statements deliberately not computed, each with the reason.
struct OutOfScope {
  std::string citation;
  std::string reason;
};
const std::vector<OutOfScope>& out_of_scope_citations();

struct VerifyConfig {
  /// Empty means every claim.
  std::vector<std::string> claims;
  RunConfig run;
};

struct VerifyReport {
  std::vector<ClaimResult> results;

  std::size_t count(Verdict v) const;
  std::size_t blocking_failures() const;
  int exit_code() const noexcept { return blocking_failures() == 0 ? 0 : 1; }
  nlohmann::ordered_json to_json() const;
  /// One line per result.
  std::string to_text() const;
};

/// Runs the selected claims plus `run.fuzz` random ideals. Resource and hypothesis errors
/// inside a claim become skipped results. Throws InputError for an unknown claim id.
VerifyReport verify_all(const VerifyConfig& config);

/// Results over `count` seeded random non-Gorenstein artinian ideals, one per ideal.
std::vector<ClaimResult> fuzz_invariants(std::uint64_t seed, std::size_t count, std::uint32_t p,
                                         const Limits& limits = {});

}  // namespace artinres
