#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "artinres/errors.hpp"
#include "artinres/fuzz.hpp"
#include "artinres/koszul.hpp"
#include "internal.hpp"

namespace artinres {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

std::string to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::asserted: return "asserted";
    case ClaimKind::recorded: return "recorded";
    case ClaimKind::conjecture: return "conjecture";
  }
  return "?";
}

nlohmann::ordered_json ClaimResult::to_json() const {
  nlohmann::ordered_json j;
  j["claim_id"] = claim_id;
  j["inputs"] = inputs;
  j["computed"] = computed;
  j["verdict"] = to_string(verdict);
  if (!reason.empty()) j["reason"] = reason;
  j["citation"] = citation;
  j["kind"] = to_string(kind);
  return j;
}

ClaimBuilder::ClaimBuilder(std::string id, std::string citation, std::string inputs, ClaimKind kind) {
  r_.claim_id = std::move(id);
  r_.citation = std::move(citation);
  r_.inputs = std::move(inputs);
  r_.kind = kind;
  r_.computed["checks"] = nlohmann::ordered_json::array();
}

ClaimBuilder& ClaimBuilder::value(const std::string& key, nlohmann::ordered_json v) {
  r_.computed[key] = std::move(v);
  return *this;
}

bool ClaimBuilder::record(const std::string& what, nlohmann::ordered_json lhs, const std::string& op,
                          nlohmann::ordered_json rhs, bool holds) {
  nlohmann::ordered_json c;
  c["check"] = what;
  c["lhs"] = lhs;
  c["op"] = op;
  c["rhs"] = rhs;
  c["holds"] = holds;
  r_.computed["checks"].push_back(std::move(c));
  if (!holds) failures_.push_back(what + ": " + lhs.dump() + " " + op + " " + rhs.dump() + " is false");
  return holds;
}

bool ClaimBuilder::ge(const std::string& what, std::int64_t lhs, std::int64_t rhs) {
  return record(what, lhs, ">=", rhs, lhs >= rhs);
}

bool ClaimBuilder::gt(const std::string& what, std::int64_t lhs, std::int64_t rhs) {
  return record(what, lhs, ">", rhs, lhs > rhs);
}

bool ClaimBuilder::eq(const std::string& what, std::int64_t lhs, std::int64_t rhs) {
  return record(what, lhs, "==", rhs, lhs == rhs);
}

bool ClaimBuilder::eq(const std::string& what, const nlohmann::ordered_json& lhs, const nlohmann::ordered_json& rhs) {
  return record(what, lhs, "==", rhs, lhs == rhs);
}

bool ClaimBuilder::truth(const std::string& what, bool holds) { return record(what, holds, "==", true, holds); }

void ClaimBuilder::skip(std::string reason) {
  if (!skip_reason_) skip_reason_ = std::move(reason);
}

void ClaimBuilder::note(const std::string& text) { notes_.push_back(text); }

ClaimResult ClaimBuilder::finish() {
  ClaimResult out = r_;
  if (!notes_.empty()) out.computed["notes"] = notes_;
  if (skip_reason_) {
    out.verdict = Verdict::skipped;
    out.reason = *skip_reason_;
  } else if (!failures_.empty()) {
    out.verdict = Verdict::fail;
    std::string joined;
    for (const auto& f : failures_) joined += (joined.empty() ? "" : "; ") + f;
    out.reason = joined;
  } else {
    out.verdict = Verdict::pass;
  }
  return out;
}

RingParams parse_ring_params(const std::string& text) {
  RingParams rp;
  bool have_d = false, have_n = false;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw InputError("expected d=<int>,n=<int>, got '" + text + "'");
    std::string key = part.substr(0, eq), val = part.substr(eq + 1);
    std::size_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoul(val, &used);
      if (used != val.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("bad number in ring selector: '" + val + "'");
    }
    if (key == "d") {
      rp.d = v;
      have_d = true;
    } else if (key == "n") {
      rp.n = v;
      have_n = true;
    } else {
      throw InputError("unknown ring selector key '" + key + "'");
    }
  }
  if (!have_d || !have_n) throw InputError("ring selector needs both d and n");
  if (rp.d < 1 || rp.n < 1) throw InputError("ring selector needs d, n >= 1");
  return rp;
}

void ClaimRegistry::add(ClaimSpec spec) {
  if (spec.citation.empty()) throw std::logic_error("claim " + spec.id + " has no citation");
  if (find(spec.id) != nullptr) throw std::logic_error("duplicate claim id " + spec.id);
  claims_.push_back(std::move(spec));
}

const ClaimSpec* ClaimRegistry::find(const std::string& id) const {
  for (const auto& c : claims_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::size_t VerifyReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [&](const ClaimResult& r) { return r.verdict == v; }));
}

std::size_t VerifyReport::blocking_failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const ClaimResult& r) { return r.blocking_failure(); }));
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) arr.push_back(r.to_json());
  return arr;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << to_string(r.verdict) << "\t" << r.claim_id << "\t" << to_string(r.kind) << "\t" << r.inputs;
    if (!r.reason.empty()) os << "\t" << r.reason;
    os << "\n";
  }
  os << "# pass " << count(Verdict::pass) << ", fail " << count(Verdict::fail) << " (" << blocking_failures()
     << " blocking), skipped " << count(Verdict::skipped) << "\n";
  return os.str();
}

VerifyReport verify_all(const VerifyConfig& config) {
  const ClaimRegistry& reg = default_registry();
  std::vector<const ClaimSpec*> selected;
  if (config.claims.empty()) {
    for (const auto& c : reg.claims()) selected.push_back(&c);
  } else {
    for (const auto& id : config.claims) {
      const ClaimSpec* c = reg.find(id);
      if (c == nullptr) throw InputError("unknown claim id '" + id + "'");
      selected.push_back(c);
    }
  }
  VerifyReport report;
  for (const ClaimSpec* c : selected) {
    auto results = c->run(config.run);
    for (auto& r : results) report.results.push_back(std::move(r));
  }
  if (config.run.fuzz > 0) {
    auto extra = fuzz_invariants(config.run.seed, config.run.fuzz, config.run.p, config.run.limits);
    for (auto& r : extra) report.results.push_back(std::move(r));
  }
  return report;
}

namespace detail {

ClaimResult guarded(const std::string& id, const std::string& citation, const std::string& inputs,
                    const std::function<ClaimResult()>& body, ClaimKind kind) {
  try {
    return body();
  } catch (const ResourceError& e) {
    ClaimBuilder b(id, citation, inputs, kind);
    b.skip(std::string("resource cap: ") + e.what());
    return b.finish();
  } catch (const HypothesisError& e) {
    ClaimBuilder b(id, citation, inputs, kind);
    b.skip(std::string("hypothesis not met: ") + e.what());
    return b.finish();
  }
}

nlohmann::ordered_json json_list(const std::vector<std::uint64_t>& v) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (auto x : v) j.push_back(x);
  return j;
}

std::string ring_label(const MonomialIdeal& ideal) {
  return "S=k[x1..x" + std::to_string(ideal.ring().num_vars) + "], p=" + std::to_string(ideal.ring().char_p) +
         ", I=" + ideal.to_string();
}

}  // namespace detail

// --- fuzz family --------------------------------------------------------------------

namespace {

ClaimResult invariant_battery(const MonomialIdeal& ideal, const Limits& limits) {
  const std::string id = "fuzz.invariants";
  const std::string cite = "Observation A; Lemma esyz; Cor. t2; Prop. d-1 (transpose) on random rings";
  return detail::guarded(id, cite, detail::ring_label(ideal), [&] {
    ClaimBuilder b(id, cite, detail::ring_label(ideal));
    std::vector<ClaimResult> parts = {check_observation_a(ideal, 4, limits), check_esyz(ideal, 4, limits),
                                      check_type2(ideal, limits), check_transpose(ideal, limits)};
    for (const auto& part : parts) {
      b.value(part.claim_id, part.to_json());
      b.truth(part.claim_id + " not failed", part.verdict != Verdict::fail);
    }
    // Euler characteristic of the S-resolution of an artinian S/I vanishes.
    const BettiTable t = graded_betti(ideal);
    std::int64_t euler = 0;
    for (std::size_t i = 0; i <= t.pd(); ++i) euler += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(t.total(i));
    b.eq("sum (-1)^i beta_i(S/I)", euler, 0);
    std::string route;
    const std::uint64_t via_socle = ring_type(ideal, &route);
    b.eq("socle type == last Betti number over S", static_cast<std::int64_t>(via_socle),
         static_cast<std::int64_t>(cm_type_via_S(ideal, t)));
    return b.finish();
  });
}

bool still_interesting(const MonomialIdeal& ideal, const Limits& limits) {
  if (!is_artinian(ideal)) return false;
  try {
    if (ring_type(ideal) < 2) return false;
    return invariant_battery(ideal, limits).verdict == Verdict::fail;
  } catch (const std::exception&) {
    return false;
  }
}

// Greedy shrinking: drop mixed generators, then lower pure-power exponents, as long as
// the battery keeps failing.
MonomialIdeal minimize_counterexample(MonomialIdeal ideal, const Limits& limits) {
  bool progress = true;
  while (progress) {
    progress = false;
    const auto& gens = ideal.generators();
    const std::size_t d = ideal.ring().num_vars;
    for (std::size_t g = 0; g < gens.size() && !progress; ++g) {
      std::vector<Monomial> cand;
      if (gens[g].is_pure_power()) {
        if (gens[g].degree() <= 1) continue;
        for (std::size_t h = 0; h < gens.size(); ++h) {
          cand.push_back(h == g ? Monomial::variable(d, gens[g].first_variable(), gens[g].degree() - 1) : gens[h]);
        }
      } else {
        for (std::size_t h = 0; h < gens.size(); ++h) {
          if (h != g) cand.push_back(gens[h]);
        }
      }
      MonomialIdeal smaller(ideal.ring(), cand);
      if (still_interesting(smaller, limits)) {
        ideal = smaller;
        progress = true;
      }
    }
  }
  return ideal;
}

}  // namespace

std::vector<ClaimResult> fuzz_invariants(std::uint64_t seed, std::size_t count, std::uint32_t p,
                                         const Limits& limits) {
  std::vector<ClaimResult> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t d = 2 + i % 2;
    const fuzz::IdealShape shape = d == 2 ? fuzz::IdealShape{4, 3} : fuzz::IdealShape{2, 2};
    const std::uint64_t s = fuzz::derive_seed(seed, i);
    const MonomialIdeal ideal = fuzz::random_non_gorenstein_ideal(RingSpec(d, p), s, shape);
    ClaimResult r = invariant_battery(ideal, limits);
    r.inputs += ", seed=" + std::to_string(seed) + ", draw=" + std::to_string(i);
    if (r.verdict == Verdict::fail) {
      const MonomialIdeal small = minimize_counterexample(ideal, limits);
      nlohmann::ordered_json gens = nlohmann::ordered_json::array();
      for (const auto& g : small.generators()) gens.push_back(g.to_string(small.ring()));
      r.computed["counterexample"] = gens;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace artinres
