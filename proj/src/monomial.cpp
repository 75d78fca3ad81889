#include "artinres/monomial.hpp"

#include <algorithm>
#include <bit>

#include "artinres/errors.hpp"

namespace artinres {

RingSpec::RingSpec(std::size_t d, std::uint32_t p, std::vector<std::string> var_names)
    : num_vars(d), char_p(p), names(std::move(var_names)) {
  if (d == 0) throw InputError("a ring needs at least one variable");
  if (!names.empty() && names.size() != d) throw InputError("variable name count does not match num_vars");
  (void)Modulus(p);
}

std::string RingSpec::var_name(std::size_t i) const {
  if (i < names.size()) return names[i];
  return "x" + std::to_string(i + 1);
}

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
  for (std::uint32_t e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t d, std::size_t i, std::uint32_t power) {
  std::vector<std::uint32_t> e(d, 0);
  e.at(i) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::squarefree_part() const {
  std::vector<std::uint32_t> e(exps_);
  for (auto& x : e) x = x > 0 ? 1 : 0;
  return Monomial(std::move(e));
}

bool Monomial::is_pure_power() const {
  return degree_ > 0 && std::count_if(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e > 0; }) == 1;
}

std::size_t Monomial::first_variable() const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) return i;
  }
  throw InputError("the unit monomial has no variable");
}

std::string Monomial::to_string(const RingSpec& ring) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var_name(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  // Reversed: the larger exponent vector sorts first.
  return b.exps_ <=> a.exps_;
}

MonomialIdeal::MonomialIdeal(RingSpec ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  for (const Monomial& m : gens) {
    if (m.num_vars() != ring_.num_vars) {
      throw InputError("monomial " + m.to_string(ring_) + " has " + std::to_string(m.num_vars()) +
                       " exponents, ring has " + std::to_string(ring_.num_vars) + " variables");
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // In canonical order a divisor never comes after its multiple.
  for (const Monomial& m : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) gens_.push_back(m);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& m) { return contains(m); });
}

std::uint32_t MonomialIdeal::min_degree() const { return gens_.empty() ? 0 : gens_.front().degree(); }

std::uint32_t MonomialIdeal::max_degree() const { return gens_.empty() ? 0 : gens_.back().degree(); }

Monomial MonomialIdeal::lcm() const {
  Monomial l = Monomial::one(ring_.num_vars);
  for (const Monomial& g : gens_) l = l.lcm(g);
  return l;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens_[i].to_string(ring_);
  }
  return out + ")";
}

MonomialIdeal minimalize(const std::vector<Monomial>& gens, const RingSpec& ring) { return MonomialIdeal(ring, gens); }

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring() == b.ring())) throw InputError("ideals live in different rings");
}

}  // namespace

MonomialIdeal ideal_product(const MonomialIdeal& j, const MonomialIdeal& k) {
  require_same_ring(j, k);
  std::vector<Monomial> prods;
  prods.reserve(j.num_generators() * k.num_generators());
  for (const Monomial& a : j.generators()) {
    for (const Monomial& b : k.generators()) prods.push_back(a * b);
  }
  return MonomialIdeal(j.ring(), std::move(prods));
}

MonomialIdeal ideal_power(const MonomialIdeal& j, std::size_t n) {
  MonomialIdeal result(j.ring(), {Monomial::one(j.ring().num_vars)});
  for (std::size_t i = 0; i < n; ++i) result = ideal_product(result, j);
  return result;
}

MonomialIdeal ideal_sum(const MonomialIdeal& j, const MonomialIdeal& k) {
  require_same_ring(j, k);
  std::vector<Monomial> all(j.generators());
  all.insert(all.end(), k.generators().begin(), k.generators().end());
  return MonomialIdeal(j.ring(), std::move(all));
}

MonomialIdeal maximal_ideal(const RingSpec& ring) {
  std::vector<Monomial> vars;
  for (std::size_t i = 0; i < ring.num_vars; ++i) vars.push_back(Monomial::variable(ring.num_vars, i));
  return MonomialIdeal(ring, std::move(vars));
}

MonomialIdeal pure_power_ideal(const RingSpec& ring, const std::vector<std::uint32_t>& a) {
  if (a.size() != ring.num_vars) throw InputError("need one exponent per variable");
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) throw InputError("pure power exponents must be positive");
    gens.push_back(Monomial::variable(ring.num_vars, i, a[i]));
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::size_t height(const MonomialIdeal& i) {
  if (i.is_zero()) throw HypothesisError("height of the zero ideal is not defined here");
  if (i.is_unit()) throw HypothesisError("height of the unit ideal is not defined here");
  const std::size_t d = i.ring().num_vars;
  if (d > 16) throw ResourceError("height by cover enumeration supports at most 16 variables");
  std::vector<std::uint32_t> supports;
  for (const Monomial& g : i.generators()) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < d; ++v) {
      if (g[v] > 0) s |= 1u << v;
    }
    supports.push_back(s);
  }
  std::size_t best = d;
  for (std::uint32_t cover = 0; cover < (1u << d); ++cover) {
    auto size = static_cast<std::size_t>(std::popcount(cover));
    if (size >= best) continue;
    if (std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & cover) != 0; })) {
      best = size;
    }
  }
  return best;
}

MonomialIdeal radical(const MonomialIdeal& i) {
  std::vector<Monomial> parts;
  for (const Monomial& g : i.generators()) parts.push_back(g.squarefree_part());
  return MonomialIdeal(i.ring(), std::move(parts));
}

bool is_radical(const MonomialIdeal& i) { return radical(i) == i; }

bool is_artinian(const MonomialIdeal& i) {
  if (i.is_unit()) return false;
  std::vector<bool> seen(i.ring().num_vars, false);
  for (const Monomial& g : i.generators()) {
    if (g.is_pure_power()) seen[g.first_variable()] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    r = r * (a - b + i) / i;
    if (r > UINT64_MAX) throw ResourceError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace artinres
