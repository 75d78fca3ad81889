#include "artinres/module.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "artinres/errors.hpp"
#include "artinres/ideal_io.hpp"

namespace artinres {

GradedModule::GradedModule(AlgebraPtr algebra, std::int64_t lo, std::vector<std::size_t> dims,
                           std::vector<std::vector<SparseMatrix>> actions)
    : alg_(std::move(algebra)) {
  const std::size_t d = alg_->num_vars();
  if (actions.size() != d) throw InputError("need one action list per variable");
  for (std::size_t v = 0; v < d; ++v) {
    if (actions[v].size() != dims.size()) throw InputError("need one action matrix per degree");
    for (std::size_t k = 0; k < dims.size(); ++k) {
      std::size_t target = k + 1 < dims.size() ? dims[k + 1] : 0;
      const SparseMatrix& a = actions[v][k];
      if (a.cols() != dims[k] || a.rows() != target) {
        throw InputError("action matrix for x" + std::to_string(v + 1) + " in degree " +
                         std::to_string(lo + static_cast<std::int64_t>(k)) + " has the wrong shape");
      }
    }
  }
  auto first = std::find_if(dims.begin(), dims.end(), [](std::size_t x) { return x > 0; });
  if (first == dims.end()) {
    actions_.assign(d, {});
    return;
  }
  auto last = std::find_if(dims.rbegin(), dims.rend(), [](std::size_t x) { return x > 0; });
  std::size_t k0 = static_cast<std::size_t>(first - dims.begin());
  std::size_t k1 = dims.size() - 1 - static_cast<std::size_t>(last - dims.rbegin());
  lo_ = lo + static_cast<std::int64_t>(k0);
  dims_.assign(dims.begin() + static_cast<std::ptrdiff_t>(k0), dims.begin() + static_cast<std::ptrdiff_t>(k1 + 1));
  actions_.resize(d);
  for (std::size_t v = 0; v < d; ++v) {
    actions_[v].assign(std::make_move_iterator(actions[v].begin() + static_cast<std::ptrdiff_t>(k0)),
                       std::make_move_iterator(actions[v].begin() + static_cast<std::ptrdiff_t>(k1 + 1)));
  }
#ifndef NDEBUG
  validate();
#endif
}

std::size_t GradedModule::dim(std::int64_t degree) const {
  if (degree < lo_ || degree > hi()) return 0;
  return dims_[static_cast<std::size_t>(degree - lo_)];
}

std::size_t GradedModule::length() const noexcept {
  std::size_t total = 0;
  for (std::size_t x : dims_) total += x;
  return total;
}

const SparseMatrix& GradedModule::action(std::size_t v, std::int64_t degree) const {
  if (degree < lo_ || degree > hi()) return empty_;
  return actions_[v][static_cast<std::size_t>(degree - lo_)];
}

SparseVec GradedModule::act(std::size_t v, std::int64_t degree, const SparseVec& x) const {
  if (x.empty()) return {};
  return action(v, degree).apply(x, modulus());
}

SparseVec GradedModule::act_monomial(std::size_t b, std::int64_t degree, const SparseVec& x) const {
  if (b == 0) return x;
  auto [v, rest] = alg_->split_first(b);
  SparseVec y = act_monomial(rest, degree, x);
  return act(v, degree + alg_->degree_of(rest), y);
}

void GradedModule::validate() const {
  const std::size_t d = num_vars();
  const Modulus& mod = modulus();
  for (std::int64_t j = lo_; j < hi(); ++j) {
    for (std::size_t v = 0; v < d; ++v) {
      for (std::size_t w = v + 1; w < d; ++w) {
        SparseMatrix vw = action(w, j + 1).compose(action(v, j), mod);
        SparseMatrix wv = action(v, j + 1).compose(action(w, j), mod);
        if (!(vw == wv)) {
          throw std::logic_error("actions of x" + std::to_string(v + 1) + " and x" + std::to_string(w + 1) +
                                 " do not commute in degree " + std::to_string(j));
        }
      }
    }
  }
  for (const Monomial& g : alg_->ideal().generators()) {
    for (std::int64_t j = lo_; j + static_cast<std::int64_t>(g.degree()) <= hi(); ++j) {
      for (std::size_t b = 0; b < dim(j); ++b) {
        SparseVec x{{static_cast<std::uint32_t>(b), 1}};
        std::int64_t t = j;
        for (std::size_t v = 0; v < d && !x.empty(); ++v) {
          for (std::uint32_t e = 0; e < g[v] && !x.empty(); ++e) x = act(v, t++, x);
        }
        if (!x.empty()) {
          throw std::logic_error("generator " + g.to_string(alg_->ring()) + " does not annihilate the module");
        }
      }
    }
  }
}

bool operator==(const GradedModule& a, const GradedModule& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.alg_->ideal() == b.alg_->ideal() && a.lo_ == b.lo_ && a.dims_ == b.dims_ && a.actions_ == b.actions_;
}

namespace {

// Module on a subset of the standard monomials closed under "dividing", with
// multiplication inherited from R and products outside the subset set to zero.
GradedModule monomial_quotient(const AlgebraPtr& alg, const std::vector<bool>& keep) {
  const std::size_t d = alg->num_vars();
  const std::size_t top = alg->top_degree();
  std::vector<std::int64_t> local(alg->length(), -1);
  std::vector<std::size_t> dims(top + 1, 0);
  for (std::size_t b = 0; b < alg->length(); ++b) {
    if (keep[b]) local[b] = static_cast<std::int64_t>(dims[alg->degree_of(b)]++);
  }
  std::vector<std::vector<SparseMatrix>> actions(d);
  for (std::size_t v = 0; v < d; ++v) {
    for (std::size_t j = 0; j <= top; ++j) {
      SparseMatrix a(j < top ? dims[j + 1] : 0, dims[j]);
      for (std::size_t b = alg->degree_begin(j); b < alg->degree_begin(j) + alg->dim(static_cast<std::int64_t>(j)); ++b) {
        if (local[b] < 0) continue;
        std::int64_t c = alg->times_var(v, b);
        if (c >= 0 && local[c] >= 0) {
          a.column(static_cast<std::size_t>(local[b])).push_back({static_cast<std::uint32_t>(local[c]), 1});
        }
      }
      actions[v].push_back(std::move(a));
    }
  }
  return GradedModule(alg, 0, std::move(dims), std::move(actions));
}

}  // namespace

GradedModule ring_module(const AlgebraPtr& alg) { return monomial_quotient(alg, std::vector<bool>(alg->length(), true)); }

GradedModule cyclic_module(const AlgebraPtr& alg, const MonomialIdeal& j) {
  if (!(j.ring() == alg->ring())) throw InputError("ideal and algebra live in different rings");
  std::vector<bool> keep(alg->length());
  for (std::size_t b = 0; b < alg->length(); ++b) keep[b] = !j.contains(alg->monomial(b));
  return monomial_quotient(alg, keep);
}

GradedModule residue_field(const AlgebraPtr& alg) { return cyclic_module(alg, maximal_ideal(alg->ring())); }

FreeLayout::FreeLayout(AlgebraPtr alg, std::vector<std::int64_t> generator_degrees)
    : alg_(std::move(alg)), degs_(std::move(generator_degrees)) {
  if (degs_.empty()) return;
  lo_ = *std::min_element(degs_.begin(), degs_.end());
  hi_ = *std::max_element(degs_.begin(), degs_.end()) + static_cast<std::int64_t>(alg_->top_degree());
  const std::size_t span = static_cast<std::size_t>(hi_ - lo_ + 1);
  elems_.assign(span, {});
  start_.assign(span, std::vector<std::size_t>(degs_.size(), 0));
  for (std::size_t k = 0; k < span; ++k) {
    std::int64_t t = lo_ + static_cast<std::int64_t>(k);
    for (std::size_t h = 0; h < degs_.size(); ++h) {
      start_[k][h] = elems_[k].size();
      std::int64_t du = t - degs_[h];
      if (du < 0 || du > static_cast<std::int64_t>(alg_->top_degree())) continue;
      std::size_t begin = alg_->degree_begin(static_cast<std::size_t>(du));
      for (std::size_t u = begin; u < begin + alg_->dim(du); ++u) elems_[k].emplace_back(h, u);
    }
  }
}

std::size_t FreeLayout::dim(std::int64_t t) const {
  if (t < lo_ || t > hi_) return 0;
  return elems_[static_cast<std::size_t>(t - lo_)].size();
}

std::size_t FreeLayout::position(std::size_t h, std::size_t u) const {
  std::int64_t t = degs_[h] + alg_->degree_of(u);
  return start_[static_cast<std::size_t>(t - lo_)][h] + (u - alg_->degree_begin(alg_->degree_of(u)));
}

std::pair<std::size_t, std::size_t> FreeLayout::element(std::int64_t t, std::size_t pos) const {
  return elems_[static_cast<std::size_t>(t - lo_)][pos];
}

GradedModule FreeLayout::module() const {
  const std::size_t d = alg_->num_vars();
  if (degs_.empty()) return GradedModule(alg_, 0, {}, std::vector<std::vector<SparseMatrix>>(d));
  std::vector<std::size_t> dims;
  for (std::int64_t t = lo_; t <= hi_; ++t) dims.push_back(dim(t));
  std::vector<std::vector<SparseMatrix>> actions(d);
  for (std::size_t v = 0; v < d; ++v) {
    for (std::int64_t t = lo_; t <= hi_; ++t) {
      SparseMatrix a(dim(t + 1), dim(t));
      for (std::size_t pos = 0; pos < dim(t); ++pos) {
        auto [h, u] = element(t, pos);
        std::int64_t w = alg_->times_var(v, u);
        if (w >= 0) a.column(pos).push_back({static_cast<std::uint32_t>(position(h, static_cast<std::size_t>(w))), 1});
      }
      actions[v].push_back(std::move(a));
    }
  }
  return GradedModule(alg_, lo_, std::move(dims), std::move(actions));
}

GradedModule free_module(const AlgebraPtr& alg, const std::vector<std::int64_t>& generator_degrees) {
  return FreeLayout(alg, generator_degrees).module();
}

namespace {

// A subspace of k^dim in reduced row echelon form, used to project onto the quotient
// spanned by the non-pivot coordinates.
class Subspace {
 public:
  Subspace(const std::vector<SparseVec>& span, std::size_t dim, const Modulus& mod, std::size_t max_entries)
      : dim_(dim), quotient_pos_(dim, -1) {
    std::vector<SparseVec> nonzero;
    for (const SparseVec& v : span) {
      if (!v.empty()) nonzero.push_back(v);
    }
    std::vector<bool> is_pivot(dim, false);
    if (!nonzero.empty()) {
      DenseMatrix m(nonzero.size(), dim, max_entries);
      for (std::size_t r = 0; r < nonzero.size(); ++r) m.set_row(r, nonzero[r]);
      pivots_ = rref_in_place(m, mod);
      for (std::size_t r = 0; r < pivots_.size(); ++r) {
        is_pivot[pivots_[r]] = true;
        SparseVec row;
        for (std::size_t c = 0; c < dim; ++c) {
          if (m.at(r, c) != 0) row.push_back({static_cast<std::uint32_t>(c), m.at(r, c)});
        }
        rows_.push_back(std::move(row));
      }
    }
    for (std::size_t c = 0; c < dim; ++c) {
      if (!is_pivot[c]) {
        quotient_pos_[c] = static_cast<std::int64_t>(free_.size());
        free_.push_back(c);
      }
    }
  }

  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& free_coordinates() const { return free_; }

  /// Coordinates of w + subspace in the quotient basis {e_c : c free}.
  SparseVec project(const SparseVec& w, const Modulus& mod) const {
    if (w.empty()) return {};
    std::vector<std::uint32_t> dense(dim_, 0);
    for (const Entry& e : w) dense[e.index] = e.value;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      std::uint32_t c = dense[pivots_[r]];
      if (c == 0) continue;
      std::uint32_t neg = mod.neg(c);
      for (const Entry& e : rows_[r]) dense[e.index] = mod.add(dense[e.index], mod.mul(neg, e.value));
    }
    SparseVec out;
    for (std::size_t c : free_) {
      if (dense[c] != 0) out.push_back({static_cast<std::uint32_t>(quotient_pos_[c]), dense[c]});
    }
    return out;
  }

 private:
  std::size_t dim_;
  std::vector<std::size_t> pivots_;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> free_;
  std::vector<std::int64_t> quotient_pos_;
};

}  // namespace

GradedModule quotient(const GradedModule& m, const std::vector<ModuleElement>& relations, std::size_t max_entries) {
  const std::size_t d = m.num_vars();
  const Modulus& mod = m.modulus();
  if (m.is_zero()) return m;
  std::vector<Subspace> subs;
  std::vector<SparseVec> carried;
  for (std::int64_t j = m.lo(); j <= m.hi(); ++j) {
    std::vector<SparseVec> span = carried;
    for (const ModuleElement& r : relations) {
      if (r.degree == j) span.push_back(r.vec);
    }
    subs.emplace_back(span, m.dim(j), mod, max_entries);
    carried.clear();
    for (const SparseVec& row : subs.back().rows()) {
      for (std::size_t v = 0; v < d; ++v) carried.push_back(m.act(v, j, row));
    }
  }
  std::vector<std::size_t> dims;
  for (const Subspace& s : subs) dims.push_back(s.free_coordinates().size());
  std::vector<std::vector<SparseMatrix>> actions(d);
  for (std::size_t v = 0; v < d; ++v) {
    for (std::size_t k = 0; k < subs.size(); ++k) {
      std::int64_t j = m.lo() + static_cast<std::int64_t>(k);
      std::size_t target = k + 1 < subs.size() ? dims[k + 1] : 0;
      SparseMatrix a(target, dims[k]);
      if (target > 0) {
        for (std::size_t q = 0; q < dims[k]; ++q) {
          SparseVec e{{static_cast<std::uint32_t>(subs[k].free_coordinates()[q]), 1}};
          a.column(q) = subs[k + 1].project(m.act(v, j, e), mod);
        }
      }
      actions[v].push_back(std::move(a));
    }
  }
  return GradedModule(m.algebra(), m.lo(), std::move(dims), std::move(actions));
}

SocleData socle(const GradedModule& m, std::size_t max_entries) {
  SocleData out;
  out.lo = m.lo();
  const std::size_t d = m.num_vars();
  for (std::int64_t j = m.lo(); j <= m.hi(); ++j) {
    const std::size_t next = m.dim(j + 1);
    std::vector<SparseVec> stacked(m.dim(j));
    for (std::size_t b = 0; b < m.dim(j); ++b) {
      for (std::size_t v = 0; v < d; ++v) {
        for (const Entry& e : m.action(v, j).column(b)) {
          stacked[b].push_back({static_cast<std::uint32_t>(v * next + e.index), e.value});
        }
      }
    }
    KernelBasis kb = kernel_of_columns(stacked, d * next, m.modulus(), max_entries);
    out.dims.push_back(kb.dim());
    out.type += kb.dim();
    out.basis.push_back(std::move(kb.vectors));
  }
  return out;
}

std::vector<SparseVec> maximal_ideal_image(const GradedModule& m, std::int64_t j) {
  std::vector<SparseVec> out;
  for (std::size_t v = 0; v < m.num_vars(); ++v) {
    for (const SparseVec& c : m.action(v, j - 1).columns()) {
      if (!c.empty()) out.push_back(c);
    }
  }
  return out;
}

std::vector<std::int64_t> generator_degrees(const GradedModule& m, std::size_t max_entries) {
  std::vector<std::int64_t> out;
  for (std::int64_t j = m.lo(); j <= m.hi(); ++j) {
    std::size_t count = complement_coordinates(maximal_ideal_image(m, j), m.dim(j), m.modulus(), max_entries).size();
    out.insert(out.end(), count, j);
  }
  return out;
}

std::size_t minimal_generator_count(const GradedModule& m, std::size_t max_entries) {
  return generator_degrees(m, max_entries).size();
}

GradedModule matlis_dual(const GradedModule& m) {
  const std::size_t d = m.num_vars();
  if (m.is_zero()) return m;
  const std::int64_t s = m.hi();
  const std::size_t span = m.dims().size();
  std::vector<std::size_t> dims(span);
  for (std::size_t j = 0; j < span; ++j) dims[j] = m.dim(s - static_cast<std::int64_t>(j));
  std::vector<std::vector<SparseMatrix>> actions(d);
  for (std::size_t v = 0; v < d; ++v) {
    for (std::size_t j = 0; j < span; ++j) {
      if (j + 1 < span) {
        actions[v].push_back(m.action(v, s - static_cast<std::int64_t>(j) - 1).transpose());
      } else {
        actions[v].emplace_back(0, dims[j]);
      }
    }
  }
  return GradedModule(m.algebra(), 0, std::move(dims), std::move(actions));
}

GradedModule canonical_module(const AlgebraPtr& alg) { return matlis_dual(ring_module(alg)); }

GradedModule random_finite_length_module(const AlgebraPtr& alg, std::uint64_t seed, const RandomModuleShape& shape) {
  std::mt19937_64 rng(seed);
  // Modulo reduction rather than std::uniform_int_distribution keeps the stream
  // identical across standard libraries.
  auto below = [&](std::uint64_t n) { return n == 0 ? 0 : rng() % n; };
  const Modulus& mod = alg->modulus();
  std::size_t b0 = 1 + below(std::max<std::size_t>(shape.max_generators, 1));
  std::vector<std::int64_t> degs;
  for (std::size_t h = 0; h < b0; ++h) {
    degs.push_back(static_cast<std::int64_t>(below(static_cast<std::uint64_t>(shape.max_generator_degree) + 1)));
  }
  std::sort(degs.begin(), degs.end());
  FreeLayout layout(alg, degs);
  // Relations live in mF, so the generators stay minimal and M is neither zero nor free
  // (unless mF = 0, when R = k and every module is free).
  std::vector<std::int64_t> rel_degrees;
  for (std::int64_t t = layout.lo() + 1; t <= layout.hi(); ++t) {
    if (layout.dim(t) > 0) rel_degrees.push_back(t);
  }
  std::vector<ModuleElement> rels;
  const std::size_t r = rel_degrees.empty() ? 0 : 1 + below(std::max<std::size_t>(shape.max_relations, 1));
  for (std::size_t k = 0; k < r; ++k) {
    const std::int64_t t = rel_degrees[below(rel_degrees.size())];
    std::vector<std::size_t> inside;
    for (std::size_t pos = 0; pos < layout.dim(t); ++pos) {
      if (degs[layout.element(t, pos).first] < t) inside.push_back(pos);
    }
    if (inside.empty()) continue;
    SparseVec vec;
    for (std::size_t pos : inside) {
      if (below(2) == 0) continue;
      vec.push_back({static_cast<std::uint32_t>(pos), static_cast<std::uint32_t>(1 + below(mod.p() - 1))});
    }
    if (vec.empty()) {
      vec.push_back({static_cast<std::uint32_t>(inside[below(inside.size())]), 1u});
    }
    rels.push_back({t, std::move(vec)});
  }
  return quotient(layout.module(), rels);
}

nlohmann::json module_to_json(const GradedModule& m) {
  nlohmann::json j;
  j["ideal"] = ideal_to_json(m.algebra()->ideal());
  j["lo"] = m.lo();
  j["dims"] = m.dims();
  nlohmann::json acts = nlohmann::json::array();
  for (std::size_t v = 0; v < m.num_vars(); ++v) {
    nlohmann::json per_degree = nlohmann::json::array();
    for (std::int64_t t = m.lo(); t <= m.hi(); ++t) {
      DenseMatrix dense = m.action(v, t).dense();
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t r = 0; r < dense.rows(); ++r) {
        auto row = dense.row(r);
        rows.push_back(std::vector<std::uint32_t>(row.begin(), row.end()));
      }
      per_degree.push_back(std::move(rows));
    }
    acts.push_back(std::move(per_degree));
  }
  j["actions"] = std::move(acts);
  return j;
}

GradedModule module_from_json(const AlgebraPtr& alg, const nlohmann::json& j) {
  try {
    MonomialIdeal ideal = parse_ideal_json(j.at("ideal"));
    if (!(ideal.generators() == alg->ideal().generators()) || ideal.ring().char_p != alg->ring().char_p) {
      throw InputError("module JSON was written over a different ring");
    }
    auto lo = j.at("lo").get<std::int64_t>();
    auto dims = j.at("dims").get<std::vector<std::size_t>>();
    const auto& acts = j.at("actions");
    if (acts.size() != alg->num_vars()) throw InputError("module JSON has the wrong number of action lists");
    std::vector<std::vector<SparseMatrix>> actions(alg->num_vars());
    for (std::size_t v = 0; v < alg->num_vars(); ++v) {
      if (acts[v].size() != dims.size()) throw InputError("module JSON has the wrong number of action matrices");
      for (std::size_t k = 0; k < dims.size(); ++k) {
        std::size_t target = k + 1 < dims.size() ? dims[k + 1] : 0;
        const auto& rows = acts[v][k];
        if (rows.size() != target) throw InputError("module JSON action has the wrong row count");
        SparseMatrix a(target, dims[k]);
        for (std::size_t r = 0; r < target; ++r) {
          auto row = rows[r].get<std::vector<std::uint32_t>>();
          if (row.size() != dims[k]) throw InputError("module JSON action has the wrong column count");
          for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] >= alg->modulus().p()) throw InputError("module JSON entry is not reduced mod p");
            if (row[c] != 0) a.column(c).push_back({static_cast<std::uint32_t>(r), row[c]});
          }
        }
        actions[v].push_back(std::move(a));
      }
    }
    GradedModule m(alg, lo, std::move(dims), std::move(actions));
    m.validate();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed module JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InputError*>(&e) != nullptr) throw;
    throw InputError(std::string("module JSON is not a valid module: ") + e.what());
  }
}

}  // namespace artinres
