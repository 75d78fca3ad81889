#include "artinres/tor.hpp"

#include <map>
#include <stdexcept>

#include "artinres/errors.hpp"

namespace artinres {
namespace {

// Multiplication by standard monomials on N, memoized per (monomial, source degree).
class MonomialActions {
 public:
  explicit MonomialActions(const GradedModule& n) : n_(n) {}

  const SparseMatrix& get(std::size_t u, std::int64_t degree) {
    auto key = std::make_pair(u, degree);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const std::int64_t target = degree + n_.algebra()->degree_of(u);
    SparseMatrix a(n_.dim(target), n_.dim(degree));
    for (std::size_t b = 0; b < n_.dim(degree); ++b) {
      a.column(b) = n_.act_monomial(u, degree, SparseVec{{static_cast<std::uint32_t>(b), 1}});
    }
    return cache_.emplace(key, std::move(a)).first->second;
  }

 private:
  const GradedModule& n_;
  std::map<std::pair<std::size_t, std::int64_t>, SparseMatrix> cache_;
};

// (F (x) N)_t = sum_h N_{t - a_h}, blocks in generator order.
class TensorLayout {
 public:
  TensorLayout(const std::vector<std::int64_t>& degs, const GradedModule& n) : degs_(degs), n_(n) {}

  std::size_t offset(std::int64_t t, std::size_t h) const {
    std::size_t off = 0;
    for (std::size_t k = 0; k < h; ++k) off += n_.dim(t - degs_[k]);
    return off;
  }
  std::size_t dim(std::int64_t t) const { return offset(t, degs_.size()); }
  std::int64_t lo() const {
    std::int64_t lo = INT64_MAX;
    for (auto a : degs_) lo = std::min(lo, a + n_.lo());
    return lo;
  }
  std::int64_t hi() const {
    std::int64_t hi = INT64_MIN;
    for (auto a : degs_) hi = std::max(hi, a + n_.hi());
    return hi;
  }

 private:
  const std::vector<std::int64_t>& degs_;
  const GradedModule& n_;
};

// Rank of (d (x) N) restricted to internal degree t.
std::size_t tensored_rank(const RMatrix& d, const GradedModule& n, MonomialActions& acts, std::int64_t t,
                          const Limits& limits) {
  TensorLayout src(d.col_degrees, n), dst(d.row_degrees, n);
  const Modulus& mod = n.modulus();
  std::vector<SparseVec> columns;
  columns.reserve(src.dim(t));
  for (std::size_t h = 0; h < d.cols(); ++h) {
    const std::int64_t src_degree = t - d.col_degrees[h];
    for (std::size_t b = 0; b < n.dim(src_degree); ++b) {
      std::vector<Entry> acc;
      for (const auto& [row, entry] : d.columns[h]) {
        const std::size_t off = dst.offset(t, row);
        for (const Entry& term : entry) {
          const SparseMatrix& m = acts.get(term.index, src_degree);
          for (const Entry& e : m.column(b)) {
            acc.push_back({static_cast<std::uint32_t>(off + e.index), mod.mul(term.value, e.value)});
          }
        }
      }
      columns.push_back(canonicalize(std::move(acc), mod));
    }
  }
  return rank_of_columns(columns, dst.dim(t), mod, limits.max_matrix_entries);
}

}  // namespace

TorProfile tor_profile(const ResolutionR& res, const GradedModule& n, std::size_t steps, const Limits& limits) {
  if (res.steps() < steps + 1) throw std::invalid_argument("resolution too short for the requested Tor range");
  TorProfile out;
  if (n.is_zero() || res.module.is_zero()) {
    out.lengths.assign(steps + 1, 0);
    return out;
  }
  MonomialActions acts(n);
  // ranks[i][t]: rank of d_i (x) N in internal degree t.
  std::vector<std::map<std::int64_t, std::size_t>> ranks(steps + 2);
  auto rank_at = [&](std::size_t i, std::int64_t t) -> std::size_t {
    if (i == 0 || res.generator_degrees[i].empty() || res.generator_degrees[i - 1].empty()) return 0;
    auto it = ranks[i].find(t);
    if (it != ranks[i].end()) return it->second;
    std::size_t r = tensored_rank(res.differentials[i], n, acts, t, limits);
    ranks[i].emplace(t, r);
    return r;
  };
  for (std::size_t i = 0; i <= steps; ++i) {
    const auto& degs = res.generator_degrees[i];
    std::uint64_t total = 0;
    if (!degs.empty()) {
      TensorLayout layout(degs, n);
      for (std::int64_t t = layout.lo(); t <= layout.hi(); ++t) {
        std::size_t dim = layout.dim(t);
        if (dim == 0) continue;
        total += dim - rank_at(i, t) - rank_at(i + 1, t);
      }
    }
    out.lengths.push_back(total);
  }
  return out;
}

TorProfile tor_profile(const GradedModule& m, const GradedModule& n, std::size_t steps, const Limits& limits) {
  if (m.algebra() != n.algebra() && !(m.algebra()->ideal() == n.algebra()->ideal())) {
    throw InputError("Tor arguments are modules over different rings");
  }
  return tor_profile(resolve(m, steps + 1, limits), n, steps, limits);
}

std::uint64_t tensor_length(const GradedModule& m, const GradedModule& n, const Limits& limits) {
  if (m.is_zero() || n.is_zero()) return 0;
  const std::size_t d = m.num_vars();
  const Modulus& mod = m.modulus();
  // Offset of the block M_a (x) N_{t-a} inside degree t.
  auto offset = [&](std::int64_t t, std::int64_t a) {
    std::size_t off = 0;
    for (std::int64_t x = m.lo(); x < a; ++x) off += m.dim(x) * n.dim(t - x);
    return off;
  };
  auto dim_at = [&](std::int64_t t) { return offset(t, m.hi() + 1); };
  std::uint64_t total = 0;
  for (std::int64_t t = m.lo() + n.lo(); t <= m.hi() + n.hi(); ++t) {
    const std::size_t dim = dim_at(t);
    if (dim == 0) continue;
    std::vector<SparseVec> relations;
    for (std::int64_t a = m.lo(); a <= m.hi(); ++a) {
      const std::int64_t b = t - 1 - a;
      for (std::size_t i = 0; i < m.dim(a); ++i) {
        for (std::size_t j = 0; j < n.dim(b); ++j) {
          for (std::size_t v = 0; v < d; ++v) {
            std::vector<Entry> rel;
            const std::size_t left = offset(t, a + 1), right = offset(t, a);
            const std::size_t nb1 = n.dim(b), nb = n.dim(b + 1);
            for (const Entry& e : m.action(v, a).column(i)) {
              rel.push_back({static_cast<std::uint32_t>(left + e.index * nb1 + j), e.value});
            }
            for (const Entry& e : n.action(v, b).column(j)) {
              rel.push_back({static_cast<std::uint32_t>(right + i * nb + e.index), mod.neg(e.value)});
            }
            SparseVec r = canonicalize(std::move(rel), mod);
            if (!r.empty()) relations.push_back(std::move(r));
          }
        }
      }
    }
    total += dim - rank_of_columns(relations, dim, mod, limits.max_matrix_entries);
  }
  return total;
}

GradedModule dual_module(const GradedModule& m, const Limits& limits) {
  const AlgebraPtr& alg = m.algebra();
  const ArtinianAlgebra& r = *alg;
  const std::size_t d = m.num_vars();
  const Modulus& mod = m.modulus();
  if (m.is_zero()) return m;
  const std::int64_t top = static_cast<std::int64_t>(r.top_degree());
  const std::int64_t s_lo = -m.hi(), s_hi = top - m.lo();

  // Unknowns of degree s: the matrices phi_j : M_j -> R_{j+s}, entry (row u, col c)
  // stored at offset_j + (u - begin(j+s)) * dim M_j + c.
  struct Unknowns {
    std::int64_t s;
    std::vector<std::size_t> offset;  // per j - lo, plus the total at the end
  };
  auto unknowns_for = [&](std::int64_t s) {
    Unknowns u{s, {}};
    std::size_t off = 0;
    for (std::int64_t j = m.lo(); j <= m.hi(); ++j) {
      u.offset.push_back(off);
      off += m.dim(j) * r.dim(j + s);
    }
    u.offset.push_back(off);
    return u;
  };
  auto index = [&](const Unknowns& u, std::int64_t j, std::size_t row, std::size_t col) {
    return u.offset[static_cast<std::size_t>(j - m.lo())] + row * m.dim(j) + col;
  };

  std::vector<KernelBasis> kernels;
  std::vector<Unknowns> layouts;
  for (std::int64_t s = s_lo; s <= s_hi; ++s) {
    Unknowns u = unknowns_for(s);
    const std::size_t n_unknowns = u.offset.back();
    // Constraint phi(x_v m) = x_v phi(m) for m = e_c in M_j, one row per component of R_{j+s+1}.
    std::vector<SparseVec> constraints;
    for (std::int64_t j = m.lo(); j <= m.hi(); ++j) {
      const std::size_t rdim = r.dim(j + s), rnext = r.dim(j + s + 1);
      if (rnext == 0) continue;
      const std::size_t rbegin = rdim > 0 ? r.degree_begin(static_cast<std::size_t>(j + s)) : 0;
      const std::size_t nbegin = r.degree_begin(static_cast<std::size_t>(j + s + 1));
      for (std::size_t v = 0; v < d; ++v) {
        for (std::size_t c = 0; c < m.dim(j); ++c) {
          std::vector<std::vector<Entry>> rows(rnext);
          for (const Entry& e : m.action(v, j).column(c)) {
            for (std::size_t w = 0; w < rnext; ++w) {
              rows[w].push_back({static_cast<std::uint32_t>(index(u, j + 1, w, e.index)), e.value});
            }
          }
          for (std::size_t row = 0; row < rdim; ++row) {
            std::int64_t prod = r.times_var(v, rbegin + row);
            if (prod < 0) continue;
            std::size_t w = static_cast<std::size_t>(prod) - nbegin;
            rows[w].push_back({static_cast<std::uint32_t>(index(u, j, row, c)), mod.neg(1)});
          }
          for (auto& row : rows) {
            SparseVec cst = canonicalize(std::move(row), mod);
            if (!cst.empty()) constraints.push_back(std::move(cst));
          }
        }
      }
    }
    SparseMatrix as_rows(n_unknowns, std::move(constraints));
    SparseMatrix as_columns = as_rows.transpose();
    kernels.push_back(kernel_of_columns(as_columns.columns(), as_columns.rows(), mod, limits.max_matrix_entries));
    layouts.push_back(std::move(u));
  }

  std::vector<std::size_t> dims;
  for (const KernelBasis& kb : kernels) dims.push_back(kb.dim());
  std::vector<std::vector<SparseMatrix>> actions(d);
  for (std::size_t v = 0; v < d; ++v) {
    for (std::size_t k = 0; k < kernels.size(); ++k) {
      std::size_t target = k + 1 < kernels.size() ? dims[k + 1] : 0;
      SparseMatrix a(target, dims[k]);
      if (target > 0) {
        const Unknowns& u = layouts[k];
        const Unknowns& un = layouts[k + 1];
        for (std::size_t q = 0; q < dims[k]; ++q) {
          // (x_v phi)_j = x_v * phi_j.
          std::vector<Entry> moved;
          std::size_t jk = 0;
          for (const Entry& e : kernels[k].vectors[q]) {
            while (u.offset[jk + 1] <= e.index) ++jk;
            const std::int64_t j = m.lo() + static_cast<std::int64_t>(jk);
            const std::size_t local = e.index - u.offset[jk];
            const std::size_t row = local / m.dim(j), col = local % m.dim(j);
            const std::size_t rbegin = r.degree_begin(static_cast<std::size_t>(j + u.s));
            std::int64_t prod = r.times_var(v, rbegin + row);
            if (prod < 0) continue;
            const std::size_t w = static_cast<std::size_t>(prod) - r.degree_begin(static_cast<std::size_t>(j + u.s + 1));
            moved.push_back({static_cast<std::uint32_t>(index(un, j, w, col)), e.value});
          }
          a.column(q) = kernels[k + 1].coordinates(canonicalize(std::move(moved), mod));
        }
      }
      actions[v].push_back(std::move(a));
    }
  }
  return GradedModule(alg, s_lo, std::move(dims), std::move(actions));
}

}  // namespace artinres
