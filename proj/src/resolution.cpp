#include "artinres/resolution.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "artinres/errors.hpp"

namespace artinres {

RElement RMatrix::at(std::size_t row, std::size_t col) const {
  for (const auto& [r, e] : columns[col]) {
    if (r == row) return e;
  }
  return {};
}

bool RMatrix::entries_in_maximal_ideal(const ArtinianAlgebra& alg) const {
  for (const auto& col : columns) {
    for (const auto& [r, e] : col) {
      for (const Entry& t : e) {
        if (alg.degree_of(t.index) == 0) return false;
      }
    }
  }
  return true;
}

std::vector<std::uint64_t> ResolutionR::betti() const {
  std::vector<std::uint64_t> out;
  for (const auto& g : generator_degrees) out.push_back(g.size());
  return out;
}

namespace {

struct GeneratorChoice {
  std::vector<std::int64_t> degrees;
  std::vector<ModuleElement> elements;
};

// Minimal generators of N: in each degree, the coordinates outside the span of mN.
GeneratorChoice choose_generators(const GradedModule& n, const Limits& limits) {
  GeneratorChoice out;
  for (std::int64_t j = n.lo(); j <= n.hi(); ++j) {
    for (std::size_t c : complement_coordinates(maximal_ideal_image(n, j), n.dim(j), n.modulus(), limits.max_matrix_entries)) {
      out.degrees.push_back(j);
      out.elements.push_back({j, SparseVec{{static_cast<std::uint32_t>(c), 1}}});
    }
  }
  return out;
}

// The column of the differential for one generator of Syz_i, read off its vector in F_{i-1}.
std::vector<std::pair<std::size_t, RElement>> decode_column(const FreeLayout& target, std::int64_t t,
                                                             const SparseVec& v, const ArtinianAlgebra& alg) {
  std::map<std::size_t, std::vector<Entry>> by_row;
  for (const Entry& e : v) {
    auto [h, u] = target.element(t, e.index);
    if (alg.degree_of(u) == 0) {
      throw std::logic_error("resolution is not minimal: a syzygy has a unit coefficient");
    }
    by_row[h].push_back({static_cast<std::uint32_t>(u), e.value});
  }
  std::vector<std::pair<std::size_t, RElement>> col;
  for (auto& [h, entries] : by_row) col.emplace_back(h, canonicalize(std::move(entries), alg.modulus()));
  return col;
}

struct KernelModule {
  GradedModule module;
  std::vector<std::vector<SparseVec>> embedding;
};

// ker(F -> N) where basis element (h, u) of F maps to u * gens[h].
KernelModule kernel_module(const GradedModule& n, const FreeLayout& f, const std::vector<ModuleElement>& gens,
                           const Limits& limits) {
  const AlgebraPtr& alg = n.algebra();
  const Modulus& mod = alg->modulus();
  const std::size_t d = alg->num_vars();
  std::vector<KernelBasis> kernels;
  std::vector<SparseVec> prev_images;
  for (std::int64_t t = f.lo(); t <= f.hi(); ++t) {
    std::vector<SparseVec> images(f.dim(t));
    for (std::size_t pos = 0; pos < f.dim(t); ++pos) {
      auto [h, u] = f.element(t, pos);
      if (u == 0) {
        images[pos] = gens[h].vec;
      } else {
        auto [v, rest] = alg->split_first(u);
        images[pos] = n.act(v, t - 1, prev_images[f.position(h, rest)]);
      }
    }
    kernels.push_back(kernel_of_columns(images, n.dim(t), mod, limits.max_matrix_entries));
    prev_images = std::move(images);
  }

  std::vector<std::size_t> dims;
  for (const KernelBasis& kb : kernels) dims.push_back(kb.dim());
  std::vector<std::vector<SparseMatrix>> actions(d);
  for (std::size_t v = 0; v < d; ++v) {
    for (std::size_t k = 0; k < kernels.size(); ++k) {
      std::int64_t t = f.lo() + static_cast<std::int64_t>(k);
      std::size_t target = k + 1 < kernels.size() ? dims[k + 1] : 0;
      SparseMatrix a(target, dims[k]);
      if (target > 0) {
        for (std::size_t q = 0; q < dims[k]; ++q) {
          std::vector<Entry> moved;
          for (const Entry& e : kernels[k].vectors[q]) {
            auto [h, u] = f.element(t, e.index);
            std::int64_t w = alg->times_var(v, u);
            if (w >= 0) moved.push_back({static_cast<std::uint32_t>(f.position(h, static_cast<std::size_t>(w))), e.value});
          }
          a.column(q) = kernels[k + 1].coordinates(canonicalize(std::move(moved), mod));
        }
      }
      actions[v].push_back(std::move(a));
    }
  }

  KernelModule out;
  std::int64_t lo = f.lo();
  std::size_t first = 0;
  while (first < dims.size() && dims[first] == 0) ++first;
  out.module = GradedModule(alg, lo, dims, std::move(actions));
  // Align the embedding with the trimmed module.
  for (std::size_t k = first; k < kernels.size() && !out.module.is_zero(); ++k) {
    if (static_cast<std::int64_t>(k) + lo > out.module.hi()) break;
    out.embedding.push_back(std::move(kernels[k].vectors));
  }
  return out;
}

}  // namespace

ResolutionR resolve(const GradedModule& m, std::size_t steps, const Limits& limits) {
  if (steps > limits.max_steps) {
    throw ResourceError("requested " + std::to_string(steps) + " resolution steps; the cap is " +
                        std::to_string(limits.max_steps));
  }
  const AlgebraPtr& alg = m.algebra();
  ResolutionR res;
  res.module = m;
  res.syzygies.push_back(m);
  res.embeddings.emplace_back();
  FreeLayout previous;
  for (std::size_t i = 0; i <= steps; ++i) {
    const GradedModule& n = res.syzygies[i];
    GeneratorChoice gens = choose_generators(n, limits);
    FreeLayout layout(alg, gens.degrees);
    RMatrix diff;
    if (i > 0) {
      diff.row_degrees = res.generator_degrees[i - 1];
      diff.col_degrees = gens.degrees;
      for (const ModuleElement& g : gens.elements) {
        // Generators are standard basis vectors of Syz_i; look up their vectors in F_{i-1}.
        std::size_t k = static_cast<std::size_t>(g.degree - n.lo());
        const SparseVec& ambient = res.embeddings[i][k][g.vec.front().index];
        diff.columns.push_back(decode_column(previous, g.degree, ambient, *alg));
      }
    } else {
      res.generators = gens.elements;
    }
    res.generator_degrees.push_back(gens.degrees);
    res.differentials.push_back(std::move(diff));
    if (i == steps) break;
    KernelModule next = kernel_module(n, layout, gens.elements, limits);
    res.syzygies.push_back(std::move(next.module));
    res.embeddings.push_back(std::move(next.embedding));
    previous = std::move(layout);
  }
  return res;
}

std::vector<std::uint64_t> betti_canonical(const MonomialIdeal& ideal, std::size_t steps, const Limits& limits) {
  AlgebraPtr alg = ArtinianAlgebra::build(ideal);
  return resolve(canonical_module(alg), steps, limits).betti();
}

SyzygyLengthReport syzygy_length_check(const MonomialIdeal& ideal, std::size_t n, const Limits& limits) {
  AlgebraPtr alg = ArtinianAlgebra::build(ideal);
  ResolutionR res = resolve(canonical_module(alg), n, limits);
  SyzygyLengthReport r;
  r.n = n;
  r.ring_length = alg->length();
  r.betti = res.betti();
  r.lhs = static_cast<std::int64_t>(res.syzygies[n].length());
  std::int64_t sum = (n % 2 == 0) ? 1 : -1;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t b = static_cast<std::int64_t>(r.betti[i]);
    sum += ((n - 1 - i) % 2 == 0) ? b : -b;
  }
  r.rhs = static_cast<std::int64_t>(r.ring_length) * sum;
  return r;
}

std::string betti_tsv(const std::vector<std::uint64_t>& betti) {
  std::string out = "i\tbeta_i\n";
  for (std::size_t i = 0; i < betti.size(); ++i) out += std::to_string(i) + '\t' + std::to_string(betti[i]) + '\n';
  return out;
}

nlohmann::json betti_json(const std::vector<std::uint64_t>& betti) { return nlohmann::json{{"betti", betti}}; }

std::string resolution_text(const ResolutionR& res) {
  const ArtinianAlgebra& alg = *res.module.algebra();
  const Modulus& mod = alg.modulus();
  std::ostringstream out;
  auto element = [&](const RElement& e) {
    std::string s;
    for (const Entry& t : e) {
      if (!s.empty()) s += " + ";
      // Print coefficients as symmetric residues.
      std::int64_t c = t.value > mod.p() / 2 ? static_cast<std::int64_t>(t.value) - mod.p() : t.value;
      std::string mono = alg.monomial(t.index).to_string(alg.ring());
      s += (c == 1 ? "" : std::to_string(c) + "*") + mono;
    }
    return s;
  };
  std::vector<std::uint64_t> b = res.betti();
  out << "betti:";
  for (auto x : b) out << ' ' << x;
  out << '\n';
  for (std::size_t i = 1; i < res.differentials.size(); ++i) {
    const RMatrix& d = res.differentials[i];
    out << "d" << i << ": F" << i << " (" << d.cols() << ") -> F" << i - 1 << " (" << d.rows() << ")\n";
    for (std::size_t c = 0; c < d.cols(); ++c) {
      out << "  col " << c << " [deg " << d.col_degrees[c] << "]:";
      for (const auto& [r, e] : d.columns[c]) out << "  (" << r << ") " << element(e);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace artinres
