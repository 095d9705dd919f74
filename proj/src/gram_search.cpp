#include "hurwitz_sos/gram_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hurwitz_sos/linalg.hpp"
#include "hurwitz_sos/rational_approx.hpp"

namespace hsos {

namespace {

std::string join_classes(const std::vector<CyclicClass>& classes) {
  std::string s;
  for (const auto& c : classes) {
    if (!s.empty()) s += ", ";
    s += c.str();
  }
  return s;
}

// Real symmetric Gram search variables: one per upper-triangular entry of each block.
struct VariableLayout {
  struct Var {
    std::size_t block, j, k;
  };
  std::vector<Var> vars;
  std::vector<std::vector<std::size_t>> index;  // [block][j * dim + k] -> var (symmetric)

  explicit VariableLayout(const std::vector<SandwichBlock>& blocks) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::size_t d = blocks[b].basis.size();
      index.emplace_back(d * d);
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j; k < d; ++k) {
          index[b][j * d + k] = index[b][k * d + j] = vars.size();
          vars.push_back({b, j, k});
        }
      }
    }
  }
};

// Exact reduced row echelon form of [A | t].
struct ExactSystem {
  std::vector<std::vector<Rational>> rows;  // reduced rows, coefficients then rhs
  std::vector<std::size_t> pivot_cols;
  bool consistent = true;
  std::size_t cols = 0;

  ExactSystem(std::vector<std::vector<Rational>> aug, std::size_t ncols) : cols(ncols) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < aug.size(); ++col) {
      std::size_t pick = row;
      while (pick < aug.size() && sgn(aug[pick][col]) == 0) ++pick;
      if (pick == aug.size()) continue;
      std::swap(aug[row], aug[pick]);
      const Rational inv = 1 / aug[row][col];
      for (auto& x : aug[row]) x *= inv;
      for (std::size_t i = 0; i < aug.size(); ++i) {
        if (i == row || sgn(aug[i][col]) == 0) continue;
        const Rational f = aug[i][col];
        for (std::size_t c = 0; c <= ncols; ++c) aug[i][c] -= f * aug[row][c];
      }
      pivot_cols.push_back(col);
      ++row;
    }
    for (std::size_t i = row; i < aug.size(); ++i) {
      if (sgn(aug[i][ncols]) != 0) consistent = false;
    }
    aug.resize(row);
    rows = std::move(aug);
  }

  // Keeps free variables from `x` and solves for the pivot variables.
  std::vector<Rational> complete(std::vector<Rational> x) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::size_t pc = pivot_cols[i];
      Rational v = rows[i][cols];
      for (std::size_t c = 0; c < cols; ++c) {
        if (c != pc && sgn(rows[i][c]) != 0) v -= rows[i][c] * x[c];
      }
      x[pc] = v;
    }
    return x;
  }
};

std::vector<GramMatrix> assemble(const std::vector<SandwichBlock>& blocks, const VariableLayout& layout,
                                 const std::vector<Rational>& x) {
  std::vector<GramMatrix> out;
  for (const auto& blk : blocks) out.emplace_back(blk.basis.size());
  for (std::size_t v = 0; v < layout.vars.size(); ++v) {
    const auto& [b, j, k] = layout.vars[v];
    out[b](j, k) = GaussianRational(x[v]);
    out[b](k, j) = GaussianRational(x[v]);
  }
  return out;
}

Certificate make_certificate(const ConstraintMap& map, std::vector<GramMatrix> grams) {
  Certificate cert;
  cert.p = map.p();
  cert.r = map.r();
  for (std::size_t b = 0; b < grams.size(); ++b) cert.blocks.push_back({map.blocks()[b], std::move(grams[b])});
  return cert;
}

}  // namespace

InexpressibleTarget::InexpressibleTarget(std::vector<CyclicClass> unreachable)
    : StructureError("ansatz cannot reach target classes: " + join_classes(unreachable)),
      unreachable_(std::move(unreachable)) {}

const CyclicClass& ConstraintMap::class_of(std::size_t block, std::size_t j, std::size_t k) const {
  const std::size_t d = blocks_.at(block).basis.size();
  if (j >= d || k >= d) throw InvalidInput("class_of: index out of range");
  return pair_class_[block][j * d + k];
}

ConstraintMap build_constraint_map(int p, int r, const std::vector<SandwichBlock>& blocks) {
  if (p < 1 || r < 0 || r > p) throw InvalidInput("need p >= 1 and 0 <= r <= p");
  if (blocks.empty()) throw StructureError("ansatz has no blocks");
  ConstraintMap map;
  map.p_ = p;
  map.r_ = r;
  map.blocks_ = blocks;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const SandwichBlock& blk = blocks[b];
    blk.validate();
    const std::string where = "block " + std::to_string(b) + " (" + blk.describe() + ")";
    if (blk.product_length() != static_cast<std::size_t>(p)) {
      throw StructureError(where + ": word " + blk.basis.front().str() + " gives products of length " +
                           std::to_string(blk.product_length()) + ", expected " + std::to_string(p));
    }
    for (std::size_t j = 0; j < blk.basis.size(); ++j) {
      if (blk.product_b_count(j, j) != static_cast<std::size_t>(r)) {
        throw StructureError(where + ": word " + blk.basis[j].str() + " gives products with " +
                             std::to_string(blk.product_b_count(j, j)) + " B's, expected " + std::to_string(r));
      }
    }
    const std::size_t d = blk.basis.size();
    std::vector<CyclicClass> classes;
    classes.reserve(d * d);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        classes.push_back(reduce_pair(blk, j, k));
        map.contributors_[classes.back()].push_back({b, j, k});
      }
    }
    map.pair_class_.push_back(std::move(classes));
  }
  return map;
}

namespace {

void require_reachable(const ConstraintMap& map, const TracePolynomial& target) {
  std::vector<CyclicClass> missing;
  for (const auto& [cls, coeff] : target.terms()) {
    if (!map.contributors().contains(cls)) missing.push_back(cls);
  }
  if (!missing.empty()) throw InexpressibleTarget(std::move(missing));
}

}  // namespace

std::optional<std::vector<GramMatrix>> determined_gram(const ConstraintMap& map, const TracePolynomial& target) {
  require_reachable(map, target);
  for (const auto& [cls, refs] : map.contributors()) {
    if (refs.size() != 1) return std::nullopt;
  }
  std::vector<GramMatrix> grams;
  for (const auto& blk : map.blocks()) grams.emplace_back(blk.basis.size());
  for (const auto& [cls, refs] : map.contributors()) {
    const PairRef& ref = refs.front();
    grams[ref.block](ref.j, ref.k) = target.coefficient(cls);
  }
  return grams;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Certificate: return "certificate";
    case SearchStatus::InfeasibleWitness: return "infeasible";
    case SearchStatus::Unknown: return "unknown";
  }
  return "unknown";
}

void SearchOptions::validate() const {
  if (max_iter < 1) throw InvalidInput("max_iter must be positive");
  if (denom_bound == 0) throw InvalidInput("denominator bound must be positive");
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  if (!(margin >= 0.0) || !std::isfinite(margin)) throw InvalidInput("margin must be finite and nonnegative");
  if (check_every < 1) throw InvalidInput("check_every must be positive");
}

SearchOutcome prove_infeasible_determined(const ConstraintMap& map, const TracePolynomial& target) {
  auto grams = determined_gram(map, target);
  if (!grams) {
    throw StructureError("Gram system is underdetermined (some class has several contributors); "
                         "use feasibility_search");
  }
  SearchOutcome out;
  for (std::size_t b = 0; b < grams->size(); ++b) {
    const GramMatrix& g = (*grams)[b];
    if (!g.is_hermitian()) {
      throw StructureError("forced Gram matrix of block " + std::to_string(b) +
                           " is not Hermitian; the target is not reversal symmetric");
    }
    PsdResult psd = psd_check_exact(g);
    if (!psd.psd) {
      out.status = SearchStatus::InfeasibleWitness;
      InfeasibilityWitness w;
      w.block = b;
      w.value = g.quadratic_form(*psd.witness).re();
      w.vector = std::move(*psd.witness);
      w.forced = g;
      out.witness = std::move(w);
      out.note = "forced Gram matrix is not positive semidefinite";
      return out;
    }
  }
  Certificate cert = make_certificate(map, std::move(*grams));
  const VerifyReport report = verify_against(cert, target);
  if (!report.ok()) throw StructureError("internal error: forced certificate failed exact verification");
  out.status = SearchStatus::Certificate;
  out.certificate = std::move(cert);
  out.note = "Gram matrix fully determined by the target";
  return out;
}

SearchOutcome feasibility_search(int p, int r, const std::vector<SandwichBlock>& blocks,
                                 const SearchOptions& options) {
  using numeric::Complex;
  using numeric::ComplexMatrix;

  options.validate();
  const ConstraintMap map = build_constraint_map(p, r, blocks);
  const TracePolynomial target = hurwitz_expand(p, r);
  if (determined_gram(map, target)) return prove_infeasible_determined(map, target);

  const VariableLayout layout(blocks);
  const std::size_t nv = layout.vars.size();

  // One row per reachable class: sum of contributing Gram entries == target coefficient.
  std::vector<CyclicClass> classes;
  std::vector<std::vector<Rational>> aug;
  for (const auto& [cls, refs] : map.contributors()) {
    std::vector<Rational> row(nv + 1);
    for (const PairRef& ref : refs) {
      const std::size_t d = blocks[ref.block].basis.size();
      row[layout.index[ref.block][ref.j * d + ref.k]] += 1;
    }
    row[nv] = target.coefficient(cls).re();
    classes.push_back(cls);
    aug.push_back(std::move(row));
  }
  const ExactSystem exact(aug, nv);
  SearchOutcome out;
  if (!exact.consistent) {
    out.note = "affine constraints have no real symmetric solution";
    return out;
  }

  // Float problem in Frobenius-isometric coordinates y_v = w_v x_v.
  const std::size_t nc = aug.size();
  std::vector<double> weight(nv);
  for (std::size_t v = 0; v < nv; ++v) weight[v] = layout.vars[v].j == layout.vars[v].k ? 1.0 : std::sqrt(2.0);
  std::vector<double> a_y(nc * nv), rhs(nc);
  double scale = 0.0;
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t v = 0; v < nv; ++v) a_y[i * nv + v] = aug[i][v].get_d() / weight[v];
    rhs[i] = aug[i][nv].get_d();
    scale = std::max(scale, std::abs(rhs[i]));
  }
  // K = A^T (A A^T)^+ for the affine projection y <- y - K (A y - t).
  ComplexMatrix gram_rows(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t k = 0; k < nc; ++k) {
      double s = 0.0;
      for (std::size_t v = 0; v < nv; ++v) s += a_y[i * nv + v] * a_y[k * nv + v];
      gram_rows(i, k) = s;
    }
  }
  const numeric::EigResult eig_rows = numeric::hermitian_eig(gram_rows);
  const double lambda_max = eig_rows.eigenvalues.empty() ? 0.0 : eig_rows.eigenvalues.back();
  std::vector<double> pinv(nc * nc, 0.0);
  for (std::size_t l = 0; l < nc; ++l) {
    const double lambda = eig_rows.eigenvalues[l];
    if (lambda <= 1e-10 * lambda_max) continue;
    for (std::size_t i = 0; i < nc; ++i) {
      for (std::size_t k = 0; k < nc; ++k) {
        pinv[i * nc + k] += (eig_rows.vectors(i, l) * std::conj(eig_rows.vectors(k, l))).real() / lambda;
      }
    }
  }
  std::vector<double> proj(nv * nc, 0.0);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t k = 0; k < nc; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < nc; ++i) s += a_y[i * nv + v] * pinv[i * nc + k];
      proj[v * nc + k] = s;
    }
  }

  auto residual_of = [&](const std::vector<double>& y, std::vector<double>& res) {
    double norm = 0.0;
    for (std::size_t i = 0; i < nc; ++i) {
      double s = -rhs[i];
      for (std::size_t v = 0; v < nv; ++v) s += a_y[i * nv + v] * y[v];
      res[i] = s;
      norm += s * s;
    }
    return std::sqrt(norm);
  };

  auto try_exact = [&](const std::vector<double>& y) -> std::optional<Certificate> {
    std::vector<Rational> x(nv);
    for (std::size_t v = 0; v < nv; ++v) x[v] = best_rational(y[v] / weight[v], options.denom_bound);
    for (const auto& candidate : {x, exact.complete(x)}) {
      std::vector<GramMatrix> grams = assemble(blocks, layout, candidate);
      bool psd = true;
      for (const auto& g : grams) {
        if (!psd_check_exact(g).psd) {
          psd = false;
          break;
        }
      }
      if (!psd) continue;
      Certificate cert = make_certificate(map, std::move(grams));
      if (verify_certificate(cert).ok()) return cert;
    }
    return std::nullopt;
  };

  numeric::GaussianSource gauss(options.seed);
  std::vector<double> y(nv), res(nc);
  for (double& value : y) value = gauss.next();

  // Eigenvalue floor schedule: margin, margin/10, margin/100, then plain PSD cone.
  const double floors[] = {options.margin * scale, options.margin * scale * 1e-1, options.margin * scale * 1e-2,
                           0.0};
  const int phase_len = std::max(1, options.max_iter / 4);
  const double stop = options.tol * (1.0 + scale);
  double residual = 0.0;
  for (int iter = 1; iter <= options.max_iter; ++iter) {
    const double floor = floors[std::min(3, (iter - 1) / phase_len)];

    residual_of(y, res);
    for (std::size_t v = 0; v < nv; ++v) {
      double s = 0.0;
      for (std::size_t i = 0; i < nc; ++i) s += proj[v * nc + i] * res[i];
      y[v] -= s;
    }

    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::size_t d = blocks[b].basis.size();
      ComplexMatrix g(d);
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          const std::size_t v = layout.index[b][j * d + k];
          g(j, k) = y[v] / weight[v];
        }
      }
      const numeric::EigResult eig = numeric::hermitian_eig(g);
      ComplexMatrix clamped(d);
      for (std::size_t l = 0; l < d; ++l) {
        const double lambda = std::max(eig.eigenvalues[l], floor);
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t k = 0; k < d; ++k) {
            clamped(j, k) += lambda * eig.vectors(j, l) * std::conj(eig.vectors(k, l));
          }
        }
      }
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j; k < d; ++k) {
          const std::size_t v = layout.index[b][j * d + k];
          y[v] = clamped(j, k).real() * weight[v];
        }
      }
    }

    residual = residual_of(y, res);
    const bool converged = residual <= stop;
    if (converged || iter % options.check_every == 0 || iter == options.max_iter) {
      if (auto cert = try_exact(y)) {
        out.status = SearchStatus::Certificate;
        out.certificate = std::move(*cert);
        out.iterations = iter;
        out.residual = residual;
        out.note = "rounded numeric solution verified exactly";
        return out;
      }
    }
    out.iterations = iter;
  }
  out.residual = residual;
  out.note = "no exactly verified certificate within the iteration budget";
  return out;
}

}  // namespace hsos
