#include "hurwitz_sos/certificate.hpp"

#include <algorithm>
#include <set>

#include "hurwitz_sos/error.hpp"

namespace hsos {

namespace {

std::string letter_string(HalfLetter h) { return std::string(1, static_cast<char>(square(h))); }

}  // namespace

void SandwichBlock::validate() const {
  if (basis.empty()) throw StructureError("sandwich block " + describe() + " has an empty basis");
  std::set<Word> seen;
  for (const Word& w : basis) {
    if (w.size() != basis.front().size()) {
      throw StructureError("block " + describe() + ": core word " + w.str() + " has length " +
                           std::to_string(w.size()) + ", expected " + std::to_string(basis.front().size()));
    }
    if (!seen.insert(w).second) throw StructureError("block " + describe() + ": repeated core word " + w.str());
  }
}

std::size_t SandwichBlock::product_length() const {
  return 2 * core_length() + (prefix ? 1 : 0) + (suffix ? 1 : 0);
}

std::size_t SandwichBlock::product_b_count(std::size_t j, std::size_t k) const {
  return basis.at(j).count(Letter::B) + basis.at(k).count(Letter::B) + (prefix == HalfLetter::b ? 1 : 0) +
         (suffix == HalfLetter::b ? 1 : 0);
}

std::string SandwichBlock::describe() const {
  std::string s;
  if (prefix) s += static_cast<char>(*prefix) + std::string(".");
  s += "{";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) s += ",";
    s += basis[i].str();
  }
  s += "}";
  if (suffix) s += std::string(".") + static_cast<char>(*suffix);
  return s;
}

GramMatrix::GramMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : dim_(rows.size()), entries_() {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw InvalidInput("Gram matrix rows must form a square matrix");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

bool GramMatrix::is_hermitian() const {
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = j; k < dim_; ++k) {
      if ((*this)(j, k) != (*this)(k, j).conj()) return false;
    }
  }
  return true;
}

bool GramMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& z) { return z.is_zero(); });
}

bool GramMatrix::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& z) { return z.is_real(); });
}

GramMatrix& GramMatrix::operator+=(const GramMatrix& o) {
  if (o.dim_ != dim_) throw StructureError("Gram matrix dimension mismatch in sum");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

GramMatrix& GramMatrix::operator*=(const GaussianRational& s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

GaussianRational GramMatrix::quadratic_form(const std::vector<GaussianRational>& v) const {
  if (v.size() != dim_) throw StructureError("vector dimension does not match Gram matrix");
  GaussianRational acc;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (v[j].is_zero()) continue;
    GaussianRational row;
    for (std::size_t k = 0; k < dim_; ++k) row += (*this)(j, k) * v[k];
    acc += v[j].conj() * row;
  }
  return acc;
}

void Certificate::validate() const {
  if (p < 1) throw StructureError("certificate degree p must be positive");
  if (r < 0 || r > p) throw StructureError("certificate r must lie in [0, p]");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& [shape, gram] = blocks[b];
    shape.validate();
    const std::string where = "block " + std::to_string(b) + " (" + shape.describe() + ")";
    if (gram.dim() != shape.basis.size()) {
      throw StructureError(where + ": Gram dimension " + std::to_string(gram.dim()) + " != basis size " +
                           std::to_string(shape.basis.size()));
    }
    if (shape.product_length() != static_cast<std::size_t>(p)) {
      throw StructureError(where + ": product words have length " + std::to_string(shape.product_length()) +
                           ", expected " + std::to_string(p));
    }
    for (std::size_t j = 0; j < shape.basis.size(); ++j) {
      if (shape.product_b_count(j, j) != static_cast<std::size_t>(r)) {
        throw StructureError(where + ": core word " + shape.basis[j].str() + " yields " +
                             std::to_string(shape.product_b_count(j, j)) + " B's, expected " + std::to_string(r));
      }
    }
    if (!gram.is_hermitian()) throw StructureError(where + ": Gram matrix is not Hermitian");
  }
}

CyclicClass reduce_pair(const SandwichBlock& block, std::size_t j, std::size_t k) {
  if (j >= block.basis.size() || k >= block.basis.size()) {
    throw InvalidInput("reduce_pair index out of range for basis of size " + std::to_string(block.basis.size()));
  }
  std::string s = block.basis[j].str();
  if (block.suffix) s += letter_string(*block.suffix);
  s += block.basis[k].reversed().str();
  if (block.prefix) s += letter_string(*block.prefix);
  return canonical_rotation(s);
}

TracePolynomial expand_gram(const SandwichBlock& block, const GramMatrix& gram) {
  if (gram.dim() != block.basis.size()) {
    throw StructureError("Gram dimension " + std::to_string(gram.dim()) + " does not match basis size " +
                         std::to_string(block.basis.size()));
  }
  TracePolynomial out(block.product_length());
  for (std::size_t j = 0; j < gram.dim(); ++j) {
    for (std::size_t k = 0; k < gram.dim(); ++k) {
      if (!gram(j, k).is_zero()) out.add(reduce_pair(block, j, k), gram(j, k));
    }
  }
  return out;
}

GramMatrix gram_from_vectors(const std::vector<std::vector<GaussianRational>>& vectors) {
  if (vectors.empty()) return GramMatrix(0);
  const std::size_t n = vectors.front().size();
  GramMatrix g(n);
  for (const auto& v : vectors) {
    if (v.size() != n) throw StructureError("gram_from_vectors: inconsistent vector dimensions");
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) g(j, k) += v[j] * v[k].conj();
    }
  }
  return g;
}

PsdResult psd_check_exact(const GramMatrix& gram) {
  if (!gram.is_hermitian()) throw StructureError("psd_check_exact: matrix is not Hermitian");
  const std::size_t n = gram.dim();
  GramMatrix s = gram;
  // Columns of `basis` are the current coordinates: s == basis* G basis on the
  // remaining indices, and remaining columns are G-orthogonal to eliminated ones.
  std::vector<std::vector<GaussianRational>> basis(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = GaussianRational(1);
  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;

  PsdResult result;
  auto fail_with = [&](std::vector<GaussianRational> v) {
    for (const auto& z : v) {
      if (z.is_zero()) continue;
      if (sgn(z.re()) < 0 || (sgn(z.re()) == 0 && sgn(z.im()) < 0)) {
        for (auto& x : v) x = -x;
      }
      break;
    }
    result.psd = false;
    result.witness = std::move(v);
    return result;
  };

  while (!remaining.empty()) {
    auto most_negative = std::min_element(remaining.begin(), remaining.end(), [&](std::size_t x, std::size_t y) {
      return s(x, x).re() < s(y, y).re();
    });
    if (sgn(s(*most_negative, *most_negative).re()) < 0) return fail_with(basis[*most_negative]);

    auto pivot_it = std::max_element(remaining.begin(), remaining.end(), [&](std::size_t x, std::size_t y) {
      return s(x, x).re() < s(y, y).re();
    });
    const std::size_t k = *pivot_it;
    const Rational pivot = s(k, k).re();

    if (sgn(pivot) == 0) {
      // Every remaining diagonal is zero; any nonzero coupling is indefinite.
      for (std::size_t x : remaining) {
        for (std::size_t y : remaining) {
          if (x == y || s(x, y).is_zero()) continue;
          // w = e_y + t e_x with t = -s(x,y)/|s(x,y)|^2 gives w* s w = -2.
          const GaussianRational t = -s(x, y) / GaussianRational(s(x, y).norm());
          std::vector<GaussianRational> v(n);
          for (std::size_t i = 0; i < n; ++i) v[i] = basis[y][i] + t * basis[x][i];
          return fail_with(std::move(v));
        }
      }
      result.pivots.insert(result.pivots.end(), remaining.size(), Rational(0));
      result.psd = true;
      return result;
    }

    result.pivots.push_back(pivot);
    remaining.erase(pivot_it);
    for (std::size_t i : remaining) {
      const GaussianRational c = s(k, i) / GaussianRational(pivot);
      if (c.is_zero()) continue;
      for (std::size_t t = 0; t < n; ++t) basis[i][t] -= c * basis[k][t];
    }
    for (std::size_t i : remaining) {
      for (std::size_t j : remaining) {
        if (s(i, k).is_zero() || s(k, j).is_zero()) continue;
        s(i, j) -= s(i, k) * s(k, j) / GaussianRational(pivot);
      }
    }
  }
  result.psd = true;
  return result;
}

VerifyReport verify_certificate(const Certificate& cert) {
  cert.validate();
  return verify_against(cert, hurwitz_expand(cert.p, cert.r));
}

VerifyReport verify_against(const Certificate& cert, const TracePolynomial& target) {
  cert.validate();
  VerifyReport report;
  TracePolynomial sum(static_cast<std::size_t>(cert.p));
  report.psd = true;
  for (std::size_t b = 0; b < cert.blocks.size(); ++b) {
    const auto& [shape, gram] = cert.blocks[b];
    sum += expand_gram(shape, gram);
    if (!report.psd) continue;
    PsdResult psd = psd_check_exact(gram);
    if (!psd.psd) {
      report.psd = false;
      report.witness_value = gram.quadratic_form(*psd.witness).re();
      report.witness = std::move(psd.witness);
      report.witness_block = b;
    }
  }
  report.residual = sum - target;
  report.matched = report.residual.empty();
  return report;
}

SandwichBlock swap_block(const SandwichBlock& block) {
  SandwichBlock out;
  if (block.prefix) out.prefix = swap_half(*block.prefix);
  if (block.suffix) out.suffix = swap_half(*block.suffix);
  for (const Word& w : block.basis) out.basis.push_back(w.swapped());
  return out;
}

Certificate swap_certificate(const Certificate& cert) {
  Certificate out;
  out.p = cert.p;
  out.r = cert.p - cert.r;
  for (const auto& [shape, gram] : cert.blocks) out.blocks.push_back({swap_block(shape), gram});
  return out;
}

}  // namespace hsos
