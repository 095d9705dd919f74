#include "hurwitz_sos/numeric_validation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hurwitz_sos/error.hpp"
#include "hurwitz_sos/linalg.hpp"
#include "hurwitz_sos/simd/kernels.hpp"

namespace hsos::numeric {

namespace {

void check_pair(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim() || a.dim() == 0) {
    throw InvalidInput("A and B must be nonempty and of equal dimension (got " + std::to_string(a.dim()) + " and " +
                       std::to_string(b.dim()) + ")");
  }
}

ComplexMatrix letter_matrix(char c, const ComplexMatrix& a, const ComplexMatrix& b) {
  return (c == 'A' || c == 'a') ? a : b;
}

ComplexMatrix to_complex(const GramMatrix& g) {
  ComplexMatrix m(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    for (std::size_t k = 0; k < g.dim(); ++k) m(j, k) = Complex(g(j, k).re().get_d(), g(j, k).im().get_d());
  }
  return m;
}

// Multiplies the letters of `s` (full letters from A, B; half letters from a, b).
ComplexMatrix spell(std::string_view s, const ComplexMatrix& big_a, const ComplexMatrix& big_b,
                    const ComplexMatrix& half_a, const ComplexMatrix& half_b) {
  ComplexMatrix acc = ComplexMatrix::identity(big_a.dim());
  for (char c : s) {
    switch (c) {
      case 'A': acc = acc * big_a; break;
      case 'B': acc = acc * big_b; break;
      case 'a': acc = acc * half_a; break;
      default: acc = acc * half_b; break;
    }
  }
  return acc;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Complex word_trace(const Word& w, const ComplexMatrix& a, const ComplexMatrix& b) {
  check_pair(a, b);
  ComplexMatrix acc = letter_matrix(w.str().front(), a, b);
  for (std::size_t i = 1; i < w.size(); ++i) acc = acc * letter_matrix(w.str()[i], a, b);
  return acc.trace();
}

double trace_hurwitz_numeric(const ComplexMatrix& a, const ComplexMatrix& b, int p, int r) {
  check_pair(a, b);
  if (p < 1 || r < 0 || r > p) throw InvalidInput("trace_hurwitz_numeric: need p >= 1 and 0 <= r <= p");
  std::string s(static_cast<std::size_t>(p - r), 'A');
  s.append(static_cast<std::size_t>(r), 'B');
  Complex total = 0.0;
  do {
    total += word_trace(Word(s), a, b);
  } while (std::next_permutation(s.begin(), s.end()));
  if (std::abs(total.imag()) > 1e-9 * (1.0 + std::abs(total.real()))) {
    throw InvalidInput("trace_hurwitz_numeric: imaginary part " + std::to_string(total.imag()) +
                       " too large; are A and B Hermitian?");
  }
  return total.real();
}

Complex trace_polynomial_numeric(const TracePolynomial& t, const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex total = 0.0;
  for (const auto& [cls, coeff] : t.terms()) {
    const Complex c(coeff.re().get_d(), coeff.im().get_d());
    total += c * word_trace(cls.representative(), a, b);
  }
  return total;
}

double eval_certificate_numeric(const Certificate& cert, const ComplexMatrix& a, const ComplexMatrix& b) {
  check_pair(a, b);
  cert.validate();
  const ComplexMatrix half_a = psd_sqrt(a);
  const ComplexMatrix half_b = psd_sqrt(b);
  const auto& kernels = simd::active_kernels();
  const std::size_t n = a.dim();

  double value = 0.0;
  for (std::size_t blk = 0; blk < cert.blocks.size(); ++blk) {
    const auto& [shape, gram] = cert.blocks[blk];
    const ComplexMatrix g = to_complex(gram);
    const EigResult eig = hermitian_eig(g);
    const double clamp = 1e-9 * (1.0 + g.frobenius_norm());
    if (!eig.eigenvalues.empty() && eig.eigenvalues.front() < -clamp) {
      throw NotPsdError("eval_certificate_numeric: block " + std::to_string(blk) + " Gram eigenvalue " +
                        std::to_string(eig.eigenvalues.front()) + " is negative");
    }
    std::vector<ComplexMatrix> words;
    words.reserve(shape.basis.size());
    for (const Word& w : shape.basis) {
      std::string s;
      if (shape.prefix) s += static_cast<char>(*shape.prefix);
      s += w.str();
      if (shape.suffix) s += static_cast<char>(*shape.suffix);
      words.push_back(spell(s, a, b, half_a, half_b));
    }
    // G = sum_l lambda_l v_l v_l*, so C_l = sum_j sqrt(lambda_l) v_l[j] u_j.
    for (std::size_t l = 0; l < eig.eigenvalues.size(); ++l) {
      const double lambda = eig.eigenvalues[l];
      if (lambda <= 0.0) continue;
      const double root = std::sqrt(lambda);
      ComplexMatrix c(n);
      for (std::size_t j = 0; j < words.size(); ++j) {
        const Complex coeff = root * eig.vectors(j, l);
        kernels.axpy(coeff, words[j].data().data(), c.data().data(), n * n);
      }
      value += kernels.norm_sq(c.data().data(), n * n);
    }
  }
  return value;
}

std::vector<double> bmv_coefficients(const ComplexMatrix& a, const ComplexMatrix& b, int p) {
  if (p < 1) throw InvalidInput("bmv_coefficients: p must be positive");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(p) + 1);
  for (int r = 0; r <= p; ++r) out.push_back(trace_hurwitz_numeric(a, b, p, r));
  return out;
}

void TrialConfig::validate() const {
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  if (!(tol_rel > 0.0)) throw InvalidInput("tolerance must be positive");
  if (n_values.empty()) throw InvalidInput("at least one matrix dimension is required");
  for (std::size_t n : n_values) {
    if (n == 0) throw InvalidInput("matrix dimensions must be positive");
  }
}

TrialPair trial_matrices(std::size_t n, std::uint64_t trial_seed) {
  return {random_psd(n, splitmix64(2 * trial_seed)), random_psd(n, splitmix64(2 * trial_seed + 1))};
}

std::vector<TrialRecord> run_certificate_trials(const Certificate& cert, const TrialConfig& config) {
  config.validate();
  std::vector<TrialRecord> out;
  auto record = [&](std::size_t n, std::uint64_t seed, std::string kind, const ComplexMatrix& a,
                    const ComplexMatrix& b) {
    TrialRecord rec;
    rec.p = cert.p;
    rec.r = cert.r;
    rec.n = n;
    rec.seed = seed;
    rec.kind = std::move(kind);
    rec.oracle = trace_hurwitz_numeric(a, b, cert.p, cert.r);
    rec.certificate = eval_certificate_numeric(cert, a, b);
    rec.abs_diff = std::abs(rec.certificate - rec.oracle);
    rec.pass = rec.abs_diff <= config.tol_rel * (1.0 + std::abs(rec.oracle)) &&
               rec.certificate >= -1e-9 * (1.0 + std::abs(rec.oracle));
    out.push_back(std::move(rec));
  };

  const ComplexMatrix two = ComplexMatrix::scalar(2.0);
  const ComplexMatrix three = ComplexMatrix::scalar(3.0);
  record(1, 0, "scalar", two, three);
  std::uint64_t index = 0;
  for (std::size_t n : config.n_values) {
    const ComplexMatrix id = ComplexMatrix::identity(n);
    record(n, 0, "identity", id, id);
    for (int t = 0; t < config.trials; ++t, ++index) {
      const std::uint64_t seed = config.seed + index;
      const TrialPair pair = trial_matrices(n, seed);
      record(n, seed, "random", pair.a, pair.b);
    }
  }
  return out;
}

std::vector<BmvRecord> run_bmv_trials(int p, const TrialConfig& config, double tol) {
  config.validate();
  if (p < 1) throw InvalidInput("p must be positive");
  std::vector<BmvRecord> out;
  std::uint64_t index = 0;
  for (std::size_t n : config.n_values) {
    for (int t = 0; t < config.trials; ++t, ++index) {
      BmvRecord rec;
      rec.p = p;
      rec.n = n;
      rec.seed = config.seed + index;
      const TrialPair pair = trial_matrices(n, rec.seed);
      rec.coefficients = bmv_coefficients(pair.a, pair.b, p);
      double scale = 0.0;
      for (double c : rec.coefficients) scale = std::max(scale, std::abs(c));
      rec.pass = std::all_of(rec.coefficients.begin(), rec.coefficients.end(),
                             [&](double c) { return c >= -tol * (1.0 + scale); });
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace hsos::numeric
