#include "hurwitz_sos/rational_approx.hpp"

#include <cmath>

#include "hurwitz_sos/error.hpp"

namespace hsos {

Rational best_rational(double x, std::uint64_t max_den) {
  if (max_den == 0) throw InvalidInput("denominator bound must be positive");
  if (!std::isfinite(x)) throw InvalidInput("cannot approximate a non-finite value");
  const Rational target(x);  // exact binary value of x
  // Convergent recurrence: h_n = a_n h_{n-1} + h_{n-2}.
  mpz_class hm2 = 0, hm1 = 1, km2 = 1, km1 = 0;
  Rational rest = target;
  const mpz_class bound(static_cast<unsigned long>(max_den));
  Rational best;
  bool have = false;
  for (int iter = 0; iter < 200; ++iter) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    const mpz_class hn = a * hm1 + hm2;
    const mpz_class kn = a * km1 + km2;
    if (kn > bound) {
      // Largest admissible semiconvergent, kept only if it beats the last convergent.
      const mpz_class t = (bound - km2) / km1;
      if (t > 0) {
        Rational semi(mpz_class(t * hm1 + hm2), mpz_class(t * km1 + km2));
        semi.canonicalize();
        if (!have || abs(semi - target) < abs(best - target)) best = semi;
      }
      break;
    }
    best = Rational(hn, kn);
    best.canonicalize();
    have = true;
    hm2 = hm1;
    hm1 = hn;
    km2 = km1;
    km1 = kn;
    Rational frac = rest - Rational(a);
    if (sgn(frac) == 0) break;
    rest = 1 / frac;
  }
  return best;
}

}  // namespace hsos
