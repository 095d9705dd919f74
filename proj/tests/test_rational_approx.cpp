#include <doctest.h>

#include <cmath>
#include <random>

#include "hurwitz_sos/error.hpp"
#include "hurwitz_sos/rational_approx.hpp"

using namespace hsos;

TEST_CASE("best_rational recovers simple fractions") {
  CHECK(best_rational(7.0, 10000) == Rational(7));
  CHECK(best_rational(-3.5, 10000) == Rational(-7, 2));
  CHECK(best_rational(1.0 / 3.0 + 1e-13, 10000) == Rational(1, 3));
  CHECK(best_rational(-2.0 / 7.0, 10000) == Rational(-2, 7));
  CHECK(best_rational(0.0, 1) == Rational(0));
  CHECK(best_rational(M_PI, 1000) == Rational(355, 113));
  CHECK(best_rational(M_PI, 100) == Rational(311, 99));
}

TEST_CASE("best_rational is the closest fraction under the bound") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = dist(rng);
    const unsigned long bound = 1 + rng() % 40;
    const Rational q = best_rational(x, bound);
    CHECK(q.get_den() <= bound);
    // Brute force over all denominators.
    double best = 1e300;
    for (unsigned long d = 1; d <= bound; ++d) {
      const double n = std::round(x * static_cast<double>(d));
      best = std::min(best, std::abs(x - n / static_cast<double>(d)));
    }
    CHECK(std::abs(x - q.get_d()) <= best + 1e-15);
  }
}

TEST_CASE("best_rational errors") {
  CHECK_THROWS_AS(best_rational(1.0, 0), InvalidInput);
  CHECK_THROWS_AS(best_rational(NAN, 10), InvalidInput);
}
