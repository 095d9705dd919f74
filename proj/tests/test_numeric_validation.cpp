#include <doctest.h>

#include "hurwitz_sos/error.hpp"
#include "hurwitz_sos/linalg.hpp"
#include "hurwitz_sos/numeric_validation.hpp"

using namespace hsos;
using namespace hsos::numeric;

namespace {

SandwichBlock block(std::optional<HalfLetter> prefix, std::optional<HalfLetter> suffix,
                    std::initializer_list<const char*> words) {
  SandwichBlock b{prefix, suffix, {}};
  for (const char* w : words) b.basis.emplace_back(w);
  return b;
}

Certificate known_p7r3() {
  return {7, 3, {{block(HalfLetter::b, std::nullopt, {"AAB", "ABA", "BAA"}), {{7, 0, 0}, {0, 7, 7}, {0, 7, 7}}}}};
}

}  // namespace

TEST_CASE("trace_hurwitz_numeric special values") {
  const ComplexMatrix two = ComplexMatrix::scalar(2.0);
  const ComplexMatrix three = ComplexMatrix::scalar(3.0);
  CHECK(trace_hurwitz_numeric(two, three, 7, 3) == doctest::Approx(15120.0).epsilon(1e-14));
  for (std::size_t n : {1, 3, 5}) {
    const ComplexMatrix id = ComplexMatrix::identity(n);
    for (int r = 0; r <= 6; ++r) {
      CHECK(trace_hurwitz_numeric(id, id, 6, r) == doctest::Approx(double(binomial(6, r) * n)));
    }
  }
  CHECK_THROWS_AS(trace_hurwitz_numeric(two, ComplexMatrix::identity(2), 7, 3), InvalidInput);
  CHECK_THROWS_AS(trace_hurwitz_numeric(two, three, 7, 8), InvalidInput);
}

TEST_CASE("brute force equals the class-based evaluation") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TrialPair pair = trial_matrices(3, seed);
    for (auto [p, r] : {std::pair{6, 3}, std::pair{7, 3}, std::pair{7, 2}, std::pair{5, 1}}) {
      const double brute = trace_hurwitz_numeric(pair.a, pair.b, p, r);
      const Complex classes = trace_polynomial_numeric(hurwitz_expand(p, r), pair.a, pair.b);
      CHECK(close_rel(classes.real(), brute, 1e-9));
      CHECK(std::abs(classes.imag()) <= 1e-9 * (1.0 + std::abs(brute)));
    }
  }
}

TEST_CASE("letter swap symmetry") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const TrialPair pair = trial_matrices(4, seed);
    for (int r = 0; r <= 7; ++r) {
      CHECK(close_rel(trace_hurwitz_numeric(pair.a, pair.b, 7, r), trace_hurwitz_numeric(pair.b, pair.a, 7, 7 - r),
                      1e-9));
    }
  }
}

TEST_CASE("eval_certificate_numeric special values") {
  const Certificate cert = known_p7r3();
  const ComplexMatrix id = ComplexMatrix::identity(2);
  CHECK(eval_certificate_numeric(cert, id, id) == doctest::Approx(70.0));
  CHECK(eval_certificate_numeric(cert, ComplexMatrix::scalar(2.0), ComplexMatrix::scalar(3.0)) ==
        doctest::Approx(15120.0));
}

TEST_CASE("eval_certificate_numeric matches brute force") {
  const Certificate cert = known_p7r3();
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const TrialPair pair = trial_matrices(n, 100 * n + seed);
      const double oracle = trace_hurwitz_numeric(pair.a, pair.b, 7, 3);
      const double value = eval_certificate_numeric(cert, pair.a, pair.b);
      CHECK(close_rel(value, oracle, 1e-8));
      CHECK(value >= -1e-9 * (1.0 + std::abs(value)));
    }
  }
}

TEST_CASE("eval_certificate_numeric rejects a non-PSD Gram matrix and non-PSD inputs") {
  Certificate bad{6, 3, {{block(HalfLetter::a, HalfLetter::b, {"AB", "BA"}), {{6, 6}, {6, 2}}}}};
  const ComplexMatrix id = ComplexMatrix::identity(2);
  CHECK_THROWS_AS(eval_certificate_numeric(bad, id, id), NotPsdError);
  const std::vector<double> neg{1, -2};
  CHECK_THROWS_AS(eval_certificate_numeric(known_p7r3(), ComplexMatrix::diagonal(neg), id), NotPsdError);
}

TEST_CASE("bmv_coefficients") {
  const ComplexMatrix id = ComplexMatrix::identity(3);
  const auto c = bmv_coefficients(id, id, 7);
  const double expected[] = {1, 7, 21, 35, 35, 21, 7, 1};
  for (int r = 0; r <= 7; ++r) CHECK(c[r] == doctest::Approx(3 * expected[r]));

  const auto s = bmv_coefficients(ComplexMatrix::scalar(1.5), ComplexMatrix::scalar(0.5), 7);
  for (int r = 0; r <= 7; ++r) {
    CHECK(s[r] == doctest::Approx(double(binomial(7, r)) * std::pow(1.5, 7 - r) * std::pow(0.5, r)));
  }

  const TrialPair pair = trial_matrices(4, 3);
  for (double v : bmv_coefficients(pair.a, pair.b, 7)) CHECK(v >= 0.0);
}

TEST_CASE("run_certificate_trials includes special trials and passes") {
  TrialConfig cfg;
  cfg.trials = 3;
  cfg.n_values = {1, 2};
  cfg.seed = 5;
  const auto recs = run_certificate_trials(known_p7r3(), cfg);
  CHECK(recs.size() == 1 + 2 * (1 + 3));
  CHECK(recs.front().kind == "scalar");
  CHECK(recs.front().oracle == doctest::Approx(15120.0));
  for (const auto& rec : recs) CHECK(rec.pass);
  CHECK(recs[1].kind == "identity");
  CHECK(recs[1].oracle == doctest::Approx(35.0));

  TrialConfig bad;
  bad.trials = 0;
  CHECK_THROWS_AS(run_certificate_trials(known_p7r3(), bad), InvalidInput);
}

TEST_CASE("trials are reproducible from their seed") {
  const TrialPair x = trial_matrices(3, 77);
  const TrialPair y = trial_matrices(3, 77);
  CHECK((x.a - y.a).frobenius_norm() == 0.0);
  CHECK((x.b - y.b).frobenius_norm() == 0.0);
  CHECK((x.a - x.b).frobenius_norm() > 0.0);
}
