#include <doctest.h>

#include <random>

#include "hurwitz_sos/certificate.hpp"
#include "hurwitz_sos/error.hpp"
#include "oracles.hpp"

using namespace hsos;

namespace {

using GR = GaussianRational;

SandwichBlock block(std::optional<HalfLetter> prefix, std::optional<HalfLetter> suffix,
                    std::initializer_list<const char*> words) {
  SandwichBlock b{prefix, suffix, {}};
  for (const char* w : words) b.basis.emplace_back(w);
  return b;
}

SandwichBlock known_p7r3_block() { return block(HalfLetter::b, std::nullopt, {"AAB", "ABA", "BAA"}); }

GramMatrix known_p7r3_gram() { return {{7, 0, 0}, {0, 7, 7}, {0, 7, 7}}; }

GR random_gr(std::mt19937_64& rng, bool real_only = false) {
  auto q = [&] { return Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(1 + rng() % 4)); };
  return real_only ? GR(q()) : GR(q(), q());
}

GramMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  GramMatrix g(n);
  for (std::size_t j = 0; j < n; ++j) {
    g(j, j) = GR(random_gr(rng, true));
    for (std::size_t k = j + 1; k < n; ++k) {
      g(j, k) = random_gr(rng);
      g(k, j) = g(j, k).conj();
    }
  }
  return g;
}

// Product string of (j, k) spelled out with the half letters squared, canonicalized by brute force.
std::string pair_class_oracle(const SandwichBlock& b, std::size_t j, std::size_t k) {
  std::string s = b.basis[j].str();
  if (b.suffix) s += *b.suffix == HalfLetter::a ? "A" : "B";
  s += std::string(b.basis[k].str().rbegin(), b.basis[k].str().rend());
  if (b.prefix) s += *b.prefix == HalfLetter::a ? "A" : "B";
  return oracle::least_rotation_brute(s);
}

}  // namespace

TEST_CASE("reduce_pair examples") {
  CHECK(reduce_pair(known_p7r3_block(), 0, 1).str() == "AABABAB");
  CHECK(reduce_pair(block(HalfLetter::a, HalfLetter::b, {"AB", "BA"}), 0, 0).str() == "AAABBB");
  CHECK(reduce_pair(block(std::nullopt, HalfLetter::a, {"BAA", "ABA", "AAB"}), 0, 0).str() == "AAAAABB");
  CHECK_THROWS_AS(reduce_pair(known_p7r3_block(), 0, 3), InvalidInput);
}

TEST_CASE("reduce_pair reproduces the nine-term expansion table") {
  // c_j c_k^* -> T: T1 = AAAABBB, T2 = AAABABB, T3 = AAABBAB, T4 = AABAABB, T5 = AABABAB
  const char* table[3][3] = {{"AABAABB", "AABABAB", "AABAABB"},
                             {"AABABAB", "AABABAB", "AAABBAB"},
                             {"AABAABB", "AAABABB", "AAAABBB"}};
  const SandwichBlock b = known_p7r3_block();
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(reduce_pair(b, j, k).str() == table[j][k]);
      CHECK(reduce_pair(b, j, k).str() == pair_class_oracle(b, j, k));
    }
  }
}

TEST_CASE("expand_gram examples") {
  const TracePolynomial t = expand_gram(known_p7r3_block(), known_p7r3_gram());
  CHECK(t == hurwitz_expand(7, 3));
  CHECK(expand_gram(known_p7r3_block(), GramMatrix(3)).empty());

  const TracePolynomial t1 = expand_gram(block(HalfLetter::a, HalfLetter::b, {"AB", "BA"}), {{1, 0}, {0, 0}});
  CHECK(t1.size() == 1);
  CHECK(t1.coefficient("AAABBB") == GR(1));

  CHECK_THROWS_AS(expand_gram(known_p7r3_block(), GramMatrix(2)), StructureError);
}

TEST_CASE("expand_gram is linear") {
  std::mt19937_64 rng(11);
  const SandwichBlock b = known_p7r3_block();
  for (int trial = 0; trial < 50; ++trial) {
    const GramMatrix g1 = random_hermitian(rng, 3);
    const GramMatrix g2 = random_hermitian(rng, 3);
    CHECK(expand_gram(b, g1 + g2) == expand_gram(b, g1) + expand_gram(b, g2));
  }
}

TEST_CASE("expand_gram of a Hermitian matrix is conjugate-symmetric under reversal") {
  std::mt19937_64 rng(12);
  const SandwichBlock blocks[] = {known_p7r3_block(), block(HalfLetter::a, HalfLetter::b, {"AB", "BA"}),
                                  block(std::nullopt, HalfLetter::a, {"BAA", "ABA", "AAB"})};
  for (const auto& b : blocks) {
    for (int trial = 0; trial < 30; ++trial) {
      const TracePolynomial t = expand_gram(b, random_hermitian(rng, b.basis.size()));
      for (const auto& [cls, v] : t.terms()) {
        CHECK(t.coefficient(canonical_rotation(reverse(cls.representative()))) == v.conj());
      }
    }
  }
}

TEST_CASE("gram_from_vectors") {
  CHECK(gram_from_vectors({{1, 0, 0}}) == GramMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK(gram_from_vectors({{0, 1, 1}}) == GramMatrix{{0, 0, 0}, {0, 1, 1}, {0, 1, 1}});
  CHECK(gram_from_vectors({{1, 0, 0}}) * GR(7) == GramMatrix{{7, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  // 7 Q(1,0,0) + 7 Q(0,1,1)
  CHECK((gram_from_vectors({{1, 0, 0}}) + gram_from_vectors({{0, 1, 1}})) * GR(7) == known_p7r3_gram());
  CHECK_THROWS_AS(gram_from_vectors({{1, 0}, {1, 0, 0}}), StructureError);

  const GramMatrix complex = gram_from_vectors({{GR(1), GR(0, 1)}});
  CHECK(complex(0, 1) == GR(0, -1));
  CHECK(complex.is_hermitian());
}

TEST_CASE("psd_check_exact examples") {
  const PsdResult bad = psd_check_exact({{6, 6}, {6, 2}});
  CHECK_FALSE(bad.psd);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == std::vector<GR>{1, -1});
  CHECK(GramMatrix({{6, 6}, {6, 2}}).quadratic_form(*bad.witness) == GR(-4));

  const PsdResult good = psd_check_exact(known_p7r3_gram());
  CHECK(good.psd);
  CHECK_FALSE(good.witness);
  CHECK(good.pivots == std::vector<Rational>{7, 7, 0});

  CHECK(psd_check_exact({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).psd);
  CHECK(psd_check_exact(GramMatrix(0)).psd);
  CHECK_THROWS_AS(psd_check_exact({{1, 2}, {3, 1}}), StructureError);
}

TEST_CASE("psd_check_exact zero diagonal with coupling") {
  const GramMatrix g{{0, GR(1, 1)}, {GR(1, -1), 0}};
  const PsdResult res = psd_check_exact(g);
  CHECK_FALSE(res.psd);
  REQUIRE(res.witness);
  CHECK(sgn(g.quadratic_form(*res.witness).re()) < 0);
}

TEST_CASE("psd_check_exact: Gram matrices of vectors are PSD, witnesses are negative") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::vector<GR>> vs(1 + rng() % 4, std::vector<GR>(n));
    for (auto& v : vs) {
      for (auto& z : v) z = random_gr(rng, trial % 2 == 0);
    }
    const GramMatrix g = gram_from_vectors(vs);
    CHECK(psd_check_exact(g).psd);

    const GramMatrix h = random_hermitian(rng, n);
    const PsdResult res = psd_check_exact(h);
    if (!res.psd) {
      REQUIRE(res.witness);
      const GR form = h.quadratic_form(*res.witness);
      CHECK(form.is_real());
      CHECK(sgn(form.re()) < 0);
    } else {
      for (const auto& pv : res.pivots) CHECK(sgn(pv) >= 0);
    }
  }
}

TEST_CASE("verify_certificate: p = 7 certificates") {
  Certificate c3{7, 3, {{known_p7r3_block(), known_p7r3_gram()}}};
  const VerifyReport r3 = verify_certificate(c3);
  CHECK(r3.matched);
  CHECK(r3.psd);

  Certificate c1{7, 1, {{block(std::nullopt, HalfLetter::b, {"AAA"}), {{7}}}}};
  CHECK(verify_certificate(c1).ok());

  Certificate c0{7, 0, {{block(std::nullopt, HalfLetter::a, {"AAA"}), {{1}}}}};
  CHECK(verify_certificate(c0).ok());

  Certificate c2{7, 2, {{block(std::nullopt, HalfLetter::a, {"BAA", "ABA", "AAB"}), {{7, 0, 0}, {0, 7, 0}, {0, 0, 7}}}}};
  CHECK(verify_certificate(c2).ok());

  for (const Certificate& c : {c0, c1, c2, c3}) {
    const Certificate swapped = swap_certificate(c);
    CHECK(swapped.r == 7 - c.r);
    CHECK(verify_certificate(swapped).ok());
  }
}

TEST_CASE("verify_certificate: diagonal Gram misses T2 and T3") {
  Certificate c{7, 3, {{known_p7r3_block(), {{7, 0, 0}, {0, 7, 0}, {0, 0, 7}}}}};
  const VerifyReport rep = verify_certificate(c);
  CHECK_FALSE(rep.matched);
  CHECK(rep.psd);

  // Oracle: sum the diagonal pair classes by hand and subtract the brute-force target.
  std::map<std::string, long> expected;
  for (std::size_t j = 0; j < 3; ++j) expected[pair_class_oracle(known_p7r3_block(), j, j)] += 7;
  for (const auto& [cls, v] : oracle::hurwitz_brute(7, 3)) expected[cls] -= v;
  std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
  CHECK(expected == std::map<std::string, long>{{"AAABABB", -7}, {"AAABBAB", -7}});

  std::map<std::string, long> got;
  for (const auto& [cls, v] : rep.residual.terms()) got[cls.str()] = v.re().get_num().get_si();
  CHECK(got == expected);
}

TEST_CASE("verify_certificate reports a PSD witness") {
  Certificate c{6, 3, {{block(HalfLetter::a, HalfLetter::b, {"AB", "BA"}), {{6, 6}, {6, 2}}}}};
  const VerifyReport rep = verify_certificate(c);
  CHECK(rep.matched);
  CHECK_FALSE(rep.psd);
  REQUIRE(rep.witness);
  CHECK(*rep.witness_value == -4);
  CHECK(*rep.witness_block == 0);
}

TEST_CASE("verify_certificate: mixed blocks sum independently") {
  // Split 7 Q(1,0,0) + 7 Q(0,1,1) into two blocks with the same shape.
  Certificate c{7, 3,
                {{known_p7r3_block(), {{7, 0, 0}, {0, 0, 0}, {0, 0, 0}}},
                 {known_p7r3_block(), {{0, 0, 0}, {0, 7, 7}, {0, 7, 7}}}}};
  CHECK(verify_certificate(c).ok());
}

TEST_CASE("verify_certificate structural errors") {
  Certificate wrong_dim{7, 3, {{known_p7r3_block(), {{7, 0}, {0, 7}}}}};
  CHECK_THROWS_AS(verify_certificate(wrong_dim), StructureError);

  Certificate wrong_degree{6, 3, {{known_p7r3_block(), known_p7r3_gram()}}};
  CHECK_THROWS_AS(verify_certificate(wrong_degree), StructureError);

  Certificate wrong_b{7, 2, {{known_p7r3_block(), known_p7r3_gram()}}};
  CHECK_THROWS_AS(verify_certificate(wrong_b), StructureError);

  Certificate non_hermitian{7, 3, {{known_p7r3_block(), {{7, 1, 0}, {0, 7, 7}, {0, 7, 7}}}}};
  CHECK_THROWS_AS(verify_certificate(non_hermitian), StructureError);

  Certificate repeated{7, 3, {{block(HalfLetter::b, std::nullopt, {"AAB", "AAB"}), {{1, 0}, {0, 1}}}}};
  CHECK_THROWS_AS(verify_certificate(repeated), StructureError);

  CHECK_THROWS_AS((Word("")), InvalidInput);
}
