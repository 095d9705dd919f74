#include <doctest.h>

#include <random>

#include "hurwitz_sos/error.hpp"
#include "hurwitz_sos/trace_polynomial.hpp"
#include "oracles.hpp"

using namespace hsos;

namespace {

std::map<std::string, long> as_map(const TracePolynomial& t) {
  std::map<std::string, long> m;
  for (const auto& [c, v] : t.terms()) {
    REQUIRE(v.is_real());
    REQUIRE(v.re().get_den() == 1);
    m[c.str()] = v.re().get_num().get_si();
  }
  return m;
}

std::string random_word(std::mt19937_64& rng, std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += (rng() & 1) ? 'B' : 'A';
  return s;
}

}  // namespace

TEST_CASE("canonical_rotation examples") {
  CHECK(canonical_rotation("BA").str() == "AB");
  CHECK(canonical_rotation("AAAAAAA").str() == "AAAAAAA");
  CHECK(oracle::least_rotation_brute("AABBAAB") == "AABAABB");
  CHECK(canonical_rotation("AABBAAB").str() == "AABAABB");
  CHECK(canonical_rotation("AABBAAB").b_count() == 3);
}

TEST_CASE("canonical_rotation rejects bad words") {
  CHECK_THROWS_AS(canonical_rotation(""), InvalidInput);
  CHECK_THROWS_AS(Word("ABC"), InvalidInput);
  CHECK_THROWS_AS(Word("ab"), InvalidInput);
}

TEST_CASE("Booth agrees with brute force and is rotation invariant") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t len = 1 + rng() % 16;
    const std::string w = random_word(rng, len);
    const CyclicClass c = canonical_rotation(w);
    CHECK(c.str() == oracle::least_rotation_brute(w));
    const Word rotated = Word(w).rotated(rng() % len);
    CHECK(canonical_rotation(rotated) == c);
  }
}

TEST_CASE("reverse") {
  CHECK(reverse(Word("AAB")).str() == "BAA");
  CHECK(reverse(Word("ABA")).str() == "ABA");
  CHECK(reverse(Word("AABB")).str() == "BBAA");
}

TEST_CASE("class of the reversal depends only on the class") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t len = 1 + rng() % 12;
    const Word w(random_word(rng, len));
    const Word rot = w.rotated(rng() % len);
    CHECK(canonical_rotation(reverse(w)) == canonical_rotation(reverse(rot)));
  }
}

TEST_CASE("hurwitz_expand examples") {
  CHECK(as_map(hurwitz_expand(7, 3)) ==
        std::map<std::string, long>{{"AAAABBB", 7}, {"AAABABB", 7}, {"AAABBAB", 7}, {"AABAABB", 7}, {"AABABAB", 7}});
  CHECK(as_map(hurwitz_expand(6, 3)) ==
        std::map<std::string, long>{{"AAABBB", 6}, {"AABABB", 6}, {"AABBAB", 6}, {"ABABAB", 2}});
  CHECK(as_map(hurwitz_expand(7, 0)) == std::map<std::string, long>{{"AAAAAAA", 1}});
  CHECK(as_map(hurwitz_expand(2, 1)) == std::map<std::string, long>{{"AB", 2}});
  CHECK(as_map(hurwitz_expand(1, 0)) == std::map<std::string, long>{{"A", 1}});
}

TEST_CASE("hurwitz_expand rejects r out of range") {
  CHECK_THROWS_AS(hurwitz_expand(7, 8), InvalidInput);
  CHECK_THROWS_AS(hurwitz_expand(7, -1), InvalidInput);
  CHECK_THROWS_AS(hurwitz_expand(0, 0), InvalidInput);
}

TEST_CASE("hurwitz_expand matches the bitmask oracle and sums to C(p,r)") {
  for (int p = 1; p <= 12; ++p) {
    for (int r = 0; r <= p; ++r) {
      const TracePolynomial t = hurwitz_expand(p, r);
      CHECK(as_map(t) == oracle::hurwitz_brute(p, r));
      CHECK(t.total() == GaussianRational(static_cast<long>(binomial(p, r))));
    }
  }
}

TEST_CASE("prime p gives uniform coefficient p") {
  for (int p : {2, 3, 5, 7, 11}) {
    for (int r = 1; r < p; ++r) {
      const TracePolynomial t = hurwitz_expand(p, r);
      for (const auto& [c, v] : t.terms()) CHECK(v == GaussianRational(p));
    }
  }
}

TEST_CASE("swap_letters") {
  TracePolynomial single(7);
  single.add(canonical_rotation("AAAAAAB"), GaussianRational(7));
  TracePolynomial expected(7);
  expected.add(canonical_rotation("ABBBBBB"), GaussianRational(7));
  CHECK(swap_letters(single) == expected);

  CHECK(swap_letters(TracePolynomial(5)).empty());
  CHECK(swap_letters(hurwitz_expand(7, 3)) == hurwitz_expand(7, 4));
  for (int p = 1; p <= 10; ++p) {
    for (int r = 0; r <= p; ++r) {
      const TracePolynomial t = hurwitz_expand(p, r);
      CHECK(swap_letters(t) == hurwitz_expand(p, p - r));
      CHECK(swap_letters(swap_letters(t)) == t);
    }
  }
}

TEST_CASE("TracePolynomial drops cancelled terms and checks degree") {
  TracePolynomial t(3);
  t.add(canonical_rotation("AAB"), GaussianRational(2));
  t.add(canonical_rotation("BAA"), GaussianRational(-2));
  CHECK(t.empty());
  CHECK_THROWS_AS(t.add(canonical_rotation("AB"), GaussianRational(1)), StructureError);
  t.add(canonical_rotation("ABB"), GaussianRational(0));
  CHECK(t.empty());
}
