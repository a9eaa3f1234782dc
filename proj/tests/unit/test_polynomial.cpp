#include <doctest.h>

#include <algorithm>
#include <random>

#include "multitwist/error.hpp"
#include "multitwist/polynomial.hpp"

using namespace multitwist;

TEST_CASE("parse and print") {
  const auto p = IntPolynomial::parse("x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1");
  CHECK(p == IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
  CHECK(IntPolynomial::parse("2x^2 - x") == IntPolynomial{0, -1, 2});
  CHECK(IntPolynomial::parse("-x") == IntPolynomial{0, -1});
  CHECK(IntPolynomial::parse("3*x - 4") == IntPolynomial{-4, 3});
  CHECK(IntPolynomial{-1, 0, 1}.to_string() == "x^2 - 1");
  CHECK(IntPolynomial::parse(p.to_string()) == p);
  CHECK_THROWS_AS(IntPolynomial::parse("x^"), Error);
  CHECK_THROWS_AS(IntPolynomial::parse("y + 1"), Error);
}

TEST_CASE("arithmetic and division") {
  const IntPolynomial a{1, 1};
  const IntPolynomial b{-1, 1};
  CHECK(a * b == IntPolynomial{-1, 0, 1});
  CHECK((a * b).exact_divide(a) == b);
  CHECK_THROWS_AS(IntPolynomial({1, 0, 1}).exact_divide(a), Error);
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(IntPolynomial{0, 0, 3}.derivative() == IntPolynomial{0, 6});
  CHECK(IntPolynomial{2, 4, 6}.content() == 2);
  CHECK(IntPolynomial{1, 0, 1}.compose_power(3) == IntPolynomial{1, 0, 0, 0, 0, 0, 1});
  CHECK(IntPolynomial{1, 2, 3}.reversed() == IntPolynomial{3, 2, 1});
}

TEST_CASE("reciprocity") {
  CHECK(IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}.is_reciprocal());
  CHECK(IntPolynomial{1, -3, 1}.is_reciprocal());
  CHECK(IntPolynomial{-1, 0, 1}.is_reciprocal());  // anti-palindromic
  CHECK_FALSE(IntPolynomial{-2, 1}.is_reciprocal());
}

TEST_CASE("gcd and square-free decomposition") {
  const IntPolynomial x1{-1, 1}, x2{-2, 1}, x3{1, 0, 1};
  const IntPolynomial p = x1 * x1 * x1 * x2 * x3 * x3;
  CHECK(gcd(p, p.derivative()) == x1 * x1 * x3);
  const auto f = squarefree_decomposition(p * BigInt(6));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == x2);
  CHECK(f[1] == x3);
  CHECK(f[2] == x1);
}

TEST_CASE("exact sign at dyadic points") {
  const IntPolynomial p{-2, 0, 1};  // x^2 - 2
  CHECK(p.sign_at_dyadic(BigInt(3), 1) > 0);   // 1.5
  CHECK(p.sign_at_dyadic(BigInt(5), 2) < 0);   // 1.25
  CHECK(p.sign_at_dyadic(BigInt(-3), 1) > 0);  // -1.5
  CHECK(IntPolynomial{-1, 2}.sign_at_dyadic(BigInt(1), 1) == 0);
}

TEST_CASE("Sturm counts match brute-force sign changes") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> root(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    IntPolynomial p{1};
    std::vector<int> roots;
    const int deg = 1 + trial % 5;
    for (int k = 0; k < deg; ++k) {
      roots.push_back(root(rng));
      p *= IntPolynomial{-roots.back(), 1};
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    p *= IntPolynomial{1, 0, 1};  // no real roots added
    const auto chain = sturm_chain(p);
    // Count roots in (lo, hi] with half-integer endpoints.
    for (int lo = -7; lo < 7; ++lo) {
      const int expected = static_cast<int>(std::count_if(roots.begin(), roots.end(), [&](int r) {
        return 2 * r > 2 * lo + 1 && 2 * r <= 2 * (lo + 3) + 1;
      }));
      CHECK(sturm_count(chain, BigInt(2 * lo + 1), BigInt(2 * (lo + 3) + 1), 1) == expected);
    }
  }
}
