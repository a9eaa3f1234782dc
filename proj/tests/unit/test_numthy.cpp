#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "multitwist/error.hpp"
#include "multitwist/fuchsian.hpp"
#include "multitwist/numthy.hpp"
#include "multitwist/spectral.hpp"
#include "oracles.hpp"

using namespace multitwist;

namespace {

IntPolynomial cyclotomic(int n) {
  // x^n - 1 divided by every cyclotomic factor of a proper divisor.
  IntPolynomial p = IntPolynomial::monomial(1, n) - IntPolynomial{1};
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = p.exact_divide(cyclotomic(d));
  return p;
}

std::vector<double> to_double(const IntPolynomial& p) {
  std::vector<double> out;
  for (const auto& c : p.coefficients()) out.push_back(static_cast<double>(c));
  return out;
}

std::complex<double> eval(const IntPolynomial& p, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * z + static_cast<double>(p.coefficient(static_cast<std::size_t>(k)));
  return acc;
}

// Res(P, Q) = lc(P)^deg Q * prod over roots a of P of Q(a).
std::complex<double> resultant_by_roots(const IntPolynomial& p, const IntPolynomial& q) {
  std::complex<double> r = std::pow(static_cast<double>(p.leading()), q.degree());
  for (const auto& a : oracle::durand_kerner(to_double(p))) r *= eval(q, a);
  return r;
}

}  // namespace

TEST_CASE("constants") {
  CHECK(lehmer_polynomial() == IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
  CHECK(mu_quintic() == IntPolynomial{-1, 12, -31, 27, -9, 1});
  CHECK(lehmer_polynomial().is_reciprocal());
  CHECK(std::abs(lehmer_number() - 1.1762808) < 1e-7);
}

TEST_CASE("certified roots contain the oracle roots") {
  const IntPolynomial p = lehmer_polynomial();
  const auto roots = certified_roots(p);
  REQUIRE(roots.size() == 10);
  for (const auto& z : oracle::durand_kerner(to_double(p))) {
    bool inside = false;
    for (const auto& r : roots)
      inside = inside || std::abs(Complex(z.real(), z.imag()) - r.z) <= r.radius + 1e-12L;
    CHECK(inside);
  }
  CHECK_THROWS_AS(certified_roots(IntPolynomial{1, 2, 1}), Error);
  CHECK(roots_with_multiplicity(IntPolynomial{1, 2, 1}).size() == 2);
}

TEST_CASE("mahler measure examples") {
  CHECK(mahler_measure(IntPolynomial{-2, 1}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(mahler_measure(IntPolynomial{-1, 0, 1}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(mahler_measure(lehmer_polynomial()) - 1.1762808) < 1e-7);
  CHECK(std::abs(mahler_measure(lehmer_polynomial()) - largest_real_root(lehmer_polynomial())) < 2e-12);
  CHECK(mahler_measure(IntPolynomial{3, 0, 2}) == doctest::Approx(3.0).epsilon(1e-12));
  const auto cert = mahler_measure_certified(lehmer_polynomial());
  CHECK(cert.error_bound <= 1e-12);
}

TEST_CASE("mahler measure of cyclotomic products is one") {
  std::mt19937 rng(79);
  std::uniform_int_distribution<int> n(1, 30);
  for (int trial = 0; trial < 20; ++trial) {
    IntPolynomial p{1};
    for (int k = 0; k < 3; ++k) p *= cyclotomic(n(rng));
    // Certified root disks widen with the degree; 1e-9 covers degree <= 90.
    CHECK(std::abs(mahler_measure(p, 1e-9) - 1.0) < 1e-9);
  }
}

TEST_CASE("mahler measure is multiplicative") {
  std::mt19937 rng(83);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long long> a(1 + trial % 6), b(1 + (trial / 2) % 5);
    for (auto& x : a) x = c(rng);
    for (auto& x : b) x = c(rng);
    a.push_back(1 + trial % 3);
    b.push_back(1);
    std::vector<BigInt> ab(a.begin(), a.end()), bb(b.begin(), b.end());
    const IntPolynomial p(ab), q(bb);
    if (p.coefficient(0) == 0 || q.coefficient(0) == 0) continue;
    constexpr double tol = 1e-10;
    const double mp = mahler_measure(p, tol), mq = mahler_measure(q, tol);
    CHECK(std::abs(mahler_measure(p * q, tol) - mp * mq) <= 2 * tol * std::max(1.0, mp * mq));
  }
}

TEST_CASE("is_salem") {
  CHECK(is_salem(lehmer_polynomial()));
  CHECK_FALSE(is_salem(IntPolynomial{1, -3, 1}));
  CHECK_FALSE(is_salem(IntPolynomial{-2, 1}));
  CHECK_FALSE(is_salem(cyclotomic(5)));
  // x^4 - x^3 - x^2 - x + 1 is the smallest degree-four Salem polynomial.
  CHECK(is_salem(IntPolynomial{1, -1, -1, -1, 1}));
  CHECK_FALSE(is_salem(lehmer_polynomial() * lehmer_polynomial()));
}

TEST_CASE("bivariate parsing") {
  const auto p = BiPolynomial::parse("x^2 + x*(2 - y^2) + 1");
  CHECK(p.degree_y() == 2);
  CHECK(p.y_coefficient(0) == IntPolynomial{1, 2, 1});
  CHECK(p.y_coefficient(1).is_zero());
  CHECK(p.y_coefficient(2) == IntPolynomial{0, -1});
  CHECK(BiPolynomial::parse("(x-y)^2") == BiPolynomial::parse("x^2 - 2xy + y^2"));
  CHECK(BiPolynomial::parse(p.to_string()) == p);
  CHECK_THROWS_AS(BiPolynomial::parse("x +"), Error);
  CHECK_THROWS_AS(BiPolynomial::parse("z"), Error);
}

TEST_CASE("resultant examples") {
  CHECK(resultant(BiPolynomial::parse("x - y"), BiPolynomial::parse("y - 3")) == IntPolynomial{3, -1});
  CHECK(resultant(BiPolynomial::parse("y - 3"), BiPolynomial::parse("x - y")) == IntPolynomial{-3, 1});
  CHECK(resultant(BiPolynomial::parse("y^2 - x"), IntPolynomial{-2, 1}) == IntPolynomial{4, -1});
  CHECK_THROWS_AS(resultant(BiPolynomial::parse("x"), BiPolynomial::parse("y")), Error);
}

TEST_CASE("resultant against the product-over-roots oracle") {
  std::mt19937 rng(89);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    // p has constant leading coefficient in y so specialisation keeps degrees.
    const int dp = 1 + trial % 3, dq = 1 + (trial / 3) % 3;
    std::vector<IntPolynomial> pc, qc;
    for (int k = 0; k < dp; ++k) pc.push_back(IntPolynomial{c(rng), c(rng)});
    pc.push_back(IntPolynomial{1 + trial % 2});
    for (int k = 0; k < dq; ++k) qc.push_back(IntPolynomial{c(rng), c(rng)});
    qc.push_back(IntPolynomial{1});
    const BiPolynomial p(pc), q(qc);
    const IntPolynomial r = resultant(p, q);
    const IntPolynomial r_swapped = resultant(q, p);
    const BigInt sign = (dp * dq) % 2 == 0 ? 1 : -1;
    CHECK(r == r_swapped * sign);
    for (int x0 = -2; x0 <= 2; ++x0) {
      std::vector<BigInt> pv, qv;
      for (const auto& k : pc) pv.push_back(k.evaluate(BigInt(x0)));
      for (const auto& k : qc) qv.push_back(k.evaluate(BigInt(x0)));
      const auto expected = resultant_by_roots(IntPolynomial(pv), IntPolynomial(qv));
      const double got = static_cast<double>(r.evaluate(BigInt(x0)));
      CHECK(std::abs(expected.imag()) <= 1e-6 * std::max(1.0, std::abs(expected)));
      CHECK(std::abs(got - expected.real()) <= 1e-6 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("eliminating y recovers the Lehmer polynomial") {
  const auto quad = BiPolynomial::parse("x^2 + x*(2 - y^2) + 1");
  const IntPolynomial lehmer = lehmer_polynomial();
  // y = mu: the quintic is in mu^2, so substitute y^2.
  const IntPolynomial r = resultant(quad, mu_quintic().compose_power(2));
  const IntPolynomial cofactor = r.exact_divide(lehmer);
  CHECK(cofactor == lehmer);
  // y = mu^2 directly.
  const IntPolynomial r2 = resultant(BiPolynomial::parse("x^2 + x*(2 - y) + 1"), mu_quintic());
  CHECK(r2 == -lehmer);
  // Taking the quadratic literally with y a root of the quintic does not
  // produce the Lehmer polynomial.
  const IntPolynomial literal = resultant(quad, mu_quintic());
  const auto [q, rem] = literal.divide(lehmer);
  CHECK_FALSE(rem.is_zero());
  // Full loop: the largest root of the quintic gives mu_L^2, whose minimal
  // dilatation is Lehmer's number.
  const double mu = std::sqrt(largest_real_root(mu_quintic(), 1e-15));
  CHECK(std::abs(min_dilatation(mu) - largest_real_root(lehmer)) < 1e-9);
}
