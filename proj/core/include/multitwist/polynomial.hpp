#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multitwist/matrix.hpp"

namespace multitwist {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored constant term first. The zero polynomial has no coefficients;
/// every other value has a nonzero leading coefficient.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);
  /// The polynomial x.
  static IntPolynomial x() { return monomial(1, 1); }

  /// Parses text such as "x^10 + x^9 - x^7 - 3*x + 1" (also "2x^2", "-x").
  static IntPolynomial parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  BigInt coefficient(std::size_t k) const;
  const BigInt& leading() const { return coeffs_.back(); }

  IntPolynomial derivative() const;
  /// Coefficient gcd, sign of the leading coefficient kept positive.
  BigInt content() const;
  IntPolynomial primitive_part() const;
  /// p(x) -> p(x^k).
  IntPolynomial compose_power(unsigned k) const;
  /// Reverse coefficient order: x^deg p(1/x).
  IntPolynomial reversed() const;
  /// Palindromic up to a global sign (the reciprocal property).
  bool is_reciprocal() const;

  BigInt evaluate(const BigInt& x) const;
  /// Sign of p(num / 2^shift) computed exactly.
  int sign_at_dyadic(const BigInt& num, unsigned shift) const;
  double evaluate(double x) const;
  long double evaluate(long double x) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& s);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) {
    return a *= b;
  }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) {
    return a *= s;
  }
  friend IntPolynomial operator-(IntPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Exact division over Z. Throws if the quotient is not integral or the
  /// remainder is nonzero.
  IntPolynomial exact_divide(const IntPolynomial& divisor) const;
  /// Division over Z; returns (quotient, remainder) and sets `exact` to
  /// whether no fractional coefficient was needed. Requires a divisor whose
  /// leading coefficient divides every intermediate leading term; use
  /// pseudo_remainder otherwise.
  std::pair<IntPolynomial, IntPolynomial> divide(const IntPolynomial& divisor,
                                                 bool* exact = nullptr) const;
  /// lc(d)^(deg p - deg d + 1) * p mod d.
  IntPolynomial pseudo_remainder(const IntPolynomial& divisor) const;

  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Primitive gcd over Z[x] (positive leading coefficient).
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

/// Square-free decomposition p = c * prod f_k^k; returns the f_k (k = index+1),
/// trivial factors as constant 1.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

/// Sturm chain p, p', -rem(...), ... built from sign-corrected pseudo
/// remainders so that signs at any point match the rational Sturm chain.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

/// Number of distinct real roots in (lo, hi] where lo = lo_num/2^shift and
/// hi = hi_num/2^shift. Neither endpoint may be a root of the leading element.
int sturm_count(const std::vector<IntPolynomial>& chain, const BigInt& lo_num,
                const BigInt& hi_num, unsigned shift);

/// Smallest power of two strictly exceeding the Cauchy bound on |roots|.
unsigned root_bound_log2(const IntPolynomial& p);

}  // namespace multitwist
