#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "multitwist/polynomial.hpp"

namespace multitwist {

/// x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1.
IntPolynomial lehmer_polynomial();
/// x^5 - 9x^4 + 27x^3 - 31x^2 + 12x - 1, whose largest root is mu_L^2.
IntPolynomial mu_quintic();
/// Largest real root of the Lehmer polynomial.
double lehmer_number(double tol = 1e-15);

using Complex = std::complex<long double>;

/// Root approximation z with a disk |root - z| <= radius. The union of the
/// disks contains every root, and a connected cluster of k disks holds
/// exactly k roots.
struct CertifiedRoot {
  Complex z;
  long double radius = 0;
};

/// All complex roots of a square-free polynomial (Aberth-Ehrlich iteration
/// in long double, followed by a-posteriori inclusion radii). Throws
/// kValidation for non-square-free input and kNoConvergence on failure.
std::vector<CertifiedRoot> certified_roots(const IntPolynomial& p);

/// All roots with multiplicity, via the square-free decomposition.
std::vector<CertifiedRoot> roots_with_multiplicity(const IntPolynomial& p);

struct MahlerMeasure {
  double value = 0.0;
  double error_bound = 0.0;
};

/// |a_n| * prod max(1, |root|). Throws kNoConvergence if the certified error
/// exceeds tol.
MahlerMeasure mahler_measure_certified(const IntPolynomial& p, double tol = 1e-12);
double mahler_measure(const IntPolynomial& p, double tol = 1e-12);

/// Reciprocal, square-free, exactly one real root > 1 (Sturm), exactly one
/// root of modulus < 1 - tol, and at least one further root, all of which
/// lie within tol of the unit circle.
bool is_salem(const IntPolynomial& p, double tol = 1e-8);

/// Polynomial in two variables stored as a polynomial in y whose
/// coefficients are polynomials in x: coeffs[k] is the coefficient of y^k.
class BiPolynomial {
 public:
  BiPolynomial() = default;
  explicit BiPolynomial(std::vector<IntPolynomial> y_coefficients);
  /// Lifts a polynomial in `var` ('x' or 'y').
  static BiPolynomial from_univariate(const IntPolynomial& p, char var);
  /// Parses integer expressions in x and y with + - * ^ and parentheses,
  /// e.g. "x^2 + x*(2 - y^2) + 1". Throws kParse.
  static BiPolynomial parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree_y() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<IntPolynomial>& y_coefficients() const noexcept { return coeffs_; }
  IntPolynomial y_coefficient(std::size_t k) const;
  /// Degree in y is zero: the x-polynomial it represents.
  IntPolynomial as_x_polynomial() const;

  BiPolynomial& operator+=(const BiPolynomial& o);
  BiPolynomial& operator-=(const BiPolynomial& o);
  friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
  friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
  friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b);
  friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<IntPolynomial> coeffs_;
};

/// Res_y(p, q) as the determinant of the Sylvester matrix (rows of p first),
/// computed by fraction-free Bareiss elimination over Z[x]. Throws
/// kValidation if either input has degree < 1 in y.
IntPolynomial resultant(const BiPolynomial& p, const BiPolynomial& q);
IntPolynomial resultant(const BiPolynomial& p, const IntPolynomial& q_in_y);

/// Determinant of a square matrix over Z[x] by Bareiss elimination.
IntPolynomial determinant(std::vector<std::vector<IntPolynomial>> m);

}  // namespace multitwist
