#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "multitwist/config.hpp"
#include "multitwist/matrix.hpp"
#include "multitwist/polynomial.hpp"

namespace multitwist {

inline constexpr double kDefaultTol = 1e-12;

/// Perron-Frobenius data of a non-negative irreducible matrix.
struct PFData {
  double mu = 0.0;             ///< PF eigenvalue (spectral radius)
  std::vector<double> vector;  ///< positive eigenvector, max entry 1
  double residual = 0.0;       ///< ||M v - mu v||_inf
  double lower = 0.0;          ///< min_i (M v)_i / v_i
  double upper = 0.0;          ///< max_i (M v)_i / v_i
  std::size_t iterations = 0;
};

struct PFOptions {
  double tol = kDefaultTol;
  std::size_t max_iterations = 2'000'000;
};

/// True iff the support digraph of a square matrix is strongly connected.
bool is_irreducible(const RealMatrix& m);

/// Power iteration with sup-norm normalization. Stops once the
/// Collatz-Wielandt bracket min (Mv)_i/v_i <= mu <= max (Mv)_i/v_i is narrower
/// than tol * max(1, mu). A unit shift is applied when the diagonal has a
/// zero so that periodic (e.g. bipartite) matrices still converge.
/// Throws kNotIrreducible or kNoConvergence.
PFData pf_eigen(const RealMatrix& m, const PFOptions& options = {});
PFData pf_eigen(const IntMatrix& m, const PFOptions& options = {});

/// N N^t for a configuration graph.
IntMatrix gram_matrix(const ConfigurationGraph& g);

/// Spectral radius mu(G) = sqrt(PF eigenvalue of N N^t).
double graph_mu(const ConfigurationGraph& g, double tol = kDefaultTol);

/// det(xI - m) with exact integer coefficients (Faddeev-LeVerrier over Z).
IntPolynomial char_poly_exact(const IntMatrix& m);
IntPolynomial char_poly_exact(const BigMatrix& m);

/// Exact determinant by Bareiss elimination.
BigInt determinant(BigMatrix m);

/// Certified enclosure of a real root: lo <= root <= hi, both dyadic.
struct RootEnclosure {
  Rational lo;
  Rational hi;
  bool exact = false;  ///< lo == hi is itself the root
  double midpoint() const;
  Quad midpoint_quad() const;
  double width() const;
};

/// Largest real root via an exact Sturm chain and dyadic bisection until the
/// enclosure is narrower than tol. Throws kNoRealRoot.
RootEnclosure largest_real_root_enclosure(const IntPolynomial& p, double tol = kDefaultTol);
double largest_real_root(const IntPolynomial& p, double tol = kDefaultTol);

/// Number of distinct real roots of p.
int count_real_roots(const IntPolynomial& p);
/// Number of distinct real roots strictly greater than the integer t.
int count_real_roots_above(const IntPolynomial& p, const BigInt& t);

/// mu(G)^2 as a certified enclosure from the exact characteristic polynomial
/// of N N^t; used where more than double precision is wanted.
RootEnclosure graph_mu_squared_enclosure(const ConfigurationGraph& g, double tol = 1e-30);

/// PF eigenvalue of a symmetric non-negative irreducible integer matrix in
/// binary128: a coarse power iteration polished by Rayleigh quotient
/// iteration. The final eigenvector is checked to be positive.
Quad pf_eigenvalue_quad(const IntMatrix& m);

/// mu(G) to binary128 precision.
Quad graph_mu_quad(const ConfigurationGraph& g);

/// mu(G)^2 when it is an integer (confirmed by an exact singular
/// determinant), otherwise nullopt.
std::optional<BigInt> graph_mu_squared_integer(const ConfigurationGraph& g);

}  // namespace multitwist
