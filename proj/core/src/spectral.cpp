#include "multitwist/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "multitwist/error.hpp"

namespace multitwist {

namespace {

bool reaches_all(const RealMatrix& m, bool transpose) {
  const std::size_t n = m.rows();
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t w = 0; w < n; ++w) {
      const double e = transpose ? m(w, v) : m(v, w);
      if (e != 0.0 && !seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
    }
  }
  return count == n;
}

}  // namespace

bool is_irreducible(const RealMatrix& m) {
  if (!m.square() || m.rows() == 0) return false;
  return reaches_all(m, false) && reaches_all(m, true);
}

PFData pf_eigen(const RealMatrix& m, const PFOptions& options) {
  if (!m.square() || m.rows() == 0) throw Error(ErrorKind::kValidation, "pf_eigen needs a non-empty square matrix");
  if (!(options.tol > 0.0)) throw Error(ErrorKind::kValidation, "tolerance must be positive");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) < 0.0) throw Error(ErrorKind::kValidation, "pf_eigen needs a non-negative matrix");
  if (!is_irreducible(m)) throw Error(ErrorKind::kNotIrreducible, "support digraph is not strongly connected");

  bool zero_diagonal = false;
  for (std::size_t i = 0; i < n; ++i) zero_diagonal = zero_diagonal || m(i, i) == 0.0;
  const double shift = zero_diagonal ? 1.0 : 0.0;

  std::vector<double> v(n, 1.0);
  std::vector<double> w(n);
  PFData out;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = shift * v[i];
      for (std::size_t j = 0; j < n; ++j) s += m(i, j) * v[j];
      w[i] = s;
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double wmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = w[i] / v[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      wmax = std::max(wmax, w[i]);
    }
    lo -= shift;
    hi -= shift;
    if (hi - lo <= options.tol * std::max(1.0, hi)) {
      out.mu = 0.5 * (lo + hi);
      out.lower = lo;
      out.upper = hi;
      out.iterations = it;
      out.vector = v;
      double res = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        res = std::max(res, std::abs(w[i] - shift * v[i] - out.mu * v[i]));
      out.residual = res;
      return out;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wmax;
  }
  throw Error(ErrorKind::kNoConvergence,
              "power iteration did not converge in " + std::to_string(options.max_iterations) + " steps");
}

PFData pf_eigen(const IntMatrix& m, const PFOptions& options) {
  return pf_eigen(m.cast<double>(), options);
}

IntMatrix gram_matrix(const ConfigurationGraph& g) {
  const IntMatrix& n = g.multiplicities();
  return n * n.transpose();
}

double graph_mu(const ConfigurationGraph& g, double tol) {
  PFOptions opts;
  opts.tol = tol;
  const PFData pf = pf_eigen(gram_matrix(g), opts);
  return std::sqrt(pf.mu);
}

IntPolynomial char_poly_exact(const BigMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::kValidation, "characteristic polynomial needs a square matrix");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[n] = 1;
  BigMatrix mk = BigMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    BigMatrix am = a * mk;
    const BigInt t = am.trace();
    if (t % static_cast<long long>(k) != 0)
      throw Error(ErrorKind::kInternalInconsistency, "Faddeev-LeVerrier produced a non-integral coefficient");
    c[n - k] = -t / static_cast<long long>(k);
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k];
    mk = std::move(am);
  }
  return IntPolynomial(std::move(c));
}

BigInt determinant(BigMatrix m) {
  if (!m.square()) throw Error(ErrorKind::kValidation, "determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return BigInt(1);
  // Bareiss fraction-free elimination; every division below is exact.
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return BigInt(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntPolynomial char_poly_exact(const IntMatrix& m) {
  return char_poly_exact(m.cast<BigInt>());
}

double RootEnclosure::midpoint() const {
  return static_cast<double>((lo + hi) / 2);
}

Quad RootEnclosure::midpoint_quad() const {
  const Rational mid = (lo + hi) / 2;
  return Quad(boost::multiprecision::numerator(mid)) / Quad(boost::multiprecision::denominator(mid));
}

double RootEnclosure::width() const { return static_cast<double>(hi - lo); }

namespace {

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() < 1) return p;
  IntPolynomial g = gcd(p, p.derivative());
  return p.exact_divide(g).primitive_part();
}

Rational dyadic(const BigInt& num, unsigned shift) {
  return Rational(num, BigInt(1) << shift);
}

}  // namespace

RootEnclosure largest_real_root_enclosure(const IntPolynomial& p, double tol) {
  if (p.is_zero() || p.degree() < 1) throw Error(ErrorKind::kNoRealRoot, "polynomial " + p.to_string() + " has no roots");
  if (!(tol > 0.0)) throw Error(ErrorKind::kValidation, "tolerance must be positive");
  const IntPolynomial sf = squarefree_part(p);
  const auto chain = sturm_chain(sf);
  const unsigned bits = root_bound_log2(sf);
  BigInt lo = -(BigInt(1) << bits);
  BigInt hi = BigInt(1) << bits;
  unsigned shift = 0;
  if (sturm_count(chain, lo, hi, shift) == 0)
    throw Error(ErrorKind::kNoRealRoot, "polynomial " + p.to_string() + " has no real root");
  // Invariant: the largest root lies in (lo, hi] / 2^shift.
  while (static_cast<double>(dyadic(hi - lo, shift)) > tol) {
    lo <<= 1;
    hi <<= 1;
    ++shift;
    const BigInt mid = (lo + hi) >> 1;
    if (sturm_count(chain, mid, hi, shift) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (shift > 4000) throw Error(ErrorKind::kNoConvergence, "root bisection exceeded its budget");
  }
  RootEnclosure out;
  out.lo = dyadic(lo, shift);
  out.hi = dyadic(hi, shift);
  if (sf.sign_at_dyadic(hi, shift) == 0) {
    out.lo = out.hi;
    out.exact = true;
  }
  return out;
}

double largest_real_root(const IntPolynomial& p, double tol) {
  return largest_real_root_enclosure(p, tol).midpoint();
}

int count_real_roots(const IntPolynomial& p) {
  if (p.degree() < 1) return 0;
  const IntPolynomial sf = squarefree_part(p);
  const unsigned bits = root_bound_log2(sf);
  return sturm_count(sturm_chain(sf), -(BigInt(1) << bits), BigInt(1) << bits, 0);
}

int count_real_roots_above(const IntPolynomial& p, const BigInt& t) {
  if (p.degree() < 1) return 0;
  const IntPolynomial sf = squarefree_part(p);
  const unsigned bits = root_bound_log2(sf);
  BigInt top = BigInt(1) << bits;
  if (t >= top) return 0;
  return sturm_count(sturm_chain(sf), t, top, 0);
}

namespace {

// Solves (m - sigma I) y = x by Gaussian elimination with partial pivoting.
// A vanishing pivot means sigma is an eigenvalue to working precision; the
// pivot is then nudged, which only scales the solution.
std::vector<Quad> shifted_solve(const IntMatrix& m, const Quad& sigma, std::vector<Quad> x) {
  const std::size_t n = m.rows();
  Matrix<Quad> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Quad(m(i, j)) - (i == j ? sigma : Quad(0));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(a(i, k)) > abs(a(piv, k))) piv = i;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(x[k], x[piv]);
    }
    if (a(k, k) == 0) a(k, k) = std::numeric_limits<Quad>::epsilon();
    for (std::size_t i = k + 1; i < n; ++i) {
      const Quad f = a(i, k) / a(k, k);
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      x[i] -= f * x[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    Quad s = x[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a(k, j) * x[j];
    x[k] = s / a(k, k);
  }
  return x;
}

}  // namespace

Quad pf_eigenvalue_quad(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::kValidation, "pf_eigenvalue_quad needs a square matrix");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != m(j, i)) throw Error(ErrorKind::kValidation, "pf_eigenvalue_quad needs a symmetric matrix");
  PFOptions opts;
  opts.tol = 1e-9;
  const PFData pf = pf_eigen(m, opts);
  std::vector<Quad> x(pf.vector.begin(), pf.vector.end());
  Quad sigma = pf.mu;
  const Quad eps = std::numeric_limits<Quad>::epsilon();
  for (int it = 0; it < 12; ++it) {
    std::vector<Quad> y = shifted_solve(m, sigma, x);
    Quad big = 0;
    for (const auto& e : y)
      if (abs(e) > abs(big)) big = e;
    for (auto& e : y) e /= big;
    Quad num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Quad s = 0;
      for (std::size_t j = 0; j < n; ++j) s += Quad(m(i, j)) * y[j];
      num += y[i] * s;
      den += y[i] * y[i];
    }
    const Quad next = num / den;
    x = std::move(y);
    const bool done = abs(next - sigma) <= 16 * eps * abs(next);
    sigma = next;
    if (done) break;
  }
  // Only the PF eigenvector is positive, so positivity pins the eigenvalue.
  for (const auto& e : x)
    if (!(e > 0)) throw Error(ErrorKind::kNoConvergence, "Rayleigh refinement left the Perron-Frobenius eigenvector");
  if (abs(sigma - Quad(pf.mu)) > 1e-6 * std::max(1.0, pf.mu))
    throw Error(ErrorKind::kNoConvergence, "Rayleigh refinement drifted from the power-iteration estimate");
  return sigma;
}

Quad graph_mu_quad(const ConfigurationGraph& g) {
  return sqrt(pf_eigenvalue_quad(gram_matrix(g)));
}

std::optional<BigInt> graph_mu_squared_integer(const ConfigurationGraph& g) {
  const IntMatrix gram = gram_matrix(g);
  const Quad s = pf_eigenvalue_quad(gram);
  const Quad r = round(s);
  if (abs(s - r) > 1e-20 * std::max(Quad(1), s)) return std::nullopt;
  BigMatrix shifted = gram.cast<BigInt>();
  const BigInt k = static_cast<BigInt>(r);
  for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= k;
  if (determinant(std::move(shifted)) != 0) return std::nullopt;
  return k;
}

RootEnclosure graph_mu_squared_enclosure(const ConfigurationGraph& g, double tol) {
  return largest_real_root_enclosure(char_poly_exact(gram_matrix(g)), tol);
}

}  // namespace multitwist
