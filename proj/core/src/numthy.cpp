#include "multitwist/numthy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include "multitwist/error.hpp"
#include "multitwist/spectral.hpp"

namespace multitwist {

IntPolynomial lehmer_polynomial() { return IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }

IntPolynomial mu_quintic() { return IntPolynomial{-1, 12, -31, 27, -9, 1}; }

double lehmer_number(double tol) { return largest_real_root(lehmer_polynomial(), tol); }

namespace {

constexpr long double kEps = std::numeric_limits<long double>::epsilon();

struct Horner {
  Complex value;
  Complex derivative;
  long double magnitude;  // sum |a_k| |z|^k, for the rounding bound
};

Horner horner(const std::vector<long double>& a, Complex z) {
  Complex p = 0, dp = 0;
  long double mag = 0;
  const long double r = std::abs(z);
  for (std::size_t k = a.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    mag = mag * r + std::abs(a[k]);
  }
  return {p, dp, mag};
}

}  // namespace

std::vector<CertifiedRoot> certified_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::kValidation, "the zero polynomial has no finite root set");
  const int n = p.degree();
  if (n == 0) return {};
  if (gcd(p, p.derivative()).degree() > 0)
    throw Error(ErrorKind::kValidation, "certified_roots needs a square-free polynomial");

  std::vector<long double> a;
  a.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) a.push_back(static_cast<long double>(c));
  const long double an = a.back();

  // Initial guesses on a circle enclosing all roots (Fujiwara-type bound).
  long double bound = 0;
  for (int k = 1; k <= n; ++k) {
    const long double ratio = std::abs(a[n - k] / an);
    if (ratio > 0) bound = std::max(bound, std::pow(ratio, 1.0L / k));
  }
  bound = std::max(2 * bound, 1.0L);
  const Complex centre = -a[n - 1] / (static_cast<long double>(n) * an);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = centre + std::polar(bound, angle);
  }

  std::vector<bool> done(n, false);
  bool all_done = false;
  for (int it = 0; it < 2000 && !all_done; ++it) {
    all_done = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Horner h = horner(a, z[i]);
      if (h.value == Complex(0)) {
        done[i] = true;
        continue;
      }
      const Complex w = h.value / h.derivative;
      Complex s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0L / (z[i] - z[j]);
      const Complex step = w / (1.0L - w * s);
      z[i] -= step;
      if (std::abs(step) <= 4 * kEps * std::max(1.0L, std::abs(z[i]))) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
  }

  std::vector<CertifiedRoot> out(n);
  for (int i = 0; i < n; ++i) {
    const Horner h = horner(a, z[i]);
    long double denom = std::abs(an);
    for (int j = 0; j < n; ++j)
      if (j != i) denom *= std::abs(z[i] - z[j]);
    if (!(denom > 0))
      throw Error(ErrorKind::kNoConvergence, "root approximations collided in " + p.to_string());
    const long double residual = std::abs(h.value) + 8 * n * kEps * h.magnitude;
    out[i] = {z[i], n * residual / denom};
  }
  return out;
}

std::vector<CertifiedRoot> roots_with_multiplicity(const IntPolynomial& p) {
  std::vector<CertifiedRoot> out;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].degree() < 1) continue;
    const auto roots = certified_roots(factors[k]);
    for (std::size_t rep = 0; rep <= k; ++rep) out.insert(out.end(), roots.begin(), roots.end());
  }
  return out;
}

MahlerMeasure mahler_measure_certified(const IntPolynomial& p, double tol) {
  if (p.is_zero()) throw Error(ErrorKind::kValidation, "Mahler measure of the zero polynomial is undefined");
  long double value = abs(static_cast<long double>(p.leading()));
  long double rel_err = 0;
  for (const auto& r : roots_with_multiplicity(p)) {
    const long double m = std::abs(r.z);
    value *= std::max(1.0L, m);
    rel_err += r.radius / std::max(1.0L, m);
  }
  MahlerMeasure out{static_cast<double>(value), static_cast<double>(value * rel_err + value * 64 * kEps)};
  if (out.error_bound > tol)
    throw Error(ErrorKind::kNoConvergence, "certified Mahler measure error " + std::to_string(out.error_bound) +
                                               " exceeds the tolerance");
  return out;
}

double mahler_measure(const IntPolynomial& p, double tol) { return mahler_measure_certified(p, tol).value; }

bool is_salem(const IntPolynomial& p, double tol) {
  if (p.degree() < 2 || !p.is_reciprocal()) return false;
  if (gcd(p, p.derivative()).degree() > 0) return false;
  if (count_real_roots_above(p, BigInt(1)) != 1) return false;
  int inside = 0, outside = 0, on_circle = 0;
  for (const auto& r : certified_roots(p)) {
    const long double m = std::abs(r.z);
    if (m < 1 - tol) {
      ++inside;
    } else if (m > 1 + tol) {
      ++outside;
    } else {
      ++on_circle;
    }
  }
  return inside == 1 && outside == 1 && on_circle >= 1;
}

// ---------------------------------------------------------------------------

BiPolynomial::BiPolynomial(std::vector<IntPolynomial> y_coefficients) : coeffs_(std::move(y_coefficients)) {
  normalize();
}

void BiPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BiPolynomial BiPolynomial::from_univariate(const IntPolynomial& p, char var) {
  if (var == 'x') return BiPolynomial({p});
  if (var != 'y') throw Error(ErrorKind::kValidation, "variable must be x or y");
  std::vector<IntPolynomial> c;
  for (const auto& k : p.coefficients()) c.push_back(IntPolynomial::constant(k));
  return BiPolynomial(std::move(c));
}

IntPolynomial BiPolynomial::y_coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : IntPolynomial();
}

IntPolynomial BiPolynomial::as_x_polynomial() const {
  if (degree_y() > 0) throw Error(ErrorKind::kValidation, "polynomial still depends on y");
  return y_coefficient(0);
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPolynomial> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return BiPolynomial(std::move(c));
}

std::string BiPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = coeffs_[k].to_string('x');
    if (k == 0) {
      out += c;
    } else {
      out += "(" + c + ")*y";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace {

class BiParser {
 public:
  explicit BiParser(std::string_view text) : text_(text) {}

  BiPolynomial parse() {
    BiPolynomial r = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::kParse, "polynomial \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) +
                                       ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  BiPolynomial expr() {
    BiPolynomial r = term();
    while (true) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        r += term();
      } else if (c == '-') {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  BiPolynomial term() {
    BiPolynomial r = unary();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        r = r * unary();
      } else if (c == '(' || c == 'x' || c == 'y' || std::isdigit(static_cast<unsigned char>(c))) {
        r = r * unary();
      } else {
        return r;
      }
    }
  }

  BiPolynomial unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return BiPolynomial() - unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  BiPolynomial power() {
    BiPolynomial base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    const bool brace = pos_ < text_.size() && text_[pos_] == '{';
    if (brace) ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (brace) {
      if (peek() != '}') fail("unclosed brace");
      ++pos_;
    }
    if (e > 4096) fail("exponent too large");
    BiPolynomial r({IntPolynomial::constant(1)});
    for (unsigned long k = 0; k < e; ++k) r = r * base;
    return r;
  }

  BiPolynomial atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      BiPolynomial r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (c == 'x') {
      ++pos_;
      return BiPolynomial({IntPolynomial::x()});
    }
    if (c == 'y') {
      ++pos_;
      return BiPolynomial({IntPolynomial(), IntPolynomial::constant(1)});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return BiPolynomial({IntPolynomial::constant(BigInt(std::string(text_.substr(start, pos_ - start))))});
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPolynomial BiPolynomial::parse(std::string_view text) { return BiParser(text).parse(); }

IntPolynomial determinant(std::vector<std::vector<IntPolynomial>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::kValidation, "determinant needs a square matrix");
  if (n == 0) return IntPolynomial::constant(1);
  IntPolynomial prev = IntPolynomial::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_divide(prev);
      m[i][k] = IntPolynomial();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

IntPolynomial resultant(const BiPolynomial& p, const BiPolynomial& q) {
  const int dp = p.degree_y();
  const int dq = q.degree_y();
  if (dp < 1 || dq < 1) throw Error(ErrorKind::kValidation, "resultant needs positive degree in y");
  const std::size_t size = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<IntPolynomial>> s(size, std::vector<IntPolynomial>(size));
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) s[r][r + k] = p.y_coefficient(static_cast<std::size_t>(dp - k));
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k) s[dq + r][r + k] = q.y_coefficient(static_cast<std::size_t>(dq - k));
  return determinant(std::move(s));
}

IntPolynomial resultant(const BiPolynomial& p, const IntPolynomial& q_in_y) {
  return resultant(p, BiPolynomial::from_univariate(q_in_y, 'y'));
}

}  // namespace multitwist
