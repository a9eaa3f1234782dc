#include "multitwist/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "multitwist/error.hpp"

namespace multitwist {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

int sign_of(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) {
  return IntPolynomial(std::vector<BigInt>{c});
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * k;
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, abs_big(c));
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v(coeffs_);
  for (auto& c : v) c /= g;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::compose_power(unsigned k) const {
  if (is_zero()) return {};
  if (k == 0) return constant(evaluate(BigInt(1)));
  std::vector<BigInt> v((coeffs_.size() - 1) * k + 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<BigInt> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(v));
}

bool IntPolynomial::is_reciprocal() const {
  if (is_zero()) return false;
  // A root at zero breaks reciprocity even when the padded list is symmetric.
  if (coeffs_.front() == 0) return false;
  const std::size_t n = coeffs_.size();
  bool plus = true;
  bool minus = true;
  for (std::size_t k = 0; k < n; ++k) {
    plus = plus && coeffs_[k] == coeffs_[n - 1 - k];
    minus = minus && coeffs_[k] == -coeffs_[n - 1 - k];
  }
  return plus || minus;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at_dyadic(const BigInt& num, unsigned shift) const {
  if (is_zero()) return 0;
  // Horner on the homogenized form sum c_k num^k 2^{shift (deg - k)}.
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= num;
    acc += *it << (shift * static_cast<unsigned>(it - coeffs_.rbegin()));
  }
  return sign_of(acc);
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + it->convert_to<double>();
  return acc;
}

long double IntPolynomial::evaluate(long double x) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + it->convert_to<long double>();
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divide(
    const IntPolynomial& divisor, bool* exact) const {
  if (divisor.is_zero()) throw Error(ErrorKind::kValidation, "division by zero polynomial");
  bool ok = true;
  std::vector<BigInt> rem(coeffs_);
  const int dd = divisor.degree();
  const BigInt& lc = divisor.leading();
  std::vector<BigInt> quot;
  if (degree() >= dd) quot.assign(static_cast<std::size_t>(degree() - dd + 1), BigInt(0));
  for (int k = degree(); k >= dd; --k) {
    const BigInt& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (top % lc != 0) {
      ok = false;
      break;
    }
    BigInt q = top / lc;
    quot[static_cast<std::size_t>(k - dd)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  if (exact != nullptr) *exact = ok;
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& divisor) const {
  bool ok = false;
  auto [q, r] = divide(divisor, &ok);
  if (!ok || !r.is_zero())
    throw Error(ErrorKind::kValidation,
                "polynomial " + divisor.to_string() + " does not divide " + to_string());
  return q;
}

IntPolynomial IntPolynomial::pseudo_remainder(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::kValidation, "division by zero polynomial");
  if (degree() < divisor.degree()) return *this;
  const BigInt lc = divisor.leading();
  const int dd = divisor.degree();
  std::vector<BigInt> rem(coeffs_);
  for (int k = degree(); k >= dd; --k) {
    BigInt top = rem[static_cast<std::size_t>(k)];
    for (auto& c : rem) c *= lc;
    if (top == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= top * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return IntPolynomial(std::move(rem));
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt mag = abs_big(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(ErrorKind::kParse, "empty polynomial");
  IntPolynomial out;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::kParse, msg + " in polynomial '" + std::string(text) + "'");
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    BigInt coef = digits.empty() ? BigInt(1) : BigInt(digits);
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) fail("dangling '*'");
      ++i;
    }
    std::size_t power = 0;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      if (s[i] != 'x') fail("unknown variable '" + std::string(1, s[i]) + "'");
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string exp;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) exp.push_back(s[i++]);
        if (exp.empty()) fail("missing exponent");
        power = static_cast<std::size_t>(std::stoul(exp));
      }
    } else if (digits.empty()) {
      fail("expected a term");
    }
    out += monomial(coef * sign, power);
  }
  return out;
}

IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = a.pseudo_remainder(b);
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive_part();
  }
  return a.primitive_part();
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  // Yun's algorithm over Q, with primitive parts to stay in Z[x].
  std::vector<IntPolynomial> factors;
  if (p.degree() < 1) return factors;
  IntPolynomial f = p.primitive_part();
  IntPolynomial df = f.derivative();
  IntPolynomial a = gcd(f, df);
  IntPolynomial b = f.exact_divide(a).primitive_part();
  IntPolynomial c = df.exact_divide(a);
  // c, b may carry rational scaling; work with primitive parts throughout.
  IntPolynomial d = c - b.derivative();
  while (b.degree() > 0) {
    IntPolynomial g = gcd(b, d);
    factors.push_back(g);
    IntPolynomial nb = b.exact_divide(g);
    IntPolynomial nc = d.exact_divide(g);
    b = nb;
    d = nc - b.derivative();
  }
  return factors;
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  std::vector<IntPolynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  IntPolynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    IntPolynomial r = a.pseudo_remainder(b);
    if (r.is_zero()) break;
    // prem = lc^k * rem; keep the sign of -rem.
    const int k = a.degree() - b.degree() + 1;
    const bool lc_power_negative = b.leading() < 0 && (k % 2 == 1);
    if (!lc_power_negative) r = -r;
    BigInt g = r.content();
    std::vector<BigInt> v(r.coefficients());
    for (auto& c : v) c /= g;
    chain.emplace_back(std::move(v));
  }
  return chain;
}

namespace {

int variations_at(const std::vector<IntPolynomial>& chain, const BigInt& num,
                  unsigned shift) {
  int count = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at_dyadic(num, shift);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int sturm_count(const std::vector<IntPolynomial>& chain, const BigInt& lo_num,
                const BigInt& hi_num, unsigned shift) {
  return variations_at(chain, lo_num, shift) - variations_at(chain, hi_num, shift);
}

unsigned root_bound_log2(const IntPolynomial& p) {
  // Cauchy: |root| <= 1 + max |c_k / c_n|.
  if (p.degree() < 1) return 0;
  BigInt lc = abs_big(p.leading());
  BigInt mx = 0;
  for (int k = 0; k < p.degree(); ++k) mx = std::max(mx, abs_big(p.coefficients()[static_cast<std::size_t>(k)]));
  BigInt bound = 1 + mx / lc + 1;  // ceil-safe
  unsigned bits = 0;
  while ((BigInt(1) << bits) <= bound) ++bits;
  return bits;
}

}  // namespace multitwist
