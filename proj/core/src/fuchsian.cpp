#include "multitwist/fuchsian.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "multitwist/classify.hpp"
#include "multitwist/error.hpp"

namespace multitwist {

MultiTwistWord::MultiTwistWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if (l.exponent == 0) throw Error(ErrorKind::kValidation, "word exponents must be nonzero");
}

MultiTwistWord MultiTwistWord::parse(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::kParse, "word \"" + std::string(text) + "\": " + why);
  };
  skip_space();
  while (i < text.size()) {
    const char g = text[i];
    Letter l;
    if (g == 'A') {
      l.generator = Generator::kA;
    } else if (g == 'B') {
      l.generator = Generator::kB;
    } else {
      fail(std::string("unexpected character '") + g + "'");
    }
    ++i;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const bool brace = i < text.size() && text[i] == '{';
      if (brace) ++i;
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      const std::string num(text.substr(start, i - start));
      if (num.empty() || num == "-" || num == "+") fail("missing exponent");
      try {
        l.exponent = std::stol(num);
      } catch (const std::exception&) {
        fail("exponent out of range");
      }
      if (brace) {
        if (i >= text.size() || text[i] != '}') fail("unclosed brace");
        ++i;
      }
      if (l.exponent == 0) fail("zero exponent");
    }
    out.push_back(l);
    skip_space();
  }
  return MultiTwistWord(std::move(out));
}

MultiTwistWord MultiTwistWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return MultiTwistWord(std::move(out));
}

MultiTwistWord MultiTwistWord::reduced() const {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().generator == l.generator) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  MultiTwistWord w;
  w.letters_ = std::move(out);
  return w;
}

MultiTwistWord MultiTwistWord::cyclically_reduced() const {
  std::vector<Letter> l = reduced().letters_;
  // A reduced word alternates generators, so at most one merge is needed
  // per pass; repeat since a cancellation exposes a new pair.
  while (l.size() >= 2 && l.front().generator == l.back().generator) {
    l.front().exponent += l.back().exponent;
    l.pop_back();
    if (l.front().exponent == 0) {
      l.erase(l.begin());
      MultiTwistWord tmp;
      tmp.letters_ = std::move(l);
      l = tmp.reduced().letters_;
    }
  }
  MultiTwistWord w;
  w.letters_ = std::move(l);
  return w;
}

std::string MultiTwistWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) os << ' ';
    os << (letters_[k].generator == Generator::kA ? 'A' : 'B');
    if (letters_[k].exponent != 1) os << '^' << letters_[k].exponent;
  }
  return os.str();
}

MultiTwistWord operator*(const MultiTwistWord& u, const MultiTwistWord& v) {
  std::vector<Letter> l = u.letters_;
  l.insert(l.end(), v.letters_.begin(), v.letters_.end());
  return MultiTwistWord(std::move(l));
}

namespace {

template <typename Real>
Matrix2<Real> eval_generic(const MultiTwistWord& w, const Real& mu) {
  Matrix2<Real> m;
  for (const auto& l : w.letters()) {
    const Real k = Real(l.exponent) * mu;
    Matrix2<Real> g;
    if (l.generator == Generator::kA) {
      g.b = k;
    } else {
      g.c = -k;
    }
    m = m * g;
  }
  return m;
}

}  // namespace

Matrix2d eval_word(const MultiTwistWord& w, double mu) { return eval_generic<double>(w, mu); }
Matrix2q eval_word(const MultiTwistWord& w, const Quad& mu) { return eval_generic<Quad>(w, mu); }

ExactWordMatrix eval_word_exact(const MultiTwistWord& w, const BigInt& s) {
  ExactWordMatrix m;
  for (const auto& l : w.letters()) {
    ExactWordMatrix g;
    if (l.generator == Generator::kA) {
      g.b = l.exponent;
    } else {
      g.c = -l.exponent;
    }
    // [[a, b mu], [c mu, d]] * [[a', b' mu], [c' mu, d']] with mu^2 = s.
    ExactWordMatrix r;
    r.a = m.a * g.a + m.b * g.c * s;
    r.b = m.a * g.b + m.b * g.d;
    r.c = m.c * g.a + m.d * g.c;
    r.d = m.c * g.b * s + m.d * g.d;
    m = std::move(r);
  }
  return m;
}

MuContext MuContext::from_value(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw Error(ErrorKind::kValidation, "mu must be positive");
  MuContext c;
  c.mu = mu;
  c.mu_quad = mu;
  if (mu == std::floor(mu) && mu < 1e9) c.mu_squared = BigInt(static_cast<long long>(mu * mu));
  return c;
}

MuContext MuContext::from_value(const Quad& mu) {
  if (!(mu > 0)) throw Error(ErrorKind::kValidation, "mu must be positive");
  MuContext c;
  c.mu = static_cast<double>(mu);
  c.mu_quad = mu;
  return c;
}

MuContext MuContext::from_mu_squared(const BigInt& s) {
  if (s <= 0) throw Error(ErrorKind::kValidation, "mu^2 must be positive");
  MuContext c;
  c.mu_quad = sqrt(Quad(s));
  c.mu = static_cast<double>(c.mu_quad);
  c.mu_squared = s;
  return c;
}

MuContext MuContext::from_graph(const ConfigurationGraph& g) {
  if (auto s = graph_mu_squared_integer(g)) return from_mu_squared(*s);
  return from_value(graph_mu_quad(g));
}

std::string to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::kIdentity: return "identity";
    case ElementKind::kElliptic: return "elliptic";
    case ElementKind::kParabolic: return "parabolic";
    case ElementKind::kHyperbolic: return "hyperbolic";
  }
  return "?";
}

std::string to_string(AutomorphismKind kind) {
  switch (kind) {
    case AutomorphismKind::kPseudoAnosov: return "pseudoAnosov";
    case AutomorphismKind::kMultiTwistRelated: return "multiTwistRelated";
    case AutomorphismKind::kFiniteOrder: return "finiteOrder";
  }
  return "?";
}

double dilatation_from_trace(double t) {
  const double a = std::abs(t);
  if (!(a > 2.0)) throw Error(ErrorKind::kValidation, "trace is not hyperbolic");
  return 0.5 * (a + std::sqrt((a - 2.0) * (a + 2.0)));
}

namespace {

Quad dilatation_from_trace_quad(const Quad& t) {
  const Quad a = abs(t);
  return (a + sqrt((a - 2) * (a + 2))) / 2;
}

ElementType hyperbolic(const Quad& t) {
  ElementType e;
  e.kind = ElementKind::kHyperbolic;
  e.trace = static_cast<double>(t);
  const Quad lambda = dilatation_from_trace_quad(t);
  e.dilatation = static_cast<double>(lambda);
  e.translation_length = static_cast<double>(2 * log(lambda));
  return e;
}

Matrix2q power(Matrix2q m, long n) {
  Matrix2q r;
  while (n > 0) {
    if (n & 1) r = r * m;
    m = m * m;
    n >>= 1;
  }
  return r;
}

std::optional<long> elliptic_order(const Matrix2q& m) {
  const Quad t = abs(m.trace());
  // Rotation angle alpha with |tr| = 2 cos(alpha), alpha in (0, pi/2].
  const Quad alpha = atan2(sqrt((2 - t) * (2 + t)), t);
  const double x = static_cast<double>(alpha / boost::math::constants::pi<Quad>());
  auto f = rational_reconstruction(x);
  if (!f) return std::nullopt;
  const Matrix2q p = power(m, f->den);
  const double scale = static_cast<double>(abs(m.a) + abs(m.b) + abs(m.c) + abs(m.d));
  const double dev = static_cast<double>(std::max<Quad>(std::max<Quad>(abs(p.b), abs(p.c)), abs(abs(p.a) - 1)) + abs(p.a - p.d));
  if (dev > 1e-6 * std::max(1.0, scale)) return std::nullopt;
  return f->den;
}

ElementType classify_numeric(const Matrix2q& m, double tol, double eps) {
  const double norm = static_cast<double>(std::max<Quad>(std::max<Quad>(abs(m.a), abs(m.b)), std::max<Quad>(abs(m.c), abs(m.d))));
  const double err = 64.0 * eps * std::max(1.0, norm * norm);
  const Quad t = m.trace();
  const double dist = static_cast<double>(abs(abs(t) - 2));
  if (err > tol && dist <= err + tol)
    throw Error(ErrorKind::kToleranceAmbiguous,
                "|trace| is within rounding error of 2; cannot separate the element type at this tolerance");
  ElementType e;
  e.trace = static_cast<double>(t);
  if (dist <= tol) {
    const bool scalar = abs(m.b) <= tol && abs(m.c) <= tol && abs(m.a - m.d) <= tol;
    e.kind = scalar ? ElementKind::kIdentity : ElementKind::kParabolic;
    return e;
  }
  if (abs(t) > 2) return hyperbolic(t);
  e.kind = ElementKind::kElliptic;
  e.order = elliptic_order(m);
  return e;
}

}  // namespace

ElementType element_type(const Matrix2q& m, double tol) {
  if (abs(m.det() - 1) > tol) throw Error(ErrorKind::kValidation, "matrix does not have determinant 1");
  return classify_numeric(m, tol, static_cast<double>(std::numeric_limits<Quad>::epsilon()));
}

ElementType element_type(const Matrix2d& m, double tol) {
  if (std::abs(m.det() - 1.0) > tol) throw Error(ErrorKind::kValidation, "matrix does not have determinant 1");
  const Matrix2q q{m.a, m.b, m.c, m.d};
  return classify_numeric(q, tol, std::numeric_limits<double>::epsilon());
}

ElementType word_type(const MultiTwistWord& w, const MuContext& mu, double tol) {
  const MultiTwistWord cw = w.cyclically_reduced();
  ElementType e;
  if (cw.empty()) {
    e.kind = ElementKind::kIdentity;
    e.trace = 2.0;
    return e;
  }
  if (cw.length() == 1) {
    // Conjugate to a nonzero power of a generator.
    e.kind = ElementKind::kParabolic;
    e.trace = 2.0;
    return e;
  }
  if (mu.mu_squared) {
    const ExactWordMatrix m = eval_word_exact(cw, *mu.mu_squared);
    const BigInt t = m.trace();
    const BigInt at = abs(t);
    if (at > 2) return hyperbolic(Quad(t));
    e.trace = static_cast<double>(t);
    if (at == 2) {
      e.kind = (m.b == 0 && m.c == 0) ? ElementKind::kIdentity : ElementKind::kParabolic;
      return e;
    }
    e.kind = ElementKind::kElliptic;
    e.order = at == 0 ? 2 : 3;
    return e;
  }
  return element_type(eval_word(cw, mu.mu_quad), tol);
}

AutomorphismClass automorphism_class(const MultiTwistWord& w, const MuContext& mu, double tol) {
  AutomorphismClass c;
  c.element = word_type(w, mu, tol);
  switch (c.element.kind) {
    case ElementKind::kHyperbolic:
      c.kind = AutomorphismKind::kPseudoAnosov;
      c.dilatation = c.element.dilatation;
      break;
    case ElementKind::kParabolic:
      c.kind = AutomorphismKind::kMultiTwistRelated;
      break;
    case ElementKind::kElliptic:
    case ElementKind::kIdentity:
      c.kind = AutomorphismKind::kFiniteOrder;
      break;
  }
  return c;
}

AutomorphismClass automorphism_class(const MultiTwistWord& w, const ConfigurationGraph& g, double tol) {
  if (!g.is_connected()) throw Error(ErrorKind::kNotConnected, "automorphism_class needs a connected configuration");
  return automorphism_class(w, MuContext::from_graph(g), tol);
}

double min_dilatation(double mu) {
  if (!(mu > 2.0)) throw Error(ErrorKind::kMuNotAboveTwo, "min_dilatation needs mu > 2");
  // (mu^2 - 2)^2 - 4 = mu^2 (mu - 2)(mu + 2), which keeps precision near mu = 2.
  return 0.5 * (mu * mu - 2.0 + mu * std::sqrt((mu - 2.0) * (mu + 2.0)));
}

double recessive_dilatation_floor() {
  return std::exp(std::asinh(std::sqrt(std::cos(3.0 * std::numbers::pi / 7.0))));
}

double dilatation_floor(double mu) {
  if (!(mu > 0.0)) throw Error(ErrorKind::kValidation, "mu must be positive");
  return mu <= 2.0 ? recessive_dilatation_floor() : min_dilatation(mu);
}

std::optional<Fraction> rational_reconstruction(double x, long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents h/k.
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0;
    const long k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    if (std::abs(x - static_cast<double>(h2) / static_cast<double>(k2)) <= tol) return Fraction{h2, k2};
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = r - a;
    if (frac == 0.0) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

std::string TriangleSignature::to_string() const {
  auto one = [](long v) { return v == kInfinity ? std::string("inf") : std::to_string(v); };
  return "(" + one(p) + ", " + one(q) + ", " + one(r) + ")";
}

TriangleSignature triangle_signature_from_mu(const Quad& mu) {
  if (!(mu > 0 && mu < 2))
    throw Error(ErrorKind::kNotRecessive, "triangle signature needs 0 < mu < 2");
  const Quad theta = 2 * acos(mu / 2);
  const double x = static_cast<double>(theta / boost::math::constants::pi<Quad>());
  const auto f = rational_reconstruction(x);
  if (!f) throw Error(ErrorKind::kRationalReconstructionFailed, "theta / pi is not a recognisable rational");
  TriangleSignature sig;
  if (f->num == 1) {
    sig = {f->den, kInfinity, kInfinity, 0};
  } else if (f->num == 2 && f->den % 2 == 1) {
    sig = {2, f->den, kInfinity, 0};
  } else {
    throw Error(ErrorKind::kRationalReconstructionFailed,
                "theta / pi = " + std::to_string(f->num) + "/" + std::to_string(f->den) + " has no triangle shape");
  }
  const ElementType prod = element_type(eval_word(MultiTwistWord::parse("A B"), mu), 1e-20);
  if (prod.kind != ElementKind::kElliptic || !prod.order)
    throw Error(ErrorKind::kInternalInconsistency, "gamma_1 gamma_2 is not elliptic of finite order");
  sig.product_order = *prod.order;
  return sig;
}

TriangleSignature triangle_signature(const ConfigurationGraph& g) {
  const FamilyLabel label = family_of(g);
  if (label.kind != FamilyKind::kRecessive)
    throw Error(ErrorKind::kNotRecessive, label.name() + " is not recessive");
  return triangle_signature_from_mu(graph_mu_quad(g));
}

}  // namespace multitwist
