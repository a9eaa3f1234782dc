#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multitwist/config.hpp"
#include "multitwist/matrix.hpp"
#include "multitwist/spectral.hpp"

namespace multitwist {

enum class Generator { kA, kB };

struct Letter {
  Generator generator = Generator::kA;
  long exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in T_A, T_B. Letters act left to right: "A B" is the matrix product
/// gamma_1 * gamma_2 in written order.
class MultiTwistWord {
 public:
  MultiTwistWord() = default;
  explicit MultiTwistWord(std::vector<Letter> letters);

  /// Grammar: tokens A or B with optional ^<int> (braces allowed), e.g.
  /// "A B^-2 A^3". Throws kParse.
  static MultiTwistWord parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t length() const noexcept { return letters_.size(); }

  MultiTwistWord inverse() const;
  /// Merges adjacent equal generators and drops zero exponents.
  MultiTwistWord reduced() const;
  /// Reduced, then merges the first and last letters while they agree.
  MultiTwistWord cyclically_reduced() const;
  std::string to_string() const;

  friend MultiTwistWord operator*(const MultiTwistWord& u, const MultiTwistWord& v);
  friend bool operator==(const MultiTwistWord&, const MultiTwistWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Real 2x2 matrix [[a, b], [c, d]].
template <typename Real>
struct Matrix2 {
  Real a = 1, b = 0, c = 0, d = 1;

  Real det() const { return a * d - b * c; }
  Real trace() const { return a + d; }
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
};
using Matrix2d = Matrix2<double>;
using Matrix2q = Matrix2<Quad>;

/// gamma_1(mu) = [[1, mu], [0, 1]], gamma_2(mu) = [[1, 0], [-mu, 1]].
Matrix2d eval_word(const MultiTwistWord& w, double mu);
Matrix2q eval_word(const MultiTwistWord& w, const Quad& mu);

/// Exact word matrix when s = mu^2 is an integer. Products of the generators
/// always have the shape [[a, b mu], [c mu, d]] with integers a, b, c, d.
struct ExactWordMatrix {
  BigInt a = 1, b = 0, c = 0, d = 1;
  BigInt trace() const { return a + d; }
};
ExactWordMatrix eval_word_exact(const MultiTwistWord& w, const BigInt& mu_squared);

/// The value of mu used for word computations: binary128 always, and the
/// integer mu^2 when there is one.
struct MuContext {
  double mu = 0.0;
  Quad mu_quad = 0;
  std::optional<BigInt> mu_squared;

  static MuContext from_value(double mu);
  static MuContext from_value(const Quad& mu);
  static MuContext from_mu_squared(const BigInt& s);
  /// Uses graph_mu_quad plus the exact integer test.
  static MuContext from_graph(const ConfigurationGraph& g);
};

enum class ElementKind { kIdentity, kElliptic, kParabolic, kHyperbolic };
std::string to_string(ElementKind kind);

struct ElementType {
  ElementKind kind = ElementKind::kIdentity;
  double trace = 0.0;
  /// Elliptic only: order in PSL(2, R); empty when the rotation angle is not
  /// a recognisable rational multiple of pi.
  std::optional<long> order;
  /// Hyperbolic only.
  double translation_length = 0.0;
  double dilatation = 1.0;
};

/// Trace-based classification. |tr| within tol of 2 is parabolic unless the
/// matrix is +-I. Throws kToleranceAmbiguous when the rounding error of the
/// trace is too large to separate |tr| from 2 at the requested tol.
ElementType element_type(const Matrix2q& m, double tol = 1e-9);
ElementType element_type(const Matrix2d& m, double tol = 1e-9);

/// Word-level classification: cyclic reduction first (one letter is always
/// parabolic), then exact traces when mu^2 is an integer, binary128 otherwise.
ElementType word_type(const MultiTwistWord& w, const MuContext& mu, double tol = 1e-9);

enum class AutomorphismKind { kPseudoAnosov, kMultiTwistRelated, kFiniteOrder };
std::string to_string(AutomorphismKind kind);

struct AutomorphismClass {
  AutomorphismKind kind = AutomorphismKind::kFiniteOrder;
  ElementType element;
  double dilatation = 1.0;  ///< pseudo-Anosov only
};

AutomorphismClass automorphism_class(const MultiTwistWord& w, const ConfigurationGraph& g,
                                     double tol = 1e-9);
AutomorphismClass automorphism_class(const MultiTwistWord& w, const MuContext& mu,
                                     double tol = 1e-9);

/// Dilatation of a hyperbolic trace: the larger root of x^2 - |t| x + 1.
double dilatation_from_trace(double trace);

/// Larger root of x^2 + (2 - mu^2) x + 1. Throws kMuNotAboveTwo.
double min_dilatation(double mu);

/// exp(asinh(sqrt(cos(3 pi / 7)))) for mu <= 2, min_dilatation(mu) above.
double dilatation_floor(double mu);
double recessive_dilatation_floor();

struct Fraction {
  long num = 0;
  long den = 1;
};

/// Best rational approximation num/den of x with den <= max_den, accepted
/// only if |x - num/den| <= tol.
std::optional<Fraction> rational_reconstruction(double x, long max_den = 1'000'000, double tol = 1e-9);

/// Triangle group signature; 0 encodes infinity. Entries sorted ascending
/// with infinities last.
struct TriangleSignature {
  long p = 0, q = 0, r = 0;
  long product_order = 0;  ///< projective order of gamma_1 gamma_2
  std::string to_string() const;
  friend bool operator==(const TriangleSignature&, const TriangleSignature&) = default;
};
inline constexpr long kInfinity = 0;

/// From theta = 2 arccos(mu / 2) = pi s / q: (q, inf, inf) when s = 1,
/// (2, q, inf) when s = 2 and q is odd.
TriangleSignature triangle_signature_from_mu(const Quad& mu);
/// Throws kNotRecessive / kRationalReconstructionFailed.
TriangleSignature triangle_signature(const ConfigurationGraph& g);

}  // namespace multitwist
