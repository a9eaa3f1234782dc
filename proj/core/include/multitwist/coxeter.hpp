#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "multitwist/config.hpp"
#include "multitwist/matrix.hpp"
#include "multitwist/spectral.hpp"

namespace multitwist {

/// Coxeter system of a small-type configuration graph: one generator per
/// vertex (A-block first), form 2I - Ad, and an ordering of the generators
/// used for Coxeter elements.
struct CoxeterSystem {
  ConfigurationGraph graph;
  IntMatrix form;
  std::vector<std::size_t> ordering;

  /// Bicoloured ordering: all A vertices, then all B vertices. Throws
  /// kNotSmallType.
  static CoxeterSystem from_graph(const ConfigurationGraph& g);
  /// ordering must be a permutation of 0..K-1.
  static CoxeterSystem from_graph(const ConfigurationGraph& g, std::vector<std::size_t> ordering);

  std::size_t rank() const { return form.rows(); }
};

/// 2I - Ad. Throws kNotSmallType.
IntMatrix coxeter_form(const ConfigurationGraph& g);

enum class FormClass { kSpherical, kAffine, kHyperbolic, kHigherRank };
std::string to_string(FormClass c);

struct FormSignature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;
  FormClass form_class = FormClass::kSpherical;
  friend bool operator==(const FormSignature&, const FormSignature&) = default;
};

/// Inertia by exact symmetric congruence over Q (1x1 and 2x2 pivots).
FormSignature form_signature(const RationalMatrix& pi);
FormSignature form_signature(const IntMatrix& pi);

/// Geometric representation: Theta(s_i) e_j = e_j - Pi_ij e_i, as matrices
/// acting on column vectors.
std::vector<BigMatrix> reflection_matrices(const CoxeterSystem& cs);

/// Product Theta(s_sigma(1)) ... Theta(s_sigma(K)).
BigMatrix reflection_product(const CoxeterSystem& cs);

/// -(I - U)^{-1} (I - U)^t where U(i, j) = Ad(i, j) when i precedes j in
/// the ordering. U is nilpotent, so the inverse is an exact finite sum.
BigMatrix howlett_element(const CoxeterSystem& cs);

/// Largest modulus of an eigenvalue of an integer matrix (exact
/// characteristic polynomial, certified complex roots).
double spectral_radius(const BigMatrix& m);

/// Spectral radius of the bicoloured Coxeter element, checked against
/// max(1, larger root of x^2 + (2 - mu^2) x + 1). Throws
/// kInternalInconsistency when they differ by more than tol.
double bicolored_coxeter_spectral_radius(const ConfigurationGraph& g, double tol = 1e-9);

/// Expected value from mu alone.
double coxeter_radius_from_mu(double mu);

struct HomologyMatrices {
  IntMatrix ta_star;  ///< [[I, N], [0, I]]
  IntMatrix tb_star;  ///< [[I, 0], [-N^t, I]]
};
HomologyMatrices homology_matrices(const IntersectionMatrix& n);

struct Main7Report {
  bool matrices_equal = false;
  double howlett_radius = 0.0;
  double homology_radius = 0.0;
  bool radii_agree = false;
  bool holds() const { return matrices_equal && radii_agree; }
};

/// Compares the bicoloured Howlett element with -(T_A)_*(T_B)_*.
Main7Report main7_identity_report(const ConfigurationGraph& g);
bool main7_identity_check(const ConfigurationGraph& g);

}  // namespace multitwist
