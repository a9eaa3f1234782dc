#pragma once

#include <cstddef>
#include <vector>

#include "multitwist/config.hpp"
#include "multitwist/spectral.hpp"

namespace multitwist {

/// One Euclidean rectangle of the cell structure dual to A u B: the arc of
/// a_i has transverse side V_i, the arc of b_j has transverse side V'_j.
struct Rectangle {
  std::size_t a = 0;
  std::size_t b = 0;
  std::int64_t copy = 0;  ///< 0..mult(a, b)-1
  double width = 0.0;     ///< V_a
  double height = 0.0;    ///< V'_b
};

/// Thurston's flat structure for a filling pair of multicurves.
struct FlatStructure {
  double mu = 0.0;            ///< mu(A u B) = sqrt(PF(N N^t))
  std::vector<double> v;      ///< A-annulus lengths, max entry 1
  std::vector<double> vp;     ///< B-annulus lengths, vp = N^t v / mu
  std::vector<Rectangle> rectangles;
  std::vector<double> a_girths;  ///< sum of rectangle widths around a_i
  std::vector<double> b_girths;
  double residual = 0.0;  ///< max over the PF and girth relations

  double area() const;
};

/// Throws kNotConnected / propagated PF errors.
FlatStructure flat_data(const ConfigurationGraph& g, double tol = kDefaultTol);

/// Largest deviation in N vp = mu v, N^t v = mu vp, and the girth identities.
double flat_residual(const ConfigurationGraph& g, const FlatStructure& fs);

/// Affine derivatives of T_A and T_B: [[1, mu], [0, 1]] and [[1, 0], [-mu, 1]].
struct DafPair {
  RealMatrix twist_a;
  RealMatrix twist_b;
};
DafPair daf_generators(double mu);

struct EulerData {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long chi = 0;
  long genus = 0;
};

/// Euler characteristic and genus of the closed surface obtained by capping
/// every face of the embedded configuration with a disk. Faces are traced in
/// the ribbon graph whose rotation at a positive crossing is
/// (a out, b out, a in, b in) and at a negative crossing (a out, b in, a in,
/// b out). Throws kNonOrientableOrInconsistent if the count is inconsistent.
EulerData euler_genus(const EmbeddedConfiguration& e);

}  // namespace multitwist
