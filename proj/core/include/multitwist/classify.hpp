#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multitwist/config.hpp"
#include "multitwist/spectral.hpp"

namespace multitwist {

enum class FamilyKind { kRecessive, kCritical, kDominant };

/// Smith's families. A_c, D_c, P_2c and Q_c carry a parameter.
enum class Family { kA, kD, kE6, kE7, kE8, kP, kQ, kR7, kR8, kR9, kDominant };

struct FamilyLabel {
  FamilyKind kind = FamilyKind::kDominant;
  Family family = Family::kDominant;
  int parameter = 0;  ///< c for A_c, D_c, Q_c; the cycle length 2c for P_2c
  bool is_eh10 = false;

  /// "A_5", "D_4", "E8", "P_6", "Q_5", "R7", "Dominant".
  std::string name() const;
  friend bool operator==(const FamilyLabel&, const FamilyLabel&) = default;
};

std::string to_string(FamilyKind kind);

/// Structural recognition of a connected configuration graph.
/// Throws kNotConnected.
FamilyLabel family_of(const ConfigurationGraph& g);

/// The group is free iff some component is dominant.
bool is_free(const ConfigurationGraph& g);

struct ComponentClassification {
  ConfigurationGraph graph;
  FamilyLabel label;
  double mu = 0.0;
};

/// Margin separating recessive and dominant spectral radii from 2; the gap
/// below mu_L ~ 2.0065936 leaves ample room.
inline constexpr double kDominanceGuard = 1e-3;

/// Label plus numeric mu for every component; throws kInternalInconsistency
/// when the two disagree.
std::vector<ComponentClassification> classify_verified(const ConfigurationGraph& g,
                                                       double tol = kDefaultTol);

/// mu = 2 cos(pi / h) for recessive labels, exactly 2 for critical ones.
struct ClosedFormMu {
  bool is_two = false;
  int h = 0;
  double value() const;
  std::string to_string() const;
};

/// Throws kDominantHasNoClosedForm for dominant labels.
ClosedFormMu closed_form_mu(const FamilyLabel& label);

/// Builders for the named families (bipartite colouring chosen canonically).
ConfigurationGraph make_path(int vertices);
ConfigurationGraph make_cycle(int vertices);
/// Tree with one branch vertex carrying legs of the given lengths.
ConfigurationGraph make_star_tree(const std::vector<int>& legs);
ConfigurationGraph make_family(Family family, int parameter = 0);
ConfigurationGraph make_eh10();

}  // namespace multitwist
