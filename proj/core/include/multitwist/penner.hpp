#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "multitwist/config.hpp"
#include "multitwist/fuchsian.hpp"
#include "multitwist/matrix.hpp"
#include "multitwist/spectral.hpp"

namespace multitwist {

enum class CurveFamily { kA, kB };

struct ComponentLetter {
  CurveFamily family = CurveFamily::kA;
  std::size_t curve = 0;  ///< 0-based
  long exponent = 1;
  friend bool operator==(const ComponentLetter&, const ComponentLetter&) = default;
};

/// Product of Dehn twists about individual curve components, applied in
/// written order.
class ComponentWord {
 public:
  ComponentWord() = default;
  explicit ComponentWord(std::vector<ComponentLetter> letters);
  /// Grammar: a<index> or b<index> (1-based, index optional meaning 1) with
  /// optional ^<int>, whitespace separated: "a1^2 b3^-1". Throws kParse.
  static ComponentWord parse(std::string_view text);

  const std::vector<ComponentLetter>& letters() const noexcept { return letters_; }
  std::string to_string() const;
  friend ComponentWord operator*(const ComponentWord& u, const ComponentWord& v);

 private:
  std::vector<ComponentLetter> letters_;
};

/// T_A^eps T_B^-delta written component by component.
ComponentWord full_multitwist_word(const ConfigurationGraph& g, long eps, long delta);

/// A branch is the arc of a curve between consecutive intersection points.
struct Branch {
  CurveFamily family = CurveFamily::kA;
  std::size_t curve = 0;
  std::size_t from_point = 0;
  std::size_t to_point = 0;
};

/// The four branches adjacent to an intersection point. With sign +1 the
/// branches leaving the point are the + branches; sign -1 swaps the roles.
struct BranchTags {
  std::size_t i_plus = 0, i_minus = 0;  ///< on the a-curve
  std::size_t j_plus = 0, j_minus = 0;  ///< on the b-curve
};

struct BigonTrack {
  std::vector<Branch> branches;                  ///< a-curves first, then b-curves
  std::vector<std::vector<std::size_t>> a_branches;  ///< per a-curve, cyclic order
  std::vector<std::vector<std::size_t>> b_branches;
  std::vector<BranchTags> tags;                  ///< per intersection point
  std::size_t size() const { return branches.size(); }
};

BigonTrack build_track(const EmbeddedConfiguration& e);

enum class PushOff { kPlus, kMinus };

/// M = I + R for the positive twist about the chosen push-off of a curve;
/// R(p, q) counts how often branch q of the opposite family crosses the
/// push-off, for every branch p of the curve. R^2 = 0.
BigMatrix twist_incidence(const BigonTrack& t, CurveFamily family, std::size_t curve, PushOff side);

enum class PennerMembership { kInG, kInG0, kInvalid };
std::string to_string(PennerMembership m);

/// kInvalid if an a-curve has a negative exponent, a b-curve a positive one,
/// or a curve index is out of range; kInG0 if moreover every component occurs.
PennerMembership validate_penner_word(const ComponentWord& w, const ConfigurationGraph& g);

/// prod (M^{c-})^{|e|} over the word, followed by prod (M^{c+})^{|e|}: the
/// incidence matrix of phi^2. Throws kNotInG0.
BigMatrix penner_matrix(const ComponentWord& w, const EmbeddedConfiguration& e);

/// sqrt of the PF eigenvalue of penner_matrix. Throws kNotInG0 and
/// kNotIrreducible.
double penner_dilatation(const ComponentWord& w, const EmbeddedConfiguration& e, double tol = kDefaultTol);

/// Smallest row sum of penner_matrix.
BigInt row_sum_check(const ComponentWord& w, const EmbeddedConfiguration& e);

}  // namespace multitwist
