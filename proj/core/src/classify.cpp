#include "multitwist/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>

#include "multitwist/error.hpp"

namespace multitwist {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kRecessive: return "Recessive";
    case FamilyKind::kCritical: return "Critical";
    case FamilyKind::kDominant: return "Dominant";
  }
  return "?";
}

std::string FamilyLabel::name() const {
  switch (family) {
    case Family::kA: return "A_" + std::to_string(parameter);
    case Family::kD: return "D_" + std::to_string(parameter);
    case Family::kE6: return "E6";
    case Family::kE7: return "E7";
    case Family::kE8: return "E8";
    case Family::kP: return "P_" + std::to_string(parameter);
    case Family::kQ: return "Q_" + std::to_string(parameter);
    case Family::kR7: return "R7";
    case Family::kR8: return "R8";
    case Family::kR9: return "R9";
    case Family::kDominant: return "Dominant";
  }
  return "?";
}

namespace {

FamilyLabel recessive(Family f, int c = 0) { return {FamilyKind::kRecessive, f, c, false}; }
FamilyLabel critical(Family f, int c = 0) { return {FamilyKind::kCritical, f, c, false}; }
FamilyLabel dominant(bool eh10 = false) { return {FamilyKind::kDominant, Family::kDominant, 0, eh10}; }

// Lengths of the maximal paths hanging off `branch` (each ends at a leaf);
// empty if some leg runs into another branch vertex.
std::vector<int> leg_lengths(const ConfigurationGraph& g, std::size_t branch) {
  std::vector<int> legs;
  for (std::size_t start : g.neighbours(branch)) {
    int len = 1;
    std::size_t prev = branch;
    std::size_t cur = start;
    while (true) {
      const auto nb = g.neighbours(cur);
      if (nb.size() == 1) break;
      if (nb.size() > 2) return {};
      const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  return legs;
}

FamilyLabel classify_tree(const ConfigurationGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v)
    if (g.simple_degree(v) >= 3) branch.push_back(v);

  if (branch.empty()) return recessive(Family::kA, static_cast<int>(n));

  if (branch.size() == 1) {
    const std::size_t deg = g.simple_degree(branch[0]);
    if (deg == 4) return n == 5 ? critical(Family::kQ, 5) : dominant();
    if (deg > 4) return dominant();
    const std::vector<int> legs = leg_lengths(g, branch[0]);
    if (legs.size() != 3) return dominant();
    const int l1 = legs[0], l2 = legs[1], l3 = legs[2];
    if (l1 == 1 && l2 == 1) return recessive(Family::kD, l3 + 3);
    if (l1 == 1 && l2 == 2 && l3 == 2) return recessive(Family::kE6);
    if (l1 == 1 && l2 == 2 && l3 == 3) return recessive(Family::kE7);
    if (l1 == 1 && l2 == 2 && l3 == 4) return recessive(Family::kE8);
    if (l1 == 2 && l2 == 2 && l3 == 2) return critical(Family::kR7);
    if (l1 == 1 && l2 == 3 && l3 == 3) return critical(Family::kR8);
    if (l1 == 1 && l2 == 2 && l3 == 5) return critical(Family::kR9);
    return dominant(l1 == 1 && l2 == 2 && l3 == 6);
  }

  if (branch.size() == 2) {
    // Q_c: both branch vertices have degree 3 and two pendant leaves each.
    for (std::size_t b : branch) {
      if (g.simple_degree(b) != 3) return dominant();
      int leaves = 0;
      for (std::size_t w : g.neighbours(b)) leaves += g.simple_degree(w) == 1 ? 1 : 0;
      if (leaves != 2) return dominant();
    }
    return critical(Family::kQ, static_cast<int>(n));
  }
  return dominant();
}

}  // namespace

FamilyLabel family_of(const ConfigurationGraph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::kNotConnected, "family_of needs a connected graph");
  const std::size_t n = g.vertex_count();
  if (!is_small_type(g)) {
    // The only non-simple graph with mu <= 2 is the double edge.
    if (n == 2 && g.multiplicity(0, 0) == 2) return critical(Family::kP, 2);
    return dominant();
  }
  std::size_t simple_edges = 0;
  for (std::size_t i = 0; i < g.n_a(); ++i)
    for (std::size_t j = 0; j < g.n_b(); ++j) simple_edges += g.multiplicity(i, j) > 0 ? 1 : 0;

  if (simple_edges + 1 == n) return classify_tree(g);
  if (simple_edges == n) {
    for (std::size_t v = 0; v < n; ++v)
      if (g.simple_degree(v) != 2) return dominant();
    return critical(Family::kP, static_cast<int>(n));
  }
  return dominant();
}

bool is_free(const ConfigurationGraph& g) {
  for (const auto& c : components(g))
    if (family_of(c).kind == FamilyKind::kDominant) return true;
  return false;
}

std::vector<ComponentClassification> classify_verified(const ConfigurationGraph& g, double tol) {
  std::vector<ComponentClassification> out;
  for (auto& c : components(g)) {
    ComponentClassification item{c, family_of(c), graph_mu(c, tol)};
    const double mu = item.mu;
    bool ok = false;
    switch (item.label.kind) {
      case FamilyKind::kRecessive: ok = mu < 2.0 - kDominanceGuard; break;
      case FamilyKind::kCritical: ok = std::abs(mu - 2.0) <= std::max(tol, 1e-9); break;
      case FamilyKind::kDominant: ok = mu > 2.0 + kDominanceGuard; break;
    }
    if (!ok) {
      std::ostringstream os;
      os.precision(15);
      os << "structural label " << item.label.name() << " disagrees with mu = " << mu;
      throw Error(ErrorKind::kInternalInconsistency, os.str());
    }
    out.push_back(std::move(item));
  }
  return out;
}

double ClosedFormMu::value() const {
  return is_two ? 2.0 : 2.0 * std::cos(std::numbers::pi / h);
}

std::string ClosedFormMu::to_string() const {
  return is_two ? "2" : "2cos(pi/" + std::to_string(h) + ")";
}

ClosedFormMu closed_form_mu(const FamilyLabel& label) {
  switch (label.kind) {
    case FamilyKind::kCritical: return {true, 0};
    case FamilyKind::kDominant:
      throw Error(ErrorKind::kDominantHasNoClosedForm, "dominant graphs have mu > 2");
    case FamilyKind::kRecessive: break;
  }
  switch (label.family) {
    case Family::kA: return {false, label.parameter + 1};
    case Family::kD: return {false, 2 * (label.parameter - 1)};
    case Family::kE6: return {false, 12};
    case Family::kE7: return {false, 18};
    case Family::kE8: return {false, 30};
    default: break;
  }
  throw Error(ErrorKind::kInternalInconsistency, "recessive label with unexpected family");
}

namespace {

// Bicolours a connected simple graph on vertices 0..n-1 (vertex 0 in A) and
// orders each colour class by vertex index.
ConfigurationGraph from_simple_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                     std::int64_t multiplicity = 1) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::queue<int> q;
  colour[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (colour[static_cast<std::size_t>(w)] < 0) {
        colour[static_cast<std::size_t>(w)] = 1 - colour[static_cast<std::size_t>(v)];
        q.push(w);
      } else if (colour[static_cast<std::size_t>(w)] == colour[static_cast<std::size_t>(v)]) {
        throw Error(ErrorKind::kValidation, "graph is not bipartite");
      }
    }
  }
  std::vector<std::size_t> index(static_cast<std::size_t>(n));
  std::size_t na = 0, nb = 0;
  for (int v = 0; v < n; ++v) index[static_cast<std::size_t>(v)] = colour[static_cast<std::size_t>(v)] == 0 ? na++ : nb++;
  IntMatrix m(na, nb);
  for (auto [u, v] : edges) {
    if (colour[static_cast<std::size_t>(u)] != 0) std::swap(u, v);
    m(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]) += multiplicity;
  }
  return ConfigurationGraph(na, nb, std::move(m));
}

}  // namespace

ConfigurationGraph make_path(int vertices) {
  if (vertices < 2) throw Error(ErrorKind::kValidation, "a configuration path needs at least two vertices");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < vertices; ++v) e.emplace_back(v, v + 1);
  return from_simple_edges(vertices, e);
}

ConfigurationGraph make_cycle(int vertices) {
  if (vertices == 2) return ConfigurationGraph(1, 1, IntMatrix{{2}});
  if (vertices < 4 || vertices % 2 != 0) throw Error(ErrorKind::kValidation, "bipartite cycles have even length");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < vertices; ++v) e.emplace_back(v, (v + 1) % vertices);
  return from_simple_edges(vertices, e);
}

ConfigurationGraph make_star_tree(const std::vector<int>& legs) {
  std::vector<std::pair<int, int>> e;
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return from_simple_edges(next, e);
}

ConfigurationGraph make_family(Family family, int c) {
  switch (family) {
    case Family::kA: return make_path(c);
    case Family::kD:
      if (c < 4) throw Error(ErrorKind::kValidation, "D_c needs c >= 4");
      return make_star_tree({1, 1, c - 3});
    case Family::kE6: return make_star_tree({1, 2, 2});
    case Family::kE7: return make_star_tree({1, 2, 3});
    case Family::kE8: return make_star_tree({1, 2, 4});
    case Family::kP: return make_cycle(c);
    case Family::kQ: {
      if (c == 5) return make_star_tree({1, 1, 1, 1});
      if (c < 5) throw Error(ErrorKind::kValidation, "Q_c needs c >= 5");
      // Spine 0..c-5, two leaves on each end.
      const int spine = c - 4;
      std::vector<std::pair<int, int>> e;
      for (int v = 0; v + 1 < spine; ++v) e.emplace_back(v, v + 1);
      e.emplace_back(0, spine);
      e.emplace_back(0, spine + 1);
      e.emplace_back(spine - 1, spine + 2);
      e.emplace_back(spine - 1, spine + 3);
      return from_simple_edges(c, e);
    }
    case Family::kR7: return make_star_tree({2, 2, 2});
    case Family::kR8: return make_star_tree({1, 3, 3});
    case Family::kR9: return make_star_tree({1, 2, 5});
    case Family::kDominant: break;
  }
  throw Error(ErrorKind::kValidation, "no canonical graph for the dominant family");
}

ConfigurationGraph make_eh10() { return make_star_tree({1, 2, 6}); }

}  // namespace multitwist
