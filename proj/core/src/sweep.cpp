#include "multitwist/sweep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

#include "multitwist/classify.hpp"
#include "multitwist/coxeter.hpp"
#include "multitwist/error.hpp"
#include "multitwist/spectral.hpp"

namespace multitwist {

namespace {

bool rows_and_cols_nonzero(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < m.cols(); ++j) any = any || m(i, j) != 0;
    if (!any) return false;
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool any = false;
    for (std::size_t i = 0; i < m.rows(); ++i) any = any || m(i, j) != 0;
    if (!any) return false;
  }
  return true;
}

void add_multiplicities(const ConfigurationGraph& base, std::int64_t budget, std::unordered_set<std::string>& seen,
                        std::vector<ConfigurationGraph>& out) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < base.n_a(); ++i)
    for (std::size_t j = 0; j < base.n_b(); ++j)
      if (base.multiplicity(i, j) > 0) edges.emplace_back(i, j);
  IntMatrix m = base.multiplicities();
  // Distribute up to `budget` extra parallel edges over the simple edges.
  auto rec = [&](auto&& self, std::size_t k, std::int64_t left) -> void {
    if (k == edges.size()) {
      ConfigurationGraph g(base.n_a(), base.n_b(), m);
      if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
      return;
    }
    for (std::int64_t extra = 0; extra <= left; ++extra) {
      m(edges[k].first, edges[k].second) = 1 + extra;
      self(self, k + 1, left - extra);
    }
    m(edges[k].first, edges[k].second) = 1;
  };
  rec(rec, 0, budget);
}

}  // namespace

std::vector<ConfigurationGraph> enumerate_simple_connected(std::size_t max_vertices, std::int64_t max_edges) {
  std::vector<ConfigurationGraph> out;
  std::unordered_set<std::string> seen;
  for (std::size_t na = 1; 2 * na <= max_vertices; ++na) {
    for (std::size_t nb = na; na + nb <= max_vertices; ++nb) {
      const std::size_t cells = na * nb;
      if (cells > 30) throw Error(ErrorKind::kValidation, "enumeration size out of range");
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cells); ++mask) {
        const int edges = std::popcount(mask);
        if (edges > max_edges || static_cast<std::size_t>(edges) + 1 < na + nb) continue;
        IntMatrix m(na, nb);
        for (std::size_t c = 0; c < cells; ++c)
          if (mask >> c & 1) m(c / nb, c % nb) = 1;
        if (!rows_and_cols_nonzero(m)) continue;
        ConfigurationGraph g(na, nb, std::move(m));
        if (!g.is_connected()) continue;
        if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
      }
    }
  }
  return out;
}

std::vector<ConfigurationGraph> enumerate_connected_multigraphs(std::size_t max_vertices, std::int64_t max_total) {
  std::vector<ConfigurationGraph> out;
  std::unordered_set<std::string> seen;
  for (const auto& g : enumerate_simple_connected(max_vertices, max_total))
    add_multiplicities(g, max_total - g.edge_count(), seen, out);
  return out;
}

std::vector<ConfigurationGraph> enumerate_trees(std::size_t max_vertices) {
  std::vector<ConfigurationGraph> out;
  if (max_vertices < 2) return out;
  std::vector<ConfigurationGraph> layer{ConfigurationGraph(1, 1, IntMatrix{{1}})};
  out = layer;
  for (std::size_t n = 3; n <= max_vertices; ++n) {
    std::vector<ConfigurationGraph> next;
    std::unordered_set<std::string> seen;
    for (const auto& t : layer) {
      const IntMatrix& m = t.multiplicities();
      for (std::size_t v = 0; v < t.vertex_count(); ++v) {
        IntMatrix grown;
        std::size_t na = t.n_a(), nb = t.n_b();
        if (v < t.n_a()) {
          grown = IntMatrix(na, nb + 1);
          for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nb; ++j) grown(i, j) = m(i, j);
          grown(v, nb) = 1;
          ++nb;
        } else {
          grown = IntMatrix(na + 1, nb);
          for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nb; ++j) grown(i, j) = m(i, j);
          grown(na, v - t.n_a()) = 1;
          ++na;
        }
        ConfigurationGraph g(na, nb, std::move(grown));
        if (seen.insert(canonical_form(g)).second) next.push_back(std::move(g));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

SmithSweepReport smith_sweep(const std::vector<ConfigurationGraph>& graphs, double critical_tol) {
  SmithSweepReport r;
  for (const auto& g : graphs) {
    ++r.graphs;
    const FamilyLabel label = family_of(g);
    const double mu = graph_mu(g);
    FamilyKind by_mu = FamilyKind::kDominant;
    if (std::abs(mu - 2.0) <= critical_tol) {
      by_mu = FamilyKind::kCritical;
    } else if (mu < 2.0) {
      by_mu = FamilyKind::kRecessive;
    }
    switch (label.kind) {
      case FamilyKind::kRecessive: ++r.recessive; break;
      case FamilyKind::kCritical: ++r.critical; break;
      case FamilyKind::kDominant: ++r.dominant; break;
    }
    if (by_mu != label.kind) {
      ++r.mismatches;
      if (r.mismatch_examples.size() < 10)
        r.mismatch_examples.push_back(to_json(g) + " labelled " + label.name() + " but mu = " + std::to_string(mu));
    }
  }
  return r;
}

MinimalityReport minimality_sweep(const std::vector<ConfigurationGraph>& graphs, double tie_tol) {
  MinimalityReport r;
  std::unordered_set<std::string> seen;
  const std::string eh10 = canonical_form(make_eh10());
  std::vector<std::pair<double, std::string>> dominant;
  for (const auto& g : graphs) {
    std::string key = canonical_form(g);
    if (!seen.insert(key).second) continue;
    if (family_of(g).kind != FamilyKind::kDominant) continue;
    const double mu = graph_mu(g);
    dominant.emplace_back(mu, std::move(key));
    if (!is_small_type(g)) {
      ++r.multi_edge_dominant;
      if (r.multi_edge_dominant == 1 || mu < r.min_multi_edge_mu) r.min_multi_edge_mu = mu;
    }
  }
  r.dominant = dominant.size();
  if (dominant.empty()) return r;
  r.min_mu = std::min_element(dominant.begin(), dominant.end())->first;
  r.argmin_all_eh10 = true;
  for (const auto& [mu, key] : dominant) {
    if (mu - r.min_mu > tie_tol) continue;
    ++r.argmin_count;
    r.argmin_all_eh10 = r.argmin_all_eh10 && key == eh10;
  }
  return r;
}

namespace {

bool class_matches(FamilyKind kind, FormClass c) {
  switch (kind) {
    case FamilyKind::kRecessive: return c == FormClass::kSpherical;
    case FamilyKind::kCritical: return c == FormClass::kAffine;
    case FamilyKind::kDominant: return c == FormClass::kHyperbolic || c == FormClass::kHigherRank;
  }
  return false;
}

}  // namespace

CoxeterSweepReport coxeter_sweep(const std::vector<ConfigurationGraph>& graphs, std::size_t random_orderings,
                                 std::uint64_t seed, double radius_tol) {
  CoxeterSweepReport r;
  std::mt19937_64 rng(seed);
  auto note = [&](const ConfigurationGraph& g, const std::string& what) {
    if (r.failure_examples.size() < 10) r.failure_examples.push_back(what + ": " + to_json(g));
  };
  for (const auto& g : graphs) {
    if (!is_small_type(g) || !g.is_connected()) continue;
    ++r.graphs;
    std::vector<std::size_t> order(g.vertex_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = 0; k <= random_orderings; ++k) {
      if (k > 0) std::shuffle(order.begin(), order.end(), rng);
      const CoxeterSystem cs = CoxeterSystem::from_graph(g, order);
      ++r.orderings;
      const BigMatrix c = howlett_element(cs);
      if (c != reflection_product(cs)) {
        ++r.howlett_product_failures;
        note(g, "Howlett element differs from the reflection product");
      }
      const BigMatrix pi = cs.form.cast<BigInt>();
      if (c.transpose() * pi * c != pi) {
        ++r.orthogonality_failures;
        note(g, "Coxeter element does not preserve the form");
      }
    }
    const FamilyLabel label = family_of(g);
    if (!class_matches(label.kind, form_signature(coxeter_form(g)).form_class)) {
      ++r.class_mismatches;
      note(g, "form class does not match " + label.name());
    }
    try {
      bicolored_coxeter_spectral_radius(g, radius_tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInternalInconsistency) throw;
      ++r.radius_failures;
      note(g, e.what());
    }
    if (!main7_identity_check(g)) {
      ++r.main7_failures;
      note(g, "Howlett element differs from -(T_A)_*(T_B)_*");
    }
  }
  return r;
}

}  // namespace multitwist
