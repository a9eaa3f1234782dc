#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "multitwist/config.hpp"

namespace multitwist {

/// Connected simple bipartite graphs with at most max_vertices vertices and
/// at most max_edges edges, one per isomorphism class.
std::vector<ConfigurationGraph> enumerate_simple_connected(std::size_t max_vertices, std::int64_t max_edges);

/// Connected bipartite multigraphs with at most max_vertices vertices and
/// total multiplicity at most max_total, one per isomorphism class.
std::vector<ConfigurationGraph> enumerate_connected_multigraphs(std::size_t max_vertices, std::int64_t max_total);

/// Trees with 2..max_vertices vertices, one per isomorphism class.
std::vector<ConfigurationGraph> enumerate_trees(std::size_t max_vertices);

/// Structural label against the mu trichotomy.
struct SmithSweepReport {
  std::size_t graphs = 0;
  std::size_t recessive = 0;
  std::size_t critical = 0;
  std::size_t dominant = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> mismatch_examples;
};
SmithSweepReport smith_sweep(const std::vector<ConfigurationGraph>& graphs, double critical_tol = 1e-9);

/// Minimum of mu over dominant graphs and the sqrt(5) bound for multigraphs.
struct MinimalityReport {
  std::size_t dominant = 0;
  double min_mu = 0.0;
  std::size_t argmin_count = 0;
  bool argmin_all_eh10 = false;
  std::size_t multi_edge_dominant = 0;
  double min_multi_edge_mu = 0.0;
};
MinimalityReport minimality_sweep(const std::vector<ConfigurationGraph>& graphs, double tie_tol = 1e-9);

/// Exact Coxeter identities over small-type graphs.
struct CoxeterSweepReport {
  std::size_t graphs = 0;
  std::size_t orderings = 0;
  std::size_t howlett_product_failures = 0;
  std::size_t orthogonality_failures = 0;
  std::size_t class_mismatches = 0;
  std::size_t radius_failures = 0;
  std::size_t main7_failures = 0;
  std::vector<std::string> failure_examples;
  bool ok() const {
    return howlett_product_failures + orthogonality_failures + class_mismatches + radius_failures +
               main7_failures ==
           0;
  }
};
CoxeterSweepReport coxeter_sweep(const std::vector<ConfigurationGraph>& graphs, std::size_t random_orderings,
                                 std::uint64_t seed, double radius_tol = 1e-9);

}  // namespace multitwist
