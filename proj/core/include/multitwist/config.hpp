#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "multitwist/matrix.hpp"

namespace multitwist {

/// Bipartite multigraph with one vertex per curve component of A (a_1..a_n)
/// and of B (b_1..b_m); the multiplicity of (i, j) is i(a_i, b_j).
/// Indices are 0-based in the API and 1-based in the JSON schema.
class ConfigurationGraph {
 public:
  /// Validates: n_a, n_b >= 1, non-negative multiplicities, no isolated vertex.
  ConfigurationGraph(std::size_t n_a, std::size_t n_b, IntMatrix multiplicities);

  /// Convenience constructor from (i, j, mult) triples, 0-based; duplicates sum.
  static ConfigurationGraph from_edges(
      std::size_t n_a, std::size_t n_b,
      const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& edges);

  std::size_t n_a() const noexcept { return n_a_; }
  std::size_t n_b() const noexcept { return n_b_; }
  std::size_t vertex_count() const noexcept { return n_a_ + n_b_; }
  std::int64_t multiplicity(std::size_t i, std::size_t j) const { return mult_(i, j); }
  std::int64_t edge_count() const;
  /// Degree counted with multiplicity; vertices ordered A-block then B-block.
  std::int64_t degree(std::size_t vertex) const;
  /// Number of distinct neighbours of a vertex.
  std::size_t simple_degree(std::size_t vertex) const;
  /// Neighbours of a vertex in the canonical (A then B) ordering.
  std::vector<std::size_t> neighbours(std::size_t vertex) const;
  bool is_connected() const;

  const IntMatrix& multiplicities() const noexcept { return mult_; }

  friend bool operator==(const ConfigurationGraph&, const ConfigurationGraph&) = default;

 private:
  std::size_t n_a_;
  std::size_t n_b_;
  IntMatrix mult_;
};

/// The n_a x n_b matrix N with N(i, j) = i(a_i, b_j).
struct IntersectionMatrix {
  IntMatrix entries;
};

/// One transverse intersection point of a_i with b_j.
struct IntersectionPoint {
  int id = 0;
  std::size_t a = 0;      // 0-based curve index in A
  std::size_t b = 0;      // 0-based curve index in B
  std::size_t pos_a = 0;  // index in a's cyclic order
  std::size_t pos_b = 0;  // index in b's cyclic order
  int sign = 1;           // +1 or -1
};

/// Configuration graph plus cyclic orders and signs of the intersections on
/// every curve.
class EmbeddedConfiguration {
 public:
  EmbeddedConfiguration(ConfigurationGraph graph, std::vector<IntersectionPoint> points);

  const ConfigurationGraph& graph() const noexcept { return graph_; }
  const std::vector<IntersectionPoint>& points() const noexcept { return points_; }
  /// Point indices (into points()) along a_i / b_j in cyclic order.
  const std::vector<std::size_t>& a_cycle(std::size_t i) const { return a_cycles_[i]; }
  const std::vector<std::size_t>& b_cycle(std::size_t j) const { return b_cycles_[j]; }

 private:
  ConfigurationGraph graph_;
  std::vector<IntersectionPoint> points_;
  std::vector<std::vector<std::size_t>> a_cycles_;
  std::vector<std::vector<std::size_t>> b_cycles_;
};

/// Parsed configuration document: a graph and, optionally, its embedding.
struct ConfigDocument {
  ConfigurationGraph graph;
  std::optional<EmbeddedConfiguration> embedding;
};

/// Parses the JSON configuration schema
///   {"a": n, "b": m, "edges": [[i, j, mult], ...],
///    "embedding": {"points": [{"id", "a", "b", "pos_a", "pos_b", "sign"}]}}
/// with 1-based curve indices. Throws Error(kSchema) for malformed input and
/// Error(kValidation) for semantic violations.
ConfigDocument parse_config_document(std::string_view json_text);
ConfigurationGraph parse_config(std::string_view json_text);
ConfigDocument load_config_file(const std::string& path);

std::string to_json(const ConfigurationGraph& g);

IntersectionMatrix intersection_matrix(const ConfigurationGraph& g);

/// Symmetric (n_a + n_b) square matrix [[0, N], [N^t, 0]].
IntMatrix adjacency_matrix(const ConfigurationGraph& g);

/// Connected components, re-indexed, ordered by smallest original vertex.
std::vector<ConfigurationGraph> components(const ConfigurationGraph& g);

/// True iff every multiplicity is at most one.
bool is_small_type(const ConfigurationGraph& g);

/// Canonical string of the graph up to isomorphism (including swapping the
/// roles of A and B). Intended for graphs with at most ~10 vertices.
std::string canonical_form(const ConfigurationGraph& g);

}  // namespace multitwist
