#include "multitwist/config.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "multitwist/error.hpp"

namespace multitwist {

using nlohmann::json;

ConfigurationGraph::ConfigurationGraph(std::size_t n_a, std::size_t n_b, IntMatrix multiplicities)
    : n_a_(n_a), n_b_(n_b), mult_(std::move(multiplicities)) {
  if (n_a_ < 1 || n_b_ < 1)
    throw Error(ErrorKind::kValidation, "both curve families need at least one component");
  if (mult_.rows() != n_a_ || mult_.cols() != n_b_)
    throw Error(ErrorKind::kValidation, "multiplicity matrix has the wrong shape");
  for (std::size_t i = 0; i < n_a_; ++i)
    for (std::size_t j = 0; j < n_b_; ++j)
      if (mult_(i, j) < 0)
        throw Error(ErrorKind::kValidation, "negative multiplicity at (a" + std::to_string(i + 1) +
                                                ", b" + std::to_string(j + 1) + ")");
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (degree(v) == 0) {
      const bool is_a = v < n_a_;
      throw Error(ErrorKind::kValidation,
                  std::string("curve ") + (is_a ? "a" : "b") +
                      std::to_string((is_a ? v : v - n_a_) + 1) + " meets no curve of the other family");
    }
}

ConfigurationGraph ConfigurationGraph::from_edges(
    std::size_t n_a, std::size_t n_b,
    const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& edges) {
  IntMatrix m(n_a, n_b);
  for (const auto& [i, j, k] : edges) {
    if (i >= n_a || j >= n_b) throw Error(ErrorKind::kValidation, "edge endpoint out of range");
    m(i, j) += k;
  }
  return ConfigurationGraph(n_a, n_b, std::move(m));
}

std::int64_t ConfigurationGraph::edge_count() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n_a_; ++i)
    for (std::size_t j = 0; j < n_b_; ++j) s += mult_(i, j);
  return s;
}

std::int64_t ConfigurationGraph::degree(std::size_t v) const {
  std::int64_t d = 0;
  if (v < n_a_) {
    for (std::size_t j = 0; j < n_b_; ++j) d += mult_(v, j);
  } else {
    for (std::size_t i = 0; i < n_a_; ++i) d += mult_(i, v - n_a_);
  }
  return d;
}

std::size_t ConfigurationGraph::simple_degree(std::size_t v) const {
  return neighbours(v).size();
}

std::vector<std::size_t> ConfigurationGraph::neighbours(std::size_t v) const {
  std::vector<std::size_t> out;
  if (v < n_a_) {
    for (std::size_t j = 0; j < n_b_; ++j)
      if (mult_(v, j) > 0) out.push_back(n_a_ + j);
  } else {
    for (std::size_t i = 0; i < n_a_; ++i)
      if (mult_(i, v - n_a_) > 0) out.push_back(i);
  }
  return out;
}

bool ConfigurationGraph::is_connected() const {
  std::vector<bool> seen(vertex_count(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (std::size_t w : neighbours(v))
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == vertex_count();
}

EmbeddedConfiguration::EmbeddedConfiguration(ConfigurationGraph graph,
                                             std::vector<IntersectionPoint> points)
    : graph_(std::move(graph)), points_(std::move(points)) {
  const std::size_t n_a = graph_.n_a();
  const std::size_t n_b = graph_.n_b();
  IntMatrix counts(n_a, n_b);
  std::vector<std::vector<std::size_t>> a_slots(n_a), b_slots(n_b);
  for (std::size_t i = 0; i < n_a; ++i)
    a_slots[i].assign(static_cast<std::size_t>(graph_.degree(i)), points_.size());
  for (std::size_t j = 0; j < n_b; ++j)
    b_slots[j].assign(static_cast<std::size_t>(graph_.degree(n_a + j)), points_.size());

  for (std::size_t k = 0; k < points_.size(); ++k) {
    const auto& p = points_[k];
    const std::string where = "intersection point " + std::to_string(p.id);
    if (p.a >= n_a || p.b >= n_b) throw Error(ErrorKind::kValidation, where + ": curve out of range");
    if (p.sign != 1 && p.sign != -1) throw Error(ErrorKind::kValidation, where + ": sign must be +1 or -1");
    if (p.pos_a >= a_slots[p.a].size() || p.pos_b >= b_slots[p.b].size())
      throw Error(ErrorKind::kValidation, where + ": cyclic position out of range");
    if (a_slots[p.a][p.pos_a] != points_.size() || b_slots[p.b][p.pos_b] != points_.size())
      throw Error(ErrorKind::kValidation, where + ": cyclic position used twice");
    a_slots[p.a][p.pos_a] = k;
    b_slots[p.b][p.pos_b] = k;
    counts(p.a, p.b) += 1;
  }
  if (!(counts == graph_.multiplicities()))
    throw Error(ErrorKind::kValidation, "embedding points do not match the edge multiplicities");
  a_cycles_ = std::move(a_slots);
  b_cycles_ = std::move(b_slots);
}

namespace {

std::int64_t require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw Error(ErrorKind::kSchema, std::string("field '") + key + "' must be an integer");
  return j.at(key).get<std::int64_t>();
}

}  // namespace

ConfigDocument parse_config_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kSchema, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::kSchema, "top level must be an object");
  const std::int64_t n_a = require_int(doc, "a");
  const std::int64_t n_b = require_int(doc, "b");
  if (n_a < 1 || n_b < 1) throw Error(ErrorKind::kValidation, "'a' and 'b' must be positive");
  if (!doc.contains("edges") || !doc.at("edges").is_array())
    throw Error(ErrorKind::kSchema, "field 'edges' must be an array");

  IntMatrix mult(static_cast<std::size_t>(n_a), static_cast<std::size_t>(n_b));
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number_integer())
      throw Error(ErrorKind::kSchema, "each edge must be [i, j, mult] with integers");
    const auto i = e[0].get<std::int64_t>();
    const auto j = e[1].get<std::int64_t>();
    const auto k = e[2].get<std::int64_t>();
    if (i < 1 || i > n_a || j < 1 || j > n_b)
      throw Error(ErrorKind::kValidation, "edge " + e.dump() + " has a curve index out of range");
    if (k < 0) throw Error(ErrorKind::kValidation, "edge " + e.dump() + " has negative multiplicity");
    mult(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) += k;
  }
  ConfigurationGraph graph(static_cast<std::size_t>(n_a), static_cast<std::size_t>(n_b), std::move(mult));

  std::optional<EmbeddedConfiguration> embedding;
  if (doc.contains("embedding") && !doc.at("embedding").is_null()) {
    const auto& emb = doc.at("embedding");
    if (!emb.is_object() || !emb.contains("points") || !emb.at("points").is_array())
      throw Error(ErrorKind::kSchema, "'embedding' must be an object with a 'points' array");
    std::vector<IntersectionPoint> points;
    for (const auto& p : emb.at("points")) {
      if (!p.is_object()) throw Error(ErrorKind::kSchema, "embedding point must be an object");
      IntersectionPoint ip;
      ip.id = static_cast<int>(require_int(p, "id"));
      const auto a = require_int(p, "a");
      const auto b = require_int(p, "b");
      const auto pa = require_int(p, "pos_a");
      const auto pb = require_int(p, "pos_b");
      if (a < 1 || b < 1 || pa < 0 || pb < 0)
        throw Error(ErrorKind::kValidation, "embedding point " + std::to_string(ip.id) + " has a negative index");
      ip.a = static_cast<std::size_t>(a - 1);
      ip.b = static_cast<std::size_t>(b - 1);
      ip.pos_a = static_cast<std::size_t>(pa);
      ip.pos_b = static_cast<std::size_t>(pb);
      ip.sign = static_cast<int>(require_int(p, "sign"));
      points.push_back(ip);
    }
    embedding.emplace(graph, std::move(points));
  }
  return ConfigDocument{std::move(graph), std::move(embedding)};
}

ConfigurationGraph parse_config(std::string_view json_text) {
  return parse_config_document(json_text).graph;
}

ConfigDocument load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kSchema, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_document(ss.str());
}

std::string to_json(const ConfigurationGraph& g) {
  json edges = json::array();
  for (std::size_t i = 0; i < g.n_a(); ++i)
    for (std::size_t j = 0; j < g.n_b(); ++j)
      if (g.multiplicity(i, j) > 0) edges.push_back({i + 1, j + 1, g.multiplicity(i, j)});
  return json{{"a", g.n_a()}, {"b", g.n_b()}, {"edges", edges}}.dump();
}

IntersectionMatrix intersection_matrix(const ConfigurationGraph& g) {
  return IntersectionMatrix{g.multiplicities()};
}

IntMatrix adjacency_matrix(const ConfigurationGraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix ad(n, n);
  for (std::size_t i = 0; i < g.n_a(); ++i)
    for (std::size_t j = 0; j < g.n_b(); ++j) {
      ad(i, g.n_a() + j) = g.multiplicity(i, j);
      ad(g.n_a() + j, i) = g.multiplicity(i, j);
    }
  return ad;
}

std::vector<ConfigurationGraph> components(const ConfigurationGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> label(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::queue<std::size_t> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      for (std::size_t w : g.neighbours(v))
        if (label[w] < 0) {
          label[w] = next;
          q.push(w);
        }
    }
    ++next;
  }
  std::vector<ConfigurationGraph> out;
  for (int c = 0; c < next; ++c) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < g.n_a(); ++i)
      if (label[i] == c) rows.push_back(i);
    for (std::size_t j = 0; j < g.n_b(); ++j)
      if (label[g.n_a() + j] == c) cols.push_back(j);
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = g.multiplicity(rows[r], cols[k]);
    out.emplace_back(rows.size(), cols.size(), std::move(m));
  }
  return out;
}

bool is_small_type(const ConfigurationGraph& g) {
  for (std::size_t i = 0; i < g.n_a(); ++i)
    for (std::size_t j = 0; j < g.n_b(); ++j)
      if (g.multiplicity(i, j) > 1) return false;
  return true;
}

namespace {

// Minimal encoding over permutations of the rows, with columns sorted.
std::string canonical_rows_first(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool have = false;
  std::vector<std::vector<std::int64_t>> columns(c, std::vector<std::int64_t>(r));
  do {
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t i = 0; i < r; ++i) columns[j][i] = m(perm[i], j);
    auto sorted = columns;
    std::sort(sorted.begin(), sorted.end());
    std::string s = std::to_string(r) + "x" + std::to_string(c) + ":";
    for (const auto& col : sorted) {
      for (auto v : col) {
        s += std::to_string(v);
        s += ',';
      }
      s += '|';
    }
    if (!have || s < best) {
      best = std::move(s);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::string canonical_form(const ConfigurationGraph& g) {
  const IntMatrix& m = g.multiplicities();
  if (g.n_a() < g.n_b()) return canonical_rows_first(m);
  if (g.n_a() > g.n_b()) return canonical_rows_first(m.transpose());
  return std::min(canonical_rows_first(m), canonical_rows_first(m.transpose()));
}

}  // namespace multitwist
