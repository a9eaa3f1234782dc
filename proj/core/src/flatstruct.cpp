#include "multitwist/flatstruct.hpp"

#include <algorithm>
#include <cmath>

#include "multitwist/error.hpp"

namespace multitwist {

double FlatStructure::area() const {
  double s = 0.0;
  for (const auto& r : rectangles) s += r.width * r.height;
  return s;
}

FlatStructure flat_data(const ConfigurationGraph& g, double tol) {
  if (!g.is_connected()) throw Error(ErrorKind::kNotConnected, "flat structure needs a connected configuration");
  const IntMatrix& n = g.multiplicities();
  PFOptions opts;
  opts.tol = tol;
  const PFData pf = pf_eigen(gram_matrix(g), opts);

  FlatStructure fs;
  fs.mu = std::sqrt(pf.mu);
  fs.v = pf.vector;
  fs.vp.assign(g.n_b(), 0.0);
  for (std::size_t j = 0; j < g.n_b(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.n_a(); ++i) s += static_cast<double>(n(i, j)) * fs.v[i];
    fs.vp[j] = s / fs.mu;
  }
  fs.a_girths.assign(g.n_a(), 0.0);
  fs.b_girths.assign(g.n_b(), 0.0);
  for (std::size_t i = 0; i < g.n_a(); ++i)
    for (std::size_t j = 0; j < g.n_b(); ++j)
      for (std::int64_t k = 0; k < n(i, j); ++k) {
        fs.rectangles.push_back({i, j, k, fs.v[i], fs.vp[j]});
        // Around a_i the rectangle contributes its b-side, and vice versa.
        fs.a_girths[i] += fs.vp[j];
        fs.b_girths[j] += fs.v[i];
      }
  fs.residual = flat_residual(g, fs);
  return fs;
}

double flat_residual(const ConfigurationGraph& g, const FlatStructure& fs) {
  const IntMatrix& n = g.multiplicities();
  double r = 0.0;
  for (std::size_t i = 0; i < g.n_a(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < g.n_b(); ++j) s += static_cast<double>(n(i, j)) * fs.vp[j];
    r = std::max(r, std::abs(s - fs.mu * fs.v[i]));
    r = std::max(r, std::abs(fs.a_girths[i] - fs.mu * fs.v[i]));
  }
  for (std::size_t j = 0; j < g.n_b(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.n_a(); ++i) s += static_cast<double>(n(i, j)) * fs.v[i];
    r = std::max(r, std::abs(s - fs.mu * fs.vp[j]));
    r = std::max(r, std::abs(fs.b_girths[j] - fs.mu * fs.vp[j]));
  }
  return r;
}

DafPair daf_generators(double mu) {
  if (!(mu > 0.0)) throw Error(ErrorKind::kValidation, "mu must be positive");
  return {RealMatrix{{1.0, mu}, {0.0, 1.0}}, RealMatrix{{1.0, 0.0}, {-mu, 1.0}}};
}

EulerData euler_genus(const EmbeddedConfiguration& e) {
  const auto& pts = e.points();
  const std::size_t v = pts.size();
  if (!e.graph().is_connected())
    throw Error(ErrorKind::kNonOrientableOrInconsistent, "configuration is not connected");

  // Dart 4p + s with s = 0 a-out, 1 b-out, 2 a-in, 3 b-in.
  const std::size_t darts = 4 * v;
  std::vector<std::size_t> opposite(darts), rotate(darts);
  auto link_cycle = [&](const std::vector<std::size_t>& cycle, std::size_t out_slot, std::size_t in_slot) {
    const std::size_t d = cycle.size();
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t from = cycle[k];
      const std::size_t to = cycle[(k + 1) % d];
      opposite[4 * from + out_slot] = 4 * to + in_slot;
      opposite[4 * to + in_slot] = 4 * from + out_slot;
    }
  };
  for (std::size_t i = 0; i < e.graph().n_a(); ++i) link_cycle(e.a_cycle(i), 0, 2);
  for (std::size_t j = 0; j < e.graph().n_b(); ++j) link_cycle(e.b_cycle(j), 1, 3);

  for (std::size_t p = 0; p < v; ++p) {
    // Counter-clockwise order of the half-edges at the crossing.
    const bool positive = pts[p].sign > 0;
    const std::size_t order[4] = {0, positive ? 1u : 3u, 2, positive ? 3u : 1u};
    for (std::size_t k = 0; k < 4; ++k) rotate[4 * p + order[k]] = 4 * p + order[(k + 1) % 4];
  }

  std::vector<bool> seen(darts, false);
  std::size_t faces = 0;
  for (std::size_t start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    ++faces;
    std::size_t d = start;
    std::size_t steps = 0;
    while (!seen[d]) {
      seen[d] = true;
      d = rotate[opposite[d]];
      if (++steps > darts) throw Error(ErrorKind::kNonOrientableOrInconsistent, "face tracing did not close up");
    }
    if (d != start) throw Error(ErrorKind::kNonOrientableOrInconsistent, "face tracing did not close up");
  }

  EulerData out;
  out.vertices = v;
  out.edges = 2 * v;
  out.faces = faces;
  out.chi = static_cast<long>(v) - static_cast<long>(2 * v) + static_cast<long>(faces);
  if (out.chi % 2 != 0 || out.chi > 2)
    throw Error(ErrorKind::kNonOrientableOrInconsistent, "odd Euler characteristic");
  out.genus = (2 - out.chi) / 2;
  return out;
}

}  // namespace multitwist
