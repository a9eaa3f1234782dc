#include "multitwist/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "multitwist/error.hpp"
#include "multitwist/fuchsian.hpp"
#include "multitwist/numthy.hpp"

namespace multitwist {

IntMatrix coxeter_form(const ConfigurationGraph& g) {
  if (!is_small_type(g)) throw Error(ErrorKind::kNotSmallType, "Coxeter form needs a graph without multiple edges");
  IntMatrix pi = adjacency_matrix(g);
  pi *= -1;
  for (std::size_t i = 0; i < pi.rows(); ++i) pi(i, i) = 2;
  return pi;
}

CoxeterSystem CoxeterSystem::from_graph(const ConfigurationGraph& g) {
  std::vector<std::size_t> order(g.vertex_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return from_graph(g, std::move(order));
}

CoxeterSystem CoxeterSystem::from_graph(const ConfigurationGraph& g, std::vector<std::size_t> ordering) {
  const std::size_t k = g.vertex_count();
  std::vector<bool> seen(k, false);
  if (ordering.size() != k) throw Error(ErrorKind::kValidation, "ordering has the wrong length");
  for (const auto v : ordering) {
    if (v >= k || seen[v]) throw Error(ErrorKind::kValidation, "ordering is not a permutation");
    seen[v] = true;
  }
  return CoxeterSystem{g, coxeter_form(g), std::move(ordering)};
}

std::string to_string(FormClass c) {
  switch (c) {
    case FormClass::kSpherical: return "spherical";
    case FormClass::kAffine: return "affine";
    case FormClass::kHyperbolic: return "hyperbolic";
    case FormClass::kHigherRank: return "higherRank";
  }
  return "?";
}

FormSignature form_signature(const RationalMatrix& pi_in) {
  if (!pi_in.square()) throw Error(ErrorKind::kValidation, "form must be square");
  const std::size_t k = pi_in.rows();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (pi_in(i, j) != pi_in(j, i)) throw Error(ErrorKind::kValidation, "form must be symmetric");

  RationalMatrix a = pi_in;
  std::vector<std::size_t> live(k);
  std::iota(live.begin(), live.end(), std::size_t{0});
  FormSignature s;
  auto drop = [&](std::size_t v) { live.erase(std::find(live.begin(), live.end(), v)); };

  while (!live.empty()) {
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t v) { return a(v, v) != 0; });
    if (diag != live.end()) {
      const std::size_t p = *diag;
      const Rational d = a(p, p);
      (d > 0 ? s.n_plus : s.n_minus)++;
      drop(p);
      for (const auto i : live)
        for (const auto j : live) a(i, j) -= a(i, p) * a(p, j) / d;
      continue;
    }
    // Zero diagonal: a nonzero off-diagonal pair gives a hyperbolic plane.
    std::size_t p = k, q = k;
    for (const auto i : live) {
      for (const auto j : live)
        if (i != j && a(i, j) != 0) {
          p = i;
          q = j;
          break;
        }
      if (p != k) break;
    }
    if (p == k) {
      s.n_zero += live.size();
      break;
    }
    ++s.n_plus;
    ++s.n_minus;
    const Rational b = a(p, q);
    drop(p);
    drop(q);
    // Schur complement of [[0, b], [b, 0]]: inverse is [[0, 1/b], [1/b, 0]].
    for (const auto i : live)
      for (const auto j : live) a(i, j) -= (a(i, p) * a(q, j) + a(i, q) * a(p, j)) / b;
  }

  if (s.n_minus >= 2) {
    s.form_class = FormClass::kHigherRank;
  } else if (s.n_minus == 1) {
    s.form_class = FormClass::kHyperbolic;
  } else if (s.n_zero == 0) {
    s.form_class = FormClass::kSpherical;
  } else {
    s.form_class = FormClass::kAffine;
  }
  return s;
}

FormSignature form_signature(const IntMatrix& pi) {
  RationalMatrix r(pi.rows(), pi.cols());
  for (std::size_t i = 0; i < pi.rows(); ++i)
    for (std::size_t j = 0; j < pi.cols(); ++j) r(i, j) = Rational(pi(i, j));
  return form_signature(r);
}

std::vector<BigMatrix> reflection_matrices(const CoxeterSystem& cs) {
  const std::size_t k = cs.rank();
  std::vector<BigMatrix> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    BigMatrix r = BigMatrix::identity(k);
    for (std::size_t j = 0; j < k; ++j) r(i, j) -= cs.form(i, j);
    out.push_back(std::move(r));
  }
  return out;
}

BigMatrix reflection_product(const CoxeterSystem& cs) {
  const auto refl = reflection_matrices(cs);
  BigMatrix c = BigMatrix::identity(cs.rank());
  for (const auto v : cs.ordering) c = c * refl[v];
  return c;
}

BigMatrix howlett_element(const CoxeterSystem& cs) {
  const std::size_t k = cs.rank();
  std::vector<std::size_t> pos(k);
  for (std::size_t t = 0; t < k; ++t) pos[cs.ordering[t]] = t;
  BigMatrix u(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && pos[i] < pos[j]) u(i, j) = -cs.form(i, j);
  // (I - U)^{-1} = I + U + U^2 + ... ; U^k = 0.
  BigMatrix inv = BigMatrix::identity(k);
  BigMatrix term = BigMatrix::identity(k);
  for (std::size_t p = 1; p < k; ++p) {
    term = term * u;
    inv += term;
  }
  const BigMatrix i_minus_u = BigMatrix::identity(k) - u;
  return -(inv * i_minus_u.transpose());
}

double spectral_radius(const BigMatrix& m) {
  const IntPolynomial p = char_poly_exact(m);
  long double r = 0;
  for (const auto& root : roots_with_multiplicity(p)) r = std::max(r, std::abs(root.z));
  return static_cast<double>(r);
}

double coxeter_radius_from_mu(double mu) { return mu > 2.0 ? min_dilatation(mu) : 1.0; }

double bicolored_coxeter_spectral_radius(const ConfigurationGraph& g, double tol) {
  if (!g.is_connected()) throw Error(ErrorKind::kNotConnected, "bicoloured Coxeter element needs a connected graph");
  const CoxeterSystem cs = CoxeterSystem::from_graph(g);
  const double rho = spectral_radius(howlett_element(cs));
  const double mu = static_cast<double>(graph_mu_quad(g));
  // At mu == 2 exactly the quadratic has a double root at 1.
  const double expected = coxeter_radius_from_mu(mu);
  if (std::abs(rho - expected) > tol)
    throw Error(ErrorKind::kInternalInconsistency, "Coxeter spectral radius " + std::to_string(rho) +
                                                       " disagrees with the value " + std::to_string(expected) +
                                                       " predicted by mu");
  return rho;
}

HomologyMatrices homology_matrices(const IntersectionMatrix& n) {
  const std::size_t a = n.entries.rows();
  const std::size_t b = n.entries.cols();
  HomologyMatrices h{IntMatrix::identity(a + b), IntMatrix::identity(a + b)};
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      h.ta_star(i, a + j) = n.entries(i, j);
      h.tb_star(a + j, i) = -n.entries(i, j);
    }
  return h;
}

Main7Report main7_identity_report(const ConfigurationGraph& g) {
  const CoxeterSystem cs = CoxeterSystem::from_graph(g);
  const BigMatrix c = howlett_element(cs);
  const HomologyMatrices h = homology_matrices(intersection_matrix(g));
  const BigMatrix prod = h.ta_star.cast<BigInt>() * h.tb_star.cast<BigInt>();
  Main7Report r;
  r.matrices_equal = c == -prod;
  r.howlett_radius = spectral_radius(c);
  r.homology_radius = spectral_radius(prod);
  r.radii_agree = std::abs(r.howlett_radius - r.homology_radius) <= 1e-9;
  return r;
}

bool main7_identity_check(const ConfigurationGraph& g) { return main7_identity_report(g).holds(); }

}  // namespace multitwist
