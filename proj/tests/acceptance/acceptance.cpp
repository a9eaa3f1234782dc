// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "multitwist/classify.hpp"
#include "multitwist/coxeter.hpp"
#include "multitwist/error.hpp"
#include "multitwist/flatstruct.hpp"
#include "multitwist/fuchsian.hpp"
#include "multitwist/numthy.hpp"
#include "multitwist/penner.hpp"
#include "multitwist/spectral.hpp"
#include "multitwist/sweep.hpp"
#include "oracles.hpp"

using namespace multitwist;

namespace {

constexpr double kMuL = 2.0065936;
constexpr double kLambdaL = 1.1762808;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

ConfigDocument doc(const std::string& name) { return load_config_file(oracle::fixture(name + ".json")); }

const std::vector<std::string> kFixtures = {"torus", "a3", "d4", "p2", "p6", "e6", "e7", "e8", "q5", "r7", "eh10"};

const std::vector<ConfigurationGraph>& sweep_graphs() {
  static const auto graphs = enumerate_connected_multigraphs(8, 10);
  return graphs;
}

void criterion1(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto g = doc("eh10").graph;
  const double mu = graph_mu(g);
  o.require(std::abs(mu - kMuL) <= 1e-6, "graph_mu(Eh10)");
  o.require(char_poly_exact(gram_matrix(g)) == IntPolynomial{-1, 12, -31, 27, -9, 1}, "char poly of N N^t");
  const auto ab = automorphism_class(MultiTwistWord::parse("A B"), g);
  const double lehmer_root = largest_real_root(lehmer_polynomial(), 1e-15);
  o.require(ab.kind == AutomorphismKind::kPseudoAnosov, "A B is pseudo-Anosov");
  o.require(std::abs(ab.dilatation - kLambdaL) <= 1e-6, "dilatation of A B");
  o.require(std::abs(ab.dilatation - lehmer_root) <= 1e-9, "dilatation equals the Lehmer root");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 1.0, "runtime under 1 s");
  o.detail.precision(10);
  o.detail << "mu=" << mu << " lambda=" << ab.dilatation << " |lambda-root|=" << std::abs(ab.dilatation - lehmer_root);
}

void criterion2(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto& graphs = sweep_graphs();
  const auto r = smith_sweep(graphs, 1e-9);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(r.mismatches == 0, "label/mu mismatches");
  o.require(secs < 120.0, "runtime under 2 min");
  o.detail << r.graphs << " graphs (" << r.recessive << " recessive, " << r.critical << " critical, " << r.dominant
           << " dominant), " << r.mismatches << " mismatches";
  for (const auto& m : r.mismatch_examples) o.detail << "; " << m;
}

void criterion3(Outcome& o) {
  std::vector<ConfigurationGraph> graphs = enumerate_trees(10);
  const std::size_t trees = graphs.size();
  for (const auto& g : sweep_graphs()) graphs.push_back(g);
  const auto r = minimality_sweep(graphs, 1e-9);
  o.require(std::abs(r.min_mu - kMuL) <= 1e-6, "minimum mu");
  o.require(r.argmin_all_eh10 && r.argmin_count >= 1, "argmin is Eh10 only");
  o.require(r.multi_edge_dominant > 0 && r.min_multi_edge_mu >= std::sqrt(5.0) - 1e-9, "sqrt 5 bound");
  o.detail.precision(10);
  o.detail << trees << " trees + " << sweep_graphs().size() << " multigraphs, " << r.dominant
           << " dominant classes, min mu=" << r.min_mu << " at " << r.argmin_count
           << " class(es), min multi-edge mu=" << r.min_multi_edge_mu;
}

void criterion4(Outcome& o) {
  int checked = 0;
  auto expect = [&](const ConfigurationGraph& g, TriangleSignature want, const std::string& name) {
    TriangleSignature got;
    try {
      got = triangle_signature(g);
    } catch (const Error& e) {
      o.require(false, name + ": " + e.what());
      return;
    }
    o.require(got == want, name + " gave " + got.to_string() + " order " + std::to_string(got.product_order));
    ++checked;
  };
  // A_1 has a single vertex and cannot be written as a pair of nonempty
  // multicurves, so the A family starts at c = 2.
  for (int c = 2; c <= 100; ++c) {
    TriangleSignature want = c % 2 == 0 ? TriangleSignature{2, c + 1, kInfinity, c + 1}
                                        : TriangleSignature{(c + 1) / 2, kInfinity, kInfinity, (c + 1) / 2};
    expect(make_family(Family::kA, c), want, "A_" + std::to_string(c));
  }
  for (int c = 4; c <= 100; ++c)
    expect(make_family(Family::kD, c), {c - 1, kInfinity, kInfinity, c - 1}, "D_" + std::to_string(c));
  expect(make_family(Family::kE6), {6, kInfinity, kInfinity, 6}, "E6");
  expect(make_family(Family::kE7), {9, kInfinity, kInfinity, 9}, "E7");
  expect(make_family(Family::kE8), {15, kInfinity, kInfinity, 15}, "E8");
  o.detail << checked << " signatures (A_2..A_100, D_4..D_100, E6, E7, E8)";
}

void criterion5(Outcome& o) {
  std::mt19937 rng(20240605);
  std::uniform_int_distribution<int> len(1, 10), ex(1, 3), coin(0, 1);
  const double recessive_floor = 1.47;
  std::size_t words = 0, hyperbolic = 0, minimal = 0;
  for (const auto& name : kFixtures) {
    const auto g = doc(name).graph;
    const MuContext mu = MuContext::from_graph(g);
    const bool above = mu.mu > 2.0 && !(mu.mu_squared && *mu.mu_squared == 4);
    const double floor = above ? min_dilatation(mu.mu) : recessive_floor;
    for (int k = 0; k < 1000; ++k) {
      std::vector<Letter> letters;
      bool is_a = coin(rng) == 0;
      for (int n = len(rng); n > 0; --n) {
        letters.push_back({is_a ? Generator::kA : Generator::kB, (coin(rng) ? 1L : -1L) * ex(rng)});
        is_a = !is_a;
      }
      const MultiTwistWord w(letters);
      ++words;
      ElementType t;
      try {
        t = word_type(w, mu);
      } catch (const Error& e) {
        o.require(false, name + " " + w.to_string() + ": " + e.what());
        continue;
      }
      if (t.kind != ElementKind::kHyperbolic) continue;
      ++hyperbolic;
      if (above) {
        o.require(t.dilatation >= floor - 1e-9, name + " " + w.to_string() + " below min_dilatation");
        if (std::abs(t.dilatation - floor) <= 1e-9) {
          ++minimal;
          o.require(std::abs(std::abs(t.trace) - (mu.mu * mu.mu - 2)) <= 1e-6,
                    name + " " + w.to_string() + " attains the minimum with the wrong trace");
        }
      } else {
        o.require(t.dilatation > floor, name + " " + w.to_string() + " at or below 1.47");
      }
    }
  }
  o.detail << words << " words, " << hyperbolic << " hyperbolic, " << minimal << " at the minimum";
}

void criterion6(Outcome& o) {
  std::vector<ConfigurationGraph> small;
  for (const auto& g : sweep_graphs())
    if (is_small_type(g)) small.push_back(g);
  const auto r = coxeter_sweep(small, 20, 20240601, 1e-9);
  o.require(r.ok(), "Coxeter identities");
  o.detail << r.graphs << " small-type graphs, " << r.orderings << " orderings; failures: product "
           << r.howlett_product_failures << ", orthogonality " << r.orthogonality_failures << ", class "
           << r.class_mismatches << ", radius " << r.radius_failures << ", main7 " << r.main7_failures;
  for (const auto& m : r.failure_examples) o.detail << "; " << m;
}

void criterion7(Outcome& o) {
  std::mt19937 rng(20240607);
  double worst = 0.0;
  std::size_t random_words = 0;
  for (const std::string name : {"torus", "a3"}) {
    const auto d = doc(name);
    const auto& g = d.graph;
    const MuContext mu = MuContext::from_graph(g);
    for (long eps = 1; eps <= 3; ++eps)
      for (long delta = 1; delta <= 3; ++delta) {
        const auto ft = word_type(MultiTwistWord({{Generator::kA, eps}, {Generator::kB, -delta}}), mu);
        const double p = penner_dilatation(full_multitwist_word(g, eps, delta), *d.embedding);
        const double diff = std::abs(p - ft.dilatation);
        worst = std::max(worst, diff);
        o.require(ft.kind == ElementKind::kHyperbolic && diff <= 1e-6,
                  name + " eps=" + std::to_string(eps) + " delta=" + std::to_string(delta));
      }
    std::uniform_int_distribution<int> ex(1, 3);
    std::uniform_int_distribution<std::size_t> curve(0, g.vertex_count() - 1);
    std::uniform_int_distribution<int> extra(0, 8 - static_cast<int>(g.vertex_count()));
    for (int k = 0; k < 200; ++k) {
      std::vector<ComponentLetter> letters;
      for (std::size_t i = 0; i < g.n_a(); ++i) letters.push_back({CurveFamily::kA, i, ex(rng)});
      for (std::size_t j = 0; j < g.n_b(); ++j) letters.push_back({CurveFamily::kB, j, -ex(rng)});
      for (int n = extra(rng); n > 0; --n) {
        const std::size_t v = curve(rng);
        if (v < g.n_a())
          letters.push_back({CurveFamily::kA, v, ex(rng)});
        else
          letters.push_back({CurveFamily::kB, v - g.n_a(), -ex(rng)});
      }
      std::shuffle(letters.begin(), letters.end(), rng);
      const ComponentWord w(letters);
      ++random_words;
      o.require(validate_penner_word(w, g) == PennerMembership::kInG0, "generated word is in G0");
      o.require(penner_dilatation(w, *d.embedding) >= std::sqrt(5.0) - 1e-9, name + " " + w.to_string() + " below sqrt 5");
      o.require(row_sum_check(w, *d.embedding) >= 5, name + " " + w.to_string() + " row sum below 5");
    }
  }
  o.detail << "18 full multi-twists (max |penner - fuchsian| = " << worst << "), " << random_words
           << " random G0 words";
}

void criterion8(Outcome& o) {
  double worst = 0.0;
  for (const auto& name : kFixtures) {
    const auto g = doc(name).graph;
    const auto fs = flat_data(g);
    const double r = flat_residual(g, fs);
    worst = std::max(worst, r);
    o.require(r <= 1e-10, name + " flat residual");
  }
  const auto torus = euler_genus(*doc("torus").embedding);
  const auto lehmer = euler_genus(*doc("eh10").embedding);
  o.require(torus.genus == 1, "torus genus");
  o.require(lehmer.genus == 5, "Lehmer configuration genus");
  o.detail << kFixtures.size() << " fixtures, max residual " << worst << ", genus(torus)=" << torus.genus
           << ", genus(Lehmer)=" << lehmer.genus;
}

void criterion9(Outcome& o) {
  const IntPolynomial lehmer = lehmer_polynomial();
  const double m = mahler_measure(lehmer, 1e-12);
  const double root = largest_real_root(lehmer, 1e-15);
  o.require(std::abs(m - root) <= 2e-8, "Mahler measure vs largest root");
  o.require(is_salem(lehmer), "Lehmer polynomial is Salem");
  // The quintic's largest root is mu^2, so y = mu enters as y^2.
  const auto quadratic = BiPolynomial::parse("x^2 + x*(2 - y^2) + 1");
  const IntPolynomial res = resultant(quadratic, mu_quintic().compose_power(2));
  bool divisible = false;
  try {
    divisible = res.exact_divide(lehmer).exact_divide(lehmer) == IntPolynomial{1};
  } catch (const Error&) {
  }
  o.require(divisible, "resultant in y = mu is the square of the Lehmer polynomial");
  o.detail.precision(12);
  o.detail << "|M - root|=" << std::abs(m - root) << ", Salem, Res_y(quadratic, quintic(y^2)) = Lehmer^2";

  const IntPolynomial literal = resultant(quadratic, mu_quintic());
  const auto [q, rem] = literal.divide(lehmer);
  std::printf("INFO criterion 9: Res_y with the quintic in y itself is %s (%sdivisible by the Lehmer polynomial)\n",
              literal.to_string().c_str(), rem.is_zero() ? "" : "not ");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"Lehmer pipeline", criterion1},
      {"Smith classification sweep", criterion2},
      {"Eh10 minimality", criterion3},
      {"triangle signature table", criterion4},
      {"dilatation floors", criterion5},
      {"Coxeter identities", criterion6},
      {"Penner cross-validation", criterion7},
      {"flat-structure relations", criterion8},
      {"number theory", criterion9},
  };
  int failures = 0;
  const auto suite_start = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
  std::printf("%d of %zu criteria passed [%.2f s total]\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
