#include <doctest.h>

#include <cmath>
#include <random>

#include "multitwist/error.hpp"
#include "multitwist/fuchsian.hpp"
#include "multitwist/penner.hpp"
#include "oracles.hpp"

using namespace multitwist;

namespace {

ConfigDocument doc(const char* name) { return load_config_file(oracle::fixture(std::string(name) + ".json")); }

const char* const kEmbedded[] = {"torus", "a3", "eh10"};

ComponentWord random_g0_word(std::mt19937& rng, const ConfigurationGraph& g, int max_len, int max_exp) {
  std::uniform_int_distribution<int> ex(1, max_exp);
  std::vector<ComponentLetter> letters;
  // Every component once, then random extra letters, then shuffled.
  for (std::size_t i = 0; i < g.n_a(); ++i) letters.push_back({CurveFamily::kA, i, ex(rng)});
  for (std::size_t j = 0; j < g.n_b(); ++j) letters.push_back({CurveFamily::kB, j, -ex(rng)});
  std::uniform_int_distribution<std::size_t> curve(0, g.vertex_count() - 1);
  const int extra = max_len > static_cast<int>(letters.size()) ? max_len - static_cast<int>(letters.size()) : 0;
  std::uniform_int_distribution<int> count(0, extra);
  for (int k = count(rng); k > 0; --k) {
    const std::size_t v = curve(rng);
    if (v < g.n_a())
      letters.push_back({CurveFamily::kA, v, ex(rng)});
    else
      letters.push_back({CurveFamily::kB, v - g.n_a(), -ex(rng)});
  }
  std::shuffle(letters.begin(), letters.end(), rng);
  return ComponentWord(letters);
}

}  // namespace

TEST_CASE("component word parsing") {
  const auto w = ComponentWord::parse("a1^2 b3^-1 a");
  REQUIRE(w.letters().size() == 3);
  CHECK(w.letters()[0] == ComponentLetter{CurveFamily::kA, 0, 2});
  CHECK(w.letters()[1] == ComponentLetter{CurveFamily::kB, 2, -1});
  CHECK(w.letters()[2] == ComponentLetter{CurveFamily::kA, 0, 1});
  CHECK_THROWS_AS(ComponentWord::parse("c1"), Error);
  CHECK_THROWS_AS(ComponentWord::parse("a0"), Error);
}

TEST_CASE("build_track branch counts") {
  CHECK(build_track(*doc("torus").embedding).size() == 2);
  const auto a3 = build_track(*doc("a3").embedding);
  CHECK(a3.size() == 4);
  CHECK(a3.a_branches[0].size() == 2);
  CHECK(a3.b_branches[0].size() == 1);
  CHECK(a3.b_branches[1].size() == 1);
  const auto eh = build_track(*doc("eh10").embedding);
  CHECK(eh.size() == 18);
  CHECK(eh.tags.size() == 9);
}

TEST_CASE("twist incidence on the torus") {
  const auto t = build_track(*doc("torus").embedding);
  CHECK(twist_incidence(t, CurveFamily::kA, 0, PushOff::kPlus) == BigMatrix{{1, 1}, {0, 1}});
  CHECK(twist_incidence(t, CurveFamily::kB, 0, PushOff::kMinus) == BigMatrix{{1, 0}, {1, 1}});
  for (const char* name : kEmbedded) {
    const auto tr = build_track(*doc(name).embedding);
    const auto& g = doc(name).graph;
    const auto id = BigMatrix::identity(tr.size());
    for (std::size_t i = 0; i < g.n_a(); ++i)
      for (PushOff s : {PushOff::kPlus, PushOff::kMinus}) {
        const BigMatrix m = twist_incidence(tr, CurveFamily::kA, i, s);
        const BigMatrix r = m - id;
        CHECK(m * m == id + r * BigInt(2));
      }
    for (std::size_t j = 0; j < g.n_b(); ++j)
      for (PushOff s : {PushOff::kPlus, PushOff::kMinus}) {
        const BigMatrix r = twist_incidence(tr, CurveFamily::kB, j, s) - id;
        CHECK(r * r == BigMatrix(tr.size(), tr.size()));
      }
  }
}

TEST_CASE("membership") {
  const auto g = doc("torus").graph;
  CHECK(validate_penner_word(ComponentWord::parse("a1^1 b1^-1"), g) == PennerMembership::kInG0);
  CHECK(validate_penner_word(ComponentWord::parse("a1^1"), g) == PennerMembership::kInG);
  CHECK(validate_penner_word(ComponentWord::parse("a1^-1 b1^-1"), g) == PennerMembership::kInvalid);
  CHECK(validate_penner_word(ComponentWord::parse("a2"), g) == PennerMembership::kInvalid);
  try {
    penner_dilatation(ComponentWord::parse("a1"), *doc("torus").embedding);
    FAIL("expected NotInG0");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotInG0);
  }
}

TEST_CASE("dilatation examples") {
  const auto torus = *doc("torus").embedding;
  CHECK(std::abs(penner_dilatation(ComponentWord::parse("a b^-1"), torus) - (3 + std::sqrt(5.0)) / 2) < 1e-9);
  CHECK(std::abs(penner_dilatation(ComponentWord::parse("a^2 b^-1"), torus) - (2 + std::sqrt(3.0))) < 1e-9);
  CHECK(row_sum_check(ComponentWord::parse("a b^-1"), torus) >= 5);
  CHECK(row_sum_check(ComponentWord::parse("a^3 b^-3"), torus) > 5);
  const auto a3 = doc("a3");
  CHECK(row_sum_check(full_multitwist_word(a3.graph, 1, 1), *a3.embedding) >= 5);
}

TEST_CASE("agreement with the Fuchsian dilatation on full multi-twists") {
  for (const char* name : kEmbedded) {
    CAPTURE(name);
    const auto d = doc(name);
    const double mu = oracle::graph_mu(d.graph);
    for (long eps = 1; eps <= 3; ++eps)
      for (long delta = 1; delta <= 3; ++delta) {
        const double fuchsian =
            oracle::dilatation(oracle::word_matrix({{true, eps}, {false, -delta}}, mu).a +
                               oracle::word_matrix({{true, eps}, {false, -delta}}, mu).d);
        const double penner = penner_dilatation(full_multitwist_word(d.graph, eps, delta), *d.embedding);
        CHECK(std::abs(penner - fuchsian) <= 1e-6 * fuchsian);
      }
  }
}

TEST_CASE("squaring the word squares the dilatation") {
  std::mt19937 rng(71);
  for (const char* name : kEmbedded) {
    const auto d = doc(name);
    for (int trial = 0; trial < 10; ++trial) {
      const auto w = random_g0_word(rng, d.graph, 6, 2);
      const double l = penner_dilatation(w, *d.embedding);
      CHECK(std::abs(penner_dilatation(w * w, *d.embedding) - l * l) <= 1e-6 * l * l);
    }
  }
}

TEST_CASE("sqrt 5 bound and row sums on random words") {
  std::mt19937 rng(73);
  for (const char* name : kEmbedded) {
    CAPTURE(name);
    const auto d = doc(name);
    for (int trial = 0; trial < 60; ++trial) {
      const auto w = random_g0_word(rng, d.graph, 8 + static_cast<int>(d.graph.vertex_count()), 3);
      REQUIRE(validate_penner_word(w, d.graph) == PennerMembership::kInG0);
      CHECK(penner_dilatation(w, *d.embedding) >= std::sqrt(5.0) - 1e-9);
      CHECK(row_sum_check(w, *d.embedding) >= 5);
      const BigMatrix m = penner_matrix(w, *d.embedding);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) CHECK(m(i, j) >= 0);
    }
  }
}
