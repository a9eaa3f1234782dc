#include <doctest.h>

#include <cmath>

#include "multitwist/classify.hpp"
#include "multitwist/error.hpp"
#include "oracles.hpp"

using namespace multitwist;

namespace {

ConfigurationGraph fixture_graph(const char* name) {
  return load_config_file(oracle::fixture(std::string(name) + ".json")).graph;
}

}  // namespace

TEST_CASE("family_of on named shapes") {
  CHECK(family_of(make_path(5)).name() == "A_5");
  CHECK(family_of(make_path(5)).kind == FamilyKind::kRecessive);
  CHECK(family_of(make_cycle(6)).name() == "P_6");
  CHECK(family_of(make_cycle(6)).kind == FamilyKind::kCritical);
  const auto eh = family_of(fixture_graph("eh10"));
  CHECK(eh.kind == FamilyKind::kDominant);
  CHECK(eh.is_eh10);

  CHECK(family_of(fixture_graph("d4")).name() == "D_4");
  CHECK(family_of(fixture_graph("e6")).name() == "E6");
  CHECK(family_of(fixture_graph("e7")).name() == "E7");
  CHECK(family_of(fixture_graph("e8")).name() == "E8");
  CHECK(family_of(fixture_graph("p2")).name() == "P_2");
  CHECK(family_of(fixture_graph("p6")).name() == "P_6");
  CHECK(family_of(fixture_graph("q5")).name() == "Q_5");
  CHECK(family_of(fixture_graph("r7")).name() == "R7");
  CHECK(family_of(make_family(Family::kQ, 9)).name() == "Q_9");
  CHECK(family_of(make_family(Family::kR8)).name() == "R8");
  CHECK(family_of(make_family(Family::kR9)).name() == "R9");
  CHECK(family_of(make_family(Family::kD, 12)).name() == "D_12");
  CHECK_FALSE(family_of(make_star_tree({2, 2, 3})).is_eh10);
  CHECK(family_of(make_star_tree({2, 2, 3})).kind == FamilyKind::kDominant);
}

TEST_CASE("family_of rejects disconnected graphs") {
  const auto g = parse_config(R"({"a":2,"b":2,"edges":[[1,1,1],[2,2,1]]})");
  try {
    family_of(g);
    FAIL("expected NotConnected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotConnected);
  }
}

TEST_CASE("is_free") {
  CHECK(is_free(fixture_graph("eh10")));
  CHECK_FALSE(is_free(fixture_graph("a3")));
  // A_3 plus a disjoint triple edge.
  const auto g = parse_config(R"({"a":2,"b":3,"edges":[[1,1,1],[1,2,1],[2,3,3]]})");
  CHECK(is_free(g));
  CHECK_FALSE(is_free(parse_config(R"({"a":2,"b":3,"edges":[[1,1,1],[1,2,1],[2,3,2]]})")));
}

TEST_CASE("classify_verified") {
  const auto d4 = classify_verified(fixture_graph("d4"));
  REQUIRE(d4.size() == 1);
  CHECK(d4[0].label.name() == "D_4");
  CHECK(std::abs(d4[0].mu - std::sqrt(3.0)) < 1e-12);

  const auto p2 = classify_verified(fixture_graph("p2"));
  CHECK(p2[0].label.kind == FamilyKind::kCritical);
  CHECK(std::abs(p2[0].mu - 2.0) < 1e-12);

  const auto eh = classify_verified(fixture_graph("eh10"));
  CHECK(eh[0].label.is_eh10);
  CHECK(std::abs(eh[0].mu - 2.0065936) < 1e-6);
}

TEST_CASE("closed_form_mu") {
  const auto a2 = closed_form_mu(family_of(make_path(2)));
  CHECK(a2.h == 3);
  CHECK(a2.value() == doctest::Approx(1.0));
  CHECK(closed_form_mu(family_of(fixture_graph("e8"))).h == 30);
  CHECK(closed_form_mu(family_of(fixture_graph("p6"))).is_two);
  CHECK(closed_form_mu(family_of(fixture_graph("p6"))).value() == 2.0);
  try {
    closed_form_mu(family_of(fixture_graph("eh10")));
    FAIL("expected DominantHasNoClosedForm");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDominantHasNoClosedForm);
  }
}

TEST_CASE("closed forms agree with the Jacobi oracle for c <= 50") {
  for (int c = 2; c <= 50; ++c) {
    CAPTURE(c);
    const auto a = make_family(Family::kA, c);
    CHECK(std::abs(closed_form_mu(family_of(a)).value() - oracle::graph_mu(a)) < 1e-9);
    if (c >= 4) {
      const auto d = make_family(Family::kD, c);
      CHECK(std::abs(closed_form_mu(family_of(d)).value() - oracle::graph_mu(d)) < 1e-9);
    }
  }
  for (Family f : {Family::kE6, Family::kE7, Family::kE8, Family::kR7, Family::kR8, Family::kR9}) {
    const auto g = make_family(f);
    CHECK(std::abs(closed_form_mu(family_of(g)).value() - oracle::graph_mu(g)) < 1e-9);
  }
  for (int c = 4; c <= 20; c += 2) {
    const auto g = make_family(Family::kP, c);
    CHECK(std::abs(oracle::graph_mu(g) - 2.0) < 1e-9);
  }
  for (int c = 5; c <= 20; ++c) {
    const auto g = make_family(Family::kQ, c);
    CHECK(family_of(g).name() == "Q_" + std::to_string(c));
    CHECK(std::abs(oracle::graph_mu(g) - 2.0) < 1e-9);
  }
}
