#include <doctest.h>

#include "bredonite/coeff.hpp"
#include "bredonite/error.hpp"
#include "bredonite/verify/oracles.hpp"

using namespace bredonite;

TEST_CASE("theory names") {
  CHECK(parse_theory("oriented") == Theory::OrientedSingular);
  CHECK(parse_theory("UnorientedSingular") == Theory::UnorientedSingular);
  CHECK(to_string(Theory::Euler) == "euler");
  CHECK_THROWS_AS(parse_theory("bogus"), UsageError);
  CHECK(coefficient_ring(Theory::OrientedSingular) == Ring::Z);
  CHECK(coefficient_ring(Theory::Euler) == Ring::GF2);
}

TEST_CASE("coefficient values") {
  const FiniteGroup s3 = construct_group("S3");
  const Subgroup t12 = make_subgroup(s3, {0, 2});
  for (const auto& h : enumerate_subgroups(s3))
    for (int q = 0; q < 4; ++q) {
      CHECK(system_value(Theory::All, q, s3, h).rank == 0);
      CHECK(system_value(Theory::Euler, q, s3, h).rank == 1);
    }
  CHECK(system_value(Theory::OrientedSingular, 0, s3, t12).rank == 2);
  CHECK(system_value(Theory::OrientedSingular, 1, s3, t12).rank == 0);
  const CoeffGroup v = system_value(Theory::UnorientedSingular, 0, s3, whole_group(s3));
  CHECK(v.rank == 2);
  CHECK(v.basis_labels == std::vector<std::string>{"[S3/C2]", "[S3/S3]"});
  CHECK_THROWS_AS(system_value(Theory::OrientedSingular, -1, s3, t12), ValidationError);
  CHECK_THROWS_AS(system_value(Theory::OrientedSingular, 0, s3, Subgroup{{0, 3}}), ValidationError);
}

TEST_CASE("coefficient maps") {
  const FiniteGroup c2 = construct_group("C2");
  const OrbitMorphism to_point = make_orbit_morphism(c2, trivial_subgroup(), whole_group(c2), 0);
  CHECK(system_map(Theory::Euler, 0, c2, to_point) == IntMatrix{{0}});
  CHECK(system_map(Theory::Euler, 5, c2, to_point) == IntMatrix{{0}});
  CHECK(system_map(Theory::All, 0, c2, to_point).rows() == 0);
  // [e/e] ↦ [C2/e], which has even Weyl index and projects to 0 in V(C2).
  CHECK(system_map(Theory::OrientedSingular, 0, c2, to_point) == IntMatrix{{1}, {0}});
  CHECK(system_map(Theory::UnorientedSingular, 0, c2, to_point) == IntMatrix{{0}});

  const FiniteGroup c3 = construct_group("C3");
  CHECK(system_map(Theory::Euler, 0, c3, make_orbit_morphism(c3, trivial_subgroup(), whole_group(c3), 0)) ==
        IntMatrix{{1}});
  // V(e) → V(C3): [e/e] ↦ [C3/e], an odd-Weyl basis vector.
  CHECK(system_map(Theory::UnorientedSingular, 0, c3,
                   make_orbit_morphism(c3, trivial_subgroup(), whole_group(c3), 0)) == IntMatrix{{1}, {0}});

  CHECK_THROWS_AS(make_orbit_morphism(c2, whole_group(c2), trivial_subgroup(), 0), ValidationError);
}

TEST_CASE("identity morphisms act as identities") {
  for (const char* spec : {"S3", "D4", "Q8"}) {
    const FiniteGroup g = construct_group(spec);
    for (const auto& h : enumerate_subgroups(g))
      for (Theory t : kAllTheories) {
        const std::size_t n = system_value(t, 0, g, h).rank;
        CHECK(system_map(t, 0, g, identity_morphism(h)) == IntMatrix::identity(n));
      }
  }
}

TEST_CASE("functoriality along composable morphisms") {
  const FiniteGroup s3 = construct_group("S3");
  const Subgroup e = trivial_subgroup();
  const Subgroup t12 = make_subgroup(s3, {0, 2});
  const OrbitMorphism f = make_orbit_morphism(s3, e, t12, 0);
  const OrbitMorphism g = make_orbit_morphism(s3, t12, whole_group(s3), 0);
  CHECK(compose_check(Theory::OrientedSingular, 0, s3, f, g));
  CHECK(compose_check(Theory::OrientedSingular, 0, s3, identity_morphism(e), f));
  // Direct formula: [e/e] ↦ [S3/e].
  CHECK(system_map(Theory::OrientedSingular, 0, s3, compose(s3, f, g)) == IntMatrix{{1}, {0}, {0}, {0}});
  CHECK_THROWS_AS(compose_check(Theory::OrientedSingular, 0, s3, g, f), ValidationError);

  // Every composable pair in D4, every theory.
  const FiniteGroup d4 = construct_group("D4");
  const auto subs = enumerate_subgroups(d4);
  std::size_t pairs = 0;
  for (const auto& h : subs)
    for (const auto& k : subs)
      for (Element a = 0; a < 8; ++a) {
        if (!is_subconjugate(d4, h, k, a)) continue;
        for (const auto& l : subs)
          for (Element b = 0; b < 8; b += 3) {
            if (!is_subconjugate(d4, k, l, b)) continue;
            const OrbitMorphism f1 = make_orbit_morphism(d4, h, k, a);
            const OrbitMorphism f2 = make_orbit_morphism(d4, k, l, b);
            for (Theory t : kAllTheories) CHECK(compose_check(t, 0, d4, f1, f2));
            // Euler: index parities multiply.
            const int parity = (l.order() / h.order()) % 2;
            CHECK(system_map(Theory::Euler, 2, d4, compose(d4, f1, f2)) == IntMatrix{{parity}});
            ++pairs;
          }
      }
  CHECK(pairs > 100);
}

TEST_CASE("maps depend only on the G-map") {
  const FiniteGroup d4 = construct_group("D4");
  for (const auto& h : enumerate_subgroups(d4))
    for (const auto& k : enumerate_subgroups(d4))
      for (Element a = 0; a < 8; ++a) {
        if (!is_subconjugate(d4, h, k, a)) continue;
        const OrbitMorphism f = make_orbit_morphism(d4, h, k, a);
        for (Element x : k.elems) {
          const OrbitMorphism f2 = make_orbit_morphism(d4, h, k, d4.mul(a, x));
          CHECK(same_morphism(d4, f, f2));
          for (Theory t : kAllTheories) CHECK(system_map(t, 0, d4, f) == system_map(t, 0, d4, f2));
        }
      }
}
