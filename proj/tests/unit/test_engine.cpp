#include <doctest.h>

#include <random>

#include "bredonite/engine.hpp"
#include "bredonite/error.hpp"
#include "bredonite/linalg/normal_forms.hpp"
#include "bredonite/verify/oracles.hpp"

using namespace bredonite;

namespace {

HomologyGroup z(std::size_t r) { return {Ring::Z, r, {}}; }
HomologyGroup f2(std::size_t r) { return {Ring::GF2, r, {}}; }

GCWComplex trivial_circle() {
  const Subgroup e = trivial_subgroup();
  return GCWComplex(FiniteGroup(), {{"v0", 0, e}, {"v1", 0, e}, {"e0", 1, e}, {"e1", 1, e}},
                    {{"e0", "v0", 0, -1}, {"e0", "v1", 0, 1}, {"e1", "v1", 0, -1}, {"e1", "v0", 0, 1}});
}

}  // namespace

TEST_CASE("Bredon chain complexes") {
  const FiniteGroup s3 = construct_group("S3");
  const Subgroup t12 = make_subgroup(s3, {0, 2});
  const BredonChains orbit = bredon_complex(build_orbit(s3, t12), Theory::OrientedSingular, 0);
  CHECK(orbit.chains.top_degree() == 0);
  CHECK(orbit.chains.rank(0) == 2);

  const BredonChains all = bredon_complex(build_trivial_sphere(s3, 2), Theory::All, 0);
  for (int n = 0; n <= 2; ++n) CHECK(all.chains.rank(n) == 0);

  const BredonChains anti = bredon_complex(build_free_circle(2), Theory::UnorientedSingular, 0);
  CHECK(anti.chains.ring() == Ring::GF2);
  CHECK(anti.chains.differential(1) == IntMatrix{{0}});

  CHECK_THROWS_AS(bredon_complex(build_free_circle(2), Theory::OrientedSingular, -1), ValidationError);
}

TEST_CASE("homology of orbits") {
  const FiniteGroup s3 = construct_group("S3");
  const Subgroup t12 = make_subgroup(s3, {0, 2});
  CHECK(equivariant_homology(build_orbit(s3, t12), Theory::OrientedSingular).groups == std::vector{z(2)});

  EngineOptions opt;
  opt.euler_degrees = 4;
  const TheoryResult eh = equivariant_homology(build_orbit(s3, t12), Theory::Euler, opt);
  CHECK(eh.e2_page);
  CHECK(eh.exact);
  CHECK(eh.groups == std::vector<HomologyGroup>(5, f2(1)));

  CHECK(coefficient_check(Theory::All, s3, make_subgroup(s3, {0, 3, 4})));
  CHECK(coefficient_check(Theory::UnorientedSingular, s3, whole_group(s3)));
  const FiniteGroup c2 = construct_group("C2");
  CHECK(coefficient_check(Theory::OrientedSingular, c2, trivial_subgroup()));
  CHECK(equivariant_homology(build_orbit(c2, trivial_subgroup()), Theory::OrientedSingular).groups ==
        std::vector{z(1)});
}

TEST_CASE("reflection circle") {
  // Hand Mayer–Vietoris: two invariant arcs with A(C2) = Z², overlapping in a
  // free orbit with A(e) = Z mapped injectively onto a primitive vector.
  CHECK(equivariant_homology(build_reflection_circle(), Theory::OrientedSingular).groups ==
        std::vector{z(3), z(0)});
  CHECK(equivariant_homology(build_subdivided_reflection_circle(), Theory::OrientedSingular).groups ==
        std::vector{z(3), z(0)});
  CHECK(equivariant_homology(build_reflection_circle(), Theory::UnorientedSingular).groups ==
        std::vector{f2(2), f2(1)});
  CHECK(equivariant_homology(build_reflection_circle(), Theory::All).groups == std::vector{z(0), z(0)});
}

TEST_CASE("trivial actions tensor ordinary homology with the coefficients") {
  const FiniteGroup s3 = construct_group("S3");
  // S² with trivial S3 action: H0 = H2 = A(S3) = Z⁴.
  CHECK(equivariant_homology(build_trivial_sphere(s3, 2), Theory::OrientedSingular).groups ==
        std::vector{z(4), z(0), z(4)});
  CHECK(equivariant_homology(build_trivial_sphere(s3, 2), Theory::UnorientedSingular).groups ==
        std::vector{f2(2), f2(0), f2(2)});
}

TEST_CASE("Euler E2 page for a positive-dimensional complex") {
  const TheoryResult r = equivariant_homology(build_free_circle(3), Theory::Euler);
  CHECK(r.e2_page);
  CHECK_FALSE(r.exact);
  REQUIRE(r.e2.size() == 2);
  CHECK(r.e2[0] == std::vector{f2(1), f2(1)});
  CHECK(r.e2[1] == r.e2[0]);
  CHECK(r.groups == std::vector{f2(1), f2(2)});
}

TEST_CASE("additivity over disjoint unions") {
  const FiniteGroup d4 = construct_group("D4");
  const auto subs = enumerate_subgroups(d4);
  for (Theory t : kAllTheories) {
    std::vector<GCWComplex> parts{build_orbit(d4, subs[1]), build_trivial_sphere(d4, 1), build_orbit(d4, subs[5])};
    const TheoryResult whole = equivariant_homology(disjoint_union(parts), t);
    std::vector<HomologyGroup> sum(2, HomologyGroup{coefficient_ring(t), 0, {}});
    for (const auto& p : parts) {
      const TheoryResult r = equivariant_homology(p, t, {.euler_degrees = 1});
      for (std::size_t n = 0; n < r.groups.size(); ++n) sum[n] = direct_sum(sum[n], r.groups[n]);
    }
    CHECK(whole.groups == sum);
  }
}

TEST_CASE("threads do not change results") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 10; ++k) {
    const GCWComplex x = oracle::random_complex(rng, construct_group("D4"));
    for (Theory t : kAllTheories)
      CHECK(equivariant_homology(x, t, {.euler_degrees = -1, .threads = 4}) == equivariant_homology(x, t));
  }
}

TEST_CASE("empty complex") {
  const GCWComplex empty(construct_group("S3"), {}, {});
  for (Theory t : kAllTheories) {
    const TheoryResult r = equivariant_homology(empty, t);
    REQUIRE(r.groups.size() == 1);
    CHECK(r.groups[0].is_zero());
  }
}

TEST_CASE("free Borel comparison") {
  const ComparisonReport anti = free_borel_compare(build_free_circle(2), Theory::OrientedSingular);
  CHECK(anti.equal);
  CHECK(anti.rhs.groups == std::vector{z(1), z(1)});
  const ComparisonReport c4 = free_borel_compare(build_free_circle(4), Theory::UnorientedSingular);
  CHECK(c4.equal);
  CHECK(c4.rhs.groups == std::vector{f2(1), f2(1)});
  const FiniteGroup s3 = construct_group("S3");
  const ComparisonReport pt = free_borel_compare(build_orbit(s3, trivial_subgroup()), Theory::OrientedSingular);
  CHECK(pt.equal);
  CHECK(pt.lhs.groups == std::vector{z(1)});
  CHECK_THROWS_AS(free_borel_compare(build_reflection_circle(), Theory::OrientedSingular), ValidationError);
}

TEST_CASE("induction comparison") {
  const FiniteGroup c2 = construct_group("C2");
  const ComparisonReport r = induction_compare(inclusion(c2, trivial_subgroup()), trivial_circle(),
                                               Theory::OrientedSingular);
  CHECK(r.equal);
  CHECK(r.rhs.groups == std::vector{z(1), z(1)});

  const FiniteGroup s3 = construct_group("S3");
  const GroupEmbedding alpha = inclusion(s3, make_subgroup(s3, {0, 2}));
  for (Theory t : kAllTheories) {
    const ComparisonReport o = induction_compare(alpha, build_orbit(alpha.source, whole_group(alpha.source)), t);
    CHECK(o.equal);
    CHECK(o.lhs.groups.front().free_rank == system_value(t, 0, alpha.source, whole_group(alpha.source)).rank);
  }
  const GroupEmbedding id = inclusion(s3, whole_group(s3));
  CHECK(induction_compare(id, build_trivial_sphere(id.source, 1), Theory::OrientedSingular).equal);
}

TEST_CASE("Mayer-Vietoris") {
  const FiniteGroup c2 = construct_group("C2");
  const GCWComplex sphere = build_trivial_sphere(c2, 1);
  const std::set<std::string> all{"n0", "s0", "n1", "s1"};
  for (Theory t : kAllTheories) {
    CHECK(mv_check(sphere, all, all, t).exact);
    CHECK(mv_check(sphere, {"n1", "n0", "s0"}, {"s1", "n0", "s0"}, t).exact);
  }
  const MvReport same = mv_check(sphere, all, all, Theory::OrientedSingular);
  for (const auto& d : same.sequences.front().connecting) CHECK(d.is_zero());

  const MvReport hemi = mv_check(sphere, {"n1", "n0", "s0"}, {"s1", "n0", "s0"}, Theory::OrientedSingular);
  const IntMatrix& d = hemi.sequences.front().connecting.at(1);
  CHECK(d.cols() == 2);
  CHECK(matrix_rank(d) == 2);

  const GCWComplex orbits = disjoint_union({build_orbit(c2, whole_group(c2)), build_orbit(c2, trivial_subgroup())});
  CHECK(mv_check(orbits, {"0.v0"}, {"1.v0"}, Theory::OrientedSingular).exact);
  CHECK_THROWS_AS(mv_check(orbits, {"0.v0"}, {"0.v0"}, Theory::OrientedSingular), ValidationError);
  CHECK_THROWS_AS(mv_check(sphere, {"n1"}, all, Theory::OrientedSingular), ValidationError);

  const MvReport euler = mv_check(build_subdivided_reflection_circle(), {"p", "e1", "m"}, {"m", "e2", "q"},
                                  Theory::Euler);
  CHECK(euler.exact);
  CHECK(euler.sequences.size() == 2);
}

TEST_CASE("Mayer-Vietoris on random covers") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 15; ++k) {
    const GCWComplex x = oracle::random_complex(rng, construct_group(k % 3 ? "S3" : "Q8"));
    const auto [p1, p2] = oracle::random_cover(rng, x);
    for (Theory t : kAllTheories) CHECK(mv_check(x, p1, p2, t).exact);
  }
}

TEST_CASE("cellular chains of a trivial-group complex") {
  const ChainComplex c = cellular_chains(trivial_circle(), Ring::Z);
  CHECK(chain_homology(c) == std::vector{z(1), z(1)});
  CHECK_THROWS_AS(cellular_chains(build_free_circle(2), Ring::Z), ValidationError);
}
