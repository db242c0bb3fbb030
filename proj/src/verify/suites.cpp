#include "bredonite/verify/suites.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include <unistd.h>

#include "bredonite/burnside.hpp"
#include "bredonite/coeff.hpp"
#include "bredonite/complex.hpp"
#include "bredonite/complex_io.hpp"
#include "bredonite/engine.hpp"
#include "bredonite/error.hpp"
#include "bredonite/linalg/normal_forms.hpp"
#include "bredonite/verify/oracles.hpp"

namespace bredonite::verify {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

const std::vector<std::string> kTestGroups = {"C1", "C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"};

class Checker {
 public:
  explicit Checker(SuiteResult& r) : r_(r) {}

  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) r_.failures.push_back(what);
  }

  // Runs f, recording any exception as a failure.
  template <typename F>
  void guarded(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      ++r_.checks;
      r_.failures.push_back(what + ": threw " + e.what());
    }
  }

 private:
  SuiteResult& r_;
};

HomologyGroup zgroup(std::size_t rank, IntVector torsion = {}) { return {Ring::Z, rank, std::move(torsion)}; }
HomologyGroup f2group(std::size_t rank) { return {Ring::GF2, rank, {}}; }

std::string show(const std::vector<HomologyGroup>& hs) {
  std::string s = "(";
  for (std::size_t n = 0; n < hs.size(); ++n) s += (n ? ", " : "") + hs[n].to_string();
  return s + ")";
}

std::vector<Subgroup> class_reps(const FiniteGroup& g) { return subgroup_classes(g).reps(); }

// Two vertices and two edges over the trivial group.
GCWComplex trivial_circle() {
  const Subgroup e = trivial_subgroup();
  return GCWComplex(FiniteGroup(), {{"v0", 0, e}, {"v1", 0, e}, {"e0", 1, e}, {"e1", 1, e}},
                    {{"e0", "v0", 0, -1}, {"e0", "v1", 0, 1}, {"e1", "v1", 0, -1}, {"e1", "v0", 0, 1}});
}

// H/K as an H-set, H = ring.ambient().
GSet coset_set(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  std::vector<std::vector<Element>> cosets;
  std::map<Element, std::size_t> where;
  for (Element x : h.elems) {
    if (where.contains(x)) continue;
    std::vector<Element> c;
    for (Element y : k.elems) {
      c.push_back(g.mul(x, y));
      where[g.mul(x, y)] = cosets.size();
    }
    cosets.push_back(c);
  }
  GSet s;
  s.points = cosets.size();
  for (Element a : h.elems) {
    std::vector<std::size_t> row;
    for (const auto& c : cosets) row.push_back(where.at(g.mul(a, c.front())));
    s.action.push_back(row);
  }
  return s;
}

GSet disjoint(const GSet& a, const GSet& b) {
  GSet s;
  s.points = a.points + b.points;
  for (std::size_t k = 0; k < a.action.size(); ++k) {
    auto row = a.action[k];
    for (std::size_t p : b.action[k]) row.push_back(p + a.points);
    s.action.push_back(row);
  }
  return s;
}

GSet product(const GSet& a, const GSet& b) {
  GSet s;
  s.points = a.points * b.points;
  for (std::size_t k = 0; k < a.action.size(); ++k) {
    std::vector<std::size_t> row(s.points);
    for (std::size_t p = 0; p < a.points; ++p)
      for (std::size_t q = 0; q < b.points; ++q) row[p * b.points + q] = a.action[k][p] * b.points + b.action[k][q];
    s.action.push_back(row);
  }
  return s;
}

BurnsideElement random_element(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_int_distribution<int> dist(-3, 3);
  BurnsideElement x{IntVector(rank)};
  for (auto& c : x.coords) c = dist(rng);
  return x;
}

// ---------------------------------------------------------------------------

void coefficients_suite(Checker& c) {
  for (const auto& spec : kTestGroups) {
    const FiniteGroup g = construct_group(spec);
    for (const auto& h : oracle::all_subgroups(g)) {
      const std::string where = spec + " H=" + format_elements(h);
      c.guarded(where, [&] {
        for (int q = 0; q <= 3; ++q) {
          const std::string at = where + " q=" + std::to_string(q);
          c.check(system_value(Theory::All, q, g, h).rank == 0, "all nonzero at " + at);
          const CoeffGroup eu = system_value(Theory::Euler, q, g, h);
          c.check(eu.ring == Ring::GF2 && eu.rank == 1, "euler not Z/2 at " + at);
          const CoeffGroup ori = system_value(Theory::OrientedSingular, q, g, h);
          c.check(ori.ring == Ring::Z && ori.rank == (q == 0 ? oracle::class_count(g, h) : 0),
                  "oriented rank mismatch at " + at);
          const CoeffGroup un = system_value(Theory::UnorientedSingular, q, g, h);
          c.check(un.ring == Ring::GF2 && un.rank == (q == 0 ? oracle::odd_weyl_count(g, h) : 0),
                  "unoriented dimension mismatch at " + at);
        }
        for (Theory t : kAllTheories)
          c.check(coefficient_check(t, g, h, 3), std::string(to_string(t)) + " orbit homology mismatch at " + where);

        EngineOptions opt;
        opt.euler_degrees = 3;
        const TheoryResult eh = equivariant_homology(build_orbit(g, h), Theory::Euler, opt);
        c.check(eh.exact && eh.e2_page && eh.groups == std::vector<HomologyGroup>(4, f2group(1)),
                "euler orbit homology " + show(eh.groups) + " at " + where);
        const TheoryResult oh = equivariant_homology(build_orbit(g, h), Theory::OrientedSingular);
        c.check(oh.groups == std::vector<HomologyGroup>{zgroup(oracle::class_count(g, h))},
                "oriented orbit homology " + show(oh.groups) + " at " + where);
      });
    }
  }

  // Spot values of the table.
  auto whole = [](const char* spec) {
    const FiniteGroup g = construct_group(spec);
    return std::make_pair(g, whole_group(g));
  };
  const std::pair<const char*, std::size_t> ranks[] = {{"S3", 4}, {"C2xC2", 5}};
  for (const auto& [spec, rank] : ranks) {
    const auto [g, h] = whole(spec);
    c.check(oracle::class_count(g, h) == rank && system_value(Theory::OrientedSingular, 0, g, h).rank == rank,
            std::string("rank A(") + spec + ") != " + std::to_string(rank));
  }
  const std::pair<const char*, std::size_t> dims[] = {{"C2", 1}, {"C3", 2}, {"S3", 2}};
  for (const auto& [spec, dim] : dims) {
    const auto [g, h] = whole(spec);
    c.check(oracle::odd_weyl_count(g, h) == dim && system_value(Theory::UnorientedSingular, 0, g, h).rank == dim,
            std::string("dim V(") + spec + ") != " + std::to_string(dim));
  }
}

// ---------------------------------------------------------------------------

void burnside_suite(Checker& c, std::mt19937_64& rng) {
  for (const auto& spec : kTestGroups) {
    const FiniteGroup g = construct_group(spec);
    const auto subs = oracle::all_subgroups(g);
    std::map<std::vector<Element>, std::shared_ptr<BurnsideRing>> rings;
    auto ring_of = [&](const Subgroup& h) -> const BurnsideRing& {
      auto& slot = rings[h.elems];
      if (!slot) slot = std::make_shared<BurnsideRing>(g, h);
      return *slot;
    };

    for (const auto& h : subs) {
      const std::string where = spec + " H=" + format_elements(h);
      c.guarded(where, [&] {
        const BurnsideRing& r = ring_of(h);
        const std::size_t m = r.rank();
        c.check(m == oracle::class_count(g, h), "class count at " + where);

        bool marks_ok = true;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) {
            const BigInt expected = oracle::mark(g, h, r.classes().rep(i), r.classes().rep(j));
            marks_ok = marks_ok && r.table().marks(i, j) == expected && (j <= i || expected == 0);
          }
        c.check(marks_ok, "table of marks at " + where);

        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) {
            const auto xy = r.multiply(r.basis(i), r.basis(j));
            c.check(xy.coords == oracle::product_decomposition(r, i, j),
                    "product of classes " + std::to_string(i) + "," + std::to_string(j) + " at " + where);
            c.check(xy == r.multiply(r.basis(j), r.basis(i)), "commutativity at " + where);
          }
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
              const auto x = r.basis(i), y = r.basis(j), z = r.basis(k);
              c.check(r.multiply(r.multiply(x, y), z) == r.multiply(x, r.multiply(y, z)), "associativity at " + where);
            }
        for (int s = 0; s < 5; ++s) {
          const auto x = random_element(rng, m), y = random_element(rng, m), z = random_element(rng, m);
          c.check(r.multiply(x, y + z) == r.multiply(x, y) + r.multiply(x, z), "distributivity at " + where);
          c.check(r.multiply(r.one(), x) == x && r.multiply(x, r.one()) == x, "unit at " + where);
          const IntVector mx = r.mark_vector(x), my = r.mark_vector(y), mxy = r.mark_vector(r.multiply(x, y));
          bool hom = true;
          for (std::size_t j = 0; j < m; ++j) hom = hom && mxy[j] == mx[j] * my[j];
          c.check(hom, "marks not multiplicative at " + where);
          c.check(r.from_marks(mx) == x, "from_marks round trip at " + where);
        }

        // G-sets.
        std::vector<GSet> orbits;
        for (std::size_t i = 0; i < m; ++i) orbits.push_back(coset_set(g, h, r.classes().rep(i)));
        for (std::size_t i = 0; i < m; ++i) {
          c.check(decompose_gset(r, orbits[i]) == r.basis(i), "orbit decomposition at " + where);
          for (std::size_t j = 0; j < m; ++j) {
            const GSet sum = disjoint(orbits[i], orbits[j]);
            const GSet prod = product(orbits[i], orbits[j]);
            c.check(decompose_gset(r, sum) == r.basis(i) + r.basis(j), "additivity at " + where);
            c.check(decompose_gset(r, prod) == r.multiply(r.basis(i), r.basis(j)), "multiplicativity at " + where);
            c.check(decompose_gset(r, prod).coords == oracle::orbit_census(r, prod), "product census at " + where);
          }
        }
        GSet trivial3;
        trivial3.points = 3;
        trivial3.action.assign(h.elems.size(), {0, 1, 2});
        c.check(decompose_gset(r, trivial3) == BigInt(3) * r.one(), "trivial action at " + where);
        c.check(decompose_gset(r, coset_set(g, h, trivial_subgroup())) == r.basis(0), "regular action at " + where);

        // n0 basis.
        c.check(r.n0_basis().size() == oracle::odd_weyl_count(g, h), "n0 basis size at " + where);
        for (std::size_t i = 0; i < m; ++i) {
          c.check(r.n0_project(BigInt(2) * r.basis(i)).is_zero(), "n0 of 2x at " + where);
          c.check(r.n0_project(r.basis(i)).is_zero() == (r.n0_position(i) < 0), "n0 of basis at " + where);
        }
      });
    }

    // Induction along gH ↦ gaK.
    for (const auto& h : subs)
      for (const auto& k : subs)
        for (Element a = 0; a < g.order(); ++a) {
          if (!is_subconjugate(g, h, k, a)) continue;
          const std::string where =
              spec + " " + format_elements(h) + " -> " + format_elements(k) + " a=" + std::to_string(a);
          c.guarded(where, [&] {
            const BurnsideRing& from = ring_of(h);
            const BurnsideRing& to = ring_of(k);
            const IntMatrix m = burnside_induce_matrix(from, to, a);
            bool oracle_ok = true;
            for (std::size_t i = 0; i < from.rank(); ++i)
              oracle_ok = oracle_ok && m.column(i) == oracle::induced_class(from, to, a, i);
            c.check(oracle_ok, "induce vs fiber oracle at " + where);
            for (Element x : k.elems)
              c.check(burnside_induce_matrix(from, to, g.mul(a, x)) == m, "depends on coset rep a·k at " + where);
            for (Element x : h.elems)
              c.check(burnside_induce_matrix(from, to, g.mul(x, a)) == m, "depends on coset rep h·a at " + where);
            if (h == k && a == 0) c.check(m == IntMatrix::identity(from.rank()), "identity morphism at " + where);
          });
        }

    // Functoriality over class representatives.
    const SubgroupClassTable classes = subgroup_classes(g);
    for (const auto& h : classes.reps())
      for (const auto& k : classes.reps())
        for (const auto& l : classes.reps())
          for (Element a = 0; a < g.order(); ++a) {
            if (!is_subconjugate(g, h, k, a)) continue;
            for (Element b = 0; b < g.order(); ++b) {
              if (!is_subconjugate(g, k, l, b)) continue;
              const IntMatrix lhs = burnside_induce_matrix(ring_of(h), ring_of(l), g.mul(a, b));
              const IntMatrix rhs = burnside_induce_matrix(ring_of(k), ring_of(l), b) *
                                    burnside_induce_matrix(ring_of(h), ring_of(k), a);
              c.check(lhs == rhs, spec + " functoriality " + format_elements(h) + " -> " + format_elements(k) +
                                      " -> " + format_elements(l));
            }
          }
  }
}

// ---------------------------------------------------------------------------

void borel_suite(Checker& c) {
  struct Case {
    std::string name;
    GCWComplex x;
  };
  const Case cases[] = {{"antipodal circle", build_free_circle(2)},
                        {"free C4 circle", build_free_circle(4)},
                        {"free C3 circle", build_free_circle(3)},
                        {"free orbit point", build_orbit(construct_group("S3"), trivial_subgroup())}};
  for (const auto& [name, x] : cases) {
    const bool circle = x.dimension() == 1;
    for (Theory t : kAllTheories) {
      const std::string where = name + " " + std::string(to_string(t));
      c.guarded(where, [&] {
        const ComparisonReport r = free_borel_compare(x, t);
        c.check(r.equal, where + ": " + r.detail);
        // Quotient-circle oracle: H(S¹; Z) = (Z, Z), H(S¹; F2) = (Z/2, Z/2).
        std::vector<HomologyGroup> expected;
        switch (t) {
          case Theory::All:
            expected.assign(circle ? 2 : 1, zgroup(0));
            break;
          case Theory::OrientedSingular:
            expected.assign(circle ? 2 : 1, zgroup(1));
            break;
          case Theory::UnorientedSingular:
            expected.assign(circle ? 2 : 1, f2group(1));
            break;
          case Theory::Euler:
            // E2 columns (Z/2, Z/2) in q = 0 and q = 1: totals Z/2, (Z/2)^2.
            expected = circle ? std::vector<HomologyGroup>{f2group(1), f2group(2)} : std::vector{f2group(1)};
            break;
        }
        c.check(r.rhs.groups == expected, where + ": quotient side " + show(r.rhs.groups));
      });
    }
  }
}

// ---------------------------------------------------------------------------

void induction_suite(Checker& c) {
  auto compare_all = [&](const std::string& name, const GroupEmbedding& alpha, const GCWComplex& x) {
    for (Theory t : kAllTheories) {
      const std::string where = name + " " + std::string(to_string(t));
      c.guarded(where, [&] {
        const ComparisonReport r = induction_compare(alpha, x, t);
        c.check(r.equal, where + ": " + r.detail);
      });
    }
  };

  const FiniteGroup c2 = construct_group("C2");
  const FiniteGroup s3 = construct_group("S3");
  const FiniteGroup d4 = construct_group("D4");

  // {e} ≤ C2 with the trivial circle; the oriented groups are (Z, Z).
  const GroupEmbedding e_c2 = inclusion(c2, trivial_subgroup());
  compare_all("e<=C2 trivial circle", e_c2, trivial_circle());
  c.guarded("e<=C2 oriented values", [&] {
    const ComparisonReport r = induction_compare(e_c2, trivial_circle(), Theory::OrientedSingular);
    c.check(r.rhs.groups == std::vector{zgroup(1), zgroup(1)}, "e<=C2 induced circle " + show(r.rhs.groups));
  });

  // C2 ≤ S3 and C2 ≤ D4 with orbit complexes, for every class of C2.
  auto orbit_cases = [&](const FiniteGroup& g, const char* gname) {
    for (const auto& h : class_reps(g)) {
      if (h.order() != 2) continue;
      const GroupEmbedding alpha = inclusion(g, h);
      const FiniteGroup& src = alpha.source;
      const std::string name = std::string("C2<=") + gname + " " + format_elements(h);
      compare_all(name + " orbit C2/C2", alpha, build_orbit(src, whole_group(src)));
      compare_all(name + " orbit C2/e", alpha, build_orbit(src, trivial_subgroup()));
      compare_all(name + " disjoint orbits", alpha,
                  disjoint_union({build_orbit(src, whole_group(src)), build_orbit(src, trivial_subgroup()),
                                  build_orbit(src, whole_group(src))}));
      c.guarded(name + " coefficients", [&] {
        // H^G(G ×_H H/H) = H^G(G/H) = M(G/H) = M(H/H).
        const ComparisonReport r = induction_compare(alpha, build_orbit(src, whole_group(src)),
                                                     Theory::OrientedSingular);
        c.check(r.rhs.groups == std::vector{zgroup(2)}, name + " A(C2) on both sides " + show(r.rhs.groups));
      });
    }
  };
  orbit_cases(s3, "S3");
  orbit_cases(d4, "D4");

  // Reflection circle pushed into D4 along each C2.
  for (const auto& h : class_reps(d4)) {
    if (h.order() != 2) continue;
    const GroupEmbedding alpha = inclusion(d4, h);
    const GCWComplex x = build_reflection_circle();
    const GroupEmbedding to_src = make_embedding(x.group(), alpha.source, {0, 1});
    const GroupEmbedding beta = compose(to_src, alpha);
    compare_all("reflection circle C2<=D4 " + format_elements(h), beta, x);
  }

  // Identity embedding.
  compare_all("G<=G S3 orbit", inclusion(s3, whole_group(s3)), build_orbit(s3, subgroup_classes(s3).rep(1)));

  // Functoriality {e} ≤ C2 ≤ D4: inducing in two steps equals inducing along
  // the composite, and all three complexes have the same homology.
  for (const auto& h : class_reps(d4)) {
    if (h.order() != 2) continue;
    const std::string where = "e<=C2<=D4 " + format_elements(h);
    c.guarded(where, [&] {
      const GroupEmbedding beta = compose(make_embedding(c2, inclusion(d4, h).source, {0, 1}), inclusion(d4, h));
      const GroupEmbedding composite = compose(e_c2, beta);
      const GCWComplex x = trivial_circle();
      const GCWComplex two_step = induce_complex(beta, induce_complex(e_c2, x));
      const GCWComplex one_step = induce_complex(composite, x);
      c.check(normalize(two_step) == normalize(one_step), where + ": induced complexes differ");
      for (Theory t : kAllTheories) {
        const TheoryResult a = equivariant_homology(x, t);
        const TheoryResult b = equivariant_homology(two_step, t);
        const TheoryResult d = equivariant_homology(one_step, t);
        c.check(a == b && b == d, where + " " + std::string(to_string(t)) + ": " + show(a.groups) + " " +
                                      show(b.groups) + " " + show(d.groups));
      }
    });
  }
}

// ---------------------------------------------------------------------------

void mv_suite(Checker& c, std::mt19937_64& rng) {
  auto run = [&](const std::string& name, const GCWComplex& x, const std::set<std::string>& p1,
                 const std::set<std::string>& p2) {
    for (Theory t : kAllTheories) {
      const std::string where = name + " " + std::string(to_string(t));
      c.guarded(where, [&] {
        const MvReport r = mv_check(x, p1, p2, t);
        c.check(r.exact, where + ": " + r.detail);
      });
    }
  };

  const FiniteGroup c2 = construct_group("C2");
  const GCWComplex sphere = build_trivial_sphere(c2, 1);
  run("hemispheres of trivial_sphere(C2,1)", sphere, {"n1", "n0", "s0"}, {"s1", "n0", "s0"});
  c.guarded("hemisphere connecting map", [&] {
    // H1(S¹) = A(C2) injects into H0 of the two fixed points.
    const MvReport r = mv_check(sphere, {"n1", "n0", "s0"}, {"s1", "n0", "s0"}, Theory::OrientedSingular);
    const IntMatrix& d = r.sequences.front().connecting.at(1);
    c.check(d.cols() == 2 && matrix_rank(d) == 2, "connecting map H1 -> H0 not injective");
  });

  const GCWComplex arcs = build_subdivided_reflection_circle();
  run("reflection circle arcs", arcs, {"p", "e1", "m"}, {"m", "e2", "q"});

  std::set<std::string> all;
  for (const auto& cell : arcs.cells()) all.insert(cell.id);
  run("reflection circle X1 = X2 = X", arcs, all, all);
  const GCWComplex orbits =
      disjoint_union({build_orbit(c2, whole_group(c2)), build_orbit(c2, trivial_subgroup())});
  run("disjoint orbits", orbits, {"0.v0"}, {"1.v0"});

  const char* groups[] = {"C1", "C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"};
  for (int k = 0; k < 20; ++k) {
    const FiniteGroup g = construct_group(groups[std::uniform_int_distribution<int>(0, 7)(rng)]);
    const GCWComplex x = oracle::random_complex(rng, g, 8);
    const auto [p1, p2] = oracle::random_cover(rng, x);
    run("random cover " + std::to_string(k) + " over " + g.spec(), x, p1, p2);
  }
}

// ---------------------------------------------------------------------------

void reflection_suite(Checker& c) {
  // Hand Mayer–Vietoris for the C2-reflection circle: the two invariant arcs
  // around the fixed points contribute A(C2) = Z² each, and they meet in one
  // free orbit with A(e) = Z. The map Z → Z² ⊕ Z² sends the generator to
  // ([C2/e], −[C2/e]), which is injective with a primitive image, so
  // H1 = 0 and H0 = Z⁴ / Z = Z³.
  const std::vector<HomologyGroup> oriented = {zgroup(3), zgroup(0)};
  // Unoriented: V(C2) = F2 per arc, V(e) = F2 on the overlap, and the map
  // sends the generator to the projection of [C2/e], which is 0 (even Weyl
  // index). Hence H1 = F2 and H0 = F2².
  const std::vector<HomologyGroup> unoriented = {f2group(2), f2group(1)};

  const std::pair<const char*, GCWComplex> cases[] = {{"reflection_circle", build_reflection_circle()},
                                                      {"subdivided", build_subdivided_reflection_circle()}};
  for (const auto& [name, x] : cases) {
    c.guarded(name, [&] {
      c.check(validate_complex(x).ok() && x.cells().size() >= 3, std::string(name) + " is not a valid complex");
      const auto o = equivariant_homology(x, Theory::OrientedSingular).groups;
      c.check(o == oriented, std::string(name) + " oriented " + show(o));
      const auto u = equivariant_homology(x, Theory::UnorientedSingular).groups;
      c.check(u == unoriented, std::string(name) + " unoriented " + show(u));
    });
  }
}

// ---------------------------------------------------------------------------

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const BigInt d = determinant(m);
  return d == 1 || d == -1;
}

void linalg_suite(Checker& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(1, 8);
  std::uniform_int_distribution<int> small(1, 4);
  for (int k = 0; k < 200; ++k) {
    const bool oracle_sized = k % 2 == 0;
    const std::size_t rows = static_cast<std::size_t>(oracle_sized ? small(rng) : dim(rng));
    const std::size_t cols = static_cast<std::size_t>(oracle_sized ? small(rng) : dim(rng));
    IntMatrix a = oracle::random_matrix(rng, rows, cols, -9, 9);
    if (k % 7 == 3 && cols > 1) {
      // Force a dependent column.
      for (std::size_t r = 0; r < rows; ++r) a(r, cols - 1) = a(r, 0) * 2 - (cols > 2 ? a(r, 1) : BigInt(0));
    }
    const std::string where = "matrix " + std::to_string(k) + " (" + std::to_string(rows) + "x" +
                              std::to_string(cols) + ")";
    c.guarded(where, [&] {
      const SmithForm s = smith_normal_form(a);
      c.check(s.U * a * s.V == s.D, where + ": U·A·V != D");
      c.check(is_unimodular(s.U) && is_unimodular(s.V), where + ": U or V not unimodular");
      c.check(s.U * s.U_inv == IntMatrix::identity(rows) && s.V * s.V_inv == IntMatrix::identity(cols),
              where + ": tracked inverses wrong");
      bool diagonal = true, chain = true;
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t q = 0; q < cols; ++q)
          if (r != q && s.D(r, q) != 0) diagonal = false;
      const IntVector f = s.invariant_factors();
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] <= 0) chain = false;
        if (i + 1 < f.size() && f[i + 1] % f[i] != 0) chain = false;
      }
      c.check(diagonal && f.size() == s.rank, where + ": D not diagonal");
      c.check(chain, where + ": invariant factors do not form a divisibility chain");
      if (rows <= 4 && cols <= 4)
        c.check(f == oracle::minor_invariant_factors(a), where + ": invariant factors differ from minors oracle");

      // Lattice membership of a random combination and of a shifted vector.
      IntVector x(cols);
      for (auto& v : x) v = std::uniform_int_distribution<int>(-5, 5)(rng);
      const IntVector b = a * x;
      const auto sol = solve_in_span(a, b);
      c.check(sol && a * *sol == b, where + ": combination not recognised in span");
    });
  }
}

// ---------------------------------------------------------------------------

template <typename E, typename F>
bool throws_as(F&& f) {
  try {
    f();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

void degenerate_suite(Checker& c, const CliRunner& cli) {
  for (const char* spec : {"C1", "C2", "S3", "D4", "Q8"}) {
    const GCWComplex empty(construct_group(spec), {}, {});
    for (Theory t : kAllTheories) {
      const std::string where = std::string("empty complex over ") + spec + " " + std::string(to_string(t));
      c.guarded(where, [&] {
        EngineOptions opt;
        opt.euler_degrees = 3;
        const TheoryResult r = equivariant_homology(empty, t, opt);
        bool zero = !r.groups.empty();
        for (const auto& h : r.groups) zero = zero && h.is_zero();
        for (const auto& col : r.e2)
          for (const auto& h : col) zero = zero && h.is_zero();
        c.check(zero, where + ": " + show(r.groups));
      });
    }
  }
  c.guarded("empty complex JSON", [&] {
    const GCWComplex x = parse_complex(R"({"group": "S3", "cells": [], "boundary": []})");
    c.check(x.empty() && equivariant_homology(x, Theory::OrientedSingular).groups == std::vector{zgroup(0)},
            "empty JSON complex has nonzero homology");
  });

  c.check(throws_as<UsageError>([] { parse_theory("bogus"); }), "unknown theory is not a usage error");
  const char* malformed[] = {
      "{",
      "[]",
      R"({"group": "C2"})",
      R"({"group": "C2", "cells": [], "boundary": [], "extra": 1})",
      R"({"group": "C2", "cells": [{"id": "v", "dim": "zero", "stabilizer": [0]}], "boundary": []})",
      R"({"group": "C0", "cells": [], "boundary": []})",
      R"({"group": "C2", "cells": [{"id": "v", "dim": 0, "stabilizer": [0, 7]}], "boundary": []})",
  };
  for (const char* text : malformed)
    c.check(throws_as<Error>([&] { require_valid(parse_complex(text)); }),
            std::string("malformed input accepted: ") + text);
  c.check(throws_as<ValidationError>([] {
            require_valid(parse_complex(
                R"({"group": "C2", "cells": [{"id": "e", "dim": 1, "stabilizer": [0]}],
                    "boundary": [{"from": "e", "to": "nowhere", "a": 0, "deg": 1}]})"));
          }),
          "dangling boundary record accepted");

  if (!cli) return;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("bredonite-degenerate-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto write = [&](const char* name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  const std::string bad_json = write("bad.json", "{\"group\": \"C2\", \"cells\": [");
  const std::string empty_json = write("empty.json", R"({"group": "C2", "cells": [], "boundary": []})");
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const Case cases[] = {
      {{"homology", "bogus", "builder:orbit(C2)"}, 2},
      {{"coeff", "bogus", "S3"}, 2},
      {{"homology", "oriented", bad_json}, 1},
      {{"homology", "oriented", (dir / "missing.json").string()}, 1},
      {{"homology", "oriented", "builder:nonsense(C2)"}, 1},
      {{"group", "info", "C0"}, 1},
      {{"verify", "nosuch"}, 2},
      {{"frobnicate"}, 2},
      {{}, 2},
      {{"homology", "oriented", empty_json}, 0},
      {{"homology", "euler", empty_json, "--json"}, 0},
  };
  for (const auto& [args, code] : cases) {
    std::string line;
    for (const auto& a : args) line += " " + a;
    c.guarded("cli" + line, [&] {
      std::ostringstream out, err;
      const int got = cli(args, out, err);
      c.check(got == code, "cli" + line + ": exit " + std::to_string(got) + ", expected " + std::to_string(code));
      if (code != 0) c.check(!err.str().empty(), "cli" + line + ": no error message");
    });
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
}

struct SuiteInfo {
  const char* name;
  const char* title;
  double limit;
};

const SuiteInfo kSuites[] = {
    {"coefficients", "coefficient golden table", 5},
    {"burnside", "Burnside ring properties", 10},
    {"borel", "free-Borel comparison", 0},
    {"induction", "induction structure", 0},
    {"mv", "Mayer-Vietoris exactness", 30},
    {"reflection", "reflection circle fixture", 0},
    {"linalg", "linear-algebra contracts", 10},
    {"degenerate", "degenerate inputs", 0},
};

}  // namespace

std::uint64_t default_seed() {
  if (const char* s = std::getenv("BREDONITE_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(s, &used);
      if (used == std::string_view(s).size()) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

std::string SuiteResult::summary() const {
  std::ostringstream os;
  os << (passed() ? "PASS" : "FAIL") << "  " << title << ": " << checks << " checks, " << std::fixed
     << std::setprecision(2) << seconds << " s";
  if (time_limit > 0) os << " (limit " << std::setprecision(0) << time_limit << " s)";
  if (!failures.empty()) {
    os << ", " << failures.size() << " failed";
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i) os << "\n    " << failures[i];
  }
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.push_back(s.name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  const SuiteInfo* info = nullptr;
  for (const auto& s : kSuites)
    if (name == s.name) info = &s;
  if (info == nullptr) throw UsageError("unknown suite '" + std::string(name) + "'");

  SuiteResult result;
  result.name = info->name;
  result.title = info->title;
  result.time_limit = info->limit;
  Checker c(result);
  std::mt19937_64 rng(options.seed);
  const auto start = std::chrono::steady_clock::now();
  c.guarded(result.name, [&] {
    if (name == "coefficients") coefficients_suite(c);
    if (name == "burnside") burnside_suite(c, rng);
    if (name == "borel") borel_suite(c);
    if (name == "induction") induction_suite(c);
    if (name == "mv") mv_suite(c, rng);
    if (name == "reflection") reflection_suite(c);
    if (name == "linalg") linalg_suite(c, rng);
    if (name == "degenerate") degenerate_suite(c, options.cli);
  });
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace bredonite::verify
