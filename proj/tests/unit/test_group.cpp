#include <doctest.h>

#include "bredonite/error.hpp"
#include "bredonite/group.hpp"
#include "bredonite/verify/oracles.hpp"

using namespace bredonite;

namespace {

const char* const kGroups[] = {"C1", "C2", "C3", "C4", "C6", "C2xC2", "S3", "D4", "D5", "Q8", "C2xC2xC2", "perm:[(1,2,3),(1,2)(3,4)]"};

Subgroup subgroup_of(const FiniteGroup& g, std::vector<Element> elems) { return make_subgroup(g, std::move(elems)); }

}  // namespace

TEST_CASE("construct_group builds the documented families") {
  CHECK(construct_group("C1").order() == 1);

  const FiniteGroup s3 = construct_group("S3");
  CHECK(s3.order() == 6);
  CHECK(oracle::order_census(s3)[2] == 3);
  CHECK_FALSE(s3.is_abelian());

  const FiniteGroup v4 = construct_group("C2xC2");
  CHECK(v4.order() == 4);
  CHECK(oracle::order_census(v4)[2] == 3);
  CHECK(v4.is_abelian());

  const FiniteGroup q8 = construct_group("Q8");
  CHECK(oracle::order_census(q8)[4] == 6);
  CHECK(oracle::order_census(q8)[2] == 1);

  const FiniteGroup d4 = construct_group("D4");
  CHECK(d4.order() == 8);
  CHECK(oracle::order_census(d4)[2] == 5);

  CHECK(construct_group("S5").order() == 120);
  CHECK(construct_group(" C3 x S3 ").order() == 18);
}

TEST_CASE("permutation specs close under composition") {
  const FiniteGroup a4 = construct_group("perm:[(1,2,3),(1,2)(3,4)]");
  CHECK(a4.order() == 12);
  CHECK(oracle::order_census(a4)[3] == 8);
  const FiniteGroup s3 = construct_group("perm:[(1,2),(1,2,3)]");
  CHECK(s3.order() == 6);
  CHECK(s3.element_name(0) == "e");
}

TEST_CASE("malformed group specs are parse errors") {
  for (const char* bad : {"", "C0", "C", "X3", "S9", "Cx2", "perm:[(1,1)]", "perm:(1,2)", "C2xx", "C99999"})
    CHECK_THROWS_AS(construct_group(bad), ParseError);
}

TEST_CASE("from_table validates the group axioms") {
  CHECK(FiniteGroup::from_table({{0, 1}, {1, 0}}).order() == 2);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), ValidationError);
  // A Latin square with identity 0 that is not associative.
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1},
                                           {4, 3, 1, 2, 0}}),
                  ValidationError);
}

TEST_CASE("group tables satisfy the invariants") {
  for (const char* spec : kGroups) {
    CAPTURE(spec);
    const FiniteGroup g = construct_group(spec);
    CHECK_NOTHROW(FiniteGroup::from_table(g.cayley_table()));
    for (Element x = 0; x < g.order(); ++x) CHECK(g.mul(x, g.inv(x)) == 0);
  }
}

TEST_CASE("enumerate_subgroups agrees with the all-subsets oracle") {
  for (const char* spec : kGroups) {
    CAPTURE(spec);
    const FiniteGroup g = construct_group(spec);
    CHECK(enumerate_subgroups(g) == oracle::all_subgroups(g));
  }
  const FiniteGroup s3 = construct_group("S3");
  const auto subs = enumerate_subgroups(s3);
  CHECK(subs.size() == 6);
  CHECK(enumerate_subgroups(construct_group("C2xC2")).size() == 5);
  CHECK(enumerate_subgroups(construct_group("C1")).size() == 1);
  int order2 = 0;
  for (const auto& s : subs) order2 += s.order() == 2;
  CHECK(order2 == 3);
}

TEST_CASE("subgroup classes agree with the conjugation oracle") {
  for (const char* spec : kGroups) {
    CAPTURE(spec);
    const FiniteGroup g = construct_group(spec);
    const SubgroupClassTable t = subgroup_classes(g);
    CHECK(t.size() == oracle::class_count(g, whole_group(g)));
    for (std::size_t i = 0; i < t.subgroups().size(); ++i) {
      const Subgroup& s = t.subgroups()[i];
      CHECK(oracle::conjugate_in(g, s, t.rep(t.class_of_index(i)), whole_group(g)));
      CHECK(t.rep(t.class_of_index(i)) <= s);
    }
  }
  CHECK(subgroup_classes(construct_group("S3")).size() == 4);
  CHECK(subgroup_classes(construct_group("C2xC2")).size() == 5);
  CHECK(subgroup_classes(construct_group("C1")).size() == 1);
}

TEST_CASE("classes relative to an ambient subgroup") {
  const FiniteGroup d4 = construct_group("D4");
  for (const auto& h : enumerate_subgroups(d4)) {
    const SubgroupClassTable t = subgroup_classes(d4, h);
    CHECK(t.size() == oracle::class_count(d4, h));
    CHECK(t.subgroups() == oracle::all_subgroups(d4, h));
  }
}

TEST_CASE("normalizers and conjugates") {
  const FiniteGroup s3 = construct_group("S3");
  const Subgroup t12 = subgroup_of(s3, {0, 2});  // <(1,2)>
  const Subgroup c3 = subgroup_of(s3, {0, 3, 4});
  CHECK(s3.element_name(2) == "(1,2)");
  CHECK(normalizer(s3, t12) == t12);
  CHECK(normalizer(s3, c3) == whole_group(s3));
  CHECK(normalizer(s3, whole_group(s3)) == whole_group(s3));
  for (const char* spec : kGroups) {
    const FiniteGroup g = construct_group(spec);
    for (const auto& h : enumerate_subgroups(g)) CHECK(normalizer(g, h) == oracle::normalizer(g, h, whole_group(g)));
  }

  CHECK(conjugate_subgroup(s3, t12, 0) == t12);
  // Permutations compose right to left, so (1,2,3)⁻¹(1,2)(1,2,3) = (1,3) and
  // conjugating by (1,3,2) yields (2,3).
  CHECK(s3.element_name(3) == "(1,2,3)");
  CHECK(s3.element_name(4) == "(1,3,2)");
  CHECK(conjugate_subgroup(s3, t12, 3) == oracle::conjugate(s3, t12, 3));
  CHECK(s3.element_name(conjugate_subgroup(s3, t12, 3).elems[1]) == "(1,3)");
  CHECK(s3.element_name(conjugate_subgroup(s3, t12, 4).elems[1]) == "(2,3)");

  const FiniteGroup v4 = construct_group("C2xC2");
  for (const auto& h : enumerate_subgroups(v4))
    for (Element a = 0; a < 4; ++a) CHECK(conjugate_subgroup(v4, h, a) == h);
}

TEST_CASE("subconjugacy") {
  const FiniteGroup s3 = construct_group("S3");
  const Subgroup t12 = subgroup_of(s3, {0, 2});
  const Subgroup c3 = subgroup_of(s3, {0, 3, 4});
  for (Element a = 0; a < 6; ++a) {
    CHECK(is_subconjugate(s3, trivial_subgroup(), t12, a));
    CHECK_FALSE(is_subconjugate(s3, t12, c3, a));
    CHECK(is_subconjugate(s3, t12, whole_group(s3), a));
  }
  const Subgroup t23 = subgroup_of(s3, {0, 1});
  CHECK(is_subconjugate(s3, t12, t23, 4));
  CHECK_FALSE(is_subconjugate(s3, t12, t23, 0));
}

TEST_CASE("subgroup validation") {
  const FiniteGroup s3 = construct_group("S3");
  CHECK_THROWS_AS(make_subgroup(s3, {0, 3}), ValidationError);
  CHECK_THROWS_AS(make_subgroup(s3, {1, 2}), ValidationError);
  CHECK(make_subgroup(s3, {2, 0, 2}).elems == std::vector<Element>{0, 2});
  const std::vector<Element> gens{3};
  CHECK(generate_subgroup(s3, gens).elems == std::vector<Element>{0, 3, 4});
}

TEST_CASE("embeddings") {
  const FiniteGroup d4 = construct_group("D4");
  for (const auto& h : enumerate_subgroups(d4)) {
    const GroupEmbedding e = inclusion(d4, h);
    CHECK_NOTHROW(e.validate());
    CHECK(e.image_subgroup() == h);
    CHECK(e.source.order() == h.order());
  }
  const FiniteGroup c2 = construct_group("C2");
  const FiniteGroup c4 = construct_group("C4");
  CHECK_NOTHROW(make_embedding(c2, c4, {0, 2}));
  CHECK_THROWS_AS(make_embedding(c2, c4, {0, 1}), ValidationError);
  CHECK_THROWS_AS(make_embedding(c2, c4, {0, 0}), ValidationError);

  const GroupEmbedding a = make_embedding(construct_group("C1"), c2, {0});
  const GroupEmbedding b = make_embedding(c2, c4, {0, 2});
  const GroupEmbedding ab = compose(a, b);
  CHECK(ab.source.order() == 1);
  CHECK(ab.target == c4);
  CHECK(ab.image == std::vector<Element>{0});
}

TEST_CASE("subgroup names") {
  const FiniteGroup s3 = construct_group("S3");
  CHECK(describe_subgroup(s3, trivial_subgroup()) == "e");
  CHECK(describe_subgroup(s3, whole_group(s3)) == "S3");
  CHECK(describe_subgroup(s3, subgroup_of(s3, {0, 3, 4})) == "C3");
  const FiniteGroup s4 = construct_group("S4");
  const SubgroupClassTable classes = subgroup_classes(s4);
  int a4 = 0;
  for (const auto& h : classes.reps()) a4 += describe_subgroup(s4, h) == "A4";
  CHECK(a4 == 1);
}
