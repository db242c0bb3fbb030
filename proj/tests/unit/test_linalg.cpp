#include <doctest.h>

#include <random>

#include "bredonite/error.hpp"
#include "bredonite/linalg/chain_complex.hpp"
#include "bredonite/linalg/exact_sequence.hpp"
#include "bredonite/linalg/normal_forms.hpp"
#include "bredonite/verify/oracles.hpp"

using namespace bredonite;

namespace {

IntVector ints(std::initializer_list<long long> xs) {
  IntVector v;
  for (long long x : xs) v.push_back(x);
  return v;
}

bool unimodular(const IntMatrix& m) {
  const BigInt d = determinant(m);
  return d == 1 || d == -1;
}

void check_smith(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(unimodular(s.U));
  CHECK(unimodular(s.V));
  CHECK(s.U * s.U_inv == IntMatrix::identity(a.rows()));
  CHECK(s.V_inv * s.V == IntMatrix::identity(a.cols()));
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  const IntMatrix zero(3, 2);
  CHECK(smith_normal_form(zero).D == zero);
  CHECK(smith_normal_form(zero).rank == 0);

  const IntMatrix d23{{2, 0}, {0, 3}};
  CHECK(smith_normal_form(d23).D == IntMatrix{{1, 0}, {0, 6}});
  CHECK(smith_normal_form(d23).invariant_factors() == oracle::minor_invariant_factors(d23));
  check_smith(d23);

  CHECK(smith_normal_form(IntMatrix::identity(4)).D == IntMatrix::identity(4));

  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  CHECK(smith_normal_form(a).invariant_factors() == ints({2, 6, 12}));
  CHECK(oracle::minor_invariant_factors(a) == ints({2, 6, 12}));
  check_smith(a);

  check_smith(IntMatrix(0, 3));
  check_smith(IntMatrix{{0, 0, 5}});
}

TEST_CASE("Smith normal form over GF2") {
  const IntMatrix a{{1, 1, 0}, {1, 1, 0}, {0, 1, 1}};
  const SmithForm s = smith_normal_form(a, Ring::GF2);
  CHECK(s.rank == 2);
  CHECK((s.U * a * s.V).reduced(Ring::GF2) == s.D);
  CHECK(matrix_rank(IntMatrix{{2, 4}, {6, 8}}, Ring::GF2) == 0);
  CHECK(matrix_rank(IntMatrix{{2, 4}, {6, 8}}) == 2);
}

TEST_CASE("random Smith forms match the minors oracle") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 60; ++k) {
    const IntMatrix a = oracle::random_matrix(rng, 1 + k % 4, 1 + (k / 4) % 4, -6, 6);
    CAPTURE(a);
    check_smith(a);
    CHECK(smith_normal_form(a).invariant_factors() == oracle::minor_invariant_factors(a));
  }
}

TEST_CASE("determinants") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    const IntMatrix a = oracle::random_matrix(rng, 1 + k % 5, 1 + k % 5, -9, 9);
    CHECK(determinant(a) == oracle::laplace_determinant(a));
  }
}

TEST_CASE("kernels and Hermite forms") {
  const IntMatrix a{{1, 2, 3}, {2, 4, 6}};
  const IntMatrix k = kernel_basis(a);
  CHECK(k.cols() == 2);
  CHECK((a * k).is_zero());

  std::mt19937_64 rng(3);
  for (int n = 0; n < 30; ++n) {
    const IntMatrix m = oracle::random_matrix(rng, 1 + n % 5, 1 + n % 6, -5, 5);
    const ColumnHermiteForm h = column_hermite_form(m);
    CHECK(m * h.W == h.E);
    CHECK(unimodular(h.W));
    for (auto [r, c] : h.pivots) {
      CHECK(h.E(r, c) > 0);
      for (std::size_t left = 0; left < c; ++left) {
        CHECK(h.E(r, left) >= 0);
        CHECK(h.E(r, left) < h.E(r, c));
      }
    }
  }
}

TEST_CASE("lattice membership") {
  CHECK(image_membership(IntMatrix{{2}}, ints({0})));
  CHECK_FALSE(image_membership(IntMatrix{{2}}, ints({1})));
  CHECK(image_membership(IntMatrix{{1}}, ints({1}), Ring::GF2));
  const IntMatrix a{{2, 0}, {0, 3}};
  CHECK(image_membership(a, ints({2, 3})));
  CHECK_FALSE(image_membership(a, ints({1, 3})));
  const auto x = solve_in_span(a, ints({4, -9}));
  REQUIRE(x);
  CHECK(a * *x == ints({4, -9}));
  CHECK(image_membership(IntMatrix{{2}}, ints({1}), Ring::GF2) == false);
}

TEST_CASE("chain homology examples") {
  const ChainComplex zero_map(Ring::Z, {1, 1}, {IntMatrix{{0}}});
  CHECK(chain_homology(zero_map) == std::vector<HomologyGroup>{{Ring::Z, 1, {}}, {Ring::Z, 1, {}}});

  const ChainComplex times2(Ring::Z, {1, 1}, {IntMatrix{{2}}});
  const auto h = chain_homology(times2);
  CHECK(h[0] == HomologyGroup{Ring::Z, 0, ints({2})});
  CHECK(h[1].is_zero());
  CHECK(h[0].to_string() == "Z/2");

  const ChainComplex mod2(Ring::GF2, {1, 1}, {IntMatrix{{2}}});
  CHECK(chain_homology(mod2) == std::vector<HomologyGroup>{{Ring::GF2, 1, {}}, {Ring::GF2, 1, {}}});

  // The antipodal circle in A(e) = Z coefficients: d = g·v − v ↦ 1 − 1 = 0.
  const ChainComplex circle(Ring::Z, {1, 1}, {IntMatrix{{0}}});
  CHECK(chain_homology(circle, 2) == chain_homology(circle));

  const ChainComplex bad(Ring::Z, {1, 1, 1}, {IntMatrix{{1}}, IntMatrix{{1}}});
  CHECK(bad.find_dd_violation() == 2);
  CHECK_THROWS_AS(chain_homology(bad), ArithmeticError);
  CHECK_THROWS_AS(ChainComplex(Ring::Z, {1, 2}, {IntMatrix{{1}}}), std::invalid_argument);
}

TEST_CASE("homology groups") {
  const HomologyGroup a{Ring::Z, 1, ints({2})};
  const HomologyGroup b{Ring::Z, 0, ints({3})};
  CHECK(direct_sum(a, b) == HomologyGroup{Ring::Z, 1, ints({6})});
  CHECK(direct_sum(a, b).to_string() == "Z + Z/6");
  CHECK(HomologyGroup{Ring::GF2, 3, {}}.to_string() == "(Z/2)^3");
  CHECK(HomologyGroup{}.to_string() == "0");
}

TEST_CASE("homology bases and coordinates") {
  // C1 = Z² → C0 = Z, d = [2 2]: H0 = Z/2, H1 = Z generated by (1, -1).
  const ChainComplex c(Ring::Z, {1, 2}, {IntMatrix{{2, 2}}});
  const HomologyBasis h0(c, 0);
  CHECK(h0.group() == HomologyGroup{Ring::Z, 0, ints({2})});
  CHECK(h0.coordinates(ints({3})) == ints({1}));
  CHECK(h0.coordinates(ints({4})) == ints({0}));
  const HomologyBasis h1(c, 1);
  REQUIRE(h1.size() == 1);
  CHECK(h1.orders() == ints({0}));
  const IntVector z = h1.generators().front();
  CHECK((IntMatrix{{2, 2}} * z) == ints({0}));
  CHECK(h1.coordinates(ints({3, -3})).front() == 3 * h1.coordinates(ints({1, -1})).front());
}

TEST_CASE("exactness at a node") {
  // Z →(2) Z →(mod 2) Z/2 is exact; Z →(4) Z → Z/2 is not.
  CHECK(is_exact_at(IntMatrix{{2}}, IntMatrix{{1}}, IntMatrix(1, 0), IntMatrix{{2}}, Ring::Z));
  CHECK_FALSE(is_exact_at(IntMatrix{{4}}, IntMatrix{{1}}, IntMatrix(1, 0), IntMatrix{{2}}, Ring::Z));
  CHECK_FALSE(is_exact_at(IntMatrix{{1}}, IntMatrix{{1}}, IntMatrix(1, 0), IntMatrix(1, 0), Ring::Z));
}

TEST_CASE("long exact sequences") {
  // 0 → Z →(2) Z → Z/2-free quotient: the degree-0 sequence of the pair.
  const ChainComplex z(Ring::Z, {1}, {});
  ShortExactSequence split;
  split.sub = z;
  split.middle = ChainComplex(Ring::Z, {2}, {});
  split.quotient = z;
  split.inclusion.components = {IntMatrix{{1}, {0}}};
  split.projection.components = {IntMatrix{{0, 1}}};
  CHECK_NOTHROW(check_short_exact(split));
  const LongExactSequence les = long_exact_sequence(split);
  CHECK(les.exact);
  CHECK(les.alternating_rank_sum == 0);

  ShortExactSequence broken = split;
  broken.inclusion.components = {IntMatrix{{2}, {0}}};
  CHECK_THROWS_AS(check_short_exact(broken), ArithmeticError);

  // Circle relative to a point: 0 → C(pt) → C(S¹) → C(S¹, pt) → 0.
  ShortExactSequence pair;
  pair.sub = ChainComplex(Ring::Z, {1}, {});
  pair.middle = ChainComplex(Ring::Z, {1, 1}, {IntMatrix{{0}}});
  pair.quotient = ChainComplex(Ring::Z, {0, 1}, {IntMatrix(0, 1)});
  pair.inclusion.components = {IntMatrix{{1}}, IntMatrix(1, 0)};
  pair.projection.components = {IntMatrix(0, 1), IntMatrix{{1}}};
  const LongExactSequence p = long_exact_sequence(pair);
  CHECK(p.exact);
  CHECK(p.connecting.at(1).is_zero());
}
