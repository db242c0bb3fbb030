#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bredonite/burnside.hpp"
#include "bredonite/complex.hpp"
#include "bredonite/group.hpp"
#include "bredonite/linalg/matrix.hpp"

// Brute-force reference computations. They share no code with the algorithms
// they check beyond the group's multiplication table and the canonical class
// representatives used to label answers.
namespace bredonite::oracle {

// Element-order census: census[k] = number of elements of order k.
std::vector<int> order_census(const FiniteGroup& g);

// Every subset of the ambient subgroup closed under multiplication and
// containing the identity, sorted canonically. Ambient order at most 16.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Subgroup& ambient);
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

// {a⁻¹ h a : h ∈ H}, element by element.
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Element a);
// {x ∈ ambient : x⁻¹ H x = H}
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient);
// Conjugate under some element of `ambient`.
bool conjugate_in(const FiniteGroup& g, const Subgroup& a, const Subgroup& b, const Subgroup& ambient);

// Number of ambient-conjugacy classes of subgroups of ambient.
std::size_t class_count(const FiniteGroup& g, const Subgroup& ambient);
// Number of classes [K] with [N_ambient(K) : K] odd.
std::size_t odd_weyl_count(const FiniteGroup& g, const Subgroup& ambient);

// |(H/K)^L| = #{x ∈ H : x⁻¹ L x ⊆ K} / |K|.
BigInt mark(const FiniteGroup& g, const Subgroup& ambient, const Subgroup& k, const Subgroup& l);

// Decomposition of H/K_i × H/K_j into orbits, in the basis of `ring`.
IntVector product_decomposition(const BurnsideRing& ring, std::size_t i, std::size_t j);

// The class-i basis element of `from` = A(H), pushed to A(K) along gH ↦ gaK
// by counting the K-orbits on the fiber over eK of G/L → G/K, gL ↦ gaK.
IntVector induced_class(const BurnsideRing& from, const BurnsideRing& to, Element a, std::size_t i);

// Stabilizer classes of a G-set counted orbit by orbit.
IntVector orbit_census(const BurnsideRing& ring, const GSet& set);

// Determinant by cofactor expansion along the first row.
BigInt laplace_determinant(const IntMatrix& a);
// d_k / d_{k-1} with d_k the gcd of all k×k minors; nonzero factors only.
IntVector minor_invariant_factors(const IntMatrix& a);

// Random test data.
IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi);

// A valid complex of dimension at most 2 with at most `max_orbits` cell
// orbits. 0- and 1-cells get random stabilizers and attaching elements;
// 2-cells are free and attached along two records of opposite degree.
GCWComplex random_complex(std::mt19937_64& rng, const FiniteGroup& g, int max_orbits = 8);

// Two closed cell sets whose union is every cell of x.
std::pair<std::set<std::string>, std::set<std::string>> random_cover(std::mt19937_64& rng, const GCWComplex& x);

}  // namespace bredonite::oracle
