#pragma once

#include <set>
#include <string>
#include <vector>

#include "bredonite/chains.hpp"
#include "bredonite/coeff.hpp"
#include "bredonite/complex.hpp"
#include "bredonite/linalg/chain_complex.hpp"
#include "bredonite/linalg/exact_sequence.hpp"

namespace bredonite {

struct EngineOptions {
  // Highest coefficient degree q tabulated for the Euler theory; negative
  // means dim X.
  int euler_degrees = -1;
  // Worker threads for independent degree computations.
  unsigned threads = 1;
};

// Homology of X in one theory, degrees 0..max(dim X, 0).
//
// For All, OrientedSingular and UnorientedSingular the coefficients are
// concentrated in degree 0, and `groups` is the Bredon homology with those
// coefficients. For Euler the coefficients live in every degree: `e2[q][p]`
// holds H_p(X; Eh_q), the E2-page of the Atiyah–Hirzebruch-type spectral
// sequence, and `groups[n]` is the direct sum of E2_{p,q} over p + q = n.
// That sum equals Eh_n(X) when `exact` is set (X a disjoint union of orbits,
// where the E2-page has a single column); otherwise it is E2 data only.
struct TheoryResult {
  Theory theory = Theory::All;
  std::vector<HomologyGroup> groups;
  bool e2_page = false;
  bool exact = true;
  std::vector<std::vector<HomologyGroup>> e2;

  friend bool operator==(const TheoryResult&, const TheoryResult&) = default;
};

// Validates X, assembles the chains and checks d∘d = 0 in the requested
// system (ArithmeticError naming the degree otherwise).
BredonChains bredon_complex(const GCWComplex& x, Theory theory, int q);

TheoryResult equivariant_homology(const GCWComplex& x, Theory theory, const EngineOptions& options = {});

// Induction isomorphism on a single orbit: H^G(G/H) agrees with M(G/H) in
// degrees 0..max_degree.
bool coefficient_check(Theory theory, const FiniteGroup& g, const Subgroup& h, int max_degree = 3);

struct ComparisonReport {
  bool equal = false;
  TheoryResult lhs;
  TheoryResult rhs;
  std::string detail;
};

// Free X: equivariant homology against the ordinary cellular homology of X/G
// with Z (oriented), GF2 (unoriented, and Euler per coefficient degree) or
// zero (all) coefficients.
ComparisonReport free_borel_compare(const GCWComplex& x, Theory theory);

// Ordinary cellular chains of a complex over the trivial group: one generator
// per cell, incidences summed from the boundary records.
ChainComplex cellular_chains(const CWComplex& x, Ring ring);

// H^H(X) against H^G(G ×_α X), degreewise.
ComparisonReport induction_compare(const GroupEmbedding& alpha, const GCWComplex& x, Theory theory);

struct MvReport {
  bool exact = false;
  // One long exact sequence per coefficient degree (a single entry except
  // for Euler).
  std::vector<LongExactSequence> sequences;
  std::string detail;
};

// Mayer–Vietoris for X = X1 ∪ X2 (cell-id sets, each closed):
//   0 → C(X1∩X2) → C(X1) ⊕ C(X2) → C(X) → 0, c ↦ (c, -c), (b1, b2) ↦ b1 + b2.
MvReport mv_check(const GCWComplex& x, const std::set<std::string>& part1, const std::set<std::string>& part2,
                  Theory theory);

// The short exact sequence mv_check feeds into long_exact_sequence.
ShortExactSequence mayer_vietoris_sequence(const GCWComplex& x, const std::set<std::string>& part1,
                                           const std::set<std::string>& part2, Theory theory, int q);

}  // namespace bredonite
