#pragma once

#include <string>
#include <vector>

#include "bredonite/coeff.hpp"
#include "bredonite/complex.hpp"
#include "bredonite/linalg/chain_complex.hpp"

namespace bredonite {

// Where a cell orbit's coefficient block sits inside C_n.
struct CellBlock {
  std::string id;
  std::size_t offset = 0;
  std::size_t rank = 0;
};

// Bredon cellular chains: C_n = ⊕ over n-cell orbits σ of M(G/H_σ), and the
// block of d_n from σ to τ is Σ deg·M(σ →a τ) over the boundary records.
struct BredonChains {
  ChainComplex chains;
  std::vector<std::vector<CellBlock>> blocks;  // per degree, in cell order
};

// Assembles the chains without checking d∘d = 0. Assumes the structural
// invariants of validate_complex hold.
BredonChains assemble_chains(const GCWComplex& x, const CoefficientSystem& system, int q);

}  // namespace bredonite
