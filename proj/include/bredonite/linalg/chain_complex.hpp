#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bredonite/linalg/matrix.hpp"

namespace bredonite {

// A finitely generated abelian group Z^r ⊕ Z/t₁ ⊕ … ⊕ Z/t_k with t₁ | t₂ | …,
// or a GF2 vector space of dimension `free_rank` (torsion always empty).
struct HomologyGroup {
  Ring ring = Ring::Z;
  std::size_t free_rank = 0;
  IntVector torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b);

// C_0 ← C_1 ← … ← C_N. Differentials are stored for n = 1..N; d_0 and every
// d_n beyond the top are zero maps of the appropriate shape.
class ChainComplex {
 public:
  ChainComplex() = default;
  // differentials[k] is d_{k+1} : C_{k+1} → C_k.
  ChainComplex(Ring ring, std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials);

  Ring ring() const noexcept { return ring_; }
  int top_degree() const noexcept { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int n) const;
  IntMatrix differential(int n) const;

  // First degree n with d_{n-1}·d_n ≠ 0, if any.
  std::optional<int> find_dd_violation() const;

 private:
  Ring ring_ = Ring::Z;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> d_;
};

// H_0 … H_top. Throws ArithmeticError when d∘d ≠ 0. Degrees are independent
// and are computed on up to `threads` workers.
std::vector<HomologyGroup> chain_homology(const ChainComplex& c, unsigned threads = 1);

// Homology in one degree together with explicit cycle representatives.
// Generator i has order orders[i] (0 = infinite). `coordinates` expresses a
// cycle in these generators, torsion coordinates reduced mod their order.
class HomologyBasis {
 public:
  HomologyBasis() = default;
  HomologyBasis(const ChainComplex& c, int n);

  const HomologyGroup& group() const noexcept { return group_; }
  Ring ring() const noexcept { return group_.ring; }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<IntVector>& generators() const noexcept { return generators_; }
  const IntVector& orders() const noexcept { return orders_; }
  std::size_t chain_rank() const noexcept { return chain_rank_; }

  IntVector coordinates(const IntVector& cycle) const;

  // Relations of the presented group Z^size / im(R): diag(orders).
  IntMatrix relation_matrix() const;

 private:
  HomologyGroup group_;
  std::size_t chain_rank_ = 0;
  std::vector<IntVector> generators_;
  IntVector orders_;
  IntMatrix to_cycle_coords_;  // (P · rows r.. of V⁻¹) restricted to kept slots
};

}  // namespace bredonite
