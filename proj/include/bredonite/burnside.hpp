#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bredonite/group.hpp"
#include "bredonite/linalg/matrix.hpp"

namespace bredonite {

// Integer combination of the transitive H-sets [H/K], indexed by the
// subgroup classes of the ring it belongs to.
struct BurnsideElement {
  IntVector coords;

  friend bool operator==(const BurnsideElement&, const BurnsideElement&) = default;
};

BurnsideElement operator+(const BurnsideElement& x, const BurnsideElement& y);
BurnsideElement operator-(const BurnsideElement& x, const BurnsideElement& y);
BurnsideElement operator*(const BigInt& k, const BurnsideElement& x);

// GF(2) coordinates over the odd-Weyl basis of V(H).
struct N0Element {
  std::vector<std::uint8_t> coords;

  bool is_zero() const;
  friend bool operator==(const N0Element&, const N0Element&) = default;
};

// marks(i, j) = |(H/K_i)^{K_j}| over the class representatives K_i, counted
// directly as the cosets hK_i fixed by K_j. Lower-triangular in the
// canonical class order.
struct TableOfMarks {
  IntMatrix marks;
};

// A finite H-set: action[k][p] is the image of point p under the k-th
// element of the ambient subgroup (ambient.elems[k]).
struct GSet {
  std::size_t points = 0;
  std::vector<std::vector<std::size_t>> action;
};

// The Burnside ring A(H) of a subgroup H ≤ G, computed with H's elements kept
// as G-indices so that conjugation by elements of G stays available.
class BurnsideRing {
 public:
  explicit BurnsideRing(const FiniteGroup& g);
  BurnsideRing(const FiniteGroup& g, Subgroup ambient);

  const FiniteGroup& group() const noexcept { return group_; }
  const Subgroup& ambient() const noexcept { return classes_.ambient(); }
  const SubgroupClassTable& classes() const noexcept { return classes_; }
  const TableOfMarks& table() const noexcept { return table_; }
  std::size_t rank() const noexcept { return classes_.size(); }

  BurnsideElement zero() const;
  // [H/H]
  BurnsideElement one() const;
  BurnsideElement basis(std::size_t cls) const;

  // Marks vector: entry j is |X^{K_j}|.
  IntVector mark_vector(const BurnsideElement& x) const;
  // Inverse of mark_vector by exact triangular back-substitution. Throws
  // ArithmeticError if the result is not integral.
  BurnsideElement from_marks(const IntVector& marks) const;
  BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y) const;

  // Classes [H/K] with [N_H(K):K] odd, in canonical order.
  const std::vector<std::size_t>& n0_basis() const noexcept { return n0_basis_; }
  // Position of a class in n0_basis, or -1 for even-Weyl classes.
  int n0_position(std::size_t cls) const;
  N0Element n0_project(const BurnsideElement& x) const;

  // "[H/K]" with display names for H and K.
  std::string class_label(std::size_t cls) const;
  std::vector<std::string> basis_labels() const;

 private:
  void check(const BurnsideElement& x) const;

  FiniteGroup group_;
  SubgroupClassTable classes_;
  TableOfMarks table_;
  std::vector<std::size_t> n0_basis_;
  std::vector<std::string> labels_;
};

TableOfMarks table_of_marks(const FiniteGroup& g);

BurnsideElement burnside_mul(const BurnsideRing& ring, const BurnsideElement& x, const BurnsideElement& y);

// Counts orbits by stabilizer class. Throws ValidationError when `action`
// is not a group action of the ambient subgroup.
BurnsideElement decompose_gset(const BurnsideRing& ring, const GSet& set);

// Induction along the orbit map gH ↦ gaK (requires a⁻¹Ha ⊆ K):
// [H/L] ↦ [K/a⁻¹La], extended linearly.
BurnsideElement burnside_induce(const BurnsideRing& from, const BurnsideRing& to, Element a,
                                const BurnsideElement& x);
// Matrix of burnside_induce: column i is the image of basis class i.
IntMatrix burnside_induce_matrix(const BurnsideRing& from, const BurnsideRing& to, Element a);

std::vector<std::size_t> n0_basis(const BurnsideRing& ring);
N0Element n0_project(const BurnsideRing& ring, const BurnsideElement& x);

}  // namespace bredonite
