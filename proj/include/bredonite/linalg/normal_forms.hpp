#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bredonite/linalg/matrix.hpp"

namespace bredonite {

// U·A·V = D with U, V invertible over the ring and D diagonal. Over Z the
// nonzero diagonal entries are positive and form a divisibility chain.
// The inverses of U and V are tracked alongside so callers can change
// coordinates in both directions without re-solving.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;
  std::size_t rank = 0;

  IntVector invariant_factors() const;
};

// Pivot rule: smallest nonzero absolute value in the remaining block.
SmithForm smith_normal_form(const IntMatrix& a, Ring ring = Ring::Z);

std::size_t matrix_rank(const IntMatrix& a, Ring ring = Ring::Z);

// Columns form a basis of the kernel lattice (over Z) or kernel space (GF2).
IntMatrix kernel_basis(const IntMatrix& a, Ring ring = Ring::Z);

// Column Hermite normal form: E = A·W with W invertible over the ring, E
// lower echelon. Pivots are positive and entries left of a pivot lie in
// [0, pivot).
struct ColumnHermiteForm {
  IntMatrix E;
  IntMatrix W;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

ColumnHermiteForm column_hermite_form(const IntMatrix& a, Ring ring = Ring::Z);

// Some x with A·x = v, if v lies in the column span of A over the ring.
std::optional<IntVector> solve_in_span(const IntMatrix& a, const IntVector& v, Ring ring = Ring::Z);

bool image_membership(const IntMatrix& a, const IntVector& v, Ring ring = Ring::Z);

}  // namespace bredonite
