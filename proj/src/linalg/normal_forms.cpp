#include "bredonite/linalg/normal_forms.hpp"

#include <stdexcept>

namespace bredonite {

namespace {

using boost::multiprecision::abs;

// Tracks D = U·A·V together with U⁻¹ and V⁻¹ under elementary operations.
class SmithWorkspace {
 public:
  SmithWorkspace(const IntMatrix& a, Ring ring)
      : ring_(ring),
        D(a.reduced(ring)),
        U(IntMatrix::identity(a.rows())),
        V(IntMatrix::identity(a.cols())),
        U_inv(IntMatrix::identity(a.rows())),
        V_inv(IntMatrix::identity(a.cols())) {}

  // row[dst] += c·row[src]
  void row_add(std::size_t dst, std::size_t src, const BigInt& c) {
    const BigInt k = reduce(c, ring_);
    if (k == 0) return;
    D.add_row_multiple(dst, src, k);
    U.add_row_multiple(dst, src, k);
    U_inv.add_col_multiple(src, dst, -k);
    D.reduce_row(dst, ring_);
    U.reduce_row(dst, ring_);
    U_inv.reduce_col(src, ring_);
  }

  // col[dst] += c·col[src]
  void col_add(std::size_t dst, std::size_t src, const BigInt& c) {
    const BigInt k = reduce(c, ring_);
    if (k == 0) return;
    D.add_col_multiple(dst, src, k);
    V.add_col_multiple(dst, src, k);
    V_inv.add_row_multiple(src, dst, -k);
    D.reduce_col(dst, ring_);
    V.reduce_col(dst, ring_);
    V_inv.reduce_row(src, ring_);
  }

  void row_swap(std::size_t i, std::size_t j) {
    D.swap_rows(i, j);
    U.swap_rows(i, j);
    U_inv.swap_cols(i, j);
  }

  void col_swap(std::size_t i, std::size_t j) {
    D.swap_cols(i, j);
    V.swap_cols(i, j);
    V_inv.swap_rows(i, j);
  }

  void row_negate(std::size_t i) {
    D.negate_row(i);
    U.negate_row(i);
    U_inv.negate_col(i);
  }

  Ring ring_;
  IntMatrix D, U, V, U_inv, V_inv;
};

struct Position {
  std::size_t row = 0;
  std::size_t col = 0;
  bool found = false;
};

Position smallest_in_block(const IntMatrix& m, std::size_t t) {
  Position best;
  BigInt best_abs;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      BigInt v = abs(m(i, j));
      if (!best.found || v < best_abs) {
        best = {i, j, true};
        best_abs = v;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntVector SmithForm::invariant_factors() const {
  IntVector f;
  for (std::size_t i = 0; i < rank; ++i) f.push_back(D(i, i));
  return f;
}

SmithForm smith_normal_form(const IntMatrix& a, Ring ring) {
  SmithWorkspace w(a, ring);
  IntMatrix& D = w.D;
  const std::size_t m = D.rows();
  const std::size_t n = D.cols();
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    Position p = smallest_in_block(D, t);
    if (!p.found) break;
    w.row_swap(t, p.row);
    w.col_swap(t, p.col);

    for (;;) {
      // Clear column t below the pivot; a nonzero remainder is strictly
      // smaller than the pivot and becomes the next pivot.
      std::size_t smaller_row = 0;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        w.row_add(i, t, -(D(i, t) / D(t, t)));
        if (D(i, t) != 0 && (smaller_row == 0 || abs(D(i, t)) < abs(D(smaller_row, t))))
          smaller_row = i;
      }
      if (smaller_row != 0) {
        w.row_swap(t, smaller_row);
        continue;
      }

      std::size_t smaller_col = 0;
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        w.col_add(j, t, -(D(t, j) / D(t, t)));
        if (D(t, j) != 0 && (smaller_col == 0 || abs(D(t, j)) < abs(D(t, smaller_col))))
          smaller_col = j;
      }
      if (smaller_col != 0) {
        w.col_swap(t, smaller_col);
        continue;
      }

      // Divisibility: fold a row holding a non-multiple into the pivot row.
      std::size_t bad_row = 0;
      for (std::size_t i = t + 1; i < m && bad_row == 0; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == 0) break;
      w.row_add(t, bad_row, 1);
    }
    if (D(t, t) < 0) w.row_negate(t);
  }

  SmithForm out;
  out.rank = t;
  out.D = std::move(w.D);
  out.U = std::move(w.U);
  out.V = std::move(w.V);
  out.U_inv = std::move(w.U_inv);
  out.V_inv = std::move(w.V_inv);
  return out;
}

std::size_t matrix_rank(const IntMatrix& a, Ring ring) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return smith_normal_form(a, ring).rank;
}

IntMatrix kernel_basis(const IntMatrix& a, Ring ring) {
  if (a.rows() == 0) return IntMatrix::identity(a.cols());
  SmithForm s = smith_normal_form(a, ring);
  return s.V.block(0, s.rank, a.cols(), a.cols() - s.rank);
}

ColumnHermiteForm column_hermite_form(const IntMatrix& a, Ring ring) {
  ColumnHermiteForm h{a.reduced(ring), IntMatrix::identity(a.cols()), {}};
  IntMatrix& E = h.E;
  IntMatrix& W = h.W;
  const std::size_t rows = E.rows();
  const std::size_t cols = E.cols();

  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& c) {
    const BigInt k = reduce(c, ring);
    if (k == 0) return;
    E.add_col_multiple(dst, src, k);
    W.add_col_multiple(dst, src, k);
    E.reduce_col(dst, ring);
    W.reduce_col(dst, ring);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    E.swap_cols(i, j);
    W.swap_cols(i, j);
  };

  std::size_t c = 0;
  for (std::size_t r = 0; r < rows && c < cols; ++r) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = c; j < cols; ++j)
        if (E(r, j) != 0 && (best == cols || abs(E(r, j)) < abs(E(r, best)))) best = j;
      if (best == cols) break;
      col_swap(c, best);
      bool remainder = false;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (E(r, j) == 0) continue;
        col_add(j, c, -(E(r, j) / E(r, c)));
        if (E(r, j) != 0) remainder = true;
      }
      if (!remainder) break;
    }
    if (E(r, c) == 0) continue;
    if (E(r, c) < 0) {
      E.negate_col(c);
      W.negate_col(c);
    }
    for (std::size_t j = 0; j < c; ++j) col_add(j, c, -floor_div(E(r, j), E(r, c)));
    h.pivots.emplace_back(r, c);
    ++c;
  }
  return h;
}

std::optional<IntVector> solve_in_span(const IntMatrix& a, const IntVector& v, Ring ring) {
  if (v.size() != a.rows()) throw std::invalid_argument("solve_in_span: dimension mismatch");
  ColumnHermiteForm h = column_hermite_form(a, ring);
  IntVector residual = reduced(v, ring);
  IntVector y(a.cols());
  std::size_t next_pivot = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (next_pivot < h.pivots.size() && h.pivots[next_pivot].first == r) {
      const std::size_t c = h.pivots[next_pivot].second;
      const BigInt& p = h.E(r, c);
      if (residual[r] % p != 0) return std::nullopt;
      const BigInt q = residual[r] / p;
      y[c] = q;
      for (std::size_t i = r; i < a.rows(); ++i) residual[i] = reduce(residual[i] - q * h.E(i, c), ring);
      ++next_pivot;
    } else if (residual[r] != 0) {
      return std::nullopt;
    }
  }
  return reduced(h.W * y, ring);
}

bool image_membership(const IntMatrix& a, const IntVector& v, Ring ring) {
  return solve_in_span(a, v, ring).has_value();
}

}  // namespace bredonite
