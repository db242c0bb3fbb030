#include "bredonite/linalg/exact_sequence.hpp"

#include <algorithm>
#include <stdexcept>

#include "bredonite/error.hpp"
#include "bredonite/linalg/normal_forms.hpp"

namespace bredonite {

IntMatrix ChainMap::at(int n, std::size_t rows, std::size_t cols) const {
  if (n < 0 || static_cast<std::size_t>(n) >= components.size()) return IntMatrix(rows, cols);
  const IntMatrix& m = components[static_cast<std::size_t>(n)];
  if (m.rows() != rows || m.cols() != cols)
    throw ArithmeticError("chain map component in degree " + std::to_string(n) + " has wrong shape");
  return m;
}

namespace {

int top_of(const ShortExactSequence& ses) {
  return std::max({ses.sub.top_degree(), ses.middle.top_degree(), ses.quotient.top_degree()});
}

IntMatrix inclusion_at(const ShortExactSequence& ses, int n) {
  return ses.inclusion.at(n, ses.middle.rank(n), ses.sub.rank(n));
}

IntMatrix projection_at(const ShortExactSequence& ses, int n) {
  return ses.projection.at(n, ses.quotient.rank(n), ses.middle.rank(n));
}

bool columns_in_span(const IntMatrix& vectors, const IntMatrix& span, Ring ring) {
  for (std::size_t c = 0; c < vectors.cols(); ++c)
    if (!image_membership(span, vectors.column(c), ring)) return false;
  return true;
}

}  // namespace

void check_short_exact(const ShortExactSequence& ses) {
  const Ring ring = ses.middle.ring();
  if (ses.sub.ring() != ring || ses.quotient.ring() != ring)
    throw ArithmeticError("short exact sequence: complexes over different rings");
  const int top = top_of(ses);
  auto fail = [](int n, const std::string& what) {
    throw ArithmeticError("not a short exact sequence in degree " + std::to_string(n) + ": " + what);
  };
  for (int n = 0; n <= top; ++n) {
    const IntMatrix i = inclusion_at(ses, n).reduced(ring);
    const IntMatrix j = projection_at(ses, n).reduced(ring);
    if (n >= 1) {
      const IntMatrix lhs = (ses.middle.differential(n) * i).reduced(ring);
      const IntMatrix rhs = (inclusion_at(ses, n - 1) * ses.sub.differential(n)).reduced(ring);
      if (lhs != rhs) fail(n, "inclusion is not a chain map");
      const IntMatrix lhs2 = (ses.quotient.differential(n) * j).reduced(ring);
      const IntMatrix rhs2 = (projection_at(ses, n - 1) * ses.middle.differential(n)).reduced(ring);
      if (lhs2 != rhs2) fail(n, "projection is not a chain map");
    }
    if (matrix_rank(i, ring) != i.cols()) fail(n, "inclusion is not injective");
    if (j.rows() > 0) {
      SmithForm s = smith_normal_form(j, ring);
      if (s.rank != j.rows()) fail(n, "projection is not surjective");
      for (const auto& f : s.invariant_factors())
        if (f != 1) fail(n, "projection is not surjective over Z");
    }
    if (!(j * i).reduced(ring).is_zero()) fail(n, "projection∘inclusion is nonzero");
    if (!columns_in_span(kernel_basis(j, ring), i, ring)) fail(n, "kernel of projection exceeds image of inclusion");
  }
}

bool is_exact_at(const IntMatrix& f, const IntMatrix& g, const IntMatrix& relations_m,
                 const IntMatrix& relations_n, Ring ring) {
  const std::size_t m = g.cols();
  if (f.rows() != m || relations_m.rows() != m || relations_n.rows() != g.rows())
    throw std::invalid_argument("is_exact_at: shape mismatch");
  if (!columns_in_span((g * f).reduced(ring), relations_n, ring)) return false;
  IntMatrix neg_rel = relations_n;
  for (std::size_t r = 0; r < neg_rel.rows(); ++r) neg_rel.negate_row(r);
  const IntMatrix kernel = kernel_basis(hstack(g, neg_rel), ring);
  const IntMatrix preimage = kernel.block(0, 0, m, kernel.cols());
  return columns_in_span(preimage, hstack(f, relations_m), ring);
}

LongExactSequence long_exact_sequence(const ShortExactSequence& ses) {
  check_short_exact(ses);
  LongExactSequence les;
  les.ring = ses.middle.ring();
  const Ring ring = les.ring;
  les.top_degree = top_of(ses);
  const int top = les.top_degree;
  if (top < 0) {
    les.exact = true;
    return les;
  }

  for (int n = 0; n <= top; ++n) {
    les.sub.emplace_back(ses.sub, n);
    les.middle.emplace_back(ses.middle, n);
    les.quotient.emplace_back(ses.quotient, n);
  }

  for (int n = 0; n <= top; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    const IntMatrix i = inclusion_at(ses, n);
    const IntMatrix j = projection_at(ses, n);

    std::vector<IntVector> cols;
    for (const auto& z : les.sub[idx].generators()) cols.push_back(les.middle[idx].coordinates(i * z));
    les.sub_to_middle.push_back(IntMatrix::from_columns(les.middle[idx].size(), cols));

    cols.clear();
    for (const auto& z : les.middle[idx].generators()) cols.push_back(les.quotient[idx].coordinates(j * z));
    les.middle_to_quotient.push_back(IntMatrix::from_columns(les.quotient[idx].size(), cols));

    cols.clear();
    if (n == 0) {
      les.connecting.emplace_back(0, les.quotient[idx].size());
      continue;
    }
    const IntMatrix i_below = inclusion_at(ses, n - 1);
    for (const auto& z : les.quotient[idx].generators()) {
      auto lift = solve_in_span(j, z, ring);
      if (!lift) throw ArithmeticError("connecting map: cycle does not lift through the projection");
      const IntVector boundary = reduced(ses.middle.differential(n) * *lift, ring);
      auto pulled = solve_in_span(i_below, boundary, ring);
      if (!pulled) throw ArithmeticError("connecting map: boundary of lift is not in the subcomplex");
      cols.push_back(les.sub[idx - 1].coordinates(*pulled));
    }
    les.connecting.push_back(IntMatrix::from_columns(les.sub[idx - 1].size(), cols));
  }

  // Walk the sequence from the top: sub_n, middle_n, quotient_n, sub_{n-1}, …
  les.exact = true;
  int position = 0;
  auto rank_of = [&](const HomologyBasis& b) { return static_cast<long long>(b.group().free_rank); };
  for (int n = top; n >= 0; --n) {
    const auto idx = static_cast<std::size_t>(n);
    const HomologyBasis& a = les.sub[idx];
    const HomologyBasis& b = les.middle[idx];
    const HomologyBasis& c = les.quotient[idx];

    const IntMatrix into_a = n == top ? IntMatrix(a.size(), 0) : les.connecting[idx + 1];
    const IntMatrix from_c = n == 0 ? IntMatrix(0, c.size()) : les.connecting[idx];
    const IntMatrix rel_below = n == 0 ? IntMatrix(0, 0) : les.sub[idx - 1].relation_matrix();

    struct Node {
      const char* name;
      const IntMatrix& in;
      const IntMatrix& out;
      IntMatrix rel;
      IntMatrix rel_next;
    };
    const Node nodes[] = {
        {"H(sub)", into_a, les.sub_to_middle[idx], a.relation_matrix(), b.relation_matrix()},
        {"H(middle)", les.sub_to_middle[idx], les.middle_to_quotient[idx], b.relation_matrix(), c.relation_matrix()},
        {"H(quotient)", les.middle_to_quotient[idx], from_c, c.relation_matrix(), rel_below},
    };
    for (const auto& node : nodes) {
      if (!is_exact_at(node.in, node.out, node.rel, node.rel_next, ring)) {
        les.exact = false;
        les.failures.push_back(std::string("not exact at ") + node.name + " in degree " + std::to_string(n));
      }
    }
    for (const HomologyBasis* h : {&a, &b, &c}) {
      les.alternating_rank_sum += (position % 2 == 0 ? 1 : -1) * rank_of(*h);
      ++position;
    }
  }
  return les;
}

}  // namespace bredonite
