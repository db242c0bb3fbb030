#pragma once

#include <string>
#include <vector>

#include "bredonite/linalg/chain_complex.hpp"

namespace bredonite {

// Degreewise matrices f_n : C_n → C'_n. Missing degrees are zero maps.
struct ChainMap {
  std::vector<IntMatrix> components;

  IntMatrix at(int n, std::size_t rows, std::size_t cols) const;
};

// 0 → sub →(inclusion) middle →(projection) quotient → 0
struct ShortExactSequence {
  ChainComplex sub;
  ChainComplex middle;
  ChainComplex quotient;
  ChainMap inclusion;
  ChainMap projection;
};

// Throws ArithmeticError naming the first violated condition: chain-map
// commutation, injectivity, surjectivity, or exactness in the middle.
void check_short_exact(const ShortExactSequence& ses);

// Homology long exact sequence
//   … → H_n(sub) → H_n(middle) → H_n(quotient) → H_{n-1}(sub) → …
// Induced maps are matrices in the HomologyBasis generators; the connecting
// map is computed by lifting through the projection and pulling the
// boundary back through the inclusion.
struct LongExactSequence {
  Ring ring = Ring::Z;
  int top_degree = -1;
  std::vector<HomologyBasis> sub, middle, quotient;        // indexed by degree
  std::vector<IntMatrix> sub_to_middle, middle_to_quotient;  // indexed by degree
  std::vector<IntMatrix> connecting;                         // [n] : H_n(quotient) → H_{n-1}(sub)
  bool exact = false;
  std::vector<std::string> failures;
  long long alternating_rank_sum = 0;
};

LongExactSequence long_exact_sequence(const ShortExactSequence& ses);

// Exactness of L →f M →g N at M for groups presented as Z^k / im(relations)
// (relations empty over GF2): g∘f = 0 and ker g ⊆ im f, decided by lattice
// membership.
bool is_exact_at(const IntMatrix& f, const IntMatrix& g, const IntMatrix& relations_m,
                 const IntMatrix& relations_n, Ring ring);

}  // namespace bredonite
