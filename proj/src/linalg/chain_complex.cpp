#include "bredonite/linalg/chain_complex.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "bredonite/error.hpp"
#include "bredonite/linalg/normal_forms.hpp"

namespace bredonite {

std::string HomologyGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (ring == Ring::GF2) {
    if (free_rank == 1)
      os << "Z/2";
    else
      os << "(Z/2)^" << free_rank;
    return os.str();
  }
  if (free_rank > 0) {
    sep();
    os << "Z";
    if (free_rank > 1) os << '^' << free_rank;
  }
  for (const auto& t : torsion) {
    sep();
    os << "Z/" << t;
  }
  return os.str();
}

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b) {
  if (a.ring != b.ring) throw std::invalid_argument("direct_sum: ring mismatch");
  HomologyGroup s{a.ring, a.free_rank + b.free_rank, {}};
  if (a.ring == Ring::GF2) return s;
  // Re-normalize the combined torsion into invariant factors by running SNF
  // on the diagonal relation matrix.
  IntVector all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  IntMatrix rel(all.size(), all.size());
  for (std::size_t i = 0; i < all.size(); ++i) rel(i, i) = all[i];
  for (const auto& f : smith_normal_form(rel).invariant_factors())
    if (f > 1) s.torsion.push_back(f);
  return s;
}

ChainComplex::ChainComplex(Ring ring, std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials)
    : ring_(ring), ranks_(std::move(ranks)), d_(std::move(differentials)) {
  const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (d_.size() != expected)
    throw std::invalid_argument("ChainComplex: need one differential per degree above 0");
  for (std::size_t k = 0; k < d_.size(); ++k) {
    if (d_[k].rows() != ranks_[k] || d_[k].cols() != ranks_[k + 1])
      throw std::invalid_argument("ChainComplex: differential d_" + std::to_string(k + 1) + " has wrong shape");
    d_[k] = d_[k].reduced(ring_);
  }
}

std::size_t ChainComplex::rank(int n) const {
  if (n < 0 || n > top_degree()) return 0;
  return ranks_[static_cast<std::size_t>(n)];
}

IntMatrix ChainComplex::differential(int n) const {
  if (n >= 1 && n <= top_degree()) return d_[static_cast<std::size_t>(n - 1)];
  return IntMatrix(rank(n - 1), rank(n));
}

std::optional<int> ChainComplex::find_dd_violation() const {
  for (int n = 2; n <= top_degree(); ++n) {
    IntMatrix dd = (differential(n - 1) * differential(n)).reduced(ring_);
    if (!dd.is_zero()) return n;
  }
  return std::nullopt;
}

std::vector<HomologyGroup> chain_homology(const ChainComplex& c, unsigned threads) {
  if (auto bad = c.find_dd_violation())
    throw ArithmeticError("chain_homology: d_" + std::to_string(*bad - 1) + "·d_" + std::to_string(*bad) +
                          " is nonzero");
  const int top = c.top_degree();
  if (top < 0) return {};

  // forms[n] is the Smith form of d_n for n = 1..top+1 (index 0 unused).
  std::vector<SmithForm> forms(static_cast<std::size_t>(top) + 2);
  auto compute = [&](int n) { forms[static_cast<std::size_t>(n)] = smith_normal_form(c.differential(n), c.ring()); };
  if (threads <= 1) {
    for (int n = 1; n <= top; ++n) compute(n);
  } else {
    std::vector<std::future<void>> jobs;
    for (int n = 1; n <= top; ++n) {
      jobs.push_back(std::async(std::launch::async, compute, n));
      if (jobs.size() >= threads) {
        for (auto& j : jobs) j.get();
        jobs.clear();
      }
    }
    for (auto& j : jobs) j.get();
  }

  std::vector<HomologyGroup> out;
  for (int n = 0; n <= top; ++n) {
    const std::size_t rank_out = n >= 1 ? forms[static_cast<std::size_t>(n)].rank : 0;
    const std::size_t rank_in = n + 1 <= top ? forms[static_cast<std::size_t>(n + 1)].rank : 0;
    HomologyGroup h{c.ring(), c.rank(n) - rank_out - rank_in, {}};
    if (c.ring() == Ring::Z && n + 1 <= top)
      for (const auto& f : forms[static_cast<std::size_t>(n + 1)].invariant_factors())
        if (f > 1) h.torsion.push_back(f);
    out.push_back(std::move(h));
  }
  return out;
}

HomologyBasis::HomologyBasis(const ChainComplex& c, int n) {
  const Ring ring = c.ring();
  chain_rank_ = c.rank(n);
  group_.ring = ring;

  SmithForm outgoing = smith_normal_form(c.differential(n), ring);
  const std::size_t r = outgoing.rank;
  const std::size_t k = chain_rank_ - r;
  IntMatrix cycles = outgoing.V.block(0, r, chain_rank_, k);
  IntMatrix to_cycles = outgoing.V_inv.block(r, 0, k, chain_rank_);

  IntMatrix incoming = (to_cycles * c.differential(n + 1)).reduced(ring);
  SmithForm rel = smith_normal_form(incoming, ring);

  std::vector<IntVector> rows;
  IntMatrix change = (rel.U * to_cycles).reduced(ring);
  for (std::size_t i = 0; i < k; ++i) {
    BigInt order = i < rel.rank ? rel.D(i, i) : BigInt(0);
    if (order == 1) continue;
    IntVector gen = reduced(cycles * rel.U_inv.column(i), ring);
    generators_.push_back(std::move(gen));
    orders_.push_back(order);
    rows.push_back(change.row(i));
    if (order == 0)
      ++group_.free_rank;
    else
      group_.torsion.push_back(order);
  }
  to_cycle_coords_ = IntMatrix::from_columns(chain_rank_, rows).transposed();
  if (rows.empty()) to_cycle_coords_ = IntMatrix(0, chain_rank_);
}

IntVector HomologyBasis::coordinates(const IntVector& cycle) const {
  if (cycle.size() != chain_rank_) throw std::invalid_argument("HomologyBasis: chain length mismatch");
  IntVector y = to_cycle_coords_ * cycle;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (group_.ring == Ring::GF2) {
      y[i] = reduce(y[i], Ring::GF2);
    } else if (orders_[i] != 0) {
      y[i] %= orders_[i];
      if (y[i] < 0) y[i] += orders_[i];
    }
  }
  return y;
}

IntMatrix HomologyBasis::relation_matrix() const {
  IntMatrix m(size(), size());
  if (group_.ring == Ring::Z)
    for (std::size_t i = 0; i < size(); ++i) m(i, i) = orders_[i];
  return m;
}

}  // namespace bredonite
