#include "bredonite/engine.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

#include "bredonite/error.hpp"

namespace bredonite {

namespace {

std::vector<HomologyGroup> padded(std::vector<HomologyGroup> hs, Ring ring, int top) {
  while (static_cast<int>(hs.size()) < top + 1) hs.push_back(HomologyGroup{ring, 0, {}});
  hs.resize(static_cast<std::size_t>(top) + 1);
  return hs;
}

// Fills `groups` with the total-degree sums of the E2 table.
void total_degrees(TheoryResult& r, Ring ring) {
  const int max_q = static_cast<int>(r.e2.size()) - 1;
  r.groups.clear();
  for (int n = 0; n <= max_q; ++n) {
    HomologyGroup sum{ring, 0, {}};
    for (int p = 0; p <= n; ++p) {
      const auto& column = r.e2[static_cast<std::size_t>(n - p)];
      if (p < static_cast<int>(column.size())) sum = direct_sum(sum, column[static_cast<std::size_t>(p)]);
    }
    r.groups.push_back(std::move(sum));
  }
}

std::string describe(const TheoryResult& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t n = 0; n < r.groups.size(); ++n) os << (n ? ", " : "") << r.groups[n].to_string();
  os << ')';
  return os.str();
}

}  // namespace

BredonChains bredon_complex(const GCWComplex& x, Theory theory, int q) {
  require_valid(x);
  if (q < 0) throw ValidationError("coefficient degree must be non-negative");
  BredonChains chains = assemble_chains(x, CoefficientSystem(theory, x.group()), q);
  if (auto bad = chains.chains.find_dd_violation())
    throw ArithmeticError("d∘d is nonzero in theory " + std::string(to_string(theory)) + " at degree " +
                          std::to_string(*bad));
  return chains;
}

TheoryResult equivariant_homology(const GCWComplex& x, Theory theory, const EngineOptions& options) {
  require_valid(x);
  const Ring ring = coefficient_ring(theory);
  const int top = std::max(x.dimension(), 0);
  TheoryResult result;
  result.theory = theory;
  const CoefficientSystem system(theory, x.group());

  auto homology_at = [&](int q) {
    BredonChains chains = assemble_chains(x, system, q);
    if (auto bad = chains.chains.find_dd_violation())
      throw ArithmeticError("d∘d is nonzero in theory " + std::string(to_string(theory)) + " at degree " +
                            std::to_string(*bad));
    return padded(chain_homology(chains.chains), ring, top);
  };

  if (theory != Theory::Euler) {
    BredonChains chains = assemble_chains(x, system, 0);
    if (auto bad = chains.chains.find_dd_violation())
      throw ArithmeticError("d∘d is nonzero in theory " + std::string(to_string(theory)) + " at degree " +
                            std::to_string(*bad));
    result.groups = padded(chain_homology(chains.chains, options.threads), ring, top);
    return result;
  }

  const int max_q = options.euler_degrees < 0 ? top : options.euler_degrees;
  result.e2_page = true;
  result.exact = x.dimension() <= 0;
  result.e2.resize(static_cast<std::size_t>(max_q) + 1);
  if (options.threads <= 1) {
    for (int q = 0; q <= max_q; ++q) result.e2[static_cast<std::size_t>(q)] = homology_at(q);
  } else {
    std::vector<std::future<std::vector<HomologyGroup>>> jobs;
    for (int q = 0; q <= max_q; ++q) jobs.push_back(std::async(std::launch::async, homology_at, q));
    for (int q = 0; q <= max_q; ++q) result.e2[static_cast<std::size_t>(q)] = jobs[static_cast<std::size_t>(q)].get();
  }
  total_degrees(result, ring);
  return result;
}

bool coefficient_check(Theory theory, const FiniteGroup& g, const Subgroup& h, int max_degree) {
  EngineOptions options;
  options.euler_degrees = max_degree;
  const TheoryResult r = equivariant_homology(build_orbit(g, h), theory, options);
  if (!r.exact) return false;
  const CoefficientSystem system(theory, g);
  for (int q = 0; q <= max_degree; ++q) {
    const CoeffGroup value = system.value(q, h);
    const HomologyGroup expected{value.ring, value.rank, {}};
    const HomologyGroup actual =
        q < static_cast<int>(r.groups.size()) ? r.groups[static_cast<std::size_t>(q)] : HomologyGroup{value.ring, 0, {}};
    if (!(actual == expected)) return false;
  }
  return true;
}

ChainComplex cellular_chains(const CWComplex& x, Ring ring) {
  if (x.group().order() != 1) throw ValidationError("cellular_chains: complex is not over the trivial group");
  const int top = x.dimension();
  std::map<std::string, std::size_t> index;
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) {
    std::size_t k = 0;
    for (const Cell* c : x.cells_of_dim(n)) index[c->id] = k++;
    ranks.push_back(k);
  }
  std::vector<IntMatrix> diffs;
  for (int n = 1; n <= top; ++n) diffs.emplace_back(ranks[static_cast<std::size_t>(n - 1)], ranks[static_cast<std::size_t>(n)]);
  for (const auto& r : x.boundary()) {
    const Cell* from = x.find(r.from);
    if (from == nullptr || x.find(r.to) == nullptr || from->dim < 1)
      throw ValidationError("cellular_chains: malformed boundary record");
    diffs[static_cast<std::size_t>(from->dim - 1)](index.at(r.to), index.at(r.from)) += r.deg;
  }
  return ChainComplex(ring, std::move(ranks), std::move(diffs));
}

ComparisonReport free_borel_compare(const GCWComplex& x, Theory theory) {
  if (!x.is_free()) throw ValidationError("free_borel_compare: complex has non-trivial stabilizers");
  ComparisonReport report;
  report.lhs = equivariant_homology(x, theory);

  const CWComplex quotient = orbit_space(x, true);
  const int top = std::max(x.dimension(), 0);
  TheoryResult& rhs = report.rhs;
  rhs.theory = theory;
  const Ring ring = coefficient_ring(theory);
  switch (theory) {
    case Theory::All:
      rhs.groups = padded({}, ring, top);
      break;
    case Theory::OrientedSingular:
    case Theory::UnorientedSingular:
      rhs.groups = padded(chain_homology(cellular_chains(quotient, ring)), ring, top);
      break;
    case Theory::Euler: {
      rhs.e2_page = true;
      rhs.exact = x.dimension() <= 0;
      const auto column = padded(chain_homology(cellular_chains(quotient, Ring::GF2)), ring, top);
      rhs.e2.assign(report.lhs.e2.size(), column);
      total_degrees(rhs, ring);
      break;
    }
  }
  report.equal = report.lhs == report.rhs;
  report.detail = "equivariant " + describe(report.lhs) + " vs orbit space " + describe(report.rhs);
  return report;
}

ComparisonReport induction_compare(const GroupEmbedding& alpha, const GCWComplex& x, Theory theory) {
  ComparisonReport report;
  report.lhs = equivariant_homology(x, theory);
  report.rhs = equivariant_homology(induce_complex(alpha, x), theory);
  report.equal = report.lhs == report.rhs;
  report.detail = "over source " + describe(report.lhs) + " vs induced " + describe(report.rhs);
  return report;
}

namespace {

std::map<std::string, const CellBlock*> block_index(const BredonChains& c, int n) {
  std::map<std::string, const CellBlock*> idx;
  if (n >= 0 && n < static_cast<int>(c.blocks.size()))
    for (const auto& b : c.blocks[static_cast<std::size_t>(n)]) idx[b.id] = &b;
  return idx;
}

}  // namespace

ShortExactSequence mayer_vietoris_sequence(const GCWComplex& x, const std::set<std::string>& part1,
                                           const std::set<std::string>& part2, Theory theory, int q) {
  require_valid(x);
  std::set<std::string> all;
  for (const auto& c : x.cells()) all.insert(c.id);
  std::set<std::string> uni = part1;
  uni.insert(part2.begin(), part2.end());
  if (uni != all) throw ValidationError("mv_check: the two parts do not cover the complex");
  std::set<std::string> inter;
  std::set_intersection(part1.begin(), part1.end(), part2.begin(), part2.end(), std::inserter(inter, inter.end()));

  const CoefficientSystem system(theory, x.group());
  const BredonChains c12 = assemble_chains(subcomplex(x, inter), system, q);
  const BredonChains c1 = assemble_chains(subcomplex(x, part1), system, q);
  const BredonChains c2 = assemble_chains(subcomplex(x, part2), system, q);
  const BredonChains cx = assemble_chains(x, system, q);
  const Ring ring = system.ring();

  ShortExactSequence ses;
  ses.sub = c12.chains;
  ses.quotient = cx.chains;

  const int top = std::max(c1.chains.top_degree(), c2.chains.top_degree());
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) ranks.push_back(c1.chains.rank(n) + c2.chains.rank(n));
  std::vector<IntMatrix> diffs;
  for (int n = 1; n <= top; ++n) {
    const auto sz = static_cast<std::size_t>(n);
    IntMatrix d(ranks[sz - 1], ranks[sz]);
    d.set_block(0, 0, c1.chains.differential(n));
    d.set_block(c1.chains.rank(n - 1), c1.chains.rank(n), c2.chains.differential(n));
    diffs.push_back(std::move(d));
  }
  ses.middle = ChainComplex(ring, ranks, std::move(diffs));

  const int all_top = std::max({top, ses.sub.top_degree(), ses.quotient.top_degree()});
  for (int n = 0; n <= all_top; ++n) {
    const std::size_t r1 = c1.chains.rank(n);
    const auto in1 = block_index(c1, n);
    const auto in2 = block_index(c2, n);
    const auto inx = block_index(cx, n);

    IntMatrix inc(ses.middle.rank(n), ses.sub.rank(n));
    for (const auto& [id, b] : block_index(c12, n))
      for (std::size_t k = 0; k < b->rank; ++k) {
        inc(in1.at(id)->offset + k, b->offset + k) = 1;
        inc(r1 + in2.at(id)->offset + k, b->offset + k) = -1;
      }
    ses.inclusion.components.push_back(inc.reduced(ring));

    IntMatrix proj(ses.quotient.rank(n), ses.middle.rank(n));
    for (const auto& [id, b] : in1)
      for (std::size_t k = 0; k < b->rank; ++k) proj(inx.at(id)->offset + k, b->offset + k) = 1;
    for (const auto& [id, b] : in2)
      for (std::size_t k = 0; k < b->rank; ++k) proj(inx.at(id)->offset + k, r1 + b->offset + k) = 1;
    ses.projection.components.push_back(std::move(proj));
  }
  return ses;
}

MvReport mv_check(const GCWComplex& x, const std::set<std::string>& part1, const std::set<std::string>& part2,
                  Theory theory) {
  MvReport report;
  report.exact = true;
  const int max_q = theory == Theory::Euler ? std::max(x.dimension(), 0) : 0;
  std::ostringstream os;
  for (int q = 0; q <= max_q; ++q) {
    LongExactSequence les = long_exact_sequence(mayer_vietoris_sequence(x, part1, part2, theory, q));
    const bool ok = les.exact && les.alternating_rank_sum == 0;
    report.exact = report.exact && ok;
    if (!ok) {
      os << "q=" << q << ":";
      for (const auto& f : les.failures) os << ' ' << f << ';';
      if (les.alternating_rank_sum != 0) os << " alternating rank sum " << les.alternating_rank_sum << ';';
    }
    report.sequences.push_back(std::move(les));
  }
  report.detail = report.exact ? "exact" : os.str();
  return report;
}

}  // namespace bredonite
