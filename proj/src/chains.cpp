#include "bredonite/chains.hpp"

#include <map>

namespace bredonite {

BredonChains assemble_chains(const GCWComplex& x, const CoefficientSystem& system, int q) {
  BredonChains out;
  const int top = x.dimension();
  std::map<std::string, std::pair<int, std::size_t>> where;  // id -> (dim, block index)
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) {
    std::vector<CellBlock> blocks;
    std::size_t offset = 0;
    for (const Cell* c : x.cells_of_dim(n)) {
      const std::size_t r = system.value(q, c->stabilizer).rank;
      where[c->id] = {n, blocks.size()};
      blocks.push_back({c->id, offset, r});
      offset += r;
    }
    ranks.push_back(offset);
    out.blocks.push_back(std::move(blocks));
  }

  std::vector<IntMatrix> diffs;
  for (int n = 1; n <= top; ++n) diffs.emplace_back(ranks[static_cast<std::size_t>(n - 1)], ranks[static_cast<std::size_t>(n)]);

  for (const auto& rec : x.boundary()) {
    const auto [n, si] = where.at(rec.from);
    const auto [m, ti] = where.at(rec.to);
    const CellBlock& src = out.blocks[static_cast<std::size_t>(n)][si];
    const CellBlock& dst = out.blocks[static_cast<std::size_t>(m)][ti];
    if (src.rank == 0 || dst.rank == 0) continue;
    const Cell* from = x.find(rec.from);
    const Cell* to = x.find(rec.to);
    IntMatrix block = system.map(q, OrbitMorphism{from->stabilizer, to->stabilizer, rec.a});
    IntMatrix& d = diffs[static_cast<std::size_t>(n - 1)];
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c)
        if (block(r, c) != 0) d(dst.offset + r, src.offset + c) += BigInt(rec.deg) * block(r, c);
  }

  out.chains = ChainComplex(system.ring(), std::move(ranks), std::move(diffs));
  return out;
}

}  // namespace bredonite
