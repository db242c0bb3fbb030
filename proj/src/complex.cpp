#include "bredonite/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "bredonite/chains.hpp"
#include "bredonite/error.hpp"

namespace bredonite {

GCWComplex::GCWComplex(FiniteGroup group, std::vector<Cell> cells, std::vector<BoundaryRecord> boundary)
    : group_(std::move(group)), cells_(std::move(cells)), boundary_(std::move(boundary)) {}

int GCWComplex::dimension() const {
  int d = -1;
  for (const auto& c : cells_) d = std::max(d, c.dim);
  return d;
}

const Cell* GCWComplex::find(std::string_view id) const {
  for (const auto& c : cells_)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<const Cell*> GCWComplex::cells_of_dim(int n) const {
  std::vector<const Cell*> out;
  for (const auto& c : cells_)
    if (c.dim == n) out.push_back(&c);
  return out;
}

bool GCWComplex::is_free() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.stabilizer.order() == 1; });
}

bool operator==(const GCWComplex& a, const GCWComplex& b) {
  return a.group_ == b.group_ && a.cells_ == b.cells_ && a.boundary_ == b.boundary_;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) os << "; ";
    os << v.code << ": " << v.message;
    if (!v.cells.empty()) {
      os << " [";
      for (std::size_t k = 0; k < v.cells.size(); ++k) os << (k ? "," : "") << v.cells[k];
      os << ']';
    }
  }
  return os.str();
}

ValidationReport validate_complex(const GCWComplex& x) {
  ValidationReport report;
  auto add = [&](std::string code, std::vector<std::string> cells, std::string message) {
    report.violations.push_back({std::move(code), std::move(cells), std::move(message)});
  };
  const FiniteGroup& g = x.group();

  std::map<std::string, const Cell*> by_id;
  for (const auto& c : x.cells()) {
    if (c.id.empty()) add("empty-id", {}, "cell with empty id");
    if (!by_id.emplace(c.id, &c).second) add("duplicate-id", {c.id}, "cell id used twice");
    if (c.dim < 0) add("negative-dimension", {c.id}, "cell dimension is negative");
    if (!is_subgroup(g, c.stabilizer.elems) ||
        !std::is_sorted(c.stabilizer.elems.begin(), c.stabilizer.elems.end()) ||
        std::adjacent_find(c.stabilizer.elems.begin(), c.stabilizer.elems.end()) != c.stabilizer.elems.end())
      add("bad-stabilizer", {c.id}, "stabilizer is not a sorted subgroup of the group");
  }
  bool structural_ok = report.ok();

  for (std::size_t i = 0; i < x.boundary().size(); ++i) {
    const auto& r = x.boundary()[i];
    const std::string where = "record " + std::to_string(i) + " (" + r.from + " -> " + r.to + ")";
    auto f = by_id.find(r.from);
    auto t = by_id.find(r.to);
    if (f == by_id.end() || t == by_id.end()) {
      add("unknown-cell", {r.from, r.to}, where + " refers to a missing cell");
      structural_ok = false;
      continue;
    }
    if (!g.contains(r.a)) {
      add("bad-element", {r.from, r.to}, where + " has element " + std::to_string(r.a) + " outside the group");
      structural_ok = false;
      continue;
    }
    if (f->second->dim != t->second->dim + 1) {
      add("dimension-mismatch", {r.from, r.to}, where + " does not lower dimension by one");
      structural_ok = false;
    }
    if (is_subgroup(g, f->second->stabilizer.elems) && is_subgroup(g, t->second->stabilizer.elems) &&
        !is_subconjugate(g, f->second->stabilizer, t->second->stabilizer, r.a)) {
      add("not-subconjugate", {r.from, r.to}, where + ": a⁻¹·H_from·a is not contained in H_to");
      structural_ok = false;
    }
  }
  if (!structural_ok) return report;

  BredonChains chains = assemble_chains(x, CoefficientSystem(Theory::OrientedSingular, g), 0);
  for (int n = 2; n <= chains.chains.top_degree(); ++n) {
    IntMatrix dd = chains.chains.differential(n - 1) * chains.chains.differential(n);
    std::vector<std::string> bad;
    for (const auto& b : chains.blocks[static_cast<std::size_t>(n)]) {
      bool nonzero = false;
      for (std::size_t c = b.offset; c < b.offset + b.rank && !nonzero; ++c)
        for (std::size_t r = 0; r < dd.rows(); ++r)
          if (dd(r, c) != 0) {
            nonzero = true;
            break;
          }
      if (nonzero) bad.push_back(b.id);
    }
    if (!bad.empty())
      add("dd-nonzero", bad, "d_" + std::to_string(n - 1) + "·d_" + std::to_string(n) + " is nonzero");
  }
  return report;
}

void require_valid(const GCWComplex& x) {
  ValidationReport r = validate_complex(x);
  if (!r.ok()) throw ValidationError("invalid complex: " + r.summary());
}

GCWComplex normalize(const GCWComplex& x) {
  const FiniteGroup& g = x.group();
  std::vector<Cell> cells = x.cells();
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return std::tie(a.dim, a.id) < std::tie(b.dim, b.id); });

  std::map<std::tuple<std::string, std::string, Element>, long long> merged;
  for (const auto& r : x.boundary()) {
    Element a = r.a;
    if (const Cell* to = x.find(r.to); to != nullptr && g.contains(r.a))
      for (Element k : to->stabilizer.elems)
        if (g.contains(k)) a = std::min(a, g.mul(r.a, k));
    merged[{r.from, r.to, a}] += r.deg;
  }
  std::vector<BoundaryRecord> records;
  for (const auto& [key, deg] : merged)
    if (deg != 0) records.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), deg});
  return GCWComplex(g, std::move(cells), std::move(records));
}

GCWComplex induce_complex(const GroupEmbedding& alpha, const GCWComplex& x) {
  alpha.validate();
  if (!(x.group() == alpha.source)) throw ValidationError("induce_complex: complex is not over the embedding's source");
  require_valid(x);
  std::vector<Cell> cells;
  for (const auto& c : x.cells()) {
    Subgroup s;
    for (Element e : c.stabilizer.elems) s.elems.push_back(alpha.image[static_cast<std::size_t>(e)]);
    std::sort(s.elems.begin(), s.elems.end());
    cells.push_back({c.id, c.dim, std::move(s)});
  }
  std::vector<BoundaryRecord> records;
  for (const auto& r : x.boundary())
    records.push_back({r.from, r.to, alpha.image[static_cast<std::size_t>(r.a)], r.deg});
  return GCWComplex(alpha.target, std::move(cells), std::move(records));
}

GCWComplex induce_complex(const FiniteGroup& g, const Subgroup& h, const GCWComplex& x) {
  return induce_complex(inclusion(g, h), x);
}

CWComplex orbit_space(const GCWComplex& x, bool require_free) {
  if (require_free && !x.is_free()) throw ValidationError("orbit_space: complex has non-trivial stabilizers");
  require_valid(x);
  std::vector<Cell> cells;
  for (const auto& c : x.cells()) cells.push_back({c.id, c.dim, trivial_subgroup()});
  std::map<std::pair<std::string, std::string>, long long> degree;
  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& r : x.boundary()) {
    auto key = std::make_pair(r.from, r.to);
    if (!degree.contains(key)) order.push_back(key);
    degree[key] += r.deg;
  }
  std::vector<BoundaryRecord> records;
  for (const auto& key : order)
    if (degree[key] != 0) records.push_back({key.first, key.second, 0, degree[key]});
  return CWComplex(FiniteGroup(), std::move(cells), std::move(records));
}

std::set<std::string> closure(const GCWComplex& x, const std::set<std::string>& ids) {
  std::set<std::string> out = ids;
  std::vector<std::string> todo(ids.begin(), ids.end());
  while (!todo.empty()) {
    std::string id = std::move(todo.back());
    todo.pop_back();
    for (const auto& r : x.boundary())
      if (r.from == id && out.insert(r.to).second) todo.push_back(r.to);
  }
  return out;
}

GCWComplex subcomplex(const GCWComplex& x, const std::set<std::string>& ids) {
  for (const auto& id : ids)
    if (x.find(id) == nullptr) throw ValidationError("subcomplex: unknown cell '" + id + "'");
  if (closure(x, ids) != ids) throw ValidationError("subcomplex: cell set is not closed under boundaries");
  std::vector<Cell> cells;
  for (const auto& c : x.cells())
    if (ids.contains(c.id)) cells.push_back(c);
  std::vector<BoundaryRecord> records;
  for (const auto& r : x.boundary())
    if (ids.contains(r.from)) records.push_back(r);
  return GCWComplex(x.group(), std::move(cells), std::move(records));
}

GCWComplex disjoint_union(const std::vector<GCWComplex>& parts) {
  if (parts.empty()) return GCWComplex();
  const FiniteGroup& g = parts.front().group();
  std::vector<Cell> cells;
  std::vector<BoundaryRecord> records;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!(parts[k].group() == g)) throw ValidationError("disjoint_union: operands over different groups");
    const std::string prefix = std::to_string(k) + ".";
    for (const auto& c : parts[k].cells()) cells.push_back({prefix + c.id, c.dim, c.stabilizer});
    for (const auto& r : parts[k].boundary()) records.push_back({prefix + r.from, prefix + r.to, r.a, r.deg});
  }
  return GCWComplex(g, std::move(cells), std::move(records));
}

}  // namespace bredonite
