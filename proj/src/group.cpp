#include "bredonite/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bredonite/error.hpp"

namespace bredonite {

struct FiniteGroup::Data {
  int order = 1;
  std::vector<Element> table{0};
  std::vector<Element> inverse{0};
  std::vector<std::string> names{"e"};
  std::string spec = "C1";
};

FiniteGroup::FiniteGroup() : data_(std::make_shared<const Data>()) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

FiniteGroup FiniteGroup::from_table_unchecked(int order, std::vector<Element> table, std::vector<std::string> names,
                                              std::string spec) {
  if (order < 1 || order > kMaxGroupOrder)
    throw ValidationError("group order " + std::to_string(order) + " out of range");
  if (table.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
    throw ValidationError("Cayley table has wrong size");
  auto d = std::make_shared<Data>();
  d->order = order;
  d->table = std::move(table);
  d->inverse.assign(static_cast<std::size_t>(order), -1);
  for (Element x = 0; x < order; ++x) {
    if (d->table[static_cast<std::size_t>(x)] != x || d->table[static_cast<std::size_t>(x) * order] != x)
      throw ValidationError("index 0 is not the identity");
    for (Element y = 0; y < order; ++y)
      if (d->table[static_cast<std::size_t>(x) * order + y] == 0) {
        d->inverse[static_cast<std::size_t>(x)] = y;
        break;
      }
    if (d->inverse[static_cast<std::size_t>(x)] < 0)
      throw ValidationError("element " + std::to_string(x) + " has no inverse");
  }
  if (names.empty()) {
    names.push_back("e");
    for (Element x = 1; x < order; ++x) names.push_back("x" + std::to_string(x));
  }
  if (names.size() != static_cast<std::size_t>(order)) throw ValidationError("element name list has wrong length");
  d->names = std::move(names);
  d->spec = std::move(spec);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> cayley, std::vector<std::string> names,
                                    std::string spec) {
  const int n = static_cast<int>(cayley.size());
  if (n < 1 || n > kMaxGroupOrder) throw ValidationError("group order out of range");
  std::vector<Element> flat;
  flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : cayley) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("Cayley table is not square");
    for (Element x : row) {
      if (x < 0 || x >= n) throw ValidationError("Cayley table entry out of range");
      flat.push_back(x);
    }
  }
  auto at = [&](Element x, Element y) { return flat[static_cast<std::size_t>(x) * n + y]; };
  for (Element x = 0; x < n; ++x) {
    std::vector<char> row_seen(static_cast<std::size_t>(n)), col_seen(static_cast<std::size_t>(n));
    for (Element y = 0; y < n; ++y) {
      if (row_seen[static_cast<std::size_t>(at(x, y))]++ || col_seen[static_cast<std::size_t>(at(y, x))]++)
        throw ValidationError("Cayley table is not a Latin square");
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          throw ValidationError("Cayley table is not associative");
  return from_table_unchecked(n, std::move(flat), std::move(names), std::move(spec));
}

int FiniteGroup::order() const noexcept { return data_->order; }

Element FiniteGroup::mul(Element x, Element y) const {
  return data_->table[static_cast<std::size_t>(x) * static_cast<std::size_t>(data_->order) +
                      static_cast<std::size_t>(y)];
}

Element FiniteGroup::inv(Element x) const { return data_->inverse[static_cast<std::size_t>(x)]; }

Element FiniteGroup::conj(Element h, Element a) const { return mul(mul(inv(a), h), a); }

int FiniteGroup::element_order(Element x) const {
  int k = 1;
  for (Element y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

const std::string& FiniteGroup::element_name(Element x) const { return data_->names.at(static_cast<std::size_t>(x)); }

const std::vector<std::string>& FiniteGroup::element_names() const noexcept { return data_->names; }

const std::string& FiniteGroup::spec() const noexcept { return data_->spec; }

bool FiniteGroup::is_abelian() const {
  for (Element x = 0; x < order(); ++x)
    for (Element y = x + 1; y < order(); ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::cayley_table() const {
  std::vector<std::vector<Element>> t(static_cast<std::size_t>(order()));
  for (Element x = 0; x < order(); ++x)
    for (Element y = 0; y < order(); ++y) t[static_cast<std::size_t>(x)].push_back(mul(x, y));
  return t;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.data_ == b.data_ || (a.data_->order == b.data_->order && a.data_->table == b.data_->table);
}

// ---------------------------------------------------------------------------

bool Subgroup::contains(Element x) const { return std::binary_search(elems.begin(), elems.end(), x); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elems.begin(), other.elems.end(), elems.begin(), elems.end());
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
  if (auto c = a.elems.size() <=> b.elems.size(); c != 0) return c;
  return a.elems <=> b.elems;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  for (Element x = 0; x < g.order(); ++x) s.elems.push_back(x);
  return s;
}

Subgroup generate_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  for (Element x : gens)
    if (!g.contains(x)) throw ValidationError("generator " + std::to_string(x) + " is not a group element");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Element> found{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < found.size(); ++i)
    for (Element s : gens) {
      Element y = g.mul(found[i], s);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        found.push_back(y);
      }
    }
  std::sort(found.begin(), found.end());
  return Subgroup{std::move(found)};
}

bool is_subgroup(const FiniteGroup& g, std::span<const Element> elems) {
  if (elems.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Element x : elems) {
    if (!g.contains(x)) return false;
    in[static_cast<std::size_t>(x)] = 1;
  }
  if (!in[0]) return false;
  for (Element x : elems) {
    if (!in[static_cast<std::size_t>(g.inv(x))]) return false;
    for (Element y : elems)
      if (!in[static_cast<std::size_t>(g.mul(x, y))]) return false;
  }
  return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!is_subgroup(g, elems)) throw ValidationError("{" + format_elements(Subgroup{elems}) + "} is not a subgroup");
  return Subgroup{std::move(elems)};
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g) { return enumerate_subgroups(g, whole_group(g)); }

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, const Subgroup& ambient) {
  if (!is_subgroup(g, ambient.elems)) throw ValidationError("ambient set is not a subgroup");
  struct Layer {
    Subgroup sub;
    std::vector<Element> gens;
  };
  std::set<std::vector<Element>> seen{{0}};
  std::vector<Subgroup> all{trivial_subgroup()};
  std::vector<Layer> frontier{{trivial_subgroup(), {}}};
  while (!frontier.empty()) {
    std::vector<Layer> next;
    for (const auto& layer : frontier) {
      for (Element x : ambient.elems) {
        if (layer.sub.contains(x)) continue;
        std::vector<Element> gens = layer.gens;
        gens.push_back(x);
        Subgroup t = generate_subgroup(g, gens);
        if (seen.insert(t.elems).second) {
          all.push_back(t);
          next.push_back({std::move(t), std::move(gens)});
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Element a) {
  Subgroup c;
  c.elems.reserve(h.elems.size());
  for (Element x : h.elems) c.elems.push_back(g.conj(x, a));
  std::sort(c.elems.begin(), c.elems.end());
  return c;
}

bool is_subconjugate(const FiniteGroup& g, const Subgroup& h, const Subgroup& k, Element a) {
  for (Element x : h.elems)
    if (!k.contains(g.conj(x, a))) return false;
  return true;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) { return normalizer(g, h, whole_group(g)); }

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient) {
  if (!is_subgroup(g, h.elems)) throw ValidationError("normalizer: argument is not a subgroup");
  Subgroup n;
  for (Element a : ambient.elems)
    if (conjugate_subgroup(g, h, a) == h) n.elems.push_back(a);
  return n;
}

SubgroupClassTable::SubgroupClassTable(const FiniteGroup& g, const Subgroup& ambient)
    : ambient_(ambient), subgroups_(enumerate_subgroups(g, ambient)) {
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < subgroups_.size(); ++i) lookup_.emplace(subgroups_[i].elems, i);
  class_of_index_.assign(subgroups_.size(), unassigned);
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (class_of_index_[i] != unassigned) continue;
    const std::size_t cls = reps_.size();
    reps_.push_back(subgroups_[i]);
    for (Element a : ambient.elems)
      class_of_index_[lookup_.at(conjugate_subgroup(g, subgroups_[i], a).elems)] = cls;
  }
}

std::size_t SubgroupClassTable::class_of(const Subgroup& s) const {
  auto it = lookup_.find(s.elems);
  if (it == lookup_.end())
    throw ValidationError("{" + format_elements(s) + "} is not a subgroup of the ambient group");
  return class_of_index_[it->second];
}

std::size_t SubgroupClassTable::class_size(std::size_t cls) const {
  return static_cast<std::size_t>(std::count(class_of_index_.begin(), class_of_index_.end(), cls));
}

SubgroupClassTable subgroup_classes(const FiniteGroup& g) { return SubgroupClassTable(g, whole_group(g)); }

SubgroupClassTable subgroup_classes(const FiniteGroup& g, const Subgroup& ambient) {
  return SubgroupClassTable(g, ambient);
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h.elems)) throw ValidationError("subgroup_as_group: argument is not a subgroup");
  const int n = h.order();
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(h.elems[static_cast<std::size_t>(k)])] = k;
  std::vector<Element> table;
  table.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<std::string> names;
  for (Element x : h.elems) {
    names.push_back(g.element_name(x));
    for (Element y : h.elems) table.push_back(pos[static_cast<std::size_t>(g.mul(x, y))]);
  }
  std::string spec = h.order() == g.order() ? g.spec() : std::string();
  return FiniteGroup::from_table_unchecked(n, std::move(table), std::move(names), std::move(spec));
}

void GroupEmbedding::validate() const {
  if (image.size() != static_cast<std::size_t>(source.order()))
    throw ValidationError("embedding: image list has wrong length");
  std::set<Element> distinct;
  for (Element y : image) {
    if (!target.contains(y)) throw ValidationError("embedding: image element out of range");
    distinct.insert(y);
  }
  if (distinct.size() != image.size()) throw ValidationError("embedding is not injective");
  for (Element x = 0; x < source.order(); ++x)
    for (Element y = 0; y < source.order(); ++y)
      if (image[static_cast<std::size_t>(source.mul(x, y))] !=
          target.mul(image[static_cast<std::size_t>(x)], image[static_cast<std::size_t>(y)]))
        throw ValidationError("embedding is not a homomorphism");
}

Subgroup GroupEmbedding::image_subgroup() const {
  Subgroup s{image};
  std::sort(s.elems.begin(), s.elems.end());
  return s;
}

GroupEmbedding inclusion(const FiniteGroup& g, const Subgroup& h) {
  return GroupEmbedding{subgroup_as_group(g, h), g, h.elems};
}

GroupEmbedding make_embedding(const FiniteGroup& source, const FiniteGroup& target, std::vector<Element> image) {
  GroupEmbedding e{source, target, std::move(image)};
  e.validate();
  return e;
}

GroupEmbedding compose(const GroupEmbedding& alpha, const GroupEmbedding& beta) {
  if (!(alpha.target == beta.source)) throw ValidationError("compose: embeddings are not composable");
  std::vector<Element> image;
  for (Element x : alpha.image) image.push_back(beta.image[static_cast<std::size_t>(x)]);
  return GroupEmbedding{alpha.source, beta.target, std::move(image)};
}

std::string describe_subgroup(const FiniteGroup& g, const Subgroup& h) {
  const int n = h.order();
  if (n == 1) return "e";
  if (n == g.order() && !g.spec().empty()) return g.spec();
  int max_order = 1;
  int involutions = 0;
  bool abelian = true;
  for (Element x : h.elems) {
    const int o = g.element_order(x);
    max_order = std::max(max_order, o);
    if (o == 2) ++involutions;
    for (Element y : h.elems)
      if (g.mul(x, y) != g.mul(y, x)) abelian = false;
  }
  if (max_order == n) return "C" + std::to_string(n);
  if (abelian) {
    if (max_order == 2) {
      std::string s = "C2";
      for (int m = n; m > 2; m /= 2) s += "xC2";
      return s;
    }
    return "Ab" + std::to_string(n);
  }
  if (n == 6) return "S3";
  if (n == 8) return involutions == 5 ? "D4" : (involutions == 1 ? "Q8" : "G8");
  if (n == 12 && max_order == 3 && involutions == 3) return "A4";
  return "G" + std::to_string(n);
}

std::string format_elements(const Subgroup& h) {
  std::ostringstream os;
  for (std::size_t i = 0; i < h.elems.size(); ++i) {
    if (i) os << ',';
    os << h.elems[i];
  }
  return os.str();
}

}  // namespace bredonite
