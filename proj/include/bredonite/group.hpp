#pragma once

#include <compare>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bredonite {

// Elements are indices 0..order-1 into a group's Cayley table; 0 is the
// identity.
using Element = int;

// Upper bound on group order accepted by the constructors.
inline constexpr int kMaxGroupOrder = 1024;

// Finite group stored as a full multiplication table. Copies share the same
// immutable table.
class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup();

  // Validates every invariant: identity at index 0, Latin square,
  // associativity. Throws ValidationError.
  static FiniteGroup from_table(std::vector<std::vector<Element>> cayley,
                                std::vector<std::string> names = {}, std::string spec = {});

  int order() const noexcept;
  Element mul(Element x, Element y) const;
  Element inv(Element x) const;
  // a⁻¹·h·a
  Element conj(Element h, Element a) const;
  int element_order(Element x) const;
  const std::string& element_name(Element x) const;
  const std::vector<std::string>& element_names() const noexcept;
  // Group-spec string this group was built from; empty for ad-hoc tables.
  const std::string& spec() const noexcept;
  bool is_abelian() const;
  bool contains(Element x) const noexcept { return x >= 0 && x < order(); }

  std::vector<std::vector<Element>> cayley_table() const;

  // Row-major table known to satisfy the invariants; only identity and
  // shape are checked. Used by the constructors in this library.
  static FiniteGroup from_table_unchecked(int order, std::vector<Element> table,
                                          std::vector<std::string> names, std::string spec);

  // Same multiplication table (names and spec ignored).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> data);

  std::shared_ptr<const Data> data_;
};

// Group-spec mini-language:
//   C<n>            cyclic, element k = g^k
//   D<n>            dihedral of order 2n: r^0..r^{n-1}, then r^0 s..r^{n-1} s
//   S<n>            symmetric group (n ≤ 5), permutations in lexicographic
//                   order of their image tuples
//   Q8              1, -1, i, -i, j, -j, k, -k
//   A x B           direct product, (a, b) ↦ a·|B| + b
//   perm:[(1,2),(1,2,3)]
//                   closure of the listed permutations of 1..k, breadth-first
//                   from the sorted generators; a generator may be a product
//                   of cycles such as (1,2)(3,4)
// Permutations compose right-to-left: (p·q)(x) = p(q(x)).
// Throws ParseError on malformed input or unsupported sizes.
FiniteGroup construct_group(std::string_view spec);

// A subgroup as the sorted list of its element indices in the parent group.
// Ordered by (order, then lexicographic elements): the canonical order used
// for class representatives and the Burnside basis.
struct Subgroup {
  std::vector<Element> elems;

  int order() const noexcept { return static_cast<int>(elems.size()); }
  bool contains(Element x) const;
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);
};

Subgroup trivial_subgroup();
Subgroup whole_group(const FiniteGroup& g);
// Subgroup generated by `gens`.
Subgroup generate_subgroup(const FiniteGroup& g, std::span<const Element> gens);
bool is_subgroup(const FiniteGroup& g, std::span<const Element> elems);
// Sorts, deduplicates and validates; throws ValidationError otherwise.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> elems);

// Every subgroup exactly once, sorted canonically. Layered cyclic extension:
// start from the trivial subgroup and repeatedly adjoin one element.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g);
// Subgroups of `ambient` (itself a subgroup of g).
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, const Subgroup& ambient);

// a⁻¹·H·a
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Element a);
// a⁻¹·H·a ⊆ K
bool is_subconjugate(const FiniteGroup& g, const Subgroup& h, const Subgroup& k, Element a);
// N_G(H); throws ValidationError if H is not a subgroup.
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
// N_ambient(H) = normalizer(G, H) ∩ ambient.
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient);

// Subgroups of `ambient` partitioned into ambient-conjugacy classes. Class
// representatives are the canonical minimum of each class, and classes are
// ordered by their representatives.
class SubgroupClassTable {
 public:
  SubgroupClassTable() = default;
  SubgroupClassTable(const FiniteGroup& g, const Subgroup& ambient);

  const Subgroup& ambient() const noexcept { return ambient_; }
  const std::vector<Subgroup>& reps() const noexcept { return reps_; }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  std::size_t size() const noexcept { return reps_.size(); }
  const Subgroup& rep(std::size_t cls) const { return reps_.at(cls); }
  // Class index of a subgroup of ambient; throws ValidationError if absent.
  std::size_t class_of(const Subgroup& s) const;
  // Class index of subgroups_[i].
  std::size_t class_of_index(std::size_t i) const { return class_of_index_.at(i); }
  std::size_t class_size(std::size_t cls) const;

 private:
  Subgroup ambient_;
  std::vector<Subgroup> subgroups_;
  std::vector<Subgroup> reps_;
  std::vector<std::size_t> class_of_index_;
  std::map<std::vector<Element>, std::size_t> lookup_;
};

SubgroupClassTable subgroup_classes(const FiniteGroup& g);
SubgroupClassTable subgroup_classes(const FiniteGroup& g, const Subgroup& ambient);

// H as a group in its own right; element k of the result is h.elems[k].
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

// Injective homomorphism α : source → target, image[x] = α(x).
struct GroupEmbedding {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Element> image;

  // Throws ValidationError unless `image` is an injective homomorphism.
  void validate() const;
  Subgroup image_subgroup() const;
};

// Inclusion of H ≤ G, with H presented by subgroup_as_group.
GroupEmbedding inclusion(const FiniteGroup& g, const Subgroup& h);
// Embedding given by an explicit image list; validated.
GroupEmbedding make_embedding(const FiniteGroup& source, const FiniteGroup& target, std::vector<Element> image);
// β∘α
GroupEmbedding compose(const GroupEmbedding& alpha, const GroupEmbedding& beta);

// Display name for a subgroup: "e", the group spec for the whole group,
// C<n> for cyclic, C2^k for elementary abelian 2-groups, S3/D4/Q8/A4 for the
// small non-abelian cases, otherwise "G<order>".
std::string describe_subgroup(const FiniteGroup& g, const Subgroup& h);

std::string format_elements(const Subgroup& h);

}  // namespace bredonite
