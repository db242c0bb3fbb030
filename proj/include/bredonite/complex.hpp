#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bredonite/group.hpp"

namespace bredonite {

// One cell orbit G/H × D^dim.
struct Cell {
  std::string id;
  int dim = 0;
  Subgroup stabilizer;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// The boundary of cell orbit `from` meets cell orbit `to` along the G-map
// G/H_from → G/H_to, gH ↦ gaH_to, with incidence degree `deg`.
struct BoundaryRecord {
  std::string from;
  std::string to;
  Element a = 0;
  long long deg = 0;

  friend bool operator==(const BoundaryRecord&, const BoundaryRecord&) = default;
};

// Finite G-CW complex described by cell orbits and equivariant boundary
// records. Construction does not validate; see validate_complex.
class GCWComplex {
 public:
  GCWComplex() = default;
  GCWComplex(FiniteGroup group, std::vector<Cell> cells, std::vector<BoundaryRecord> boundary);

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const std::vector<BoundaryRecord>& boundary() const noexcept { return boundary_; }

  // -1 for the empty complex.
  int dimension() const;
  const Cell* find(std::string_view id) const;
  std::vector<const Cell*> cells_of_dim(int n) const;
  bool is_free() const;
  bool empty() const noexcept { return cells_.empty(); }

  friend bool operator==(const GCWComplex& a, const GCWComplex& b);

 private:
  FiniteGroup group_;
  std::vector<Cell> cells_;
  std::vector<BoundaryRecord> boundary_;
};

// A GCWComplex over the trivial group: ordinary cellular chain data.
using CWComplex = GCWComplex;

struct Violation {
  std::string code;
  std::vector<std::string> cells;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

// Checks cell ids, dimensions, stabilizers, record endpoints, subconjugacy,
// and d∘d = 0 for the Burnside-ring differential. Never throws on malformed
// input.
ValidationReport validate_complex(const GCWComplex& x);
// Throws ValidationError carrying the report summary.
void require_valid(const GCWComplex& x);

// Canonical form: cells sorted by (dim, id), each record's a replaced by the
// least element of a·H_to, records with equal (from, to, a) merged by
// summing degrees, zero-degree records dropped, records sorted.
GCWComplex normalize(const GCWComplex& x);

// G ×_α X: stabilizers and attaching elements are pushed through α.
GCWComplex induce_complex(const GroupEmbedding& alpha, const GCWComplex& x);
// Induction along the inclusion H ≤ G; x must be a complex over
// subgroup_as_group(g, h).
GCWComplex induce_complex(const FiniteGroup& g, const Subgroup& h, const GCWComplex& x);

// One cell per orbit; the degree between quotient cells is the sum of the
// record degrees between the orbits. Throws ValidationError for a non-free
// complex when require_free is set.
CWComplex orbit_space(const GCWComplex& x, bool require_free);

// Smallest subcomplex containing `ids` (closure under boundary records).
std::set<std::string> closure(const GCWComplex& x, const std::set<std::string>& ids);
// Restriction to `ids`; throws ValidationError if ids is not closed.
GCWComplex subcomplex(const GCWComplex& x, const std::set<std::string>& ids);

// Cell ids are prefixed "<k>." with k the operand position.
GCWComplex disjoint_union(const std::vector<GCWComplex>& parts);

// Builders. Orientation conventions are documented at each definition.
GCWComplex build_orbit(const FiniteGroup& g, const Subgroup& h);
GCWComplex build_trivial_sphere(const FiniteGroup& g, int n);
GCWComplex build_free_circle(int n);
GCWComplex build_reflection_circle();
GCWComplex build_subdivided_reflection_circle();

// Builder-spec strings:
//   orbit(<group>[,<subgroup>])      subgroup: {i,j,...}, e, or G (default G)
//   trivial_sphere(<group>,<n>)
//   free_circle(C<n>)                also free_circle(<n>)
//   reflection_circle(C2)
//   subdivided_reflection_circle(C2)
//   disjoint_union(<builder>,<builder>,...)
// Throws ParseError for unknown builders.
GCWComplex build_example(std::string_view spec);

}  // namespace bredonite
