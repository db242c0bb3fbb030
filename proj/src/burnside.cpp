#include "bredonite/burnside.hpp"

#include <map>

#include "bredonite/error.hpp"

namespace bredonite {

BurnsideElement operator+(const BurnsideElement& x, const BurnsideElement& y) {
  if (x.coords.size() != y.coords.size()) throw ValidationError("Burnside elements of different rings");
  BurnsideElement s = x;
  for (std::size_t i = 0; i < s.coords.size(); ++i) s.coords[i] += y.coords[i];
  return s;
}

BurnsideElement operator-(const BurnsideElement& x, const BurnsideElement& y) {
  if (x.coords.size() != y.coords.size()) throw ValidationError("Burnside elements of different rings");
  BurnsideElement s = x;
  for (std::size_t i = 0; i < s.coords.size(); ++i) s.coords[i] -= y.coords[i];
  return s;
}

BurnsideElement operator*(const BigInt& k, const BurnsideElement& x) {
  BurnsideElement s = x;
  for (auto& c : s.coords) c *= k;
  return s;
}

bool N0Element::is_zero() const {
  for (auto c : coords)
    if (c) return false;
  return true;
}

namespace {

// Number of cosets hK (h ∈ H) with L·hK = hK, i.e. h⁻¹Lh ⊆ K.
long long count_fixed_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& k, const Subgroup& l) {
  long long fixed = 0;
  for (Element x : h.elems)
    if (is_subconjugate(g, l, k, x)) ++fixed;
  // Each coset is hit |K| times.
  return fixed / k.order();
}

}  // namespace

BurnsideRing::BurnsideRing(const FiniteGroup& g) : BurnsideRing(g, whole_group(g)) {}

BurnsideRing::BurnsideRing(const FiniteGroup& g, Subgroup ambient) : group_(g), classes_(g, ambient) {
  const std::size_t m = classes_.size();
  table_.marks = IntMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table_.marks(i, j) = count_fixed_cosets(g, ambient, classes_.rep(i), classes_.rep(j));

  for (std::size_t i = 0; i < m; ++i) {
    const Subgroup& k = classes_.rep(i);
    const int weyl = normalizer(g, k, ambient).order() / k.order();
    if (weyl % 2 == 1) n0_basis_.push_back(i);
  }

  // Display labels, primed when several classes share a structural name.
  const std::string whole = describe_subgroup(g, ambient);
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < m; ++i) {
    std::string name = describe_subgroup(g, classes_.rep(i));
    if (i + 1 == m) name = whole;
    const int k = seen[name]++;
    labels_.push_back("[" + whole + "/" + name + std::string(static_cast<std::size_t>(k), '\'') + "]");
  }
}

void BurnsideRing::check(const BurnsideElement& x) const {
  if (x.coords.size() != rank()) throw ValidationError("Burnside element does not belong to this ring");
}

BurnsideElement BurnsideRing::zero() const { return BurnsideElement{IntVector(rank())}; }

BurnsideElement BurnsideRing::one() const { return basis(rank() - 1); }

BurnsideElement BurnsideRing::basis(std::size_t cls) const {
  BurnsideElement b = zero();
  b.coords.at(cls) = 1;
  return b;
}

IntVector BurnsideRing::mark_vector(const BurnsideElement& x) const {
  check(x);
  return table_.marks.transposed() * x.coords;
}

BurnsideElement BurnsideRing::from_marks(const IntVector& marks) const {
  if (marks.size() != rank()) throw ValidationError("mark vector has wrong length");
  // marksᵀ is upper-triangular: solve from the last class upwards.
  BurnsideElement x = zero();
  for (std::size_t jj = rank(); jj-- > 0;) {
    BigInt rhs = marks[jj];
    for (std::size_t i = jj + 1; i < rank(); ++i) rhs -= table_.marks(i, jj) * x.coords[i];
    const BigInt& pivot = table_.marks(jj, jj);
    if (rhs % pivot != 0)
      throw ArithmeticError("non-integral back-substitution in the table of marks at class " + std::to_string(jj));
    x.coords[jj] = rhs / pivot;
  }
  return x;
}

BurnsideElement BurnsideRing::multiply(const BurnsideElement& x, const BurnsideElement& y) const {
  IntVector mx = mark_vector(x);
  IntVector my = mark_vector(y);
  for (std::size_t j = 0; j < mx.size(); ++j) mx[j] *= my[j];
  return from_marks(mx);
}

int BurnsideRing::n0_position(std::size_t cls) const {
  for (std::size_t p = 0; p < n0_basis_.size(); ++p)
    if (n0_basis_[p] == cls) return static_cast<int>(p);
  return -1;
}

N0Element BurnsideRing::n0_project(const BurnsideElement& x) const {
  check(x);
  N0Element v{std::vector<std::uint8_t>(n0_basis_.size(), 0)};
  for (std::size_t p = 0; p < n0_basis_.size(); ++p)
    v.coords[p] = static_cast<std::uint8_t>(reduce(x.coords[n0_basis_[p]], Ring::GF2) == 1);
  return v;
}

std::string BurnsideRing::class_label(std::size_t cls) const { return labels_.at(cls); }

std::vector<std::string> BurnsideRing::basis_labels() const { return labels_; }

TableOfMarks table_of_marks(const FiniteGroup& g) { return BurnsideRing(g).table(); }

BurnsideElement burnside_mul(const BurnsideRing& ring, const BurnsideElement& x, const BurnsideElement& y) {
  return ring.multiply(x, y);
}

BurnsideElement decompose_gset(const BurnsideRing& ring, const GSet& set) {
  const FiniteGroup& g = ring.group();
  const Subgroup& h = ring.ambient();
  const std::size_t n = set.points;
  if (set.action.size() != h.elems.size()) throw ValidationError("G-set action has wrong number of elements");
  for (const auto& row : set.action) {
    if (row.size() != n) throw ValidationError("G-set action row has wrong length");
    std::vector<char> hit(n, 0);
    for (std::size_t p : row) {
      if (p >= n || hit[p]) throw ValidationError("G-set action is not a permutation");
      hit[p] = 1;
    }
  }
  std::map<Element, std::size_t> pos;
  for (std::size_t k = 0; k < h.elems.size(); ++k) pos[h.elems[k]] = k;
  for (std::size_t p = 0; p < n; ++p)
    if (set.action[0][p] != p) throw ValidationError("identity does not act trivially");
  for (std::size_t a = 0; a < h.elems.size(); ++a)
    for (std::size_t b = 0; b < h.elems.size(); ++b) {
      const auto& ab = set.action[pos.at(g.mul(h.elems[a], h.elems[b]))];
      for (std::size_t p = 0; p < n; ++p)
        if (ab[p] != set.action[a][set.action[b][p]]) throw ValidationError("G-set action violates composition");
    }

  BurnsideElement x = ring.zero();
  std::vector<char> done(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    if (done[p]) continue;
    Subgroup stab;
    for (std::size_t k = 0; k < h.elems.size(); ++k) {
      done[set.action[k][p]] = 1;
      if (set.action[k][p] == p) stab.elems.push_back(h.elems[k]);
    }
    x.coords[ring.classes().class_of(stab)] += 1;
  }
  return x;
}

IntMatrix burnside_induce_matrix(const BurnsideRing& from, const BurnsideRing& to, Element a) {
  const FiniteGroup& g = from.group();
  if (!(g == to.group())) throw ValidationError("burnside_induce: rings over different groups");
  if (!is_subconjugate(g, from.ambient(), to.ambient(), a))
    throw ValidationError("burnside_induce: a⁻¹Ha is not contained in K");
  IntMatrix m(to.rank(), from.rank());
  for (std::size_t i = 0; i < from.rank(); ++i)
    m(to.classes().class_of(conjugate_subgroup(g, from.classes().rep(i), a)), i) += 1;
  return m;
}

BurnsideElement burnside_induce(const BurnsideRing& from, const BurnsideRing& to, Element a,
                                const BurnsideElement& x) {
  if (x.coords.size() != from.rank()) throw ValidationError("Burnside element does not belong to the source ring");
  return BurnsideElement{burnside_induce_matrix(from, to, a) * x.coords};
}

std::vector<std::size_t> n0_basis(const BurnsideRing& ring) { return ring.n0_basis(); }

N0Element n0_project(const BurnsideRing& ring, const BurnsideElement& x) { return ring.n0_project(x); }

}  // namespace bredonite
