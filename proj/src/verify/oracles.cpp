#include "bredonite/verify/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>

#include "bredonite/error.hpp"

namespace bredonite::oracle {

std::vector<int> order_census(const FiniteGroup& g) {
  std::vector<int> census(static_cast<std::size_t>(g.order()) + 1, 0);
  for (Element x = 0; x < g.order(); ++x) {
    int k = 1;
    for (Element y = x; y != 0; y = g.mul(y, x)) ++k;
    ++census[static_cast<std::size_t>(k)];
  }
  return census;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Subgroup& ambient) {
  const std::size_t n = ambient.elems.size();
  if (n > 16) throw std::invalid_argument("oracle::all_subgroups: ambient order above 16");
  std::vector<Subgroup> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Element> s;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) s.push_back(ambient.elems[k]);
    if (std::find(s.begin(), s.end(), 0) == s.end()) continue;
    bool closed = true;
    for (Element x : s) {
      for (Element y : s)
        if (std::find(s.begin(), s.end(), g.mul(x, y)) == s.end()) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(Subgroup{s});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  Subgroup all;
  for (Element x = 0; x < g.order(); ++x) all.elems.push_back(x);
  return all_subgroups(g, all);
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Element a) {
  Subgroup out;
  for (Element x : h.elems) out.elems.push_back(g.mul(g.mul(g.inv(a), x), a));
  std::sort(out.elems.begin(), out.elems.end());
  return out;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h, const Subgroup& ambient) {
  Subgroup out;
  for (Element x : ambient.elems)
    if (conjugate(g, h, x) == h) out.elems.push_back(x);
  return out;
}

bool conjugate_in(const FiniteGroup& g, const Subgroup& a, const Subgroup& b, const Subgroup& ambient) {
  if (a.elems.size() != b.elems.size()) return false;
  return std::any_of(ambient.elems.begin(), ambient.elems.end(),
                     [&](Element x) { return conjugate(g, a, x) == b; });
}

namespace {

// Groups the subgroups of ambient into conjugacy classes by pairwise tests.
std::vector<std::vector<Subgroup>> classes(const FiniteGroup& g, const Subgroup& ambient) {
  std::vector<std::vector<Subgroup>> out;
  for (const auto& s : all_subgroups(g, ambient)) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const auto& cls) { return conjugate_in(g, cls.front(), s, ambient); });
    if (it == out.end())
      out.push_back({s});
    else
      it->push_back(s);
  }
  return out;
}

// Index of the class representative of `ring` conjugate to s.
std::size_t match_class(const BurnsideRing& ring, const Subgroup& s) {
  for (std::size_t t = 0; t < ring.rank(); ++t)
    if (conjugate_in(ring.group(), s, ring.classes().rep(t), ring.ambient())) return t;
  throw std::logic_error("oracle: stabilizer matches no class");
}

// coset[y] = index of the left coset yK, for y ∈ G.
std::vector<int> left_cosets(const FiniteGroup& g, const Subgroup& k, std::vector<Element>* reps = nullptr) {
  std::vector<int> coset(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Element y = 0; y < g.order(); ++y) {
    if (coset[static_cast<std::size_t>(y)] >= 0) continue;
    for (Element x : k.elems) coset[static_cast<std::size_t>(g.mul(y, x))] = next;
    if (reps) reps->push_back(y);
    ++next;
  }
  return coset;
}

// Orbits of `acting` on points 0..n-1 via act(h, p); returns the stabilizer
// of one point per orbit.
template <typename Act>
std::vector<Subgroup> orbit_stabilizers(const Subgroup& acting, std::size_t n, Act act) {
  std::vector<bool> seen(n, false);
  std::vector<Subgroup> out;
  for (std::size_t p = 0; p < n; ++p) {
    if (seen[p]) continue;
    Subgroup stab;
    for (Element h : acting.elems) {
      const std::size_t q = act(h, p);
      seen[q] = true;
      if (q == p) stab.elems.push_back(h);
    }
    out.push_back(stab);
  }
  return out;
}

}  // namespace

std::size_t class_count(const FiniteGroup& g, const Subgroup& ambient) { return classes(g, ambient).size(); }

std::size_t odd_weyl_count(const FiniteGroup& g, const Subgroup& ambient) {
  std::size_t count = 0;
  for (const auto& cls : classes(g, ambient)) {
    const Subgroup& k = cls.front();
    if ((oracle::normalizer(g, k, ambient).elems.size() / k.elems.size()) % 2 == 1) ++count;
  }
  return count;
}

BigInt mark(const FiniteGroup& g, const Subgroup& ambient, const Subgroup& k, const Subgroup& l) {
  std::vector<Element> reps;
  const auto coset = left_cosets(g, k, &reps);
  std::size_t fixed = 0;
  for (Element x : reps) {
    if (!std::binary_search(ambient.elems.begin(), ambient.elems.end(), x)) continue;
    const bool all_fix = std::all_of(l.elems.begin(), l.elems.end(), [&](Element y) {
      return coset[static_cast<std::size_t>(g.mul(y, x))] == coset[static_cast<std::size_t>(x)];
    });
    if (all_fix) ++fixed;
  }
  return BigInt(fixed);
}

IntVector product_decomposition(const BurnsideRing& ring, std::size_t i, std::size_t j) {
  const FiniteGroup& g = ring.group();
  std::vector<Element> reps_i, reps_j;
  const auto ci = left_cosets(g, ring.classes().rep(i), &reps_i);
  const auto cj = left_cosets(g, ring.classes().rep(j), &reps_j);
  // Points: pairs of cosets of elements of H.
  std::vector<std::pair<Element, Element>> points;
  std::set<std::pair<int, int>> seen;
  for (Element x : ring.ambient().elems)
    for (Element y : ring.ambient().elems)
      if (seen.insert({ci[static_cast<std::size_t>(x)], cj[static_cast<std::size_t>(y)]}).second) points.push_back({x, y});
  auto index_of = [&](Element x, Element y) {
    for (std::size_t p = 0; p < points.size(); ++p)
      if (ci[static_cast<std::size_t>(points[p].first)] == ci[static_cast<std::size_t>(x)] &&
          cj[static_cast<std::size_t>(points[p].second)] == cj[static_cast<std::size_t>(y)])
        return p;
    throw std::logic_error("oracle: point not found");
  };
  IntVector counts(ring.rank(), 0);
  for (const auto& stab : orbit_stabilizers(ring.ambient(), points.size(), [&](Element h, std::size_t p) {
         return index_of(g.mul(h, points[p].first), g.mul(h, points[p].second));
       }))
    counts[match_class(ring, stab)] += 1;
  return counts;
}

IntVector induced_class(const BurnsideRing& from, const BurnsideRing& to, Element a, std::size_t i) {
  const FiniteGroup& g = from.group();
  const Subgroup& l = from.classes().rep(i);
  const auto coset = left_cosets(g, l);
  std::vector<Element> points;  // one representative per coset in K·a⁻¹
  std::set<int> seen;
  for (Element k : to.ambient().elems) {
    const Element y = g.mul(k, g.inv(a));
    if (seen.insert(coset[static_cast<std::size_t>(y)]).second) points.push_back(y);
  }
  auto index_of = [&](Element y) {
    for (std::size_t p = 0; p < points.size(); ++p)
      if (coset[static_cast<std::size_t>(points[p])] == coset[static_cast<std::size_t>(y)]) return p;
    throw std::logic_error("oracle: fiber not closed under K");
  };
  IntVector counts(to.rank(), 0);
  for (const auto& stab : orbit_stabilizers(to.ambient(), points.size(),
                                            [&](Element k, std::size_t p) { return index_of(g.mul(k, points[p])); }))
    counts[match_class(to, stab)] += 1;
  return counts;
}

IntVector orbit_census(const BurnsideRing& ring, const GSet& set) {
  const auto& elems = ring.ambient().elems;
  IntVector counts(ring.rank(), 0);
  for (const auto& stab : orbit_stabilizers(ring.ambient(), set.points, [&](Element h, std::size_t p) {
         const auto k = static_cast<std::size_t>(std::find(elems.begin(), elems.end(), h) - elems.begin());
         return set.action[k][p];
       }))
    counts[match_class(ring, stab)] += 1;
  return counts;
}

BigInt laplace_determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("laplace_determinant: matrix is not square");
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  BigInt det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, m = 0; k < n; ++k)
        if (k != c) minor(r - 1, m++) = a(r, k);
    const BigInt term = a(0, c) * laplace_determinant(minor);
    det += (c % 2 == 0) ? term : BigInt(-term);
  }
  return det;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

IntVector minor_invariant_factors(const IntMatrix& a) {
  IntVector factors;
  BigInt previous = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(a.rows(), k, rs);
    subsets(a.cols(), k, cs);
    BigInt d = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(r[i], c[j]);
        d = boost::integer::gcd(d, abs(laplace_determinant(m)));
      }
    if (d == 0) break;
    factors.push_back(d / previous);
    previous = d;
  }
  return factors;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

bool subconjugate(const FiniteGroup& g, const Subgroup& h, const Subgroup& k, Element a) {
  const Subgroup c = conjugate(g, h, a);
  return std::includes(k.elems.begin(), k.elems.end(), c.elems.begin(), c.elems.end());
}

}  // namespace

GCWComplex random_complex(std::mt19937_64& rng, const FiniteGroup& g, int max_orbits) {
  const auto subs = all_subgroups(g);
  const Subgroup free{{0}};
  for (;;) {
    const int budget = uniform(rng, 2, std::max(2, max_orbits));
    const int n0 = uniform(rng, 1, std::min(3, budget - 1));
    const int n1 = uniform(rng, 1, std::min(3, budget - n0));
    const int n2 = uniform(rng, 0, std::min(2, budget - n0 - n1));

    std::vector<Cell> cells;
    std::vector<BoundaryRecord> records;
    for (int k = 0; k < n0; ++k) cells.push_back({"v" + std::to_string(k), 0, pick(rng, subs)});
    for (int k = 0; k < n1; ++k) {
      const std::string id = "e" + std::to_string(k);
      Subgroup h = pick(rng, subs);
      std::vector<std::pair<int, Element>> targets;
      for (int t = 0; t < n0; ++t)
        for (Element a = 0; a < g.order(); ++a)
          if (subconjugate(g, h, cells[static_cast<std::size_t>(t)].stabilizer, a)) targets.push_back({t, a});
      if (targets.empty()) {
        h = free;
        for (int t = 0; t < n0; ++t)
          for (Element a = 0; a < g.order(); ++a) targets.push_back({t, a});
      }
      const int count = uniform(rng, 1, 2);
      for (int r = 0; r < count; ++r) {
        const auto [t, a] = pick(rng, targets);
        records.push_back({id, "v" + std::to_string(t), a, uniform(rng, 0, 1) ? 1 : -1});
      }
      cells.push_back({id, 1, h});
    }
    for (int k = 0; k < n2; ++k) {
      const std::string id = "f" + std::to_string(k);
      const std::string edge = "e" + std::to_string(uniform(rng, 0, n1 - 1));
      records.push_back({id, edge, static_cast<Element>(uniform(rng, 0, g.order() - 1)), 1});
      records.push_back({id, edge, static_cast<Element>(uniform(rng, 0, g.order() - 1)), -1});
      cells.push_back({id, 2, free});
    }
    GCWComplex x(g, std::move(cells), std::move(records));
    if (validate_complex(x).ok()) return x;
  }
}

std::pair<std::set<std::string>, std::set<std::string>> random_cover(std::mt19937_64& rng, const GCWComplex& x) {
  std::set<std::string> s1, s2;
  for (const auto& c : x.cells()) {
    const int side = uniform(rng, 0, 2);
    if (side != 1) s1.insert(c.id);
    if (side != 0) s2.insert(c.id);
  }
  return {closure(x, s1), closure(x, s2)};
}

}  // namespace bredonite::oracle
