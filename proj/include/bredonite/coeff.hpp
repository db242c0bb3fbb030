#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "bredonite/burnside.hpp"
#include "bredonite/group.hpp"
#include "bredonite/linalg/matrix.hpp"

namespace bredonite {

// The four bordism theories, by the class of stratifolds allowed:
//   All                 every stratifold; the zero theory
//   Euler               Euler stratifolds; Z/2 on a point in every degree
//   OrientedSingular    A(H) on H/H, concentrated in degree 0
//   UnorientedSingular  V(H) on H/H, concentrated in degree 0
enum class Theory { All, Euler, OrientedSingular, UnorientedSingular };

inline constexpr Theory kAllTheories[] = {Theory::All, Theory::Euler, Theory::OrientedSingular,
                                          Theory::UnorientedSingular};

// Accepts all|euler|oriented|unoriented (and the enum spellings); throws
// UsageError otherwise.
Theory parse_theory(std::string_view name);
std::string_view to_string(Theory t);
// Ring the coefficient groups of `t` live over.
Ring coefficient_ring(Theory t);

// G-map G/H → G/K, gH ↦ gaK. Requires a⁻¹Ha ⊆ K.
struct OrbitMorphism {
  Subgroup source;
  Subgroup target;
  Element a = 0;
};

// Validates subconjugacy; throws ValidationError.
OrbitMorphism make_orbit_morphism(const FiniteGroup& g, Subgroup h, Subgroup k, Element a);
OrbitMorphism identity_morphism(const Subgroup& h);
// f : G/H → G/K followed by g : G/K → G/L, i.e. gH ↦ g·a_f·a_g·L.
OrbitMorphism compose(const FiniteGroup& grp, const OrbitMorphism& f, const OrbitMorphism& g);
// Equal as G-maps: same (H, K) and a' ∈ aK.
bool same_morphism(const FiniteGroup& g, const OrbitMorphism& f, const OrbitMorphism& h);

struct CoeffGroup {
  Ring ring = Ring::Z;
  std::size_t rank = 0;
  std::vector<std::string> basis_labels;
};

// A covariant coefficient system on the orbit category of G. Burnside rings
// for the subgroups it is evaluated on are memoized; copies share the memo.
class CoefficientSystem {
 public:
  CoefficientSystem(Theory theory, FiniteGroup g);

  Theory theory() const noexcept { return theory_; }
  Ring ring() const noexcept { return coefficient_ring(theory_); }
  const FiniteGroup& group() const noexcept { return group_; }

  // M_q(G/H); throws ValidationError for q < 0 or H not a subgroup.
  CoeffGroup value(int q, const Subgroup& h) const;
  // M_q(f) as a rank(K) × rank(H) matrix (columns: source basis), entries
  // reduced mod 2 for GF2 theories.
  IntMatrix map(int q, const OrbitMorphism& f) const;

  std::shared_ptr<const BurnsideRing> burnside(const Subgroup& h) const;

 private:
  struct Memo {
    std::mutex mutex;
    std::map<std::vector<Element>, std::shared_ptr<const BurnsideRing>> rings;
  };

  Theory theory_;
  FiniteGroup group_;
  std::shared_ptr<Memo> memo_;
};

CoeffGroup system_value(Theory theory, int q, const FiniteGroup& g, const Subgroup& h);
IntMatrix system_map(Theory theory, int q, const FiniteGroup& g, const OrbitMorphism& f);
// M(g∘f) = M(g)·M(f). Throws ValidationError if f and g do not compose.
bool compose_check(Theory theory, int q, const FiniteGroup& grp, const OrbitMorphism& f, const OrbitMorphism& g);

}  // namespace bredonite
