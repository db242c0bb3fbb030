#include "bredonite/coeff.hpp"

#include "bredonite/error.hpp"

namespace bredonite {

Theory parse_theory(std::string_view name) {
  if (name == "all" || name == "All") return Theory::All;
  if (name == "euler" || name == "Euler") return Theory::Euler;
  if (name == "oriented" || name == "OrientedSingular") return Theory::OrientedSingular;
  if (name == "unoriented" || name == "UnorientedSingular") return Theory::UnorientedSingular;
  throw UsageError("unknown theory '" + std::string(name) + "' (expected all, euler, oriented or unoriented)");
}

std::string_view to_string(Theory t) {
  switch (t) {
    case Theory::All:
      return "all";
    case Theory::Euler:
      return "euler";
    case Theory::OrientedSingular:
      return "oriented";
    case Theory::UnorientedSingular:
      return "unoriented";
  }
  return "?";
}

Ring coefficient_ring(Theory t) {
  return (t == Theory::Euler || t == Theory::UnorientedSingular) ? Ring::GF2 : Ring::Z;
}

OrbitMorphism make_orbit_morphism(const FiniteGroup& g, Subgroup h, Subgroup k, Element a) {
  if (!is_subgroup(g, h.elems) || !is_subgroup(g, k.elems))
    throw ValidationError("orbit morphism: stabilizers must be subgroups");
  if (!g.contains(a)) throw ValidationError("orbit morphism: element out of range");
  if (!is_subconjugate(g, h, k, a)) throw ValidationError("orbit morphism: a⁻¹Ha is not contained in K");
  return OrbitMorphism{std::move(h), std::move(k), a};
}

OrbitMorphism identity_morphism(const Subgroup& h) { return OrbitMorphism{h, h, 0}; }

OrbitMorphism compose(const FiniteGroup& grp, const OrbitMorphism& f, const OrbitMorphism& g) {
  if (f.target != g.source) throw ValidationError("orbit morphisms are not composable");
  return make_orbit_morphism(grp, f.source, g.target, grp.mul(f.a, g.a));
}

bool same_morphism(const FiniteGroup& g, const OrbitMorphism& f, const OrbitMorphism& h) {
  return f.source == h.source && f.target == h.target && f.target.contains(g.mul(g.inv(f.a), h.a));
}

CoefficientSystem::CoefficientSystem(Theory theory, FiniteGroup g)
    : theory_(theory), group_(std::move(g)), memo_(std::make_shared<Memo>()) {}

std::shared_ptr<const BurnsideRing> CoefficientSystem::burnside(const Subgroup& h) const {
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->rings.find(h.elems); it != memo_->rings.end()) return it->second;
  }
  auto ring = std::make_shared<const BurnsideRing>(group_, h);
  std::lock_guard lock(memo_->mutex);
  return memo_->rings.emplace(h.elems, std::move(ring)).first->second;
}

CoeffGroup CoefficientSystem::value(int q, const Subgroup& h) const {
  if (q < 0) throw ValidationError("coefficient degree must be non-negative");
  if (!is_subgroup(group_, h.elems)) throw ValidationError("coefficient system evaluated on a non-subgroup");
  CoeffGroup out{ring(), 0, {}};
  switch (theory_) {
    case Theory::All:
      break;
    case Theory::Euler:
      out.rank = 1;
      out.basis_labels = {"[pt]"};
      break;
    case Theory::OrientedSingular:
      if (q == 0) {
        auto b = burnside(h);
        out.rank = b->rank();
        out.basis_labels = b->basis_labels();
      }
      break;
    case Theory::UnorientedSingular:
      if (q == 0) {
        auto b = burnside(h);
        out.rank = b->n0_basis().size();
        for (std::size_t cls : b->n0_basis()) out.basis_labels.push_back(b->class_label(cls));
      }
      break;
  }
  return out;
}

IntMatrix CoefficientSystem::map(int q, const OrbitMorphism& f) const {
  if (q < 0) throw ValidationError("coefficient degree must be non-negative");
  if (!is_subgroup(group_, f.source.elems) || !is_subgroup(group_, f.target.elems) || !group_.contains(f.a) ||
      !is_subconjugate(group_, f.source, f.target, f.a))
    throw ValidationError("coefficient map along an invalid orbit morphism");
  switch (theory_) {
    case Theory::All:
      return IntMatrix(0, 0);
    case Theory::Euler: {
      const int index = f.target.order() / f.source.order();
      return IntMatrix{{index % 2}};
    }
    case Theory::OrientedSingular:
    case Theory::UnorientedSingular:
      break;
  }
  if (q != 0) return IntMatrix(0, 0);
  auto from = burnside(f.source);
  auto to = burnside(f.target);
  IntMatrix full = burnside_induce_matrix(*from, *to, f.a);
  if (theory_ == Theory::OrientedSingular) return full;

  const auto& src = from->n0_basis();
  const auto& dst = to->n0_basis();
  IntMatrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c)
    for (std::size_t r = 0; r < dst.size(); ++r) m(r, c) = reduce(full(dst[r], src[c]), Ring::GF2);
  return m;
}

CoeffGroup system_value(Theory theory, int q, const FiniteGroup& g, const Subgroup& h) {
  return CoefficientSystem(theory, g).value(q, h);
}

IntMatrix system_map(Theory theory, int q, const FiniteGroup& g, const OrbitMorphism& f) {
  return CoefficientSystem(theory, g).map(q, f);
}

bool compose_check(Theory theory, int q, const FiniteGroup& grp, const OrbitMorphism& f, const OrbitMorphism& g) {
  CoefficientSystem sys(theory, grp);
  const OrbitMorphism gf = compose(grp, f, g);
  const Ring ring = sys.ring();
  IntMatrix direct = sys.map(q, gf).reduced(ring);
  IntMatrix mg = sys.map(q, g);
  IntMatrix mf = sys.map(q, f);
  if (mg.cols() != mf.rows()) return false;
  return direct == (mg * mf).reduced(ring);
}

}  // namespace bredonite
