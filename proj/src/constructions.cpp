#include "alg/constructions.hpp"

namespace alg {

namespace {

void require_product(const Ring& r, std::size_t n) {
  if (r.kind() != RingKind::Product || r.components().size() != n)
    throw ConstructionError("expected a product ring with " + std::to_string(n) + " components");
}

void require_idealization(const Ring& r) {
  if (r.kind() != RingKind::Idealization) throw ConstructionError("expected an idealization ring");
}

/// Every tuple whose coordinate i lies in parts[i].
template <class Sized>
ElementSet tuples(const Sized& whole, const std::vector<ElementSet>& parts) {
  const std::size_t k = parts.size();
  ElementSet out(whole.size());
  for (Elem x = 0; x < whole.size(); ++x) {
    bool in = true;
    for (std::size_t i = 0; i < k && in; ++i) in = parts[i].contains(whole.coordinate(x, i));
    if (in) out.insert(x);
  }
  return out;
}

}  // namespace

Ideal product_ideal(const RingPtr& ring, const std::vector<Ideal>& ideals) {
  require_product(*ring, ideals.size());
  std::vector<ElementSet> parts;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (!same_ring(*ideals[i].ring(), *ring->components()[i]))
      throw ConstructionError("product ideal: component " + std::to_string(i) + " over the wrong ring");
    parts.push_back(ideals[i].elements());
  }
  return Ideal(ring, tuples(*ring, parts), Ideal::Trusted{});
}

MultClosedSet product_multset(const RingPtr& ring, const std::vector<MultClosedSet>& sets) {
  require_product(*ring, sets.size());
  std::vector<ElementSet> parts;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!same_ring(*sets[i].ring(), *ring->components()[i]))
      throw ConstructionError("product set: component " + std::to_string(i) + " over the wrong ring");
    parts.push_back(sets[i].elements());
  }
  return validate_mult_closed(ring, tuples(*ring, parts));
}

Submodule product_submodule(const ModulePtr& module, const std::vector<Submodule>& subs) {
  if (module->kind() != ModuleKind::Product && module->kind() != ModuleKind::DirectSum)
    throw ConstructionError("product submodule: module is not a product");
  if (module->components().size() != subs.size())
    throw ConstructionError("product submodule: expected " + std::to_string(module->components().size()) +
                            " components, got " + std::to_string(subs.size()));
  std::vector<ElementSet> parts;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!same_module(*subs[i].module(), *module->components()[i]))
      throw ConstructionError("product submodule: component " + std::to_string(i) + " of the wrong module");
    parts.push_back(subs[i].elements());
  }
  return Submodule(module, tuples(*module, parts), Submodule::Trusted{});
}

ProductInstance product_instance(const std::vector<ModulePtr>& modules, const std::vector<MultClosedSet>& sets,
                                 const std::vector<Submodule>& subs) {
  if (modules.size() != sets.size() || modules.size() != subs.size())
    throw ConstructionError("product instance: component counts differ (" + std::to_string(modules.size()) +
                            " modules, " + std::to_string(sets.size()) + " sets, " +
                            std::to_string(subs.size()) + " submodules)");
  if (modules.size() < 2) throw ConstructionError("product instance needs at least two components");
  for (std::size_t i = 0; i < modules.size(); ++i) {
    if (!same_ring(*sets[i].ring(), *modules[i]->ring()))
      throw ConstructionError("product instance: set " + std::to_string(i) + " is over the wrong ring");
    if (!same_module(*subs[i].module(), *modules[i]))
      throw ConstructionError("product instance: submodule " + std::to_string(i) + " of the wrong module");
  }
  ModulePtr module = make_product_module(modules);
  RingPtr ring = module->ring();
  MultClosedSet set = product_multset(ring, sets);
  Submodule sub = product_submodule(module, subs);
  return ProductInstance{ring, module, set, sub};
}

RingPtr idealize(const ModulePtr& m) { return make_idealization(m); }

Ideal lift_ideal(const RingPtr& ring, const Ideal& p, const Submodule& n) {
  require_idealization(*ring);
  const ModulePtr& m = ring->carrier();
  if (!same_ring(*p.ring(), *ring->base())) throw ConstructionError("lift_ideal: ideal over the wrong ring");
  if (!same_module(*n.module(), *m)) throw ConstructionError("lift_ideal: submodule of the wrong module");
  if (!ideal_times(p, m).is_subset_of(n)) throw ConstructionError("lift_ideal: pM is not contained in N");
  ElementSet out(ring->size());
  p.elements().for_each([&](Elem a) { n.elements().for_each([&](Elem x) { out.insert(ring->make_pair(a, x)); }); });
  return Ideal(ring, std::move(out));
}

MultClosedSet lift_multset(const RingPtr& ring, const MultClosedSet& s, LiftMode mode) {
  require_idealization(*ring);
  if (!same_ring(*s.ring(), *ring->base())) throw ConstructionError("lift_multset: set over the wrong ring");
  const Module& m = *ring->carrier();
  ElementSet out(ring->size());
  s.elements().for_each([&](Elem a) {
    if (mode == LiftMode::Zero)
      out.insert(ring->make_pair(a, m.zero()));
    else
      for (Elem x = 0; x < m.size(); ++x) out.insert(ring->make_pair(a, x));
  });
  return validate_mult_closed(ring, out);
}

MultClosedSet project_multset(const MultClosedSet& s, const RingPtr& q) {
  if (q->kind() != RingKind::Quotient || !same_ring(*q->base(), *s.ring()))
    throw ConstructionError("project_multset: not a quotient of the set's ring");
  ElementSet out(q->size());
  s.elements().for_each([&](Elem x) { out.insert(q->class_of(x)); });
  return validate_mult_closed(q, out);
}

}  // namespace alg
