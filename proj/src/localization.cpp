#include "alg/localization.hpp"

#include "alg/format.hpp"

namespace alg {

namespace {

constexpr Elem kUnset = ~Elem{0};

struct Classes {
  std::vector<Elem> pair_class;      // x * |R| + s -> class (only s ∈ S)
  std::vector<Elem> representative;  // class -> least pair index
};

/// Partitions X × S (|X| = width) by a caller-supplied equivalence test.
template <class Equivalent>
Classes partition_pairs(std::size_t width, std::size_t rn, const ElementSet& set, Equivalent&& eq) {
  Classes c;
  c.pair_class.assign(width * rn, kUnset);
  const auto svals = set.elements();
  for (Elem x = 0; x < width; ++x)
    for (Elem s : svals) {
      const std::size_t idx = std::size_t{x} * rn + s;
      Elem found = kUnset;
      for (Elem k = 0; k < c.representative.size() && found == kUnset; ++k) {
        const Elem rep = c.representative[k];
        if (eq(static_cast<Elem>(rep / rn), static_cast<Elem>(rep % rn), x, s)) found = k;
      }
      if (found == kUnset) {
        found = static_cast<Elem>(c.representative.size());
        c.representative.push_back(static_cast<Elem>(idx));
      }
      c.pair_class[idx] = found;
    }
  return c;
}

}  // namespace

Elem LocalizedRing::fraction(Elem a, Elem s) const {
  if (!set.contains(s)) throw ConstructionError("fraction denominator not in S");
  return ring->class_of(a * base->size() + s);
}

Elem LocalizedModule::fraction(Elem m, Elem s) const {
  if (!ring.set.contains(s)) throw ConstructionError("fraction denominator not in S");
  return module->class_of(m * ring.base->size() + s);
}

LocalizedRing localize_ring(const MultClosedSet& set) {
  const RingPtr& base = set.ring();
  const Ring& r = *base;
  const std::size_t rn = r.size();
  // (a,s) ~ (b,t) iff u(at − bs) = 0 for some u ∈ S.
  auto classes = partition_pairs(rn, rn, set.elements(), [&](Elem a, Elem s, Elem b, Elem t) {
    const Elem diff = r.sub(r.mul(a, t), r.mul(b, s));
    return set.elements().any_of([&](Elem u) { return r.mul(u, diff) == r.zero(); });
  });
  const auto& reps = classes.representative;
  const std::size_t size = reps.size();
  detail::RingData d;
  d.kind = RingKind::Localized;
  d.size = size;
  d.add.resize(size * size);
  d.mul.resize(size * size);
  d.neg.resize(size);
  auto cls = [&](Elem a, Elem s) { return classes.pair_class[std::size_t{a} * rn + s]; };
  for (std::size_t x = 0; x < size; ++x) {
    const Elem a = reps[x] / rn, s = reps[x] % rn;
    d.encodings.push_back(Encoding::tuple({r.encode(a), r.encode(s)}));
    d.neg[x] = cls(r.neg(a), s);
    for (std::size_t y = 0; y < size; ++y) {
      const Elem b = reps[y] / rn, t = reps[y] % rn;
      const Elem st = r.mul(s, t);
      d.add[x * size + y] = cls(r.add(r.mul(a, t), r.mul(b, s)), st);
      d.mul[x * size + y] = cls(r.mul(a, b), st);
    }
  }
  d.zero = cls(r.zero(), r.one());
  d.one = cls(r.one(), r.one());
  d.key = "localized(" + r.key() + "," + format_elements(r, set.elements()) + ")";
  d.base = base;
  d.defining_set = set.elements();
  d.class_of = classes.pair_class;
  d.representative = reps;
  d.pair_class = std::move(classes.pair_class);
  auto ring = std::make_shared<const Ring>(std::move(d));
  std::vector<Elem> fm(rn);
  for (Elem a = 0; a < rn; ++a) fm[a] = ring->class_of(a * rn + r.one());
  return LocalizedRing{ring, base, set, std::move(fm)};
}

LocalizedModule localize_module(const ModulePtr& m, const MultClosedSet& s) {
  return localize_module(m, localize_ring(s));
}

LocalizedModule localize_module(const ModulePtr& mp, const LocalizedRing& lr) {
  const Module& m = *mp;
  const Ring& r = *lr.base;
  if (!same_ring(*m.ring(), r)) throw ConstructionError("localize_module: set is over a different ring");
  const std::size_t rn = r.size();
  const ElementSet& set = lr.set.elements();
  // (m,s) ~ (m',s') iff u(s'm − sm') = 0 for some u ∈ S.
  auto classes = partition_pairs(m.size(), rn, set, [&](Elem x, Elem s, Elem y, Elem t) {
    const Elem diff = m.sub(m.act(t, x), m.act(s, y));
    return set.any_of([&](Elem u) { return m.act(u, diff) == m.zero(); });
  });
  const auto& reps = classes.representative;
  const std::size_t size = reps.size();
  const Ring& lring = *lr.ring;
  auto cls = [&](Elem x, Elem s) { return classes.pair_class[std::size_t{x} * rn + s]; };
  detail::ModuleData d;
  d.kind = ModuleKind::Localized;
  d.ring = lr.ring;
  d.size = size;
  d.add.resize(size * size);
  d.neg.resize(size);
  d.act.resize(lring.size() * size);
  for (std::size_t i = 0; i < size; ++i) {
    const Elem x = reps[i] / rn, s = reps[i] % rn;
    d.encodings.push_back(Encoding::tuple({m.encode(x), r.encode(s)}));
    d.neg[i] = cls(m.neg(x), s);
    for (std::size_t j = 0; j < size; ++j) {
      const Elem y = reps[j] / rn, t = reps[j] % rn;
      d.add[i * size + j] = cls(m.add(m.act(t, x), m.act(s, y)), r.mul(s, t));
    }
    for (Elem c = 0; c < lring.size(); ++c) {
      const Elem pair = lring.representative(c);
      const Elem a = pair / rn, t = pair % rn;
      d.act[c * size + i] = cls(m.act(a, x), r.mul(t, s));
    }
  }
  d.zero = cls(m.zero(), r.one());
  d.key = "localized(" + m.key() + "," + format_elements(r, set) + ")";
  d.base = mp;
  d.defining_set = set;
  d.class_of = classes.pair_class;
  d.representative = reps;
  d.pair_class = std::move(classes.pair_class);
  auto module = std::make_shared<const Module>(std::move(d));
  std::vector<Elem> fm(m.size());
  for (Elem x = 0; x < m.size(); ++x) fm[x] = module->class_of(x * rn + r.one());
  return LocalizedModule{module, mp, lr, std::move(fm)};
}

Submodule localize_submodule(const Submodule& p, const LocalizedModule& lm) {
  if (!same_module(*p.module(), *lm.base)) throw ConstructionError("localize_submodule: submodule of a different module");
  ElementSet out(lm.module->size());
  p.elements().for_each([&](Elem x) { lm.ring.set.elements().for_each([&](Elem s) { out.insert(lm.fraction(x, s)); }); });
  return Submodule(lm.module, std::move(out));
}

MultClosedSet saturate(const MultClosedSet& s) {
  const LocalizedRing lr = localize_ring(s);
  const Ring& r = *lr.base;
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x)
    if (is_unit(*lr.ring, lr.fraction_map[x])) out.insert(x);
  return validate_mult_closed(lr.base, out);
}

std::optional<SaturationWitness> saturation_witness(const MultClosedSet& s, Elem x) {
  const Ring& r = *s.ring();
  std::optional<SaturationWitness> w;
  s.elements().all_of([&](Elem u) {
    return s.elements().all_of([&](Elem t) {
      for (Elem a = 0; a < r.size(); ++a)
        if (r.mul(u, t) == r.mul(u, r.mul(x, a))) {
          w = SaturationWitness{u, t, a};
          return false;
        }
      return true;
    });
  });
  return w;
}

}  // namespace alg
