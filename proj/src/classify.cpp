#include "alg/classify.hpp"

#include <functional>

namespace alg {

namespace {

void require_same_ring(const Ring& a, const MultClosedSet& s) {
  if (!same_ring(a, *s.ring())) throw ConstructionError("multiplicative set is over a different ring");
}

/// Least s ∈ S satisfying pred, or an applicable-but-false verdict.
SVerdict least_witness(const MultClosedSet& s, const std::function<bool(Elem)>& pred) {
  SVerdict v;
  s.elements().all_of([&](Elem x) {
    if (!pred(x)) return true;
    v.holds = true;
    v.witness = x;
    return false;
  });
  return v;
}

SVerdict not_applicable() { return SVerdict{false, false, std::nullopt}; }

/// Shared scan for the S-prime / S-primary conditions against a target ideal.
bool repairs(const Submodule& p, Elem s, const ElementSet& target) {
  const Module& m = *p.module();
  const Ring& r = *m.ring();
  for (Elem a = 0; a < r.size(); ++a) {
    if (target.contains(r.mul(s, a))) continue;
    for (Elem x = 0; x < m.size(); ++x)
      if (p.contains(m.act(a, x)) && !p.contains(m.act(s, x))) return false;
  }
  return true;
}

bool scaled_within(const Module& m, Elem s, const ElementSet& n, const Submodule& p) {
  return n.all_of([&](Elem x) { return p.contains(m.act(s, x)); });
}

}  // namespace

bool s_disjoint(const Submodule& p, const MultClosedSet& s) {
  require_same_ring(*p.ring(), s);
  return !colon_r(p).elements().intersects(s.elements());
}

bool is_primary_submodule(const Submodule& p) {
  if (!p.is_proper()) return false;
  const Module& m = *p.module();
  const Ring& r = *m.ring();
  const Ideal rad = radical_ideal(colon_r(p));
  for (Elem a = 0; a < r.size(); ++a) {
    if (rad.contains(a)) continue;
    for (Elem x = 0; x < m.size(); ++x)
      if (!p.contains(x) && p.contains(m.act(a, x))) return false;
  }
  return true;
}

SVerdict is_s_prime(const Submodule& p, const MultClosedSet& s) {
  if (!s_disjoint(p, s)) return not_applicable();
  const ElementSet c = colon_r(p).elements();
  return least_witness(s, [&](Elem x) { return repairs(p, x, c); });
}

SVerdict is_s_primary(const Submodule& p, const MultClosedSet& s) {
  if (!s_disjoint(p, s)) return not_applicable();
  const ElementSet rad = radical_ideal(colon_r(p)).elements();
  return least_witness(s, [&](Elem x) { return repairs(p, x, rad); });
}

VariantVerdicts s_primary_variants(const Submodule& p, const MultClosedSet& s) {
  if (!s_disjoint(p, s)) return VariantVerdicts{false, not_applicable(), not_applicable(), not_applicable()};
  const ModulePtr& mp = p.module();
  const Module& m = *mp;
  const Ring& r = *m.ring();
  const ElementSet rad = radical_ideal(colon_r(p)).elements();
  const auto subs = enumerate_submodules(mp);
  const auto ideals = enumerate_ideals(m.ring());
  VariantVerdicts out;

  out.b = least_witness(s, [&](Elem sv) {
    for (Elem a = 0; a < r.size(); ++a) {
      // Injective on s(M/P): a·x ∈ P ⟹ x ∈ P for every x ∈ sM + P.
      bool injective = true;
      for (Elem x = 0; x < m.size() && injective; ++x) {
        const Elem sx = m.act(sv, x);
        injective = !(p.contains(m.act(a, sx)) && !p.contains(sx));
      }
      if (injective) continue;
      const Elem u = r.mul(a, sv);
      bool nilpotent = false;
      Elem power = u;
      for (std::size_t t = 1; t <= m.size() && !nilpotent; ++t) {
        bool kills = true;
        for (Elem x = 0; x < m.size() && kills; ++x) kills = p.contains(m.act(power, x));
        nilpotent = kills;
        power = r.mul(power, u);
      }
      if (!nilpotent) return false;
    }
    return true;
  });

  out.c = least_witness(s, [&](Elem sv) {
    for (const auto& n : subs) {
      if (scaled_within(m, sv, n.elements(), p)) continue;
      for (Elem a = 0; a < r.size(); ++a)
        if (scaled_within(m, a, n.elements(), p) && !rad.contains(r.mul(sv, a))) return false;
    }
    return true;
  });

  out.d = least_witness(s, [&](Elem sv) {
    for (const auto& n : subs) {
      if (scaled_within(m, sv, n.elements(), p)) continue;
      for (const auto& j : ideals) {
        const bool jn_in_p = j.elements().all_of([&](Elem a) { return scaled_within(m, a, n.elements(), p); });
        if (!jn_in_p) continue;
        const bool sj_in_rad = j.elements().all_of([&](Elem a) { return rad.contains(r.mul(sv, a)); });
        if (!sj_in_rad) return false;
      }
    }
    return true;
  });
  return out;
}

SVerdict primary_colon_witness(const Submodule& p, const MultClosedSet& s) {
  if (!s_disjoint(p, s)) return not_applicable();
  return least_witness(s, [&](Elem x) { return is_primary_submodule(colon_m(p, x)); });
}

SVerdict is_s_primary_ideal(const Ideal& i, const MultClosedSet& s) {
  return is_s_primary(as_submodule(i, make_regular(i.ring())), s);
}

SVerdict is_s_prime_ideal(const Ideal& i, const MultClosedSet& s) {
  return is_s_prime(as_submodule(i, make_regular(i.ring())), s);
}

SVerdict is_s_torsion_free(const ModulePtr& m, const MultClosedSet& s) {
  require_same_ring(*m->ring(), s);
  if (annihilator(m).elements().intersects(s.elements())) return not_applicable();
  const Ring& r = *m->ring();
  return least_witness(s, [&](Elem sv) {
    for (Elem a = 0; a < r.size(); ++a) {
      if (r.mul(sv, a) == r.zero()) continue;
      for (Elem x = 0; x < m->size(); ++x)
        if (m->act(a, x) == m->zero() && m->act(sv, x) != m->zero()) return false;
    }
    return true;
  });
}

SVerdict is_quasi_s_torsion_free(const ModulePtr& m, const MultClosedSet& s) {
  require_same_ring(*m->ring(), s);
  if (annihilator(m).elements().intersects(s.elements())) return not_applicable();
  const Ring& r = *m->ring();
  const ElementSet zero(r.size(), {r.zero()});
  return least_witness(s, [&](Elem sv) {
    for (Elem a = 0; a < r.size(); ++a) {
      if (power_lands_in(r, r.mul(sv, a), zero)) continue;
      for (Elem x = 0; x < m->size(); ++x)
        if (m->act(a, x) == m->zero() && m->act(sv, x) != m->zero()) return false;
    }
    return true;
  });
}

bool is_torsion_free(const ModulePtr& m) {
  const Ring& r = *m->ring();
  for (Elem a = 0; a < r.size(); ++a) {
    if (a == r.zero()) continue;
    for (Elem x = 0; x < m->size(); ++x)
      if (x != m->zero() && m->act(a, x) == m->zero()) return false;
  }
  return true;
}

ClassificationReport classify(const Submodule& p, const MultClosedSet& s) {
  ClassificationReport rep;
  rep.is_prime = is_prime_submodule(p);
  rep.is_primary = is_primary_submodule(p);
  rep.applicable = s_disjoint(p, s);
  if (!rep.applicable) {
    rep.reason = "(P:M) meets S";
    rep.s_prime = rep.s_primary = not_applicable();
    rep.variants = VariantVerdicts{false, not_applicable(), not_applicable(), not_applicable()};
    return rep;
  }
  rep.s_prime = is_s_prime(p, s);
  rep.s_primary = is_s_primary(p, s);
  try {
    rep.variants = s_primary_variants(p, s);
  } catch (const CapExceeded&) {
    rep.variants.reset();
  }
  return rep;
}

}  // namespace alg
