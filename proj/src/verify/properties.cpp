#include <algorithm>
#include <sstream>

#include "alg/classify.hpp"
#include "alg/constructions.hpp"
#include "alg/localization.hpp"
#include "families.hpp"

namespace alg {

namespace {

using namespace verify_detail;

CheckOutcome ok() { return {}; }
CheckOutcome skip() { return {true, true, {}}; }
CheckOutcome fail(std::string detail) { return {false, false, std::move(detail)}; }

const char* tf(bool b) { return b ? "true" : "false"; }

bool holds(const SVerdict& v) { return v.applicable && v.holds; }

bool s_primary(const Submodule& p, const MultClosedSet& s) { return holds(is_s_primary(p, s)); }

bool meets(const Ideal& i, const MultClosedSet& s) { return i.elements().intersects(s.elements()); }

/// Compares a list of named booleans that must agree.
CheckOutcome agree(std::initializer_list<std::pair<const char*, bool>> sides) {
  const bool first = sides.begin()->second;
  for (const auto& [name, value] : sides) {
    if (value == first) continue;
    std::ostringstream os;
    for (const auto& [n, v] : sides) os << n << '=' << tf(v) << ' ';
    std::string d = os.str();
    d.pop_back();
    return fail(d);
  }
  return ok();
}

/// s·K ⊆ N for a set K of module elements.
bool scaled_in(const Module& m, Elem s, const ElementSet& k, const Submodule& n) {
  return k.all_of([&](Elem x) { return n.contains(m.act(s, x)); });
}

/// s·J ⊆ target for a set J of ring elements.
bool scaled_in(const Ring& r, Elem s, const ElementSet& j, const ElementSet& target) {
  return j.all_of([&](Elem a) { return target.contains(r.mul(s, a)); });
}

bool is_quasi_local(const RingPtr& r) { return ideal_spectrum(r).maximals.size() == 1; }

// -- generators ---------------------------------------------------------------

std::vector<Instance> gen_standard(const Family& f) { return module_sub_set(f); }

std::vector<Instance> gen_multiplication(const Family& f) {
  return module_sub_set_if(f, [](const ModulePtr& m) { return is_multiplication(m).holds; });
}

std::vector<Instance> gen_nested_sets(const Family& f) {
  std::vector<Instance> out;
  for (const auto& m : all_family_modules(f)) {
    const auto sets = enumerate_mult_closed(m->ring());
    for (const auto& p : enumerate_submodules(m))
      for (const auto& s1 : sets)
        for (const auto& s2 : sets)
          if (!(s1 == s2) && s1.elements().is_subset_of(s2.elements()))
            out.push_back(Instance{{m}, {}, {p}, {}, {s1, s2}});
  }
  return out;
}

std::vector<Instance> gen_two_subs(const Family& f, bool nested) {
  std::vector<Instance> out;
  for (const auto& m : all_family_modules(f)) {
    const auto sets = enumerate_mult_closed(m->ring());
    const auto subs = enumerate_submodules(m);
    for (const auto& p : subs)
      for (const auto& l : subs) {
        if (nested && !l.is_subset_of(p)) continue;
        for (const auto& s : sets) out.push_back(Instance{{m}, {}, {p, l}, {}, {s}});
      }
  }
  return out;
}

std::vector<Instance> gen_homs(const Family& f, bool surjective_image) {
  std::vector<Instance> out;
  for (const auto& r : family_rings(f)) {
    const auto mods = family_modules(r, f);
    const auto sets = enumerate_mult_closed(r);
    for (const auto& a : mods)
      for (const auto& b : mods)
        for (const auto& h : enumerate_homs(a, b)) {
          if (surjective_image) {
            if (!h.is_surjective()) continue;
            const auto ker = hom_kernel(h);
            for (const auto& p : enumerate_submodules(a)) {
              if (!ker.is_subset_of(p)) continue;
              for (const auto& s : sets) out.push_back(Instance{{a, b}, {h}, {p}, {}, {s}});
            }
          } else {
            for (const auto& p : enumerate_submodules(b))
              for (const auto& s : sets) out.push_back(Instance{{a, b}, {h}, {p}, {}, {s}});
          }
        }
  }
  return out;
}

std::vector<Instance> gen_faithful_multiplication_ideals(const Family& f) {
  std::vector<Instance> out;
  for (const auto& m : all_family_modules(f)) {
    if (!is_faithful(m) || !is_multiplication(m).holds) continue;
    const auto sets = enumerate_mult_closed(m->ring());
    for (const auto& i : enumerate_ideals(m->ring()))
      for (const auto& s : sets) out.push_back(Instance{{m}, {}, {}, {i}, {s}});
  }
  return out;
}

std::vector<Instance> gen_jacobson(const Family& f) {
  std::vector<Instance> out;
  for (auto& inst : module_sub_set(f)) {
    const auto jac = ideal_spectrum(inst.modules[0]->ring()).jacobson;
    if (colon_r(inst.subs[0]).is_subset_of(jac)) out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> gen_quasi_local(const Family& f) {
  return module_sub_set_if(f, [](const ModulePtr& m) { return is_quasi_local(m->ring()); });
}

std::vector<Instance> gen_modules(const Family& f) {
  std::vector<Instance> out;
  for (const auto& m : all_family_modules(f)) out.push_back(Instance{{m}, {}, {}, {}, {}});
  return out;
}

std::vector<Instance> gen_prime_fields(const Family& f) {
  std::vector<Instance> out;
  for (std::int64_t p : {2, 3, 5, 7}) {
    if (static_cast<std::size_t>(p) > f.max_ring) continue;
    const auto r = make_zmod(p);
    const auto reg = make_regular(r);
    if (reg->size() <= f.max_module) out.push_back(Instance{{reg}, {}, {}, {}, {}});
    std::vector<ModulePtr> parts{reg, reg};
    for (std::size_t size = static_cast<std::size_t>(p * p); size <= f.max_module; size *= static_cast<std::size_t>(p)) {
      out.push_back(Instance{{make_direct_sum(parts)}, {}, {}, {}, {}});
      parts.push_back(reg);
    }
  }
  return out;
}

std::vector<Instance> gen_product_ideals(const Family& f) {
  std::vector<RingPtr> rings;
  for (std::size_t n = 2; n <= f.max_ring; ++n) rings.push_back(make_zmod(static_cast<std::int64_t>(n)));
  std::vector<Instance> out;
  for (const auto& r1 : rings)
    for (const auto& r2 : rings) {
      const auto i1 = enumerate_ideals(r1), i2 = enumerate_ideals(r2);
      const auto s1 = enumerate_mult_closed(r1), s2 = enumerate_mult_closed(r2);
      for (const auto& p1 : i1)
        for (const auto& p2 : i2)
          for (const auto& a : s1)
            for (const auto& b : s2) out.push_back(Instance{{make_regular(r1), make_regular(r2)}, {}, {}, {p1, p2}, {a, b}});
    }
  return out;
}

void product_rec(const std::vector<ModulePtr>& comps, std::size_t arity, Instance& cur, std::vector<Instance>& out) {
  if (cur.modules.size() == arity) {
    out.push_back(cur);
    return;
  }
  for (const auto& m : comps) {
    const auto subs = enumerate_submodules(m);
    const auto sets = enumerate_mult_closed(m->ring());
    for (const auto& p : subs)
      for (const auto& s : sets) {
        cur.modules.push_back(m);
        cur.subs.push_back(p);
        cur.sets.push_back(s);
        product_rec(comps, arity, cur, out);
        cur.modules.pop_back();
        cur.subs.pop_back();
        cur.sets.pop_back();
      }
  }
}

std::vector<Instance> gen_products(const Family& f, std::size_t arity) {
  std::vector<Instance> out;
  Instance cur;
  product_rec(component_modules(f), arity, cur, out);
  return out;
}

/// R = Zmod(n), M = Z/d with d | n.
std::vector<ModulePtr> idealization_carriers(const Family& f) {
  std::vector<ModulePtr> out;
  for (std::int64_t n = 2; n <= static_cast<std::int64_t>(f.max_ring); ++n)
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0 && static_cast<std::size_t>(d) <= f.max_module) out.push_back(make_cyclic_zmod(make_zmod(n), d));
  return out;
}

std::vector<Instance> gen_idealization_ideals(const Family& f, bool with_sets) {
  std::vector<Instance> out;
  for (const auto& m : idealization_carriers(f)) {
    const auto sets = enumerate_mult_closed(m->ring());
    for (const auto& p : enumerate_ideals(m->ring())) {
      if (!with_sets) {
        out.push_back(Instance{{m}, {}, {}, {p}, {}});
        continue;
      }
      for (const auto& s : sets) out.push_back(Instance{{m}, {}, {}, {p}, {s}});
    }
  }
  return out;
}

std::vector<Instance> gen_lifted_ideals(const Family& f) {
  std::vector<Instance> out;
  for (const auto& m : idealization_carriers(f)) {
    const auto subs = enumerate_submodules(m);
    for (const auto& i : enumerate_ideals(m->ring())) {
      const auto im = ideal_times(i, m);
      for (const auto& n : subs)
        if (im.is_subset_of(n)) out.push_back(Instance{{m}, {}, {n}, {i}, {}});
    }
  }
  return out;
}

// -- checks -------------------------------------------------------------------

CheckOutcome check_lem03(const Instance& in) {
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  const bool primary = is_primary_submodule(p);
  const bool disjoint = s_disjoint(p, s);
  const bool units = s.elements().is_subset_of(ring_units(*s.ring()));
  const bool sp = s_primary(p, s);
  if (!(primary && disjoint) && !units) return skip();
  if (primary && disjoint && !sp) return fail("primary and disjoint but not S-primary");
  if (units && sp && !primary) return fail("S of units, S-primary but not primary");
  return ok();
}

CheckOutcome check_thm1(const Instance& in) {
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  if (!s_disjoint(p, s)) return skip();
  const auto v = s_primary_variants(p, s);
  return agree({{"a", s_primary(p, s)}, {"b", holds(v.b)}, {"c", holds(v.c)}, {"d", holds(v.d)}});
}

CheckOutcome check_prop4a(const Instance& in) {
  const auto& p = in.subs[0];
  const auto& s1 = in.sets[0];
  const auto& s2 = in.sets[1];
  if (!s1.elements().is_subset_of(s2.elements()) || !s_disjoint(p, s2) || !s_primary(p, s1)) return skip();
  return s_primary(p, s2) ? ok() : fail("S1-primary, S1 ⊆ S2 disjoint from (P:M), not S2-primary");
}

CheckOutcome check_prop4b(const Instance& in) {
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  const auto star = saturate(s);
  auto out = agree({{"S", s_primary(p, s)}, {"S*", s_primary(p, star)}});
  if (out.pass && !s_disjoint(p, s)) out.vacuous = true;
  return out;
}

CheckOutcome check_prop4c(const Instance& in) {
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  if (!s_primary(p, s)) return skip();
  const auto lm = localize_module(p.module(), s);
  return is_primary_submodule(localize_submodule(p, lm)) ? ok() : fail("S-primary but S⁻¹P is not primary");
}

CheckOutcome check_prop61a(const Instance& in) {
  const auto& f = in.homs[0];
  const auto& pp = in.subs[0];
  const auto& s = in.sets[0];
  if (!s_primary(pp, s)) return skip();
  const auto q = hom_preimage(f, pp);
  if (!s_disjoint(q, s)) return skip();
  return s_primary(q, s) ? ok() : fail("preimage of an S-primary submodule is not S-primary");
}

CheckOutcome check_prop61b(const Instance& in) {
  const auto& f = in.homs[0];
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  if (!f.is_surjective() || !hom_kernel(f).is_subset_of(p) || !s_primary(p, s)) return skip();
  return s_primary(hom_image(f, p), s) ? ok() : fail("image of an S-primary submodule is not S-primary");
}

CheckOutcome check_cor7a(const Instance& in) {
  const auto& pp = in.subs[0];
  const auto& l = in.subs[1];
  const auto& s = in.sets[0];
  if (!s_primary(pp, s) || meets(colon_r(pp, l), s)) return skip();
  const auto lm = make_submodule_module(l);
  ElementSet inside(lm->size());
  for (Elem e = 0; e < lm->size(); ++e)
    if (pp.contains(lm->representative(e))) inside.insert(e);
  const Submodule cut(lm, inside);
  return s_primary(cut, s) ? ok() : fail("L ∩ P' is not S-primary in L");
}

CheckOutcome check_cor7b(const Instance& in) {
  const auto& p = in.subs[0];
  const auto& l = in.subs[1];
  const auto& s = in.sets[0];
  if (!l.is_subset_of(p)) return skip();
  const auto q = quotient_module(l);
  const auto pl = hom_image(q.projection, p);
  auto out = agree({{"P", s_primary(p, s)}, {"P/L", s_primary(pl, s)}});
  if (out.pass && !s_disjoint(p, s)) out.vacuous = true;
  return out;
}

CheckOutcome check_prop8a(const Instance& in) {
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  if (!s_primary(p, s)) return skip();
  return holds(is_s_primary_ideal(colon_r(p), s)) ? ok() : fail("S-primary but (P:M) is not an S-primary ideal");
}

CheckOutcome check_prop8b(const Instance& in) {
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  if (!is_multiplication(p.module()).holds || !holds(is_s_primary_ideal(colon_r(p), s))) return skip();
  return s_primary(p, s) ? ok() : fail("multiplication module, (P:M) S-primary ideal, P not S-primary");
}

/// The product-form criteria over a multiplication module; rad_form picks
/// sL ⊆ rad(P) over s(L:M) ⊆ √(P:M).
CheckOutcome check_product_form(const Instance& in, bool rad_form) {
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  const auto& mp = p.module();
  if (!is_multiplication(mp).holds || !s_disjoint(p, s)) return skip();
  const Module& m = *mp;
  const Ring& r = *m.ring();
  const auto subs = enumerate_submodules(mp);
  const auto rad = radical_ideal(colon_r(p)).elements();
  const auto radp = rad_form ? rad_submodule(p) : p;
  const bool criterion = s.elements().any_of([&](Elem sv) {
    for (const auto& l : subs) {
      const bool l_side = rad_form ? scaled_in(m, sv, l.elements(), radp)
                                   : scaled_in(r, sv, colon_r(l).elements(), rad);
      if (l_side) continue;
      for (const auto& n : subs)
        if (submodule_product(l, n).is_subset_of(p) && !scaled_in(m, sv, n.elements(), p)) return false;
    }
    return true;
  });
  return agree({{"S-primary", s_primary(p, s)}, {rad_form ? "rad-form" : "product-form", criterion}});
}

CheckOutcome check_lem13(const Instance& in) {
  const auto& mp = in.modules[0];
  const auto& p = in.ideals[0];
  const auto& s = in.sets[0];
  if (!is_faithful(mp) || !is_multiplication(mp).holds) return skip();
  const bool primary = holds(is_s_primary_ideal(p, s));
  const bool prime = holds(is_s_prime_ideal(p, s));
  if (!primary && !prime) return skip();
  const Module& m = *mp;
  const Ring& r = *m.ring();
  const auto pm = ideal_times(p, mp);
  const auto rad = radical_ideal(p).elements();
  auto fixed_s = [&](const ElementSet& target) {
    return s.elements().any_of([&](Elem sv) {
      for (Elem a = 0; a < r.size(); ++a) {
        if (target.contains(r.mul(sv, a))) continue;
        for (Elem x = 0; x < m.size(); ++x)
          if (pm.contains(m.act(a, x)) && !pm.contains(m.act(sv, x))) return false;
      }
      return true;
    });
  };
  if (primary && !fixed_s(rad)) return fail("S-primary ideal: no fixed s with am ∈ pM ⟹ sa ∈ √p or sm ∈ pM");
  if (prime && !fixed_s(p.elements())) return fail("S-prime ideal: no fixed s with am ∈ pM ⟹ sa ∈ p or sm ∈ pM");
  return ok();
}

CheckOutcome check_thm14(const Instance& in) {
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  const auto& mp = p.module();
  if (!is_multiplication(mp).holds || !s_disjoint(p, s)) return skip();
  const auto colon = colon_r(p);
  const auto ann = annihilator(mp);
  bool c_primary = false, c_prime = false;
  for (const auto& i : enumerate_ideals(mp->ring())) {
    if (!ann.is_subset_of(i) || !(ideal_times(i, mp) == p)) continue;
    c_primary = c_primary || holds(is_s_primary_ideal(i, s));
    c_prime = c_prime || holds(is_s_prime_ideal(i, s));
  }
  auto out = agree({{"a-primary", s_primary(p, s)}, {"b-primary", holds(is_s_primary_ideal(colon, s))}, {"c-primary", c_primary}});
  if (!out.pass) return out;
  return agree({{"a-prime", holds(is_s_prime(p, s))}, {"b-prime", holds(is_s_prime_ideal(colon, s))}, {"c-prime", c_prime}});
}

CheckOutcome check_prop15(const Instance& in) {
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  const auto& mp = p.module();
  if (!is_multiplication(mp).holds || !s_primary(p, s)) return skip();
  const Module& m = *mp;
  const auto radp = rad_submodule(p);
  const auto subs = enumerate_submodules(mp);
  for (const auto& n : subs)
    for (const auto& l : subs) {
      if (!submodule_intersection(n, l).is_subset_of(p)) continue;
      const bool found = s.elements().any_of([&](Elem sv) {
        return scaled_in(m, sv, n.elements(), p) || scaled_in(m, sv, l.elements(), radp);
      });
      if (!found) return fail("N ∩ L ⊆ P with no s: sN ⊆ P or sL ⊆ rad(P)");
    }
  return ok();
}

CheckOutcome check_lem16(const Instance& in) {
  const auto r = make_product_ring({in.ideals[0].ring(), in.ideals[1].ring()});
  const auto p = product_ideal(r, {in.ideals[0], in.ideals[1]});
  const auto s = product_multset(r, {in.sets[0], in.sets[1]});
  const bool left = holds(is_s_primary_ideal(in.ideals[0], in.sets[0])) && meets(in.ideals[1], in.sets[1]);
  const bool right = holds(is_s_primary_ideal(in.ideals[1], in.sets[1])) && meets(in.ideals[0], in.sets[0]);
  auto out = agree({{"product", holds(is_s_primary_ideal(p, s))}, {"components", left || right}});
  if (out.pass && meets(p, s)) out.vacuous = true;
  return out;
}

/// Exactly one S_i-primary component with every other colon meeting its S_j.
CheckOutcome check_products(const Instance& in) {
  const auto prod = product_instance(in.modules, in.sets, in.subs);
  const std::size_t n = in.modules.size();
  bool components = false;
  for (std::size_t i = 0; i < n && !components; ++i) {
    if (!s_primary(in.subs[i], in.sets[i])) continue;
    bool others = true;
    for (std::size_t j = 0; j < n && others; ++j)
      if (j != i) others = meets(colon_r(in.subs[j]), in.sets[j]);
    components = others;
  }
  auto out = agree({{"product", s_primary(prod.sub, prod.set)}, {"components", components}});
  if (out.pass && !s_disjoint(prod.sub, prod.set)) out.vacuous = true;
  return out;
}

CheckOutcome check_lem19(const Instance& in) {
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  const auto v = is_s_primary(p, s);
  if (!holds(v)) return skip();
  const Elem w = *v.witness;
  const auto pw = colon_m(p, w);
  const auto colon = colon_r(p);
  const auto cw = ideal_colon(colon, w);
  const bool chain = s.elements().all_of([&](Elem x) {
    return colon_m(p, x).is_subset_of(pw) && ideal_colon(colon, x).is_subset_of(cw);
  });
  return chain ? ok() : fail("witness colon (P:s) is not the largest");
}

CheckOutcome check_prop20(const Instance& in) {
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  if (!s_disjoint(p, s)) return skip();
  const auto lm = localize_module(p.module(), s);
  const bool local = is_primary_submodule(localize_submodule(p, lm));
  const bool chain = s.elements().any_of([&](Elem w) {
    const auto pw = colon_m(p, w);
    return s.elements().all_of([&](Elem x) { return colon_m(p, x).is_subset_of(pw); });
  });
  return agree({{"S-primary", s_primary(p, s)}, {"local-and-chain", local && chain}});
}

CheckOutcome check_thm21(const Instance& in) {
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  if (!s_disjoint(p, s)) return skip();
  return agree({{"S-primary", s_primary(p, s)}, {"primary-colon", holds(primary_colon_witness(p, s))}});
}

CheckOutcome check_jacobson(const Instance& in) {
  const auto& p = in.subs[0];
  const auto spec = ideal_spectrum(p.ring());
  const auto colon = colon_r(p);
  if (!colon.is_subset_of(spec.jacobson)) return skip();
  bool local = is_primary_ideal(colon);
  for (const auto& m : spec.maximals) local = local && s_primary(p, prime_complement(m));
  return agree({{"primary", is_primary_submodule(p)}, {"colon-and-local", local}});
}

CheckOutcome check_cor23(const Instance& in) {
  if (!is_quasi_local(in.subs[0].ring())) return skip();
  return check_jacobson(in);
}

CheckOutcome check_prop241(const Instance& in) {
  const auto& m = in.modules[0];
  const auto& p = in.ideals[0];
  if (!p.is_subset_of(annihilator(m))) return skip();
  const auto ring = idealize(m);
  return agree({{"p", is_primary_ideal(p)}, {"p(+)M", is_primary_ideal(lift_ideal(ring, p, Submodule::whole(m)))}});
}

CheckOutcome check_thm25(const Instance& in) {
  const auto& m = in.modules[0];
  const auto& p = in.ideals[0];
  const auto& s = in.sets[0];
  if (meets(p, s)) return skip();
  const auto ring = idealize(m);
  const auto lifted = lift_ideal(ring, p, Submodule::whole(m));
  return agree({{"p", holds(is_s_primary_ideal(p, s))},
                {"S(+)0", holds(is_s_primary_ideal(lifted, lift_multset(ring, s, LiftMode::Zero)))},
                {"S(+)M", holds(is_s_primary_ideal(lifted, lift_multset(ring, s, LiftMode::Full)))}});
}

CheckOutcome check_rem24b(const Instance& in) {
  const auto& m = in.modules[0];
  const auto& n = in.subs[0];
  const auto& i = in.ideals[0];
  const auto ring = idealize(m);
  const auto lhs = radical_ideal(lift_ideal(ring, i, n));
  const auto rhs = lift_ideal(ring, radical_ideal(i), Submodule::whole(m));
  return lhs == rhs ? ok() : fail("√(I(+)N) differs from √I(+)M");
}

CheckOutcome check_rem12b(const Instance& in) {
  const auto& m = in.modules[0];
  bool local = true;
  for (const auto& p : ideal_spectrum(m->ring()).maximals)
    local = local && (t_p(m, p) == Submodule::whole(m) || is_p_cyclic(m, p).holds);
  return agree({{"multiplication", is_multiplication(m).holds}, {"local-criterion", local}});
}

/// M/P over R/(P:M) with the induced set, or nothing when π(S) hits zero.
struct TorsionSetting {
  ModulePtr module;
  std::optional<MultClosedSet> set;
};

TorsionSetting torsion_setting(const Submodule& p, const MultClosedSet& s) {
  const auto colon = colon_r(p);
  const auto q = make_quotient_ring(colon);
  TorsionSetting out{make_over_quotient_ring(quotient_module(p).module, q), std::nullopt};
  if (!meets(colon, s)) out.set = project_multset(s, q);
  return out;
}

CheckOutcome check_torsion(const Instance& in, bool quasi) {
  const auto& p = in.subs[0];
  const auto& s = in.sets[0];
  if (meets(annihilator(p.module()), s)) return skip();
  const auto colon = colon_r(p);
  if (!quasi && !(radical_ideal(colon) == colon)) return skip();
  bool rhs = false;
  if (p.is_proper()) {
    const auto t = torsion_setting(p, s);
    if (t.set) rhs = holds(quasi ? is_quasi_s_torsion_free(t.module, *t.set) : is_s_torsion_free(t.module, *t.set));
  }
  auto out = agree({{"S-primary", s_primary(p, s)}, {quasi ? "quasi-torsion-free" : "torsion-free", rhs}});
  if (out.pass && !s_disjoint(p, s)) out.vacuous = true;
  return out;
}

CheckOutcome check_thm31(const Instance& in) {
  const auto& m = in.modules[0];
  if (!is_integral_domain(m->ring()) || m->size() < 2) return skip();
  const auto spec = ideal_spectrum(m->ring());
  auto every = [&](const std::vector<Ideal>& ps) {
    return std::all_of(ps.begin(), ps.end(), [&](const Ideal& q) { return holds(is_quasi_s_torsion_free(m, prime_complement(q))); });
  };
  const bool tfree = is_torsion_free(m);
  auto out = agree({{"torsion-free", tfree}, {"primes", every(spec.primes)}, {"maximals", every(spec.maximals)}});
  if (out.pass && !tfree) return fail("a nonzero module over a field is not torsion-free");
  return out;
}

std::vector<Property> build_registry() {
  const Family wide{"small-composite", 8, 8, true, false, 0, 0};
  const Family prod2{"product-components", 4, 4, false, false, 0, 0};
  const Family prod3{"product-components", 3, 3, false, false, 0, 0};
  const Family ideal{"idealization", 4, 4, false, false, 0, 0};
  const Family fields{"prime-fields", 7, 9, false, false, 0, 0};

  std::vector<Property> r;
  auto add = [&](std::string name, std::string statement, Family fam, auto gen, auto check) {
    r.push_back(Property{std::move(name), std::move(statement), std::move(fam), gen, check});
  };
  add("lem0.3-primary-s-primary", "primary with (P:M) ∩ S = ∅ implies S-primary; for S of units S-primary implies primary",
      wide, gen_standard, check_lem03);
  add("thm1-equivalences", "S-primary agrees with the kernel/nilpotent, rN ⊆ P and JN ⊆ P formulations", wide,
      gen_standard, check_thm1);
  add("prop4a-monotone-sets", "S1 ⊆ S2 with (P:M) ∩ S2 = ∅: S1-primary implies S2-primary", wide, gen_nested_sets,
      check_prop4a);
  add("prop4b-saturation", "S-primary iff S*-primary", wide, gen_standard, check_prop4b);
  add("prop4c-localization", "S-primary implies S⁻¹P primary in S⁻¹M", wide, gen_standard, check_prop4c);
  add("prop6.1a-preimage", "f⁻¹(P') is S-primary when P' is and (f⁻¹(P'):M) ∩ S = ∅", wide,
      [](const Family& f) { return gen_homs(f, false); }, check_prop61a);
  add("prop6.1b-image", "f epimorphic, ker f ⊆ P, P S-primary: f(P) S-primary", wide,
      [](const Family& f) { return gen_homs(f, true); }, check_prop61b);
  add("cor7a-intersection", "P' S-primary, (P':L) ∩ S = ∅: L ∩ P' S-primary in L", wide,
      [](const Family& f) { return gen_two_subs(f, false); }, check_cor7a);
  add("cor7b-quotient", "L ⊆ P: P S-primary iff P/L S-primary in M/L", wide,
      [](const Family& f) { return gen_two_subs(f, true); }, check_cor7b);
  add("prop8a-colon-ideal", "P S-primary implies (P:M) S-primary", wide, gen_standard, check_prop8a);
  add("prop8b-multiplication-lift", "M multiplication, (P:M) S-primary: P S-primary", wide, gen_multiplication,
      check_prop8b);
  add("cor10-product-form", "M multiplication: S-primary iff LN ⊆ P forces s(L:M) ⊆ √(P:M) or sN ⊆ P", wide,
      gen_multiplication, [](const Instance& i) { return check_product_form(i, false); });
  add("cor11-rad-form", "M multiplication: S-primary iff LN ⊆ P forces sL ⊆ rad(P) or sN ⊆ P", wide,
      gen_multiplication, [](const Instance& i) { return check_product_form(i, true); });
  add("lem13-faithful-multiplication", "M faithful multiplication, p S-primary (S-prime): am ∈ pM repaired by a fixed s",
      wide, gen_faithful_multiplication_ideals, check_lem13);
  add("thm14-multiplication", "M multiplication: P, (P:M) and some I ⊇ Ann(M) with P = IM are S-primary (S-prime) together",
      wide, gen_multiplication, check_thm14);
  add("prop15-intersection", "M multiplication, P S-primary, N ∩ L ⊆ P: sN ⊆ P or sL ⊆ rad(P)", wide,
      gen_multiplication, check_prop15);
  add("lem16-product-ideal", "p1 × p2 is S1 × S2-primary iff one factor is and the other meets its set", prod2,
      gen_product_ideals, check_lem16);
  add("thm17-product", "P1 × P2 is S1 × S2-primary iff one component is and the other colon meets its set", prod2,
      [](const Family& f) { return gen_products(f, 2); }, check_products);
  add("thm18-nfold-product", "three-fold product form of the componentwise criterion", prod3,
      [](const Family& f) { return gen_products(f, 3); }, check_products);
  add("lem19-colon-chain", "the S-primary witness s has (P:s') ⊆ (P:s) and ((P:M):s') ⊆ ((P:M):s)", wide, gen_standard,
      check_lem19);
  add("prop20-localization-colon", "S-primary iff S⁻¹P primary and some (P:s) contains every (P:s')", wide,
      gen_standard, check_prop20);
  add("thm21-colon-primary", "S-primary iff (P:s) is primary for some s", wide, gen_standard, check_thm21);
  add("thm22-jacobson", "(P:M) ⊆ Jac(R): P primary iff (P:M) primary and P (R∖m)-primary for all maximal m", wide,
      gen_jacobson, check_jacobson);
  add("cor23-quasi-local", "quasi-local R: P primary iff (P:M) primary and P (R∖m)-primary", wide, gen_quasi_local,
      check_cor23);
  add("prop24.1-idealization-primary", "p ⊆ Ann(M): p primary iff p(+)M primary", ideal,
      [](const Family& f) { return gen_idealization_ideals(f, false); }, check_prop241);
  add("thm25-idealization", "p ∩ S = ∅: p S-primary iff p(+)M is S(+)0-primary iff S(+)M-primary", ideal,
      [](const Family& f) { return gen_idealization_ideals(f, true); }, check_thm25);
  add("rem24b-radical", "√(I(+)N) = √I(+)M", ideal, gen_lifted_ideals, check_rem24b);
  add("rem12b-multiplication-criterion", "M multiplication iff M = T_p(M) or M p-cyclic for each maximal p", wide,
      gen_modules, check_rem12b);
  add("prop27-torsion-free", "Ann(M) ∩ S = ∅, (P:M) radical: S-primary iff M/P π(S)-torsion-free over R/(P:M)", wide,
      gen_standard, [](const Instance& i) { return check_torsion(i, false); });
  add("prop29-quasi-torsion-free", "Ann(M) ∩ S = ∅: S-primary iff M/P quasi π(S)-torsion-free over R/(P:M)", wide,
      gen_standard, [](const Instance& i) { return check_torsion(i, true); });
  add("thm31-domain-degenerate", "over a finite field: torsion-free iff quasi (R∖q)-torsion-free for all primes, or all maximals",
      fields, gen_prime_fields, check_thm31);
  return r;
}

}  // namespace

const std::vector<Property>& property_registry() {
  static const std::vector<Property> registry = build_registry();
  return registry;
}

const Property& find_property(std::string_view name) {
  for (const auto& p : property_registry())
    if (p.name == name) return p;
  throw Error("unknown property \"" + std::string(name) + "\"");
}

}  // namespace alg
