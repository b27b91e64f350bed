#include "alg/module.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "alg/format.hpp"
#include "alg/limits.hpp"

namespace alg {

namespace {

constexpr std::size_t kMaxTableSize = 4096;
constexpr Elem kUnset = ~Elem{0};

void check_table_size(std::size_t n) {
  if (n > kMaxTableSize)
    throw ConstructionError("module of cardinality " + std::to_string(n) +
                            " is too large to tabulate (limit " +
                            std::to_string(kMaxTableSize) + ")");
}

std::vector<std::size_t> radices(const std::vector<ModulePtr>& cs) {
  std::vector<std::size_t> out;
  for (const auto& c : cs) out.push_back(c->size());
  return out;
}

std::vector<Elem> split(std::size_t x, const std::vector<std::size_t>& radix) {
  std::vector<Elem> out(radix.size());
  for (std::size_t i = radix.size(); i-- > 0;) {
    out[i] = static_cast<Elem>(x % radix[i]);
    x /= radix[i];
  }
  return out;
}

Elem join(const std::vector<Elem>& c, const std::vector<std::size_t>& radix) {
  std::size_t x = 0;
  for (std::size_t i = 0; i < radix.size(); ++i) x = x * radix[i] + c[i];
  return static_cast<Elem>(x);
}

/// Fills add/neg/encodings for a tuple module from its components.
void tabulate_tuples(detail::ModuleData& d) {
  const auto radix = radices(d.components);
  const std::size_t k = radix.size(), n = d.size;
  d.add.resize(n * n);
  d.neg.resize(n);
  std::vector<std::vector<Elem>> all(n);
  for (std::size_t x = 0; x < n; ++x) all[x] = split(x, radix);
  std::vector<Elem> tmp(k);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Encoding> items;
    for (std::size_t i = 0; i < k; ++i) {
      items.push_back(d.components[i]->encode(all[x][i]));
      tmp[i] = d.components[i]->neg(all[x][i]);
    }
    d.encodings.push_back(Encoding::tuple(std::move(items)));
    d.neg[x] = join(tmp, radix);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < k; ++i) tmp[i] = d.components[i]->add(all[x][i], all[y][i]);
      d.add[x * n + y] = join(tmp, radix);
    }
  }
  for (std::size_t i = 0; i < k; ++i) tmp[i] = d.components[i]->zero();
  d.zero = join(tmp, radix);
}

std::string join_keys(const std::vector<ModulePtr>& cs) {
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) out += (i ? "," : "") + cs[i]->key();
  return out;
}

bool is_maximal_ideal(const Ideal& p) {
  if (!p.is_proper()) return false;
  const Ring& r = *p.ring();
  for (Elem a = 0; a < r.size(); ++a) {
    if (p.contains(a)) continue;
    bool invertible = false;
    for (Elem b = 0; b < r.size() && !invertible; ++b)
      invertible = p.contains(r.sub(r.mul(a, b), r.one()));
    if (!invertible) return false;
  }
  return true;
}

void require_maximal(const Ideal& p) {
  if (!is_maximal_ideal(p)) throw ConstructionError("ideal " + format_elements(*p.ring(), p.elements()) +
                                                    " is not maximal");
}

void require_same_module(const Submodule& a, const Submodule& b, const char* op) {
  if (!same_module(*a.module(), *b.module()))
    throw ConstructionError(std::string(op) + ": submodules of different modules");
}

}  // namespace

Module::Module(detail::ModuleData data) : d_(std::move(data)) {
  if (!d_.ring) throw ConstructionError("module without a ring");
  if (d_.size == 0) throw ConstructionError("module must have at least one element");
  if (d_.size <= limits().audit_bound && d_.ring->size() <= limits().enumeration_cap)
    audit_module(*this);
}

std::optional<Elem> Module::decode(const Encoding& enc) const {
  switch (d_.kind) {
    case ModuleKind::Regular:
      return d_.ring->decode(enc);
    case ModuleKind::CyclicZmod:
      if (enc.is_tuple || enc.value < 0 || enc.value >= d_.order) return std::nullopt;
      return static_cast<Elem>(enc.value);
    case ModuleKind::Product:
    case ModuleKind::DirectSum: {
      if (!enc.is_tuple || enc.items.size() != d_.components.size()) return std::nullopt;
      std::vector<Elem> coords;
      for (std::size_t i = 0; i < enc.items.size(); ++i) {
        auto c = d_.components[i]->decode(enc.items[i]);
        if (!c) return std::nullopt;
        coords.push_back(*c);
      }
      return from_coordinates(coords);
    }
    case ModuleKind::Quotient:
    case ModuleKind::Submodule: {
      auto b = d_.base->decode(enc);
      if (!b || d_.class_of[*b] == kUnset) return std::nullopt;
      return d_.class_of[*b];
    }
    case ModuleKind::Localized: {
      if (!enc.is_tuple || enc.items.size() != 2) return std::nullopt;
      const RingPtr& base_ring = d_.base->ring();
      auto m = d_.base->decode(enc.items[0]);
      auto s = base_ring->decode(enc.items[1]);
      if (!m || !s || !d_.defining_set.contains(*s)) return std::nullopt;
      return d_.pair_class[*m * base_ring->size() + *s];
    }
    case ModuleKind::OverQuotientRing:
      return d_.base->decode(enc);
  }
  return std::nullopt;
}

Elem Module::coordinate(Elem x, std::size_t i) const {
  std::size_t stride = 1;
  for (std::size_t j = d_.components.size(); j-- > i + 1;) stride *= d_.components[j]->size();
  return static_cast<Elem>((x / stride) % d_.components[i]->size());
}

Elem Module::from_coordinates(std::span<const Elem> coords) const {
  std::size_t x = 0;
  for (std::size_t i = 0; i < d_.components.size(); ++i) x = x * d_.components[i]->size() + coords[i];
  return static_cast<Elem>(x);
}

const std::vector<ElementSet>& Module::submodule_sets() const {
  std::call_once(lattice_once_, [this] {
    if (d_.size > limits().enumeration_cap)
      throw CapExceeded("submodule enumeration", d_.size, limits().enumeration_cap);
    const std::size_t rn = d_.ring->size();
    auto sum = [this](const ElementSet& a, const ElementSet& b) {
      ElementSet s(d_.size);
      a.for_each([&](Elem x) { b.for_each([&](Elem y) { s.insert(add(x, y)); }); });
      return s;
    };
    std::set<ElementSet, CanonicalLess> seen;
    std::deque<ElementSet> work;
    for (Elem m = 0; m < d_.size; ++m) {
      ElementSet c(d_.size);
      for (Elem r = 0; r < rn; ++r) c.insert(act(r, m));
      if (seen.insert(c).second) work.push_back(c);
    }
    while (!work.empty()) {
      auto cur = work.front();
      work.pop_front();
      std::vector<ElementSet> snapshot(seen.begin(), seen.end());
      for (const auto& other : snapshot) {
        auto s = sum(cur, other);
        if (seen.insert(s).second) work.push_back(s);
      }
    }
    lattice_.assign(seen.begin(), seen.end());
  });
  return lattice_;
}

bool same_module(const Module& a, const Module& b) { return &a == &b || a.key() == b.key(); }

void audit_module(const Module& m) {
  const Ring& r = *m.ring();
  const Elem n = static_cast<Elem>(m.size()), rn = static_cast<Elem>(r.size());
  auto fail = [&](const std::string& law, const std::string& at) {
    throw ConstructionError("module axiom violated (" + law + ") at " + at);
  };
  auto e = [&](Elem x) { return m.encode(x).to_string(); };
  auto re = [&](Elem x) { return r.encode(x).to_string(); };
  for (Elem x = 0; x < n; ++x) {
    if (m.add(x, m.zero()) != x) fail("additive identity", e(x));
    if (m.add(x, m.neg(x)) != m.zero()) fail("additive inverse", e(x));
    if (m.act(r.one(), x) != x) fail("1 m = m", e(x));
    for (Elem y = 0; y < n; ++y) {
      if (m.add(x, y) != m.add(y, x)) fail("additive commutativity", e(x) + ", " + e(y));
      for (Elem z = 0; z < n; ++z)
        if (m.add(m.add(x, y), z) != m.add(x, m.add(y, z)))
          fail("additive associativity", e(x) + ", " + e(y) + ", " + e(z));
      for (Elem a = 0; a < rn; ++a)
        if (m.act(a, m.add(x, y)) != m.add(m.act(a, x), m.act(a, y)))
          fail("r(m + n) = rm + rn", re(a) + ", " + e(x) + ", " + e(y));
    }
    for (Elem a = 0; a < rn; ++a)
      for (Elem b = 0; b < rn; ++b) {
        if (m.act(r.add(a, b), x) != m.add(m.act(a, x), m.act(b, x)))
          fail("(r + s)m = rm + sm", re(a) + ", " + re(b) + ", " + e(x));
        if (m.act(r.mul(a, b), x) != m.act(a, m.act(b, x)))
          fail("(rs)m = r(sm)", re(a) + ", " + re(b) + ", " + e(x));
      }
  }
}

Submodule::Submodule(ModulePtr module, ElementSet elems)
    : module_(std::move(module)), elems_(std::move(elems)) {
  const Module& m = *module_;
  const Ring& r = *m.ring();
  if (elems_.universe() != m.size()) throw ConstructionError("submodule: element set has wrong universe");
  if (!elems_.contains(m.zero())) throw ConstructionError("submodule must contain 0");
  elems_.for_each([&](Elem x) {
    elems_.for_each([&](Elem y) {
      if (!elems_.contains(m.add(x, y)))
        throw ConstructionError("submodule not closed under addition: " + m.encode(x).to_string() +
                                " + " + m.encode(y).to_string());
    });
    for (Elem a = 0; a < r.size(); ++a)
      if (!elems_.contains(m.act(a, x)))
        throw ConstructionError("submodule not closed under the action: " + r.encode(a).to_string() +
                                " * " + m.encode(x).to_string());
  });
}

Submodule Submodule::zero(const ModulePtr& m) {
  return Submodule(m, ElementSet(m->size(), {m->zero()}), Trusted{});
}

Submodule Submodule::whole(const ModulePtr& m) { return Submodule(m, m->all(), Trusted{}); }

ModuleHom::ModuleHom(ModulePtr domain, ModulePtr codomain, std::vector<Elem> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  const Module& a = *domain_;
  const Module& b = *codomain_;
  if (!same_ring(*a.ring(), *b.ring())) throw ConstructionError("homomorphism between modules over different rings");
  if (images_.size() != a.size()) throw ConstructionError("homomorphism table has the wrong length");
  for (Elem y : images_)
    if (y >= b.size()) throw ConstructionError("homomorphism image out of range");
  const Ring& r = *a.ring();
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y)
      if (images_[a.add(x, y)] != b.add(images_[x], images_[y]))
        throw ConstructionError("map is not additive at " + a.encode(x).to_string() + ", " +
                                a.encode(y).to_string());
    for (Elem s = 0; s < r.size(); ++s)
      if (images_[a.act(s, x)] != b.act(s, images_[x]))
        throw ConstructionError("map is not linear at " + r.encode(s).to_string() + " * " +
                                a.encode(x).to_string());
  }
}

ModuleHom ModuleHom::identity(const ModulePtr& m) {
  std::vector<Elem> id(m->size());
  for (Elem x = 0; x < m->size(); ++x) id[x] = x;
  return ModuleHom(m, m, std::move(id));
}

bool ModuleHom::is_surjective() const {
  ElementSet hit(codomain_->size());
  for (Elem y : images_) hit.insert(y);
  return hit.count() == codomain_->size();
}

bool ModuleHom::is_injective() const {
  ElementSet hit(codomain_->size());
  for (Elem y : images_) {
    if (hit.contains(y)) return false;
    hit.insert(y);
  }
  return true;
}

ModulePtr make_regular(const RingPtr& r) {
  detail::ModuleData d;
  d.kind = ModuleKind::Regular;
  d.ring = r;
  d.size = r->size();
  const std::size_t n = d.size;
  d.add.resize(n * n);
  d.act.resize(n * n);
  d.neg.resize(n);
  for (Elem a = 0; a < n; ++a) {
    d.encodings.push_back(r->encode(a));
    d.neg[a] = r->neg(a);
    for (Elem b = 0; b < n; ++b) {
      d.add[a * n + b] = r->add(a, b);
      d.act[a * n + b] = r->mul(a, b);
    }
  }
  d.zero = r->zero();
  d.key = "regular(" + r->key() + ")";
  return std::make_shared<const Module>(std::move(d));
}

ModulePtr make_cyclic_zmod(const RingPtr& zmod, std::int64_t dv) {
  if (zmod->kind() != RingKind::Zmod) throw ConstructionError("cyclic module requires a zmod ring");
  const std::int64_t n = zmod->modulus();
  if (dv < 1 || n % dv != 0)
    throw ConstructionError("cyclic module Z/" + std::to_string(dv) + " requires " + std::to_string(dv) +
                            " | " + std::to_string(n));
  detail::ModuleData d;
  d.kind = ModuleKind::CyclicZmod;
  d.ring = zmod;
  d.size = static_cast<std::size_t>(dv);
  d.order = dv;
  d.add.resize(d.size * d.size);
  d.neg.resize(d.size);
  d.act.resize(static_cast<std::size_t>(n) * d.size);
  for (std::int64_t a = 0; a < dv; ++a) {
    d.encodings.push_back(Encoding::integer(a));
    d.neg[a] = static_cast<Elem>((dv - a) % dv);
    for (std::int64_t b = 0; b < dv; ++b) d.add[a * dv + b] = static_cast<Elem>((a + b) % dv);
  }
  for (std::int64_t r = 0; r < n; ++r)
    for (std::int64_t m = 0; m < dv; ++m) d.act[r * dv + m] = static_cast<Elem>((r * m) % dv);
  d.zero = 0;
  d.key = "cyclic(" + zmod->key() + "," + std::to_string(dv) + ")";
  return std::make_shared<const Module>(std::move(d));
}

ModulePtr make_product_module(std::vector<ModulePtr> components, RingPtr product_ring) {
  if (components.empty()) throw ConstructionError("product module needs at least one component");
  if (!product_ring) {
    std::vector<RingPtr> rings;
    for (const auto& c : components) rings.push_back(c->ring());
    product_ring = make_product_ring(std::move(rings));
  }
  if (product_ring->kind() != RingKind::Product || product_ring->components().size() != components.size())
    throw ConstructionError("product module: ring is not a product with " +
                            std::to_string(components.size()) + " components");
  for (std::size_t i = 0; i < components.size(); ++i)
    if (!same_ring(*product_ring->components()[i], *components[i]->ring()))
      throw ConstructionError("product module: component " + std::to_string(i) +
                              " is not over the matching ring component");
  detail::ModuleData d;
  d.kind = ModuleKind::Product;
  d.ring = product_ring;
  d.size = 1;
  for (const auto& c : components) {
    d.size *= c->size();
    check_table_size(d.size);
  }
  d.components = std::move(components);
  tabulate_tuples(d);
  const auto radix = radices(d.components);
  const std::size_t k = radix.size();
  std::vector<Elem> tmp(k);
  d.act.resize(product_ring->size() * d.size);
  for (Elem r = 0; r < product_ring->size(); ++r)
    for (Elem m = 0; m < d.size; ++m) {
      const auto mc = split(m, radix);
      for (std::size_t i = 0; i < k; ++i)
        tmp[i] = d.components[i]->act(product_ring->coordinate(r, i), mc[i]);
      d.act[r * d.size + m] = join(tmp, radix);
    }
  d.key = "product(" + join_keys(d.components) + ")";
  return std::make_shared<const Module>(std::move(d));
}

ModulePtr make_direct_sum(std::vector<ModulePtr> components) {
  if (components.empty()) throw ConstructionError("direct sum needs at least one summand");
  const RingPtr ring = components.front()->ring();
  for (const auto& c : components)
    if (!same_ring(*c->ring(), *ring)) throw ConstructionError("direct sum: summands over different rings");
  detail::ModuleData d;
  d.kind = ModuleKind::DirectSum;
  d.ring = ring;
  d.size = 1;
  for (const auto& c : components) {
    d.size *= c->size();
    check_table_size(d.size);
  }
  d.components = std::move(components);
  tabulate_tuples(d);
  const auto radix = radices(d.components);
  const std::size_t k = radix.size();
  std::vector<Elem> tmp(k);
  d.act.resize(ring->size() * d.size);
  for (Elem r = 0; r < ring->size(); ++r)
    for (Elem m = 0; m < d.size; ++m) {
      const auto mc = split(m, radix);
      for (std::size_t i = 0; i < k; ++i) tmp[i] = d.components[i]->act(r, mc[i]);
      d.act[r * d.size + m] = join(tmp, radix);
    }
  d.key = "direct_sum(" + join_keys(d.components) + ")";
  return std::make_shared<const Module>(std::move(d));
}

ModulePtr make_submodule_module(const Submodule& l) {
  const Module& amb = *l.module();
  const Ring& r = *amb.ring();
  const auto elems = l.elements().elements();
  const std::size_t n = elems.size();
  detail::ModuleData d;
  d.kind = ModuleKind::Submodule;
  d.ring = amb.ring();
  d.size = n;
  d.class_of.assign(amb.size(), kUnset);
  for (std::size_t i = 0; i < n; ++i) d.class_of[elems[i]] = static_cast<Elem>(i);
  d.representative = elems;
  d.add.resize(n * n);
  d.neg.resize(n);
  d.act.resize(r.size() * n);
  for (std::size_t i = 0; i < n; ++i) {
    d.encodings.push_back(amb.encode(elems[i]));
    d.neg[i] = d.class_of[amb.neg(elems[i])];
    for (std::size_t j = 0; j < n; ++j) d.add[i * n + j] = d.class_of[amb.add(elems[i], elems[j])];
    for (Elem a = 0; a < r.size(); ++a) d.act[a * n + i] = d.class_of[amb.act(a, elems[i])];
  }
  d.zero = d.class_of[amb.zero()];
  d.base = l.module();
  d.defining_set = l.elements();
  d.key = "submodule(" + amb.key() + "," + format_elements(amb, l.elements()) + ")";
  return std::make_shared<const Module>(std::move(d));
}

ModulePtr make_over_quotient_ring(const ModulePtr& m, const RingPtr& q) {
  if (q->kind() != RingKind::Quotient || !same_ring(*q->base(), *m->ring()))
    throw ConstructionError("over_quotient: ring is not a quotient of the module's ring");
  const Ideal ann = annihilator(m);
  if (!q->defining_set().is_subset_of(ann.elements()))
    throw ConstructionError("over_quotient: the ideal does not annihilate the module");
  detail::ModuleData d;
  d.kind = ModuleKind::OverQuotientRing;
  d.ring = q;
  d.size = m->size();
  const std::size_t n = d.size;
  d.add.resize(n * n);
  d.neg.resize(n);
  d.act.resize(q->size() * n);
  for (Elem x = 0; x < n; ++x) {
    d.encodings.push_back(m->encode(x));
    d.neg[x] = m->neg(x);
    for (Elem y = 0; y < n; ++y) d.add[x * n + y] = m->add(x, y);
    for (Elem c = 0; c < q->size(); ++c) d.act[c * n + x] = m->act(q->representative(c), x);
  }
  d.zero = m->zero();
  d.base = m;
  d.key = "over_quotient(" + m->key() + "," + q->key() + ")";
  return std::make_shared<const Module>(std::move(d));
}

QuotientModule quotient_module(const Submodule& n) {
  const ModulePtr& base = n.module();
  const Module& m = *base;
  const Ring& r = *m.ring();
  std::vector<Elem> class_of(m.size(), kUnset);
  std::vector<Elem> reps;
  for (Elem a = 0; a < m.size(); ++a) {
    if (class_of[a] != kUnset) continue;
    const Elem c = static_cast<Elem>(reps.size());
    reps.push_back(a);
    n.elements().for_each([&](Elem x) { class_of[m.add(a, x)] = c; });
  }
  const std::size_t size = reps.size();
  detail::ModuleData d;
  d.kind = ModuleKind::Quotient;
  d.ring = m.ring();
  d.size = size;
  d.add.resize(size * size);
  d.neg.resize(size);
  d.act.resize(r.size() * size);
  for (std::size_t x = 0; x < size; ++x) {
    d.encodings.push_back(m.encode(reps[x]));
    d.neg[x] = class_of[m.neg(reps[x])];
    for (std::size_t y = 0; y < size; ++y) d.add[x * size + y] = class_of[m.add(reps[x], reps[y])];
    for (Elem a = 0; a < r.size(); ++a) d.act[a * size + x] = class_of[m.act(a, reps[x])];
  }
  d.zero = class_of[m.zero()];
  d.key = "quotient(" + m.key() + "," + format_elements(m, n.elements()) + ")";
  d.base = base;
  d.defining_set = n.elements();
  d.class_of = class_of;
  d.representative = std::move(reps);
  auto q = std::make_shared<const Module>(std::move(d));
  return QuotientModule{q, ModuleHom(base, q, std::move(class_of))};
}

ModuleHom inclusion_hom(const ModulePtr& sub) {
  if (sub->kind() != ModuleKind::Submodule) throw ConstructionError("inclusion of a module that is not a submodule");
  std::vector<Elem> images(sub->size());
  for (Elem x = 0; x < sub->size(); ++x) images[x] = sub->representative(x);
  return ModuleHom(sub, sub->base(), std::move(images));
}

std::vector<Submodule> enumerate_submodules(const ModulePtr& m) {
  std::vector<Submodule> out;
  for (const auto& s : m->submodule_sets()) out.emplace_back(m, s, Submodule::Trusted{});
  return out;
}

Submodule cyclic_submodule(const ModulePtr& m, Elem x) {
  ElementSet s(m->size());
  for (Elem r = 0; r < m->ring()->size(); ++r) s.insert(m->act(r, x));
  return Submodule(m, std::move(s), Submodule::Trusted{});
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  require_same_module(a, b, "sum");
  const Module& m = *a.module();
  ElementSet s(m.size());
  a.elements().for_each([&](Elem x) { b.elements().for_each([&](Elem y) { s.insert(m.add(x, y)); }); });
  return Submodule(a.module(), std::move(s), Submodule::Trusted{});
}

Submodule generated_submodule(const ModulePtr& m, const ElementSet& gens) {
  Submodule acc = Submodule::zero(m);
  gens.for_each([&](Elem g) {
    if (!acc.contains(g)) acc = submodule_sum(acc, cyclic_submodule(m, g));
  });
  return acc;
}

Submodule submodule_intersection(const Submodule& a, const Submodule& b) {
  require_same_module(a, b, "intersection");
  return Submodule(a.module(), a.elements() & b.elements(), Submodule::Trusted{});
}

Submodule ideal_times(const Ideal& i, const Submodule& n) {
  const Module& m = *n.module();
  if (!same_ring(*i.ring(), *m.ring())) throw ConstructionError("ideal_times: ideal over a different ring");
  ElementSet gens(m.size());
  i.elements().for_each([&](Elem a) { n.elements().for_each([&](Elem x) { gens.insert(m.act(a, x)); }); });
  return generated_submodule(n.module(), gens);
}

Submodule ideal_times(const Ideal& i, const ModulePtr& m) { return ideal_times(i, Submodule::whole(m)); }

Submodule scalar_times(Elem s, const Submodule& n) {
  const Module& m = *n.module();
  ElementSet out(m.size());
  n.elements().for_each([&](Elem x) { out.insert(m.act(s, x)); });
  return Submodule(n.module(), std::move(out), Submodule::Trusted{});
}

Ideal colon_r(const Submodule& n, const Submodule& k) {
  require_same_module(n, k, "colon");
  const Module& m = *n.module();
  const Ring& r = *m.ring();
  ElementSet s(r.size());
  for (Elem a = 0; a < r.size(); ++a)
    if (k.elements().all_of([&](Elem x) { return n.contains(m.act(a, x)); })) s.insert(a);
  return Ideal(m.ring(), std::move(s), Ideal::Trusted{});
}

Ideal colon_r(const Submodule& n) { return colon_r(n, Submodule::whole(n.module())); }

Submodule colon_m(const Submodule& n, const Ideal& j) {
  const Module& m = *n.module();
  if (!same_ring(*j.ring(), *m.ring())) throw ConstructionError("colon: ideal over a different ring");
  ElementSet s(m.size());
  for (Elem x = 0; x < m.size(); ++x)
    if (j.elements().all_of([&](Elem a) { return n.contains(m.act(a, x)); })) s.insert(x);
  return Submodule(n.module(), std::move(s), Submodule::Trusted{});
}

Submodule colon_m(const Submodule& n, Elem s) {
  const Module& m = *n.module();
  ElementSet out(m.size());
  for (Elem x = 0; x < m.size(); ++x)
    if (n.contains(m.act(s, x))) out.insert(x);
  return Submodule(n.module(), std::move(out), Submodule::Trusted{});
}

Ideal annihilator(const ModulePtr& m) { return colon_r(Submodule::zero(m)); }

bool is_faithful(const ModulePtr& m) { return annihilator(m).size() == 1; }

Ideal as_ideal(const Submodule& p) {
  if (p.module()->kind() != ModuleKind::Regular) throw ConstructionError("as_ideal: module is not regular");
  return Ideal(p.ring(), p.elements(), Ideal::Trusted{});
}

Submodule as_submodule(const Ideal& i, const ModulePtr& regular) {
  if (regular->kind() != ModuleKind::Regular || !same_ring(*i.ring(), *regular->ring()))
    throw ConstructionError("as_submodule: not the regular module of the ideal's ring");
  return Submodule(regular, i.elements(), Submodule::Trusted{});
}

MultiplicationTest is_multiplication(const ModulePtr& m) {
  for (const auto& n : enumerate_submodules(m))
    if (!(ideal_times(colon_r(n), m) == n)) return MultiplicationTest{false, n};
  return MultiplicationTest{};
}

Submodule submodule_product(const Submodule& k, const Submodule& l) {
  require_same_module(k, l, "product");
  return ideal_times(ideal_product(colon_r(k), colon_r(l)), k.module());
}

bool is_prime_submodule(const Submodule& p) {
  if (!p.is_proper()) return false;
  const Module& m = *p.module();
  const Ideal c = colon_r(p);
  const Ring& r = *m.ring();
  for (Elem a = 0; a < r.size(); ++a) {
    if (c.contains(a)) continue;
    for (Elem x = 0; x < m.size(); ++x)
      if (!p.contains(x) && p.contains(m.act(a, x))) return false;
  }
  return true;
}

std::vector<Submodule> prime_submodules(const ModulePtr& m) {
  std::vector<Submodule> out;
  for (auto& n : enumerate_submodules(m))
    if (is_prime_submodule(n)) out.push_back(std::move(n));
  return out;
}

Submodule rad_submodule(const Submodule& n) {
  ElementSet acc = n.module()->all();
  for (const auto& p : prime_submodules(n.module()))
    if (n.is_subset_of(p)) acc = acc & p.elements();
  return Submodule(n.module(), std::move(acc), Submodule::Trusted{});
}

Submodule t_p(const ModulePtr& m, const Ideal& p) {
  require_maximal(p);
  const Ring& r = *m->ring();
  ElementSet s(m->size());
  for (Elem x = 0; x < m->size(); ++x)
    if (p.elements().any_of([&](Elem q) { return m->act(r.sub(r.one(), q), x) == m->zero(); })) s.insert(x);
  return Submodule(m, std::move(s));
}

PCyclicWitness is_p_cyclic(const ModulePtr& m, const Ideal& p) {
  require_maximal(p);
  const Ring& r = *m->ring();
  PCyclicWitness w;
  p.elements().all_of([&](Elem q) {
    const Elem u = r.sub(r.one(), q);
    for (Elem g = 0; g < m->size(); ++g) {
      const Submodule rg = cyclic_submodule(m, g);
      bool covers = true;
      for (Elem x = 0; x < m->size() && covers; ++x) covers = rg.contains(m->act(u, x));
      if (covers) {
        w = PCyclicWitness{true, q, g};
        return false;
      }
    }
    return true;
  });
  return w;
}

Submodule hom_image(const ModuleHom& f, const Submodule& p) {
  if (!same_module(*p.module(), *f.domain())) throw ConstructionError("image: submodule not in the domain");
  ElementSet s(f.codomain()->size());
  p.elements().for_each([&](Elem x) { s.insert(f(x)); });
  return Submodule(f.codomain(), std::move(s));
}

Submodule hom_preimage(const ModuleHom& f, const Submodule& p) {
  if (!same_module(*p.module(), *f.codomain())) throw ConstructionError("preimage: submodule not in the codomain");
  ElementSet s(f.domain()->size());
  for (Elem x = 0; x < f.domain()->size(); ++x)
    if (p.contains(f(x))) s.insert(x);
  return Submodule(f.domain(), std::move(s));
}

Submodule hom_kernel(const ModuleHom& f) { return hom_preimage(f, Submodule::zero(f.codomain())); }

Submodule hom_range(const ModuleHom& f) { return hom_image(f, Submodule::whole(f.domain())); }

std::vector<ModuleHom> enumerate_homs(const ModulePtr& from, const ModulePtr& to) {
  if (!same_ring(*from->ring(), *to->ring())) throw ConstructionError("homs between modules over different rings");
  const Module& a = *from;
  const Module& b = *to;
  const Ring& r = *a.ring();
  std::vector<Elem> gens;
  Submodule span = Submodule::zero(from);
  for (Elem x = 0; x < a.size(); ++x)
    if (!span.contains(x)) {
      gens.push_back(x);
      span = submodule_sum(span, cyclic_submodule(from, x));
    }
  const std::size_t k = gens.size();
  // Coefficient tuples (r_1..r_k) cover every element as Σ r_i g_i.
  std::size_t combos = 1;
  for (std::size_t i = 0; i < k; ++i) combos *= r.size();
  std::size_t assignments = 1;
  for (std::size_t i = 0; i < k; ++i) assignments *= b.size();
  std::vector<ModuleHom> out;
  std::vector<Elem> imgs(k), table(a.size());
  for (std::size_t code = 0; code < assignments; ++code) {
    std::size_t c = code;
    for (std::size_t i = k; i-- > 0;) {
      imgs[i] = static_cast<Elem>(c % b.size());
      c /= b.size();
    }
    std::fill(table.begin(), table.end(), kUnset);
    bool ok = true;
    for (std::size_t t = 0; t < combos && ok; ++t) {
      std::size_t cc = t;
      Elem x = a.zero(), y = b.zero();
      for (std::size_t i = k; i-- > 0;) {
        const Elem ri = static_cast<Elem>(cc % r.size());
        cc /= r.size();
        x = a.add(x, a.act(ri, gens[i]));
        y = b.add(y, b.act(ri, imgs[i]));
      }
      if (table[x] == kUnset)
        table[x] = y;
      else
        ok = table[x] == y;
    }
    if (ok) out.emplace_back(from, to, table);
  }
  return out;
}

}  // namespace alg
