#include "alg/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

#include "alg/format.hpp"
#include "alg/limits.hpp"
#include "alg/module.hpp"

namespace alg {

namespace {

// Hard ceiling on table construction; enumeration caps are far below it.
constexpr std::size_t kMaxTableSize = 4096;

void check_table_size(std::size_t n) {
  if (n > kMaxTableSize)
    throw ConstructionError("ring of cardinality " + std::to_string(n) +
                            " is too large to tabulate (limit " +
                            std::to_string(kMaxTableSize) + ")");
}

}  // namespace

Ring::Ring(detail::RingData data) : d_(std::move(data)) {
  if (d_.size < 2) throw ConstructionError("ring must satisfy 1 != 0 (cardinality >= 2)");
  if (d_.size <= limits().audit_bound) audit_ring(*this);
}

Elem Ring::pow(Elem a, std::size_t t) const {
  Elem p = d_.one;
  for (std::size_t i = 0; i < t; ++i) p = mul(p, a);
  return p;
}

std::optional<Elem> Ring::decode(const Encoding& enc) const {
  switch (d_.kind) {
    case RingKind::Zmod:
      if (enc.is_tuple || enc.value < 0 || enc.value >= d_.modulus) return std::nullopt;
      return static_cast<Elem>(enc.value);
    case RingKind::Product: {
      if (!enc.is_tuple || enc.items.size() != d_.components.size()) return std::nullopt;
      std::vector<Elem> coords;
      for (std::size_t i = 0; i < enc.items.size(); ++i) {
        auto c = d_.components[i]->decode(enc.items[i]);
        if (!c) return std::nullopt;
        coords.push_back(*c);
      }
      return from_coordinates(coords);
    }
    case RingKind::Quotient: {
      auto b = d_.base->decode(enc);
      if (!b) return std::nullopt;
      return d_.class_of[*b];
    }
    case RingKind::Idealization: {
      if (!enc.is_tuple || enc.items.size() != 2) return std::nullopt;
      auto a = d_.base->decode(enc.items[0]);
      auto m = d_.carrier->decode(enc.items[1]);
      if (!a || !m) return std::nullopt;
      return make_pair(*a, *m);
    }
    case RingKind::Localized: {
      if (!enc.is_tuple || enc.items.size() != 2) return std::nullopt;
      auto a = d_.base->decode(enc.items[0]);
      auto s = d_.base->decode(enc.items[1]);
      if (!a || !s || !d_.defining_set.contains(*s)) return std::nullopt;
      return d_.pair_class[*a * d_.base->size() + *s];
    }
  }
  return std::nullopt;
}

Elem Ring::coordinate(Elem x, std::size_t i) const {
  std::size_t stride = 1;
  for (std::size_t j = d_.components.size(); j-- > i + 1;) stride *= d_.components[j]->size();
  return static_cast<Elem>((x / stride) % d_.components[i]->size());
}

Elem Ring::from_coordinates(std::span<const Elem> coords) const {
  std::size_t x = 0;
  for (std::size_t i = 0; i < d_.components.size(); ++i) x = x * d_.components[i]->size() + coords[i];
  return static_cast<Elem>(x);
}

Elem Ring::pair_first(Elem x) const { return static_cast<Elem>(x / d_.carrier->size()); }
Elem Ring::pair_second(Elem x) const { return static_cast<Elem>(x % d_.carrier->size()); }
Elem Ring::make_pair(Elem a, Elem m) const {
  return static_cast<Elem>(a * d_.carrier->size() + m);
}

const std::vector<ElementSet>& Ring::ideal_sets() const {
  std::call_once(ideals_once_, [this] {
    if (d_.size > limits().enumeration_cap)
      throw CapExceeded("ideal enumeration", d_.size, limits().enumeration_cap);
    auto principal = [this](Elem x) {
      ElementSet s(d_.size);
      for (Elem r = 0; r < d_.size; ++r) s.insert(mul(r, x));
      return s;
    };
    auto sum = [this](const ElementSet& a, const ElementSet& b) {
      ElementSet s(d_.size);
      a.for_each([&](Elem x) { b.for_each([&](Elem y) { s.insert(add(x, y)); }); });
      return s;
    };
    std::set<ElementSet, CanonicalLess> seen;
    std::deque<ElementSet> work;
    for (Elem x = 0; x < d_.size; ++x) {
      auto p = principal(x);
      if (seen.insert(p).second) work.push_back(p);
    }
    // Close under pairwise sums; every ideal of a finite ring is a finite
    // sum of principal ideals.
    while (!work.empty()) {
      auto cur = work.front();
      work.pop_front();
      std::vector<ElementSet> snapshot(seen.begin(), seen.end());
      for (const auto& other : snapshot) {
        auto s = sum(cur, other);
        if (seen.insert(s).second) work.push_back(s);
      }
    }
    ideals_.assign(seen.begin(), seen.end());
  });
  return ideals_;
}

const ElementSet& Ring::unit_set() const {
  std::call_once(units_once_, [this] {
    units_ = ElementSet(d_.size);
    for (Elem x = 0; x < d_.size; ++x)
      for (Elem y = 0; y < d_.size; ++y)
        if (mul(x, y) == d_.one) {
          units_.insert(x);
          break;
        }
  });
  return units_;
}

bool same_ring(const Ring& a, const Ring& b) { return &a == &b || a.key() == b.key(); }

void audit_ring(const Ring& r) {
  const Elem n = static_cast<Elem>(r.size());
  auto fail = [&](const std::string& law, Elem a, Elem b, Elem c) {
    std::ostringstream os;
    os << "ring axiom violated (" << law << ") at " << r.encode(a).to_string() << ", "
       << r.encode(b).to_string() << ", " << r.encode(c).to_string();
    throw ConstructionError(os.str());
  };
  if (r.zero() == r.one()) throw ConstructionError("ring axiom violated: 1 = 0");
  for (Elem a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a) fail("additive identity", a, a, a);
    if (r.mul(a, r.one()) != a) fail("multiplicative identity", a, a, a);
    if (r.add(a, r.neg(a)) != r.zero()) fail("additive inverse", a, a, a);
    for (Elem b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) fail("additive commutativity", a, b, b);
      if (r.mul(a, b) != r.mul(b, a)) fail("multiplicative commutativity", a, b, b);
      for (Elem c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) fail("additive associativity", a, b, c);
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) fail("multiplicative associativity", a, b, c);
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) fail("distributivity", a, b, c);
      }
    }
  }
}

RingPtr make_zmod(std::int64_t n) {
  if (n < 2) throw ConstructionError("zmod requires n >= 2, got " + std::to_string(n));
  check_table_size(static_cast<std::size_t>(n));
  detail::RingData d;
  d.kind = RingKind::Zmod;
  d.size = static_cast<std::size_t>(n);
  d.modulus = n;
  d.add.resize(d.size * d.size);
  d.mul.resize(d.size * d.size);
  d.neg.resize(d.size);
  for (std::int64_t a = 0; a < n; ++a) {
    d.neg[a] = static_cast<Elem>((n - a) % n);
    d.encodings.push_back(Encoding::integer(a));
    for (std::int64_t b = 0; b < n; ++b) {
      d.add[a * n + b] = static_cast<Elem>((a + b) % n);
      d.mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  d.zero = 0;
  d.one = 1;
  d.key = "zmod(" + std::to_string(n) + ")";
  return std::make_shared<const Ring>(std::move(d));
}

RingPtr make_product_ring(std::vector<RingPtr> components) {
  if (components.empty()) throw ConstructionError("product ring needs at least one component");
  std::size_t size = 1;
  for (const auto& c : components) {
    if (!c) throw ConstructionError("product ring: null component");
    size *= c->size();
    check_table_size(size);
  }
  const std::size_t k = components.size();
  auto coords = [&](std::size_t x) {
    std::vector<Elem> out(k);
    for (std::size_t i = k; i-- > 0;) {
      out[i] = static_cast<Elem>(x % components[i]->size());
      x /= components[i]->size();
    }
    return out;
  };
  auto index = [&](const std::vector<Elem>& c) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i) x = x * components[i]->size() + c[i];
    return static_cast<Elem>(x);
  };
  detail::RingData d;
  d.kind = RingKind::Product;
  d.size = size;
  d.add.resize(size * size);
  d.mul.resize(size * size);
  d.neg.resize(size);
  std::vector<std::vector<Elem>> all(size);
  for (std::size_t x = 0; x < size; ++x) all[x] = coords(x);
  for (std::size_t x = 0; x < size; ++x) {
    std::vector<Encoding> items;
    std::vector<Elem> n(k);
    for (std::size_t i = 0; i < k; ++i) {
      items.push_back(components[i]->encode(all[x][i]));
      n[i] = components[i]->neg(all[x][i]);
    }
    d.encodings.push_back(Encoding::tuple(std::move(items)));
    d.neg[x] = index(n);
    for (std::size_t y = 0; y < size; ++y) {
      std::vector<Elem> s(k), p(k);
      for (std::size_t i = 0; i < k; ++i) {
        s[i] = components[i]->add(all[x][i], all[y][i]);
        p[i] = components[i]->mul(all[x][i], all[y][i]);
      }
      d.add[x * size + y] = index(s);
      d.mul[x * size + y] = index(p);
    }
  }
  std::vector<Elem> z(k), o(k);
  for (std::size_t i = 0; i < k; ++i) {
    z[i] = components[i]->zero();
    o[i] = components[i]->one();
  }
  d.zero = index(z);
  d.one = index(o);
  d.key = "product(";
  for (std::size_t i = 0; i < k; ++i) d.key += (i ? "," : "") + components[i]->key();
  d.key += ")";
  d.components = std::move(components);
  return std::make_shared<const Ring>(std::move(d));
}

RingPtr make_quotient_ring(const Ideal& ideal) {
  const RingPtr& base = ideal.ring();
  if (!ideal.is_proper()) throw ConstructionError("quotient by the unit ideal");
  const std::size_t n = base->size();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> class_of(n, kUnset);
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (class_of[a] != kUnset) continue;
    const Elem c = static_cast<Elem>(reps.size());
    reps.push_back(a);
    ideal.elements().for_each([&](Elem i) { class_of[base->add(a, i)] = c; });
  }
  const std::size_t size = reps.size();
  detail::RingData d;
  d.kind = RingKind::Quotient;
  d.size = size;
  d.add.resize(size * size);
  d.mul.resize(size * size);
  d.neg.resize(size);
  for (std::size_t x = 0; x < size; ++x) {
    d.encodings.push_back(base->encode(reps[x]));
    d.neg[x] = class_of[base->neg(reps[x])];
    for (std::size_t y = 0; y < size; ++y) {
      d.add[x * size + y] = class_of[base->add(reps[x], reps[y])];
      d.mul[x * size + y] = class_of[base->mul(reps[x], reps[y])];
    }
  }
  d.zero = class_of[base->zero()];
  d.one = class_of[base->one()];
  d.key = "quotient(" + base->key() + "," + format_elements(*base, ideal.elements()) + ")";
  d.base = base;
  d.defining_set = ideal.elements();
  d.class_of = std::move(class_of);
  d.representative = std::move(reps);
  return std::make_shared<const Ring>(std::move(d));
}

RingPtr make_idealization(ModulePtr carrier) {
  if (!carrier) throw ConstructionError("idealization: null carrier module");
  const RingPtr& base = carrier->ring();
  const std::size_t rn = base->size(), mn = carrier->size();
  const std::size_t size = rn * mn;
  check_table_size(size);
  auto idx = [mn](Elem a, Elem m) { return static_cast<Elem>(a * mn + m); };
  detail::RingData d;
  d.kind = RingKind::Idealization;
  d.size = size;
  d.add.resize(size * size);
  d.mul.resize(size * size);
  d.neg.resize(size);
  for (Elem a = 0; a < rn; ++a)
    for (Elem m = 0; m < mn; ++m) {
      const Elem x = idx(a, m);
      d.encodings.push_back(Encoding::tuple({base->encode(a), carrier->encode(m)}));
      d.neg[x] = idx(base->neg(a), carrier->neg(m));
      for (Elem b = 0; b < rn; ++b)
        for (Elem m2 = 0; m2 < mn; ++m2) {
          const Elem y = idx(b, m2);
          d.add[x * size + y] = idx(base->add(a, b), carrier->add(m, m2));
          d.mul[x * size + y] =
              idx(base->mul(a, b), carrier->add(carrier->act(a, m2), carrier->act(b, m)));
        }
    }
  d.zero = idx(base->zero(), carrier->zero());
  d.one = idx(base->one(), carrier->zero());
  d.key = "idealization(" + carrier->key() + ")";
  d.base = base;
  d.carrier = std::move(carrier);
  return std::make_shared<const Ring>(std::move(d));
}

Ideal::Ideal(RingPtr ring, ElementSet elems) : ring_(std::move(ring)), elems_(std::move(elems)) {
  const Ring& r = *ring_;
  if (elems_.universe() != r.size()) throw ConstructionError("ideal: element set has wrong universe");
  if (!elems_.contains(r.zero())) throw ConstructionError("ideal must contain 0");
  elems_.for_each([&](Elem x) {
    if (!elems_.contains(r.neg(x)))
      throw ConstructionError("ideal not closed under negation at " + r.encode(x).to_string());
    elems_.for_each([&](Elem y) {
      if (!elems_.contains(r.add(x, y)))
        throw ConstructionError("ideal not closed under addition: " + r.encode(x).to_string() +
                                " + " + r.encode(y).to_string());
    });
    for (Elem a = 0; a < r.size(); ++a)
      if (!elems_.contains(r.mul(a, x)))
        throw ConstructionError("ideal does not absorb: " + r.encode(a).to_string() + " * " +
                                r.encode(x).to_string());
  });
}

Ideal Ideal::zero(const RingPtr& r) {
  return Ideal(r, ElementSet(r->size(), {r->zero()}), Trusted{});
}

Ideal Ideal::unit(const RingPtr& r) { return Ideal(r, r->all(), Trusted{}); }

std::optional<MultClosedViolation> check_mult_closed(const Ring& r, const ElementSet& elems) {
  using A = MultClosedViolation::Axiom;
  if (elems.universe() != r.size())
    return MultClosedViolation{A::OutOfRange, 0, 0, "set is not a subset of the ring"};
  if (!elems.contains(r.one())) return MultClosedViolation{A::MissingOne, 0, 0, "1 is not in S"};
  if (elems.contains(r.zero()))
    return MultClosedViolation{A::ContainsZero, 0, 0, "0 is in S"};
  std::optional<MultClosedViolation> out;
  elems.all_of([&](Elem a) {
    return elems.all_of([&](Elem b) {
      if (b < a || elems.contains(r.mul(a, b))) return true;
      out = MultClosedViolation{A::NotClosed, a, b,
                                "S is not closed: " + r.encode(a).to_string() + "*" +
                                    r.encode(b).to_string() + " = " +
                                    r.encode(r.mul(a, b)).to_string() + " is not in S"};
      return false;
    });
  });
  return out;
}

MultClosedSet validate_mult_closed(const RingPtr& r, const ElementSet& elems) {
  if (auto v = check_mult_closed(*r, elems)) throw MultClosedError(std::move(*v));
  return MultClosedSet(r, elems, MultClosedSet::Trusted{});
}

std::vector<MultClosedSet> enumerate_mult_closed(const RingPtr& r) {
  const Ring& ring = *r;
  if (ring.size() > limits().enumeration_cap)
    throw CapExceeded("multiplicative set enumeration", ring.size(), limits().enumeration_cap);
  // Multiplicative closure of s ∪ {x}; nullopt once 0 is reached.
  auto close_with = [&](const ElementSet& s, Elem x) -> std::optional<ElementSet> {
    ElementSet out = s;
    std::deque<Elem> work;
    if (!out.contains(x)) {
      out.insert(x);
      work.push_back(x);
    }
    while (!work.empty()) {
      const Elem y = work.front();
      work.pop_front();
      if (y == ring.zero()) return std::nullopt;
      std::vector<Elem> cur = out.elements();
      for (Elem z : cur) {
        const Elem p = ring.mul(y, z);
        if (!out.contains(p)) {
          if (p == ring.zero()) return std::nullopt;
          out.insert(p);
          work.push_back(p);
        }
      }
    }
    return out;
  };
  std::set<ElementSet, CanonicalLess> seen;
  std::deque<ElementSet> work;
  ElementSet start(ring.size(), {ring.one()});
  seen.insert(start);
  work.push_back(start);
  while (!work.empty()) {
    auto cur = work.front();
    work.pop_front();
    for (Elem x = 0; x < ring.size(); ++x) {
      if (cur.contains(x)) continue;
      auto next = close_with(cur, x);
      if (next && seen.insert(*next).second) work.push_back(*next);
    }
  }
  std::vector<MultClosedSet> out;
  for (const auto& s : seen) out.emplace_back(r, s, MultClosedSet::Trusted{});
  return out;
}

MultClosedSet prime_complement(const Ideal& p) {
  if (!is_prime_ideal(p)) throw ConstructionError("complement requested for a non-prime ideal");
  return validate_mult_closed(p.ring(), ~p.elements());
}

ElementSet ring_units(const Ring& r) { return r.unit_set(); }

bool is_unit(const Ring& r, Elem x) { return r.unit_set().contains(x); }

Ideal principal_ideal(const RingPtr& r, Elem x) {
  ElementSet s(r->size());
  for (Elem a = 0; a < r->size(); ++a) s.insert(r->mul(a, x));
  return Ideal(r, std::move(s), Ideal::Trusted{});
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  const Ring& r = *a.ring();
  ElementSet s(r.size());
  a.elements().for_each([&](Elem x) { b.elements().for_each([&](Elem y) { s.insert(r.add(x, y)); }); });
  return Ideal(a.ring(), std::move(s), Ideal::Trusted{});
}

Ideal generated_ideal(const RingPtr& r, const ElementSet& gens) {
  Ideal acc = Ideal::zero(r);
  gens.for_each([&](Elem g) { acc = ideal_sum(acc, principal_ideal(r, g)); });
  return acc;
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  const Ring& r = *a.ring();
  ElementSet gens(r.size());
  a.elements().for_each([&](Elem x) { b.elements().for_each([&](Elem y) { gens.insert(r.mul(x, y)); }); });
  return generated_ideal(a.ring(), gens);
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  return Ideal(a.ring(), a.elements() & b.elements(), Ideal::Trusted{});
}

Ideal ideal_colon(const Ideal& i, Elem x) {
  const Ring& r = *i.ring();
  ElementSet s(r.size());
  for (Elem a = 0; a < r.size(); ++a)
    if (i.contains(r.mul(a, x))) s.insert(a);
  return Ideal(i.ring(), std::move(s), Ideal::Trusted{});
}

std::vector<Ideal> enumerate_ideals(const RingPtr& r) {
  std::vector<Ideal> out;
  for (const auto& s : r->ideal_sets()) out.emplace_back(r, s, Ideal::Trusted{});
  return out;
}

bool is_prime_ideal(const Ideal& i) {
  if (!i.is_proper()) return false;
  const Ring& r = *i.ring();
  for (Elem a = 0; a < r.size(); ++a) {
    if (i.contains(a)) continue;
    for (Elem b = 0; b < r.size(); ++b)
      if (!i.contains(b) && i.contains(r.mul(a, b))) return false;
  }
  return true;
}

bool is_primary_ideal(const Ideal& i) {
  if (!i.is_proper()) return false;
  const Ring& r = *i.ring();
  const Ideal rad = radical_ideal(i);
  for (Elem a = 0; a < r.size(); ++a) {
    if (i.contains(a)) continue;
    for (Elem b = 0; b < r.size(); ++b)
      if (!rad.contains(b) && i.contains(r.mul(a, b))) return false;
  }
  return true;
}

bool is_integral_domain(const RingPtr& r) { return is_prime_ideal(Ideal::zero(r)); }

Spectrum ideal_spectrum(const RingPtr& r) {
  const auto ideals = enumerate_ideals(r);
  Spectrum sp{{}, {}, Ideal::unit(r)};
  for (const auto& i : ideals) {
    if (!i.is_proper()) continue;
    if (is_prime_ideal(i)) sp.primes.push_back(i);
    bool maximal = true;
    for (const auto& j : ideals)
      if (j.is_proper() && j.size() > i.size() && i.is_subset_of(j)) {
        maximal = false;
        break;
      }
    if (maximal) sp.maximals.push_back(i);
  }
  ElementSet jac = r->all();
  for (const auto& m : sp.maximals) jac = jac & m.elements();
  sp.jacobson = Ideal(r, jac, Ideal::Trusted{});
  return sp;
}

bool power_lands_in(const Ring& r, Elem x, const ElementSet& target) {
  Elem p = x;
  for (std::size_t t = 1; t <= r.size(); ++t) {
    if (target.contains(p)) return true;
    p = r.mul(p, x);
  }
  return false;
}

Ideal radical_ideal(const Ideal& i) {
  const Ring& r = *i.ring();
  ElementSet s(r.size());
  for (Elem x = 0; x < r.size(); ++x)
    if (power_lands_in(r, x, i.elements())) s.insert(x);
  return Ideal(i.ring(), std::move(s), Ideal::Trusted{});
}

}  // namespace alg
