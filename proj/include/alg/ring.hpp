#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alg/element_set.hpp"
#include "alg/encoding.hpp"
#include "alg/error.hpp"

namespace alg {

class Ring;
class Module;
class Ideal;
using RingPtr = std::shared_ptr<const Ring>;
using ModulePtr = std::shared_ptr<const Module>;

enum class RingKind { Zmod, Product, Quotient, Idealization, Localized };

namespace detail {

/// Raw tables of a finite ring. Built by the factory functions only.
struct RingData {
  RingKind kind = RingKind::Zmod;
  std::size_t size = 0;
  std::vector<Elem> add, mul, neg;
  Elem zero = 0, one = 0;
  std::vector<Encoding> encodings;
  std::string key;

  std::int64_t modulus = 0;             // Zmod
  std::vector<RingPtr> components;      // Product
  RingPtr base;                         // Quotient, Idealization, Localized
  ElementSet defining_set;              // Quotient: ideal of base; Localized: S
  ModulePtr carrier;                    // Idealization
  std::vector<Elem> class_of;           // Quotient: base element -> class
  std::vector<Elem> representative;     // Quotient: class -> least base element
  std::vector<Elem> pair_class;         // Localized: a * |R| + s -> class of a/s
};

}  // namespace detail

/// A finite commutative ring with identity, materialised as full operation
/// tables over element indices in canonical order. Immutable once built.
class Ring {
 public:
  explicit Ring(detail::RingData data);
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  RingKind kind() const { return d_.kind; }
  std::size_t size() const { return d_.size; }
  Elem zero() const { return d_.zero; }
  Elem one() const { return d_.one; }

  Elem add(Elem a, Elem b) const { return d_.add[a * d_.size + b]; }
  Elem mul(Elem a, Elem b) const { return d_.mul[a * d_.size + b]; }
  Elem neg(Elem a) const { return d_.neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::size_t t) const;

  const Encoding& encode(Elem e) const { return d_.encodings[e]; }
  /// Accepts canonical encodings, and for quotients/localizations any
  /// representative of a class.
  std::optional<Elem> decode(const Encoding& enc) const;

  /// Canonical descriptor text; two rings are the same ring iff keys match.
  const std::string& key() const { return d_.key; }

  std::int64_t modulus() const { return d_.modulus; }
  const std::vector<RingPtr>& components() const { return d_.components; }
  const RingPtr& base() const { return d_.base; }
  const ElementSet& defining_set() const { return d_.defining_set; }
  const ModulePtr& carrier() const { return d_.carrier; }

  /// Product rings: coordinate i of x, and assembly from coordinates.
  Elem coordinate(Elem x, std::size_t i) const;
  Elem from_coordinates(std::span<const Elem> coords) const;

  /// Idealization rings: x = (a, m).
  Elem pair_first(Elem x) const;
  Elem pair_second(Elem x) const;
  Elem make_pair(Elem a, Elem m) const;

  /// Quotient rings: projection from the base ring and least lift.
  Elem class_of(Elem base_elem) const { return d_.class_of[base_elem]; }
  Elem representative(Elem cls) const { return d_.representative[cls]; }

  ElementSet all() const { return ElementSet::full(d_.size); }
  ElementSet none() const { return ElementSet(d_.size); }

  /// Ideal lattice as element sets, canonically ordered. Computed once.
  const std::vector<ElementSet>& ideal_sets() const;
  const ElementSet& unit_set() const;

 private:
  detail::RingData d_;
  mutable std::once_flag ideals_once_, units_once_;
  mutable std::vector<ElementSet> ideals_;
  mutable ElementSet units_;
};

bool same_ring(const Ring& a, const Ring& b);

RingPtr make_zmod(std::int64_t n);
RingPtr make_product_ring(std::vector<RingPtr> components);
/// R/I for a proper ideal I.
RingPtr make_quotient_ring(const Ideal& ideal);
/// R(+)M with (a,m)(b,m') = (ab, am' + bm); R is carrier's ring.
RingPtr make_idealization(ModulePtr carrier);

/// Ring axioms checked over all element triples.
void audit_ring(const Ring& r);

/// An ideal given by its explicit element set.
class Ideal {
 public:
  struct Trusted {};

  /// Validates 0 ∈ I, closure under + and −, and absorption.
  Ideal(RingPtr ring, ElementSet elems);
  Ideal(RingPtr ring, ElementSet elems, Trusted) : ring_(std::move(ring)), elems_(std::move(elems)) {}

  static Ideal zero(const RingPtr& r);
  static Ideal unit(const RingPtr& r);

  const RingPtr& ring() const { return ring_; }
  const ElementSet& elements() const { return elems_; }
  bool contains(Elem e) const { return elems_.contains(e); }
  std::size_t size() const { return elems_.count(); }
  bool is_proper() const { return !elems_.contains(ring_->one()); }
  bool is_subset_of(const Ideal& o) const { return elems_.is_subset_of(o.elems_); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return same_ring(*a.ring_, *b.ring_) && a.elems_ == b.elems_;
  }

 private:
  RingPtr ring_;
  ElementSet elems_;
};

/// A validated multiplicatively closed subset: 1 ∈ S, 0 ∉ S, S·S ⊆ S.
class MultClosedSet {
 public:
  struct Trusted {};
  MultClosedSet(RingPtr ring, ElementSet elems, Trusted)
      : ring_(std::move(ring)), elems_(std::move(elems)) {}

  const RingPtr& ring() const { return ring_; }
  const ElementSet& elements() const { return elems_; }
  bool contains(Elem e) const { return elems_.contains(e); }
  std::size_t size() const { return elems_.count(); }

  friend bool operator==(const MultClosedSet& a, const MultClosedSet& b) {
    return same_ring(*a.ring_, *b.ring_) && a.elems_ == b.elems_;
  }

 private:
  RingPtr ring_;
  ElementSet elems_;
};

struct MultClosedViolation {
  enum class Axiom { MissingOne, ContainsZero, NotClosed, OutOfRange } axiom;
  Elem a = 0, b = 0;  // the non-closed pair, for NotClosed
  std::string message;
};

class MultClosedError : public ConstructionError {
 public:
  explicit MultClosedError(MultClosedViolation v)
      : ConstructionError(v.message), violation_(std::move(v)) {}
  const MultClosedViolation& violation() const { return violation_; }

 private:
  MultClosedViolation violation_;
};

std::optional<MultClosedViolation> check_mult_closed(const Ring& r, const ElementSet& elems);
/// Throws MultClosedError naming the first violated axiom.
MultClosedSet validate_mult_closed(const RingPtr& r, const ElementSet& elems);
/// Every multiplicatively closed subset, canonically ordered.
std::vector<MultClosedSet> enumerate_mult_closed(const RingPtr& r);
/// R \ p for a prime ideal p.
MultClosedSet prime_complement(const Ideal& p);

ElementSet ring_units(const Ring& r);
bool is_unit(const Ring& r, Elem x);

Ideal principal_ideal(const RingPtr& r, Elem x);
Ideal generated_ideal(const RingPtr& r, const ElementSet& gens);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// (I : x) = { r : r x ∈ I }.
Ideal ideal_colon(const Ideal& i, Elem x);

/// Complete ideal lattice; throws CapExceeded above the enumeration cap.
std::vector<Ideal> enumerate_ideals(const RingPtr& r);

struct Spectrum {
  std::vector<Ideal> primes;
  std::vector<Ideal> maximals;
  Ideal jacobson;
};

Spectrum ideal_spectrum(const RingPtr& r);
bool is_prime_ideal(const Ideal& i);
/// Primary in the classical sense: proper, ab ∈ I ⟹ a ∈ I or b ∈ √I.
bool is_primary_ideal(const Ideal& i);
bool is_integral_domain(const RingPtr& r);

/// { r : r^t ∈ I for some 1 ≤ t ≤ |R| }.
Ideal radical_ideal(const Ideal& i);
/// Whether some power x^t, 1 ≤ t ≤ |R|, lies in the set.
bool power_lands_in(const Ring& r, Elem x, const ElementSet& target);

}  // namespace alg
