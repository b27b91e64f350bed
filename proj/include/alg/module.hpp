#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alg/ring.hpp"

namespace alg {

enum class ModuleKind {
  Regular,           // R over itself
  CyclicZmod,        // Z/d over Zmod(n), d | n
  Product,           // M1 × ... × Mk over R1 × ... × Rk
  DirectSum,         // M1 ⊕ ... ⊕ Mk over a common ring
  Quotient,          // M/N
  Submodule,         // L ⊆ M viewed as a module
  Localized,         // S⁻¹M over S⁻¹R
  OverQuotientRing,  // M over R/I for I ⊆ Ann(M)
};

namespace detail {

struct ModuleData {
  ModuleKind kind = ModuleKind::Regular;
  RingPtr ring;
  std::size_t size = 0;
  std::vector<Elem> add, neg, act;  // act[r * size + m]
  Elem zero = 0;
  std::vector<Encoding> encodings;
  std::string key;

  std::int64_t order = 0;            // CyclicZmod
  std::vector<ModulePtr> components; // Product, DirectSum
  ModulePtr base;                    // Quotient, Submodule, Localized, OverQuotientRing
  ElementSet defining_set;           // Quotient: N; Submodule: L; Localized: S ⊆ R
  std::vector<Elem> class_of;        // Quotient: base -> class
  std::vector<Elem> representative;  // Quotient: class -> least base element;
                                     // Submodule: element -> ambient element
  std::vector<Elem> pair_class;      // Localized: m * |R| + s -> class of m/s
};

}  // namespace detail

/// A finite unital module over a Ring, materialised as addition and action
/// tables. Immutable once built.
class Module {
 public:
  explicit Module(detail::ModuleData data);
  Module(const Module&) = delete;
  Module& operator=(const Module&) = delete;

  ModuleKind kind() const { return d_.kind; }
  const RingPtr& ring() const { return d_.ring; }
  std::size_t size() const { return d_.size; }
  Elem zero() const { return d_.zero; }
  Elem add(Elem a, Elem b) const { return d_.add[a * d_.size + b]; }
  Elem neg(Elem a) const { return d_.neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem act(Elem r, Elem m) const { return d_.act[r * d_.size + m]; }

  const Encoding& encode(Elem e) const { return d_.encodings[e]; }
  std::optional<Elem> decode(const Encoding& enc) const;
  const std::string& key() const { return d_.key; }

  std::int64_t cyclic_order() const { return d_.order; }
  const std::vector<ModulePtr>& components() const { return d_.components; }
  const ModulePtr& base() const { return d_.base; }
  const ElementSet& defining_set() const { return d_.defining_set; }

  /// Product / direct-sum coordinates.
  Elem coordinate(Elem x, std::size_t i) const;
  Elem from_coordinates(std::span<const Elem> coords) const;
  /// Quotient: projection and least lift. Submodule: ambient element.
  Elem class_of(Elem base_elem) const { return d_.class_of[base_elem]; }
  Elem representative(Elem e) const { return d_.representative[e]; }

  ElementSet all() const { return ElementSet::full(d_.size); }
  ElementSet none() const { return ElementSet(d_.size); }

  /// Submodule lattice as element sets, canonically ordered. Computed once.
  const std::vector<ElementSet>& submodule_sets() const;

 private:
  detail::ModuleData d_;
  mutable std::once_flag lattice_once_;
  mutable std::vector<ElementSet> lattice_;
};

bool same_module(const Module& a, const Module& b);

/// Module axioms checked over all (r, s, m, n) combinations.
void audit_module(const Module& m);

class Submodule {
 public:
  struct Trusted {};

  /// Validates 0 ∈ N, closure under addition and absorption under the ring.
  Submodule(ModulePtr module, ElementSet elems);
  Submodule(ModulePtr module, ElementSet elems, Trusted)
      : module_(std::move(module)), elems_(std::move(elems)) {}

  static Submodule zero(const ModulePtr& m);
  static Submodule whole(const ModulePtr& m);

  const ModulePtr& module() const { return module_; }
  const RingPtr& ring() const { return module_->ring(); }
  const ElementSet& elements() const { return elems_; }
  bool contains(Elem e) const { return elems_.contains(e); }
  std::size_t size() const { return elems_.count(); }
  bool is_proper() const { return elems_.count() != module_->size(); }
  bool is_subset_of(const Submodule& o) const { return elems_.is_subset_of(o.elems_); }

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return same_module(*a.module_, *b.module_) && a.elems_ == b.elems_;
  }

 private:
  ModulePtr module_;
  ElementSet elems_;
};

/// An R-linear map given by its full table, validated exhaustively.
class ModuleHom {
 public:
  ModuleHom(ModulePtr domain, ModulePtr codomain, std::vector<Elem> images);
  static ModuleHom identity(const ModulePtr& m);

  const ModulePtr& domain() const { return domain_; }
  const ModulePtr& codomain() const { return codomain_; }
  Elem operator()(Elem x) const { return images_[x]; }
  const std::vector<Elem>& images() const { return images_; }
  bool is_surjective() const;
  bool is_injective() const;

 private:
  ModulePtr domain_, codomain_;
  std::vector<Elem> images_;
};

ModulePtr make_regular(const RingPtr& r);
ModulePtr make_cyclic_zmod(const RingPtr& zmod, std::int64_t d);
/// Over the product of the component rings (built if not supplied).
ModulePtr make_product_module(std::vector<ModulePtr> components, RingPtr product_ring = nullptr);
ModulePtr make_direct_sum(std::vector<ModulePtr> components);
/// L viewed as a module, with the inclusion into its ambient module.
ModulePtr make_submodule_module(const Submodule& l);
/// M as a module over R/I, where the quotient ring's ideal annihilates M.
ModulePtr make_over_quotient_ring(const ModulePtr& m, const RingPtr& quotient_ring);

struct QuotientModule {
  ModulePtr module;
  ModuleHom projection;
};
QuotientModule quotient_module(const Submodule& n);
ModuleHom inclusion_hom(const ModulePtr& submodule_module);

/// Complete submodule lattice; throws CapExceeded above the enumeration cap.
std::vector<Submodule> enumerate_submodules(const ModulePtr& m);

Submodule generated_submodule(const ModulePtr& m, const ElementSet& gens);
Submodule cyclic_submodule(const ModulePtr& m, Elem x);
Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersection(const Submodule& a, const Submodule& b);
/// I·M' for a submodule M' (defaults to all of M).
Submodule ideal_times(const Ideal& i, const Submodule& n);
Submodule ideal_times(const Ideal& i, const ModulePtr& m);
/// s·N = { s n : n ∈ N } (a submodule).
Submodule scalar_times(Elem s, const Submodule& n);

/// (N :_R K) = { r : rK ⊆ N }.
Ideal colon_r(const Submodule& n, const Submodule& k);
/// (N :_R M).
Ideal colon_r(const Submodule& n);
/// (N :_M J) = { m : Jm ⊆ N }.
Submodule colon_m(const Submodule& n, const Ideal& j);
/// (N :_M s) = (N :_M Rs).
Submodule colon_m(const Submodule& n, Elem s);
Ideal annihilator(const ModulePtr& m);
bool is_faithful(const ModulePtr& m);

Ideal as_ideal(const Submodule& p);
Submodule as_submodule(const Ideal& i, const ModulePtr& regular);

struct MultiplicationTest {
  bool holds = true;
  std::optional<Submodule> counterexample;
};
/// N = (N :_R M) M for every submodule N.
MultiplicationTest is_multiplication(const ModulePtr& m);

/// (K :_R M)(L :_R M) M.
Submodule submodule_product(const Submodule& k, const Submodule& l);

bool is_prime_submodule(const Submodule& p);
std::vector<Submodule> prime_submodules(const ModulePtr& m);
/// Intersection of the prime submodules containing N; M when N = M.
Submodule rad_submodule(const Submodule& n);

/// { m : (1 − r) m = 0 for some r ∈ p }, p maximal.
Submodule t_p(const ModulePtr& m, const Ideal& p);

struct PCyclicWitness {
  bool holds = false;
  Elem q = 0, m = 0;
};
/// ∃ q ∈ p, m ∈ M with (1 − q)M ⊆ Rm; least (q, m) as witness.
PCyclicWitness is_p_cyclic(const ModulePtr& m, const Ideal& p);

Submodule hom_image(const ModuleHom& f, const Submodule& p);
Submodule hom_preimage(const ModuleHom& f, const Submodule& p);
Submodule hom_kernel(const ModuleHom& f);
Submodule hom_range(const ModuleHom& f);

/// Every homomorphism M → M', found by assigning images to a generating set.
std::vector<ModuleHom> enumerate_homs(const ModulePtr& from, const ModulePtr& to);

}  // namespace alg
