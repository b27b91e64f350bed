#pragma once

#include <optional>
#include <vector>

#include "alg/module.hpp"
#include "alg/ring.hpp"

namespace alg {

/// S⁻¹R as explicit classes of R × S, each named by its least (a, s) pair.
struct LocalizedRing {
  RingPtr ring;
  RingPtr base;
  MultClosedSet set;
  std::vector<Elem> fraction_map;  // a ↦ a/1

  /// Class of a/s; s must lie in the set.
  Elem fraction(Elem a, Elem s) const;
};

/// S⁻¹M over S⁻¹R.
struct LocalizedModule {
  ModulePtr module;
  ModulePtr base;
  LocalizedRing ring;
  std::vector<Elem> fraction_map;  // m ↦ m/1

  Elem fraction(Elem m, Elem s) const;
};

LocalizedRing localize_ring(const MultClosedSet& s);
LocalizedModule localize_module(const ModulePtr& m, const MultClosedSet& s);
LocalizedModule localize_module(const ModulePtr& m, const LocalizedRing& ring);
/// S⁻¹P = { p/s : p ∈ P, s ∈ S }.
Submodule localize_submodule(const Submodule& p, const LocalizedModule& lm);

/// S* = { x : x/1 is a unit of S⁻¹R }.
MultClosedSet saturate(const MultClosedSet& s);

struct SaturationWitness {
  Elem u = 0, s = 0, a = 0;
};
/// Least (u, s, a) with u, s ∈ S and us = uxa, if any.
std::optional<SaturationWitness> saturation_witness(const MultClosedSet& s, Elem x);

}  // namespace alg
