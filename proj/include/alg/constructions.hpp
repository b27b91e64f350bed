#pragma once

#include <vector>

#include "alg/module.hpp"
#include "alg/ring.hpp"

namespace alg {

/// R₁ × … × R_n with M, S and P assembled componentwise.
struct ProductInstance {
  RingPtr ring;
  ModulePtr module;
  MultClosedSet set;
  Submodule sub;
};

/// Needs n ≥ 2 and matching component counts; each S_i and P_i must belong
/// to M_i and its ring.
ProductInstance product_instance(const std::vector<ModulePtr>& modules,
                                 const std::vector<MultClosedSet>& sets,
                                 const std::vector<Submodule>& subs);

Ideal product_ideal(const RingPtr& product_ring, const std::vector<Ideal>& ideals);
MultClosedSet product_multset(const RingPtr& product_ring, const std::vector<MultClosedSet>& sets);
Submodule product_submodule(const ModulePtr& product_module, const std::vector<Submodule>& subs);

/// R(+)M.
RingPtr idealize(const ModulePtr& m);
/// p(+)N as an ideal of R(+)M; requires pM ⊆ N.
Ideal lift_ideal(const RingPtr& idealization, const Ideal& p, const Submodule& n);

enum class LiftMode { Zero, Full };
/// S(+)0 = {(s,0)} or S(+)M = {(s,m)}.
MultClosedSet lift_multset(const RingPtr& idealization, const MultClosedSet& s, LiftMode mode);

/// π(S) in a quotient ring of S's ring, validated.
MultClosedSet project_multset(const MultClosedSet& s, const RingPtr& quotient_ring);

}  // namespace alg
