#pragma once

#include <optional>
#include <string>

#include "alg/module.hpp"
#include "alg/ring.hpp"

namespace alg {

/// Outcome of an existential S-predicate. When applicable is false the
/// disjointness precondition failed and holds/witness are unset.
struct SVerdict {
  bool applicable = true;
  bool holds = false;
  std::optional<Elem> witness;  // least s in S satisfying the condition
};

struct VariantVerdicts {
  bool applicable = true;
  SVerdict b, c, d;
};

struct ClassificationReport {
  bool applicable = true;
  std::string reason;  // set when not applicable
  bool is_prime = false;
  bool is_primary = false;
  SVerdict s_prime;
  SVerdict s_primary;
  /// Absent when a lattice needed by (c)/(d) is over the enumeration cap.
  std::optional<VariantVerdicts> variants;
};

/// (P :_R M) ∩ S = ∅.
bool s_disjoint(const Submodule& p, const MultClosedSet& s);

bool is_primary_submodule(const Submodule& p);

SVerdict is_s_prime(const Submodule& p, const MultClosedSet& s);
SVerdict is_s_primary(const Submodule& p, const MultClosedSet& s);

/// The three alternative formulations of S-primary:
///  (b) r acts injectively on s(M/P), or (rs)^t M ⊆ P for some t ≤ |M|;
///  (c) rN ⊆ P ⟹ sr ∈ √(P:M) or sN ⊆ P, over all submodules N;
///  (d) JN ⊆ P ⟹ sJ ⊆ √(P:M) or sN ⊆ P, over all submodules N and ideals J.
VariantVerdicts s_primary_variants(const Submodule& p, const MultClosedSet& s);

/// Least s ∈ S with (P :_M s) primary.
SVerdict primary_colon_witness(const Submodule& p, const MultClosedSet& s);

/// Ideal forms, via the regular module.
SVerdict is_s_primary_ideal(const Ideal& i, const MultClosedSet& s);
SVerdict is_s_prime_ideal(const Ideal& i, const MultClosedSet& s);

/// rm = 0 ⟹ sm = 0 or sr = 0 for a fixed s. Needs Ann(M) ∩ S = ∅.
SVerdict is_s_torsion_free(const ModulePtr& m, const MultClosedSet& s);
/// rm = 0 ⟹ sm = 0 or (sr)^t = 0, t ≤ |R|. Needs Ann(M) ∩ S = ∅.
SVerdict is_quasi_s_torsion_free(const ModulePtr& m, const MultClosedSet& s);
/// rm = 0 ⟹ m = 0 or r = 0.
bool is_torsion_free(const ModulePtr& m);

ClassificationReport classify(const Submodule& p, const MultClosedSet& s);

}  // namespace alg
