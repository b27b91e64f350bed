#pragma once

#include <vector>

#include "alg/verify.hpp"

namespace alg::verify_detail {

/// Zmod(2..max_ring), plus product and idealization rings when composite;
/// ordered by cardinality, Zmod first among equals.
std::vector<RingPtr> family_rings(const Family& f);
/// Regular first, then cyclic modules by order (Zmod) or quotients R/I,
/// then two-term direct sums when composite. All of size ≤ max_module.
std::vector<ModulePtr> family_modules(const RingPtr& r, const Family& f);
/// Every module of every family ring.
std::vector<ModulePtr> all_family_modules(const Family& f);

/// (M, P, S) for M in the family, P ≤ M, S mult-closed; canonical order.
std::vector<Instance> module_sub_set(const Family& f);
/// Same, keeping only modules accepted by keep.
template <class Keep>
std::vector<Instance> module_sub_set_if(const Family& f, Keep keep) {
  std::vector<Instance> out;
  for (const auto& m : all_family_modules(f)) {
    if (!keep(m)) continue;
    const auto sets = enumerate_mult_closed(m->ring());
    for (const auto& p : enumerate_submodules(m))
      for (const auto& s : sets) out.push_back(Instance{{m}, {}, {p}, {}, {s}});
  }
  return out;
}

/// Component modules for product families: Regular and CyclicZmod(d | n),
/// d ≥ 1, over Zmod(2..max_ring), of size ≤ max_module.
std::vector<ModulePtr> component_modules(const Family& f);

}  // namespace alg::verify_detail
