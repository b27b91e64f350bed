#include "families.hpp"

#include <algorithm>

#include "alg/constructions.hpp"

namespace alg::verify_detail {

std::vector<RingPtr> family_rings(const Family& f) {
  std::vector<RingPtr> out;
  for (std::size_t n = 2; n <= f.max_ring; ++n) out.push_back(make_zmod(static_cast<std::int64_t>(n)));
  if (f.composite) {
    for (std::int64_t a = 2; a * a <= static_cast<std::int64_t>(f.max_ring); ++a)
      for (std::int64_t b = a; a * b <= static_cast<std::int64_t>(f.max_ring); ++b)
        out.push_back(make_product_ring({make_zmod(a), make_zmod(b)}));
    if (f.max_ring >= 8) out.push_back(make_product_ring({make_zmod(2), make_zmod(2), make_zmod(2)}));
    for (std::int64_t n = 2; n * 2 <= static_cast<std::int64_t>(f.max_ring); ++n)
      for (std::int64_t d = 2; d <= n && n * d <= static_cast<std::int64_t>(f.max_ring); ++d)
        if (n % d == 0) out.push_back(idealize(make_cyclic_zmod(make_zmod(n), d)));
  }
  std::stable_sort(out.begin(), out.end(), [](const RingPtr& a, const RingPtr& b) { return a->size() < b->size(); });
  return out;
}

std::vector<ModulePtr> family_modules(const RingPtr& r, const Family& f) {
  std::vector<ModulePtr> basic;
  if (r->size() <= f.max_module) basic.push_back(make_regular(r));
  if (r->kind() == RingKind::Zmod) {
    const auto n = r->modulus();
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0 && static_cast<std::size_t>(d) <= f.max_module) basic.push_back(make_cyclic_zmod(r, d));
  } else if (f.composite) {
    const auto reg = make_regular(r);
    for (const auto& i : enumerate_ideals(r)) {
      if (i.size() == 1 || !i.is_proper()) continue;
      auto q = quotient_module(as_submodule(i, reg)).module;
      if (q->size() <= f.max_module) basic.push_back(std::move(q));
    }
  }
  std::vector<ModulePtr> out = basic;
  if (f.composite) {
    for (std::size_t i = 0; i < basic.size(); ++i)
      for (std::size_t j = i; j < basic.size(); ++j) {
        if (basic[i]->size() < 2 || basic[j]->size() < 2) continue;
        if (basic[i]->size() * basic[j]->size() > f.max_module) continue;
        out.push_back(make_direct_sum({basic[i], basic[j]}));
      }
  }
  return out;
}

std::vector<ModulePtr> all_family_modules(const Family& f) {
  std::vector<ModulePtr> out;
  for (const auto& r : family_rings(f))
    for (auto& m : family_modules(r, f)) out.push_back(std::move(m));
  return out;
}

std::vector<Instance> module_sub_set(const Family& f) {
  return module_sub_set_if(f, [](const ModulePtr&) { return true; });
}

std::vector<ModulePtr> component_modules(const Family& f) {
  Family plain = f;
  plain.composite = false;
  return all_family_modules(plain);
}

}  // namespace alg::verify_detail
