#include <gtest/gtest.h>

#include "alg/classify.hpp"
#include "alg/localization.hpp"
#include "support.hpp"

using namespace alg;

namespace {

MultClosedSet mset(const RingPtr& r, std::initializer_list<Elem> xs) {
  return validate_mult_closed(r, ElementSet(r->size(), xs));
}

/// Independent class count for Z/n localized at S: (a,s) ~ (b,t) iff some
/// u ∈ S kills at − bs, computed by union-find over plain integers.
std::size_t oracle_class_count(int n, const std::vector<int>& s) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int t : s) pairs.emplace_back(a, t);
  std::vector<int> parent(pairs.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto [a, p] = pairs[i];
      const auto [b, q] = pairs[j];
      const int diff = ((a * q - b * p) % n + n) % n;
      for (int u : s)
        if ((u * diff) % n == 0) {
          parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
          break;
        }
    }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) roots += find(static_cast<int>(i)) == static_cast<int>(i);
  return roots;
}

}  // namespace

TEST(LocalizeRing, Examples) {
  auto z6 = make_zmod(6);
  auto l = localize_ring(mset(z6, {1, 3}));
  EXPECT_EQ(l.ring->size(), 2U);
  EXPECT_EQ(l.fraction_map[2], l.ring->zero());
  auto z4 = make_zmod(4);
  EXPECT_EQ(localize_ring(mset(z4, {1, 3})).ring->size(), 4U);
  for (int n = 2; n <= 10; ++n) {
    auto r = make_zmod(n);
    auto t = localize_ring(mset(r, {1}));
    EXPECT_EQ(t.ring->size(), r->size());
    for (Elem a = 0; a < r->size(); ++a)
      for (Elem b = 0; b < r->size(); ++b)
        EXPECT_EQ(t.ring->mul(t.fraction_map[a], t.fraction_map[b]), t.fraction_map[r->mul(a, b)]);
  }
}

TEST(LocalizeRing, ClassCountMatchesUnionFind) {
  for (int n = 2; n <= 12; ++n) {
    auto r = make_zmod(n);
    for (const auto& s : enumerate_mult_closed(r)) {
      std::vector<int> sv;
      s.elements().for_each([&](Elem e) { sv.push_back(static_cast<int>(e)); });
      EXPECT_EQ(localize_ring(s).ring->size(), oracle_class_count(n, sv)) << n;
    }
  }
}

TEST(LocalizeRing, FractionMapIsHomomorphismAndInvertsS) {
  std::vector<RingPtr> rings;
  for (int n = 2; n <= 12; ++n) rings.push_back(make_zmod(n));
  rings.push_back(make_product_ring({make_zmod(2), make_zmod(4)}));
  rings.push_back(make_idealization(make_cyclic_zmod(make_zmod(4), 2)));
  for (const auto& r : rings)
    for (const auto& s : enumerate_mult_closed(r)) {
      auto l = localize_ring(s);
      EXPECT_GE(l.ring->size(), 2U);
      EXPECT_LE(l.ring->size(), r->size());
      EXPECT_EQ(l.fraction_map[r->one()], l.ring->one());
      for (Elem a = 0; a < r->size(); ++a)
        for (Elem b = 0; b < r->size(); ++b) {
          EXPECT_EQ(l.ring->add(l.fraction_map[a], l.fraction_map[b]), l.fraction_map[r->add(a, b)]);
          EXPECT_EQ(l.ring->mul(l.fraction_map[a], l.fraction_map[b]), l.fraction_map[r->mul(a, b)]);
        }
      s.elements().for_each([&](Elem x) { EXPECT_TRUE(is_unit(*l.ring, l.fraction_map[x])); });
      EXPECT_NO_THROW(audit_ring(*l.ring));
    }
}

TEST(LocalizeModule, Examples) {
  auto z6 = make_zmod(6);
  auto m = make_regular(z6);
  auto s = mset(z6, {1, 3});
  auto lm = localize_module(m, s);
  EXPECT_EQ(lm.module->size(), 2U);
  auto zero = localize_submodule(Submodule::zero(m), lm);
  EXPECT_EQ(zero.size(), 1U);
  auto three = localize_submodule(Submodule(m, ElementSet(6, {0, 3})), lm);
  EXPECT_FALSE(three.is_proper());

  auto z4 = make_zmod(4);
  auto m4 = make_regular(z4);
  auto l1 = localize_module(m4, mset(z4, {1}));
  EXPECT_EQ(l1.module->size(), 4U);
  auto p = Submodule(m4, ElementSet(4, {0, 2}));
  EXPECT_EQ(localize_submodule(p, l1).size(), 2U);
}

TEST(LocalizeModule, AxiomsAndFractionMaps) {
  for (int n = 2; n <= 8; ++n) {
    auto r = make_zmod(n);
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      auto m = make_cyclic_zmod(r, d);
      for (const auto& s : enumerate_mult_closed(r)) {
        auto lm = localize_module(m, s);
        EXPECT_NO_THROW(audit_module(*lm.module));
        for (Elem x = 0; x < m->size(); ++x) {
          for (Elem y = 0; y < m->size(); ++y)
            EXPECT_EQ(lm.module->add(lm.fraction_map[x], lm.fraction_map[y]), lm.fraction_map[m->add(x, y)]);
          for (Elem a = 0; a < r->size(); ++a)
            EXPECT_EQ(lm.module->act(lm.ring.fraction_map[a], lm.fraction_map[x]), lm.fraction_map[m->act(a, x)]);
        }
      }
    }
  }
}

TEST(Saturate, Examples) {
  auto z6 = make_zmod(6);
  EXPECT_EQ(saturate(mset(z6, {1, 3})).elements(), ElementSet(6, {1, 3, 5}));
  auto z4 = make_zmod(4);
  EXPECT_EQ(saturate(mset(z4, {1})).elements(), ElementSet(4, {1, 3}));
  for (int n = 2; n <= 12; ++n) {
    auto r = make_zmod(n);
    auto u = validate_mult_closed(r, ring_units(*r));
    EXPECT_EQ(saturate(u), u);
  }
}

TEST(Saturate, ContainsIdempotentAndMatchesMembershipForm) {
  for (int n = 2; n <= 12; ++n) {
    auto r = make_zmod(n);
    for (const auto& s : enumerate_mult_closed(r)) {
      auto star = saturate(s);
      EXPECT_TRUE(s.elements().is_subset_of(star.elements()));
      EXPECT_EQ(saturate(star), star);
      for (Elem x = 0; x < r->size(); ++x) EXPECT_EQ(star.contains(x), saturation_witness(s, x).has_value());
    }
  }
}

TEST(Localize, PrimaryTransferOnSmallModules) {
  for (int n = 2; n <= 8; ++n) {
    auto r = make_zmod(n);
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      auto m = make_cyclic_zmod(r, d);
      for (const auto& s : enumerate_mult_closed(r)) {
        auto lm = localize_module(m, s);
        for (const auto& p : enumerate_submodules(m)) {
          if (!is_s_primary(p, s).holds) continue;
          auto lp = localize_submodule(p, lm);
          EXPECT_TRUE(lp.is_proper());
          EXPECT_TRUE(is_primary_submodule(lp));
        }
      }
    }
  }
}
