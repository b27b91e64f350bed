#include <gtest/gtest.h>

#include "alg/classify.hpp"
#include "alg/constructions.hpp"
#include "support.hpp"

using namespace alg;

namespace {

MultClosedSet mset(const RingPtr& r, std::initializer_list<Elem> xs) {
  return validate_mult_closed(r, ElementSet(r->size(), xs));
}

}  // namespace

TEST(Product, TwoComponentExample) {
  auto z4 = make_zmod(4), z2 = make_zmod(2);
  auto m1 = make_regular(z4), m2 = make_regular(z2);
  auto inst = product_instance({m1, m2}, {mset(z4, {1, 3}), mset(z2, {1})},
                               {Submodule::zero(m1), Submodule::whole(m2)});
  EXPECT_EQ(inst.ring->size(), 8U);
  EXPECT_EQ(inst.module->size(), 8U);
  ElementSet want_p(8);
  for (Elem x = 0; x < 8; ++x)
    if (inst.module->coordinate(x, 0) == 0) want_p.insert(x);
  EXPECT_EQ(inst.sub.elements(), want_p);
  EXPECT_NO_THROW(Submodule(inst.module, inst.sub.elements()));
  std::vector<std::string> s;
  inst.set.elements().for_each([&](Elem x) { s.push_back(inst.ring->encode(x).to_string()); });
  EXPECT_EQ(s, (std::vector<std::string>{"(1,1)", "(3,1)"}));
  EXPECT_FALSE(check_mult_closed(*inst.ring, inst.set.elements()).has_value());
}

TEST(Product, TripleOfFields) {
  std::vector<ModulePtr> mods;
  std::vector<MultClosedSet> sets;
  std::vector<Submodule> subs;
  for (int p : {2, 3, 5}) {
    auto r = make_zmod(p);
    mods.push_back(make_regular(r));
    sets.push_back(mset(r, {1}));
    subs.push_back(Submodule::zero(mods.back()));
  }
  auto inst = product_instance(mods, sets, subs);
  EXPECT_EQ(inst.ring->size(), 30U);
  EXPECT_EQ(inst.sub.size(), 1U);
}

TEST(Product, MismatchedCountsRejected) {
  auto z2 = make_zmod(2);
  auto m = make_regular(z2);
  EXPECT_THROW(product_instance({m, m}, {mset(z2, {1})}, {Submodule::zero(m), Submodule::zero(m)}),
               ConstructionError);
  EXPECT_THROW(product_instance({m}, {mset(z2, {1})}, {Submodule::zero(m)}), ConstructionError);
}

TEST(Idealization, Examples) {
  auto z2 = make_zmod(2);
  auto r = idealize(make_cyclic_zmod(z2, 2));
  EXPECT_EQ(r->size(), 4U);
  EXPECT_EQ(ring_units(*r), ElementSet(4, {r->make_pair(1, 0), r->make_pair(1, 1)}));

  auto z4 = make_zmod(4);
  auto m = make_cyclic_zmod(z4, 2);
  auto ri = idealize(m);
  auto lifted = lift_ideal(ri, principal_ideal(z4, 2), Submodule::whole(m));
  std::vector<std::string> elems;
  lifted.elements().for_each([&](Elem x) { elems.push_back(ri->encode(x).to_string()); });
  EXPECT_EQ(elems, (std::vector<std::string>{"(0,0)", "(0,1)", "(2,0)", "(2,1)"}));

  auto s0 = lift_multset(ri, mset(z4, {1, 3}), LiftMode::Zero);
  EXPECT_EQ(s0.elements(), ElementSet(8, {ri->make_pair(1, 0), ri->make_pair(3, 0)}));
  auto sf = lift_multset(ri, mset(z4, {1, 3}), LiftMode::Full);
  EXPECT_EQ(sf.size(), 4U);
}

TEST(Idealization, LiftRequiresContainment) {
  auto z4 = make_zmod(4);
  auto m = make_regular(z4);
  auto ri = idealize(m);
  EXPECT_THROW(lift_ideal(ri, principal_ideal(z4, 2), Submodule::zero(m)), ConstructionError);
  EXPECT_NO_THROW(lift_ideal(ri, Ideal::zero(z4), Submodule::zero(m)));
}

TEST(Idealization, RadicalLawOnLiftedIdeals) {
  for (int n = 2; n <= 4; ++n) {
    auto r = make_zmod(n);
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      auto m = make_cyclic_zmod(r, d);
      auto ri = idealize(m);
      for (const auto& i : enumerate_ideals(r))
        for (const auto& nsub : enumerate_submodules(m)) {
          if (!ideal_times(i, m).is_subset_of(nsub)) continue;
          auto lifted = lift_ideal(ri, i, nsub);
          EXPECT_EQ(radical_ideal(lifted), lift_ideal(ri, radical_ideal(i), Submodule::whole(m)));
        }
    }
  }
}

TEST(Projection, InducedSet) {
  auto z6 = make_zmod(6);
  auto q = make_quotient_ring(principal_ideal(z6, 2));
  auto s = project_multset(mset(z6, {1, 3}), q);
  EXPECT_EQ(s.elements(), ElementSet(2, {1}));
  EXPECT_THROW(project_multset(mset(z6, {1, 4}), q), MultClosedError);
}
