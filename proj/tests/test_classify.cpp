#include <gtest/gtest.h>

#include "alg/classify.hpp"
#include "support.hpp"

using namespace alg;
using testing_support::to_mask;

namespace {

MultClosedSet mset(const RingPtr& r, std::initializer_list<Elem> xs) {
  return validate_mult_closed(r, ElementSet(r->size(), xs));
}

struct Fixture {
  RingPtr ring;
  ModulePtr module;
  Submodule zero;
};

Fixture example_z4() {
  auto r = make_zmod(4);
  auto m = make_cyclic_zmod(r, 4);
  return {r, m, Submodule::zero(m)};
}

Fixture regular(int n) {
  auto r = make_zmod(n);
  auto m = make_regular(r);
  return {r, m, Submodule::zero(m)};
}

}  // namespace

TEST(Prime, Examples) {
  auto f = regular(4);
  EXPECT_TRUE(is_prime_submodule(Submodule(f.module, ElementSet(4, {0, 2}))));
  EXPECT_FALSE(is_prime_submodule(f.zero));
  EXPECT_FALSE(is_prime_submodule(Submodule::whole(f.module)));
}

TEST(Primary, Examples) {
  EXPECT_TRUE(is_primary_submodule(regular(4).zero));
  EXPECT_FALSE(is_primary_submodule(regular(6).zero));
  EXPECT_FALSE(is_primary_submodule(Submodule::whole(regular(6).module)));
  for (int n = 2; n <= 12; ++n) {
    auto f = regular(n);
    for (const auto& p : enumerate_submodules(f.module))
      if (is_prime_submodule(p)) EXPECT_TRUE(is_primary_submodule(p));
  }
}

TEST(SPrime, Examples) {
  auto e = example_z4();
  auto v = is_s_prime(e.zero, mset(e.ring, {1, 3}));
  EXPECT_TRUE(v.applicable);
  EXPECT_FALSE(v.holds);
  EXPECT_FALSE(v.witness.has_value());

  auto f = regular(6);
  auto w = is_s_prime(f.zero, mset(f.ring, {1, 3}));
  EXPECT_TRUE(w.holds);
  EXPECT_EQ(w.witness, Elem{3});
}

TEST(SPrime, TrivialSetCoincidesWithPrime) {
  for (int n = 2; n <= 12; ++n) {
    auto f = regular(n);
    auto one = mset(f.ring, {1});
    for (const auto& p : enumerate_submodules(f.module)) {
      auto v = is_s_prime(p, one);
      if (!v.applicable) continue;
      EXPECT_EQ(v.holds, is_prime_submodule(p));
    }
  }
}

TEST(SPrimary, Examples) {
  auto e = example_z4();
  auto v = is_s_primary(e.zero, mset(e.ring, {1, 3}));
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.witness, Elem{1});

  auto f = regular(6);
  auto w = is_s_primary(f.zero, mset(f.ring, {1, 3}));
  EXPECT_TRUE(w.holds);
  EXPECT_EQ(w.witness, Elem{3});
  EXPECT_FALSE(is_primary_submodule(f.zero));

  auto whole = is_s_primary(Submodule::whole(f.module), mset(f.ring, {1}));
  EXPECT_FALSE(whole.applicable);
  EXPECT_FALSE(whole.holds);
}

TEST(SPrimary, WitnessesMatchIntegerOracle) {
  for (int n = 2; n <= 10; ++n) {
    auto r = make_zmod(n);
    auto sets = enumerate_mult_closed(r);
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      auto m = make_cyclic_zmod(r, d);
      for (const auto& p : enumerate_submodules(m)) {
        const auto pm = to_mask(p.elements());
        EXPECT_EQ(is_primary_submodule(p), oracle::is_primary(pm, n, d));
        for (const auto& s : sets) {
          const auto sm = to_mask(s.elements());
          for (bool primary : {false, true}) {
            const int want = oracle::s_witness(pm, sm, n, d, primary);
            const SVerdict got = primary ? is_s_primary(p, s) : is_s_prime(p, s);
            if (want == -2) {
              EXPECT_FALSE(got.applicable);
            } else if (want == -1) {
              EXPECT_TRUE(got.applicable);
              EXPECT_FALSE(got.holds);
            } else {
              ASSERT_TRUE(got.holds) << n << " " << d;
              EXPECT_EQ(*got.witness, static_cast<Elem>(want));
            }
          }
        }
      }
    }
  }
}

TEST(Variants, Examples) {
  auto e = example_z4();
  auto v = s_primary_variants(e.zero, mset(e.ring, {1, 3}));
  EXPECT_TRUE(v.b.holds);
  EXPECT_TRUE(v.c.holds);
  EXPECT_TRUE(v.d.holds);

  auto f = regular(6);
  auto w = s_primary_variants(f.zero, mset(f.ring, {1}));
  EXPECT_FALSE(w.b.holds);
  EXPECT_FALSE(w.c.holds);
  EXPECT_FALSE(w.d.holds);

  auto na = s_primary_variants(Submodule::whole(f.module), mset(f.ring, {1}));
  EXPECT_FALSE(na.applicable);
}

TEST(ColonWitness, Examples) {
  auto f = regular(6);
  auto v = primary_colon_witness(f.zero, mset(f.ring, {1, 3}));
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.witness, Elem{3});
  EXPECT_EQ(colon_m(f.zero, Elem{3}).elements(), ElementSet(6, {0, 2, 4}));
  auto e = example_z4();
  auto w = primary_colon_witness(e.zero, mset(e.ring, {1, 3}));
  EXPECT_TRUE(w.holds);
  EXPECT_EQ(w.witness, Elem{1});
}

TEST(TorsionFree, Examples) {
  auto f5 = regular(5), f4 = regular(4), f6 = regular(6);
  EXPECT_TRUE(is_s_torsion_free(f5.module, mset(f5.ring, {1})).holds);
  EXPECT_FALSE(is_s_torsion_free(f4.module, mset(f4.ring, {1})).holds);
  auto t6 = is_s_torsion_free(f6.module, mset(f6.ring, {1, 3}));
  EXPECT_TRUE(t6.holds);
  EXPECT_EQ(t6.witness, Elem{3});

  EXPECT_TRUE(is_quasi_s_torsion_free(f4.module, mset(f4.ring, {1})).holds);
  EXPECT_TRUE(is_quasi_s_torsion_free(f5.module, mset(f5.ring, {1})).holds);
  EXPECT_FALSE(is_quasi_s_torsion_free(f6.module, mset(f6.ring, {1})).holds);

  auto z = make_cyclic_zmod(f4.ring, 1);
  EXPECT_FALSE(is_s_torsion_free(z, mset(f4.ring, {1})).applicable);
  EXPECT_TRUE(is_torsion_free(f5.module));
  EXPECT_FALSE(is_torsion_free(f4.module));
}

TEST(Report, Examples) {
  auto e = example_z4();
  auto a = classify(e.zero, mset(e.ring, {1, 3}));
  EXPECT_TRUE(a.applicable);
  EXPECT_FALSE(a.is_prime);
  EXPECT_TRUE(a.is_primary);
  EXPECT_FALSE(a.s_prime.holds);
  EXPECT_TRUE(a.s_primary.holds);
  EXPECT_EQ(a.s_primary.witness, Elem{1});

  auto f = regular(6);
  auto b = classify(f.zero, mset(f.ring, {1, 3}));
  EXPECT_FALSE(b.is_prime);
  EXPECT_FALSE(b.is_primary);
  EXPECT_EQ(b.s_prime.witness, Elem{3});
  EXPECT_EQ(b.s_primary.witness, Elem{3});

  auto g = regular(4);
  auto c = classify(Submodule(g.module, ElementSet(4, {0, 2})), mset(g.ring, {1}));
  EXPECT_TRUE(c.is_prime);
  EXPECT_TRUE(c.is_primary);
  EXPECT_EQ(c.s_prime.witness, Elem{1});
  EXPECT_EQ(c.s_primary.witness, Elem{1});
  ASSERT_TRUE(c.variants.has_value());
  EXPECT_TRUE(c.variants->d.holds);

  auto na = classify(Submodule::whole(g.module), mset(g.ring, {1, 3}));
  EXPECT_FALSE(na.applicable);
  EXPECT_FALSE(na.reason.empty());
}

TEST(Report, WitnessPresentIffHolds) {
  for (int n = 2; n <= 8; ++n) {
    auto f = regular(n);
    for (const auto& s : enumerate_mult_closed(f.ring))
      for (const auto& p : enumerate_submodules(f.module)) {
        auto rep = classify(p, s);
        EXPECT_EQ(rep.s_prime.holds, rep.s_prime.witness.has_value());
        EXPECT_EQ(rep.s_primary.holds, rep.s_primary.witness.has_value());
        if (rep.s_prime.holds) EXPECT_TRUE(rep.s_primary.holds);
      }
  }
}

TEST(Report, RejectsForeignSet) {
  auto f = regular(4);
  auto other = make_zmod(6);
  EXPECT_THROW(classify(f.zero, mset(other, {1})), ConstructionError);
}
