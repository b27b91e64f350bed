#include <gtest/gtest.h>

#include <set>

#include "alg/limits.hpp"
#include "alg/module.hpp"
#include "alg/ring.hpp"
#include "support.hpp"

using namespace alg;
using testing_support::from_mask;
using testing_support::sorted;
using testing_support::sorted_masks;
using testing_support::to_mask;

namespace {

ElementSet set_of(const RingPtr& r, std::initializer_list<Elem> xs) { return ElementSet(r->size(), xs); }

Elem pair_elem(const RingPtr& r, Elem a, Elem m) { return r->make_pair(a, m); }

}  // namespace

TEST(Zmod, ArithmeticMatchesIntegers) {
  for (int n = 2; n <= 12; ++n) {
    auto r = make_zmod(n);
    ASSERT_EQ(r->size(), static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      EXPECT_EQ(r->neg(a), static_cast<Elem>((n - a) % n));
      EXPECT_EQ(r->encode(a).value, a);
      for (int b = 0; b < n; ++b) {
        EXPECT_EQ(r->add(a, b), static_cast<Elem>((a + b) % n));
        EXPECT_EQ(r->mul(a, b), static_cast<Elem>((a * b) % n));
      }
    }
  }
}

TEST(Zmod, RejectsSmallModulus) {
  EXPECT_THROW(make_zmod(1), ConstructionError);
  EXPECT_THROW(make_zmod(0), ConstructionError);
  EXPECT_THROW(make_zmod(-3), ConstructionError);
}

TEST(Zmod, DecodeIsStrict) {
  auto r = make_zmod(4);
  EXPECT_EQ(r->decode(Encoding::integer(3)), Elem{3});
  EXPECT_FALSE(r->decode(Encoding::integer(4)).has_value());
  EXPECT_FALSE(r->decode(Encoding::integer(-1)).has_value());
  EXPECT_FALSE(r->decode(Encoding::tuple({Encoding::integer(1)})).has_value());
}

TEST(ProductRing, CardinalityAndComponentwiseOps) {
  auto r = make_product_ring({make_zmod(4), make_zmod(2)});
  ASSERT_EQ(r->size(), 8U);
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      const int a1 = static_cast<int>(r->coordinate(x, 0)), a2 = static_cast<int>(r->coordinate(x, 1));
      const int b1 = static_cast<int>(r->coordinate(y, 0)), b2 = static_cast<int>(r->coordinate(y, 1));
      const Elem sum[] = {static_cast<Elem>((a1 + b1) % 4), static_cast<Elem>((a2 + b2) % 2)};
      const Elem prod[] = {static_cast<Elem>((a1 * b1) % 4), static_cast<Elem>((a2 * b2) % 2)};
      EXPECT_EQ(r->add(x, y), r->from_coordinates(sum));
      EXPECT_EQ(r->mul(x, y), r->from_coordinates(prod));
    }
  EXPECT_EQ(r->encode(r->one()).to_string(), "(1,1)");
  EXPECT_EQ(r->encode(5).to_string(), "(2,1)");
}

TEST(ProductRing, CanonicalOrderIsEncodingOrder) {
  auto r = make_product_ring({make_zmod(3), make_product_ring({make_zmod(2), make_zmod(2)})});
  for (Elem x = 0; x + 1 < r->size(); ++x) EXPECT_LT(r->encode(x), r->encode(x + 1));
}

TEST(Idealization, SquareOfOneOne) {
  auto base = make_zmod(2);
  auto r = make_idealization(make_cyclic_zmod(base, 2));
  ASSERT_EQ(r->size(), 4U);
  const Elem x = pair_elem(r, 1, 1);
  EXPECT_EQ(r->mul(x, x), pair_elem(r, 1, 0));
  EXPECT_EQ(r->encode(x).to_string(), "(1,1)");
  EXPECT_EQ(ring_units(*r), set_of(r, {pair_elem(r, 1, 0), pair_elem(r, 1, 1)}));
}

TEST(Idealization, MultiplicationFormula) {
  // (a,m)(b,n) = (ab, an + bm) over Z4 with M = Z/2.
  auto base = make_zmod(4);
  auto r = make_idealization(make_cyclic_zmod(base, 2));
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 2; ++m)
      for (int b = 0; b < 4; ++b)
        for (int n = 0; n < 2; ++n) {
          const Elem lhs = r->mul(r->make_pair(a, m), r->make_pair(b, n));
          EXPECT_EQ(lhs, r->make_pair((a * b) % 4, (a * n + b * m) % 2));
        }
}

TEST(Units, Examples) {
  EXPECT_EQ(ring_units(*make_zmod(4)), ElementSet(4, {1, 3}));
  EXPECT_EQ(ring_units(*make_zmod(6)), ElementSet(6, {1, 5}));
}

TEST(Units, MatchGcdOracle) {
  for (int n = 2; n <= 30; ++n) EXPECT_EQ(to_mask(ring_units(*make_zmod(n))), oracle::units(n)) << n;
}

TEST(Ideals, Examples) {
  EXPECT_EQ(enumerate_ideals(make_zmod(6)).size(), 4U);
  EXPECT_EQ(enumerate_ideals(make_zmod(4)).size(), 3U);
  for (int p : {2, 3, 5, 7, 11, 13}) {
    auto ideals = enumerate_ideals(make_zmod(p));
    ASSERT_EQ(ideals.size(), 2U);
    EXPECT_EQ(ideals[0].size(), 1U);
    EXPECT_FALSE(ideals[1].is_proper());
  }
}

TEST(Ideals, LatticeMatchesSubsetOracle) {
  for (int n = 2; n <= 16; ++n) {
    auto r = make_zmod(n);
    EXPECT_EQ(sorted_masks(enumerate_ideals(r)), sorted(oracle::ideals(n))) << n;
  }
}

TEST(Ideals, CanonicalOrderAndNoDuplicates) {
  auto ideals = enumerate_ideals(make_zmod(12));
  for (std::size_t i = 0; i + 1 < ideals.size(); ++i)
    EXPECT_TRUE(canonical_less(ideals[i].elements(), ideals[i + 1].elements()));
}

TEST(Ideals, ValidatingConstructorRejects) {
  auto r = make_zmod(6);
  EXPECT_THROW(Ideal(r, set_of(r, {0, 2})), ConstructionError);
  EXPECT_THROW(Ideal(r, set_of(r, {2, 4})), ConstructionError);
  EXPECT_NO_THROW(Ideal(r, set_of(r, {0, 2, 4})));
}

TEST(Ideals, ProductLatticeIsProductOfComponentLattices) {
  const std::vector<std::vector<int>> shapes = {{2, 2}, {2, 4}, {4, 2}, {2, 3}, {3, 4}, {4, 4}, {2, 2, 2}};
  for (const auto& shape : shapes) {
    std::vector<RingPtr> comps;
    for (int n : shape) comps.push_back(make_zmod(n));
    auto r = make_product_ring(comps);
    // Intersect full with the cylinder of each coordinate's ideal.
    std::vector<ElementSet> acc{r->all()};
    for (std::size_t i = 0; i < comps.size(); ++i) {
      std::vector<ElementSet> next;
      for (const auto& partial : acc)
        for (const auto& ci : enumerate_ideals(comps[i])) {
          ElementSet s(r->size());
          partial.for_each([&](Elem x) {
            if (ci.contains(r->coordinate(x, i))) s.insert(x);
          });
          next.push_back(s);
        }
      acc = std::move(next);
    }
    std::set<ElementSet, CanonicalLess> want(acc.begin(), acc.end());
    const auto& got = r->ideal_sets();
    EXPECT_EQ(std::vector<ElementSet>(want.begin(), want.end()), got) << r->key();
  }
}

TEST(Spectrum, Examples) {
  auto sp6 = ideal_spectrum(make_zmod(6));
  ASSERT_EQ(sp6.primes.size(), 2U);
  EXPECT_EQ(sp6.primes[0].elements(), ElementSet(6, {0, 3}));
  EXPECT_EQ(sp6.primes[1].elements(), ElementSet(6, {0, 2, 4}));
  EXPECT_EQ(sp6.maximals.size(), 2U);
  EXPECT_EQ(sp6.jacobson.elements(), ElementSet(6, {0}));

  auto sp4 = ideal_spectrum(make_zmod(4));
  ASSERT_EQ(sp4.primes.size(), 1U);
  EXPECT_EQ(sp4.primes[0].elements(), ElementSet(4, {0, 2}));
  ASSERT_EQ(sp4.maximals.size(), 1U);
  EXPECT_EQ(sp4.jacobson.elements(), ElementSet(4, {0, 2}));

  auto sp5 = ideal_spectrum(make_zmod(5));
  ASSERT_EQ(sp5.primes.size(), 1U);
  EXPECT_EQ(sp5.primes[0].elements(), ElementSet(5, {0}));
  EXPECT_EQ(sp5.jacobson.elements(), ElementSet(5, {0}));
}

TEST(Spectrum, MaximalsArePrimeAndJacobsonRecomputes) {
  std::vector<RingPtr> rings;
  for (int n = 2; n <= 24; ++n) rings.push_back(make_zmod(n));
  rings.push_back(make_product_ring({make_zmod(2), make_zmod(4)}));
  rings.push_back(make_idealization(make_cyclic_zmod(make_zmod(4), 2)));
  for (const auto& r : rings) {
    auto sp = ideal_spectrum(r);
    ElementSet jac = r->all();
    for (const auto& m : sp.maximals) {
      EXPECT_TRUE(is_prime_ideal(m)) << r->key();
      jac = jac & m.elements();
    }
    EXPECT_EQ(jac, sp.jacobson.elements());
  }
}

TEST(Spectrum, ZmodPrimesAreGeneratedByPrimeDivisors) {
  for (int n = 2; n <= 30; ++n) {
    auto sp = ideal_spectrum(make_zmod(n));
    std::vector<oracle::Mask> want;
    for (int p = 2; p <= n; ++p) {
      bool prime = true;
      for (int q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
      if (!prime || n % p != 0) continue;
      oracle::Mask m = 0;
      for (int x = 0; x < n; x += p) m |= oracle::bit(x);
      want.push_back(m);
    }
    EXPECT_EQ(sorted_masks(sp.primes), sorted(want)) << n;
    EXPECT_EQ(sorted_masks(sp.maximals), sorted(want)) << n;
  }
}

TEST(Radical, Examples) {
  auto z4 = make_zmod(4);
  EXPECT_EQ(radical_ideal(Ideal::zero(z4)).elements(), ElementSet(4, {0, 2}));
  auto z6 = make_zmod(6);
  EXPECT_EQ(radical_ideal(Ideal::zero(z6)).elements(), ElementSet(6, {0}));
  EXPECT_EQ(radical_ideal(Ideal::unit(z6)).elements(), z6->all());
}

TEST(Radical, IdempotentMonotoneExtensive) {
  for (int n = 2; n <= 24; ++n) {
    auto r = make_zmod(n);
    auto ideals = enumerate_ideals(r);
    for (const auto& i : ideals) {
      const Ideal rad = radical_ideal(i);
      EXPECT_EQ(to_mask(rad.elements()), oracle::radical(to_mask(i.elements()), n));
      EXPECT_TRUE(i.is_subset_of(rad));
      EXPECT_EQ(radical_ideal(rad), rad);
      for (const auto& j : ideals)
        if (i.is_subset_of(j)) EXPECT_TRUE(rad.is_subset_of(radical_ideal(j)));
    }
  }
}

TEST(MultClosed, ValidateExamples) {
  auto z4 = make_zmod(4);
  EXPECT_NO_THROW(validate_mult_closed(z4, ElementSet(4, {1, 3})));
  auto z6 = make_zmod(6);
  EXPECT_NO_THROW(validate_mult_closed(z6, ElementSet(6, {1, 3})));
  try {
    validate_mult_closed(z6, ElementSet(6, {1, 2}));
    FAIL() << "expected MultClosedError";
  } catch (const MultClosedError& e) {
    EXPECT_EQ(e.violation().axiom, MultClosedViolation::Axiom::NotClosed);
    EXPECT_EQ(e.violation().a, 2U);
    EXPECT_EQ(e.violation().b, 2U);
    EXPECT_NE(std::string(e.what()).find("4"), std::string::npos);
  }
}

TEST(MultClosed, DiagnosticsNameTheAxiom) {
  auto z6 = make_zmod(6);
  using A = MultClosedViolation::Axiom;
  EXPECT_EQ(check_mult_closed(*z6, ElementSet(6, {3}))->axiom, A::MissingOne);
  EXPECT_EQ(check_mult_closed(*z6, ElementSet(6, {0, 1}))->axiom, A::ContainsZero);
  EXPECT_EQ(check_mult_closed(*z6, ElementSet(4, {1}))->axiom, A::OutOfRange);
  EXPECT_FALSE(check_mult_closed(*z6, ElementSet(6, {1, 5})).has_value());
}

TEST(MultClosed, EnumerationMatchesSubsetFilter) {
  for (int n = 2; n <= 12; ++n) {
    auto r = make_zmod(n);
    auto sets = enumerate_mult_closed(r);
    EXPECT_EQ(sorted_masks(sets), sorted(oracle::mult_closed_sets(n))) << n;
    for (std::size_t i = 0; i + 1 < sets.size(); ++i)
      EXPECT_TRUE(canonical_less(sets[i].elements(), sets[i + 1].elements()));
  }
}

TEST(MultClosed, PrimeComplement) {
  auto r = make_zmod(6);
  auto s = prime_complement(Ideal(r, ElementSet(6, {0, 2, 4})));
  EXPECT_EQ(s.elements(), ElementSet(6, {1, 3, 5}));
  EXPECT_THROW(prime_complement(Ideal::zero(r)), ConstructionError);
}

TEST(Quotient, ClassesAndDecode) {
  auto z6 = make_zmod(6);
  auto q = make_quotient_ring(Ideal(z6, ElementSet(6, {0, 2, 4})));
  ASSERT_EQ(q->size(), 2U);
  EXPECT_EQ(q->encode(0).to_string(), "0");
  EXPECT_EQ(q->encode(1).to_string(), "1");
  EXPECT_EQ(q->decode(Encoding::integer(5)), Elem{1});
  EXPECT_EQ(q->mul(1, 1), 1U);
  EXPECT_EQ(q->representative(1), 1U);
  EXPECT_THROW(make_quotient_ring(Ideal::unit(z6)), ConstructionError);
}

TEST(Audit, RejectsBrokenTables) {
  detail::RingData d;
  d.kind = RingKind::Zmod;
  d.size = 2;
  d.modulus = 2;
  d.add = {0, 1, 1, 0};
  d.mul = {0, 0, 0, 0};  // 1·1 = 0 breaks the identity law
  d.neg = {0, 1};
  d.zero = 0;
  d.one = 1;
  d.encodings = {Encoding::integer(0), Encoding::integer(1)};
  d.key = "broken";
  EXPECT_THROW(Ring{std::move(d)}, ConstructionError);
}

TEST(Limits, CapIsEnforced) {
  const Limits saved = limits();
  Limits small = saved;
  small.enumeration_cap = 8;
  set_limits(small);
  EXPECT_THROW(enumerate_ideals(make_zmod(9)), CapExceeded);
  EXPECT_THROW(enumerate_mult_closed(make_zmod(9)), CapExceeded);
  EXPECT_NO_THROW(enumerate_ideals(make_zmod(8)));
  set_limits(saved);
  EXPECT_EQ(enumerate_ideals(make_zmod(9)).size(), 3U);
}

TEST(IdealOps, ColonSumProduct) {
  auto r = make_zmod(12);
  const Ideal two = principal_ideal(r, 2), three = principal_ideal(r, 3);
  EXPECT_FALSE(ideal_sum(two, three).is_proper());
  EXPECT_EQ(ideal_product(two, three).elements(), principal_ideal(r, 6).elements());
  EXPECT_EQ(ideal_intersection(two, three).elements(), principal_ideal(r, 6).elements());
  EXPECT_EQ(ideal_colon(Ideal::zero(r), 4).elements(), principal_ideal(r, 3).elements());
  EXPECT_EQ(generated_ideal(r, ElementSet(12, {4, 6})).elements(), two.elements());
}

TEST(IdealPredicates, PrimaryAndDomain) {
  for (int n = 2; n <= 24; ++n) {
    auto r = make_zmod(n);
    for (const auto& i : enumerate_ideals(r)) {
      const auto m = to_mask(i.elements());
      EXPECT_EQ(is_prime_ideal(i), oracle::is_prime(m, n, n)) << n;
      EXPECT_EQ(is_primary_ideal(i), oracle::is_primary(m, n, n)) << n;
    }
    int divisors = 0;
    for (int p = 2; p < n; ++p) divisors += n % p == 0;
    EXPECT_EQ(is_integral_domain(r), divisors == 0) << n;
  }
}
