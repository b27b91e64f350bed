#include <gtest/gtest.h>

#include <set>

#include "alg/classify.hpp"
#include "alg/constructions.hpp"
#include "alg/localization.hpp"
#include "alg/verify.hpp"
#include "support.hpp"

using namespace alg;

namespace {

const Family kSpecFamily{"zmod-cyclic", 8, 8, false, false, 0, 0};

/// Size of the (M, P, S) family over Zmod(2..8), Regular plus Z/d, d | n,
/// counted from the plain-integer oracles.
std::size_t oracle_triple_count() {
  std::size_t total = 0;
  for (int n = 2; n <= 8; ++n) {
    const std::size_t sets = oracle::mult_closed_sets(n).size();
    std::size_t subs = oracle::submodules(n, n).size();
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) subs += oracle::submodules(n, d).size();
    total += subs * sets;
  }
  return total;
}

Submodule only_sub(const Instance& inst) { return inst.subs.at(0); }

}  // namespace

TEST(PropertyRegistry, ListsEveryResultOnce) {
  const std::vector<std::string> expected{
      "lem0.3-primary-s-primary", "thm1-equivalences", "prop4a-monotone-sets", "prop4b-saturation",
      "prop4c-localization", "prop6.1a-preimage", "prop6.1b-image", "cor7a-intersection", "cor7b-quotient",
      "prop8a-colon-ideal", "prop8b-multiplication-lift", "cor10-product-form", "cor11-rad-form",
      "lem13-faithful-multiplication", "thm14-multiplication", "prop15-intersection", "lem16-product-ideal",
      "thm17-product", "thm18-nfold-product", "lem19-colon-chain", "prop20-localization-colon",
      "thm21-colon-primary", "thm22-jacobson", "cor23-quasi-local", "prop24.1-idealization-primary",
      "thm25-idealization", "rem24b-radical", "rem12b-multiplication-criterion", "prop27-torsion-free",
      "prop29-quasi-torsion-free", "thm31-domain-degenerate"};
  std::vector<std::string> names;
  for (const auto& p : property_registry()) names.push_back(p.name);
  EXPECT_EQ(names, expected);
  EXPECT_THROW(find_property("no-such-result"), Error);
}

TEST(Suites, EveryPropertyPassesOnItsDefaultFamily) {
  for (const auto& p : property_registry()) {
    const auto r = run_suite_serial(p, p.default_family);
    EXPECT_TRUE(r.pass()) << p.name << ": " << (r.failures.empty() ? "" : r.failures[0].detail);
    EXPECT_GT(r.nonvacuous, 0U) << p.name;
  }
}

TEST(Suites, EquivalenceFamilyMatchesOracleCount) {
  const auto r = run_suite_serial(find_property("thm1-equivalences"), kSpecFamily);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.instances, oracle_triple_count());
}

TEST(Suites, DefaultEquivalenceFamilyIsLarge) {
  const auto& p = find_property("thm1-equivalences");
  EXPECT_GT(run_suite_serial(p, p.default_family).instances, 1000U);
}

TEST(Suites, SerialAndParallelReportsAreIdentical) {
  for (const auto& p : property_registry()) {
    const auto a = suite_to_json(run_suite_serial(p, p.default_family)).dump();
    const auto b = suite_to_json(run_suite_parallel(p, p.default_family)).dump();
    EXPECT_EQ(a, b) << p.name;
  }
}

TEST(Suites, FamiliesAboveTheCapAreRejected) {
  Family f = kSpecFamily;
  f.max_ring = 1000;
  EXPECT_THROW(run_suite_serial(find_property("thm1-equivalences"), f), CapExceeded);
}

TEST(Suites, SampledModeIsSeededAndOrdered) {
  const auto& p = find_property("prop4c-localization");
  Family f = p.default_family;
  const auto full = suite_instances(p, f);
  f.sampled = true;
  f.sample_size = 100;
  f.seed = 7;
  const auto a = suite_instances(p, f);
  const auto b = suite_instances(p, f);
  ASSERT_EQ(a.size(), 100U);
  std::vector<std::string> da, db, dfull;
  for (const auto& i : a) da.push_back(instance_to_json(i).dump());
  for (const auto& i : b) db.push_back(instance_to_json(i).dump());
  for (const auto& i : full) dfull.push_back(instance_to_json(i).dump());
  EXPECT_EQ(da, db);
  // the sample is a subsequence of the exhaustive order
  std::size_t k = 0;
  for (const auto& d : dfull)
    if (k < da.size() && d == da[k]) ++k;
  EXPECT_EQ(k, da.size());
  f.seed = 8;
  std::vector<std::string> dc;
  for (const auto& i : suite_instances(p, f)) dc.push_back(instance_to_json(i).dump());
  EXPECT_NE(da, dc);
}

TEST(Replay, FailuresAreReproducedFromTheirSerialization) {
  // A false claim (S-primary implies primary) must produce replayable failures.
  Property wrong = find_property("prop4c-localization");
  wrong.name = "s-primary-implies-primary";
  wrong.check = [](const Instance& in) {
    const auto v = is_s_primary(in.subs[0], in.sets[0]);
    if (!(v.applicable && v.holds)) return CheckOutcome{true, true, {}};
    if (is_primary_submodule(in.subs[0])) return CheckOutcome{};
    return CheckOutcome{false, false, "not primary"};
  };
  const auto r = run_suite_serial(wrong, wrong.default_family);
  ASSERT_FALSE(r.pass());
  for (const auto& f : r.failures) {
    const auto again = replay(wrong, Json::parse(f.instance.dump()));
    EXPECT_FALSE(again.pass);
    EXPECT_EQ(again.detail, f.detail);
  }
}

TEST(Replay, PassingInstancesReplayAsPasses) {
  const auto& p = find_property("thm17-product");
  for (const auto& inst : suite_instances(p, p.default_family)) {
    const auto direct = p.check(inst);
    const auto again = replay(p, instance_to_json(inst));
    ASSERT_EQ(direct.pass, again.pass);
    ASSERT_EQ(direct.vacuous, again.vacuous);
  }
}

TEST(Serialization, InstancesRoundTrip) {
  for (const char* name : {"prop6.1a-preimage", "thm18-nfold-product", "thm25-idealization", "lem16-product-ideal",
                           "cor7a-intersection", "prop4a-monotone-sets"}) {
    const auto& p = find_property(name);
    Family f = p.default_family;
    f.sampled = true;
    f.sample_size = 50;
    for (const auto& inst : suite_instances(p, f)) {
      const auto j = instance_to_json(inst);
      ASSERT_EQ(instance_to_json(instance_from_json(j)).dump(), j.dump()) << name;
    }
  }
}

TEST(Serialization, DescriptorsRoundTripForEveryKind) {
  const auto z4 = make_zmod(4), z6 = make_zmod(6);
  const auto reg6 = make_regular(z6);
  const auto s13 = validate_mult_closed(z6, ElementSet(6, {1, 3}));
  const auto half = as_submodule(principal_ideal(z6, 3), reg6);
  std::vector<RingPtr> rings{z4, make_product_ring({z4, make_zmod(2)}), make_quotient_ring(principal_ideal(z6, 2)),
                             idealize(make_cyclic_zmod(z4, 2)), localize_ring(s13).ring};
  for (const auto& r : rings) EXPECT_EQ(ring_from_json(ring_to_json(*r))->key(), r->key());
  std::vector<ModulePtr> mods{reg6,
                              make_cyclic_zmod(z4, 2),
                              make_product_module({make_regular(z4), make_cyclic_zmod(make_zmod(2), 2)}),
                              make_direct_sum({make_regular(z4), make_cyclic_zmod(z4, 2)}),
                              quotient_module(half).module,
                              make_submodule_module(half),
                              localize_module(reg6, s13).module,
                              make_over_quotient_ring(make_cyclic_zmod(z4, 2), make_quotient_ring(principal_ideal(z4, 2)))};
  for (const auto& m : mods) EXPECT_EQ(module_from_json(module_to_json(*m))->key(), m->key());
}

TEST(Serialization, MalformedDescriptorsAreRejected) {
  EXPECT_THROW(ring_from_json(Json::parse(R"({"zmod":"four"})")), ConstructionError);
  EXPECT_THROW(ring_from_json(Json::parse(R"({"field":4})")), ConstructionError);
  EXPECT_THROW(module_from_json(Json::parse(R"({"cyclic":{"ring":{"zmod":4},"order":3}})")), ConstructionError);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"modules":[{"regular":{"zmod":4}}],"subs":[{"module":0,"elements":[1]}]})")),
               ConstructionError);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"modules":[{"regular":{"zmod":4}}],"subs":[{"module":3,"elements":[0]}]})")),
               ConstructionError);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"modules":[],"sets":[{"ring":{"zmod":4},"elements":[0,1]}]})")),
               MultClosedError);
}

TEST(Search, FindsTheZ6SeparationFirst) {
  const auto r = search_separation("s-primary-not-primary", kSpecFamily);
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(r.revalidated);
  const auto inst = instance_from_json(*r.found);
  const auto p = only_sub(inst);
  EXPECT_EQ(p.module()->key(), make_regular(make_zmod(6))->key());
  EXPECT_EQ(testing_support::to_mask(p.elements()), oracle::bit(0));
  EXPECT_EQ(testing_support::to_mask(inst.sets[0].elements()), oracle::bit(1) | oracle::bit(3));
  // brute force: S-primary with witness 3, not primary
  EXPECT_EQ(oracle::s_witness(oracle::bit(0), oracle::bit(1) | oracle::bit(3), 6, 6, true), 3);
  EXPECT_FALSE(oracle::is_primary(oracle::bit(0), 6, 6));
}

TEST(Search, FindsAnSPrimaryNonSPrimeInstance) {
  const auto r = search_separation("s-primary-not-s-prime", kSpecFamily);
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(r.revalidated);
  const auto inst = instance_from_json(*r.found);
  const int n = static_cast<int>(inst.modules[0]->ring()->size());
  const int d = static_cast<int>(inst.modules[0]->size());
  const auto p = testing_support::to_mask(inst.subs[0].elements());
  const auto s = testing_support::to_mask(inst.sets[0].elements());
  EXPECT_GE(oracle::s_witness(p, s, n, d, true), 0);
  EXPECT_EQ(oracle::s_witness(p, s, n, d, false), -1);
}

TEST(Search, ConverseSearchTerminatesWithAConsistentReport) {
  const auto r = search_separation("converse-4c-failure", kSpecFamily);
  EXPECT_NE(r.exhausted, r.found.has_value());
  EXPECT_GT(r.checked, 0U);
  if (r.found) EXPECT_TRUE(hits_target("converse-4c-failure", instance_from_json(*r.found)));
}

TEST(Search, UnknownTargetIsAnError) { EXPECT_THROW(search_separation("nothing", kSpecFamily), Error); }

TEST(Suites, CompositeFamilyPropertiesHoldUpToTwelve) {
  for (const auto& p : property_registry()) {
    if (p.default_family.name != "small-composite" || p.name.rfind("prop6.1", 0) == 0) continue;
    Family f = p.default_family;
    f.max_ring = f.max_module = 12;
    const auto r = run_suite_parallel(p, f);
    EXPECT_TRUE(r.pass()) << p.name << ": " << (r.failures.empty() ? "" : r.failures[0].detail);
  }
}

TEST(Suites, EquivalenceFamilyHasBothOutcomes) {
  std::size_t yes = 0, no = 0;
  for (const auto& inst : suite_instances(find_property("thm1-equivalences"), kSpecFamily)) {
    const auto v = is_s_primary(inst.subs[0], inst.sets[0]);
    if (!v.applicable) continue;
    (v.holds ? yes : no) += 1;
  }
  EXPECT_GT(yes, 0U);
  EXPECT_GT(no, 0U);
}
