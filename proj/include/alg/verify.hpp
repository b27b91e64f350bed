#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alg/module.hpp"
#include "alg/ring.hpp"
#include "alg/serialize.hpp"

namespace alg {

/// Generator parameters. What the cardinality bounds range over depends on
/// the property (whole rings, or components of a product, ...).
struct Family {
  std::string name = "zmod-cyclic";
  std::size_t max_ring = 8;
  std::size_t max_module = 8;
  bool composite = false;  // add product/idealization rings, quotients and direct sums
  bool sampled = false;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
};

Json family_to_json(const Family& f);

/// A bag of objects; each property documents which slots it reads.
struct Instance {
  std::vector<ModulePtr> modules;
  std::vector<ModuleHom> homs;
  std::vector<Submodule> subs;
  std::vector<Ideal> ideals;
  std::vector<MultClosedSet> sets;
};

/// Subs and homs refer to modules by position; ideals and sets carry their
/// ring descriptor.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

struct CheckOutcome {
  bool vacuous = false;  // a hypothesis failed; counts as a pass
  bool pass = true;
  std::string detail;
};

struct Property {
  std::string name;
  std::string statement;
  Family default_family;
  std::function<std::vector<Instance>(const Family&)> generate;
  std::function<CheckOutcome(const Instance&)> check;
};

const std::vector<Property>& property_registry();
/// Throws Error for an unknown name.
const Property& find_property(std::string_view name);

struct Failure {
  Json instance;
  std::string detail;
};

struct SuiteResult {
  std::string property;
  Family family;
  std::size_t instances = 0;
  std::size_t nonvacuous = 0;
  std::vector<Failure> failures;  // canonical instance order
  double elapsed_seconds = 0;
  bool pass() const { return failures.empty(); }
};

/// Instances of the family, sampled down when requested. Throws CapExceeded
/// when a family bound is above the enumeration cap.
std::vector<Instance> suite_instances(const Property& p, const Family& f);

/// Reference evaluation, one instance after another.
SuiteResult run_suite_serial(const Property& p, const Family& f);
/// Same report, instances evaluated on an OpenMP team.
SuiteResult run_suite_parallel(const Property& p, const Family& f);

/// Elapsed time is left out so that reports compare byte for byte.
Json suite_to_json(const SuiteResult& r);

/// Re-runs one property on a serialized instance.
CheckOutcome replay(const Property& p, const Json& instance);

struct SearchResult {
  std::string target;
  std::optional<Json> found;
  bool exhausted = false;
  std::size_t checked = 0;
  bool revalidated = false;  // found instance re-tested after a JSON round trip
};

const std::vector<std::string>& search_targets();
/// First instance of the family in canonical order hitting the target.
/// Throws Error for an unknown target.
SearchResult search_separation(std::string_view target, const Family& f);
/// Whether a deserialized instance hits the target.
bool hits_target(std::string_view target, const Instance& inst);
Json search_to_json(const SearchResult& r);

}  // namespace alg
