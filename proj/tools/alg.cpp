#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "alg/cli.hpp"
#include "alg/verify.hpp"

namespace {

constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw alg::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const alg::Json& j) { std::cout << j.dump(2) << '\n'; }

int run_document(const std::string& path, bool json, bool serial) {
  const auto doc = alg::cli::parse_spec(read_file(path));
  const auto res = alg::cli::execute(doc, {!serial});
  if (res.exit_code == kInputError) {
    std::cerr << path << ':' << res.diagnostic << '\n';
    return res.exit_code;
  }
  if (json) emit(res.report);
  else std::cout << res.text;
  return res.exit_code;
}

alg::Family family_for(const alg::Property& p, std::size_t max_ring, std::size_t max_module, std::size_t sample,
                       std::uint64_t seed) {
  alg::Family f = p.default_family;
  if (max_ring) f.max_ring = max_ring;
  if (max_module) f.max_module = max_module;
  if (sample) {
    f.sampled = true;
    f.sample_size = sample;
    f.seed = seed;
  }
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-ring checks for S-primary submodules"};
  app.require_subcommand(1);

  std::string file;
  bool json = false, serial = false;

  auto* classify = app.add_subcommand("classify", "Run every query in a spec file");
  classify->add_option("file", file, "Spec file")->required();
  classify->add_flag("--json", json, "JSON report");
  classify->add_flag("--serial", serial, "Evaluate suite queries on one thread");

  auto* check = app.add_subcommand("check", "Parse a spec file only");
  check->add_option("file", file, "Spec file")->required();

  auto* print = app.add_subcommand("print", "Print a spec file in canonical form");
  print->add_option("file", file, "Spec file")->required();

  std::string property, target;
  std::size_t max_ring = 0, max_module = 0, sample = 0;
  std::uint64_t seed = 0;
  bool composite = false;

  auto* suite = app.add_subcommand("suite", "Run one property over its instance family");
  suite->add_option("--property", property, "Property name")->required();
  suite->add_option("--max-ring", max_ring, "Largest ring cardinality");
  suite->add_option("--max-module", max_module, "Largest module cardinality");
  suite->add_option("--sample", sample, "Evaluate a seeded sample of this many instances");
  suite->add_option("--seed", seed, "Sample seed");
  suite->add_flag("--serial", serial, "Single-threaded reference run");
  suite->add_flag("--json", json, "JSON report");

  auto* search = app.add_subcommand("search", "Bounded separation search");
  search->add_option("--target", target, "Search target")->required();
  search->add_option("--max-ring", max_ring, "Largest ring cardinality");
  search->add_option("--max-module", max_module, "Largest module cardinality");
  search->add_flag("--composite", composite, "Include product and idealization rings");
  search->add_flag("--json", json, "JSON report");

  auto* replay = app.add_subcommand("replay", "Re-run a property on a serialized instance or failure");
  replay->add_option("--property", property, "Property name")->required();
  replay->add_option("file", file, "JSON file")->required();

  auto* list = app.add_subcommand("list", "List properties and search targets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*classify) return run_document(file, json, serial);
    if (*check) {
      const auto doc = alg::cli::parse_spec(read_file(file));
      std::cout << file << ": ok, " << doc.nodes.size() << " nodes\n";
      return 0;
    }
    if (*print) {
      std::cout << alg::cli::print_spec(alg::cli::parse_spec(read_file(file)));
      return 0;
    }
    if (*suite) {
      const auto& p = alg::find_property(property);
      const auto fam = family_for(p, max_ring, max_module, sample, seed);
      const auto r = serial ? alg::run_suite_serial(p, fam) : alg::run_suite_parallel(p, fam);
      if (json) {
        emit(alg::suite_to_json(r));
      } else {
        std::cout << r.property << ": " << (r.pass() ? "PASS" : "FAIL") << ", " << r.instances << " instances ("
                  << r.nonvacuous << " non-vacuous), " << r.failures.size() << " failures, " << r.elapsed_seconds
                  << " s\n";
        for (const auto& f : r.failures) std::cout << "  " << f.detail << ": " << f.instance.dump() << '\n';
      }
      return r.pass() ? 0 : 1;
    }
    if (*search) {
      alg::Family fam;
      fam.name = composite ? "small-composite" : "zmod-cyclic";
      fam.composite = composite;
      if (max_ring) fam.max_ring = max_ring;
      if (max_module) fam.max_module = max_module;
      const auto r = alg::search_separation(target, fam);
      if (json) {
        emit(alg::search_to_json(r));
      } else if (r.found) {
        std::cout << r.target << ": found after " << r.checked << " instances: " << r.found->dump() << '\n';
      } else {
        std::cout << r.target << ": exhausted after " << r.checked << " instances\n";
      }
      return 0;
    }
    if (*replay) {
      const auto& p = alg::find_property(property);
      auto j = alg::Json::parse(read_file(file));
      if (j.contains("instance")) j = j.at("instance");
      const auto out = alg::replay(p, j);
      std::cout << p.name << ": " << (out.pass ? (out.vacuous ? "pass (vacuous)" : "pass") : "FAIL " + out.detail) << '\n';
      return out.pass ? 0 : 1;
    }
    if (*list) {
      for (const auto& p : alg::property_registry())
        std::cout << p.name << "  [" << p.default_family.name << "]  " << p.statement << '\n';
      for (const auto& t : alg::search_targets()) std::cout << "search: " << t << '\n';
      return 0;
    }
  } catch (const alg::cli::SpecError& e) {
    std::cerr << file << ':' << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}
