#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "alg/limits.hpp"
#include "alg/verify.hpp"

namespace alg {

namespace {

std::size_t module_index(const Instance& inst, const Module& m) {
  for (std::size_t i = 0; i < inst.modules.size(); ++i)
    if (same_module(*inst.modules[i], m)) return i;
  throw Error("instance references a module outside its module list: " + m.key());
}

const ModulePtr& module_at(const std::vector<ModulePtr>& mods, const Json& idx) {
  if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= mods.size())
    throw ConstructionError("bad module index " + idx.dump());
  return mods[idx.get<std::size_t>()];
}

const Json& array_or_empty(const Json& j, const char* key) {
  static const Json empty = Json::array();
  return j.contains(key) ? j.at(key) : empty;
}

void require_caps(const Family& f) {
  const auto cap = limits().enumeration_cap;
  if (f.max_ring > cap) throw CapExceeded("family ring bound", f.max_ring, cap);
  if (f.max_module > cap) throw CapExceeded("family module bound", f.max_module, cap);
}

CheckOutcome guarded(const Property& p, const Instance& inst) {
  try {
    return p.check(inst);
  } catch (const std::exception& e) {
    return CheckOutcome{false, false, std::string("exception: ") + e.what()};
  }
}

SuiteResult collect(const Property& p, const Family& f, const std::vector<Instance>& insts,
                    const std::vector<CheckOutcome>& outs, double elapsed) {
  SuiteResult r;
  r.property = p.name;
  r.family = f;
  r.instances = insts.size();
  r.elapsed_seconds = elapsed;
  for (std::size_t i = 0; i < insts.size(); ++i) {
    if (!outs[i].vacuous) ++r.nonvacuous;
    if (!outs[i].pass) r.failures.push_back(Failure{instance_to_json(insts[i]), outs[i].detail});
  }
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Json family_to_json(const Family& f) {
  Json j = {{"name", f.name},
            {"max_ring", f.max_ring},
            {"max_module", f.max_module},
            {"composite", f.composite},
            {"mode", f.sampled ? "sampled" : "exhaustive"}};
  if (f.sampled) {
    j["sample_size"] = f.sample_size;
    j["seed"] = f.seed;
  }
  return j;
}

Json instance_to_json(const Instance& inst) {
  Json j = Json::object();
  Json mods = Json::array();
  for (const auto& m : inst.modules) mods.push_back(module_to_json(*m));
  j["modules"] = mods;
  if (!inst.homs.empty()) {
    Json hs = Json::array();
    for (const auto& h : inst.homs) {
      Json images = Json::array();
      for (Elem x : h.images()) images.push_back(encoding_to_json(h.codomain()->encode(x)));
      hs.push_back({{"domain", module_index(inst, *h.domain())},
                    {"codomain", module_index(inst, *h.codomain())},
                    {"images", images}});
    }
    j["homs"] = hs;
  }
  if (!inst.subs.empty()) {
    Json ss = Json::array();
    for (const auto& s : inst.subs)
      ss.push_back({{"module", module_index(inst, *s.module())}, {"elements", elements_to_json(*s.module(), s.elements())}});
    j["subs"] = ss;
  }
  if (!inst.ideals.empty()) {
    Json is = Json::array();
    for (const auto& i : inst.ideals)
      is.push_back({{"ring", ring_to_json(*i.ring())}, {"elements", elements_to_json(*i.ring(), i.elements())}});
    j["ideals"] = is;
  }
  if (!inst.sets.empty()) {
    Json ss = Json::array();
    for (const auto& s : inst.sets)
      ss.push_back({{"ring", ring_to_json(*s.ring())}, {"elements", elements_to_json(*s.ring(), s.elements())}});
    j["sets"] = ss;
  }
  return j;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("modules")) throw ConstructionError("instance must be an object with \"modules\"");
  Instance inst;
  for (const auto& m : j.at("modules")) inst.modules.push_back(module_from_json(m));
  for (const auto& h : array_or_empty(j, "homs")) {
    const auto& dom = module_at(inst.modules, h.at("domain"));
    const auto& cod = module_at(inst.modules, h.at("codomain"));
    const auto& images = h.at("images");
    if (!images.is_array() || images.size() != dom->size())
      throw ConstructionError("hom image table must list one image per domain element");
    std::vector<Elem> table;
    for (const auto& e : images) {
      auto x = cod->decode(encoding_from_json(e));
      if (!x) throw ConstructionError("hom image " + e.dump() + " is not in the codomain");
      table.push_back(*x);
    }
    inst.homs.emplace_back(dom, cod, std::move(table));
  }
  for (const auto& s : array_or_empty(j, "subs")) {
    const auto& m = module_at(inst.modules, s.at("module"));
    inst.subs.emplace_back(m, elements_from_json(*m, s.at("elements")));
  }
  for (const auto& i : array_or_empty(j, "ideals")) {
    auto r = ring_from_json(i.at("ring"));
    auto elems = elements_from_json(*r, i.at("elements"));
    inst.ideals.emplace_back(std::move(r), std::move(elems));
  }
  for (const auto& s : array_or_empty(j, "sets")) {
    auto r = ring_from_json(s.at("ring"));
    auto elems = elements_from_json(*r, s.at("elements"));
    inst.sets.push_back(validate_mult_closed(r, elems));
  }
  return inst;
}

std::vector<Instance> suite_instances(const Property& p, const Family& f) {
  require_caps(f);
  auto all = p.generate(f);
  if (!f.sampled || f.sample_size >= all.size()) return all;
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(f.seed);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(f.sample_size);
  std::sort(order.begin(), order.end());
  std::vector<Instance> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(std::move(all[i]));
  return out;
}

SuiteResult run_suite_serial(const Property& p, const Family& f) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto insts = suite_instances(p, f);
  std::vector<CheckOutcome> outs;
  outs.reserve(insts.size());
  for (const auto& inst : insts) outs.push_back(guarded(p, inst));
  return collect(p, f, insts, outs, seconds_since(t0));
}

SuiteResult run_suite_parallel(const Property& p, const Family& f) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto insts = suite_instances(p, f);
  std::vector<CheckOutcome> outs(insts.size());
  const auto n = static_cast<std::ptrdiff_t>(insts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) outs[static_cast<std::size_t>(i)] = guarded(p, insts[static_cast<std::size_t>(i)]);
  return collect(p, f, insts, outs, seconds_since(t0));
}

Json suite_to_json(const SuiteResult& r) {
  Json fs = Json::array();
  for (const auto& f : r.failures) fs.push_back({{"instance", f.instance}, {"detail", f.detail}});
  return {{"property", r.property},
          {"family", family_to_json(r.family)},
          {"instances", r.instances},
          {"nonvacuous", r.nonvacuous},
          {"pass", r.pass()},
          {"failures", fs}};
}

CheckOutcome replay(const Property& p, const Json& instance) { return guarded(p, instance_from_json(instance)); }

}  // namespace alg
