#include "alg/classify.hpp"
#include "alg/localization.hpp"
#include "families.hpp"

namespace alg {

namespace {

using Predicate = bool (*)(const Submodule&, const MultClosedSet&);

bool primary_gap(const Submodule& p, const MultClosedSet& s) {
  const auto v = is_s_primary(p, s);
  return v.applicable && v.holds && !is_primary_submodule(p);
}

bool prime_gap(const Submodule& p, const MultClosedSet& s) {
  const auto v = is_s_primary(p, s);
  return v.applicable && v.holds && !is_s_prime(p, s).holds;
}

bool converse_gap(const Submodule& p, const MultClosedSet& s) {
  if (!s_disjoint(p, s) || is_s_primary(p, s).holds) return false;
  const auto lm = localize_module(p.module(), s);
  return is_primary_submodule(localize_submodule(p, lm));
}

Predicate predicate_for(std::string_view target) {
  if (target == "s-primary-not-primary") return primary_gap;
  if (target == "s-primary-not-s-prime") return prime_gap;
  if (target == "converse-4c-failure") return converse_gap;
  throw Error("unknown search target \"" + std::string(target) + "\"");
}

}  // namespace

const std::vector<std::string>& search_targets() {
  static const std::vector<std::string> t{"s-primary-not-primary", "s-primary-not-s-prime", "converse-4c-failure"};
  return t;
}

bool hits_target(std::string_view target, const Instance& inst) {
  const auto pred = predicate_for(target);
  if (inst.subs.size() != 1 || inst.sets.size() != 1) throw ConstructionError("search instances hold one sub and one set");
  return pred(inst.subs[0], inst.sets[0]);
}

SearchResult search_separation(std::string_view target, const Family& f) {
  const auto pred = predicate_for(target);
  SearchResult out;
  out.target = std::string(target);
  for (const auto& m : verify_detail::all_family_modules(f)) {
    const auto sets = enumerate_mult_closed(m->ring());
    for (const auto& p : enumerate_submodules(m))
      for (const auto& s : sets) {
        ++out.checked;
        if (!pred(p, s)) continue;
        const Instance inst{{m}, {}, {p}, {}, {s}};
        out.found = instance_to_json(inst);
        out.revalidated = hits_target(target, instance_from_json(*out.found));
        return out;
      }
  }
  out.exhausted = true;
  return out;
}

Json search_to_json(const SearchResult& r) {
  Json j = {{"target", r.target}, {"exhausted", r.exhausted}, {"checked", r.checked}};
  j["found"] = r.found ? *r.found : Json(nullptr);
  j["revalidated"] = r.revalidated;
  return j;
}

}  // namespace alg
