#include <map>
#include <sstream>
#include <variant>

#include "alg/classify.hpp"
#include "alg/cli.hpp"
#include "alg/format.hpp"
#include "alg/verify.hpp"

namespace alg::cli {

namespace {

using Value = std::variant<RingPtr, ModulePtr, MultClosedSet, Submodule>;

struct Env {
  std::map<std::string, Value> values;

  template <class T>
  const T& get(const std::string& name) const {
    return std::get<T>(values.at(name));
  }
};

ElementSet ring_elements(const Ring& r, const std::vector<Encoding>& es, const Node& n) {
  ElementSet out(r.size());
  for (const auto& e : es) {
    auto x = r.decode(e);
    if (!x) throw SpecError(n.loc, "element " + e.to_string() + " is not in ring " + r.key());
    out.insert(*x);
  }
  return out;
}

ElementSet module_elements(const Module& m, const std::vector<Encoding>& es, const Node& n) {
  ElementSet out(m.size());
  for (const auto& e : es) {
    auto x = m.decode(e);
    if (!x) throw SpecError(n.loc, "element " + e.to_string() + " is not in module " + m.key());
    out.insert(*x);
  }
  return out;
}

Value build(const Node& n, const Env& env) {
  switch (n.kind) {
    case NodeKind::Ring: {
      if (n.form == "zmod") return make_zmod(n.number);
      if (n.form == "product") {
        std::vector<RingPtr> cs;
        for (const auto& r : n.refs) cs.push_back(env.get<RingPtr>(r));
        return make_product_ring(std::move(cs));
      }
      if (n.form == "quotient") {
        const auto& r = env.get<RingPtr>(n.refs[0]);
        const auto& i = env.get<Submodule>(n.refs[1]);
        if (i.module()->kind() != ModuleKind::Regular || !same_ring(*i.ring(), *r))
          throw SpecError(n.loc, "'" + n.refs[1] + "' is not a submodule of the regular module over '" + n.refs[0] + "'");
        return make_quotient_ring(as_ideal(i));
      }
      const auto& r = env.get<RingPtr>(n.refs[0]);
      const auto& m = env.get<ModulePtr>(n.refs[1]);
      if (!same_ring(*m->ring(), *r)) throw SpecError(n.loc, "'" + n.refs[1] + "' is not a module over '" + n.refs[0] + "'");
      return make_idealization(m);
    }
    case NodeKind::Module: {
      if (n.form == "regular") return make_regular(env.get<RingPtr>(n.refs[0]));
      if (n.form == "cyclic") return make_cyclic_zmod(env.get<RingPtr>(n.refs[0]), n.number);
      if (n.form == "quotient") {
        const auto& m = env.get<ModulePtr>(n.refs[0]);
        const auto& s = env.get<Submodule>(n.refs[1]);
        if (!same_module(*s.module(), *m)) throw SpecError(n.loc, "'" + n.refs[1] + "' is not a submodule of '" + n.refs[0] + "'");
        return quotient_module(s).module;
      }
      std::vector<ModulePtr> cs;
      const std::size_t count = n.form == "direct_sum" ? n.refs.size() - 1 : n.refs.size();
      for (std::size_t i = 0; i < count; ++i) cs.push_back(env.get<ModulePtr>(n.refs[i]));
      if (n.form == "direct_sum") {
        const auto& r = env.get<RingPtr>(n.refs.back());
        for (std::size_t i = 0; i < count; ++i)
          if (!same_ring(*cs[i]->ring(), *r)) throw SpecError(n.loc, "'" + n.refs[i] + "' is not a module over '" + n.refs.back() + "'");
        return make_direct_sum(std::move(cs));
      }
      return make_product_module(std::move(cs));
    }
    case NodeKind::Set: {
      const auto& r = env.get<RingPtr>(n.refs[0]);
      return validate_mult_closed(r, ring_elements(*r, n.elements, n));
    }
    case NodeKind::Sub: {
      const auto& m = env.get<ModulePtr>(n.refs[0]);
      auto elems = module_elements(*m, n.elements, n);
      if (n.form == "gen") return generated_submodule(m, elems);
      return Submodule(m, std::move(elems));
    }
    case NodeKind::Query:
      break;
  }
  throw SpecError(n.loc, "not a declaration");
}

Json witness_json(const Ring& r, const SVerdict& v) {
  return v.witness ? encoding_to_json(r.encode(*v.witness)) : Json(nullptr);
}

Json verdict_json(const Ring& r, const SVerdict& v) {
  return {{"holds", v.applicable && v.holds}, {"witness", witness_json(r, v)}};
}

std::string verdict_text(const Ring& r, const SVerdict& v) {
  if (!v.applicable) return "n/a";
  if (!v.holds) return "false";
  return "true (s=" + r.encode(*v.witness).to_string() + ")";
}

Json instance_json(const Submodule& p, const MultClosedSet& s) {
  return instance_to_json(Instance{{p.module()}, {}, {p}, {}, {s}});
}

Family query_family(const Node& n, Family f) {
  for (const auto& [k, v] : n.options) {
    if (k == "maxring") f.max_ring = static_cast<std::size_t>(v);
    else if (k == "maxmod") f.max_module = static_cast<std::size_t>(v);
    else if (k == "composite") f.composite = v != 0;
    else if (k == "sample") {
      f.sampled = true;
      f.sample_size = static_cast<std::size_t>(v);
    } else if (k == "seed") f.seed = static_cast<std::uint64_t>(v);
  }
  return f;
}

struct QueryOutput {
  Json json;
  std::string text;
  bool suite_failed = false;
};

QueryOutput run_query(const Node& n, const Env& env, const ExecOptions& opts) {
  QueryOutput out;
  std::ostringstream text;
  text << std::boolalpha;
  if (n.form == "classify" || n.form == "s_primary" || n.form == "s_prime") {
    const auto& p = env.get<Submodule>(n.refs[0]);
    const auto& s = env.get<MultClosedSet>(n.refs[1]);
    if (!same_ring(*p.ring(), *s.ring()))
      throw SpecError(n.loc, "'" + n.refs[1] + "' is over a different ring than '" + n.refs[0] + "'");
    const Ring& r = *s.ring();
    out.json = {{"kind", n.form}, {"sub", n.refs[0]}, {"set", n.refs[1]}, {"instance", instance_json(p, s)}};
    text << n.form << ' ' << n.refs[0] << ' ' << n.refs[1] << ":";
    if (n.form == "classify") {
      const auto rep = classify(p, s);
      out.json["applicable"] = rep.applicable;
      out.json["prime"] = rep.is_prime;
      out.json["primary"] = rep.is_primary;
      out.json["s_prime"] = verdict_json(r, rep.s_prime);
      out.json["s_primary"] = verdict_json(r, rep.s_primary);
      if (rep.variants)
        out.json["variants"] = {{"b", rep.variants->b.holds}, {"c", rep.variants->c.holds}, {"d", rep.variants->d.holds}};
      else
        out.json["variants"] = nullptr;
      text << " prime=" << (rep.is_prime ? "true" : "false") << " primary=" << (rep.is_primary ? "true" : "false");
      if (!rep.applicable) {
        out.json["reason"] = rep.reason;
        text << " S-conditions n/a (" << rep.reason << ")";
      } else {
        text << " s_prime=" << verdict_text(r, rep.s_prime) << " s_primary=" << verdict_text(r, rep.s_primary);
        if (rep.variants)
          text << " variants b=" << rep.variants->b.holds << " c=" << rep.variants->c.holds << " d=" << rep.variants->d.holds;
        else
          text << " variants skipped (lattice above cap)";
      }
    } else {
      const auto v = n.form == "s_primary" ? is_s_primary(p, s) : is_s_prime(p, s);
      out.json["applicable"] = v.applicable;
      out.json["holds"] = v.applicable && v.holds;
      out.json["witness"] = witness_json(r, v);
      text << ' ' << verdict_text(r, v);
    }
  } else if (n.form == "suite") {
    const auto& prop = find_property(n.target);
    const auto fam = query_family(n, prop.default_family);
    const auto res = opts.parallel ? run_suite_parallel(prop, fam) : run_suite_serial(prop, fam);
    out.json = suite_to_json(res);
    out.json["kind"] = "suite";
    out.suite_failed = !res.pass();
    text << "suite " << res.property << ": " << (res.pass() ? "PASS" : "FAIL") << ", " << res.instances
         << " instances (" << res.nonvacuous << " non-vacuous), " << res.failures.size() << " failures";
    for (const auto& f : res.failures) text << "\n  " << f.detail << ": " << f.instance.dump();
  } else {
    const auto fam = query_family(n, Family{});
    const auto res = search_separation(n.target, fam);
    out.json = search_to_json(res);
    out.json["kind"] = "search";
    text << "search " << res.target << ": ";
    if (res.found) text << "found after " << res.checked << " instances: " << res.found->dump();
    else text << "exhausted after " << res.checked << " instances";
  }
  out.text = text.str();
  return out;
}

}  // namespace

ExecResult execute(const SpecDocument& doc, const ExecOptions& opts) {
  ExecResult res;
  Env env;
  Json queries = Json::array();
  const Node* current = nullptr;
  try {
    for (const Node& n : doc.nodes) {
      current = &n;
      if (n.kind != NodeKind::Query) {
        env.values.insert_or_assign(n.name, build(n, env));
        continue;
      }
      auto q = run_query(n, env, opts);
      queries.push_back(std::move(q.json));
      res.text += q.text + '\n';
      if (q.suite_failed) res.exit_code = 1;
    }
  } catch (const SpecError& e) {
    res.exit_code = 2;
    res.diagnostic = e.what();
  } catch (const Error& e) {
    res.exit_code = 2;
    const Location loc = current ? current->loc : Location{};
    res.diagnostic = SpecError(loc, e.what()).what();
  }
  res.report = {{"queries", queries}};
  return res;
}

}  // namespace alg::cli
