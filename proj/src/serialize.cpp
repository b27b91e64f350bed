#include "alg/serialize.hpp"

#include "alg/localization.hpp"

namespace alg {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ConstructionError(std::string("descriptor is missing \"") + key + "\": " + j.dump());
  return j.at(key);
}

template <class Structure>
Json elements_json(const Structure& st, const ElementSet& s) {
  Json out = Json::array();
  s.for_each([&](Elem e) { out.push_back(encoding_to_json(st.encode(e))); });
  return out;
}

template <class Structure>
ElementSet decode_all(const Structure& st, const Json& j) {
  if (!j.is_array()) throw ConstructionError("element list must be an array: " + j.dump());
  ElementSet out(st.size());
  for (const auto& e : j) {
    auto x = st.decode(encoding_from_json(e));
    if (!x) throw ConstructionError("element " + e.dump() + " does not belong to " + st.key());
    out.insert(*x);
  }
  return out;
}

}  // namespace

Json encoding_to_json(const Encoding& e) {
  if (!e.is_tuple) return e.value;
  Json out = Json::array();
  for (const auto& x : e.items) out.push_back(encoding_to_json(x));
  return out;
}

Encoding encoding_from_json(const Json& j) {
  if (j.is_number_integer()) return Encoding::integer(j.get<std::int64_t>());
  if (j.is_array()) {
    std::vector<Encoding> items;
    for (const auto& x : j) items.push_back(encoding_from_json(x));
    return Encoding::tuple(std::move(items));
  }
  throw ConstructionError("element encoding must be an integer or an array: " + j.dump());
}

Json elements_to_json(const Ring& r, const ElementSet& s) { return elements_json(r, s); }
Json elements_to_json(const Module& m, const ElementSet& s) { return elements_json(m, s); }
ElementSet elements_from_json(const Ring& r, const Json& j) { return decode_all(r, j); }
ElementSet elements_from_json(const Module& m, const Json& j) { return decode_all(m, j); }

Json ring_to_json(const Ring& r) {
  switch (r.kind()) {
    case RingKind::Zmod:
      return {{"zmod", r.modulus()}};
    case RingKind::Product: {
      Json cs = Json::array();
      for (const auto& c : r.components()) cs.push_back(ring_to_json(*c));
      return {{"product", cs}};
    }
    case RingKind::Quotient:
      return {{"quotient", {{"base", ring_to_json(*r.base())}, {"ideal", elements_to_json(*r.base(), r.defining_set())}}}};
    case RingKind::Idealization:
      return {{"idealization", module_to_json(*r.carrier())}};
    case RingKind::Localized:
      return {{"localized", {{"base", ring_to_json(*r.base())}, {"set", elements_to_json(*r.base(), r.defining_set())}}}};
  }
  throw ConstructionError("unknown ring kind");
}

RingPtr ring_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw ConstructionError("ring descriptor must have exactly one key: " + j.dump());
  const std::string kind = j.begin().key();
  const Json& body = j.begin().value();
  if (kind == "zmod") {
    if (!body.is_number_integer()) throw ConstructionError("zmod modulus must be an integer");
    return make_zmod(body.get<std::int64_t>());
  }
  if (kind == "product") {
    if (!body.is_array()) throw ConstructionError("product components must be an array");
    std::vector<RingPtr> cs;
    for (const auto& c : body) cs.push_back(ring_from_json(c));
    return make_product_ring(std::move(cs));
  }
  if (kind == "quotient") {
    auto base = ring_from_json(field(body, "base"));
    return make_quotient_ring(Ideal(base, elements_from_json(*base, field(body, "ideal"))));
  }
  if (kind == "idealization") return make_idealization(module_from_json(body));
  if (kind == "localized") {
    auto base = ring_from_json(field(body, "base"));
    return localize_ring(validate_mult_closed(base, elements_from_json(*base, field(body, "set")))).ring;
  }
  throw ConstructionError("unknown ring kind \"" + kind + "\"");
}

Json module_to_json(const Module& m) {
  switch (m.kind()) {
    case ModuleKind::Regular:
      return {{"regular", ring_to_json(*m.ring())}};
    case ModuleKind::CyclicZmod:
      return {{"cyclic", {{"ring", ring_to_json(*m.ring())}, {"order", m.cyclic_order()}}}};
    case ModuleKind::Product:
    case ModuleKind::DirectSum: {
      Json cs = Json::array();
      for (const auto& c : m.components()) cs.push_back(module_to_json(*c));
      return {{m.kind() == ModuleKind::Product ? "product" : "direct_sum", cs}};
    }
    case ModuleKind::Quotient:
      return {{"quotient", {{"base", module_to_json(*m.base())}, {"sub", elements_to_json(*m.base(), m.defining_set())}}}};
    case ModuleKind::Submodule:
      return {{"submodule", {{"ambient", module_to_json(*m.base())}, {"elements", elements_to_json(*m.base(), m.defining_set())}}}};
    case ModuleKind::Localized: {
      const Ring& base_ring = *m.base()->ring();
      return {{"localized", {{"base", module_to_json(*m.base())}, {"set", elements_to_json(base_ring, m.defining_set())}}}};
    }
    case ModuleKind::OverQuotientRing: {
      const Ring& q = *m.ring();
      return {{"over_quotient", {{"module", module_to_json(*m.base())}, {"ideal", elements_to_json(*q.base(), q.defining_set())}}}};
    }
  }
  throw ConstructionError("unknown module kind");
}

ModulePtr module_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw ConstructionError("module descriptor must have exactly one key: " + j.dump());
  const std::string kind = j.begin().key();
  const Json& body = j.begin().value();
  if (kind == "regular") return make_regular(ring_from_json(body));
  if (kind == "cyclic") {
    const Json& order = field(body, "order");
    if (!order.is_number_integer()) throw ConstructionError("cyclic order must be an integer");
    return make_cyclic_zmod(ring_from_json(field(body, "ring")), order.get<std::int64_t>());
  }
  if (kind == "product" || kind == "direct_sum") {
    if (!body.is_array()) throw ConstructionError(kind + " components must be an array");
    std::vector<ModulePtr> cs;
    for (const auto& c : body) cs.push_back(module_from_json(c));
    return kind == "product" ? make_product_module(std::move(cs)) : make_direct_sum(std::move(cs));
  }
  if (kind == "quotient") {
    auto base = module_from_json(field(body, "base"));
    return quotient_module(Submodule(base, elements_from_json(*base, field(body, "sub")))).module;
  }
  if (kind == "submodule") {
    auto amb = module_from_json(field(body, "ambient"));
    return make_submodule_module(Submodule(amb, elements_from_json(*amb, field(body, "elements"))));
  }
  if (kind == "localized") {
    auto base = module_from_json(field(body, "base"));
    auto set = validate_mult_closed(base->ring(), elements_from_json(*base->ring(), field(body, "set")));
    return localize_module(base, set).module;
  }
  if (kind == "over_quotient") {
    auto base = module_from_json(field(body, "module"));
    Ideal i(base->ring(), elements_from_json(*base->ring(), field(body, "ideal")));
    return make_over_quotient_ring(base, make_quotient_ring(i));
  }
  throw ConstructionError("unknown module kind \"" + kind + "\"");
}

}  // namespace alg
