#pragma once

#include <json.hpp>

#include "alg/module.hpp"
#include "alg/ring.hpp"

namespace alg {

using Json = nlohmann::json;

/// Integers stay integers; tuples become arrays.
Json encoding_to_json(const Encoding& e);
Encoding encoding_from_json(const Json& j);

/// Construction-tree descriptors, e.g. {"zmod":4} or
/// {"cyclic":{"ring":{"zmod":4},"order":2}}. Round-trips to an equal key.
Json ring_to_json(const Ring& r);
RingPtr ring_from_json(const Json& j);
Json module_to_json(const Module& m);
ModulePtr module_from_json(const Json& j);

Json elements_to_json(const Ring& r, const ElementSet& s);
Json elements_to_json(const Module& m, const ElementSet& s);
/// Decodes every entry; throws ConstructionError on an unknown element.
ElementSet elements_from_json(const Ring& r, const Json& j);
ElementSet elements_from_json(const Module& m, const Json& j);

}  // namespace alg
