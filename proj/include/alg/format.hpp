#pragma once

#include <string>

#include "alg/element_set.hpp"

namespace alg {

class Ring;
class Module;

/// "{e1,e2,...}" with canonical encodings in canonical order.
std::string format_elements(const Ring& r, const ElementSet& s);
std::string format_elements(const Module& m, const ElementSet& s);

}  // namespace alg
