#include "alg/format.hpp"

#include "alg/module.hpp"
#include "alg/ring.hpp"

namespace alg {

namespace {

template <class Structure>
std::string braced(const Structure& st, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem e) {
    if (!first) out += ",";
    first = false;
    out += st.encode(e).to_string();
  });
  return out + "}";
}

}  // namespace

std::string format_elements(const Ring& r, const ElementSet& s) { return braced(r, s); }
std::string format_elements(const Module& m, const ElementSet& s) { return braced(m, s); }

}  // namespace alg
