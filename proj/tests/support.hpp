#pragma once

#include <algorithm>
#include <vector>

#include "alg/element_set.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Mask to_mask(const alg::ElementSet& s) {
  oracle::Mask m = 0;
  s.for_each([&](alg::Elem e) { m |= oracle::bit(static_cast<int>(e)); });
  return m;
}

inline alg::ElementSet from_mask(oracle::Mask m, std::size_t n) {
  alg::ElementSet s(n);
  for (std::size_t x = 0; x < n; ++x)
    if (oracle::has(m, static_cast<int>(x))) s.insert(static_cast<alg::Elem>(x));
  return s;
}

template <class Range>
std::vector<oracle::Mask> sorted_masks(const Range& sets) {
  std::vector<oracle::Mask> out;
  for (const auto& s : sets) out.push_back(to_mask(s.elements()));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<oracle::Mask> sorted(std::vector<oracle::Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace testing_support
