#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace alg {

/// Canonical element encoding: an integer residue, or a tuple of encodings.
struct Encoding {
  bool is_tuple = false;
  std::int64_t value = 0;
  std::vector<Encoding> items;

  static Encoding integer(std::int64_t v) { return Encoding{false, v, {}}; }
  static Encoding tuple(std::vector<Encoding> xs) { return Encoding{true, 0, std::move(xs)}; }

  friend bool operator==(const Encoding& a, const Encoding& b) {
    if (a.is_tuple != b.is_tuple) return false;
    return a.is_tuple ? a.items == b.items : a.value == b.value;
  }

  /// Lexicographic; integers sort before tuples.
  friend bool operator<(const Encoding& a, const Encoding& b) {
    if (a.is_tuple != b.is_tuple) return !a.is_tuple;
    if (!a.is_tuple) return a.value < b.value;
    return a.items < b.items;
  }

  std::string to_string() const {
    if (!is_tuple) return std::to_string(value);
    std::string s = "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) s += ",";
      s += items[i].to_string();
    }
    return s + ")";
  }
};

}  // namespace alg
