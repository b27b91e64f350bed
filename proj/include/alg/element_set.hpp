#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace alg {

/// Index of an element in the canonical (lexicographic-by-encoding) order of
/// its ring or module.
using Elem = std::uint32_t;

/// Dynamic bitset over the element indices [0, universe).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Elem> elems) : ElementSet(universe) {
    for (Elem e : elems) insert(e);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (Elem e = 0; e < universe; ++e) s.insert(e);
    return s;
  }

  template <class Range>
  static ElementSet of(std::size_t universe, const Range& elems) {
    ElementSet s(universe);
    for (Elem e : elems) s.insert(e);
    return s;
  }

  std::size_t universe() const { return universe_; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool contains(Elem e) const {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1U) != 0;
  }

  void insert(Elem e) { words_[e >> 6] |= (std::uint64_t{1} << (e & 63)); }
  void erase(Elem e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  ElementSet operator&(const ElementSet& other) const {
    ElementSet r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
    return r;
  }

  ElementSet operator|(const ElementSet& other) const {
    ElementSet r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= other.words_[i];
    return r;
  }

  /// Complement within the universe.
  ElementSet operator~() const {
    ElementSet r(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    if (universe_ % 64 != 0 && !r.words_.empty())
      r.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    return r;
  }

  /// Least element, or universe() if empty.
  Elem first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return static_cast<Elem>(i * 64 + std::countr_zero(words_[i]));
    return static_cast<Elem>(universe_);
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(static_cast<Elem>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  /// Predicate over all members; stops at the first failure.
  template <class F>
  bool all_of(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        if (!f(static_cast<Elem>(i * 64 + std::countr_zero(w)))) return false;
        w &= w - 1;
      }
    }
    return true;
  }

  template <class F>
  bool any_of(F&& f) const {
    return !all_of([&](Elem e) { return !f(e); });
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Canonical order on sets: smaller cardinality first, then the ascending
  /// element lists compared lexicographically.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    const auto ea = a.elements(), eb = b.elements();
    return ea < eb;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 1000003U ^ static_cast<std::size_t>(w ^ (w >> 32));
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CanonicalLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const { return canonical_less(a, b); }
};

}  // namespace alg
