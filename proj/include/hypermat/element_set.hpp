// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "hypermat/errors.hpp"

namespace hypermat {

/// A subset of a fixed universe 0..n-1, stored as a bitset. Unused high bits
/// of the last word are kept at zero, so equality and hashing are word-wise.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : n_(universe), w_((universe + 63) / 64, 0) {
    if (universe < 0) throw OutOfRange("negative universe");
  }

  static ElementSet of(int universe, std::initializer_list<int> xs) {
    ElementSet s(universe);
    for (int x : xs) s.set(x);
    return s;
  }

  template <typename Container>
  static ElementSet from_indices(int universe, const Container& xs) {
    ElementSet s(universe);
    for (int x : xs) s.set(x);
    return s;
  }

  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (auto& w : s.w_) w = ~uint64_t{0};
    s.trim();
    return s;
  }

  int universe() const { return n_; }
  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) {
    check(i);
    w_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    check(i);
    w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  void clear() {
    for (auto& w : w_) w = 0;
  }

  /// True when every element of this set lies in `other`.
  bool is_subset_of(const ElementSet& other) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~other.w_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & other.w_[i]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  /// Lowest element, or -1 when empty.
  int first() const { return next(-1); }

  /// Lowest element strictly greater than i, or -1 when none.
  int next(int i) const {
    int word = (i + 1) >> 6;
    if (word >= static_cast<int>(w_.size())) return -1;
    uint64_t w = w_[word] & (~uint64_t{0} << ((i + 1) & 63));
    while (true) {
      if (w) return (word << 6) + std::countr_zero(w);
      if (++word >= static_cast<int>(w_.size())) return -1;
      w = w_[word];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        f(static_cast<int>((i << 6) + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int x) { out.push_back(x); });
    return out;
  }

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(n_);
    for (uint64_t w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }

  /// Orders sets as their ascending element lists compare lexicographically;
  /// this is the canonical order used for all serialized flat listings.
  static bool list_lex_less(const ElementSet& a, const ElementSet& b) {
    int x = a.first(), y = b.first();
    while (x >= 0 && y >= 0) {
      if (x != y) return x < y;
      x = a.next(x);
      y = b.next(y);
    }
    return x < 0 && y >= 0;
  }

 private:
  void check(int i) const {
    if (i < 0 || i >= n_) throw OutOfRange("element index out of range");
  }
  void trim() {
    int rem = n_ & 63;
    if (rem && !w_.empty()) w_.back() &= (uint64_t{1} << rem) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct ElementSetHash {
  size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace hypermat
