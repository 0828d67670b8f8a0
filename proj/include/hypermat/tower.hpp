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

#include <utility>
#include <vector>

#include "hypermat/bigint.hpp"
#include "hypermat/matroid.hpp"

namespace hypermat {

/// Recipe for a glued rank-r matroid: k copies of a rank-3 base joined at one
/// shared basepoint, plus, for even r, an (ell+1)-point line joined at the
/// same point. Enough to rebuild the matroid and its hyperplane family.
struct TowerSpec {
  int ell;
  int r;
  int k;
  Matroid base;
  int base_e;
  int attachment_size;  // ell+1 when r is even, else 0
  int basepoint_image;
  int ground_size;
};

/// Left-associated parallel connection of k = floor((r-1)/2) relabeled copies
/// of n at e, then of the uniform line for even r. Elements are labeled
/// "c<copy>:<index>"; the shared point keeps copy 1's label. Ground size is
/// k(|E(n)|-1) + 1, plus ell for even r.
std::pair<Matroid, TowerSpec> build_tower(const Matroid& n, int e, int ell, int r);

/// The certified hyperplane family: one basepoint-avoiding line of the base
/// per copy, united, plus one non-basepoint line element for even r. Members
/// are indexed in mixed radix (copy choices outermost, line element last) and
/// never materialized eagerly.
class LowerBoundFamily {
 public:
  LowerBoundFamily(const TowerSpec& spec, std::vector<std::vector<int>> base_lines);

  const BigInt& size() const { return size_; }
  int per_copy_choices() const { return static_cast<int>(lines_.size()); }
  int copies() const { return k_; }
  bool has_attachment() const { return attachment_size_ > 0; }
  int attachment_choices() const { return attachment_size_ > 0 ? attachment_size_ - 1 : 0; }
  int ground() const { return ground_; }
  const std::vector<std::vector<int>>& base_lines() const { return lines_; }

  /// Member from explicit digits: one line index per copy and, when the
  /// attachment exists, a base-local line element in 1..ell (else -1).
  ElementSet assemble(const std::vector<int>& line_choice, int x_local) const;

  ElementSet member(BigInt index) const;

  template <typename F>
  void for_each(F&& f) const {
    if (lines_.empty()) return;
    const int w = per_copy_choices();
    std::vector<int> digits(k_, 0);
    while (true) {
      if (attachment_size_ > 0) {
        for (int x = 1; x < attachment_size_; ++x) f(assemble(digits, x));
      } else {
        f(assemble(digits, -1));
      }
      int d = k_ - 1;
      while (d >= 0 && ++digits[d] == w) digits[d--] = 0;
      if (d < 0) break;
    }
  }

 private:
  int embed(int copy, int j) const;  // copy is 1-based

  std::vector<std::vector<int>> lines_;  // base-local indices, canonical order
  int base_n_, base_e_, k_, attachment_size_, ground_;
  BigInt size_;
};

/// Builds the family from a tower record, enumerating the base's lines that
/// avoid the basepoint.
LowerBoundFamily lower_bound_family(const TowerSpec& spec, int threads = 1);

}  // namespace hypermat
