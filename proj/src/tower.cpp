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

#include "hypermat/tower.hpp"

#include <string>

#include "hypermat/analysis.hpp"

namespace hypermat {
namespace {

std::vector<std::string> copy_labels(int copy, int n) {
  std::vector<std::string> out(n);
  const std::string prefix = "c" + std::to_string(copy) + ":";
  for (int i = 0; i < n; ++i) out[i] = prefix + std::to_string(i);
  return out;
}

}  // namespace

std::pair<Matroid, TowerSpec> build_tower(const Matroid& n, int e, int ell, int r) {
  if (n.rank() != 3) throw BadRank("tower base must have rank 3");
  if (r < 3) throw BadRank("tower rank must be at least 3");
  if (ell < 2) throw BadParams("ell must be at least 2");
  if (e < 0 || e >= n.ground_size()) throw OutOfRange("basepoint index out of range");
  if (n.rank(ElementSet::of(n.ground_size(), {e})) != 1)
    throw BasepointLoop("basepoint must be a nonloop");

  const int k = (r - 1) / 2;
  Matroid m = n.with_labels(copy_labels(1, n.ground_size()));
  for (int c = 2; c <= k; ++c)
    m = parallel_connection(m, e, n.with_labels(copy_labels(c, n.ground_size())), e);
  if (r % 2 == 0) {
    Matroid line = Matroid::uniform(2, ell + 1).with_labels(copy_labels(k + 1, ell + 1));
    m = parallel_connection(m, e, line, 0);
  }
  if (m.rank() != r) throw Error("tower rank does not match the request");

  TowerSpec spec{ell, r,
                 k,   n,
                 e,   r % 2 == 0 ? ell + 1 : 0,
                 e,   m.ground_size()};
  return {std::move(m), std::move(spec)};
}

LowerBoundFamily::LowerBoundFamily(const TowerSpec& spec, std::vector<std::vector<int>> base_lines)
    : lines_(std::move(base_lines)),
      base_n_(spec.base.ground_size()),
      base_e_(spec.base_e),
      k_(spec.k),
      attachment_size_(spec.attachment_size),
      ground_(spec.ground_size) {
  size_ = big_pow(BigInt(static_cast<int>(lines_.size())), k_);
  if (attachment_size_ > 0) size_ *= attachment_size_ - 1;
}

int LowerBoundFamily::embed(int copy, int j) const {
  if (copy == 1) return j;
  if (j == base_e_) return base_e_;
  return base_n_ + (copy - 2) * (base_n_ - 1) + j - (j > base_e_ ? 1 : 0);
}

ElementSet LowerBoundFamily::assemble(const std::vector<int>& line_choice, int x_local) const {
  if (static_cast<int>(line_choice.size()) != k_)
    throw BadParams("need one line choice per copy");
  ElementSet out(ground_);
  for (int c = 1; c <= k_; ++c)
    for (int j : lines_[line_choice[c - 1]]) out.set(embed(c, j));
  if (attachment_size_ > 0) {
    if (x_local < 1 || x_local >= attachment_size_)
      throw OutOfRange("attachment element outside 1..ell");
    out.set(k_ * (base_n_ - 1) + 1 + x_local - 1);
  } else if (x_local != -1) {
    throw BadParams("no attachment to pick from");
  }
  return out;
}

ElementSet LowerBoundFamily::member(BigInt index) const {
  if (index < 0 || index >= size_) throw OutOfRange("family index out of range");
  int x_local = -1;
  if (attachment_size_ > 0) {
    const int ell = attachment_size_ - 1;
    x_local = static_cast<int>(index % ell) + 1;
    index /= ell;
  }
  const int w = per_copy_choices();
  std::vector<int> digits(k_, 0);
  for (int c = k_; c >= 1; --c) {
    digits[c - 1] = static_cast<int>(index % w);
    index /= w;
  }
  return assemble(digits, x_local);
}

LowerBoundFamily lower_bound_family(const TowerSpec& spec, int threads) {
  return LowerBoundFamily(spec, lines_avoiding(spec.base, spec.base_e, threads));
}

}  // namespace hypermat
