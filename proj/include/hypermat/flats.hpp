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

#include <vector>

#include "hypermat/matroid.hpp"

namespace hypermat {

struct Flat {
  ElementSet elements;
  int rank;
};

/// All rank-k flats, computed level by level from closure(empty): each level
/// is the deduplicated set of closures cl(F + x) over frontier flats F and
/// elements x outside F. Output is canonically sorted; with threads > 1 the
/// frontier is partitioned, which never changes the returned set or order.
std::vector<Flat> flats_by_rank(const Matroid& m, int k, int threads = 1);

/// flats_by_rank at corank 1.
std::vector<Flat> hyperplanes(const Matroid& m, int threads = 1);

/// Number of flats covering the given flat, without materializing them.
/// Every element outside the flat lands in exactly one cover, so covers are
/// counted by marking each computed closure and skipping marked elements.
long long count_covers(const Matroid& m, const ElementSet& flat);

}  // namespace hypermat
