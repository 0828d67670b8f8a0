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

#include <array>
#include <vector>

#include "hypermat/gf.hpp"

namespace hypermat {

/// A point of PG(rank-1, q), stored as the canonical representative of its
/// projective class: nonzero, first nonzero coordinate equal to 1.
struct ProjPoint {
  std::vector<int> coords;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.coords == b.coords;
  }
};

/// A line of PG(2, q): the solutions of coeffs . x = 0, with coeffs
/// normalized like a point. Points are sorted indices into pg_points order.
struct LineOfPlane {
  std::array<int, 3> coeffs;
  std::vector<int> points;
};

/// All normalized points of PG(rank-1, q) in lexicographic coordinate order.
/// The result has (q^rank - 1)/(q - 1) entries.
std::vector<ProjPoint> pg_points(int rank, const Field& f);

/// All q^2+q+1 lines of PG(2, q), in lexicographic order of their normalized
/// coefficient vectors. Each line carries its q+1 sorted point indices.
std::vector<LineOfPlane> pg_lines_plane(const Field& f);

}  // namespace hypermat
