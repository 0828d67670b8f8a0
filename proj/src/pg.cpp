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

#include "hypermat/pg.hpp"

#include <algorithm>

namespace hypermat {
namespace {

// Scales v so its first nonzero coordinate becomes 1.
void normalize(std::vector<int>& v, const Field& f) {
  for (int c : v) {
    if (c == 0) continue;
    if (c != 1) {
      int s = f.inv(c);
      for (int& x : v) x = f.mul(x, s);
    }
    return;
  }
}

}  // namespace

std::vector<ProjPoint> pg_points(int rank, const Field& f) {
  if (rank < 2) throw BadRank("projective points need rank >= 2");
  const int q = f.q();
  std::vector<ProjPoint> pts;
  // Normalized points with pivot at position i read (0,..,0,1,free..); later
  // pivots are lexicographically smaller, and within one pivot the free tail
  // counts in base q. Emitting them in that order is exactly lex order.
  for (int pivot = rank - 1; pivot >= 0; --pivot) {
    std::vector<int> v(rank, 0);
    v[pivot] = 1;
    while (true) {
      pts.push_back(ProjPoint{v});
      int i = rank - 1;
      while (i > pivot && v[i] == q - 1) v[i--] = 0;
      if (i == pivot) break;
      ++v[i];
    }
  }
  return pts;
}

std::vector<LineOfPlane> pg_lines_plane(const Field& f) {
  const int q = f.q();
  const auto pts = pg_points(3, f);

  // Dense coordinate -> index lookup; q <= 128 keeps this under q^3 ints.
  std::vector<int> index_of(q * q * q, -1);
  auto key = [q](const std::vector<int>& v) { return (v[0] * q + v[1]) * q + v[2]; };
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    index_of[key(pts[i].coords)] = i;

  std::vector<LineOfPlane> lines;
  lines.reserve(pts.size());
  for (const ProjPoint& dual : pts) {
    const auto& u = dual.coords;
    // Two independent solutions of u . x = 0, split on the pivot of u.
    std::vector<int> v1(3), v2(3);
    if (u[0] == 1) {
      v1 = {f.neg(u[1]), 1, 0};
      v2 = {f.neg(u[2]), 0, 1};
    } else if (u[1] == 1) {
      v1 = {1, 0, 0};
      v2 = {0, f.neg(u[2]), 1};
    } else {
      v1 = {1, 0, 0};
      v2 = {0, 1, 0};
    }

    LineOfPlane line;
    line.coeffs = {u[0], u[1], u[2]};
    line.points.reserve(q + 1);
    std::vector<int> w(3);
    normalize(v1, f);
    line.points.push_back(index_of[key(v1)]);
    for (int t = 0; t < q; ++t) {
      for (int i = 0; i < 3; ++i) w[i] = f.add(v2[i], f.mul(t, v1[i]));
      normalize(w, f);
      line.points.push_back(index_of[key(w)]);
    }
    std::sort(line.points.begin(), line.points.end());
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace hypermat
