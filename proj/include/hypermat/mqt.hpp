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
#include <utility>
#include <vector>

#include "hypermat/matroid.hpp"
#include "hypermat/pg.hpp"

namespace hypermat {

/// Provenance of one planar construction: a plane point e is removed, a
/// triangle of lines avoiding e anchors the chosen t-subsets along the pencil
/// through e, and the union of those subsets is the ground set. Lines of the
/// built matroid are the e-avoiding plane lines restricted to the ground set
/// plus all pairs inside one chosen subset. Point/line values are indices
/// into pg_points(3, .) and pg_lines_plane(.).
struct MqtArtifacts {
  int q = 0;
  int t = 0;
  int e = 0;
  std::array<int, 3> triangle{};
  std::vector<int> pencil;
  std::vector<std::vector<int>> tfamily;  // parallel to pencil; plane point indices
  std::vector<int> x_points;              // ground as plane points; position = element index
  std::vector<std::vector<int>> lines1;   // element indices; plane-line traces
  std::vector<std::vector<int>> lines2;   // element indices; in-subset pairs
};

/// First triple of distinct lines, in line order, that avoid the point e and
/// have empty common intersection. Throws NoTriangle when no such triple
/// exists (possible only below order 3).
std::array<int, 3> choose_triangle(const std::vector<LineOfPlane>& lines, int e);

/// Builds the (q+1)*t-element rank-3 matroid with q^2 + (q+1)*t(t-1)/2 lines
/// and no rank-2 uniform minor on q+t points, plus its provenance record.
/// The removed point is the first plane point; each chosen subset takes the
/// triangle intersections on its pencil line, fills with lowest-index points,
/// and is stored in ascending point order.
std::pair<Matroid, MqtArtifacts> build_mqt(int q, int t);

}  // namespace hypermat
