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

#include "hypermat/mqt.hpp"

#include <algorithm>

namespace hypermat {
namespace {

bool line_has_point(const LineOfPlane& line, int p) {
  return std::binary_search(line.points.begin(), line.points.end(), p);
}

// The single common point of two distinct plane lines.
int meet_point(const LineOfPlane& a, const LineOfPlane& b) {
  auto i = a.points.begin();
  auto j = b.points.begin();
  while (i != a.points.end() && j != b.points.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return *i;
  }
  throw Error("distinct plane lines must meet");
}

}  // namespace

std::array<int, 3> choose_triangle(const std::vector<LineOfPlane>& lines, int e) {
  std::vector<int> avoid;
  for (int l = 0; l < static_cast<int>(lines.size()); ++l)
    if (!line_has_point(lines[l], e)) avoid.push_back(l);
  const int m = static_cast<int>(avoid.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int p = meet_point(lines[avoid[i]], lines[avoid[j]]);
      for (int k = j + 1; k < m; ++k)
        if (!line_has_point(lines[avoid[k]], p)) return {avoid[i], avoid[j], avoid[k]};
    }
  throw NoTriangle("no three lines avoiding the point have empty intersection");
}

std::pair<Matroid, MqtArtifacts> build_mqt(int q, int t) {
  if (q < 3) throw BadParams("q must be at least 3");
  if (t < 3 || t > q) throw BadParams("t must satisfy 3 <= t <= q");
  const Field field = Field::make(q);
  const auto lines = pg_lines_plane(field);
  const int npts = q * q + q + 1;

  MqtArtifacts art;
  art.q = q;
  art.t = t;
  art.e = 0;
  art.triangle = choose_triangle(lines, art.e);

  std::vector<char> in_triangle(npts, 0);
  for (int l : art.triangle)
    for (int p : lines[l].points) in_triangle[p] = 1;

  std::vector<char> in_pencil(lines.size(), 0);
  for (int l = 0; l < static_cast<int>(lines.size()); ++l)
    if (line_has_point(lines[l], art.e)) {
      in_pencil[l] = 1;
      art.pencil.push_back(l);
    }
  if (static_cast<int>(art.pencil.size()) != q + 1)
    throw Error("pencil through the removed point must have q+1 lines");

  // Chosen subsets: the triangle's trace on each pencil line is mandatory,
  // the rest fills with lowest point indices. Pencil lines share only e, so
  // the subsets are pairwise disjoint by construction.
  std::vector<char> in_ground(npts, 0);
  for (int l : art.pencil) {
    std::vector<int> chosen;
    for (int p : lines[l].points)
      if (p != art.e && in_triangle[p]) chosen.push_back(p);
    for (int p : lines[l].points) {
      if (static_cast<int>(chosen.size()) == t) break;
      if (p != art.e && !in_triangle[p]) chosen.push_back(p);
    }
    if (static_cast<int>(chosen.size()) != t)
      throw Error("pencil line cannot supply t points");
    std::sort(chosen.begin(), chosen.end());
    for (int p : chosen) in_ground[p] = 1;
    art.tfamily.push_back(std::move(chosen));
  }

  std::vector<int> local(npts, -1);
  for (int p = 0; p < npts; ++p)
    if (in_ground[p]) {
      local[p] = static_cast<int>(art.x_points.size());
      art.x_points.push_back(p);
    }
  const int n = static_cast<int>(art.x_points.size());
  if (n != (q + 1) * t) throw Error("ground set must have (q+1)*t elements");

  for (int l = 0; l < static_cast<int>(lines.size()); ++l) {
    if (in_pencil[l]) continue;
    std::vector<int> trace;
    for (int p : lines[l].points)
      if (in_ground[p]) trace.push_back(local[p]);
    if (static_cast<int>(trace.size()) < 2)
      throw Error("line trace shorter than 2 elements");
    art.lines1.push_back(std::move(trace));
  }
  for (const auto& subset : art.tfamily)
    for (size_t i = 0; i < subset.size(); ++i)
      for (size_t j = i + 1; j < subset.size(); ++j)
        art.lines2.push_back({local[subset[i]], local[subset[j]]});

  std::vector<ElementSet> all_lines;
  all_lines.reserve(art.lines1.size() + art.lines2.size());
  for (const auto& v : art.lines1) all_lines.push_back(ElementSet::from_indices(n, v));
  for (const auto& v : art.lines2) all_lines.push_back(ElementSet::from_indices(n, v));
  return {Matroid::from_lines(n, all_lines), std::move(art)};
}

}  // namespace hypermat
