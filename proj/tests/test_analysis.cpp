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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "hypermat/analysis.hpp"
#include "hypermat/bigint.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/gf.hpp"
#include "hypermat/matroid.hpp"
#include "hypermat/mqt.hpp"
#include "hypermat/params.hpp"
#include "hypermat/pg.hpp"
#include "hypermat/tower.hpp"
#include "support/oracles.hpp"

using hypermat::BigInt;
using hypermat::ElementSet;
using hypermat::Matroid;

namespace {

Matroid mqt(int q, int t) { return hypermat::build_mqt(q, t).first; }

Matroid lines_on(int n, const std::vector<std::vector<int>>& lists) {
  std::vector<ElementSet> ls;
  for (const auto& xs : lists) ls.push_back(ElementSet::from_indices(n, xs));
  return Matroid::from_lines(n, ls);
}

Matroid pg_plane(int q) {
  const hypermat::Field f = hypermat::Field::make(q);
  std::vector<std::vector<int>> cols;
  for (const auto& p : hypermat::pg_points(3, f)) cols.push_back(p.coords);
  return Matroid::linear(f, cols);
}

std::vector<Matroid> minor_corpus() {
  return {
      Matroid::uniform(2, 4),
      Matroid::uniform(2, 7),
      Matroid::uniform(3, 6),
      Matroid::uniform(4, 6),
      lines_on(5, {{0, 1, 2}}),
      lines_on(6, {{0, 1, 2}, {0, 3, 4}}),
      lines_on(7, {{0, 1, 2, 3, 4, 5}}),
      lines_on(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}),
      pg_plane(3),
      mqt(3, 3),
      parallel_connection(Matroid::uniform(2, 3), 0, Matroid::uniform(2, 3), 0),
      parallel_connection(Matroid::uniform(2, 4), 1, Matroid::uniform(3, 5), 2),
  };
}

}  // namespace

TEST_CASE("line counting") {
  CHECK(hypermat::count_lines(mqt(7, 5)) == 129);
  CHECK(hypermat::count_lines(mqt(3, 3)) == 21);
  CHECK(hypermat::count_lines(pg_plane(3)) == 13);
  CHECK(hypermat::count_lines(Matroid::uniform(3, 5)) == 10);
  CHECK(hypermat::count_lines(Matroid::uniform(2, 9)) == 1);

  const Matroid m75 = mqt(7, 5);
  const int e = hypermat::min_degree_element(m75);
  CHECK(hypermat::count_lines_avoiding(m75, e) == 118);
  CHECK(hypermat::count_lines(m75, 4) == 129);
  CHECK(hypermat::count_lines_avoiding(m75, e, 4) == 118);

  CHECK_THROWS_AS(hypermat::count_lines(Matroid::uniform(1, 3)), hypermat::BadRank);
  CHECK_THROWS_AS(hypermat::count_lines_avoiding(m75, 40), hypermat::OutOfRange);
}

TEST_CASE("line enumeration matches the flat scan") {
  for (const Matroid& m : minor_corpus()) {
    if (m.rank() < 2) continue;
    for (int e : {0, m.ground_size() - 1}) {
      const auto got = hypermat::lines_avoiding(m, e);
      std::vector<std::vector<int>> expect;
      for (const auto& f : oracles::naive_flats(m, 2))
        if (!f.test(e)) expect.push_back(f.to_indices());
      CHECK(got == expect);
      CHECK((long long)got.size() == hypermat::count_lines_avoiding(m, e));
    }
    CHECK(hypermat::count_lines(m) == (long long)oracles::naive_flats(m, 2).size());
  }
}

TEST_CASE("minimum-degree element") {
  // Every element of the planar construction lies on q+t-1 lines; ties take
  // the lowest index.
  CHECK(hypermat::min_degree_element(mqt(7, 5)) == 0);
  CHECK(hypermat::min_degree_element(mqt(3, 3)) == 0);
  // Elements 0..2 lie on 3 lines, elements 3..4 on 4.
  CHECK(hypermat::min_degree_element(lines_on(5, {{0, 1, 2}})) == 0);
  // The collinear elements lie on two lines each, element 3 on three.
  const Matroid star = lines_on(4, {{0, 1, 2}});
  CHECK(hypermat::min_degree_element(star) == 0);
}

TEST_CASE("largest line-minor, pinned instances") {
  CHECK(hypermat::max_rank2_minor_points(Matroid::uniform(2, 7)) == 7);
  CHECK(hypermat::max_rank2_minor_points(mqt(3, 3)) == 5);
  CHECK(hypermat::max_rank2_minor_points(mqt(7, 5)) == 11);
  CHECK(hypermat::max_rank2_minor_points(
            parallel_connection(Matroid::uniform(2, 3), 0, Matroid::uniform(2, 3), 0)) == 3);
  CHECK(hypermat::max_rank2_minor_points(pg_plane(3)) == 4);
  // Contracting an element off the long line keeps its six points distinct.
  CHECK(hypermat::max_rank2_minor_points(lines_on(7, {{0, 1, 2, 3, 4, 5}})) == 6);
  CHECK(hypermat::max_rank2_minor_points(lines_on(5, {{0, 1, 2}})) == 4);
  CHECK(hypermat::max_rank2_minor_points(lines_on(6, {{0, 1, 2}, {0, 3, 4}})) == 5);
}

TEST_CASE("line-minor size agrees with the exhaustive oracle") {
  for (const Matroid& m : minor_corpus()) {
    // The exhaustive oracle refuses grounds past twelve elements.
    if (m.rank() < 2 || m.ground_size() > 12) continue;
    const int got = hypermat::max_rank2_minor_points(m);
    for (int n = 3; n <= m.ground_size(); ++n) {
      CAPTURE(n);
      CHECK(hypermat::bruteforce_minor_oracle(m, n) == (got >= n));
    }
  }
  CHECK_THROWS_AS(hypermat::bruteforce_minor_oracle(Matroid::uniform(2, 13), 5),
                  hypermat::TooLarge);
}

TEST_CASE("minor-closure membership") {
  CHECK(hypermat::in_u(mqt(7, 5), 10));
  CHECK_FALSE(hypermat::in_u(mqt(7, 5), 9));
  CHECK(hypermat::in_u(mqt(3, 3), 4));
  CHECK_FALSE(hypermat::in_u(mqt(3, 3), 3));
  // The 7-point line is itself the excluded minor for ell = 5.
  CHECK(hypermat::in_u(Matroid::uniform(2, 7), 6));
  CHECK_FALSE(hypermat::in_u(Matroid::uniform(2, 7), 5));
  CHECK(hypermat::in_u(pg_plane(3), 3));
}

TEST_CASE("point bound values and identity") {
  CHECK(hypermat::bonin_bound(10, 4) == BigInt(1111));
  CHECK(hypermat::bonin_bound(10, 5) == BigInt(11111));
  CHECK(hypermat::bonin_bound(2, 3) == BigInt(7));
  for (int ell = 2; ell <= 128; ell += 7)
    for (int r = 1; r <= 16; ++r) {
      const BigInt lhs = hypermat::bonin_bound(ell, r) * (ell - 1) + 1;
      CHECK(lhs == hypermat::big_pow(BigInt(ell), r));
    }
  CHECK_THROWS_AS(hypermat::bonin_bound(1, 3), hypermat::BadParams);
  CHECK_THROWS_AS(hypermat::bonin_bound(10, 0), hypermat::BadRank);
}

TEST_CASE("point-count sanity check") {
  CHECK(hypermat::kung_point_check(mqt(3, 3), 4));       // 12 <= 21
  CHECK(hypermat::kung_point_check(pg_plane(7), 7));     // 57 <= 57, tight
  CHECK_FALSE(hypermat::kung_point_check(Matroid::uniform(2, 7), 2));  // 7 > 3
}

TEST_CASE("rank-3 line guarantee") {
  CHECK(hypermat::check_lemma24_inequality(10));
  CHECK(hypermat::check_lemma24_inequality(20));
  for (int ell = 10; ell <= 254; ++ell) CHECK(hypermat::check_lemma24_inequality(ell));
  CHECK_THROWS_AS(hypermat::check_lemma24_inequality(9), hypermat::BadParams);
  CHECK_THROWS_AS(hypermat::check_lemma24_inequality(255), hypermat::BadParams);

  // The ell = 10 instance in integers: the base has 129 lines and
  // 3*129 = 387 > 3*100 + 70 + 12 = 382.
  CHECK(hypermat::count_lines(mqt(7, 5)) == 129);
  CHECK(3 * 129 > 3 * 10 * 10 + 7 * 10 + 12);
}

TEST_CASE("cubic hyperplane guarantee") {
  for (int ell : {10, 18, 30})
    for (int r = 3; r <= 6; ++r) {
      CAPTURE(ell);
      CAPTURE(r);
      CHECK(hypermat::check_corollary_bound(ell, r));
    }
  CHECK_THROWS_AS(hypermat::check_corollary_bound(9, 4), hypermat::BadParams);
  CHECK_THROWS_AS(hypermat::check_corollary_bound(10, 2), hypermat::BadRank);

  // The ell = 10 chain in integers: q = 5, the base has 85 lines of which 76
  // avoid the cheapest element, and 128 * 76 = 9728 > 1000.
  CHECK(hypermat::select_params_corollary(10) == 5);
  const Matroid m55 = mqt(5, 5);
  CHECK(hypermat::count_lines(m55) == 85);
  CHECK(2 * 85 >= 5 * 5 * 5 + 8 * 5);
  const int e = hypermat::min_degree_element(m55);
  CHECK(hypermat::count_lines_avoiding(m55, e) == 76);
  CHECK(128 * 76 > 10 * 10 * 10);
}

TEST_CASE("verification report, family mode") {
  auto [base, art] = hypermat::build_mqt(7, 5);
  const int e = hypermat::min_degree_element(base);
  auto [tower, spec] = hypermat::build_tower(base, e, 10, 5);
  const auto rep =
      hypermat::verify_counterexample(tower, spec, hypermat::VerifyMode::family_only, 2, 7);
  CHECK(rep.ell == 10);
  CHECK(rep.r == 5);
  CHECK(rep.ground_size == 79);
  CHECK(rep.w2 == 129);
  CHECK(rep.w2e == 118);
  CHECK(rep.hyperplane_count == BigInt(13924));
  CHECK_FALSE(rep.hyperplane_exact);
  CHECK(rep.bonin == BigInt(11111));
  CHECK(rep.max_line_minor == 11);
  CHECK(rep.in_u);
  CHECK(rep.beats_bound);
  CHECK(rep.kung_ok);
}

TEST_CASE("verification report, exact mode") {
  auto [base, art] = hypermat::build_mqt(7, 5);
  const int e = hypermat::min_degree_element(base);
  auto [tower, spec] = hypermat::build_tower(base, e, 10, 4);
  const auto rep = hypermat::verify_counterexample(tower, spec, hypermat::VerifyMode::exact, 2);
  CHECK(rep.ground_size == 50);
  CHECK(rep.hyperplane_count == BigInt(1192));
  CHECK(rep.hyperplane_exact);
  CHECK(rep.bonin == BigInt(1111));
  CHECK(rep.max_line_minor == 11);
  CHECK(rep.in_u);
  CHECK(rep.beats_bound);
  CHECK(rep.kung_ok);

  // Census split: 1180 hyperplanes avoid the basepoint (the certified
  // family), 12 contain it (11 basepoint lines joined with the attachment,
  // plus the base's ground).
  const auto hs = hypermat::hyperplanes(tower, 2);
  REQUIRE(hs.size() == 1192);
  long long with_e = 0;
  for (const auto& h : hs) with_e += h.elements.test(spec.basepoint_image);
  CHECK(with_e == 12);
}

TEST_CASE("verification rejects a mismatched recipe") {
  auto [base, art] = hypermat::build_mqt(7, 5);
  const int e = hypermat::min_degree_element(base);
  auto [tower, spec] = hypermat::build_tower(base, e, 10, 5);

  hypermat::TowerSpec wrong = spec;
  wrong.ground_size += 1;
  CHECK_THROWS_AS(
      hypermat::verify_counterexample(tower, wrong, hypermat::VerifyMode::family_only),
      hypermat::VerificationFailed);

  hypermat::TowerSpec wrong_rank = spec;
  wrong_rank.r = 6;
  CHECK_THROWS_AS(
      hypermat::verify_counterexample(tower, wrong_rank, hypermat::VerifyMode::family_only),
      hypermat::VerificationFailed);
}

TEST_CASE("family verification is seed-stable") {
  auto [base, art] = hypermat::build_mqt(7, 5);
  const int e = hypermat::min_degree_element(base);
  auto [tower, spec] = hypermat::build_tower(base, e, 10, 5);
  const auto a =
      hypermat::verify_counterexample(tower, spec, hypermat::VerifyMode::family_only, 1, 42);
  const auto b =
      hypermat::verify_counterexample(tower, spec, hypermat::VerifyMode::family_only, 4, 42);
  CHECK(a.hyperplane_count == b.hyperplane_count);
  CHECK(a.beats_bound == b.beats_bound);
  CHECK(a.in_u == b.in_u);
}
