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

#include <vector>

#include "hypermat/errors.hpp"
#include "hypermat/params.hpp"

using hypermat::LemmaParams;

namespace {

bool is_prime_power(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return true;  // prime
}

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace

TEST_CASE("selected instances") {
  LemmaParams p = hypermat::select_params_lemma(10);
  CHECK(p.q == 7);
  CHECK(p.t == 5);
  p = hypermat::select_params_lemma(20);
  CHECK(p.q == 13);
  CHECK(p.t == 9);
  p = hypermat::select_params_lemma(127);
  CHECK(p.q == 64);
  CHECK(p.t == 64);
  p = hypermat::select_params_lemma(254);
  CHECK(p.q == 128);
  CHECK(p.t == 128);
}

TEST_CASE("small range always picks an admissible prime power") {
  const std::vector<int> table = {7, 9, 13, 19, 32, 59, 113};
  for (int ell = 10; ell <= 126; ++ell) {
    CAPTURE(ell);
    const LemmaParams p = hypermat::select_params_lemma(ell);
    CHECK(is_prime_power(p.q));
    CHECK(p.t == ell + 2 - p.q);
    CHECK(2 * p.q >= ell + 2);  // t <= q
    CHECK(p.q <= ell - 3);      // t > 4
    CHECK(p.t > 4);
    CHECK(p.t <= p.q);
    // Independent rescan: the smallest table member in the window.
    int best = 0;
    for (int q : table)
      if (2 * q >= ell + 2 && q <= ell - 3) {
        best = q;
        break;
      }
    REQUIRE(best > 0);
    CHECK(p.q == best);
  }
}

TEST_CASE("large range picks the unique power of two in its window") {
  for (int ell = 127; ell <= 254; ++ell) {
    CAPTURE(ell);
    const LemmaParams p = hypermat::select_params_lemma(ell);
    CHECK(is_power_of_two(p.q));
    CHECK(p.t == p.q);
    CHECK(4 * p.q > ell + 2);
    CHECK(2 * p.q <= ell + 2);
    // Uniqueness: doubling or halving leaves the window.
    CHECK_FALSE((4 * (p.q / 2) > ell + 2 && 2 * (p.q / 2) <= ell + 2));
    CHECK_FALSE(2 * (2 * p.q) <= ell + 2);
  }
}

TEST_CASE("cubic-construction parameter") {
  CHECK(hypermat::select_params_corollary(10) == 5);
  CHECK(hypermat::select_params_corollary(18) == 9);
  CHECK(hypermat::select_params_corollary(30) == 16);
  for (int ell = 10; ell <= 254; ++ell) {
    CAPTURE(ell);
    const int q = hypermat::select_params_corollary(ell);
    // Independent rescan: the largest prime power >= 5 in the half-open
    // window (l+2)/4 < q <= (l+2)/2.
    int best = 0;
    for (int c = 5; 2 * c <= ell + 2; ++c)
      if (is_prime_power(c) && 4 * c > ell + 2) best = c;
    REQUIRE(best > 0);
    CHECK(q == best);
  }
}

TEST_CASE("range validation") {
  CHECK_THROWS_AS(hypermat::select_params_lemma(9), hypermat::BadParams);
  CHECK_THROWS_AS(hypermat::select_params_lemma(0), hypermat::BadParams);
  CHECK_THROWS_AS(hypermat::select_params_corollary(9), hypermat::BadParams);
}
