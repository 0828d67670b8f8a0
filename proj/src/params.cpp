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

#include "hypermat/params.hpp"

#include "hypermat/errors.hpp"
#include "hypermat/gf.hpp"

namespace hypermat {

LemmaParams select_params_lemma(int ell) {
  if (ell < 10) throw BadParams("ell must be at least 10");
  if (ell >= 127) {
    // (ell+2)/4 < q <= (ell+2)/2 brackets exactly one power of 2.
    for (long long q = 2; q <= (ell + 2) / 2; q *= 2)
      if (4 * q > ell + 2) return {static_cast<int>(q), static_cast<int>(q)};
    throw BadParams("no power of 2 in the selection interval");
  }
  for (int q : {7, 9, 13, 19, 32, 59, 113})
    if (2 * q >= ell + 2 && q <= ell - 3) return {q, ell + 2 - q};
  throw BadParams("selection table does not cover ell");
}

int select_params_corollary(int ell) {
  if (ell < 10) throw BadParams("ell must be at least 10");
  for (int q = (ell + 2) / 2; q >= 5; --q)
    if (4 * q > ell + 2 && is_prime_power(q)) return q;
  throw NoPrimePower("no prime power >= 5 in the selection interval");
}

}  // namespace hypermat
