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

namespace hypermat {

struct LemmaParams {
  int q;
  int t;
};

/// Prime-power parameters for the rank-3 construction at a given ell.
/// Below 127 picks the smallest of {7, 9, 13, 19, 32, 59, 113} with
/// (ell+2)/2 <= q <= ell-3 and sets t = ell+2-q; from 127 on picks the
/// unique power of 2 with (ell+2)/4 < q <= (ell+2)/2 and sets t = q.
/// The result always satisfies 4 < t <= q for ell < 127 and t = q otherwise.
LemmaParams select_params_lemma(int ell);

/// Largest prime power q >= 5 with (ell+2)/4 < q <= (ell+2)/2; the cubic
/// lower-bound construction uses t = q. Throws NoPrimePower when the
/// interval is empty of candidates (never for ell >= 10).
int select_params_corollary(int ell);

}  // namespace hypermat
