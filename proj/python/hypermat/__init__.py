# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Rank-3 line-count constructions, glued towers, and hyperplane bounds."""

from hypermat._core import (
    Field,
    HypermatError,
    Matroid,
    TowerSpec,
    VerificationFailed,
    bonin_bound,
    bruteforce_minor_oracle,
    build_mqt,
    build_tower,
    check_corollary_bound,
    check_lemma24_inequality,
    circuits_bruteforce,
    count_lines,
    count_lines_avoiding,
    flats_by_rank,
    hyperplanes,
    in_u,
    kung_point_check,
    max_rank2_minor_points,
    min_degree_element,
    parallel_connection,
    pg_lines_plane,
    pg_points,
    select_params_corollary,
    select_params_lemma,
    verify_counterexample,
)

__all__ = [
    "Field",
    "HypermatError",
    "Matroid",
    "TowerSpec",
    "VerificationFailed",
    "bonin_bound",
    "bruteforce_minor_oracle",
    "build_mqt",
    "build_tower",
    "check_corollary_bound",
    "check_lemma24_inequality",
    "circuits_bruteforce",
    "count_lines",
    "count_lines_avoiding",
    "flats_by_rank",
    "hyperplanes",
    "in_u",
    "kung_point_check",
    "max_rank2_minor_points",
    "min_degree_element",
    "parallel_connection",
    "pg_lines_plane",
    "pg_points",
    "select_params_corollary",
    "select_params_lemma",
    "verify_counterexample",
]
