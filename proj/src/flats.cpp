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

#include "hypermat/flats.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace hypermat {
namespace {

using FlatSet = std::unordered_set<ElementSet, ElementSetHash>;

// Feeds every cover of the flat f to sink. Each element outside f belongs to
// exactly one cover, so elements of already-seen covers are skipped.
template <typename Sink>
void expand_flat(const Matroid& m, const ElementSet& f, Sink&& sink) {
  ElementSet used = f;
  ElementSet probe = f;
  const int n = m.ground_size();
  for (int x = 0; x < n; ++x) {
    if (used.test(x)) continue;
    probe.set(x);
    ElementSet cover = m.closure(probe);
    probe.reset(x);
    used |= cover;
    sink(std::move(cover));
  }
}

std::vector<ElementSet> next_level(const Matroid& m, const std::vector<ElementSet>& level,
                                   int threads) {
  const int frontier = static_cast<int>(level.size());
  const int workers = std::max(1, std::min(threads, frontier));
  std::vector<FlatSet> found(workers);
  auto run = [&](int w) {
    const int lo = static_cast<int>(int64_t{w} * frontier / workers);
    const int hi = static_cast<int>(int64_t{w + 1} * frontier / workers);
    for (int i = lo; i < hi; ++i)
      expand_flat(m, level[i], [&](ElementSet cover) { found[w].insert(std::move(cover)); });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  for (int w = 1; w < workers; ++w) {
    for (const auto& s : found[w]) found[0].insert(s);
    found[w].clear();
  }
  std::vector<ElementSet> out(found[0].begin(), found[0].end());
  std::sort(out.begin(), out.end(), ElementSet::list_lex_less);
  return out;
}

}  // namespace

std::vector<Flat> flats_by_rank(const Matroid& m, int k, int threads) {
  if (k < 0 || k > m.rank())
    throw BadRank("flat rank " + std::to_string(k) + " outside 0.." + std::to_string(m.rank()));
  std::vector<ElementSet> level{m.closure(ElementSet(m.ground_size()))};
  for (int j = 0; j < k; ++j) level = next_level(m, level, threads);
  std::vector<Flat> out;
  out.reserve(level.size());
  for (auto& f : level) out.push_back(Flat{std::move(f), k});
  return out;
}

std::vector<Flat> hyperplanes(const Matroid& m, int threads) {
  if (m.rank() < 1) throw BadRank("hyperplanes need rank >= 1");
  return flats_by_rank(m, m.rank() - 1, threads);
}

long long count_covers(const Matroid& m, const ElementSet& flat) {
  long long covers = 0;
  expand_flat(m, flat, [&](ElementSet&&) { ++covers; });
  return covers;
}

}  // namespace hypermat
