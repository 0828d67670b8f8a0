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

#include "hypermat/matroid.hpp"

#include <algorithm>
#include <bit>

namespace hypermat {

void MatroidNode::check_ground(const ElementSet& x) const {
  if (x.universe() != n_)
    throw OutOfRange("subset universe " + std::to_string(x.universe()) +
                     " does not match ground size " + std::to_string(n_));
}

ElementSet MatroidNode::closure_of(const ElementSet& x) const {
  check_ground(x);
  const int r = rank_of(x);
  ElementSet out = x;
  ElementSet probe = x;
  for (int e = 0; e < n_; ++e) {
    if (x.test(e)) continue;
    probe.set(e);
    if (rank_of(probe) == r) out.set(e);
    probe.reset(e);
  }
  return out;
}

// ---------------------------------------------------------------- Uniform

UniformNode::UniformNode(int r, int n) {
  if (n < 0 || r < 0 || r > n)
    throw BadRank("uniform matroid needs 0 <= r <= n");
  n_ = n;
  rank_ = r;
}

int UniformNode::rank_of(const ElementSet& x) const {
  check_ground(x);
  return std::min(x.count(), rank_);
}

ElementSet UniformNode::closure_of(const ElementSet& x) const {
  check_ground(x);
  return x.count() >= rank_ ? ElementSet::full(n_) : x;
}

// ----------------------------------------------------------------- Linear

LinearNode::LinearNode(Field field, std::vector<std::vector<int>> columns)
    : field_(std::move(field)), columns_(std::move(columns)) {
  n_ = static_cast<int>(columns_.size());
  dim_ = columns_.empty() ? 0 : static_cast<int>(columns_[0].size());
  for (const auto& col : columns_) {
    if (static_cast<int>(col.size()) != dim_)
      throw BadParams("columns must all have the same length");
    for (int v : col)
      if (v < 0 || v >= field_.q()) throw OutOfRange("column entry outside the field");
  }
  rank_ = reduce(ElementSet::full(n_), nullptr);
}

// Maintains a mutually reduced basis: every row is zero at the other rows'
// pivots, so one elimination pass per incoming vector suffices.
int LinearNode::reduce(const ElementSet& x, std::vector<std::vector<int>>* basis_out) const {
  std::vector<std::vector<int>> rows;
  std::vector<int> pivots;
  x.for_each([&](int c) {
    std::vector<int> v = columns_[c];
    for (size_t i = 0; i < rows.size(); ++i) {
      int coef = v[pivots[i]];
      if (coef == 0) continue;
      for (int j = 0; j < dim_; ++j)
        v[j] = field_.sub(v[j], field_.mul(coef, rows[i][j]));
    }
    int p = -1;
    for (int j = 0; j < dim_; ++j)
      if (v[j] != 0) {
        p = j;
        break;
      }
    if (p < 0) return;
    int s = field_.inv(v[p]);
    for (int j = 0; j < dim_; ++j) v[j] = field_.mul(v[j], s);
    for (size_t i = 0; i < rows.size(); ++i) {
      int coef = rows[i][p];
      if (coef == 0) continue;
      for (int j = 0; j < dim_; ++j)
        rows[i][j] = field_.sub(rows[i][j], field_.mul(coef, v[j]));
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
  });
  if (basis_out) *basis_out = std::move(rows);
  return static_cast<int>(pivots.size());
}

int LinearNode::rank_of(const ElementSet& x) const {
  check_ground(x);
  return reduce(x, nullptr);
}

ElementSet LinearNode::closure_of(const ElementSet& x) const {
  check_ground(x);
  std::vector<std::vector<int>> rows;
  reduce(x, &rows);
  std::vector<int> pivots(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    pivots[i] = static_cast<int>(std::find_if(rows[i].begin(), rows[i].end(),
                                              [](int v) { return v != 0; }) -
                                 rows[i].begin());
  ElementSet out = x;
  std::vector<int> v;
  for (int c = 0; c < n_; ++c) {
    if (out.test(c)) continue;
    v = columns_[c];
    for (size_t i = 0; i < rows.size(); ++i) {
      int coef = v[pivots[i]];
      if (coef == 0) continue;
      for (int j = 0; j < dim_; ++j)
        v[j] = field_.sub(v[j], field_.mul(coef, rows[i][j]));
    }
    if (std::all_of(v.begin(), v.end(), [](int w) { return w == 0; })) out.set(c);
  }
  return out;
}

// ----------------------------------------------------------- LineSetRank3

LineSetNode::LineSetNode(int n, const std::vector<ElementSet>& lines) {
  if (n < 0) throw OutOfRange("negative ground size");
  n_ = n;
  line_off_.push_back(0);
  for (const ElementSet& line : lines) {
    if (line.universe() != n) throw OutOfRange("line universe does not match ground size");
    if (line.count() < 2) throw InvalidLineSet("every line needs at least 2 elements");
    line.for_each([&](int e) { line_elems_.push_back(e); });
    line_off_.push_back(static_cast<int>(line_elems_.size()));
  }

  adj_off_.assign(n + 1, 0);
  for (int e : line_elems_) ++adj_off_[e + 1];
  for (int i = 0; i < n; ++i) adj_off_[i + 1] += adj_off_[i];
  adj_lines_.resize(line_elems_.size());
  std::vector<int> cursor(adj_off_.begin(), adj_off_.end() - 1);
  for (int l = 0; l < line_count(); ++l)
    for (const int* e = line_begin(l); e != line_end(l); ++e)
      adj_lines_[cursor[*e]++] = l;

  // Two stored lines may share at most one element; walking each element's
  // star with a scratch mark array finds any doubly covered pair.
  std::vector<char> mark(n, 0);
  std::vector<int> touched;
  for (int a = 0; a < n; ++a) {
    touched.clear();
    for (const int* l = lines_at_begin(a); l != lines_at_end(a); ++l)
      for (const int* e = line_begin(*l); e != line_end(*l); ++e) {
        if (*e == a) continue;
        if (mark[*e])
          throw InvalidLineSet("elements " + std::to_string(a) + " and " +
                               std::to_string(*e) + " lie on two lines");
        mark[*e] = 1;
        touched.push_back(*e);
      }
    for (int t : touched) mark[t] = 0;
  }

  rank_ = n == 0 ? 0 : rank_of(ElementSet::full(n));
}

bool LineSetNode::line_contains(int l, int a) const {
  return std::binary_search(line_begin(l), line_end(l), a);
}

ElementSet LineSetNode::line_as_set(int l) const {
  ElementSet s(n_);
  for (const int* e = line_begin(l); e != line_end(l); ++e) s.set(*e);
  return s;
}

int LineSetNode::line_through(int a, int b) const {
  const int* i = lines_at_begin(a);
  const int* ie = lines_at_end(a);
  const int* j = lines_at_begin(b);
  const int* je = lines_at_end(b);
  while (i != ie && j != je) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return *i;
  }
  return -1;
}

int LineSetNode::rank_of(const ElementSet& x) const {
  check_ground(x);
  const int c = x.count();
  if (c <= 2) return c;
  const int a = x.first();
  const int b = x.next(a);
  const int l = line_through(a, b);
  if (l < 0) return 3;
  for (int e = x.next(b); e >= 0; e = x.next(e))
    if (!line_contains(l, e)) return 3;
  return 2;
}

ElementSet LineSetNode::closure_of(const ElementSet& x) const {
  check_ground(x);
  const int c = x.count();
  if (c <= 1) return x;
  const int a = x.first();
  const int b = x.next(a);
  const int l = line_through(a, b);
  if (c == 2) return l < 0 ? x : line_as_set(l);
  if (l >= 0) {
    bool inside = true;
    for (int e = x.next(b); e >= 0 && inside; e = x.next(e)) inside = line_contains(l, e);
    if (inside) return line_as_set(l);
  }
  return ElementSet::full(n_);
}

// ------------------------------------------------------ ParallelConn

struct ParallelNode::Pullback {
  ElementSet x1, x2;
  bool has_base;
};

ParallelNode::ParallelNode(Matroid left, int base_left, Matroid right, int base_right)
    : left_(std::make_unique<const Matroid>(std::move(left))),
      right_(std::make_unique<const Matroid>(std::move(right))),
      base_left_(base_left),
      base_right_(base_right) {
  n_ = left_->ground_size() + right_->ground_size() - 1;
  rank_ = left_->rank() + right_->rank() - 1;
}

ParallelNode::~ParallelNode() = default;

const Matroid& ParallelNode::left() const { return *left_; }
const Matroid& ParallelNode::right() const { return *right_; }

int ParallelNode::embed_right(int j) const {
  if (j == base_right_) return base_left_;
  return left_->ground_size() + j - (j > base_right_ ? 1 : 0);
}

ParallelNode::Pullback ParallelNode::pull(const ElementSet& x) const {
  const int n1 = left_->ground_size();
  Pullback pb{ElementSet(n1), ElementSet(right_->ground_size()), x.test(base_left_)};
  x.for_each([&](int i) {
    if (i < n1) {
      pb.x1.set(i);
    } else {
      int j = i - n1;
      pb.x2.set(j < base_right_ ? j : j + 1);
    }
  });
  if (pb.has_base) pb.x2.set(base_right_);
  return pb;
}

int ParallelNode::rank_of(const ElementSet& x) const {
  check_ground(x);
  Pullback pb = pull(x);
  const int r1 = left_->rank(pb.x1);
  const int r2 = right_->rank(pb.x2);
  if (pb.has_base) return r1 + r2 - 1;
  pb.x1.set(base_left_);
  pb.x2.set(base_right_);
  return std::min(r1 + r2, left_->rank(pb.x1) + right_->rank(pb.x2) - 1);
}

// One closure costs two same-side rank calls per candidate element; the
// other side's two rank values are computed once and reused throughout.
ElementSet ParallelNode::closure_of(const ElementSet& x) const {
  check_ground(x);
  const int n1 = left_->ground_size();
  Pullback pb = pull(x);
  ElementSet x1e = pb.x1, x2e = pb.x2;
  x1e.set(base_left_);
  x2e.set(base_right_);
  const int r1 = left_->rank(pb.x1);
  const int r2 = right_->rank(pb.x2);
  const int r1e = left_->rank(x1e);
  const int r2e = right_->rank(x2e);
  const int r = std::min(r1 + r2, r1e + r2e - 1);

  ElementSet out = x;
  for (int i = 0; i < n_; ++i) {
    if (x.test(i)) continue;
    int cand;
    if (i == base_left_) {
      cand = r1e + r2e - 1;
    } else if (i < n1) {
      pb.x1.set(i);
      x1e.set(i);
      cand = std::min(left_->rank(pb.x1) + r2, left_->rank(x1e) + r2e - 1);
      pb.x1.reset(i);
      x1e.reset(i);
    } else {
      int j = i - n1;
      if (j >= base_right_) ++j;
      pb.x2.set(j);
      x2e.set(j);
      cand = std::min(r1 + right_->rank(pb.x2), r1e + right_->rank(x2e) - 1);
      pb.x2.reset(j);
      x2e.reset(j);
    }
    if (cand == r) out.set(i);
  }
  return out;
}

// ---------------------------------------------------------------- Matroid

Matroid Matroid::uniform(int rank, int n) {
  return Matroid(std::make_shared<UniformNode>(rank, n));
}

Matroid Matroid::linear(Field field, std::vector<std::vector<int>> columns) {
  return Matroid(std::make_shared<LinearNode>(std::move(field), std::move(columns)));
}

Matroid Matroid::from_lines(int n, const std::vector<ElementSet>& lines) {
  return Matroid(std::make_shared<LineSetNode>(n, lines));
}

std::string Matroid::label(int i) const {
  if (i < 0 || i >= ground_size()) throw OutOfRange("label index out of range");
  return labels_ ? (*labels_)[i] : std::to_string(i);
}

Matroid Matroid::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != ground_size())
    throw BadParams("label count must equal ground size");
  Matroid out = *this;
  out.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  return out;
}

Matroid parallel_connection(const Matroid& m1, int e1, const Matroid& m2, int e2) {
  if (e1 < 0 || e1 >= m1.ground_size() || e2 < 0 || e2 >= m2.ground_size())
    throw OutOfRange("basepoint index out of range");
  if (m1.rank(ElementSet::of(m1.ground_size(), {e1})) == 0)
    throw BasepointLoop("left basepoint is a loop");
  if (m2.rank(ElementSet::of(m2.ground_size(), {e2})) == 0)
    throw BasepointLoop("right basepoint is a loop");

  Matroid out(std::make_shared<ParallelNode>(m1, e1, m2, e2));
  if (m1.has_labels() || m2.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(out.ground_size());
    for (int i = 0; i < m1.ground_size(); ++i) labels.push_back(m1.label(i));
    for (int j = 0; j < m2.ground_size(); ++j)
      if (j != e2) labels.push_back(m2.label(j));
    out = out.with_labels(std::move(labels));
  }
  return out;
}

std::vector<ElementSet> circuits_bruteforce(const Matroid& m) {
  const int n = m.ground_size();
  if (n > 12) throw TooLarge("exhaustive circuit scan is limited to 12 elements");
  const uint32_t total = uint32_t{1} << n;
  std::vector<char> dep(total, 0);
  for (uint32_t mask = 1; mask < total; ++mask) {
    ElementSet x(n);
    for (int b = 0; b < n; ++b)
      if (mask & (uint32_t{1} << b)) x.set(b);
    dep[mask] = m.rank(x) < std::popcount(mask);
  }
  std::vector<ElementSet> circuits;
  for (uint32_t mask = 1; mask < total; ++mask) {
    if (!dep[mask]) continue;
    bool minimal = true;
    for (uint32_t rest = mask; rest && minimal;) {
      uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      minimal = !dep[mask ^ bit];
    }
    if (!minimal) continue;
    ElementSet x(n);
    for (int b = 0; b < n; ++b)
      if (mask & (uint32_t{1} << b)) x.set(b);
    circuits.push_back(std::move(x));
  }
  std::sort(circuits.begin(), circuits.end(), ElementSet::list_lex_less);
  return circuits;
}

}  // namespace hypermat
