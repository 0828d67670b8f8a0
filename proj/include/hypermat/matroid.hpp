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

#include <memory>
#include <string>
#include <vector>

#include "hypermat/element_set.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/gf.hpp"

namespace hypermat {

enum class MatroidKind { uniform, linear, line_set_rank3, parallel_connection };

class Matroid;

/// Immutable rank-oracle node. Concrete variants implement rank_of; the
/// generic closure tests each outside element for rank preservation, and
/// variants override it where a direct construction is cheaper.
class MatroidNode {
 public:
  virtual ~MatroidNode() = default;

  virtual MatroidKind kind() const = 0;
  virtual int rank_of(const ElementSet& x) const = 0;
  virtual ElementSet closure_of(const ElementSet& x) const;

  int ground_size() const { return n_; }
  int full_rank() const { return rank_; }

 protected:
  // Throws OutOfRange unless x lives on this ground set.
  void check_ground(const ElementSet& x) const;

  int n_ = 0;
  int rank_ = 0;
};

class UniformNode final : public MatroidNode {
 public:
  UniformNode(int r, int n);

  MatroidKind kind() const override { return MatroidKind::uniform; }
  int rank_of(const ElementSet& x) const override;
  ElementSet closure_of(const ElementSet& x) const override;
};

/// Columns of a matrix over GF(q); rank is linear rank of a column subset.
class LinearNode final : public MatroidNode {
 public:
  LinearNode(Field field, std::vector<std::vector<int>> columns);

  MatroidKind kind() const override { return MatroidKind::linear; }
  int rank_of(const ElementSet& x) const override;
  ElementSet closure_of(const ElementSet& x) const override;

  const Field& field() const { return field_; }
  const std::vector<std::vector<int>>& columns() const { return columns_; }

 private:
  // Row-reduces the columns of x into echelon basis vectors; returns their
  // count. basis_out may be null when only the rank is wanted.
  int reduce(const ElementSet& x, std::vector<std::vector<int>>* basis_out) const;

  Field field_;
  std::vector<std::vector<int>> columns_;
  int dim_ = 0;  // entries per column
};

/// Simple rank-3 matroid given by its nontrivial lines. Pairs covered by no
/// stored line are implicit 2-element lines; they are never materialized.
class LineSetNode final : public MatroidNode {
 public:
  LineSetNode(int n, const std::vector<ElementSet>& lines);

  MatroidKind kind() const override { return MatroidKind::line_set_rank3; }
  int rank_of(const ElementSet& x) const override;
  ElementSet closure_of(const ElementSet& x) const override;

  int line_count() const { return static_cast<int>(line_off_.size()) - 1; }
  int line_size(int l) const { return line_off_[l + 1] - line_off_[l]; }
  const int* line_begin(int l) const { return line_elems_.data() + line_off_[l]; }
  const int* line_end(int l) const { return line_elems_.data() + line_off_[l + 1]; }
  bool line_contains(int l, int a) const;
  ElementSet line_as_set(int l) const;

  int degree(int a) const { return adj_off_[a + 1] - adj_off_[a]; }
  const int* lines_at_begin(int a) const { return adj_lines_.data() + adj_off_[a]; }
  const int* lines_at_end(int a) const { return adj_lines_.data() + adj_off_[a + 1]; }

  /// Index of the stored line through two distinct elements, or -1 when the
  /// pair is only covered implicitly.
  int line_through(int a, int b) const;

 private:
  // Lines and the element->line adjacency, both in compressed sparse rows.
  std::vector<int> line_off_, line_elems_;
  std::vector<int> adj_off_, adj_lines_;
};

class ParallelNode final : public MatroidNode {
 public:
  ParallelNode(Matroid left, int base_left, Matroid right, int base_right);
  ~ParallelNode() override;

  MatroidKind kind() const override { return MatroidKind::parallel_connection; }
  int rank_of(const ElementSet& x) const override;
  ElementSet closure_of(const ElementSet& x) const override;

  const Matroid& left() const;
  const Matroid& right() const;
  int base_left() const { return base_left_; }
  int base_right() const { return base_right_; }

  /// Composite index of side-2 element j.
  int embed_right(int j) const;

 private:
  struct Pullback;
  Pullback pull(const ElementSet& x) const;

  std::unique_ptr<const Matroid> left_, right_;
  int base_left_ = 0, base_right_ = 0;
};

/// Value handle over an immutable matroid node, with optional display labels.
class Matroid {
 public:
  static Matroid uniform(int rank, int n);
  static Matroid linear(Field field, std::vector<std::vector<int>> columns);
  static Matroid from_lines(int n, const std::vector<ElementSet>& lines);

  int ground_size() const { return node_->ground_size(); }
  int rank() const { return node_->full_rank(); }
  int rank(const ElementSet& x) const { return node_->rank_of(x); }
  ElementSet closure(const ElementSet& x) const { return node_->closure_of(x); }
  ElementSet ground() const { return ElementSet::full(ground_size()); }

  MatroidKind kind() const { return node_->kind(); }
  const MatroidNode& node() const { return *node_; }

  bool has_labels() const { return labels_ != nullptr; }
  std::string label(int i) const;
  Matroid with_labels(std::vector<std::string> labels) const;

 private:
  friend Matroid parallel_connection(const Matroid&, int, const Matroid&, int);
  explicit Matroid(std::shared_ptr<const MatroidNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const MatroidNode> node_;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Glues m2 onto m1 by identifying e2 with e1. Side-1 elements keep their
/// indices; side-2 elements follow in their original order, minus e2.
Matroid parallel_connection(const Matroid& m1, int e1, const Matroid& m2, int e2);

/// All minimal dependent sets, by exhaustive subset scan. Throws TooLarge for
/// ground sets above 12 elements. Canonically ordered.
std::vector<ElementSet> circuits_bruteforce(const Matroid& m);

}  // namespace hypermat
