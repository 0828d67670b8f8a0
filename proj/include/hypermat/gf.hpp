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

#include <optional>
#include <string>
#include <vector>

#include "hypermat/errors.hpp"

namespace hypermat {

struct PrimePower {
  int p;  // prime
  int k;  // exponent, >= 1
};

bool is_prime(int n);

/// Decomposes q as p^k for a single prime p; nullopt when q has two distinct
/// prime divisors or q < 2.
std::optional<PrimePower> prime_power_decompose(int q);

inline bool is_prime_power(int q) { return prime_power_decompose(q).has_value(); }

/// Arithmetic in GF(p^k) for prime powers 2 <= q <= 128. Elements are encoded
/// as integers 0..q-1 read as base-p coefficient vectors, low degree first.
/// Extension fields reduce modulo a fixed monic modulus polynomial (the Conway
/// polynomial for that order); the modulus is re-verified irreducible at
/// construction rather than trusted from the table.
class Field {
 public:
  static constexpr int kMaxOrder = 128;

  /// Builds GF(q). Throws NotPrimePower / Unsupported per the q precondition.
  static Field make(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int k() const { return k_; }

  /// Monic modulus polynomial, length k+1, low degree first. For prime fields
  /// (k == 1) this is the polynomial x, which is never used in arithmetic.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return neg_[at(a)]; }
  int inv(int a) const {
    if (at(a) == 0) throw DivisionByZero("inverse of zero");
    return inv_[a];
  }

 private:
  Field() = default;
  int at(int a) const {
    if (a < 0 || a >= q_) throw OutOfRange("field element out of range");
    return a;
  }
  int idx(int a, int b) const { return at(a) * q_ + at(b); }

  int q_ = 0, p_ = 0, k_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
};

enum class FieldOp { add, mul, neg, inv };

/// Single-operation dispatcher used by the CLI debug surface.
int field_arith(const Field& f, FieldOp op, int a, std::optional<int> b);

}  // namespace hypermat
