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

#include "hypermat/gf.hpp"

#include <algorithm>
#include <map>

namespace hypermat {
namespace {

// Conway polynomials for every supported extension order, monic, low degree
// first. Irreducibility is re-checked in Field::make.
const std::map<int, std::vector<int>>& modulus_table() {
  static const std::map<int, std::vector<int>> table = {
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {9, {2, 2, 1}},
      {16, {1, 1, 0, 0, 1}},
      {25, {2, 4, 1}},
      {27, {1, 2, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
      {49, {3, 6, 1}},
      {64, {1, 1, 0, 1, 1, 0, 1}},
      {81, {2, 0, 0, 2, 1}},
      {121, {2, 7, 1}},
      {125, {3, 3, 0, 1}},
      {128, {1, 1, 0, 0, 0, 0, 0, 1}},
  };
  return table;
}

using Poly = std::vector<int>;  // coefficients mod p, low degree first

int degree(const Poly& f) {
  for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
    if (f[d] != 0) return d;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

// Remainder of f by a monic divisor g.
Poly poly_mod(Poly f, const Poly& g, int p) {
  int dg = degree(g);
  for (int d = degree(f); d >= dg; d = degree(f)) {
    int c = f[d];
    for (int i = 0; i <= dg; ++i)
      f[d - dg + i] = ((f[d - dg + i] - c * g[i]) % p + p) % p;
  }
  f.resize(dg);
  return f;
}

int encode(const Poly& f, int p, int k) {
  int v = 0;
  for (int i = k - 1; i >= 0; --i)
    v = v * p + (i < static_cast<int>(f.size()) ? f[i] : 0);
  return v;
}

Poly decode(int v, int p, int k) {
  Poly f(k, 0);
  for (int i = 0; i < k; ++i) {
    f[i] = v % p;
    v /= p;
  }
  return f;
}

// Enumerates every monic polynomial of the given degree over GF(p) and trial
// divides; feasible because q <= 128 caps p^(k/2) at 16.
bool is_irreducible(const Poly& modulus, int p) {
  int k = degree(modulus);
  for (int d = 1; 2 * d <= k; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly g = decode(low, p, d);
      g.push_back(1);  // monic
      if (degree(poly_mod(modulus, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<PrimePower> prime_power_decompose(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, k};
}

Field Field::make(int q) {
  if (q > kMaxOrder)
    throw Unsupported("field order " + std::to_string(q) + " exceeds the cap of 128");
  auto pp = prime_power_decompose(q);
  if (!pp)
    throw NotPrimePower(std::to_string(q) + " is not a prime power");

  Field f;
  f.q_ = q;
  f.p_ = pp->p;
  f.k_ = pp->k;
  if (f.k_ == 1) {
    f.modulus_ = {0, 1};
  } else {
    auto it = modulus_table().find(q);
    if (it == modulus_table().end())
      throw Unsupported("no modulus polynomial for order " + std::to_string(q));
    f.modulus_ = it->second;
    if (!is_irreducible(f.modulus_, f.p_))
      throw Unsupported("modulus polynomial for order " + std::to_string(q) +
                        " failed the irreducibility check");
  }

  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    Poly fa = decode(a, f.p_, f.k_);
    for (int b = 0; b < q; ++b) {
      Poly fb = decode(b, f.p_, f.k_);
      Poly sum(f.k_, 0);
      for (int i = 0; i < f.k_; ++i) sum[i] = (fa[i] + fb[i]) % f.p_;
      f.add_[a * q + b] = encode(sum, f.p_, f.k_);
      Poly prod = poly_mod(poly_mul(fa, fb, f.p_), f.modulus_, f.p_);
      f.mul_[a * q + b] = encode(prod, f.p_, f.k_);
    }
    Poly na(f.k_, 0);
    for (int i = 0; i < f.k_; ++i) na[i] = (f.p_ - fa[i]) % f.p_;
    f.neg_[a] = encode(na, f.p_, f.k_);
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f.mul_[a * q + b] == 1) f.inv_[a] = b;
  return f;
}

int field_arith(const Field& f, FieldOp op, int a, std::optional<int> b) {
  switch (op) {
    case FieldOp::add:
      if (!b) throw BadParams("add needs two operands");
      return f.add(a, *b);
    case FieldOp::mul:
      if (!b) throw BadParams("mul needs two operands");
      return f.mul(a, *b);
    case FieldOp::neg:
      return f.neg(a);
    case FieldOp::inv:
      return f.inv(a);
  }
  throw BadParams("unknown field operation");
}

}  // namespace hypermat
