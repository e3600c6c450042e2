// Copyright 2026 The epseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EPSEQ_NONSTD_HPP_
#define EPSEQ_NONSTD_HPP_

#include <string>

#include "epseq/eps_poly.hpp"
#include "epseq/rational.hpp"

namespace epseq {

// An element of the ordered field of rational functions in a single
// positive infinitesimal eps, restricted to rational coefficients.
//
// Canonical form: eps^order * num(eps) / den(eps) with
//   - num(0) != 0 (except for the canonical zero: order 0, num 0, den 1),
//   - den(0) == 1,
//   - gcd(num, den) == 1.
// Canonical form is unique, so equality is structural, the sign is the
// sign of num's constant term, and the standard part is an O(1) read.
//
// Values are immutable after construction; concurrent reads are safe.
class NonstdNum {
 public:
  NonstdNum() : order_(0), num_(), den_(EpsPoly::one()) {}  // zero
  NonstdNum(int value) : NonstdNum(Rational(value)) {}      // NOLINT: implicit by design
  NonstdNum(const Rational& value);                         // NOLINT: implicit by design

  static NonstdNum from_rational(const Rational& q) { return NonstdNum(q); }
  static NonstdNum epsilon();
  // Canonicalizes eps^order * num/den. den must be a nonzero polynomial.
  static NonstdNum make(int order, EpsPoly num, EpsPoly den);

  bool is_zero() const { return num_.is_zero(); }
  int order() const { return order_; }
  const EpsPoly& num() const { return num_; }
  const EpsPoly& den() const { return den_; }

  friend NonstdNum operator+(const NonstdNum& a, const NonstdNum& b);
  friend NonstdNum operator-(const NonstdNum& a, const NonstdNum& b);
  friend NonstdNum operator*(const NonstdNum& a, const NonstdNum& b);
  friend NonstdNum operator/(const NonstdNum& a, const NonstdNum& b);  // DivisionByZeroError
  NonstdNum operator-() const;
  NonstdNum& operator+=(const NonstdNum& b) { return *this = *this + b; }
  NonstdNum& operator-=(const NonstdNum& b) { return *this = *this - b; }
  NonstdNum& operator*=(const NonstdNum& b) { return *this = *this * b; }
  NonstdNum& operator/=(const NonstdNum& b) { return *this = *this / b; }

  // Sign under the field order extending 0 < eps < r for every rational
  // r > 0: the sign of the lowest-order term of the series expansion.
  int sign() const;

  // The standard part of a finite element; NotFiniteError when order < 0.
  Rational standard_part() const;
  bool is_finite() const { return is_zero() || order_ >= 0; }
  // By convention 0 counts as infinitesimal.
  bool is_infinitesimal() const { return is_zero() || order_ >= 1; }
  // order 0 with num/den constant (a standard rational embedded in the field).
  bool is_standard() const;

  // Exact value at eps = e for a concrete rational e > 0 (diagnostics).
  // PoleAtPointError if den(e) == 0.
  Rational eval_at(const Rational& e) const;

  bool operator==(const NonstdNum& other) const = default;

  std::string to_string() const;

 private:
  int order_;
  EpsPoly num_;
  EpsPoly den_;
};

// Three-way comparison under the field order: -1, 0, +1.
int cmp(const NonstdNum& a, const NonstdNum& b);

inline bool operator<(const NonstdNum& a, const NonstdNum& b) { return cmp(a, b) < 0; }
inline bool operator>(const NonstdNum& a, const NonstdNum& b) { return cmp(a, b) > 0; }
inline bool operator<=(const NonstdNum& a, const NonstdNum& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const NonstdNum& a, const NonstdNum& b) { return cmp(a, b) >= 0; }

NonstdNum nonstd_abs(const NonstdNum& a);
NonstdNum nonstd_max(const NonstdNum& a, const NonstdNum& b);
NonstdNum nonstd_min(const NonstdNum& a, const NonstdNum& b);

}  // namespace epseq

#endif  // EPSEQ_NONSTD_HPP_
