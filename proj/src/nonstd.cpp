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

#include "epseq/nonstd.hpp"

#include <sstream>
#include <utility>

#include "epseq/errors.hpp"

namespace epseq {

NonstdNum::NonstdNum(const Rational& value) : order_(0), num_(value), den_(EpsPoly::one()) {}

NonstdNum NonstdNum::epsilon() { return make(1, EpsPoly::one(), EpsPoly::one()); }

NonstdNum NonstdNum::make(int order, EpsPoly num, EpsPoly den) {
  if (den.is_zero()) throw DivisionByZeroError("zero denominator polynomial");
  NonstdNum out;
  if (num.is_zero()) return out;  // canonical zero
  const int num_shift = num.low_order();
  const int den_shift = den.low_order();
  order += num_shift - den_shift;
  num = num.shifted_down(num_shift);
  den = den.shifted_down(den_shift);
  const EpsPoly g = EpsPoly::gcd(num, den);
  if (g.degree() > 0) {
    num = EpsPoly::exact_div(num, g);
    den = EpsPoly::exact_div(den, g);
  }
  const Rational den0 = den.constant_term();
  out.order_ = order;
  out.num_ = num.scaled(Rational(1) / den0);
  out.den_ = den.scaled(Rational(1) / den0);
  return out;
}

NonstdNum operator+(const NonstdNum& a, const NonstdNum& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Align on the smaller eps power and add as rational functions.
  const int base = std::min(a.order_, b.order_);
  EpsPoly shift_a = EpsPoly::one();
  EpsPoly shift_b = EpsPoly::one();
  for (int k = base; k < a.order_; ++k) shift_a = shift_a * EpsPoly::eps();
  for (int k = base; k < b.order_; ++k) shift_b = shift_b * EpsPoly::eps();
  return NonstdNum::make(base, a.num_ * shift_a * b.den_ + b.num_ * shift_b * a.den_,
                         a.den_ * b.den_);
}

NonstdNum operator-(const NonstdNum& a, const NonstdNum& b) { return a + (-b); }

NonstdNum NonstdNum::operator-() const {
  NonstdNum out(*this);
  out.num_ = -out.num_;
  return out;
}

NonstdNum operator*(const NonstdNum& a, const NonstdNum& b) {
  if (a.is_zero() || b.is_zero()) return NonstdNum();
  return NonstdNum::make(a.order_ + b.order_, a.num_ * b.num_, a.den_ * b.den_);
}

NonstdNum operator/(const NonstdNum& a, const NonstdNum& b) {
  if (b.is_zero()) throw DivisionByZeroError("division by zero in the eps field");
  if (a.is_zero()) return NonstdNum();
  return NonstdNum::make(a.order_ - b.order_, a.num_ * b.den_, a.den_ * b.num_);
}

int NonstdNum::sign() const {
  if (is_zero()) return 0;
  // den(0) == 1 in canonical form, so the lowest-order term of the
  // series expansion is num(0) * eps^order.
  return sign_of(num_.constant_term());
}

int cmp(const NonstdNum& a, const NonstdNum& b) {
  if (a == b) return 0;
  return (a - b).sign();
}

Rational NonstdNum::standard_part() const {
  if (is_zero()) return Rational(0);
  if (order_ < 0) throw NotFiniteError("standard part of an infinite element: " + to_string());
  if (order_ > 0) return Rational(0);
  return num_.constant_term();  // den(0) == 1
}

bool NonstdNum::is_standard() const {
  if (is_zero()) return true;
  return order_ == 0 && num_.degree() == 0 && den_.degree() == 0;
}

Rational NonstdNum::eval_at(const Rational& e) const {
  if (e <= 0) throw Error("eval_at requires a positive evaluation point");
  if (is_zero()) return Rational(0);
  const Rational den_val = den_.eval(e);
  if (den_val == 0) throw PoleAtPointError("denominator vanishes at eps = " + format_rational(e));
  Rational power(1);
  for (int k = 0; k < order_; ++k) power *= e;
  for (int k = 0; k > order_; --k) power /= e;
  return power * num_.eval(e) / den_val;
}

std::string NonstdNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  if (order_ != 0) {
    out << "eps";
    if (order_ != 1) out << "^" << order_;
    out << " * ";
  }
  if (den_.degree() == 0) {
    if (num_.degree() == 0 && order_ == 0) return num_.to_string();
    out << "(" << num_.to_string() << ")";
  } else {
    out << "(" << num_.to_string() << ")/(" << den_.to_string() << ")";
  }
  return out.str();
}

NonstdNum nonstd_abs(const NonstdNum& a) { return a.sign() < 0 ? -a : a; }

NonstdNum nonstd_max(const NonstdNum& a, const NonstdNum& b) { return cmp(a, b) >= 0 ? a : b; }

NonstdNum nonstd_min(const NonstdNum& a, const NonstdNum& b) { return cmp(a, b) <= 0 ? a : b; }

}  // namespace epseq
