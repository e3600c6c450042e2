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

#ifndef EPSEQ_EPS_POLY_HPP_
#define EPSEQ_EPS_POLY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "epseq/rational.hpp"

namespace epseq {

// Dense univariate polynomial in eps with rational coefficients,
// stored by ascending power. The zero polynomial has no coefficients;
// otherwise the highest stored coefficient is nonzero.
class EpsPoly {
 public:
  EpsPoly() = default;
  explicit EpsPoly(Rational constant);
  explicit EpsPoly(std::vector<Rational> coeffs);

  static EpsPoly zero() { return EpsPoly(); }
  static EpsPoly one() { return EpsPoly(Rational(1)); }
  static EpsPoly eps();  // the monomial eps

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  Rational constant_term() const { return coeff(0); }
  Rational leading_coeff() const;

  // Index of the lowest nonzero coefficient (-1 for zero).
  int low_order() const;
  // Divides by eps^k; requires low_order() >= k.
  EpsPoly shifted_down(int k) const;

  Rational eval(const Rational& x) const;

  EpsPoly operator-() const;
  friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
  EpsPoly scaled(const Rational& c) const;

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<EpsPoly, EpsPoly> divmod(const EpsPoly& a, const EpsPoly& b);
  // Monic greatest common divisor; gcd(0, 0) = 0.
  static EpsPoly gcd(const EpsPoly& a, const EpsPoly& b);
  // Exact division; throws if the remainder is nonzero.
  static EpsPoly exact_div(const EpsPoly& a, const EpsPoly& b);

  bool operator==(const EpsPoly& other) const = default;

  std::string to_string() const;  // e.g. "1 - 2*eps + eps^2"

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace epseq

#endif  // EPSEQ_EPS_POLY_HPP_
