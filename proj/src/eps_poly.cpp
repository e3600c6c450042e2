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

#include "epseq/eps_poly.hpp"

#include <algorithm>
#include <sstream>

#include "epseq/errors.hpp"

namespace epseq {

EpsPoly::EpsPoly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

EpsPoly::EpsPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

EpsPoly EpsPoly::eps() { return EpsPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void EpsPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational EpsPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational EpsPoly::leading_coeff() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

int EpsPoly::low_order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

EpsPoly EpsPoly::shifted_down(int k) const {
  if (k == 0) return *this;
  if (is_zero()) return *this;
  if (low_order() < k) throw Error("shifted_down would truncate nonzero terms");
  return EpsPoly(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Rational EpsPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return EpsPoly(std::move(out));
}

EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) { return a + (-b); }

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
  if (a.is_zero() || b.is_zero()) return EpsPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return EpsPoly(std::move(out));
}

EpsPoly EpsPoly::scaled(const Rational& c) const {
  if (c == 0) return EpsPoly();
  EpsPoly out(*this);
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

std::pair<EpsPoly, EpsPoly> EpsPoly::divmod(const EpsPoly& a, const EpsPoly& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (a.degree() < b.degree()) return {EpsPoly(), a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational lead = b.leading_coeff();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + b.degree())] / lead;
    quo[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= c * b.coeff(j);
  }
  return {EpsPoly(std::move(quo)), EpsPoly(std::move(rem))};
}

EpsPoly EpsPoly::gcd(const EpsPoly& a, const EpsPoly& b) {
  EpsPoly x = a, y = b;
  while (!y.is_zero()) {
    EpsPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(Rational(1) / x.leading_coeff());  // monic
}

EpsPoly EpsPoly::exact_div(const EpsPoly& a, const EpsPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("exact_div: nonzero remainder");
  return q;
}

std::string EpsPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const Rational mag = rational_abs(c);
    if (k == 0) {
      out << format_rational(mag);
    } else {
      if (mag != 1) out << format_rational(mag) << "*";
      out << "eps";
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

}  // namespace epseq
