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

#ifndef EPSEQ_RATIONAL_HPP_
#define EPSEQ_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace epseq {

// Exact arbitrary-precision rational. cpp_rational keeps the canonical
// form we rely on everywhere: denominator > 0, gcd(|num|, den) = 1,
// zero stored as 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" with optional leading '-'. Decimal notation is
// rejected: all file formats carry exact rationals only.
Rational parse_rational(std::string_view text);

// Canonical form: "p/q", or just "p" when q == 1.
std::string format_rational(const Rational& q);

inline int sign_of(const Rational& q) { return q.sign(); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace epseq

#endif  // EPSEQ_RATIONAL_HPP_
