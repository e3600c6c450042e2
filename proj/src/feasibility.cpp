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

#include "epseq/feasibility.hpp"

namespace epseq {

namespace {

// Solves an n x n rational system in place; empty result if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = b[k] / a[k][k];
  return x;
}

bool satisfies_all(const std::vector<Rational>& mu,
                   const std::vector<std::vector<Rational>>& rows) {
  for (const Rational& w : mu) {
    if (w < 0) return false;
  }
  for (const auto& row : rows) {
    Rational dot(0);
    for (std::size_t k = 0; k < mu.size(); ++k) dot += row[k] * mu[k];
    if (dot < 0) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<Rational>> feasible_belief(
    std::size_t dim, const std::vector<std::vector<Rational>>& rows) {
  if (dim == 0) return std::nullopt;

  // Constraint list: dim nonnegativity rows then the caller's rows.
  const std::size_t total = dim + rows.size();
  const auto constraint_row = [&](std::size_t c) {
    std::vector<Rational> row(dim, Rational(0));
    if (c < dim) {
      row[c] = 1;
    } else {
      row = rows[c - dim];
    }
    return row;
  };

  // Choose dim-1 constraints to pin, plus the simplex equality.
  const std::size_t want = dim - 1;

  const auto try_basis = [&](const std::vector<std::size_t>& chosen)
      -> std::optional<std::vector<Rational>> {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    a.reserve(dim);
    b.reserve(dim);
    a.push_back(std::vector<Rational>(dim, Rational(1)));  // sum == 1
    b.push_back(Rational(1));
    for (std::size_t c : chosen) {
      a.push_back(constraint_row(c));
      b.push_back(Rational(0));
    }
    auto mu = solve_square(std::move(a), std::move(b));
    if (!mu) return std::nullopt;
    if (!satisfies_all(*mu, rows)) return std::nullopt;
    return mu;
  };

  if (want == 0) {
    return try_basis({});
  }

  // Enumerate ascending index subsets of size `want`.
  std::vector<std::size_t> idx(want);
  for (std::size_t k = 0; k < want; ++k) idx[k] = k;
  while (true) {
    if (auto mu = try_basis(idx)) return mu;
    // next combination
    std::size_t k = want;
    while (k > 0) {
      --k;
      if (idx[k] + (want - k) < total) {
        ++idx[k];
        for (std::size_t j = k + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (k == 0) return std::nullopt;
    }
  }
}

}  // namespace epseq
