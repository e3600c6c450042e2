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

#ifndef EPSEQ_FEASIBILITY_HPP_
#define EPSEQ_FEASIBILITY_HPP_

#include <optional>
#include <vector>

#include "epseq/rational.hpp"

namespace epseq {

// Finds mu in the probability simplex of dimension `dim` satisfying
// row . mu >= 0 for every constraint row, or reports infeasibility.
// Exact: the feasible set is a polytope, so when it is nonempty some
// vertex has dim-1 tight constraints among {mu_k >= 0} and the rows;
// we enumerate those bases and solve exactly. Intended for the small
// belief-existence systems of the strategic-form checks.
std::optional<std::vector<Rational>> feasible_belief(
    std::size_t dim, const std::vector<std::vector<Rational>>& rows);

}  // namespace epseq

#endif  // EPSEQ_FEASIBILITY_HPP_
