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

#ifndef EPSEQ_ERRORS_HPP_
#define EPSEQ_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace epseq {

// Base class for all epseq error conditions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define EPSEQ_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

EPSEQ_DEFINE_ERROR(DivisionByZeroError);
EPSEQ_DEFINE_ERROR(NotFiniteError);
EPSEQ_DEFINE_ERROR(PoleAtPointError);
EPSEQ_DEFINE_ERROR(ParseError);
EPSEQ_DEFINE_ERROR(DifferentPlayersError);
EPSEQ_DEFINE_ERROR(InvalidGameError);
EPSEQ_DEFINE_ERROR(InvalidProfileError);
EPSEQ_DEFINE_ERROR(WrongPlayerError);
EPSEQ_DEFINE_ERROR(BadDistributionError);
EPSEQ_DEFINE_ERROR(InvalidTrembleError);
EPSEQ_DEFINE_ERROR(NotCompletelyMixedError);
EPSEQ_DEFINE_ERROR(NotInfinitesimallyCloseError);
EPSEQ_DEFINE_ERROR(ZeroConditioningEventError);
EPSEQ_DEFINE_ERROR(IncompatibleModelError);
EPSEQ_DEFINE_ERROR(RouteDisagreementError);
EPSEQ_DEFINE_ERROR(NotRationalizableError);
EPSEQ_DEFINE_ERROR(PreconditionFailedError);
EPSEQ_DEFINE_ERROR(FormMismatchError);

#undef EPSEQ_DEFINE_ERROR

}  // namespace epseq

#endif  // EPSEQ_ERRORS_HPP_
