/*
   Copyright 2026 The ictn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "ictn/cyclotomic.hpp"
#include "ictn/rational.hpp"

namespace ictn {

class DirichletChar;

/// Highest index served by the Bernoulli-number cache.
inline constexpr long kMaxBernoulliIndex = 64;

/// The r-th Bernoulli number with the B_1 = -1/2 convention, memoized via the
/// defining recurrence sum_{j<=m} C(m+1, j) B_j = 0.
const Rat& bernoulli_number(long r);

/// Exact value of the r-th Bernoulli polynomial, B_r(x) = sum_k C(r,k) B_k x^(r-k).
Rat bernoulli_poly(long r, const Rat& x);

/// Generalized Bernoulli number B_{r,chi} = f^(r-1) sum_{j=1..f} chi(j) B_r(j/f)
/// for a primitive character chi of conductor f. The result lives in the field
/// generated by chi's values (CycElem of order = chi's order).
CycElem gen_bernoulli(long r, const DirichletChar& chi);

}  // namespace ictn
