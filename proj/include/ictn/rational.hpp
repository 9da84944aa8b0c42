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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ictn {

/// Arbitrary-precision integer and rational scalar types. Rationals are
/// kept in lowest terms with a positive denominator (GMP's canonical form);
/// every arithmetic operation is exact.
using Int = mpz_class;
using Rat = mpq_class;

/// Builds a canonical rational from a (possibly unreduced) fraction.
Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);

/// base^exp for exp >= 0.
Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, long exp);

Int binomial(unsigned long n, unsigned long k);

bool is_square_free(long n);
long euler_phi(long n);
std::vector<long> divisors(long n);
std::vector<long> prime_divisors(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

/// Representative of x mod n in {1, ..., n}.
long rep_mod(long x, long n);

/// Inverse of k mod n as a representative in {1, ..., n}; requires gcd(k, n) = 1.
long inv_mod(long k, long n);

/// "num/den" in lowest terms, "/den" omitted when den = 1, sign on the numerator.
std::string rat_to_string(const Rat& q);

/// Parses the rat_to_string format. Throws std::invalid_argument on malformed input.
Rat rat_from_string(std::string_view s);

}  // namespace ictn
