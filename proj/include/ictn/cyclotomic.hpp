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

#include <complex>
#include <vector>

#include "ictn/rational.hpp"

namespace ictn {

/// The n-th cyclotomic polynomial Phi_n: monic with integer coefficients,
/// coeffs[k] multiplying x^k, degree phi(n).
struct CycloPoly {
    long order = 1;
    std::vector<Int> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

/// Returns Phi_n from a process-wide memo (pure, thread-safe).
const CycloPoly& cyclotomic_poly(long n);

/// Element of Q(zeta_n) in the group-ring representation: a length-n vector
/// of rationals, coeffs[k] multiplying zeta_n^k. The representation is not
/// unique; canonicalize() reduces modulo Phi_n (degree < phi(n)), which is
/// the normal form used by equality tests and division.
///
/// Values are immutable in practice: all operations return fresh elements,
/// so concurrent use from multiple threads is safe.
class CycElem {
public:
    CycElem() : order_(1), coeffs_(1, Rat(0)) {}
    explicit CycElem(long order);
    CycElem(long order, std::vector<Rat> coeffs);

    static CycElem from_rational(long order, const Rat& value);
    /// zeta_order^k (k taken mod order, may be negative).
    static CycElem zeta_power(long order, long k);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// Coefficient of zeta^k with k reduced mod order.
    const Rat& coeff(long k) const;
    Rat& coeff(long k);

    bool is_zero() const;       // true iff the canonical form vanishes
    bool is_rational() const;   // canonical form has degree < 1
    Rat rational_value() const; // requires is_rational()

    CycElem operator-() const;
    CycElem& operator+=(const CycElem& rhs);
    CycElem& operator-=(const CycElem& rhs);
    friend CycElem operator+(CycElem lhs, const CycElem& rhs) { return lhs += rhs; }
    friend CycElem operator-(CycElem lhs, const CycElem& rhs) { return lhs -= rhs; }
    friend CycElem operator*(const CycElem& lhs, const CycElem& rhs);
    friend CycElem operator*(const CycElem& lhs, const Rat& scalar);
    friend CycElem operator*(const Rat& scalar, const CycElem& rhs) { return rhs * scalar; }

    /// Canonical equality (same order required).
    friend bool operator==(const CycElem& lhs, const CycElem& rhs);
    friend bool operator!=(const CycElem& lhs, const CycElem& rhs) { return !(lhs == rhs); }

private:
    long order_;
    std::vector<Rat> coeffs_;
};

/// Reduction modulo Phi_n: all coefficients of zeta^k for k >= phi(n) are zero.
CycElem canonicalize(const CycElem& a);

/// a * b^{-1}; b^{-1} via the extended Euclidean algorithm against Phi_n.
/// Throws std::domain_error when b is zero.
CycElem field_div(const CycElem& a, const CycElem& b);
CycElem field_inv(const CycElem& b);

/// Galois automorphism sigma_k (zeta -> zeta^k); requires gcd(k, order) = 1.
CycElem galois_apply(const CycElem& a, long k);

/// Image under zeta_n -> zeta_m^{m/n}; requires order | m.
CycElem lift_to_order(const CycElem& a, long m);

/// Inverse of lift_to_order: expresses a over Q(zeta_m) for m | order.
/// Throws std::domain_error if the value does not lie in that subfield.
CycElem restrict_to_order(const CycElem& a, long m);

/// Sum of coeffs[k] * e^(2*pi*i*k/n) in double precision. Accumulation is
/// done in long double; the result error is O(n * max|coeff| * eps) with
/// eps = 2^-52.
std::complex<double> embed_complex(const CycElem& a);

}  // namespace ictn
