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

#include <vector>

#include "ictn/cyclotomic.hpp"
#include "ictn/rational.hpp"

namespace ictn {

/// One cyclic factor of (Z/nZ)*: a generator (lifted to a residue mod n via
/// CRT) together with its multiplicative order.
struct UnitGroupComponent {
    long prime_power = 1;   // the p^a block this generator comes from
    long generator = 1;     // representative mod n, congruent to 1 in other blocks
    long order = 1;
};

/// Structure of the unit group (Z/nZ)* as a product of cyclic components.
/// Odd prime powers contribute one generator each; 4 contributes one of order
/// 2; 2^a with a >= 3 contributes the pair {-1, 5}.
class UnitGroupStructure {
public:
    static const UnitGroupStructure& of(long n);  // memoized, thread-safe

    long modulus() const { return modulus_; }
    long phi() const { return phi_; }
    long exponent() const { return exponent_; }  // lcm of component orders
    const std::vector<UnitGroupComponent>& components() const { return components_; }

    /// Exponent vector of a unit u over the generators. Requires gcd(u, n) = 1.
    std::vector<long> decompose(long u) const;

private:
    explicit UnitGroupStructure(long n);

    long modulus_;
    long phi_;
    long exponent_;
    std::vector<UnitGroupComponent> components_;
    std::vector<std::vector<long>> dlog_;  // per component: residue mod p^a -> exponent (-1 off units)
};

/// Dirichlet character mod n, encoded by its exponent vector over the unit
/// group generators: chi(g_i) = exp(2*pi*i*e_i/d_i). Values are recorded as
/// exponents of a fixed root of unity of order = the character's order.
class DirichletChar {
public:
    DirichletChar(long modulus, std::vector<long> exponents);

    long modulus() const { return modulus_; }
    const std::vector<long>& exponents() const { return exponents_; }
    long order() const { return order_; }
    int parity() const { return parity_; }  // chi(-1), +1 or -1
    long conductor() const { return conductor_; }
    bool is_principal() const { return order_ == 1; }

    /// chi(j) = zeta_order^value_exponent(j); -1 encodes chi(j) = 0.
    long value_exponent(long j) const;
    bool is_unit_at(long j) const { return value_exponent(j) >= 0; }

    /// chi(j) as a CycElem of the given order (a multiple of the character order);
    /// zero element when gcd(j, n) > 1.
    CycElem value(long j, long target_order) const;

    /// Complex-conjugate (inverse) character.
    DirichletChar conjugate() const;

    /// The primitive character mod conductor() attached to this character.
    DirichletChar primitive() const;

    friend bool operator==(const DirichletChar& a, const DirichletChar& b);

private:
    long modulus_;
    std::vector<long> exponents_;
    long order_ = 1;
    int parity_ = 1;
    long conductor_ = 1;
    std::vector<long> value_exp_;  // length modulus_, indexed by j mod modulus_
};

/// All phi(n) characters mod n, ordered lexicographically by exponent vector.
std::vector<DirichletChar> enumerate_chars(long n);

/// The subset X_r = {chi : chi(-1) = (-1)^r}, in enumeration order.
std::vector<DirichletChar> chars_with_parity(long n, long r);

/// Gauss sum tau(chi) = sum_{j=1..f} chi(j) zeta_f^{-j} of a primitive
/// character; result order lcm(f, character order).
CycElem gauss_sum(const DirichletChar& chi_f);

/// Leopoldt coordinate y(chi|a), defined by
///   y(chi|a) tau(conj(chi)_f) = sum_{(j,n)=1} conj(chi)(j) sigma_j(a),
/// computed in Q(zeta_M), M = lcm(n, character order).
CycElem char_coordinate(const DirichletChar& chi, const CycElem& a);

/// Closed form of y(chi|ct_1): (2n/f)^r prod_{p|n}(1 - conj(chi)_f(p)/p^r)
/// * B_{r,chi_f}/r for chi of parity (-1)^r, else zero. Order M as above.
CycElem y_ct1_closed(long n, long r, const DirichletChar& chi);

/// Inverse cotangent number via the character-coordinate formula
///   icht_1 = (-1)^r 2^(2-r) r/(phi(n) n^r) sum_{chi in X_r}
///            f^(r-1) prod_{p|n}(1 - chi_f(p)/p^r)^(-1) tau(conj(chi)_f)/B_{r,conj(chi)_f};
/// valid for every n >= 3, result restricted to Q(zeta_n).
/// Throws std::domain_error with a diagnostic if some B_{r,conj(chi)_f} = 0.
CycElem theorem2_ict(long n, long r);

/// Checks y(chi|icht_1) = 4 (-1)^r / f * y(conj(chi)|ct_1)^{-1} exactly;
/// vacuously true when chi's parity does not match (-1)^r.
bool inversion_relation_check(long n, long r, const DirichletChar& chi);

/// Checks, with a = ct_1 and X0 = (chi(k))_{k in R, chi in X_r}:
/// X0 conj(X0)^T = (phi(n)/2) I and X0 diag(y(chi|a) tau(conj(chi)_f)) conj(X0)^T
/// = phi(n) CT, both exactly in Q(zeta_M).
bool spectral_check(long n, long r);

}  // namespace ictn
