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

#include <map>
#include <vector>

#include "ictn/cyclotomic.hpp"
#include "ictn/linalg.hpp"
#include "ictn/rational.hpp"

namespace ictn {

/// The ordered index set R = {j : 1 <= j <= n/2, gcd(j, n) = 1}, which
/// indexes the rows and columns of every matrix in this module. All matrix
/// builders apply the subscript convention: an index expression like j*k^-1
/// stands for its representative in {1, ..., n}.
class ResidueSet {
public:
    static ResidueSet create(long n);  // throws std::invalid_argument for n < 3

    long modulus() const { return modulus_; }
    const std::vector<long>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    std::size_t index_of(long j) const;  // position of j in members()

private:
    long modulus_ = 0;
    std::vector<long> members_;
};

ResidueSet residue_set(long n);

/// s_j = zeta^j - zeta^{-j} = 2i sin(2 pi j/n), c_j = zeta^j + zeta^{-j} = 2 cos(2 pi j/n).
CycElem s_elem(long n, long j);
CycElem c_elem(long n, long j);

/// ct_1 = (2^r n^(r-1)/r) sum_{k=1..n} B_r(k/n) zeta^{-k} - delta_{r,1};
/// exact for every n >= 3 (n need not be square-free).
CycElem ct_zeta(long n, long r);

/// ct_k = sigma_k(ct_1); embeds to i^r cot^(r-1)(pi k/n).
CycElem ct_k(long n, long r, long k);

/// Coefficient of zeta^j in the square-free expansion of ct_1 over the unit
/// basis {zeta^j : gcd(j,n)=1}; requires n square-free, gcd(j, n) = 1.
Rat btilde_coeff(long n, long r, long j);

/// Linear combination over the s- (odd r) or c- (even r) half basis,
/// indexed by R. Zero coefficients are omitted from the map.
struct SinCosExpr {
    long n = 3;
    long r = 1;
    bool sine_basis = true;
    std::map<long, Rat> coeffs;

    CycElem to_cyc() const;
    Rat coeff_or_zero(long j) const;
};

/// ct_1 as sum_{j in R} btilde_j s_j (odd r) or c_j (even r); square-free n.
SinCosExpr ct_sincos(long n, long r);

enum class SCBasis { Sine, Cosine };

RatMatrix build_btilde_matrix(long n, long r);          // square-free n
CycMatrix build_ct_matrix(long n, long r);              // any n >= 3
CycMatrix build_sc_matrix(long n, SCBasis basis);       // S or C
CycMatrix build_sc_inverse_matrix(long n, SCBasis basis);  // from the lambda closed form

/// lambda(k) = #{q : q >= 3, q | n, k = 1 mod q}, over all divisors q, not
/// only primes. Requires gcd(k, n) = 1.
long lambda_count(long n, long k);

/// Rows of S^{-1} and C^{-1} for square-free n:
///   shat_k = (-1/n) sum_{l in R} (lambda(kl) - lambda(-kl)) s_l
///   chat_k = (1/n) sum_{l in R} (lambda(kl) + lambda(-kl) + rho_n) c_l,
/// rho_n = 2 for odd n, 4 for even n.
CycElem shat(long n, long k);
CycElem chat(long n, long k);

/// icht_1 = sum_{j in R} bhat_{j,1} shat_j (odd r) or chat_j (even r), with
/// bhat the exact inverse of the btilde matrix; square-free n >= 3.
SinCosExpr theorem1_ict(long n, long r);

struct MatrixIctResult {
    CycElem ict1;     // canonical icht_1
    CycMatrix icht;   // the full inverse of CT
};

/// Inverts CT = (ct_{jk*}) over Q(zeta_n); valid for every n >= 3.
MatrixIctResult matrix_ict(long n, long r);

/// icht_k = sigma_{k*}(icht_1); requires gcd(k, n) = 1.
CycElem ict_galois(long n, long r, long k);

/// Half-angle presentation over sa_m = i sin(pi m/n) (odd r) or
/// ca_m = cos(pi m/n) (even r).
struct HalfAngleExpr {
    long n = 3;
    long r = 1;
    bool sa_basis = true;
    std::map<long, Rat> coeffs;

    Rat coeff_or_zero(long m) const;
};

/// Exact rewrite with m(l) = min(2l, n-2l): s_l = 2 sa_{m(l)} always;
/// c_l = 2 ca_{m(l)} when m(l) = 2l and -2 ca_{m(l)} when m(l) = n-2l.
HalfAngleExpr half_angle_convert(const SinCosExpr& expr);

/// Expresses a value of Q(zeta_n), n square-free, over the s- or c- half
/// basis (parity chosen by r). Throws std::domain_error if the value does
/// not lie in the corresponding eigenspace.
SinCosExpr sincos_from_cyc(const CycElem& a, long r);

}  // namespace ictn
