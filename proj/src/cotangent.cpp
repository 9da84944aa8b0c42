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

#include "ictn/cotangent.hpp"

#include <algorithm>
#include <stdexcept>

#include "ictn/bernoulli.hpp"

namespace ictn {

namespace {

long moebius_long(long n) {
    long mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

void require_square_free(long n, const char* where) {
    if (!is_square_free(n)) throw std::invalid_argument(std::string(where) + ": n must be square-free");
}

void require_modulus(long n, const char* where) {
    if (n < 3) throw std::invalid_argument(std::string(where) + ": n must be at least 3");
}

}  // namespace

ResidueSet ResidueSet::create(long n) {
    require_modulus(n, "ResidueSet");
    ResidueSet rs;
    rs.modulus_ = n;
    for (long j = 1; 2 * j <= n; ++j)
        if (gcd_long(j, n) == 1) rs.members_.push_back(j);
    return rs;
}

std::size_t ResidueSet::index_of(long j) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), j);
    if (it == members_.end() || *it != j) throw std::invalid_argument("ResidueSet: index not in R");
    return static_cast<std::size_t>(it - members_.begin());
}

ResidueSet residue_set(long n) { return ResidueSet::create(n); }

CycElem s_elem(long n, long j) {
    CycElem e(n);
    e.coeff(j) += 1;
    e.coeff(-j) -= 1;
    return e;
}

CycElem c_elem(long n, long j) {
    CycElem e(n);
    e.coeff(j) += 1;
    e.coeff(-j) += 1;
    return e;
}

CycElem ct_zeta(long n, long r) {
    require_modulus(n, "ct_zeta");
    if (r < 1) throw std::invalid_argument("ct_zeta: r must be positive");
    CycElem acc(n);
    for (long k = 1; k <= n; ++k) acc.coeff(-k) += bernoulli_poly(r, make_rat(k, n));
    acc = acc * make_rat(int_pow(Int(2), r) * int_pow(Int(n), r - 1), Int(r));
    if (r == 1) acc.coeff(0) -= 1;
    return acc;
}

CycElem ct_k(long n, long r, long k) {
    if (gcd_long(rep_mod(k, n), n) != 1) throw std::invalid_argument("ct_k: k not coprime to n");
    return galois_apply(ct_zeta(n, r), k);
}

Rat btilde_coeff(long n, long r, long j) {
    require_modulus(n, "btilde_coeff");
    require_square_free(n, "btilde_coeff");
    if (r < 1) throw std::invalid_argument("btilde_coeff: r must be positive");
    if (gcd_long(rep_mod(j, n), n) != 1) throw std::invalid_argument("btilde_coeff: j not coprime to n");

    const long j0 = rep_mod(j, n);
    const long ntilde = (r % 2 == 1) ? n - 1 : n;
    Rat acc(0);
    for (long d : divisors(n)) {
        const long mu = moebius_long(d);
        if (mu == 0) continue;
        const long q = n / d;
        Rat inner(0);
        for (long k = 1; k <= ntilde; ++k) {
            if (gcd_long(k, n) != d) continue;
            if (rep_mod(k - j0, q) % q != 0) continue;
            inner += bernoulli_poly(r, make_rat(k, n));
        }
        acc += Rat(mu) * inner;
    }
    const Int sign = (r % 2 == 1) ? Int(-1) : Int(1);
    return acc * make_rat(sign * int_pow(Int(2), r) * int_pow(Int(n), r - 1), Int(r));
}

CycElem SinCosExpr::to_cyc() const {
    CycElem acc(n);
    for (const auto& [j, b] : coeffs) acc += (sine_basis ? s_elem(n, j) : c_elem(n, j)) * b;
    return acc;
}

Rat SinCosExpr::coeff_or_zero(long j) const {
    auto it = coeffs.find(j);
    return it == coeffs.end() ? Rat(0) : it->second;
}

SinCosExpr ct_sincos(long n, long r) {
    require_square_free(n, "ct_sincos");
    SinCosExpr expr{n, r, r % 2 == 1, {}};
    for (long j : residue_set(n).members()) {
        Rat b = btilde_coeff(n, r, j);
        if (sgn(b) != 0) expr.coeffs.emplace(j, std::move(b));
    }
    return expr;
}

RatMatrix build_btilde_matrix(long n, long r) {
    require_square_free(n, "build_btilde_matrix");
    const ResidueSet rs = residue_set(n);
    const std::size_t m = rs.size();
    RatMatrix mat(m);
    for (std::size_t a = 0; a < m; ++a) {
        const long j = rs.members()[a];
        for (std::size_t b = 0; b < m; ++b) {
            const long kinv = inv_mod(rs.members()[b], n);
            mat.at(a, b) = btilde_coeff(n, r, rep_mod(j * kinv, n));
        }
    }
    return mat;
}

CycMatrix build_ct_matrix(long n, long r) {
    const ResidueSet rs = residue_set(n);
    const CycElem ct1 = ct_zeta(n, r);
    const std::size_t m = rs.size();
    CycMatrix mat(m, n);
    for (std::size_t a = 0; a < m; ++a) {
        const long j = rs.members()[a];
        for (std::size_t b = 0; b < m; ++b) {
            const long kinv = inv_mod(rs.members()[b], n);
            mat.at(a, b) = galois_apply(ct1, rep_mod(j * kinv, n));
        }
    }
    return mat;
}

CycMatrix build_sc_matrix(long n, SCBasis basis) {
    const ResidueSet rs = residue_set(n);
    const std::size_t m = rs.size();
    CycMatrix mat(m, n);
    for (std::size_t a = 0; a < m; ++a) {
        const long j = rs.members()[a];
        for (std::size_t b = 0; b < m; ++b) {
            const long idx = rep_mod(j * inv_mod(rs.members()[b], n), n);
            mat.at(a, b) = basis == SCBasis::Sine ? s_elem(n, idx) : c_elem(n, idx);
        }
    }
    return mat;
}

CycMatrix build_sc_inverse_matrix(long n, SCBasis basis) {
    require_square_free(n, "build_sc_inverse_matrix");
    const ResidueSet rs = residue_set(n);
    const std::size_t m = rs.size();
    CycMatrix mat(m, n);
    for (std::size_t a = 0; a < m; ++a) {
        const long j = rs.members()[a];
        for (std::size_t b = 0; b < m; ++b) {
            const long idx = rep_mod(j * inv_mod(rs.members()[b], n), n);
            mat.at(a, b) = basis == SCBasis::Sine ? shat(n, idx) : chat(n, idx);
        }
    }
    return mat;
}

long lambda_count(long n, long k) {
    if (gcd_long(rep_mod(k, n), n) != 1) throw std::invalid_argument("lambda_count: k not coprime to n");
    long count = 0;
    for (long q : divisors(n))
        if (q >= 3 && rep_mod(k, q) % q == 1 % q) ++count;
    return count;
}

CycElem shat(long n, long k) {
    require_square_free(n, "shat");
    if (gcd_long(rep_mod(k, n), n) != 1) throw std::invalid_argument("shat: k not coprime to n");
    CycElem acc(n);
    for (long l : residue_set(n).members()) {
        const long w = lambda_count(n, k * l) - lambda_count(n, -k * l);
        if (w != 0) acc += s_elem(n, l) * Rat(w);
    }
    return acc * make_rat(-1, n);
}

CycElem chat(long n, long k) {
    require_square_free(n, "chat");
    if (gcd_long(rep_mod(k, n), n) != 1) throw std::invalid_argument("chat: k not coprime to n");
    const long rho = (n % 2 == 1) ? 2 : 4;
    CycElem acc(n);
    for (long l : residue_set(n).members()) {
        const long w = lambda_count(n, k * l) + lambda_count(n, -k * l) + rho;
        if (w != 0) acc += c_elem(n, l) * Rat(w);
    }
    return acc * make_rat(1, n);
}

SinCosExpr theorem1_ict(long n, long r) {
    require_modulus(n, "theorem1_ict");
    require_square_free(n, "theorem1_ict");
    if (r < 1) throw std::invalid_argument("theorem1_ict: r must be positive");

    const ResidueSet rs = residue_set(n);
    const RatMatrix bhat = invert_rat_matrix(build_btilde_matrix(n, r));
    const bool odd = r % 2 == 1;
    const long rho = (n % 2 == 1) ? 2 : 4;

    // icht_1 = sum_j bhat_{j,1} shat_j (or chat_j); expand the lambda closed
    // form of shat/chat to collect coefficients over the half basis.
    std::map<long, Rat> coeffs;
    for (std::size_t a = 0; a < rs.size(); ++a) {
        const Rat& w = bhat.at(a, 0);
        if (sgn(w) == 0) continue;
        const long j = rs.members()[a];
        for (long l : rs.members()) {
            long m;
            if (odd)
                m = -(lambda_count(n, j * l) - lambda_count(n, -j * l));
            else
                m = lambda_count(n, j * l) + lambda_count(n, -j * l) + rho;
            if (m != 0) coeffs[l] += w * make_rat(m, n);
        }
    }
    std::erase_if(coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
    return SinCosExpr{n, r, odd, std::move(coeffs)};
}

MatrixIctResult matrix_ict(long n, long r) {
    require_modulus(n, "matrix_ict");
    if (r < 1) throw std::invalid_argument("matrix_ict: r must be positive");
    CycMatrix icht = invert_cyc_matrix(build_ct_matrix(n, r));
    CycElem ict1 = canonicalize(icht.at(0, 0));  // R starts at 1, so (1,1) sits at (0,0)
    return {std::move(ict1), std::move(icht)};
}

CycElem ict_galois(long n, long r, long k) {
    if (gcd_long(rep_mod(k, n), n) != 1) throw std::invalid_argument("ict_galois: k not coprime to n");
    const CycElem ict1 = is_square_free(n) ? theorem1_ict(n, r).to_cyc() : matrix_ict(n, r).ict1;
    return galois_apply(ict1, inv_mod(k, n));
}

Rat HalfAngleExpr::coeff_or_zero(long m) const {
    auto it = coeffs.find(m);
    return it == coeffs.end() ? Rat(0) : it->second;
}

HalfAngleExpr half_angle_convert(const SinCosExpr& expr) {
    const long n = expr.n;
    HalfAngleExpr out{n, expr.r, expr.sine_basis, {}};
    for (const auto& [l, b] : expr.coeffs) {
        const long m = std::min(2 * l, n - 2 * l);
        if (m == 0) throw std::logic_error("half_angle_convert: index collision");
        long factor = 2;
        if (!expr.sine_basis && m != 2 * l) factor = -2;
        Rat c = b * Rat(factor);
        if (sgn(c) != 0) out.coeffs[m] += c;
    }
    std::erase_if(out.coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

SinCosExpr sincos_from_cyc(const CycElem& a, long r) {
    const long n = a.order();
    require_modulus(n, "sincos_from_cyc");
    require_square_free(n, "sincos_from_cyc");

    const ResidueSet rs = residue_set(n);
    const long deg = cyclotomic_poly(n).degree();
    const std::size_t cols = rs.size();

    std::vector<Rat> mat(static_cast<std::size_t>(deg) * cols, Rat(0));
    const bool odd = r % 2 == 1;
    for (std::size_t c = 0; c < cols; ++c) {
        const long l = rs.members()[c];
        CycElem basis = canonicalize(odd ? s_elem(n, l) : c_elem(n, l));
        for (long i = 0; i < deg; ++i) mat[static_cast<std::size_t>(i) * cols + c] = basis.coeffs()[i];
    }
    CycElem ac = canonicalize(a);
    std::vector<Rat> rhs(ac.coeffs().begin(), ac.coeffs().begin() + deg);

    auto sol = solve_rat_system(static_cast<std::size_t>(deg), cols, std::move(mat), std::move(rhs));
    if (!sol) throw std::domain_error("sincos_from_cyc: value not in the requested eigenspace");

    SinCosExpr expr{n, r, odd, {}};
    for (std::size_t c = 0; c < cols; ++c)
        if (sgn((*sol)[c]) != 0) expr.coeffs.emplace(rs.members()[c], std::move((*sol)[c]));
    return expr;
}

}  // namespace ictn
