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

#include "ictn/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "ictn/linalg.hpp"

namespace ictn {

namespace {

// Dense integer polynomials, coeffs[k] on x^k, no trailing zeros implied.
std::vector<Int> int_poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// Exact division by a monic divisor; the remainder must vanish.
std::vector<Int> int_poly_div_monic(std::vector<Int> num, const std::vector<Int>& den) {
    const long dn = static_cast<long>(num.size()) - 1;
    const long dd = static_cast<long>(den.size()) - 1;
    if (dn < dd) throw std::logic_error("int_poly_div_monic: degree underflow");
    std::vector<Int> q(dn - dd + 1, Int(0));
    for (long k = dn; k >= dd; --k) {
        Int c = num[k];
        if (sgn(c) == 0) continue;
        q[k - dd] = c;
        for (long i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    for (const Int& c : num)
        if (sgn(c) != 0) throw std::logic_error("int_poly_div_monic: nonzero remainder");
    return q;
}

// Rational polynomials for the Euclidean algorithm mod Phi_n.
using RatPoly = std::vector<Rat>;  // trimmed: empty means zero

void rp_trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    rp_trim(r);
    return r;
}

RatPoly rp_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rp_trim(a);
    return a;
}

// (quotient, remainder) with deg(remainder) < deg(divisor).
std::pair<RatPoly, RatPoly> rp_divrem(RatPoly num, const RatPoly& den) {
    if (den.empty()) throw std::domain_error("rp_divrem: division by zero polynomial");
    const long dd = static_cast<long>(den.size()) - 1;
    if (static_cast<long>(num.size()) - 1 < dd) return {{}, std::move(num)};
    RatPoly q(num.size() - den.size() + 1, Rat(0));
    const Rat& lead = den.back();
    for (long k = static_cast<long>(num.size()) - 1; k >= dd; --k) {
        if (sgn(num[k]) == 0) continue;
        Rat c = num[k] / lead;
        q[k - dd] = c;
        for (long i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    rp_trim(num);
    rp_trim(q);
    return {std::move(q), std::move(num)};
}

}  // namespace

const CycloPoly& cyclotomic_poly(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: order must be positive");
    static std::mutex cache_mutex;
    static std::map<long, std::unique_ptr<CycloPoly>> cache;  // node pointers stay valid
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact integer division.
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    for (long d : divisors(n)) {
        if (d == n) continue;
        num = int_poly_div_monic(std::move(num), cyclotomic_poly(d).coeffs);
    }

    auto poly = std::make_unique<CycloPoly>();
    poly->order = n;
    poly->coeffs = std::move(num);

    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = cache.try_emplace(n, std::move(poly));
    return *it->second;
}

CycElem::CycElem(long order) : order_(order) {
    if (order < 1) throw std::invalid_argument("CycElem: order must be positive");
    coeffs_.assign(order, Rat(0));
}

CycElem::CycElem(long order, std::vector<Rat> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 1) throw std::invalid_argument("CycElem: order must be positive");
    if (static_cast<long>(coeffs_.size()) != order)
        throw std::invalid_argument("CycElem: coefficient vector must have length = order");
}

CycElem CycElem::from_rational(long order, const Rat& value) {
    CycElem e(order);
    e.coeffs_[0] = value;
    return e;
}

CycElem CycElem::zeta_power(long order, long k) {
    CycElem e(order);
    e.coeffs_[rep_mod(k, order) % order] = 1;
    return e;
}

const Rat& CycElem::coeff(long k) const { return coeffs_[rep_mod(k, order_) % order_]; }
Rat& CycElem::coeff(long k) { return coeffs_[rep_mod(k, order_) % order_]; }

bool CycElem::is_zero() const {
    for (const Rat& c : canonicalize(*this).coeffs())
        if (sgn(c) != 0) return false;
    return true;
}

bool CycElem::is_rational() const {
    CycElem c = canonicalize(*this);
    for (long k = 1; k < order_; ++k)
        if (sgn(c.coeffs()[k]) != 0) return false;
    return true;
}

Rat CycElem::rational_value() const {
    CycElem c = canonicalize(*this);
    for (long k = 1; k < order_; ++k)
        if (sgn(c.coeffs()[k]) != 0) throw std::domain_error("rational_value: element is irrational");
    return c.coeffs()[0];
}

CycElem CycElem::operator-() const {
    CycElem r(order_);
    for (long k = 0; k < order_; ++k) r.coeffs_[k] = -coeffs_[k];
    return r;
}

CycElem& CycElem::operator+=(const CycElem& rhs) {
    if (order_ != rhs.order_) throw std::invalid_argument("CycElem: order mismatch");
    for (long k = 0; k < order_; ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

CycElem& CycElem::operator-=(const CycElem& rhs) {
    if (order_ != rhs.order_) throw std::invalid_argument("CycElem: order mismatch");
    for (long k = 0; k < order_; ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

CycElem operator*(const CycElem& lhs, const CycElem& rhs) {
    if (lhs.order_ != rhs.order_) throw std::invalid_argument("CycElem: order mismatch");
    const long n = lhs.order_;
    CycElem r(n);
    for (long i = 0; i < n; ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) continue;
        for (long j = 0; j < n; ++j) {
            if (sgn(rhs.coeffs_[j]) == 0) continue;
            long k = i + j;
            if (k >= n) k -= n;
            r.coeffs_[k] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return r;
}

CycElem operator*(const CycElem& lhs, const Rat& scalar) {
    CycElem r(lhs.order_);
    if (sgn(scalar) == 0) return r;
    for (long k = 0; k < lhs.order_; ++k) r.coeffs_[k] = lhs.coeffs_[k] * scalar;
    return r;
}

bool operator==(const CycElem& lhs, const CycElem& rhs) {
    if (lhs.order() != rhs.order()) throw std::invalid_argument("CycElem: order mismatch in comparison");
    return canonicalize(lhs).coeffs() == canonicalize(rhs).coeffs();
}

CycElem canonicalize(const CycElem& a) {
    const long n = a.order();
    const CycloPoly& phi = cyclotomic_poly(n);
    const long deg = phi.degree();
    bool reduced = true;
    for (long k = deg; k < n; ++k) {
        if (sgn(a.coeffs()[k]) != 0) {
            reduced = false;
            break;
        }
    }
    if (reduced) return a;

    std::vector<Rat> c = a.coeffs();
    for (long k = n - 1; k >= deg; --k) {
        if (sgn(c[k]) == 0) continue;
        Rat lead = std::move(c[k]);
        c[k] = 0;
        for (long i = 0; i < deg; ++i) {
            if (sgn(phi.coeffs[i]) == 0) continue;
            c[k - deg + i] -= lead * Rat(phi.coeffs[i]);
        }
    }
    return CycElem(n, std::move(c));
}

CycElem field_inv(const CycElem& b) {
    const long n = b.order();
    CycElem bc = canonicalize(b);

    RatPoly r1(bc.coeffs().begin(), bc.coeffs().end());
    rp_trim(r1);
    if (r1.empty()) throw std::domain_error("field_inv: division by zero");

    const CycloPoly& phi = cyclotomic_poly(n);
    RatPoly r0(phi.coeffs.begin(), phi.coeffs.end());

    // Invariant: t_i * b = r_i (mod Phi_n). Phi_n is irreducible over Q, so
    // the loop ends with a nonzero constant gcd.
    RatPoly t0, t1{Rat(1)};
    while (!r1.empty()) {
        auto [q, rem] = rp_divrem(std::move(r0), r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        RatPoly t2 = rp_sub(std::move(t0), rp_mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("field_inv: unexpected nonconstant gcd");

    std::vector<Rat> inv(n, Rat(0));
    for (std::size_t i = 0; i < t0.size(); ++i) inv[i] = t0[i] / r0[0];
    return CycElem(n, std::move(inv));
}

CycElem field_div(const CycElem& a, const CycElem& b) {
    if (a.order() != b.order()) throw std::invalid_argument("field_div: order mismatch");
    return a * field_inv(b);
}

CycElem galois_apply(const CycElem& a, long k) {
    const long n = a.order();
    const long km = rep_mod(k, n) % n;
    if (gcd_long(km == 0 ? n : km, n) != 1 && n > 1)
        throw std::invalid_argument("galois_apply: k not coprime to the order");
    CycElem r(n);
    for (long j = 0; j < n; ++j) {
        if (sgn(a.coeffs()[j]) == 0) continue;
        r.coeff(km * j) += a.coeffs()[j];
    }
    return r;
}

CycElem lift_to_order(const CycElem& a, long m) {
    const long n = a.order();
    if (m < n || m % n != 0) throw std::invalid_argument("lift_to_order: target is not a multiple of the order");
    if (m == n) return a;
    const long step = m / n;
    CycElem r(m);
    for (long j = 0; j < n; ++j) r.coeff(j * step) = a.coeffs()[j];
    return r;
}

CycElem restrict_to_order(const CycElem& a, long m) {
    const long big = a.order();
    if (m < 1 || big % m != 0) throw std::invalid_argument("restrict_to_order: target does not divide the order");
    if (m == big) return canonicalize(a);

    const long deg_big = cyclotomic_poly(big).degree();
    const long deg_small = cyclotomic_poly(m).degree();
    const long step = big / m;

    // Solve sum_s x_s * lift(zeta_m^s) = a over the canonical basis of Q(zeta_big).
    std::vector<Rat> cols(static_cast<std::size_t>(deg_big) * deg_small, Rat(0));
    for (long s = 0; s < deg_small; ++s) {
        CycElem basis = canonicalize(CycElem::zeta_power(big, s * step));
        for (long i = 0; i < deg_big; ++i) cols[static_cast<std::size_t>(i) * deg_small + s] = basis.coeffs()[i];
    }
    CycElem ac = canonicalize(a);
    std::vector<Rat> rhs(ac.coeffs().begin(), ac.coeffs().begin() + deg_big);

    auto sol = solve_rat_system(deg_big, deg_small, std::move(cols), std::move(rhs));
    if (!sol) throw std::domain_error("restrict_to_order: value does not lie in the requested subfield");

    std::vector<Rat> out(m, Rat(0));
    for (long s = 0; s < deg_small; ++s) out[s] = std::move((*sol)[s]);
    return CycElem(m, std::move(out));
}

std::complex<double> embed_complex(const CycElem& a) {
    const long n = a.order();
    const long double two_pi = 6.283185307179586476925286766559L;
    long double re = 0, im = 0;
    for (long k = 0; k < n; ++k) {
        if (sgn(a.coeffs()[k]) == 0) continue;
        const long double c = static_cast<long double>(a.coeffs()[k].get_d());
        const long double angle = two_pi * static_cast<long double>(k) / static_cast<long double>(n);
        re += c * cosl(angle);
        im += c * sinl(angle);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace ictn
