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

#include "ictn/characters.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "ictn/bernoulli.hpp"
#include "ictn/cotangent.hpp"
#include "ictn/linalg.hpp"

namespace ictn {

namespace {

long pow_mod(long base, long exp, long mod) {
    long result = 1 % mod;
    long b = rep_mod(base, mod) % mod;
    while (exp > 0) {
        if (exp & 1) result = (result * b) % mod;
        b = (b * b) % mod;
        exp >>= 1;
    }
    return result;
}

long multiplicative_order(long g, long mod, long group_order) {
    for (long d : divisors(group_order))
        if (pow_mod(g, d, mod) == 1) return d;
    throw std::logic_error("multiplicative_order: order not found");
}

// Smallest primitive root mod p^a (odd p); a generator g mod p is upgraded
// to g + p when g^(p-1) = 1 mod p^2.
long primitive_root_odd_prime_power(long p, long a) {
    const long phi_p = p - 1;
    long g = 2;
    for (;; ++g) {
        if (gcd_long(g, p) != 1) continue;
        if (multiplicative_order(g, p, phi_p) == phi_p) break;
    }
    if (a == 1) return g;
    const long p2 = p * p;
    if (pow_mod(g, p - 1, p2) == 1) g += p;
    return g;
}

// CRT lift: x = r mod q, x = 1 mod (n/q).
long crt_lift(long r, long q, long n) {
    const long m = n / q;
    if (m == 1) return rep_mod(r, n);
    // x = 1 + m*t with m*t = r-1 mod q
    const long minv = inv_mod(m, q) % q;
    const long t = (rep_mod(r - 1, q) % q) * minv % q;
    return rep_mod(1 + m * t, n);
}

}  // namespace

UnitGroupStructure::UnitGroupStructure(long n) : modulus_(n) {
    if (n < 1) throw std::invalid_argument("UnitGroupStructure: modulus must be positive");
    phi_ = euler_phi(n);
    exponent_ = 1;

    long rest = n;
    std::vector<std::pair<long, long>> blocks;  // (p, a)
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            long a = 0;
            while (rest % p == 0) {
                rest /= p;
                ++a;
            }
            blocks.emplace_back(p, a);
        }
    }
    if (rest > 1) blocks.emplace_back(rest, 1);

    for (auto [p, a] : blocks) {
        long pp = 1;
        for (long i = 0; i < a; ++i) pp *= p;
        if (p == 2) {
            if (a == 1) continue;  // trivial block
            if (a == 2) {
                components_.push_back({pp, crt_lift(3, pp, n), 2});
            } else {
                components_.push_back({pp, crt_lift(pp - 1, pp, n), 2});
                components_.push_back({pp, crt_lift(5, pp, n), pp / 4});
            }
        } else {
            const long g = primitive_root_odd_prime_power(p, a);
            components_.push_back({pp, crt_lift(g, pp, n), euler_phi(pp)});
        }
    }

    long check = 1;
    for (const auto& c : components_) {
        exponent_ = lcm_long(exponent_, c.order);
        check *= c.order;
    }
    if (check != phi_) throw std::logic_error("UnitGroupStructure: component orders do not multiply to phi(n)");

    // Discrete-log tables. For a 2^a block with a >= 3 the two tables are
    // built jointly from u = (-1)^s * 5^t.
    dlog_.resize(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) dlog_[i].assign(components_[i].prime_power, -1);
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const long pp = components_[i].prime_power;
        if (pp % 8 == 0 && components_[i].order == 2 && pp >= 8) {
            // handled together with the matching 5-component below
            continue;
        }
        if (pp % 8 == 0) continue;  // the 5-component is also handled jointly
        long x = 1;
        const long g = components_[i].generator % pp;
        for (long t = 0; t < components_[i].order; ++t) {
            dlog_[i][x] = t;
            x = (x * g) % pp;
        }
    }
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const long pp = components_[i].prime_power;
        if (pp % 8 != 0) continue;
        // i is the (-1) component, i+1 the 5 component of the same block
        const std::size_t i5 = i + 1;
        for (long s = 0; s < 2; ++s) {
            for (long t = 0; t < components_[i5].order; ++t) {
                long x = pow_mod(5, t, pp);
                if (s == 1) x = (pp - x) % pp;
                dlog_[i][x] = s;
                dlog_[i5][x] = t;
            }
        }
        break;  // at most one 2^a block
    }
}

const UnitGroupStructure& UnitGroupStructure::of(long n) {
    static std::mutex cache_mutex;
    static std::map<long, std::unique_ptr<UnitGroupStructure>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::unique_ptr<UnitGroupStructure>(new UnitGroupStructure(n))).first;
    return *it->second;
}

std::vector<long> UnitGroupStructure::decompose(long u) const {
    const long u0 = rep_mod(u, modulus_) % modulus_;
    if (gcd_long(u0 == 0 ? modulus_ : u0, modulus_) != 1 && modulus_ > 1)
        throw std::invalid_argument("UnitGroupStructure::decompose: not a unit");
    std::vector<long> exps(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const long t = dlog_[i][u0 % components_[i].prime_power];
        if (t < 0) throw std::logic_error("UnitGroupStructure::decompose: missing dlog entry");
        exps[i] = t;
    }
    return exps;
}

DirichletChar::DirichletChar(long modulus, std::vector<long> exponents)
    : modulus_(modulus), exponents_(std::move(exponents)) {
    const UnitGroupStructure& group = UnitGroupStructure::of(modulus);
    const auto& comps = group.components();
    if (exponents_.size() != comps.size())
        throw std::invalid_argument("DirichletChar: exponent vector has wrong length");
    for (std::size_t i = 0; i < comps.size(); ++i) exponents_[i] = rep_mod(exponents_[i], comps[i].order) % comps[i].order;

    order_ = 1;
    for (std::size_t i = 0; i < comps.size(); ++i)
        order_ = lcm_long(order_, comps[i].order / gcd_long(comps[i].order, exponents_[i] == 0 ? comps[i].order : exponents_[i]));

    // Value table: chi(u) = zeta_N^s with N the group exponent; every s is a
    // multiple of N/order, recorded as an exponent of zeta_order.
    const long N = group.exponent();
    const long stride = N / order_;
    value_exp_.assign(modulus_, -1);
    for (long u = 0; u < modulus_; ++u) {
        const long key = (u == 0) ? modulus_ : u;
        if (gcd_long(key, modulus_) != 1) continue;
        const auto t = group.decompose(u);
        long s = 0;
        for (std::size_t i = 0; i < comps.size(); ++i)
            s = (s + exponents_[i] * t[i] % N * (N / comps[i].order)) % N;
        if (s % stride != 0) throw std::logic_error("DirichletChar: value outside the claimed cyclic group");
        value_exp_[u] = (s / stride) % order_;
    }

    const long vm1 = value_exp_[rep_mod(-1, modulus_) % modulus_];
    parity_ = (vm1 == 0) ? 1 : -1;

    for (long f : divisors(modulus_)) {
        bool factors = true;
        for (long u = 1; u <= modulus_ && factors; ++u) {
            if (gcd_long(u, modulus_) != 1) continue;
            if (rep_mod(u, f) % f == 1 % f && value_exp_[u % modulus_] != 0) factors = false;
        }
        if (factors) {
            conductor_ = f;
            break;
        }
    }
}

long DirichletChar::value_exponent(long j) const {
    return value_exp_[rep_mod(j, modulus_) % modulus_];
}

CycElem DirichletChar::value(long j, long target_order) const {
    if (target_order % order_ != 0)
        throw std::invalid_argument("DirichletChar::value: target order not a multiple of the character order");
    const long v = value_exponent(j);
    if (v < 0) return CycElem(target_order);
    return CycElem::zeta_power(target_order, v * (target_order / order_));
}

DirichletChar DirichletChar::conjugate() const {
    std::vector<long> exps(exponents_.size());
    const auto& comps = UnitGroupStructure::of(modulus_).components();
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = (comps[i].order - exponents_[i]) % comps[i].order;
    return DirichletChar(modulus_, std::move(exps));
}

DirichletChar DirichletChar::primitive() const {
    const long f = conductor_;
    if (f == modulus_) return *this;
    const UnitGroupStructure& gf = UnitGroupStructure::of(f);
    std::vector<long> exps;
    exps.reserve(gf.components().size());
    for (const auto& comp : gf.components()) {
        long lifted = comp.generator;
        while (gcd_long(lifted, modulus_) != 1) lifted += f;
        const long v = value_exp_[lifted % modulus_];
        const long d = comp.order;
        if ((v * d) % order_ != 0) throw std::logic_error("DirichletChar::primitive: incompatible value order");
        exps.push_back((v * d / order_) % d);
    }
    DirichletChar chi_f(f, std::move(exps));
    if (chi_f.order() != order_ || chi_f.conductor() != f)
        throw std::logic_error("DirichletChar::primitive: attached character is inconsistent");
    return chi_f;
}

bool operator==(const DirichletChar& a, const DirichletChar& b) {
    return a.modulus_ == b.modulus_ && a.exponents_ == b.exponents_;
}

std::vector<DirichletChar> enumerate_chars(long n) {
    const UnitGroupStructure& group = UnitGroupStructure::of(n);
    const auto& comps = group.components();
    std::vector<DirichletChar> chars;
    chars.reserve(group.phi());
    std::vector<long> exps(comps.size(), 0);
    for (;;) {
        chars.emplace_back(n, exps);
        long i = static_cast<long>(comps.size()) - 1;
        while (i >= 0) {
            if (++exps[i] < comps[i].order) break;
            exps[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return chars;
}

std::vector<DirichletChar> chars_with_parity(long n, long r) {
    const int want = (r % 2 == 1) ? -1 : 1;
    std::vector<DirichletChar> out;
    for (auto& chi : enumerate_chars(n))
        if (chi.parity() == want) out.push_back(std::move(chi));
    return out;
}

CycElem gauss_sum(const DirichletChar& chi_f) {
    if (chi_f.conductor() != chi_f.modulus())
        throw std::invalid_argument("gauss_sum: character must be primitive");
    const long f = chi_f.modulus();
    const long d = chi_f.order();
    const long L = lcm_long(f, d);
    CycElem acc(L);
    for (long j = 1; j <= f; ++j) {
        const long v = chi_f.value_exponent(j);
        if (v < 0) continue;
        acc.coeff(v * (L / d) - j * (L / f)) += 1;
    }
    return acc;
}

CycElem char_coordinate(const DirichletChar& chi, const CycElem& a) {
    const long n = a.order();
    if (chi.modulus() != n) throw std::invalid_argument("char_coordinate: modulus/order mismatch");
    const long M = lcm_long(n, chi.order());
    const DirichletChar chibar = chi.conjugate();
    CycElem sum(M);
    for (long j = 1; j <= n; ++j) {
        if (!chi.is_unit_at(j)) continue;
        sum += chibar.value(j, M) * lift_to_order(galois_apply(a, j), M);
    }
    const CycElem tau_bar = lift_to_order(gauss_sum(chibar.primitive()), M);
    return field_div(sum, tau_bar);
}

CycElem y_ct1_closed(long n, long r, const DirichletChar& chi) {
    if (chi.modulus() != n) throw std::invalid_argument("y_ct1_closed: modulus mismatch");
    const long M = lcm_long(n, chi.order());
    const int want = (r % 2 == 1) ? -1 : 1;
    if (chi.parity() != want) return CycElem(M);

    const DirichletChar chi_f = chi.primitive();
    const DirichletChar chibar_f = chi_f.conjugate();
    const long f = chi.conductor();
    const long d = chi.order();

    CycElem euler = CycElem::from_rational(d, Rat(1));
    for (long p : prime_divisors(n)) {
        CycElem factor = CycElem::from_rational(d, Rat(1));
        factor -= chibar_f.value(p, d) * make_rat(Int(1), int_pow(Int(p), r));
        euler = euler * factor;
    }
    const Rat scalar = rat_pow(make_rat(2 * n, f), r) / Rat(r);
    return lift_to_order(euler * gen_bernoulli(r, chi_f), M) * scalar;
}

CycElem theorem2_ict(long n, long r) {
    if (n < 3) throw std::invalid_argument("theorem2_ict: n must be at least 3");
    if (r < 1) throw std::invalid_argument("theorem2_ict: r must be positive");

    const UnitGroupStructure& group = UnitGroupStructure::of(n);
    const long M = lcm_long(n, group.exponent());
    CycElem sum(M);

    for (const DirichletChar& chi : chars_with_parity(n, r)) {
        const DirichletChar chi_f = chi.primitive();
        const DirichletChar chibar_f = chi_f.conjugate();
        const long f = chi.conductor();
        const long d = chi.order();

        const CycElem bern = gen_bernoulli(r, chibar_f);
        if (bern.is_zero())
            throw std::domain_error("theorem2_ict: generalized Bernoulli number vanishes for a character of matching parity (n=" +
                                    std::to_string(n) + ", r=" + std::to_string(r) + ")");

        CycElem term = field_inv(bern);
        for (long p : prime_divisors(n)) {
            CycElem factor = CycElem::from_rational(d, Rat(1));
            factor -= chi_f.value(p, d) * make_rat(Int(1), int_pow(Int(p), r));
            term = term * field_inv(factor);
        }
        term = canonicalize(term);

        CycElem lifted = lift_to_order(term, M) * lift_to_order(gauss_sum(chibar_f), M);
        sum += lifted * Rat(int_pow(Int(f), r - 1));
    }

    const Int num = Int((r % 2 == 1) ? -4 : 4) * r;
    const Int den = int_pow(Int(2), r) * euler_phi(n) * int_pow(Int(n), r);
    sum = sum * make_rat(num, den);
    return restrict_to_order(canonicalize(sum), n);
}

bool inversion_relation_check(long n, long r, const DirichletChar& chi) {
    const int want = (r % 2 == 1) ? -1 : 1;
    if (chi.parity() != want) return true;  // both coordinates vanish; nothing to check

    const CycElem ct1 = ct_zeta(n, r);
    const CycElem ict1 = lift_to_order(matrix_ict(n, r).ict1, n);
    const CycElem lhs = char_coordinate(chi, ict1);
    const CycElem y_ct = char_coordinate(chi.conjugate(), ct1);
    const CycElem rhs = field_inv(y_ct) * make_rat((r % 2 == 1) ? -4 : 4, chi.conductor());
    return lhs == rhs;
}

bool spectral_check(long n, long r) {
    const ResidueSet rs = residue_set(n);
    const auto xr = chars_with_parity(n, r);
    if (xr.size() != rs.size()) throw std::logic_error("spectral_check: |X_r| != |R|");
    const long M = lcm_long(n, UnitGroupStructure::of(n).exponent());
    const std::size_t m = rs.size();

    CycMatrix x0(m, M), x0bar(m, M);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = 0; c < m; ++c) {
            x0.at(a, c) = xr[c].value(rs.members()[a], M);
            x0bar.at(a, c) = xr[c].conjugate().value(rs.members()[a], M);
        }

    // Unitarity: X0 conj(X0)^T = (phi/2) I.
    const CycMatrix gram = x0 * x0bar.transpose();
    const long phi = euler_phi(n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const CycElem want = i == j ? CycElem::from_rational(M, Rat(phi) / 2) : CycElem(M);
            if (gram.at(i, j) != want) return false;
        }

    // X0 diag(y(chi|ct_1) tau(conj(chi)_f)) conj(X0)^T = phi * CT.
    const CycElem ct1 = ct_zeta(n, r);
    CycMatrix delta(m, M);
    for (std::size_t c = 0; c < m; ++c) {
        const CycElem y = char_coordinate(xr[c], ct1);
        const CycElem tau_bar = lift_to_order(gauss_sum(xr[c].conjugate().primitive()), M);
        delta.at(c, c) = lift_to_order(y, M) * tau_bar;
    }
    const CycMatrix lhs = x0 * delta * x0bar.transpose();

    const CycMatrix ct = build_ct_matrix(n, r);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (canonicalize(lhs.at(i, j)) != canonicalize(lift_to_order(ct.at(i, j), M) * Rat(phi))) return false;
    return true;
}

}  // namespace ictn
