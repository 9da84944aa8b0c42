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

#include "ictn/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace ictn {

Rat make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::invalid_argument("rat_pow: zero to negative power");
        return rat_pow(Rat(1) / base, -exp);
    }
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), static_cast<unsigned long>(exp));
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), static_cast<unsigned long>(exp));
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

bool is_square_free(long n) {
    if (n < 1) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long rep_mod(long x, long n) {
    long r = x % n;
    if (r <= 0) r += n;
    return r;
}

long inv_mod(long k, long n) {
    long a = rep_mod(k, n), b = n;
    long x0 = 1, x1 = 0;
    while (b != 0) {
        long q = a / b;
        long t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (a != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
    return rep_mod(x0, n);
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    for (char c : s) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("rat_from_string: bad character");
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0)
        throw std::invalid_argument("rat_from_string: malformed rational");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw std::invalid_argument("rat_from_string: zero denominator");
    q.canonicalize();
    return q;
}

}  // namespace ictn
