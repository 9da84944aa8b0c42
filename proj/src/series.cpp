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

#include "ictn/series.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "ictn/rational.hpp"

namespace ictn {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

long double factorial_ld(long k) {
    long double f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    return f;
}

long double pow_ld(long double base, long exp) {
    long double p = 1;
    for (long i = 0; i < exp; ++i) p *= base;
    return p;
}

// i^r as a complex unit.
std::complex<long double> i_pow(long r) {
    switch (((r % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

void check_series_args(long n, long r, long limit, const char* where) {
    if (n < 3) throw std::invalid_argument(std::string(where) + ": n must be at least 3");
    if (r < 1) throw std::invalid_argument(std::string(where) + ": r must be positive");
    if (limit < n) throw std::invalid_argument(std::string(where) + ": limit must be at least n");
    if (limit > kMaxSeriesLimit) throw std::invalid_argument(std::string(where) + ": limit exceeds the supported cap");
}

struct Kahan {
    long double sum = 0;
    long double carry = 0;
    void add(long double x) {
        long double y = x - carry;
        long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

MoebiusSieve::MoebiusSieve(long limit) : limit_(limit) {
    if (limit < 1 || limit > kMaxSeriesLimit)
        throw std::invalid_argument("MoebiusSieve: limit out of range");
    mu_.assign(limit + 1, 0);
    std::vector<int32_t> least_prime(limit + 1, 0);
    std::vector<int32_t> primes;
    mu_[1] = 1;
    for (long i = 2; i <= limit; ++i) {
        if (least_prime[i] == 0) {
            least_prime[i] = static_cast<int32_t>(i);
            primes.push_back(static_cast<int32_t>(i));
            mu_[i] = -1;
        }
        for (int32_t p : primes) {
            if (p > least_prime[i] || i * p > limit) break;
            least_prime[i * p] = p;
            mu_[i * p] = (p == least_prime[i]) ? 0 : -mu_[i];
        }
    }
}

std::shared_ptr<const MoebiusSieve> shared_moebius_sieve(long limit) {
    static std::mutex sieve_mutex;
    static std::shared_ptr<const MoebiusSieve> current;
    std::lock_guard<std::mutex> lock(sieve_mutex);
    if (!current || current->limit() < limit) current = std::make_shared<const MoebiusSieve>(limit);
    return current;
}

SeriesResult dhat_series(long n, long r, long j, long limit) {
    check_series_args(n, r, limit, "dhat_series");
    if (gcd_long(rep_mod(j, n), n) != 1) throw std::invalid_argument("dhat_series: j not coprime to n");
    const long j0 = rep_mod(j, n) % n;
    auto sieve = shared_moebius_sieve(limit);

    Kahan acc;
    for (long m = j0 == 0 ? n : j0; m <= limit; m += n) {
        const int mu = sieve->mu(m);
        if (mu != 0) acc.add(static_cast<long double>(mu) / pow_ld(static_cast<long double>(m), r));
    }
    for (long m = j0 - n; m >= -limit; m -= n) {
        const int mu = sieve->mu(-m);
        if (mu != 0) acc.add(static_cast<long double>(mu) / pow_ld(static_cast<long double>(m), r));
    }

    SeriesResult res;
    res.n = n;
    res.r = r;
    res.j = j0;
    res.limit = limit;
    res.value = {static_cast<double>(acc.sum), 0.0};
    res.tail_bound = (r >= 2)
                         ? static_cast<double>(2.0L / (r - 1) / pow_ld(static_cast<long double>(limit), r - 1))
                         : std::numeric_limits<double>::quiet_NaN();
    return res;
}

SeriesResult ict_series(long n, long r, long j, long limit) {
    SeriesResult res = dhat_series(n, r, j, limit);
    const long double scale = pow_ld(kPi, r) / (factorial_ld(r - 1) * pow_ld(static_cast<long double>(n), r));
    const std::complex<long double> factor = -i_pow(r) * scale;
    const std::complex<long double> v = factor * static_cast<long double>(res.value.real());
    res.value = {static_cast<double>(v.real()), static_cast<double>(v.imag())};
    if (r >= 2) res.tail_bound = static_cast<double>(scale * static_cast<long double>(res.tail_bound));
    return res;
}

std::complex<double> ict_numeric(long n, long r, long j, long limit) {
    return ict_series(n, r, j, limit).value;
}

double prop4_value(long n, long r, long limit) {
    check_series_args(n, r, limit, "prop4_value");
    if (!is_square_free(n)) throw std::invalid_argument("prop4_value: n must be square-free");
    auto sieve = shared_moebius_sieve(limit);

    // Inverse table mod n for the m* weights.
    std::vector<long> inv_table(n, 0);
    for (long u = 1; u <= n; ++u)
        if (gcd_long(u, n) == 1) inv_table[u % n] = inv_mod(u, n);

    const bool odd = r % 2 == 1;
    Kahan acc;
    for (long m = 1; m <= limit; ++m) {
        if (gcd_long(m % n, n) != 1) continue;
        const int mu = sieve->mu(m);
        if (mu == 0) continue;
        const long mstar = inv_table[m % n];
        const long double angle = 2.0L * kPi * static_cast<long double>(mstar) / static_cast<long double>(n);
        const long double w = odd ? sinl(angle) : cosl(angle);
        acc.add(static_cast<long double>(mu) * w / pow_ld(static_cast<long double>(m), r));
    }

    const long sign_exp = odd ? (r - 1) / 2 : r / 2 - 1;
    const long double sign = (sign_exp % 2 == 0) ? 1.0L : -1.0L;
    const long double scale = 2.0L * pow_ld(kPi, r) / (pow_ld(static_cast<long double>(n), r) * factorial_ld(r - 1));
    return static_cast<double>(sign * scale * acc.sum);
}

double prop4_tail_bound(long n, long r, long limit) {
    if (r < 2) return std::numeric_limits<double>::quiet_NaN();
    const long double tail = 1.0L / (r - 1) / pow_ld(static_cast<long double>(limit), r - 1);
    const long double scale = 2.0L * pow_ld(kPi, r) / (pow_ld(static_cast<long double>(n), r) * factorial_ld(r - 1));
    return static_cast<double>(scale * tail);
}

}  // namespace ictn
