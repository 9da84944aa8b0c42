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

#include "ictn/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "ictn/characters.hpp"

namespace ictn {

const Rat& bernoulli_number(long r) {
    if (r < 0 || r > kMaxBernoulliIndex)
        throw std::invalid_argument("bernoulli_number: index out of supported range");
    static std::mutex cache_mutex;
    static std::vector<Rat> cache{Rat(1)};
    std::lock_guard<std::mutex> lock(cache_mutex);
    while (static_cast<long>(cache.size()) <= r) {
        const long m = static_cast<long>(cache.size());
        Rat acc(0);
        for (long j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * cache[j];
        cache.push_back(-acc / Rat(m + 1));
    }
    return cache[r];
}

Rat bernoulli_poly(long r, const Rat& x) {
    if (r < 0) throw std::invalid_argument("bernoulli_poly: negative degree");
    Rat result(0);
    Rat xpow(1);
    // Horner is awkward with the binomial weights; the direct sum is exact anyway.
    for (long k = r; k >= 0; --k) {
        result += Rat(binomial(r, k)) * bernoulli_number(k) * xpow;
        xpow *= x;
    }
    return result;
}

CycElem gen_bernoulli(long r, const DirichletChar& chi) {
    if (r < 1) throw std::invalid_argument("gen_bernoulli: r must be positive");
    if (chi.conductor() != chi.modulus())
        throw std::invalid_argument("gen_bernoulli: character must be primitive");
    const long f = chi.modulus();
    const long d = chi.order();
    CycElem acc(d);
    for (long j = 1; j <= f; ++j) {
        const long v = chi.value_exponent(j);
        if (v < 0) continue;
        acc.coeff(v) += bernoulli_poly(r, make_rat(j, f));
    }
    return acc * Rat(int_pow(Int(f), static_cast<unsigned long>(r - 1)));
}

}  // namespace ictn
