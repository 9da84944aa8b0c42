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
#include <cstdint>
#include <memory>
#include <vector>

namespace ictn {

/// Largest supported sieve/series truncation limit.
inline constexpr long kMaxSeriesLimit = 10'000'000;

/// Moebius function values for 1..limit from a linear sieve; read-only and
/// shareable once built.
class MoebiusSieve {
public:
    explicit MoebiusSieve(long limit);
    long limit() const { return limit_; }
    int mu(long m) const { return mu_[m]; }

private:
    long limit_;
    std::vector<int8_t> mu_;
};

/// Grow-only shared sieve (single writer under a lock, then read-only).
std::shared_ptr<const MoebiusSieve> shared_moebius_sieve(long limit);

struct SeriesResult {
    long n = 0;
    long r = 0;
    long j = 0;
    long limit = 0;
    std::complex<double> value;
    /// For r >= 2: a bound on |tail|, namely sum_{|m| > limit} 1/|m|^r
    /// <= 2 limit^(1-r)/(r-1) (scaled by the normalization for ict_series).
    /// For r = 1 no rigorous bound exists; NaN is recorded.
    double tail_bound = 0;
};

/// Partial sum of sum_{m = j mod n} mu(|m|)/m^r over the symmetric window
/// |m| <= limit (the r = 1 sum only converges with this window).
SeriesResult dhat_series(long n, long r, long j, long limit);

/// The normalized value -i^r pi^r/((r-1)! n^r) * dhat, comparable with the
/// complex embedding of the exact inverse cotangent number at index j.
SeriesResult ict_series(long n, long r, long j, long limit);
std::complex<double> ict_numeric(long n, long r, long j, long limit);

/// Truncated weighted Moebius series whose limit equals the (1,1) entry of
/// the inverse btilde matrix: for odd r
///   (-1)^((r-1)/2) 2 pi^r/(n^r (r-1)!) sum_{m>0,(m,n)=1} mu(m) sin(2 pi m*/n)/m^r
/// and the cosine variant with (-1)^(r/2-1) for even r. Square-free n.
double prop4_value(long n, long r, long limit);

/// Tail bound companion of prop4_value (same scaling), r >= 2.
double prop4_tail_bound(long n, long r, long limit);

}  // namespace ictn
