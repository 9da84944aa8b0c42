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
#include <string>
#include <vector>

#include "ictn/rational.hpp"

namespace ictn {

/// One published half-angle table row; absent indices mean an exact zero
/// coefficient. Every value string must be byte-identical to the printed
/// fraction after canonical formatting.
struct GoldenFixture {
    long n = 0;
    long r = 0;
    bool sa_basis = true;
    std::map<long, std::string> coeffs;
    std::string source;
};

/// Scalar golden values kept next to the table rows.
struct GoldenValues {
    std::string ca1_n13_r4;
    std::string bhat11_n35_r3;
    double series_n35_r3 = 0;
    // terms num/den * sin(mult*pi/15) of the published closed expression
    struct SinTerm {
        long num, den, mult;
    };
    std::vector<SinTerm> embed_n15_r3;
};

std::vector<GoldenFixture> load_golden_fixtures(const std::string& dir);
GoldenValues load_golden_values(const std::string& dir);

struct GoldenCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Recomputes every fixture row plus the scalar values; `threads` caps the
/// fan-out (0 = automatic). Deterministic result order.
std::vector<GoldenCheck> run_golden_checks(const std::string& dir, unsigned threads = 0);

/// Parallelism cap from the ICTN_THREADS environment variable (0 = unset).
unsigned env_thread_cap();

}  // namespace ictn
