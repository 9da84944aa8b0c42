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

#include "ictn/golden.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "ictn/characters.hpp"
#include "ictn/cotangent.hpp"
#include "ictn/serialization.hpp"

namespace ictn {

namespace {

nlohmann::ordered_json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    nlohmann::ordered_json j;
    in >> j;
    return j;
}

void run_parallel(std::vector<std::function<void()>>& jobs, unsigned threads) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned cap = threads == 0 ? hw : threads;
    cap = std::min<unsigned>(cap, jobs.size() == 0 ? 1 : static_cast<unsigned>(jobs.size()));
    if (cap <= 1) {
        for (auto& job : jobs) job();
        return;
    }
    std::vector<std::thread> workers;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < cap; ++t) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                jobs[i]();
            }
        });
    }
    for (auto& w : workers) w.join();
}

std::string describe_row(const GoldenFixture& fx) {
    return "table n=" + std::to_string(fx.n) + " r=" + std::to_string(fx.r);
}

GoldenCheck check_table_row(const GoldenFixture& fx) {
    GoldenCheck check{describe_row(fx), false, {}};
    try {
        const HalfAngleExpr got = half_angle_convert(theorem1_ict(fx.n, fx.r));
        if (got.sa_basis != fx.sa_basis) {
            check.detail = "basis mismatch";
            return check;
        }
        std::map<long, std::string> rendered;
        for (const auto& [m, c] : got.coeffs)
            if (sgn(c) != 0) rendered[m] = rat_to_string(c);
        if (rendered == fx.coeffs) {
            check.pass = true;
        } else {
            std::ostringstream os;
            os << "mismatch:";
            for (const auto& [m, s] : fx.coeffs) {
                auto it = rendered.find(m);
                const std::string have = it == rendered.end() ? "0" : it->second;
                if (have != s) os << " [" << m << "] expected " << s << " got " << have;
            }
            for (const auto& [m, s] : rendered)
                if (!fx.coeffs.count(m)) os << " [" << m << "] expected 0 got " << s;
            check.detail = os.str();
        }
    } catch (const std::exception& e) {
        check.detail = e.what();
    }
    return check;
}

}  // namespace

std::vector<GoldenFixture> load_golden_fixtures(const std::string& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.starts_with("ict_") && name.ends_with(".json")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    std::vector<GoldenFixture> fixtures;
    for (const auto& file : files) {
        const auto j = read_json_file(file);
        GoldenFixture fx;
        fx.n = j.at("n").get<long>();
        fx.r = j.at("r").get<long>();
        const std::string basis = j.at("basis").get<std::string>();
        if (basis != "sa" && basis != "ca") throw std::runtime_error(file.string() + ": bad basis tag");
        fx.sa_basis = basis == "sa";
        for (const auto& [key, value] : j.at("coeffs").items()) {
            const std::string s = value.get<std::string>();
            if (rat_to_string(rat_from_string(s)) != s)
                throw std::runtime_error(file.string() + ": fixture fraction not canonical: " + s);
            fx.coeffs[std::stol(key)] = s;
        }
        if (j.contains("source")) fx.source = j.at("source").get<std::string>();
        fixtures.push_back(std::move(fx));
    }
    return fixtures;
}

GoldenValues load_golden_values(const std::string& dir) {
    const auto j = read_json_file(std::filesystem::path(dir) / "values.json");
    GoldenValues values;
    values.ca1_n13_r4 = j.at("ca1_n13_r4").get<std::string>();
    values.bhat11_n35_r3 = j.at("bhat11_n35_r3").get<std::string>();
    values.series_n35_r3 = j.at("series_n35_r3_limit10000").get<double>();
    for (const auto& term : j.at("embed_n15_r3_sin_terms"))
        values.embed_n15_r3.push_back({term.at("num").get<long>(), term.at("den").get<long>(), term.at("mult").get<long>()});
    return values;
}

std::vector<GoldenCheck> run_golden_checks(const std::string& dir, unsigned threads) {
    const auto fixtures = load_golden_fixtures(dir);
    const auto values = load_golden_values(dir);

    std::vector<GoldenCheck> checks(fixtures.size() + 3);
    std::vector<std::function<void()>> jobs;
    jobs.reserve(checks.size());
    for (std::size_t i = 0; i < fixtures.size(); ++i)
        jobs.emplace_back([&, i] { checks[i] = check_table_row(fixtures[i]); });

    const std::size_t base = fixtures.size();
    jobs.emplace_back([&, base] {
        GoldenCheck check{"spot value n=13 r=4 ca_1", false, {}};
        const std::string got = rat_to_string(half_angle_convert(theorem1_ict(13, 4)).coeff_or_zero(1));
        if (got == values.ca1_n13_r4)
            check.pass = true;
        else
            check.detail = "expected " + values.ca1_n13_r4 + " got " + got;
        checks[base] = std::move(check);
    });
    jobs.emplace_back([&, base] {
        GoldenCheck check{"inverse btilde entry (1,1) n=35 r=3", false, {}};
        const RatMatrix bhat = invert_rat_matrix(build_btilde_matrix(35, 3));
        const std::string got = rat_to_string(bhat.at(0, 0));
        if (got == values.bhat11_n35_r3)
            check.pass = true;
        else
            check.detail = "expected " + values.bhat11_n35_r3 + " got " + got;
        checks[base + 1] = std::move(check);
    });
    jobs.emplace_back([&, base] {
        GoldenCheck check{"character formula vs table n=15 r=3", false, {}};
        const CycElem via_chars = theorem2_ict(15, 3);
        const CycElem via_table = theorem1_ict(15, 3).to_cyc();
        if (via_chars != via_table) {
            check.detail = "exact values differ";
            checks[base + 2] = std::move(check);
            return;
        }
        long double expect = 0;
        for (const auto& term : values.embed_n15_r3)
            expect += static_cast<long double>(term.num) / term.den *
                      sinl(3.14159265358979323846264338328L * term.mult / 15.0L);
        const auto e = embed_complex(via_chars);
        const double diff = std::abs(e.imag() - static_cast<double>(expect)) + std::abs(e.real());
        if (diff <= 1e-12)
            check.pass = true;
        else
            check.detail = "embedding off by " + std::to_string(diff);
        checks[base + 2] = std::move(check);
    });

    run_parallel(jobs, threads);
    return checks;
}

unsigned env_thread_cap() {
    const char* env = std::getenv("ICTN_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    const long v = std::atol(env);
    if (v < 1) return 1;
    return static_cast<unsigned>(v);
}

}  // namespace ictn
