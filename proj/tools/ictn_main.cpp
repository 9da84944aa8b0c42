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

#include <cmath>
#include <complex>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ictn/bernoulli.hpp"
#include "ictn/characters.hpp"
#include "ictn/cotangent.hpp"
#include "ictn/golden.hpp"
#include "ictn/serialization.hpp"
#include "ictn/series.hpp"

#ifndef ICTN_DATA_DIR
#define ICTN_DATA_DIR "data/golden"
#endif

namespace {

using namespace ictn;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

struct TableOptions {
    long n = 0;
    long r = 0;
    std::string which = "ict";
    std::string basis = "half-angle";
    std::string format = "text";
};

int cmd_table(const TableOptions& opt) {
    const bool want_ct = opt.which == "ct";
    if ((opt.basis == "sc" || opt.basis == "half-angle") && !is_square_free(opt.n))
        return usage_error("basis '" + opt.basis +
                           "' uses the square-free closed form; n=" + std::to_string(opt.n) +
                           " is not square-free, use --basis zeta (general matrix path) instead");

    if (opt.basis == "zeta") {
        const CycElem value = want_ct ? canonicalize(ct_zeta(opt.n, opt.r)) : matrix_ict(opt.n, opt.r).ict1;
        if (opt.format == "json")
            std::cout << cyc_to_json(value).dump(2) << "\n";
        else
            std::cout << cyc_to_text(value) << "\n";
        return kExitPass;
    }

    const SinCosExpr expr = want_ct ? ct_sincos(opt.n, opt.r) : theorem1_ict(opt.n, opt.r);
    if (opt.basis == "sc") {
        if (opt.format == "json")
            std::cout << sincos_to_json(expr).dump(2) << "\n";
        else
            std::cout << sincos_to_text(expr) << "\n";
    } else {
        const HalfAngleExpr ha = half_angle_convert(expr);
        if (opt.format == "json")
            std::cout << half_angle_to_json(ha).dump(2) << "\n";
        else
            std::cout << half_angle_to_text(ha) << "\n";
    }
    return kExitPass;
}

struct VerifyOptions {
    long n = 0;
    long r = 0;
    std::vector<std::string> methods;
    long series_limit = 100000;
};

int cmd_verify(const VerifyOptions& opt) {
    std::set<std::string> methods(opt.methods.begin(), opt.methods.end());
    if (methods.empty()) {
        methods = {"theorem2", "matrix"};
        if (is_square_free(opt.n)) methods.insert("theorem1");
    }
    for (const auto& m : methods)
        if (m != "theorem1" && m != "theorem2" && m != "matrix" && m != "series")
            return usage_error("unknown method '" + m + "'");
    if (methods.count("theorem1") && !is_square_free(opt.n))
        return usage_error("method theorem1 requires square-free n");

    bool all_ok = true;
    auto report = [&](const std::string& what, bool ok, const std::string& detail = {}) {
        std::cout << (ok ? "ok   " : "FAIL ") << what;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok) all_ok = false;
    };

    std::map<std::string, CycElem> exact;
    if (methods.count("theorem1")) exact.emplace("theorem1", theorem1_ict(opt.n, opt.r).to_cyc());
    if (methods.count("theorem2")) exact.emplace("theorem2", theorem2_ict(opt.n, opt.r));
    if (methods.count("matrix")) exact.emplace("matrix", matrix_ict(opt.n, opt.r).ict1);

    for (auto a = exact.begin(); a != exact.end(); ++a)
        for (auto b = std::next(a); b != exact.end(); ++b)
            report(a->first + " == " + b->first + " (exact)", a->second == b->second);

    if (methods.count("series")) {
        // Reference value for the numeric comparison.
        CycElem ref = [&] {
            if (!exact.empty()) return exact.begin()->second;
            return is_square_free(opt.n) ? theorem1_ict(opt.n, opt.r).to_cyc() : matrix_ict(opt.n, opt.r).ict1;
        }();
        const SeriesResult sr = ict_series(opt.n, opt.r, 1, opt.series_limit);
        const std::complex<double> want = embed_complex(ref);
        const double err = std::abs(sr.value - want);
        const double tol = opt.r >= 2 ? sr.tail_bound : 1e-3;
        std::ostringstream os;
        os << "series=" << sr.value << " exact=" << want << " |diff|=" << err << " tol=" << tol;
        report("series vs exact at j=1", err <= tol, os.str());

        if (is_square_free(opt.n)) {
            const double series = prop4_value(opt.n, opt.r, opt.series_limit);
            const RatMatrix bhat = invert_rat_matrix(build_btilde_matrix(opt.n, opt.r));
            const double target = bhat.at(0, 0).get_d();
            const double err4 = std::abs(series - target);
            const double tol4 = opt.r >= 2 ? prop4_tail_bound(opt.n, opt.r, opt.series_limit) : 1e-3;
            std::ostringstream os4;
            os4.precision(16);
            os4 << "series=" << series << " exact=" << target << " (" << rat_to_string(bhat.at(0, 0))
                << ") |diff|=" << err4 << " tol=" << tol4;
            report("weighted series vs inverse btilde entry (1,1)", err4 <= tol4, os4.str());
        }
    }

    return all_ok ? kExitPass : kExitCheckFailure;
}

int cmd_golden(const std::string& fixtures_dir) {
    const auto checks = run_golden_checks(fixtures_dir, env_thread_cap());
    bool all_ok = true;
    for (const auto& check : checks) {
        std::cout << (check.pass ? "ok   " : "FAIL ") << check.name;
        if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
        std::cout << "\n";
        if (!check.pass) all_ok = false;
    }
    std::cout << (all_ok ? "golden: all checks passed" : "golden: FAILURES present") << "\n";
    return all_ok ? kExitPass : kExitCheckFailure;
}

int cmd_chars(long n, const std::string& format) {
    const auto chars = enumerate_chars(n);
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& chi : chars) {
            Json j = char_to_json(chi);
            j["gauss_sum"] = cyc_to_json(gauss_sum(chi.primitive()));
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& chi : chars) {
            std::cout << "chi mod " << chi.modulus() << " exps=[";
            for (std::size_t i = 0; i < chi.exponents().size(); ++i)
                std::cout << (i ? "," : "") << chi.exponents()[i];
            std::cout << "] order=" << chi.order() << " parity=" << (chi.parity() > 0 ? "+1" : "-1")
                      << " conductor=" << chi.conductor()
                      << " tau(chi_f)=" << cyc_to_text(canonicalize(gauss_sum(chi.primitive()))) << "\n";
        }
    }
    return kExitPass;
}

struct SeriesOptions {
    long n = 0;
    long r = 0;
    long limit = 100000;
    std::optional<long> j;
    std::string format = "text";
};

int cmd_series(const SeriesOptions& opt) {
    std::vector<long> indices;
    if (opt.j) {
        if (gcd_long(rep_mod(*opt.j, opt.n), opt.n) != 1) return usage_error("--j must be coprime to n");
        indices.push_back(*opt.j);
    } else {
        indices = residue_set(opt.n).members();
    }

    Json rows = Json::array();
    for (long j : indices) {
        const SeriesResult sr = ict_series(opt.n, opt.r, j, opt.limit);
        if (opt.format == "json") {
            Json row;
            row["j"] = j;
            row["re"] = sr.value.real();
            row["im"] = sr.value.imag();
            if (opt.r >= 2) row["tail_bound"] = sr.tail_bound;
            rows.push_back(std::move(row));
        } else {
            std::cout.precision(16);
            std::cout << "j=" << j << " value=" << sr.value.real() << (sr.value.imag() < 0 ? "" : "+")
                      << sr.value.imag() << "i";
            if (opt.r >= 2) std::cout << " tail_bound=" << sr.tail_bound;
            std::cout << "\n";
        }
    }
    std::optional<double> prop4;
    if (is_square_free(opt.n)) prop4 = prop4_value(opt.n, opt.r, opt.limit);
    if (opt.format == "json") {
        Json out;
        out["n"] = opt.n;
        out["r"] = opt.r;
        out["limit"] = opt.limit;
        out["values"] = std::move(rows);
        if (prop4) out["weighted_series"] = *prop4;
        std::cout << out.dump(2) << "\n";
    } else if (prop4) {
        std::cout.precision(16);
        std::cout << "weighted_series=" << *prop4;
        if (opt.r >= 2) std::cout << " tail_bound=" << prop4_tail_bound(opt.n, opt.r, opt.limit);
        std::cout << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact inverse cotangent numbers: tables, cross-checks, characters, series"};
    app.require_subcommand(1);

    TableOptions table_opt;
    auto* table = app.add_subcommand("table", "print ct/ict values in a chosen basis");
    table->add_option("--n", table_opt.n, "modulus (>= 3)")->required()->check(CLI::Range(3L, 1000000L));
    table->add_option("--r", table_opt.r, "weight (>= 1)")->required()->check(CLI::Range(1L, 64L));
    table->add_option("--which", table_opt.which, "ct or ict")->check(CLI::IsMember({"ct", "ict"}));
    table->add_option("--basis", table_opt.basis, "zeta, sc or half-angle")
        ->check(CLI::IsMember({"zeta", "sc", "half-angle"}));
    table->add_option("--format", table_opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "cross-check the engines against each other");
    verify->add_option("--n", verify_opt.n, "modulus (>= 3)")->required()->check(CLI::Range(3L, 1000000L));
    verify->add_option("--r", verify_opt.r, "weight (>= 1)")->required()->check(CLI::Range(1L, 64L));
    verify->add_option("--methods", verify_opt.methods, "subset of theorem1,theorem2,matrix,series")
        ->delimiter(',');
    verify->add_option("--series-limit", verify_opt.series_limit, "series truncation")
        ->check(CLI::Range(3L, kMaxSeriesLimit));

    std::string fixtures_dir = ICTN_DATA_DIR;
    auto* golden = app.add_subcommand("golden", "recompute all published fixture values");
    golden->add_option("--fixtures", fixtures_dir, "fixture directory");

    long chars_n = 0;
    std::string chars_format = "text";
    auto* chars = app.add_subcommand("chars", "dump Dirichlet character data with Gauss sums");
    chars->add_option("--n", chars_n, "modulus (>= 3)")->required()->check(CLI::Range(3L, 1000000L));
    chars->add_option("--format", chars_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    SeriesOptions series_opt;
    long series_j = 0;
    auto* series = app.add_subcommand("series", "evaluate the defining series numerically");
    series->add_option("--n", series_opt.n, "modulus (>= 3)")->required()->check(CLI::Range(3L, 1000000L));
    series->add_option("--r", series_opt.r, "weight (>= 1)")->required()->check(CLI::Range(1L, 64L));
    auto* jopt = series->add_option("--j", series_j, "single residue index (default: all of R)");
    series->add_option("--series-limit", series_opt.limit, "series truncation")
        ->check(CLI::Range(3L, kMaxSeriesLimit));
    series->add_option("--format", series_opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (table->parsed()) return cmd_table(table_opt);
        if (verify->parsed()) return cmd_verify(verify_opt);
        if (golden->parsed()) return cmd_golden(fixtures_dir);
        if (chars->parsed()) return cmd_chars(chars_n, chars_format);
        if (series->parsed()) {
            if (jopt->count() > 0) series_opt.j = series_j;
            return cmd_series(series_opt);
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
