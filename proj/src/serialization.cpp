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

#include "ictn/serialization.hpp"

#include <stdexcept>

namespace ictn {

namespace {

Json coeff_map_to_json(const std::map<long, Rat>& coeffs) {
    Json obj = Json::object();
    for (const auto& [k, v] : coeffs)
        if (sgn(v) != 0) obj[std::to_string(k)] = rat_to_string(v);
    return obj;
}

std::map<long, Rat> coeff_map_from_json(const Json& obj) {
    std::map<long, Rat> coeffs;
    for (const auto& [key, value] : obj.items())
        coeffs[std::stol(key)] = rat_from_string(value.get<std::string>());
    return coeffs;
}

}  // namespace

Json cyc_to_json(const CycElem& a) {
    Json j;
    j["order"] = a.order();
    Json arr = Json::array();
    for (const Rat& c : a.coeffs()) arr.push_back(rat_to_string(c));
    j["coeffs"] = std::move(arr);
    return j;
}

CycElem cyc_from_json(const Json& j) {
    const long order = j.at("order").get<long>();
    std::vector<Rat> coeffs;
    coeffs.reserve(j.at("coeffs").size());
    for (const auto& entry : j.at("coeffs")) coeffs.push_back(rat_from_string(entry.get<std::string>()));
    return CycElem(order, std::move(coeffs));
}

Json sincos_to_json(const SinCosExpr& expr) {
    Json j;
    j["n"] = expr.n;
    j["r"] = expr.r;
    j["basis"] = expr.sine_basis ? "s" : "c";
    j["coeffs"] = coeff_map_to_json(expr.coeffs);
    return j;
}

SinCosExpr sincos_from_json(const Json& j) {
    SinCosExpr expr;
    expr.n = j.at("n").get<long>();
    expr.r = j.at("r").get<long>();
    const std::string basis = j.at("basis").get<std::string>();
    if (basis != "s" && basis != "c") throw std::invalid_argument("sincos_from_json: basis must be \"s\" or \"c\"");
    expr.sine_basis = basis == "s";
    expr.coeffs = coeff_map_from_json(j.at("coeffs"));
    return expr;
}

Json half_angle_to_json(const HalfAngleExpr& expr) {
    Json j;
    j["n"] = expr.n;
    j["r"] = expr.r;
    j["basis"] = expr.sa_basis ? "sa" : "ca";
    j["coeffs"] = coeff_map_to_json(expr.coeffs);
    return j;
}

HalfAngleExpr half_angle_from_json(const Json& j) {
    HalfAngleExpr expr;
    expr.n = j.at("n").get<long>();
    expr.r = j.at("r").get<long>();
    const std::string basis = j.at("basis").get<std::string>();
    if (basis != "sa" && basis != "ca") throw std::invalid_argument("half_angle_from_json: basis must be \"sa\" or \"ca\"");
    expr.sa_basis = basis == "sa";
    expr.coeffs = coeff_map_from_json(j.at("coeffs"));
    return expr;
}

Json char_to_json(const DirichletChar& chi) {
    Json j;
    j["modulus"] = chi.modulus();
    j["exponents"] = chi.exponents();
    j["conductor"] = chi.conductor();
    j["parity"] = chi.parity();
    j["order"] = chi.order();
    return j;
}

DirichletChar char_from_json(const Json& j) {
    DirichletChar chi(j.at("modulus").get<long>(), j.at("exponents").get<std::vector<long>>());
    if (j.contains("conductor") && j.at("conductor").get<long>() != chi.conductor())
        throw std::invalid_argument("char_from_json: conductor does not match the exponent data");
    if (j.contains("parity") && j.at("parity").get<int>() != chi.parity())
        throw std::invalid_argument("char_from_json: parity does not match the exponent data");
    if (j.contains("order") && j.at("order").get<long>() != chi.order())
        throw std::invalid_argument("char_from_json: order does not match the exponent data");
    return chi;
}

std::string render_terms_text(const std::map<long, Rat>& coeffs, const std::string& label) {
    std::string out;
    for (const auto& [idx, c] : coeffs) {
        if (sgn(c) == 0) continue;
        const bool negative = sgn(c) < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rat mag = abs(c);
        out += rat_to_string(mag) + "*" + label + (label.ends_with('^') ? "" : "_") + std::to_string(idx);
    }
    if (out.empty()) out = "0";
    return out;
}

std::string sincos_to_text(const SinCosExpr& expr) {
    return render_terms_text(expr.coeffs, expr.sine_basis ? "s" : "c");
}

std::string half_angle_to_text(const HalfAngleExpr& expr) {
    return render_terms_text(expr.coeffs, expr.sa_basis ? "sa" : "ca");
}

std::string cyc_to_text(const CycElem& a) {
    std::map<long, Rat> coeffs;
    for (long k = 0; k < a.order(); ++k)
        if (sgn(a.coeffs()[k]) != 0) coeffs[k] = a.coeffs()[k];
    return render_terms_text(coeffs, "zeta" + std::to_string(a.order()) + "^");
}

}  // namespace ictn
