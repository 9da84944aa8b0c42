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

#include <string>

#include <json.hpp>

#include "ictn/characters.hpp"
#include "ictn/cotangent.hpp"
#include "ictn/cyclotomic.hpp"

namespace ictn {

using Json = nlohmann::ordered_json;

/// {"order": n, "coeffs": ["0", "1/2", ...]} with exact fraction strings.
Json cyc_to_json(const CycElem& a);
CycElem cyc_from_json(const Json& j);

/// {"n": .., "r": .., "basis": "s"|"c", "coeffs": {"1": "2797/1962240", ...}},
/// keys in ascending numeric order, zero coefficients omitted.
Json sincos_to_json(const SinCosExpr& expr);
SinCosExpr sincos_from_json(const Json& j);

/// Same layout with basis "sa"|"ca".
Json half_angle_to_json(const HalfAngleExpr& expr);
HalfAngleExpr half_angle_from_json(const Json& j);

/// {"modulus": .., "exponents": [..], "conductor": .., "parity": +-1, "order": ..}.
Json char_to_json(const DirichletChar& chi);
DirichletChar char_from_json(const Json& j);

/// "p/q*sa_m" terms joined with " + "/" - ", ascending index, zero terms
/// omitted, coefficient magnitudes in lowest terms ("-" prefix on a leading
/// negative term).
std::string render_terms_text(const std::map<long, Rat>& coeffs, const std::string& label);

std::string sincos_to_text(const SinCosExpr& expr);
std::string half_angle_to_text(const HalfAngleExpr& expr);
std::string cyc_to_text(const CycElem& a);

}  // namespace ictn
