/*
   Copyright 2026 The circtree Authors

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
#include <string_view>
#include <vector>

#include "circtree/exactalg/rat_poly.hpp"

namespace circtree::cli {

enum class Format {
    Plain,
    Json,
    Latex,
};

Format parse_format(std::string_view name);

/// Ascending degree, e.g. "1 - 2w + 2w^2".
std::string render_plain(const IntPoly& p, char var);
/// "(num) / (den)", or just the numerator when the denominator is 1.
std::string render_plain(const RatPoly& f, char var);

std::string render_latex(const IntPoly& p, char var);
/// \frac{num}{den} with both sides expanded.
std::string render_latex(const RatPoly& f, char var);

/// Coefficients as decimal strings, lowest degree first. The zero
/// polynomial gives ["0"].
std::vector<std::string> decimal_coeffs(const IntPoly& p);

}  // namespace circtree::cli
