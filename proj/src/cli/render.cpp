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

#include "circtree/cli/render.hpp"

#include <sstream>
#include <stdexcept>

namespace circtree::cli {

Format parse_format(std::string_view name) {
    if (name == "plain") return Format::Plain;
    if (name == "json") return Format::Json;
    if (name == "latex") return Format::Latex;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string render_plain(const IntPoly& p, char var) { return p.to_string(var); }

std::string render_plain(const RatPoly& f, char var) { return f.to_string(var); }

std::string render_latex(const IntPoly& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Integer& c = p[i];
        if (c == 0) continue;
        const Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^{" << i << '}';
    }
    return os.str();
}

std::string render_latex(const RatPoly& f, char var) {
    if (f.denom() == IntPoly{1}) return render_latex(f.numer(), var);
    return "\\frac{" + render_latex(f.numer(), var) + "}{" + render_latex(f.denom(), var) + "}";
}

std::vector<std::string> decimal_coeffs(const IntPoly& p) {
    if (p.is_zero()) return {"0"};
    std::vector<std::string> out;
    out.reserve(p.size());
    for (const Integer& c : p.coeffs()) out.push_back(to_decimal(c));
    return out;
}

}  // namespace circtree::cli
