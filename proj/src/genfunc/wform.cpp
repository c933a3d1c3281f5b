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

#include <stdexcept>
#include <utility>
#include <vector>

#include "circtree/genfunc/genfunc.hpp"

namespace circtree {

namespace {

// p(x) mod (x^2 - 2wx + 1) as a(w) + b(w) x.
std::pair<IntPoly, IntPoly> reduce_mod_w(const IntPoly& p) {
    IntPoly a_sum, b_sum;
    if (p.is_zero()) return {a_sum, b_sum};
    // x^j = a_j + b_j x; x^{j+1} = -b_j + (a_j + 2w b_j) x
    IntPoly a{1}, b;
    const IntPoly two_w{0, 2};
    for (std::size_t j = 0; j <= p.degree(); ++j) {
        if (p[j] != 0) {
            a_sum += a * p[j];
            b_sum += b * p[j];
        }
        IntPoly next_b = a + two_w * b;
        a = -b;
        b = std::move(next_b);
    }
    return {a_sum, b_sum};
}

}  // namespace

RatPoly to_w_form(const RatPoly& f_x) {
    const auto [an, bn] = reduce_mod_w(f_x.numer());
    const auto [ad, bd] = reduce_mod_w(f_x.denom());
    // (an + bn x)(ad + bd xbar) with x + xbar = 2w, x xbar = 1
    if (!(bn * ad - an * bd).is_zero()) {
        throw std::domain_error("to_w_form: function is not invariant under x -> 1/x");
    }
    const IntPoly two_w{0, 2};
    const IntPoly numer = an * ad + two_w * an * bd + bn * bd;
    const IntPoly denom = ad * ad + two_w * ad * bd + bd * bd;
    return RatPoly(numer, denom);
}

namespace {

// (2x)^m p((x^2 + 1) / (2x))
IntPoly homogenize_w(const IntPoly& p, std::size_t m) {
    IntPoly out;
    if (p.is_zero()) return out;
    const IntPoly x2_plus_1{1, 0, 1};
    const IntPoly two_x{0, 2};
    std::vector<IntPoly> two_x_pow{IntPoly{1}};
    for (std::size_t i = 1; i <= m; ++i) two_x_pow.push_back(two_x_pow.back() * two_x);
    IntPoly x2_pow{1};
    for (std::size_t j = 0; j <= p.degree(); ++j) {
        if (p[j] != 0) out += x2_pow * two_x_pow[m - j] * p[j];
        x2_pow = x2_pow * x2_plus_1;
    }
    return out;
}

}  // namespace

RatPoly from_w_form(const RatPoly& f_w) {
    if (f_w.is_zero()) return f_w;
    const std::size_t m = std::max(f_w.numer().degree(), f_w.denom().degree());
    return RatPoly(homogenize_w(f_w.numer(), m), homogenize_w(f_w.denom(), m));
}

}  // namespace circtree
