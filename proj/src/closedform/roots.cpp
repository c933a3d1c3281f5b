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

#include "circtree/closedform/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "circtree/errors.hpp"

namespace circtree {

namespace {

long double to_ld(const Integer& v) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    // refine with the next 53 bits so large coefficients keep long double precision
    Integer hi(mant * 9007199254740992.0);  // mant * 2^53, exact
    Integer rest = v * (Integer(1) << 53) - (hi << exp);
    long exp2 = 0;
    const double lo = rest == 0 ? 0.0 : mpz_get_d_2exp(&exp2, rest.get_mpz_t());
    return std::ldexp(static_cast<long double>(mant), exp) +
           std::ldexp(static_cast<long double>(lo), exp2 - 53);
}

}  // namespace

std::vector<Complex> squarefree_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    const std::size_t d = p.degree();
    std::vector<Complex> roots;
    if (d == 0) return roots;
    std::vector<long double> c(d + 1);
    for (std::size_t i = 0; i <= d; ++i) c[i] = to_ld(p[i]);
    if (d == 1) {
        roots.emplace_back(-c[0] / c[1], 0.0L);
        return roots;
    }

    auto eval = [&](Complex z, Complex& deriv) {
        Complex v = c[d];
        deriv = 0;
        for (std::size_t i = d; i-- > 0;) {
            deriv = deriv * z + v;
            v = v * z + c[i];
        }
        return v;
    };

    // start on a circle of radius given by the Cauchy bound, rotated off the axes
    long double bound = 0;
    for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, std::fabs(c[i] / c[d]));
    const long double radius = std::min(1.0L + bound, 1.0L + std::pow(bound, 1.0L / d));
    const long double pi = std::acos(-1.0L);
    roots.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        roots[i] = std::polar(radius, 2 * pi * i / d + 0.4L);
    }

    constexpr int kMaxIter = 1000;
    const long double eps = 64 * std::numeric_limits<long double>::epsilon();
    for (int iter = 0; iter < kMaxIter; ++iter) {
        long double worst = 0;
        for (std::size_t i = 0; i < d; ++i) {
            Complex dv;
            const Complex v = eval(roots[i], dv);
            if (v == Complex(0)) continue;
            const Complex ratio = v / dv;
            Complex repulsion = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j != i) repulsion += 1.0L / (roots[i] - roots[j]);
            }
            const Complex step = ratio / (1.0L - ratio * repulsion);
            roots[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(roots[i])));
        }
        if (worst < eps) {
            // two Newton polishing passes
            for (int k = 0; k < 2; ++k) {
                for (auto& z : roots) {
                    Complex dv;
                    const Complex v = eval(z, dv);
                    if (dv != Complex(0)) z -= v / dv;
                }
            }
            return roots;
        }
    }
    throw NoConvergence("root finder did not converge for degree " + std::to_string(d));
}

std::vector<Complex> roots_with_multiplicity(const IntPoly& p) {
    std::vector<Complex> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        for (const Complex& z : squarefree_roots(factor)) out.insert(out.end(), mult, z);
    }
    return out;
}

}  // namespace circtree
