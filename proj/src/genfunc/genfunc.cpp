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

#include "circtree/genfunc/genfunc.hpp"

#include <string>
#include <vector>

#include "circtree/closedform/spectral.hpp"
#include "circtree/errors.hpp"
#include "circtree/exactalg/series.hpp"

namespace circtree {

RatPoly prod_minus_one_genfunc(const IntPoly& r, const SubsetProductOptions& opts) {
    if (!r.is_monic()) throw std::invalid_argument("prod_minus_one_genfunc: r must be monic");
    const std::size_t d = r.degree();
    RatPoly total;
    for (std::size_t k = 0; k <= d; ++k) {
        const IntPoly a = subset_product_poly(r, k, opts).reversed();
        const RatPoly fk = x_d_dx(log_derivative_genfunc(a));
        total = ((d - k) % 2 == 0) ? total + fk : total - fk;
    }
    return total;
}

RatPoly prod_mixed_genfunc(const IntPoly& r1, const IntPoly& r2, const SubsetProductOptions& opts) {
    if (!r1.is_monic() || !r2.is_monic()) {
        throw std::invalid_argument("prod_mixed_genfunc: r1 and r2 must be monic");
    }
    const std::size_t d1 = r1.degree();
    const std::size_t d2 = r2.degree();
    std::vector<IntPoly> s1, s2;
    for (std::size_t k = 0; k <= d1; ++k) s1.push_back(subset_product_poly(r1, k, opts));
    for (std::size_t l = 0; l <= d2; ++l) s2.push_back(subset_product_poly(r2, l, opts));

    // sum over (k, l) of (-1)^(d1-k) sum_n sigma_k(xi^n) sigma_l(zeta^n) x^n
    RatPoly power_sums;
    for (std::size_t k = 0; k <= d1; ++k) {
        for (std::size_t l = 0; l <= d2; ++l) {
            const IntPoly w = composed_product(s1[k], s2[l]).reversed();
            const RatPoly g = log_derivative_genfunc(w);
            power_sums = ((d1 - k) % 2 == 0) ? power_sums + g : power_sums - g;
        }
    }
    return x_d_dx(power_sums);
}

bool check_palindromy(const RatPoly& f) { return reciprocal_argument(f) == f; }

bool has_integral_series(const RatPoly& f) {
    const Integer& d0 = f.denom()[0];
    return d0 == 1 || d0 == -1;
}

GenFuncResult build_genfunc(const CirculantFamily& family, const GenFuncOptions& opts) {
    const SpectralPolys sp = build_spectral(family);
    const int sign = (family.s_max() - 1) % 2 == 0 ? 1 : -1;
    const std::uint64_t prefactor = family.kind() == Valency::Even ? sp.q : 2 * sp.q;
    Rational scale(Integer(sign), Integer(static_cast<unsigned long>(prefactor)));
    scale.canonicalize();
    RatPoly f;
    if (family.kind() == Valency::Even) {
        const RatPoly phi = prod_minus_one_genfunc(sp.r1, opts.subset);
        f = substitute_signed(phi, sign) * scale;
    } else {
        const RatPoly psi = prod_mixed_genfunc(sp.r1, *sp.r2, opts.subset);
        f = psi * scale;
    }

    if (!has_integral_series(f)) {
        throw InvariantViolation("integrality", "reduced denominator of F(x) has |D(0)| = " +
                                                    to_decimal(abs(f.denom()[0])));
    }
    if (!check_palindromy(f)) {
        throw InvariantViolation("palindromy", "F(x) != F(1/x) for " + family.to_spec());
    }
    if (opts.verify_terms > 0) {
        SeriesWindow series;
        try {
            series = expand_series(f, opts.verify_terms);
        } catch (const NotIntegral& e) {
            throw InvariantViolation("integrality", e.what());
        }
        for (std::size_t n = 1; n <= opts.verify_terms; ++n) {
            const auto nn = static_cast<std::uint32_t>(n);
            const Integer expected =
                family.kind() == Valency::Even ? tau_even(sp, nn) : tau_odd(sp, nn);
            if (series.at(n) != expected) {
                throw InvariantViolation("series", "coefficient " + std::to_string(n) + " is " +
                                                       to_decimal(series.at(n)) + ", closed form " +
                                                       to_decimal(expected));
            }
        }
    }

    GenFuncResult out{f, std::nullopt, family, opts.verify_terms};
    if (opts.compute_w_form) out.f_w = to_w_form(f);
    return out;
}

}  // namespace circtree
