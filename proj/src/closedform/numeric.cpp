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

#include "circtree/closedform/numeric.hpp"

#include <cmath>
#include <stdexcept>

#include "circtree/closedform/chebyshev.hpp"
#include "circtree/closedform/roots.hpp"
#include "circtree/closedform/spectral.hpp"
#include "circtree/errors.hpp"

namespace circtree {

namespace {

// 2k + 1 - 2 sum_i T_{s_i}(w)
IntPoly odd_p_poly(const CirculantFamily& family) {
    IntPoly p{static_cast<long>(2 * family.jump_count() + 1)};
    for (std::uint32_t s : family.jumps()) p -= chebyshev_T_poly(s) * Integer(2);
    return p;
}

}  // namespace

IntPoly chebyshev_minus_poly(const CirculantFamily& family) {
    const IntPoly w_minus_1{-1, 1};
    if (family.kind() == Valency::Even) {
        IntPoly sum;
        for (std::uint32_t s : family.jumps()) sum += chebyshev_T_poly(s) - IntPoly{1};
        return exact_div(sum, w_minus_1);
    }
    return exact_div(odd_p_poly(family) - IntPoly{1}, w_minus_1);
}

IntPoly chebyshev_plus_poly(const CirculantFamily& family) {
    if (family.kind() != Valency::Odd) {
        throw std::invalid_argument("chebyshev_plus_poly: family must be odd");
    }
    return odd_p_poly(family) + IntPoly{1};
}

long double tau_numeric_check(const CirculantFamily& family, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("tau_numeric_check: n must be >= 1");
    const long double nn = n;
    const long double q = static_cast<long double>(family.q());
    const std::uint32_t sk = family.s_max();
    Complex prod = 1;
    if (family.kind() == Valency::Even) {
        for (const Complex& w : roots_with_multiplicity(chebyshev_minus_poly(family))) {
            prod *= 2.0L * chebyshev_T(n, w) - 2.0L;
        }
        const bool negate = (static_cast<std::uint64_t>(n) * (sk - 1)) % 2 == 1;
        return (negate ? -1.0L : 1.0L) * nn / q * prod.real();
    }
    for (const Complex& u : roots_with_multiplicity(chebyshev_minus_poly(family))) {
        prod *= chebyshev_T(n, u) - 1.0L;
    }
    for (const Complex& v : roots_with_multiplicity(chebyshev_plus_poly(family))) {
        prod *= chebyshev_T(n, v) + 1.0L;
    }
    return nn * std::pow(4.0L, static_cast<long double>(sk - 1)) / q * prod.real();
}

MahlerEstimate mahler_measure(const CirculantFamily& family) {
    MahlerEstimate out;
    out.polynomial = laurent_q_poly(family);
    long double value = std::fabs(static_cast<long double>(out.polynomial.leading().get_d()));
    for (const Complex& z : roots_with_multiplicity(out.polynomial)) {
        value *= std::max(1.0L, std::abs(z));
    }
    out.value = static_cast<double>(value);
    return out;
}

double growth_rate(const Integer& tau, std::uint64_t q, std::uint32_t n) {
    if (tau <= 0) return 0.0;
    const double log_value = log_abs(tau) + std::log(static_cast<double>(q)) -
                             std::log(static_cast<double>(n));
    return std::exp(log_value / n);
}

}  // namespace circtree
