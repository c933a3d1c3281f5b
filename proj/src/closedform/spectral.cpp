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

#include "circtree/closedform/spectral.hpp"

#include <stdexcept>
#include <string>

#include "circtree/errors.hpp"
#include "circtree/exactalg/resultant.hpp"

namespace circtree {

IntPoly laurent_q_poly(const CirculantFamily& family) {
    const std::size_t sk = family.s_max();
    // (z^s - 1)(z^-s - 1) = 2 - z^s - z^-s
    std::vector<Integer> c(2 * sk + 1);
    for (std::uint32_t s : family.jumps()) {
        c[sk] += 2;
        c[sk + s] -= 1;
        c[sk - s] -= 1;
    }
    return IntPoly(std::move(c));
}

SpectralPolys build_spectral(const CirculantFamily& family) {
    SpectralPolys out;
    out.q = family.q();
    out.s_max = family.s_max();
    const IntPoly zq = laurent_q_poly(family);
    auto r1 = try_exact_div(-zq, IntPoly{1, -2, 1});
    if (!r1) {
        throw InvariantViolation("spectral", "(z-1)^2 does not divide z^s_k Q(z)");
    }
    if (!r1->is_monic() || !r1->is_palindromic() || r1->eval(Integer(1)) != Integer(out.q)) {
        throw InvariantViolation("spectral", "r1 is not monic, palindromic with r1(1) = q");
    }
    out.r1 = *std::move(r1);
    if (family.kind() == Valency::Odd) {
        IntPoly r2 = -(zq + IntPoly::monomial(2, family.s_max()));
        if (!r2.is_monic() || !r2.is_palindromic() || r2.eval(Integer(1)) == 0) {
            throw InvariantViolation("spectral", "r2 is not monic and palindromic with r2(1) != 0");
        }
        out.r2 = std::move(r2);
    }
    return out;
}

namespace {

Integer finish(Integer numer, const Integer& denom, bool negate, const char* which) {
    if (!divisible(numer, denom)) {
        throw InvariantViolation(which, "closed form not divisible by " + to_decimal(denom));
    }
    Integer t = divexact(numer, denom);
    if (negate) t = -t;
    if (t < 0) throw InvariantViolation(which, "closed form produced a negative count");
    return t;
}

}  // namespace

Integer tau_even(const SpectralPolys& sp, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("tau_even: n must be >= 1");
    const Integer res = resultant(sp.r1, IntPoly::power_binomial(n, -1));
    const bool negate = ((static_cast<std::uint64_t>(n) + 1) * (sp.s_max - 1)) % 2 == 1;
    return finish(res * n, Integer(sp.q), negate, "tau_even");
}

Integer tau_odd(const SpectralPolys& sp, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("tau_odd: n must be >= 1");
    if (!sp.r2) throw std::invalid_argument("tau_odd: spectral data has no r2");
    const Integer res1 = resultant(sp.r1, IntPoly::power_binomial(n, -1));
    const Integer res2 = resultant(*sp.r2, IntPoly::power_binomial(n, +1));
    const bool negate = (sp.s_max - 1) % 2 == 1;
    return finish(res1 * res2 * n, Integer(2 * sp.q), negate, "tau_odd");
}

Integer tau_even(const CirculantFamily& family, std::uint32_t n) {
    if (family.kind() != Valency::Even) throw std::invalid_argument("tau_even: family is odd");
    return tau_even(build_spectral(family), n);
}

Integer tau_odd(const CirculantFamily& family, std::uint32_t n) {
    if (family.kind() != Valency::Odd) throw std::invalid_argument("tau_odd: family is even");
    return tau_odd(build_spectral(family), n);
}

Integer tau(const CirculantFamily& family, std::uint32_t n) {
    return family.kind() == Valency::Even ? tau_even(family, n) : tau_odd(family, n);
}

}  // namespace circtree
