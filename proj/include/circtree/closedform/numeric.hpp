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

#include <cstdint>

#include "circtree/exactalg/int_poly.hpp"
#include "circtree/graphcore/circulant.hpp"

namespace circtree {

/**
 * Floating-point tau(n) through the Chebyshev-root products.
 *
 * Even: ((-1)^{n(s_k-1)} n / q) prod_p (2 T_n(w_p) - 2) over the roots w_p of
 *   P(w) = sum_j (T_{s_j}(w) - 1) / (w - 1).
 * Odd:  (n 4^{s_k-1} / q) prod_p (T_n(u_p) - 1) prod_p (T_n(v_p) + 1) with
 *   P(w) = 2k + 1 - 2 sum_i T_{s_i}(w), u_p the roots of (P(u) - 1)/(u - 1)
 *   and v_p the roots of P(v) + 1.
 *
 * Roots come from an independent numeric solver, so agreement with the
 * exact value is a genuine cross-check.
 */
long double tau_numeric_check(const CirculantFamily& family, std::uint32_t n);

/// Chebyshev-side polynomial whose roots feed tau_numeric_check:
/// P(w) for even families, (P(u) - 1)/(u - 1) for odd ones.
IntPoly chebyshev_minus_poly(const CirculantFamily& family);
/// P(v) + 1 for odd families.
IntPoly chebyshev_plus_poly(const CirculantFamily& family);

struct MahlerEstimate {
    double value = 0.0;
    /// The polynomial measured: z^{s_k} L(z), L(z) = 2k - sum_i (z^{s_i} + z^{-s_i}).
    IntPoly polynomial;
};

/// Mahler measure |lc| * prod max(1, |root|) of z^{s_k} L(z).
MahlerEstimate mahler_measure(const CirculantFamily& family);

/// (tau * q / n)^{1/n} computed from the exact tau without overflow.
double growth_rate(const Integer& tau, std::uint64_t q, std::uint32_t n);

}  // namespace circtree
