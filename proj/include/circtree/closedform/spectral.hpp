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
#include <optional>

#include "circtree/exactalg/int_poly.hpp"
#include "circtree/graphcore/circulant.hpp"

namespace circtree {

/**
 * Integer polynomials carrying the nontrivial spectrum of a family.
 *
 * With Q(z) = sum_j (z^{s_j} - 1)(z^{-s_j} - 1):
 *   r1 = -z^{s_k} Q(z) / (z - 1)^2, monic, palindromic, degree 2 s_k - 2;
 *        its roots are the roots of Q other than 1, and r1(1) = q.
 *   r2 = -z^{s_k} (Q(z) + 2), monic, palindromic, degree 2 s_k
 *        (odd families only).
 */
struct SpectralPolys {
    IntPoly r1;
    std::optional<IntPoly> r2;
    std::uint64_t q = 0;
    std::uint32_t s_max = 0;
};

/// z^{s_k} Q(z), the Laurent polynomial Q with denominators cleared.
IntPoly laurent_q_poly(const CirculantFamily& family);

/// Builds r1 (and r2). Throws InvariantViolation if (z - 1)^2 does not divide
/// z^{s_k} Q(z) exactly.
SpectralPolys build_spectral(const CirculantFamily& family);

/// tau(n) = (-1)^{(n+1)(s_k-1)} (n / q) Res(r1, z^n - 1) for an even family.
Integer tau_even(const CirculantFamily& family, std::uint32_t n);
Integer tau_even(const SpectralPolys& spectral, std::uint32_t n);

/// tau(n) = (-1)^{s_k-1} (n / 2q) Res(r1, z^n - 1) Res(r2, z^n + 1) for an odd family.
Integer tau_odd(const CirculantFamily& family, std::uint32_t n);
Integer tau_odd(const SpectralPolys& spectral, std::uint32_t n);

/// Dispatches on the family kind.
Integer tau(const CirculantFamily& family, std::uint32_t n);

}  // namespace circtree
