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

#include <cstddef>
#include <optional>
#include <span>

#include "circtree/exactalg/int_poly.hpp"

namespace circtree {

/**
 * Minimal linear recurrence with integer coefficients for an integer
 * sequence s_0, ..., s_{N-1}.
 *
 * Returns the connection polynomial C (C(0) = 1) of the shortest recurrence
 * sum_{j=0}^{L} C_j s_{m-j} = 0, m >= L, together with its length L, or
 * nullopt when no recurrence of length <= max_order with integer
 * coefficients holds on the whole window (or the window is shorter than 2L).
 *
 * Berlekamp-Massey runs modulo a sequence of 62-bit primes, the coefficients
 * are lifted by Chinese remaindering until they stabilise, and the candidate
 * is then verified exactly over Z on every term of the window.
 */
struct LinearRecurrence {
    IntPoly connection;
    std::size_t length = 0;
};

std::optional<LinearRecurrence> find_integer_recurrence(std::span<const Integer> seq,
                                                        std::size_t max_order);

}  // namespace circtree
