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
#include <vector>

#include "circtree/exactalg/rat_poly.hpp"

namespace circtree {

/// Exact coefficients a_1..a_N of a power series. values[i] is a_{i+1}.
struct SeriesWindow {
    std::vector<Integer> values;

    std::size_t size() const noexcept { return values.size(); }
    /// Coefficient of x^n, 1 <= n <= size().
    const Integer& at(std::size_t n) const { return values.at(n - 1); }

    friend bool operator==(const SeriesWindow&, const SeriesWindow&) = default;
};

/**
 * Taylor coefficients n = 1..count of f at x = 0, by the linear recurrence
 * given by the denominator. Throws DivisionByZero if f has a pole at 0 and
 * NotIntegral if any coefficient (including the constant term) is not an
 * integer.
 */
SeriesWindow expand_series(const RatPoly& f, std::size_t count);

}  // namespace circtree
