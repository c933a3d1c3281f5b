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

#include "circtree/closedform/chebyshev.hpp"

namespace circtree {

Rational chebyshev_T(std::size_t n, const Rational& x) {
    Rational prev = 1;
    if (n == 0) return prev;
    Rational cur = x;
    const Rational two_x = 2 * x;
    for (std::size_t m = 1; m < n; ++m) {
        Rational next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly chebyshev_T_poly(std::size_t n) {
    IntPoly prev{1};
    if (n == 0) return prev;
    IntPoly cur{0, 1};
    const IntPoly two_x{0, 2};
    for (std::size_t m = 1; m < n; ++m) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::complex<long double> chebyshev_T(std::size_t n, std::complex<long double> x) {
    std::complex<long double> prev = 1;
    if (n == 0) return prev;
    std::complex<long double> cur = x;
    for (std::size_t m = 1; m < n; ++m) {
        auto next = 2.0L * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace circtree
