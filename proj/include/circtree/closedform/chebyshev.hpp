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

#include <complex>
#include <cstddef>

#include "circtree/exactalg/int_poly.hpp"

namespace circtree {

/// T_n(x) by the three-term recurrence T_0 = 1, T_1 = x, T_{m+1} = 2x T_m - T_{m-1}.
Rational chebyshev_T(std::size_t n, const Rational& x);

/// Coefficients of T_n as an integer polynomial.
IntPoly chebyshev_T_poly(std::size_t n);

/// T_n at a complex point, same recurrence.
std::complex<long double> chebyshev_T(std::size_t n, std::complex<long double> x);

}  // namespace circtree
