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
#include <vector>

#include "circtree/exactalg/int_poly.hpp"

namespace circtree {

using Complex = std::complex<long double>;

/// All complex roots of a square-free polynomial (Aberth-Ehrlich iteration).
/// Throws NoConvergence if the iteration stalls.
std::vector<Complex> squarefree_roots(const IntPoly& p);

/// All complex roots of p listed with multiplicity. The polynomial is split
/// exactly into square-free parts first, so repeated roots come out as
/// accurately as simple ones.
std::vector<Complex> roots_with_multiplicity(const IntPoly& p);

}  // namespace circtree
