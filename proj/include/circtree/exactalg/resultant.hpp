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

#include "circtree/exactalg/int_poly.hpp"

namespace circtree {

/**
 * Res(a, b) = lc(a)^deg(b) * prod_{a(xi)=0} b(xi), which is also the
 * determinant of the Sylvester matrix with the deg(b) rows of a first.
 * Res(a, c) = c^deg(a) for a constant c. Both arguments must be nonzero.
 *
 * Computed with the subresultant sequence, integer arithmetic only.
 */
Integer resultant(const IntPoly& a, const IntPoly& b);

}  // namespace circtree
