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

#include "circtree/exactalg/resultant.hpp"

#include <stdexcept>
#include <utility>

namespace circtree {

Integer resultant(const IntPoly& a_in, const IntPoly& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) {
        throw std::invalid_argument("resultant: arguments must be nonzero");
    }
    const std::size_t da0 = a_in.degree();
    const std::size_t db0 = b_in.degree();
    if (da0 == 0) return ipow(a_in.leading(), db0);
    if (db0 == 0) return ipow(b_in.leading(), da0);

    const Integer ca = a_in.content();
    const Integer cb = b_in.content();
    IntPoly a = ca == 1 ? a_in : a_in.divexact(ca);
    IntPoly b = cb == 1 ? b_in : b_in.divexact(cb);
    const Integer t = ipow(ca, db0) * ipow(cb, da0);

    Integer g = 1;
    Integer h = 1;
    int s = 1;
    if (da0 < db0) {
        std::swap(a, b);
        if ((da0 & 1) && (db0 & 1)) s = -1;
    }
    for (;;) {
        const std::size_t da = a.degree();
        const std::size_t db = b.degree();
        const std::size_t delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return 0;
        const Integer div = g * ipow(h, delta);
        b = div == 1 ? std::move(r) : r.divexact(div);
        g = a.leading();
        // h <- h^(1 - delta) * g^delta
        if (delta == 0) {
            // unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = divexact(ipow(g, delta), ipow(h, delta - 1));
        }
        if (b.degree() == 0) {
            const std::size_t dA = a.degree();
            const Integer last = divexact(ipow(b.leading(), dA), ipow(h, dA - 1));
            return s * t * last;
        }
    }
}

}  // namespace circtree
