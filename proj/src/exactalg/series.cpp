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

#include "circtree/exactalg/series.hpp"

#include <string>

#include "circtree/errors.hpp"

namespace circtree {

SeriesWindow expand_series(const RatPoly& f, std::size_t count) {
    if (count == 0) throw std::invalid_argument("expand_series: need at least one term");
    const IntPoly& num = f.numer();
    const IntPoly& den = f.denom();
    const Integer& d0 = den[0];
    if (d0 == 0) throw DivisionByZero("expand_series: pole at x = 0");
    const std::size_t dd = den.degree();
    std::vector<Integer> c(count + 1);
    Integer acc;
    for (std::size_t n = 0; n <= count; ++n) {
        acc = num[n];
        const std::size_t top = std::min(n, dd);
        for (std::size_t j = 1; j <= top; ++j) {
            mpz_submul(acc.get_mpz_t(), den[j].get_mpz_t(), c[n - j].get_mpz_t());
        }
        if (!divisible(acc, d0)) {
            throw NotIntegral("series coefficient of x^" + std::to_string(n) + " is not an integer");
        }
        c[n] = divexact(acc, d0);
    }
    c.erase(c.begin());
    return SeriesWindow{std::move(c)};
}

}  // namespace circtree
