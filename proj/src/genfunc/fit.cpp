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

#include <stdexcept>
#include <string>
#include <vector>

#include "circtree/closedform/spectral.hpp"
#include "circtree/errors.hpp"
#include "circtree/exactalg/recurrence.hpp"
#include "circtree/exactalg/series.hpp"
#include "circtree/genfunc/genfunc.hpp"

namespace circtree {

FitResult fit_genfunc(const CirculantFamily& family, std::size_t degree_bound) {
    const std::size_t terms = 2 * degree_bound + 2;
    const SpectralPolys sp = build_spectral(family);
    auto closed = [&](std::size_t n) {
        const auto nn = static_cast<std::uint32_t>(n);
        return family.kind() == Valency::Even ? tau_even(sp, nn) : tau_odd(sp, nn);
    };

    // s_0 = 0 since F(0) = 0, then tau(1..terms)
    std::vector<Integer> seq(terms + 1);
    for (std::size_t n = 1; n <= terms; ++n) seq[n] = closed(n);

    const auto rec = find_integer_recurrence(seq, degree_bound);
    if (!rec) {
        throw std::domain_error("fit_genfunc: no recurrence of order <= " +
                                std::to_string(degree_bound) + " fits " +
                                std::to_string(terms) + " terms of " + family.to_spec());
    }
    const IntPoly series(seq);
    std::vector<Integer> numer(rec->length);
    const IntPoly product = series * rec->connection;
    for (std::size_t i = 0; i < rec->length; ++i) numer[i] = product[i];

    FitResult out;
    out.f_x = RatPoly(IntPoly(std::move(numer)), rec->connection);
    out.terms_used = terms;
    out.recurrence_order = rec->length;

    const SeriesWindow predicted = expand_series(out.f_x, terms + kFitHoldout);
    for (std::size_t n = terms + 1; n <= terms + kFitHoldout; ++n) {
        const Integer expected = closed(n);
        if (predicted.at(n) != expected) {
            throw InvariantViolation("fit-holdout", "fitted function predicts " +
                                                        to_decimal(predicted.at(n)) + " at n = " +
                                                        std::to_string(n) + ", closed form " +
                                                        to_decimal(expected));
        }
        ++out.holdout_checked;
    }
    return out;
}

}  // namespace circtree
