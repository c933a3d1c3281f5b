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

#include "circtree/exactalg/rat_poly.hpp"
#include "circtree/exactalg/symmetric.hpp"
#include "circtree/graphcore/circulant.hpp"

namespace circtree {

struct GenFuncOptions {
    /// Number of series coefficients checked against the closed form.
    std::size_t verify_terms = 12;
    bool compute_w_form = true;
    SubsetProductOptions subset;
};

/// F(x) = sum_{n>=1} tau(n) x^n for a family, with its w = (x + 1/x)/2 form.
struct GenFuncResult {
    RatPoly f_x;
    std::optional<RatPoly> f_w;
    CirculantFamily family;
    std::size_t verified_terms = 0;
};

/**
 * sum_{n>=1} n prod_{r(xi)=0} (xi^n - 1) x^n for a monic integer r.
 *
 * Expands the product into elementary symmetric functions of the powered
 * roots. The k-th one has generating function -x A_k'/A_k, A_k the reversed
 * subset-product polynomial; each is turned into n-weighted form by x d/dx
 * and the pieces are summed with alternating signs.
 */
RatPoly prod_minus_one_genfunc(const IntPoly& r, const SubsetProductOptions& opts = {});

/**
 * sum_{n>=1} n prod_{r1(xi)=0} (xi^n - 1) prod_{r2(zeta)=0} (zeta^n + 1) x^n.
 *
 * Each product sigma_k(xi^n) sigma_l(zeta^n) is a power sum over the roots of
 * the composed product of the k- and l-subset-product polynomials.
 */
RatPoly prod_mixed_genfunc(const IntPoly& r1, const IntPoly& r2,
                           const SubsetProductOptions& opts = {});

/// Builds F for the family and checks integrality, F(x) = F(1/x), and the
/// first verify_terms coefficients against the closed form. A failed check
/// throws InvariantViolation naming it ("integrality", "palindromy", "series").
GenFuncResult build_genfunc(const CirculantFamily& family, const GenFuncOptions& opts = {});

/// f(x) == f(1/x) as rational functions.
bool check_palindromy(const RatPoly& f);

/// The series of f has integer coefficients: in normal form |den(0)| = 1.
bool has_integral_series(const RatPoly& f);

/**
 * The rational function g with g((x + 1/x)/2) = f(x). Numerator and
 * denominator are reduced modulo x^2 - 2wx + 1 and the quotient is
 * multiplied through by the conjugate; the x-linear part must vanish.
 * Throws std::domain_error if f is not invariant under x -> 1/x.
 */
RatPoly to_w_form(const RatPoly& f_x);

/// Inverse of to_w_form: substitutes w = (x + 1/x)/2 and clears denominators.
RatPoly from_w_form(const RatPoly& f_w);

struct FitResult {
    RatPoly f_x;
    /// tau(1..terms_used) were used to determine the function.
    std::size_t terms_used = 0;
    std::size_t recurrence_order = 0;
    /// Further coefficients predicted and confirmed against the closed form.
    std::size_t holdout_checked = 0;
};

/// Number of held-out coefficients fit_genfunc confirms.
inline constexpr std::size_t kFitHoldout = 5;

/**
 * Reconstructs F from exact closed-form values tau(1..2*degree_bound + 2)
 * alone, without the symmetric-function machinery: the shortest integer
 * linear recurrence of the sequence gives the denominator and the
 * truncated product with the series gives the numerator. The result must
 * predict the next kFitHoldout values.
 *
 * Throws std::domain_error if no recurrence of order <= degree_bound exists
 * and InvariantViolation ("fit-holdout") if a prediction fails.
 */
FitResult fit_genfunc(const CirculantFamily& family, std::size_t degree_bound);

}  // namespace circtree
