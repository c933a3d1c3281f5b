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

#include <string>

#include "circtree/exactalg/int_poly.hpp"

namespace circtree {

/**
 * Rational function numer/denom with integer polynomial representatives,
 * always held in normal form:
 *   - gcd(numer, denom) over Q is 1,
 *   - gcd(content(numer), content(denom)) = 1,
 *   - lc(denom) > 0,
 *   - the zero function is 0/1.
 * The normal form is unique, so == compares values.
 */
class RatPoly {
public:
    RatPoly() : denom_{1} {}
    RatPoly(IntPoly numer, IntPoly denom);
    explicit RatPoly(IntPoly p) : RatPoly(std::move(p), IntPoly{1}) {}

    static RatPoly constant(const Rational& c);

    const IntPoly& numer() const noexcept { return numer_; }
    const IntPoly& denom() const noexcept { return denom_; }
    bool is_zero() const noexcept { return numer_.is_zero(); }

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator/(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const Rational& c);
    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    std::string to_string(char var = 'x') const;

private:
    struct Normalized {};
    RatPoly(IntPoly numer, IntPoly denom, Normalized)
        : numer_(std::move(numer)), denom_(std::move(denom)) {}

    IntPoly numer_;
    IntPoly denom_;
};

/// f(sign * x) for sign = +1 or -1.
RatPoly substitute_signed(const RatPoly& f, int sign);

/// x * f'(x).
RatPoly x_d_dx(const RatPoly& f);

/**
 * For A(x) = prod (1 - mu_i x) with A(0) = 1 returns
 * sum_i mu_i x / (1 - mu_i x) = -x A'(x) / A(x),
 * the generating function of the power sums sum_i mu_i^n.
 */
RatPoly log_derivative_genfunc(const IntPoly& a);

/// f(1/x) brought back to normal form.
RatPoly reciprocal_argument(const RatPoly& f);

}  // namespace circtree
