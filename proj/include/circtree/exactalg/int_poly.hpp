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
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circtree/exactalg/integer.hpp"

namespace circtree {

/**
 * Dense univariate polynomial with arbitrary-precision integer coefficients.
 *
 * Coefficients are stored lowest degree first and the highest stored
 * coefficient is always nonzero. The zero polynomial is the empty sequence
 * and has no degree: degree() throws on it, so callers test is_zero() first.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<Integer> coeffs);

    static IntPoly constant(const Integer& c);
    /// c * x^k
    static IntPoly monomial(const Integer& c, std::size_t k);
    /// x^n - 1 (sign = -1) or x^n + 1 (sign = +1).
    static IntPoly power_binomial(std::size_t n, int sign);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    std::size_t degree() const;
    /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of x^i; zero beyond the stored range.
    const Integer& operator[](std::size_t i) const;
    const Integer& leading() const;
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    bool is_monic() const { return !is_zero() && leading() == 1; }
    /// Coefficient sequence equals its reversal.
    bool is_palindromic() const;

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    Integer content() const;
    /// Divides out the content and makes the leading coefficient positive.
    IntPoly primitive_part() const;
    /// x^deg * p(1/x). Low-order zero coefficients shorten the result.
    IntPoly reversed() const;
    IntPoly derivative() const;
    /// p(sign * x) for sign = +1 or -1.
    IntPoly substitute_signed(int sign) const;
    /// Divides every coefficient by d, which must divide each exactly.
    IntPoly divexact(const Integer& d) const;

    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
    friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Human-readable form in ascending degree, e.g. "1 - 2x + x^2".
    std::string to_string(char var = 'x') const;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

/// Multiplies p by x^k.
IntPoly shift(const IntPoly& p, std::size_t k);

/**
 * Result of divrem: scale * a = quotient * b + remainder with
 * remainder == 0 or deg(remainder) < deg(b).
 *
 * When the division is exact over the integers at every step (always the
 * case for b with leading coefficient +-1) scale is 1 and this is ordinary
 * division. Otherwise it is classical pseudo-division with
 * scale = lc(b)^(deg a - deg b + 1).
 */
struct DivRem {
    IntPoly quotient;
    IntPoly remainder;
    Integer scale;
};

DivRem divrem(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q * b + prem(a, b).
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// a / b if b divides a in Z[x], otherwise nullopt.
std::optional<IntPoly> try_exact_div(const IntPoly& a, const IntPoly& b);

/// a / b; throws NotIntegral when b does not divide a in Z[x].
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/**
 * Greatest common divisor over Q, returned primitive with positive leading
 * coefficient. gcd(0, 0) is 0 and the gcd with a nonzero constant is 1.
 *
 * Uses the heuristic integer gcd (evaluation at a large integer, gcd of the
 * values, balanced radix reconstruction, trial division), falling back to
 * the primitive Euclidean sequence.
 */
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Primitive polynomial remainder sequence gcd. Slow; reference route.
IntPoly gcd_prs(const IntPoly& a, const IntPoly& b);

/// Square-free decomposition p = c * prod f_i^i (Yun). Returns (f_i, i) for
/// nonconstant f_i, each primitive. The constant c is not returned.
std::vector<std::pair<IntPoly, std::size_t>> squarefree_decomposition(const IntPoly& p);

}  // namespace circtree
