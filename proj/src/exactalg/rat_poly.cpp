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

#include "circtree/exactalg/rat_poly.hpp"

#include "circtree/errors.hpp"

namespace circtree {

RatPoly::RatPoly(IntPoly numer, IntPoly denom) {
    if (denom.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (numer.is_zero()) {
        denom_ = IntPoly{1};
        return;
    }
    const IntPoly g = gcd(numer, denom);
    if (g.degree() > 0) {
        numer = exact_div(numer, g);
        denom = exact_div(denom, g);
    }
    Integer c = igcd(numer.content(), denom.content());
    if (denom.leading() < 0) c = -c;
    if (c != 1) {
        numer = numer.divexact(c);
        denom = denom.divexact(c);
    }
    numer_ = std::move(numer);
    denom_ = std::move(denom);
}

RatPoly RatPoly::constant(const Rational& c) {
    return RatPoly(IntPoly{c.get_num()}, IntPoly{c.get_den()});
}

RatPoly RatPoly::operator-() const { return RatPoly(-numer_, denom_, Normalized{}); }

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.denom_ == b.denom_) return RatPoly(a.numer_ + b.numer_, a.denom_);
    // a/b + c/d with g = gcd(b, d): (a d' + c b') / (b' d)
    const IntPoly g = gcd(a.denom_, b.denom_);
    if (g.degree() == 0) {
        return RatPoly(a.numer_ * b.denom_ + b.numer_ * a.denom_, a.denom_ * b.denom_);
    }
    const IntPoly ad = exact_div(a.denom_, g);
    const IntPoly bd = exact_div(b.denom_, g);
    return RatPoly(a.numer_ * bd + b.numer_ * ad, ad * b.denom_);
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RatPoly(a.numer_ * b.numer_, a.denom_ * b.denom_);
}

RatPoly operator/(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RatPoly(a.numer_ * b.denom_, a.denom_ * b.numer_);
}

RatPoly operator*(const RatPoly& a, const Rational& c) {
    return RatPoly(a.numer_ * c.get_num(), a.denom_ * c.get_den());
}

std::string RatPoly::to_string(char var) const {
    if (denom_ == IntPoly{1}) return numer_.to_string(var);
    return "(" + numer_.to_string(var) + ") / (" + denom_.to_string(var) + ")";
}

RatPoly substitute_signed(const RatPoly& f, int sign) {
    return RatPoly(f.numer().substitute_signed(sign), f.denom().substitute_signed(sign));
}

RatPoly x_d_dx(const RatPoly& f) {
    if (f.is_zero()) return {};
    const IntPoly& n = f.numer();
    const IntPoly& d = f.denom();
    const IntPoly top = shift(n.derivative() * d - n * d.derivative(), 1);
    return RatPoly(top, d * d);
}

RatPoly log_derivative_genfunc(const IntPoly& a) {
    if (a.is_zero() || a[0] != 1) {
        throw std::invalid_argument("log_derivative_genfunc: A(0) must equal 1");
    }
    return RatPoly(-shift(a.derivative(), 1), a);
}

RatPoly reciprocal_argument(const RatPoly& f) {
    if (f.is_zero()) return f;
    // n(1/x)/d(1/x) = x^(dd - dn) rev(n) / rev(d)
    const std::size_t dn = f.numer().degree();
    const std::size_t dd = f.denom().degree();
    IntPoly n = f.numer().reversed();
    IntPoly d = f.denom().reversed();
    if (dd >= dn) {
        n = shift(n, dd - dn);
    } else {
        d = shift(d, dn - dd);
    }
    return RatPoly(n, d);
}

}  // namespace circtree
