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

#include "circtree/exactalg/int_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "circtree/errors.hpp"

namespace circtree {

double log_abs(const Integer& v) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

namespace {

const Integer kZero = 0;

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { trim(); }

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::power_binomial(std::size_t n, int sign) {
    std::vector<Integer> v(n + 1);
    v[0] = sign;
    v[n] += 1;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPoly::degree() const {
    if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
}

const Integer& IntPoly::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Integer& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool IntPoly::is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer c = content();
    if (leading() < 0) c = -c;
    return c == 1 ? *this : divexact(c);
}

IntPoly IntPoly::reversed() const {
    std::vector<Integer> v(coeffs_.rbegin(), coeffs_.rend());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::substitute_signed(int sign) const {
    IntPoly r = *this;
    if (sign < 0) {
        for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    }
    return r;
}

IntPoly IntPoly::divexact(const Integer& d) const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) {
        if (!divisible(c, d)) throw NotIntegral("coefficient not divisible by " + to_decimal(d));
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    acc.canonicalize();
    return acc;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        const mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(v[i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(v));
}

std::string IntPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        const Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

IntPoly shift(const IntPoly& p, std::size_t k) {
    if (p.is_zero() || k == 0) return p;
    std::vector<Integer> v(k);
    v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
    return IntPoly(std::move(v));
}

namespace {

// In-place long division of r by b over Z when every step is exact.
// On success r holds the remainder and q the quotient.
bool exact_long_division(std::vector<Integer>& r, const IntPoly& b, std::vector<Integer>& q,
                         bool need_zero_remainder) {
    const std::size_t db = b.degree();
    const Integer& lc = b.leading();
    const bool unit = (lc == 1 || lc == -1);
    if (r.size() <= db) {
        q.clear();
        if (need_zero_remainder) {
            return std::all_of(r.begin(), r.end(), [](const Integer& c) { return c == 0; });
        }
        return true;
    }
    q.assign(r.size() - db, Integer(0));
    Integer t;
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        if (unit) {
            t = (lc == 1) ? r[i] : Integer(-r[i]);
        } else {
            if (!divisible(r[i], lc)) return false;
            mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
        }
        const std::size_t k = i - db;
        q[k] = t;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
        }
    }
    r.resize(db);
    if (need_zero_remainder) {
        return std::all_of(r.begin(), r.end(), [](const Integer& c) { return c == 0; });
    }
    return true;
}

}  // namespace

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZero("pseudo-remainder by the zero polynomial");
    if (a.is_zero()) return {};
    const std::size_t db = b.degree();
    if (a.degree() < db) return a;
    const Integer& lc = b.leading();
    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    unsigned long e = a.degree() - db + 1;
    Integer t;
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) {
            // the step still consumes one factor of lc
            if (lc != 1) {
                for (std::size_t j = 0; j < i; ++j) r[j] *= lc;
            }
            --e;
            continue;
        }
        t = r[i];
        const std::size_t k = i - db;
        if (lc != 1) {
            for (std::size_t j = 0; j < i; ++j) r[j] *= lc;
        }
        for (std::size_t j = 0; j < db; ++j) {
            mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
        }
        r[i] = 0;
        --e;
    }
    r.resize(db);
    IntPoly rem(std::move(r));
    if (e > 0 && lc != 1) rem *= ipow(lc, e);
    return rem;
}

DivRem divrem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<Integer> q;
    if (exact_long_division(r, b, q, false)) {
        return {IntPoly(std::move(q)), IntPoly(std::move(r)), Integer(1)};
    }
    // pseudo-division: scale = lc^(da - db + 1)
    const std::size_t da = a.degree();
    const std::size_t db = b.degree();
    const Integer scale = ipow(b.leading(), da - db + 1);
    std::vector<Integer> sr(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : sr) c *= scale;
    std::vector<Integer> sq;
    if (!exact_long_division(sr, b, sq, false)) {
        throw InvariantViolation("pseudo-division", "scaled division was not exact");
    }
    return {IntPoly(std::move(sq)), IntPoly(std::move(sr)), scale};
}

std::optional<IntPoly> try_exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    // a cheap necessary condition before the full division
    if (!divisible(a.leading(), b.leading()) || (b[0] != 0 && !divisible(a[0], b[0]))) {
        return std::nullopt;
    }
    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<Integer> q;
    if (!exact_long_division(r, b, q, true)) return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw NotIntegral("polynomial division is not exact over Z");
    return *std::move(q);
}

IntPoly gcd_prs(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPoly f = a.primitive_part();
    IntPoly g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        if (g.degree() == 0) return IntPoly{1};
        IntPoly r = pseudo_remainder(f, g);
        f = std::move(g);
        g = r.primitive_part();
    }
    return f;
}

namespace {

Integer max_norm(const IntPoly& p) {
    Integer m = 0;
    for (const auto& c : p.coeffs()) {
        if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
    }
    return m;
}

// Balanced base-x digits of h, lowest first.
IntPoly radix_interpolate(Integer h, const Integer& x) {
    std::vector<Integer> digits;
    const Integer half = x / 2;
    Integer g;
    while (h != 0) {
        mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
        if (g > half) g -= x;
        digits.push_back(g);
        h -= g;
        mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    }
    return IntPoly(std::move(digits));
}

bool divides(const IntPoly& d, const IntPoly& p) {
    if (d.is_zero() || d.degree() > p.degree()) return false;
    return try_exact_div(p, d).has_value();
}

std::optional<IntPoly> heuristic_gcd(const IntPoly& f, const IntPoly& g) {
    const Integer fn = max_norm(f);
    const Integer gn = max_norm(g);
    const Integer b = 2 * std::min(fn, gn) + 29;
    const Integer root_bound =
        2 * std::min(Integer(fn / abs(f.leading())), Integer(gn / abs(g.leading()))) + 2;
    Integer x = std::min(b, Integer(99 * sqrt(b)));
    if (x < root_bound) x = root_bound;

    for (int attempt = 0; attempt < 6; ++attempt) {
        const Integer fv = f.eval(x);
        const Integer gv = g.eval(x);
        if (fv != 0 && gv != 0) {
            const Integer h = igcd(fv, gv);
            IntPoly cand = radix_interpolate(h, x).primitive_part();
            if (divides(cand, f) && divides(cand, g)) return cand;

            IntPoly cf = radix_interpolate(divexact(fv, h), x);
            if (!cf.is_zero() && cf.degree() <= f.degree()) {
                if (auto q = try_exact_div(f, cf)) {
                    IntPoly c = q->primitive_part();
                    if (divides(c, g)) return c;
                }
            }
            IntPoly cg = radix_interpolate(divexact(gv, h), x);
            if (!cg.is_zero() && cg.degree() <= g.degree()) {
                if (auto q = try_exact_div(g, cg)) {
                    IntPoly c = q->primitive_part();
                    if (divides(c, f)) return c;
                }
            }
        }
        x = 73794 * x * Integer(sqrt(Integer(sqrt(x)))) / 27011;
    }
    return std::nullopt;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.degree() == 0 || b.degree() == 0) return IntPoly{1};
    IntPoly f = a.primitive_part();
    IntPoly g = b.primitive_part();
    if (f == g) return f;
    // strip common powers of x first; cheap and keeps evaluations smaller
    std::size_t fz = 0, gz = 0;
    while (f[fz] == 0) ++fz;
    while (g[gz] == 0) ++gz;
    const std::size_t common = std::min(fz, gz);
    if (fz > 0) f = IntPoly(std::vector<Integer>(f.coeffs().begin() + fz, f.coeffs().end()));
    if (gz > 0) g = IntPoly(std::vector<Integer>(g.coeffs().begin() + gz, g.coeffs().end()));
    IntPoly core;
    if (f.degree() == 0 || g.degree() == 0) {
        core = IntPoly{1};
    } else if (auto h = heuristic_gcd(f, g)) {
        core = *std::move(h);
    } else {
        core = gcd_prs(f, g);
    }
    return shift(core, common);
}

std::vector<std::pair<IntPoly, std::size_t>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, std::size_t>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    const IntPoly f = p.primitive_part();
    const IntPoly fp = f.derivative();
    const IntPoly a0 = gcd(f, fp);
    IntPoly b = exact_div(f, a0);
    IntPoly c = exact_div(fp, a0);
    IntPoly d = c - b.derivative();
    for (std::size_t i = 1; b.degree() > 0; ++i) {
        IntPoly a = gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
    }
    return out;
}

}  // namespace circtree
