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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "circtree/closedform/chebyshev.hpp"
#include "circtree/closedform/numeric.hpp"
#include "circtree/closedform/roots.hpp"
#include "circtree/closedform/spectral.hpp"
#include "circtree/errors.hpp"
#include "circtree/graphcore/laplacian.hpp"

using namespace circtree;

namespace {

CirculantFamily even(std::vector<std::uint32_t> j) { return {Valency::Even, std::move(j)}; }
CirculantFamily odd(std::vector<std::uint32_t> j) { return {Valency::Odd, std::move(j)}; }

CirculantFamily random_family(std::mt19937_64& rng, std::uint32_t max_jump, Valency kind) {
    std::vector<std::uint32_t> j;
    while (j.empty()) {
        for (std::uint32_t s = 1; s <= max_jump; ++s) {
            if (rng() % 2) j.push_back(s);
        }
    }
    return {kind, j};
}

long double relative_error(long double approx, const Integer& exact) {
    const long double e = static_cast<long double>(exact.get_d());
    return std::fabs(approx - e) / std::fabs(e);
}

}  // namespace

TEST_SUITE("spectral") {
    TEST_CASE("r1 and r2 for small families") {
        CHECK(build_spectral(even({1, 2})).r1 == IntPoly{1, 3, 1});
        CHECK(build_spectral(even({1})).r1 == IntPoly{1});
        const SpectralPolys m = build_spectral(odd({1}));
        REQUIRE(m.r2.has_value());
        CHECK(*m.r2 == IntPoly{1, -4, 1});
        CHECK(m.r2->eval(Integer(1)) != 0);
        CHECK_FALSE(build_spectral(even({1, 2})).r2.has_value());
    }

    TEST_CASE("z^{s_k} Q(z) for {1,2}") {
        CHECK(laurent_q_poly(even({1, 2})) == IntPoly{-1, -1, 4, -1, -1});
    }

    TEST_CASE("spectral polynomials are monic and palindromic with r1(1) = q") {
        std::mt19937_64 rng(71);
        for (int trial = 0; trial < 60; ++trial) {
            const auto kind = trial % 2 ? Valency::Odd : Valency::Even;
            const CirculantFamily f = random_family(rng, 7, kind);
            const SpectralPolys sp = build_spectral(f);
            CHECK(sp.r1.is_monic());
            CHECK(sp.r1.is_palindromic());
            CHECK(sp.r1.degree() == 2 * f.s_max() - 2);
            CHECK(sp.r1.eval(Integer(1)) == static_cast<unsigned long>(f.q()));
            if (kind == Valency::Odd) {
                REQUIRE(sp.r2.has_value());
                CHECK(sp.r2->is_monic());
                CHECK(sp.r2->is_palindromic());
                CHECK(sp.r2->degree() == 2 * f.s_max());
            }
        }
    }
}

TEST_SUITE("tau") {
    TEST_CASE("even valency values") {
        CHECK(tau_even(even({1, 2}), 5) == 125);
        CHECK(tau_even(even({1, 2}), 2) == 2);
        for (std::uint32_t n = 1; n <= 6; ++n) CHECK(tau_even(even({1}), n) == n);
    }

    TEST_CASE("odd valency values") {
        CHECK(tau_odd(odd({1}), 3) == 81);
        CHECK(tau_odd(odd({1}), 2) == 16);
        CHECK(tau_odd(odd({1, 2}), 3) == 1296);
        CHECK(tau_oracle(GraphInstance(even({1, 2, 3}), 6, EdgeConvention::Simple)) == 1296);
    }

    TEST_CASE("Fibonacci law for C_n(1,2)") {
        Integer a = 0, b = 1;
        for (std::uint32_t n = 1; n <= 40; ++n) {
            const Integer fn = b;
            CHECK(tau(even({1, 2}), n) == fn * fn * n);
            const Integer next = a + b;
            a = b;
            b = next;
        }
    }

    TEST_CASE("Moebius ladder law n (T_n(2) + 1)") {
        for (std::uint32_t n = 1; n <= 30; ++n) {
            const Rational t = chebyshev_T(n, Rational(2));
            CHECK(tau(odd({1}), n) == (t.get_num() + 1) * n);
        }
    }

    TEST_CASE("closed form equals the determinant on random families") {
        std::mt19937_64 rng(73);
        for (int trial = 0; trial < 24; ++trial) {
            const auto kind = trial % 3 == 0 ? Valency::Odd : Valency::Even;
            const CirculantFamily f = random_family(rng, 5, kind);
            for (std::uint32_t n = 1; n <= 16; ++n) {
                CHECK(tau(f, n) == tau_oracle(GraphInstance(f, n)));
            }
        }
    }

    TEST_CASE("common divisor with n forces zero") {
        CHECK(tau_even(even({2, 4}), 6) == 0);
        CHECK(tau_oracle(GraphInstance(even({2, 4}), 6)) == 0);
        std::mt19937_64 rng(79);
        for (int trial = 0; trial < 40; ++trial) {
            CirculantFamily base = random_family(rng, 3, Valency::Even);
            const std::uint32_t g = 2 + trial % 3;
            std::vector<std::uint32_t> scaled;
            for (std::uint32_t s : base.jumps()) scaled.push_back(s * g);
            for (std::uint32_t n = g; n <= 24; n += g) CHECK(tau(even(scaled), n) == 0);
        }
    }

    TEST_CASE("never negative") {
        std::mt19937_64 rng(83);
        for (int trial = 0; trial < 40; ++trial) {
            const auto kind = trial % 2 ? Valency::Odd : Valency::Even;
            const CirculantFamily f = random_family(rng, 6, kind);
            for (std::uint32_t n = 1; n <= 20; ++n) CHECK(tau(f, n) >= 0);
        }
    }
}

TEST_SUITE("chebyshev") {
    TEST_CASE("values") {
        for (std::size_t n = 0; n <= 10; ++n) CHECK(chebyshev_T(n, Rational(1)) == 1);
        CHECK(chebyshev_T(3, Rational(2)) == 26);
        // (3^4 + 3^-4) / 2 = 6562 / 162.
        CHECK(chebyshev_T(4, Rational(5, 3)) == Rational(3281, 81));
        CHECK(chebyshev_T_poly(3) == IntPoly{0, -3, 0, 4});
    }

    TEST_CASE("T_n((z + 1/z)/2) = (z^n + z^-n)/2") {
        std::mt19937_64 rng(89);
        std::uniform_int_distribution<long> num(-30, 30);
        std::uniform_int_distribution<long> den(1, 30);
        for (int trial = 0; trial < 100; ++trial) {
            Rational z(num(rng), den(rng));
            z.canonicalize();
            if (z == 0) continue;
            const Rational w = (z + 1 / z) / 2;
            Rational zn = 1;
            for (std::size_t n = 0; n <= 12; ++n) {
                CHECK(chebyshev_T(n, w) == (zn + 1 / zn) / 2);
                CHECK(chebyshev_T_poly(n).eval(w) == chebyshev_T(n, w));
                zn *= z;
            }
        }
    }

    TEST_CASE("complex evaluation agrees with the exact one") {
        for (std::size_t n = 0; n <= 15; ++n) {
            const auto v = chebyshev_T(n, std::complex<long double>(0.75L, 0.0L));
            CHECK(static_cast<double>(v.real()) ==
                  doctest::Approx(chebyshev_T(n, Rational(3, 4)).get_d()).epsilon(1e-14));
        }
    }
}

TEST_SUITE("numeric") {
    TEST_CASE("roots of known polynomials") {
        const auto roots = squarefree_roots(IntPoly{1, 3, 1});
        REQUIRE(roots.size() == 2);
        for (const Complex& r : roots) CHECK(static_cast<double>(std::abs(r * r + 3.0L * r + 1.0L)) < 1e-15);
        const auto all = roots_with_multiplicity(IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1});
        CHECK(all.size() == 3);
    }

    TEST_CASE("Chebyshev products reproduce exact tau") {
        CHECK(static_cast<double>(tau_numeric_check(even({1, 2}), 5)) == doctest::Approx(125).epsilon(1e-12));
        CHECK(relative_error(tau_numeric_check(even({1, 3}), 7), tau_even(even({1, 3}), 7)) < 1e-8L);
        CHECK(static_cast<double>(tau_numeric_check(odd({1}), 3)) == doctest::Approx(81).epsilon(1e-12));
        std::mt19937_64 rng(97);
        for (int trial = 0; trial < 20; ++trial) {
            const auto kind = trial % 2 ? Valency::Odd : Valency::Even;
            const CirculantFamily f = random_family(rng, 5, kind);
            for (std::uint32_t n = 1; n <= 30; ++n) {
                const Integer t = tau(f, n);
                if (t == 0) {
                    CHECK(std::fabs(tau_numeric_check(f, n)) < 0.5L);
                } else {
                    CHECK(relative_error(tau_numeric_check(f, n), t) < 1e-8L);
                }
            }
        }
    }

    TEST_CASE("Mahler measure") {
        CHECK(mahler_measure(even({1, 2})).value == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-10));
        CHECK(mahler_measure(even({1})).value == doctest::Approx(1.0).epsilon(1e-10));
        const Integer t = tau_even(even({1, 2}), 200);
        const double ratio = growth_rate(t, 5, 200) / 2.6180339887;
        CHECK(ratio > 0.99);
        CHECK(ratio < 1.01);
    }
}
