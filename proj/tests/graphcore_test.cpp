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

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "circtree/closedform/spectral.hpp"
#include "circtree/errors.hpp"
#include "circtree/graphcore/circulant.hpp"
#include "circtree/graphcore/laplacian.hpp"

using namespace circtree;

namespace {

CirculantFamily even(std::vector<std::uint32_t> j) { return {Valency::Even, std::move(j)}; }
CirculantFamily odd(std::vector<std::uint32_t> j) { return {Valency::Odd, std::move(j)}; }

/// Components of the graph whose edges are the nonzero off-diagonal entries.
std::size_t bfs_components(const IntMatrix& lap) {
    const std::size_t v = lap.size();
    std::vector<bool> seen(v, false);
    std::size_t comps = 0;
    for (std::size_t s = 0; s < v; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::queue<std::size_t> todo;
        todo.push(s);
        seen[s] = true;
        while (!todo.empty()) {
            const std::size_t u = todo.front();
            todo.pop();
            for (std::size_t w = 0; w < v; ++w) {
                if (w != u && lap(u, w) != 0 && !seen[w]) {
                    seen[w] = true;
                    todo.push(w);
                }
            }
        }
    }
    return comps;
}

/// All nonempty jump sets drawn from {1..max_jump} with at most max_size jumps.
std::vector<std::vector<std::uint32_t>> jump_sets(std::uint32_t max_jump, std::size_t max_size) {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t mask = 1; mask < (1u << max_jump); ++mask) {
        std::vector<std::uint32_t> j;
        for (std::uint32_t s = 1; s <= max_jump; ++s) {
            if (mask >> (s - 1) & 1) j.push_back(s);
        }
        if (j.size() <= max_size) out.push_back(j);
    }
    return out;
}

}  // namespace

TEST_SUITE("circulant") {
    TEST_CASE("family validation and accessors") {
        CHECK_THROWS_AS(even({}), std::invalid_argument);
        CHECK_THROWS_AS(even({0, 1}), std::invalid_argument);
        CHECK_THROWS_AS(even({2, 2}), std::invalid_argument);
        CHECK_THROWS_AS(even({3, 1}), std::invalid_argument);
        const CirculantFamily f = even({1, 2, 3});
        CHECK(f.q() == 14);
        CHECK(f.s_max() == 3);
        CHECK(f.to_spec() == "C[1,2,3]");
        CHECK(odd({1, 4}).to_spec() == "C2[1,4]");
        CHECK_THROWS_AS(GraphInstance(f, 0), std::invalid_argument);
    }

    TEST_CASE("simple flag") {
        CHECK(GraphInstance(even({1, 2}), 5).simple());
        CHECK_FALSE(GraphInstance(even({1, 2}), 4).simple());
        CHECK(GraphInstance(odd({1}), 2).simple());
        CHECK_FALSE(GraphInstance(odd({1, 2}), 2).simple());
        CHECK(GraphInstance(odd({1}), 3).vertex_count() == 6);
    }

    TEST_CASE("gcd rule for components") {
        CHECK(connected_components(GraphInstance(even({2}), 6)) == 2);
        CHECK(connected_components(GraphInstance(even({1, 2}), 5)) == 1);
        CHECK(connected_components(GraphInstance(even({2, 4}), 8)) == 2);
    }
}

TEST_SUITE("laplacian") {
    TEST_CASE("C_4(1,2) with simple edges is K4") {
        const IntMatrix lap = laplacian(GraphInstance(even({1, 2}), 4, EdgeConvention::Simple));
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) CHECK(lap(i, j) == (i == j ? 3 : -1));
        }
    }

    TEST_CASE("C_3(1) is a triangle") {
        const IntMatrix lap = laplacian(GraphInstance(even({1}), 3));
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) CHECK(lap(i, j) == (i == j ? 2 : -1));
        }
    }

    TEST_CASE("multigraph keeps every jump with multiplicity") {
        // Jump 2 on 4 vertices runs i -> i+2 from both ends: a double edge.
        const IntMatrix lap = laplacian(GraphInstance(even({1, 2}), 4));
        CHECK(lap(0, 0) == 4);
        CHECK(lap(0, 2) == -2);
        CHECK(lap(0, 1) == -1);
    }

    TEST_CASE("row sums vanish") {
        std::mt19937_64 rng(61);
        for (const auto& jumps : jump_sets(5, 3)) {
            for (std::uint32_t n = 1; n <= 12; n += 1 + rng() % 3) {
                for (const auto conv : {EdgeConvention::Multigraph, EdgeConvention::Simple}) {
                    for (const auto kind : {Valency::Even, Valency::Odd}) {
                        const IntMatrix lap = laplacian(GraphInstance({kind, jumps}, n, conv));
                        for (std::size_t i = 0; i < lap.size(); ++i) {
                            Integer sum = 0;
                            for (std::size_t j = 0; j < lap.size(); ++j) sum += lap(i, j);
                            CHECK(sum == 0);
                            for (std::size_t j = 0; j < lap.size(); ++j) CHECK(lap(i, j) == lap(j, i));
                        }
                    }
                }
            }
        }
    }
}

TEST_SUITE("tau_oracle") {
    TEST_CASE("complete graphs and the Moebius ladder") {
        CHECK(tau_oracle(GraphInstance(even({1, 2}), 5)) == 125);
        CHECK(tau_oracle(GraphInstance(even({1, 2}), 4, EdgeConvention::Simple)) == 16);
        CHECK(tau_oracle(GraphInstance(odd({1}), 3)) == 81);
        CHECK(tau_oracle(GraphInstance(even({1, 2, 3}), 6, EdgeConvention::Simple)) == 1296);
        CHECK(tau_oracle(GraphInstance(even({1}), 1)) == 1);
    }

    TEST_CASE("zero exactly when disconnected, exhaustive up to 24 vertices") {
        for (const auto& jumps : jump_sets(6, 3)) {
            for (std::uint32_t n = 1; n <= 24; ++n) {
                const GraphInstance g(even(jumps), n);
                const std::size_t comps = bfs_components(laplacian(g));
                CHECK(comps == connected_components(g));
                CHECK((tau_oracle(g) == 0) == (comps > 1));
            }
            for (std::uint32_t n = 1; n <= 12; ++n) {
                const GraphInstance g(odd(jumps), n);
                const std::size_t comps = bfs_components(laplacian(g));
                CHECK(comps == connected_components(g));
                CHECK((tau_oracle(g) == 0) == (comps > 1));
            }
        }
    }

    TEST_CASE("invariant under reflecting jumps") {
        for (const auto& jumps : jump_sets(5, 3)) {
            for (std::uint32_t n = jumps.back() + 1; n <= 16; ++n) {
                std::vector<std::uint32_t> mirrored;
                for (std::uint32_t s : jumps) mirrored.push_back(n - s);
                std::sort(mirrored.begin(), mirrored.end());
                if (std::adjacent_find(mirrored.begin(), mirrored.end()) != mirrored.end()) continue;
                const Integer t = tau_oracle(GraphInstance(even(jumps), n));
                CHECK(t == tau_oracle(GraphInstance(even(mirrored), n)));
                CHECK(t == tau(even(mirrored), n));
            }
        }
    }

    TEST_CASE("any cofactor gives the same count") {
        std::mt19937_64 rng(67);
        for (const auto& jumps : jump_sets(4, 3)) {
            for (std::uint32_t n = 2; n <= 14; ++n) {
                for (const auto kind : {Valency::Even, Valency::Odd}) {
                    const GraphInstance g({kind, jumps}, n);
                    OracleOptions other;
                    other.cofactor_index = rng() % g.vertex_count();
                    CHECK(tau_oracle(g) == tau_oracle(g, other));
                }
            }
        }
    }

    TEST_CASE("vertex cap") {
        OracleOptions small;
        small.max_vertices = 10;
        const GraphInstance g(even({1, 2}), 11);
        CHECK_THROWS_AS(tau_oracle(g, small), LimitExceeded);
        small.override_cap = true;
        CHECK(tau_oracle(g, small) == 11 * 89 * 89);
    }
}

TEST_SUITE("certificate") {
    TEST_CASE("agree iff all recorded paths match") {
        TauCertificate c(5);
        CHECK_FALSE(c.tau().has_value());
        c.record(TauPath::ClosedForm, 125);
        c.record(TauPath::DeterminantOracle, 125);
        CHECK(c.agree());
        CHECK(*c.tau() == 125);
        CHECK(c.paths().size() == 2);
        c.record(TauPath::SeriesCoefficient, 124);
        CHECK_FALSE(c.agree());
        CHECK(std::string(to_string(TauPath::DeterminantOracle)) == "determinant-oracle");
    }
}
