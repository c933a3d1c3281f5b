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

#include "circtree/graphcore/laplacian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "circtree/errors.hpp"

namespace circtree {

namespace {

void add_edge(IntMatrix& l, std::size_t i, std::size_t j) {
    if (i == j) return;
    l(i, i) += 1;
    l(j, j) += 1;
    l(i, j) -= 1;
    l(j, i) -= 1;
}

}  // namespace

IntMatrix laplacian(const GraphInstance& g) {
    const std::size_t v = g.vertex_count();
    const bool odd = g.family().kind() == Valency::Odd;
    IntMatrix l(v);
    if (g.convention() == EdgeConvention::Multigraph) {
        // i -- i+s for every i covers both directions: the edge i -- i-s is
        // the edge (i-s) -- (i-s)+s.
        for (std::size_t i = 0; i < v; ++i) {
            for (std::uint32_t s : g.family().jumps()) add_edge(l, i, (i + s) % v);
        }
        if (odd) {
            for (std::size_t i = 0; i < g.n(); ++i) add_edge(l, i, i + g.n());
        }
        return l;
    }
    std::vector<std::size_t> nbrs;
    for (std::size_t i = 0; i < v; ++i) {
        nbrs.clear();
        for (std::uint32_t s : g.family().jumps()) {
            nbrs.push_back((i + s) % v);
            nbrs.push_back((i + v - s % v) % v);
        }
        if (odd) nbrs.push_back((i + g.n()) % v);
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        for (std::size_t j : nbrs) {
            if (j == i) continue;
            l(i, i) += 1;
            l(i, j) -= 1;
        }
    }
    return l;
}

Integer tau_oracle(const GraphInstance& g, const OracleOptions& opts) {
    const std::size_t v = g.vertex_count();
    if (!opts.override_cap && v > opts.max_vertices) {
        throw LimitExceeded("vertex count " + std::to_string(v) + " exceeds cap " +
                            std::to_string(opts.max_vertices));
    }
    if (connected_components(g) > 1) return 0;
    if (v == 1) return 1;
    if (opts.cofactor_index >= v) throw std::out_of_range("cofactor index out of range");
    return bareiss_determinant(laplacian(g).minor(opts.cofactor_index));
}

const char* to_string(TauPath path) {
    switch (path) {
        case TauPath::ClosedForm: return "closed-form";
        case TauPath::DeterminantOracle: return "determinant-oracle";
        case TauPath::SeriesCoefficient: return "series-coefficient";
    }
    return "?";
}

void TauCertificate::record(TauPath path, Integer value) {
    for (auto& [p, v] : values_) {
        if (p == path) {
            v = std::move(value);
            return;
        }
    }
    values_.emplace_back(path, std::move(value));
}

std::optional<Integer> TauCertificate::tau() const {
    if (values_.empty()) return std::nullopt;
    return values_.front().second;
}

std::set<TauPath> TauCertificate::paths() const {
    std::set<TauPath> out;
    for (const auto& pv : values_) out.insert(pv.first);
    return out;
}

const Integer& TauCertificate::value(TauPath path) const {
    for (const auto& [p, v] : values_) {
        if (p == path) return v;
    }
    throw std::out_of_range(std::string("no value recorded for path ") + to_string(path));
}

bool TauCertificate::agree() const {
    return std::all_of(values_.begin(), values_.end(),
                       [&](const auto& pv) { return pv.second == values_.front().second; });
}

}  // namespace circtree
