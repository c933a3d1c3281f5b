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
#include <set>
#include <vector>

#include "circtree/exactalg/matrix.hpp"
#include "circtree/graphcore/circulant.hpp"

namespace circtree {

inline constexpr std::size_t kDefaultMaxVertices = 4096;

/// Laplacian of the instance under its edge convention. Symmetric, zero row
/// sums, multi-edges counted with multiplicity, loops ignored.
IntMatrix laplacian(const GraphInstance& g);

struct OracleOptions {
    /// Row/column removed for the principal cofactor.
    std::size_t cofactor_index = 0;
    std::size_t max_vertices = kDefaultMaxVertices;
    bool override_cap = false;
};

/// Spanning-tree count by the Matrix-Tree theorem: a principal cofactor of
/// the Laplacian, evaluated with fraction-free elimination. Zero for
/// disconnected instances.
Integer tau_oracle(const GraphInstance& g, const OracleOptions& opts = {});

/// How a tau value was obtained.
enum class TauPath { ClosedForm, DeterminantOracle, SeriesCoefficient };

const char* to_string(TauPath path);

/// One tau(n) together with the value each computation path produced.
class TauCertificate {
public:
    explicit TauCertificate(std::uint32_t n) : n_(n) {}

    void record(TauPath path, Integer value);

    std::uint32_t n() const noexcept { return n_; }
    /// The first recorded value; nullopt before anything is recorded.
    std::optional<Integer> tau() const;
    std::set<TauPath> paths() const;
    const Integer& value(TauPath path) const;
    /// True iff every recorded path produced the same value.
    bool agree() const;

private:
    std::uint32_t n_;
    std::vector<std::pair<TauPath, Integer>> values_;
};

}  // namespace circtree
