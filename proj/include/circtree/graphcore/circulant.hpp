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
#include <cstdint>
#include <string>
#include <vector>

#include "circtree/exactalg/integer.hpp"

namespace circtree {

enum class Valency {
    /// C_n(s_1, ..., s_k) on n vertices.
    Even,
    /// C_2n(s_1, ..., s_k, n) on 2n vertices, including the diameter jump n.
    Odd,
};

/// A parameterized circulant family: a jump set s_1 < ... < s_k and a kind.
class CirculantFamily {
public:
    /// Throws std::invalid_argument unless jumps is nonempty, strictly
    /// increasing, and all jumps are >= 1.
    CirculantFamily(Valency kind, std::vector<std::uint32_t> jumps);

    Valency kind() const noexcept { return kind_; }
    const std::vector<std::uint32_t>& jumps() const noexcept { return jumps_; }
    std::size_t jump_count() const noexcept { return jumps_.size(); }
    /// s_1^2 + ... + s_k^2
    std::uint64_t q() const noexcept { return q_; }
    /// s_k
    std::uint32_t s_max() const noexcept { return jumps_.back(); }

    /// Surface syntax: "C[1,2]" or "C2[1]".
    std::string to_spec() const;

    friend bool operator==(const CirculantFamily&, const CirculantFamily&) = default;

private:
    Valency kind_;
    std::vector<std::uint32_t> jumps_;
    std::uint64_t q_;
};

enum class EdgeConvention {
    /// Every jump s adds the edges i -- i+s and i -- i-s with multiplicity;
    /// when 2s = 0 modulo the vertex count this is a double edge and s = 0 is
    /// a self-loop (no contribution). The diameter jump of an odd family
    /// adds a single edge per antipodal pair. This is the multigraph on
    /// which the closed-form spanning-tree formulas hold for every n >= 1.
    Multigraph,
    /// The literal adjacency relation: i and j are adjacent iff j = i +- s
    /// for some jump (or j = i + n for odd families), each pair at most once,
    /// no loops. Agrees with Multigraph whenever the instance is simple().
    Simple,
};

/// One member of a family. n is the family parameter: the vertex count is n
/// for Even families and 2n for Odd ones.
class GraphInstance {
public:
    GraphInstance(CirculantFamily family, std::uint32_t n,
                  EdgeConvention convention = EdgeConvention::Multigraph);

    const CirculantFamily& family() const noexcept { return family_; }
    std::uint32_t n() const noexcept { return n_; }
    EdgeConvention convention() const noexcept { return convention_; }
    std::size_t vertex_count() const noexcept;
    /// s_k < n/2 for Even, s_k < n for Odd. Outside these bounds the two
    /// edge conventions can differ.
    bool simple() const noexcept;

private:
    CirculantFamily family_;
    std::uint32_t n_;
    EdgeConvention convention_;
};

/// Number of connected components: gcd(s_1, ..., s_k, n) (the odd diameter
/// jump n and modulus 2n do not change it).
std::uint64_t connected_components(const GraphInstance& g);

}  // namespace circtree
