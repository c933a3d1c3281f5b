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
#include <span>
#include <vector>

#include "circtree/exactalg/int_poly.hpp"

namespace circtree {

/// Default cap on the degree C(deg r, k) of a subset-product polynomial.
inline constexpr std::size_t kDefaultMaxSubsetDim = 10000;

enum class SubsetProductRoute {
    /// Newton identities on power sums of the roots (default; O(D^2) big-int ops).
    PowerSums,
    /// Characteristic polynomial of the k-th exterior power of the companion
    /// matrix (division-free Berkowitz; O(D^4), for cross-checks).
    ExteriorPower,
};

struct SubsetProductOptions {
    std::size_t max_dim = kDefaultMaxSubsetDim;
    bool override_cap = false;
    SubsetProductRoute route = SubsetProductRoute::PowerSums;
};

/// Power sums p_1..p_count of the roots of a monic polynomial.
std::vector<Integer> power_sums(const IntPoly& monic, std::size_t count);

/// Monic polynomial of degree power_sums.size() whose roots have the given
/// power sums p_1, p_2, ... Throws NotIntegral if the sums do not come from a
/// monic integer polynomial.
IntPoly from_power_sums(std::span<const Integer> sums);

/**
 * Monic polynomial whose roots are all products xi_{j1} ... xi_{jk} over
 * k-subsets of the roots of r, with multiplicity; degree C(deg r, k).
 * k = 0 gives z - 1. Requires r monic and 0 <= k <= deg r.
 */
IntPoly subset_product_poly(const IntPoly& r, std::size_t k, const SubsetProductOptions& opts = {});

/**
 * Monic polynomial of degree deg(a) * deg(b) whose roots are the pairwise
 * products of the roots of a and b. Both must be monic.
 */
IntPoly composed_product(const IntPoly& a, const IntPoly& b);

/// Companion matrix of a monic polynomial (row-major, last column holds -a_i).
std::vector<std::vector<Integer>> companion_matrix(const IntPoly& monic);

}  // namespace circtree
