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
#include <vector>

#include "circtree/exactalg/int_poly.hpp"

namespace circtree {

/// Dense square integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}
    explicit IntMatrix(const std::vector<std::vector<Integer>>& rows);

    std::size_t size() const noexcept { return n_; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    /// Copy with row and column `index` removed.
    IntMatrix minor(std::size_t index) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Integer> data_;
};

/// Exact determinant by fraction-free Bareiss elimination with row pivoting.
/// The 0x0 determinant is 1.
Integer bareiss_determinant(IntMatrix m);

/// det(zI - m) by the division-free Berkowitz algorithm; monic.
IntPoly charpoly_berkowitz(const IntMatrix& m);

}  // namespace circtree
