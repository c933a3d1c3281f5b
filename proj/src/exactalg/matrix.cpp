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

#include "circtree/exactalg/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace circtree {

IntMatrix::IntMatrix(const std::vector<std::vector<Integer>>& rows) : IntMatrix(rows.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) throw std::invalid_argument("IntMatrix: rows must be square");
        for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = rows[i][j];
    }
}

IntMatrix IntMatrix::minor(std::size_t index) const {
    if (index >= n_) throw std::out_of_range("IntMatrix::minor: index out of range");
    IntMatrix out(n_ - 1);
    for (std::size_t i = 0, oi = 0; i < n_; ++i) {
        if (i == index) continue;
        for (std::size_t j = 0, oj = 0; j < n_; ++j) {
            if (j == index) continue;
            out(oi, oj++) = (*this)(i, j);
        }
        ++oi;
    }
    return out;
}

Integer bareiss_determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    Integer t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        const Integer& pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Integer lead = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                // m(i,j) = (m(i,j) * pivot - lead * m(k,j)) / prev
                mpz_mul(t.get_mpz_t(), m(i, j).get_mpz_t(), pivot.get_mpz_t());
                mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), m(k, j).get_mpz_t());
                if (prev != 1) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
            m(i, k) = 0;
        }
        prev = pivot;
    }
    return sign * m(n - 1, n - 1);
}

IntPoly charpoly_berkowitz(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return IntPoly{1};
    // c holds det(zI - A_r) highest degree first for the leading r x r block
    std::vector<Integer> c{1, -m(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a, -R S, -R A S, ..., -R A^(r-1) S
        std::vector<Integer> toeplitz(r + 2);
        toeplitz[0] = 1;
        toeplitz[1] = -m(r, r);
        std::vector<Integer> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
        for (std::size_t p = 0; p < r; ++p) {
            Integer dot = 0;
            for (std::size_t j = 0; j < r; ++j) dot += m(r, j) * v[j];
            toeplitz[p + 2] = -dot;
            std::vector<Integer> nv(r);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < r; ++j) nv[i] += m(i, j) * v[j];
            }
            v = std::move(nv);
        }
        std::vector<Integer> next(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i) {
            for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += toeplitz[i - j] * c[j];
        }
        c = std::move(next);
    }
    return IntPoly(std::vector<Integer>(c.rbegin(), c.rend()));
}

}  // namespace circtree
