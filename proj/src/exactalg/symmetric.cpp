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

#include "circtree/exactalg/symmetric.hpp"

#include <stdexcept>
#include <string>

#include "circtree/errors.hpp"
#include "circtree/exactalg/matrix.hpp"

namespace circtree {

std::vector<Integer> power_sums(const IntPoly& monic, std::size_t count) {
    if (!monic.is_monic()) throw std::invalid_argument("power_sums: polynomial must be monic");
    const std::size_t d = monic.degree();
    // e_i = (-1)^i a_{d-i}
    std::vector<Integer> e(d + 1);
    for (std::size_t i = 0; i <= d; ++i) e[i] = (i % 2 == 0) ? monic[d - i] : Integer(-monic[d - i]);
    std::vector<Integer> p(count + 1);
    for (std::size_t m = 1; m <= count; ++m) {
        Integer acc = 0;
        const std::size_t top = std::min(m - 1, d);
        for (std::size_t i = 1; i <= top; ++i) {
            if (i % 2 == 1) {
                mpz_addmul(acc.get_mpz_t(), e[i].get_mpz_t(), p[m - i].get_mpz_t());
            } else {
                mpz_submul(acc.get_mpz_t(), e[i].get_mpz_t(), p[m - i].get_mpz_t());
            }
        }
        if (m <= d) {
            const Integer term = e[m] * static_cast<unsigned long>(m);
            if (m % 2 == 1) acc += term; else acc -= term;
        }
        p[m] = std::move(acc);
    }
    p.erase(p.begin());
    return p;
}

namespace {

// Elementary symmetric functions e_0..e_k from power sums p_1..p_k.
std::vector<Integer> elementary_from_power_sums(std::span<const Integer> p, std::size_t k) {
    std::vector<Integer> e(k + 1);
    e[0] = 1;
    for (std::size_t m = 1; m <= k; ++m) {
        Integer acc = 0;
        for (std::size_t i = 1; i <= m; ++i) {
            if (i % 2 == 1) {
                mpz_addmul(acc.get_mpz_t(), e[m - i].get_mpz_t(), p[i - 1].get_mpz_t());
            } else {
                mpz_submul(acc.get_mpz_t(), e[m - i].get_mpz_t(), p[i - 1].get_mpz_t());
            }
        }
        const Integer mm = static_cast<unsigned long>(m);
        if (!divisible(acc, mm)) {
            throw NotIntegral("power sums do not define an integer polynomial (step " +
                              std::to_string(m) + ")");
        }
        e[m] = divexact(acc, mm);
    }
    return e;
}

void check_cap(std::size_t d, std::size_t k, const SubsetProductOptions& opts) {
    const Integer dim = binomial(d, k);
    if (!opts.override_cap && dim > Integer(static_cast<unsigned long>(opts.max_dim))) {
        throw LimitExceeded("subset-product dimension C(" + std::to_string(d) + "," +
                            std::to_string(k) + ") = " + to_decimal(dim) + " exceeds cap " +
                            std::to_string(opts.max_dim));
    }
}

IntPoly subset_product_power_sums(const IntPoly& r, std::size_t k) {
    const std::size_t d = r.degree();
    const std::size_t dim = binomial(d, k).get_ui();
    const std::vector<Integer> p = power_sums(r, k * dim);
    // P_m = e_k(xi_1^m, ..., xi_d^m), whose power sums are p_{j m}
    std::vector<Integer> sums(dim);
    std::vector<Integer> pm(k);
    for (std::size_t m = 1; m <= dim; ++m) {
        for (std::size_t j = 1; j <= k; ++j) pm[j - 1] = p[j * m - 1];
        sums[m - 1] = elementary_from_power_sums(pm, k)[k];
    }
    return from_power_sums(sums);
}

// Strictly increasing k-subsets of {0..d-1} in lexicographic order.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t d, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == d - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

IntPoly subset_product_exterior(const IntPoly& r, std::size_t k) {
    const std::size_t d = r.degree();
    if (k == 0) return IntPoly{-1, 1};
    const auto c = companion_matrix(r);
    const auto subsets = k_subsets(d, k);
    IntMatrix ext(subsets.size());
    IntMatrix block(k);
    for (std::size_t a = 0; a < subsets.size(); ++a) {
        for (std::size_t b = 0; b < subsets.size(); ++b) {
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) block(i, j) = c[subsets[a][i]][subsets[b][j]];
            }
            ext(a, b) = bareiss_determinant(block);
        }
    }
    return charpoly_berkowitz(ext);
}

}  // namespace

IntPoly from_power_sums(std::span<const Integer> sums) {
    const std::size_t n = sums.size();
    const std::vector<Integer> e = elementary_from_power_sums(sums, n);
    std::vector<Integer> coeffs(n + 1);
    for (std::size_t m = 0; m <= n; ++m) coeffs[n - m] = (m % 2 == 0) ? e[m] : Integer(-e[m]);
    return IntPoly(std::move(coeffs));
}

std::vector<std::vector<Integer>> companion_matrix(const IntPoly& monic) {
    if (!monic.is_monic()) throw std::invalid_argument("companion_matrix: polynomial must be monic");
    const std::size_t d = monic.degree();
    std::vector<std::vector<Integer>> m(d, std::vector<Integer>(d));
    for (std::size_t i = 1; i < d; ++i) m[i][i - 1] = 1;
    for (std::size_t i = 0; i < d; ++i) m[i][d - 1] = -monic[i];
    return m;
}

IntPoly subset_product_poly(const IntPoly& r, std::size_t k, const SubsetProductOptions& opts) {
    if (!r.is_monic()) throw std::invalid_argument("subset_product_poly: r must be monic");
    const std::size_t d = r.degree();
    if (k > d) {
        throw std::out_of_range("subset_product_poly: k = " + std::to_string(k) +
                                " exceeds deg r = " + std::to_string(d));
    }
    check_cap(d, k, opts);
    if (k == 0) return IntPoly{-1, 1};
    if (k == 1) return r;
    return opts.route == SubsetProductRoute::PowerSums ? subset_product_power_sums(r, k)
                                                       : subset_product_exterior(r, k);
}

IntPoly composed_product(const IntPoly& a, const IntPoly& b) {
    if (!a.is_monic() || !b.is_monic()) {
        throw std::invalid_argument("composed_product: arguments must be monic");
    }
    const std::size_t dim = a.degree() * b.degree();
    if (dim == 0) return IntPoly{1};
    const std::vector<Integer> pa = power_sums(a, dim);
    const std::vector<Integer> pb = power_sums(b, dim);
    std::vector<Integer> sums(dim);
    for (std::size_t m = 0; m < dim; ++m) sums[m] = pa[m] * pb[m];
    return from_power_sums(sums);
}

}  // namespace circtree
