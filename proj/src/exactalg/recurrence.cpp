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

#include "circtree/exactalg/recurrence.hpp"

#include <cstdint>
#include <vector>

namespace circtree {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce(const Integer& v, u64 p) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), Integer(p).get_mpz_t());
    return static_cast<u64>(mpz_get_ui(r.get_mpz_t()));
}

struct ModularRecurrence {
    std::vector<u64> c;
    std::size_t length;
};

ModularRecurrence berlekamp_massey(const std::vector<u64>& s, u64 p) {
    std::vector<u64> c{1}, b{1};
    std::size_t length = 0, gap = 1;
    u64 bd = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        u64 d = s[n];
        for (std::size_t i = 1; i <= length && i < c.size(); ++i) {
            d = (d + mulmod(c[i], s[n - i], p)) % p;
        }
        if (d == 0) {
            ++gap;
            continue;
        }
        const u64 coef = mulmod(d, invmod(bd, p), p);
        std::vector<u64> t = c;
        if (c.size() < b.size() + gap) c.resize(b.size() + gap, 0);
        for (std::size_t i = 0; i < b.size(); ++i) {
            c[i + gap] = (c[i + gap] + p - mulmod(coef, b[i], p)) % p;
        }
        if (2 * length <= n) {
            length = n + 1 - length;
            b = std::move(t);
            bd = d;
            gap = 1;
        } else {
            ++gap;
        }
    }
    c.resize(length + 1, 0);
    return {std::move(c), length};
}

bool verify(std::span<const Integer> seq, const std::vector<Integer>& c, std::size_t length) {
    Integer acc;
    for (std::size_t m = length; m < seq.size(); ++m) {
        acc = 0;
        for (std::size_t j = 0; j <= length; ++j) {
            mpz_addmul(acc.get_mpz_t(), c[j].get_mpz_t(), seq[m - j].get_mpz_t());
        }
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace

std::optional<LinearRecurrence> find_integer_recurrence(std::span<const Integer> seq,
                                                        std::size_t max_order) {
    if (seq.empty()) return std::nullopt;
    constexpr int kMaxPrimes = 4096;

    Integer prime = Integer(1) << 62;
    std::vector<Integer> residues;  // CRT image, in [0, modulus)
    Integer modulus = 1;
    std::size_t length = 0;
    std::vector<Integer> previous;
    std::vector<u64> reduced(seq.size());

    for (int iter = 0; iter < kMaxPrimes; ++iter) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        const u64 p = prime.get_ui();
        for (std::size_t i = 0; i < seq.size(); ++i) reduced[i] = reduce(seq[i], p);
        const ModularRecurrence rec = berlekamp_massey(reduced, p);
        if (rec.length > max_order || 2 * rec.length > seq.size()) return std::nullopt;
        if (residues.empty() || rec.length > length) {
            // first prime, or every earlier prime was unlucky
            length = rec.length;
            residues.assign(rec.c.begin(), rec.c.end());
            for (std::size_t i = 0; i < rec.c.size(); ++i) residues[i] = Integer(rec.c[i]);
            modulus = prime;
            previous.clear();
            continue;
        }
        if (rec.length < length) continue;

        const u64 minv = invmod(reduce(modulus, p), p);
        for (std::size_t i = 0; i <= length; ++i) {
            const u64 cur = reduce(residues[i], p);
            const u64 t = mulmod((rec.c[i] + p - cur) % p, minv, p);
            mpz_addmul_ui(residues[i].get_mpz_t(), modulus.get_mpz_t(), t);
        }
        modulus *= prime;

        std::vector<Integer> symmetric(residues);
        const Integer half = modulus / 2;
        for (auto& v : symmetric) {
            if (v > half) v -= modulus;
        }
        if (symmetric == previous && verify(seq, symmetric, length)) {
            return LinearRecurrence{IntPoly(std::move(symmetric)), length};
        }
        previous = std::move(symmetric);
    }
    return std::nullopt;
}

}  // namespace circtree
