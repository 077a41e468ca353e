// Copyright 2026 The lcsgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared test helpers. The oracles here deliberately avoid the library's
// algorithms: they work on plain integer vectors and enumerate everything.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "lcs/lcs.hpp"

namespace lcs::testing {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;

// Every vector of Z_p^n in lexicographic order (last coordinate fastest).
inline std::vector<IntVec> all_vectors(std::int64_t p, std::size_t n) {
    std::vector<IntVec> out;
    IntVec v(n, 0);
    while (true) {
        out.push_back(v);
        std::size_t k = n;
        while (k > 0) {
            if (++v[k - 1] < p) break;
            v[k - 1] = 0;
            --k;
        }
        if (k == 0) break;
    }
    return out;
}

inline std::int64_t dot_mod(const IntVec &a, const IntVec &x, std::int64_t p) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s = (s + a[k] * x[k]) % p;
    return s;
}

inline bool brute_solvable(const IntMat &a, const IntVec &b, std::int64_t p) {
    const std::size_t n = a.empty() ? 0 : a[0].size();
    for (const auto &x : all_vectors(p, n)) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) ok = dot_mod(a[i], x, p) == ((b[i] % p) + p) % p;
        if (ok) return true;
    }
    return false;
}

// Vectors supported on the nonzero positions of row `a` that satisfy a.x = b.
inline std::vector<IntVec> brute_row_solutions(const IntVec &a, std::int64_t b, std::int64_t p) {
    std::vector<std::size_t> supp;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] % p != 0) supp.push_back(k);
    }
    std::vector<IntVec> out;
    for (const auto &local : all_vectors(p, supp.size())) {
        IntVec x(a.size(), 0);
        for (std::size_t t = 0; t < supp.size(); ++t) x[supp[t]] = local[t];
        if (dot_mod(a, x, p) == ((b % p) + p) % p) out.push_back(x);
    }
    return out;
}

// Best deterministic syncLCS value by trying every tuple of per-row answers.
// Answers outside S_i lose every pair involving row i, so they only matter
// for rows with S_i empty; those rows get a single losing answer.
inline std::pair<std::uint64_t, std::uint64_t> brute_best_value(const IntMat &a, const IntVec &b, std::int64_t p) {
    const std::size_t m = a.size();
    std::vector<std::vector<IntVec>> s(m);
    for (std::size_t i = 0; i < m; ++i) s[i] = brute_row_solutions(a[i], b[i], p);
    auto agree = [&](std::size_t i, const IntVec &x, std::size_t j, const IntVec &y) {
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (a[i][k] % p != 0 && a[j][k] % p != 0 && x[k] != y[k]) return false;
        }
        return true;
    };
    std::uint64_t best = 0;
    std::vector<std::size_t> pick(m, 0);
    while (true) {
        std::uint64_t wins = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (s[i].empty() || s[j].empty()) continue;
                wins += agree(i, s[i][pick[i]], j, s[j][pick[j]]) ? 1 : 0;
            }
        }
        best = std::max(best, wins);
        std::size_t k = m;
        while (k > 0) {
            if (++pick[k - 1] < std::max<std::size_t>(s[k - 1].size(), 1)) break;
            pick[k - 1] = 0;
            --k;
        }
        if (k == 0) break;
    }
    return {best, m * m};
}

struct RandomSystem {
    std::int64_t p;
    IntMat a;
    IntVec b;

    LinearSystem system() const { return LinearSystem(static_cast<Elem>(p), a, b); }
};

inline RandomSystem random_system(std::mt19937_64 &rng, std::int64_t p, std::size_t m, std::size_t n) {
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    RandomSystem r{p, IntMat(m, IntVec(n)), IntVec(m)};
    for (auto &row : r.a) {
        for (auto &v : row) v = d(rng);
    }
    for (auto &v : r.b) v = d(rng);
    return r;
}

// Haar-ish unitary: Gram-Schmidt on a matrix of complex Gaussians.
inline ComplexMatrix random_unitary(std::mt19937_64 &rng, std::size_t n) {
    std::normal_distribution<double> d;
    std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
    for (auto &c : cols) {
        for (auto &z : c) z = {d(rng), d(rng)};
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t q = 0; q < k; ++q) {
            Complex ip{0, 0};
            for (std::size_t r = 0; r < n; ++r) ip += std::conj(cols[q][r]) * cols[k][r];
            for (std::size_t r = 0; r < n; ++r) cols[k][r] -= ip * cols[q][r];
        }
        double nrm = 0;
        for (const auto &z : cols[k]) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        for (auto &z : cols[k]) z /= nrm;
    }
    ComplexMatrix u(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) u(r, c) = cols[c][r];
    }
    return u;
}

}  // namespace lcs::testing
