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

// Exact arithmetic and linear algebra over the prime field Z_p.
//
// Storage inside vectors and matrices is 0-based (operator[]), but every index
// *set* handed to callers (supports, row numbers, variable numbers) is 1-based.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lcs/error.hpp"

namespace lcs {

using Elem = std::uint32_t;
using IndexSet = std::vector<std::size_t>;  // sorted, 1-based

/// Resource caps shared by every enumerating or searching routine.
struct Limits {
    std::uint64_t enumeration_cap = std::uint64_t{1} << 20;
    std::uint64_t search_budget = 50'000'000;

    /// Defaults overridden by LCS_ENUM_CAP / LCS_SEARCH_BUDGET when set.
    static Limits from_env() {
        Limits lim;
        if (const char *s = std::getenv("LCS_ENUM_CAP"); s && *s) {
            lim.enumeration_cap = std::strtoull(s, nullptr, 10);
        }
        if (const char *s = std::getenv("LCS_SEARCH_BUDGET"); s && *s) {
            lim.search_budget = std::strtoull(s, nullptr, 10);
        }
        return lim;
    }
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline void require_prime(std::uint64_t p) {
    if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
        throw Error(ErrorKind::NotPrime, "modulus " + std::to_string(p) + " is not a supported prime");
    }
}

inline Elem reduce(std::int64_t v, Elem p) {
    auto r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<Elem>(r);
}

inline Elem add_mod(Elem a, Elem b, Elem p) { return static_cast<Elem>((std::uint64_t{a} + b) % p); }
inline Elem sub_mod(Elem a, Elem b, Elem p) { return static_cast<Elem>((std::uint64_t{a} + p - b) % p); }
inline Elem mul_mod(Elem a, Elem b, Elem p) { return static_cast<Elem>((std::uint64_t{a} * b) % p); }
inline Elem neg_mod(Elem a, Elem p) { return a == 0 ? 0 : p - a; }

inline Elem pow_mod(Elem a, std::uint64_t e, Elem p) {
    std::uint64_t r = 1 % p, base = a % p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<Elem>(r);
}

/// Inverse of a nonzero element (Fermat).
inline Elem inv_mod(Elem a, Elem p) { return pow_mod(a, p - 2, p); }

/// Saturating p^k, used to compare against enumeration caps.
inline std::uint64_t checked_pow(std::uint64_t p, std::size_t k, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > cap / p) return cap + 1;
        r *= p;
    }
    return r;
}

struct FieldElem {
    Elem value = 0;
    Elem p = 2;

    FieldElem() = default;
    FieldElem(std::int64_t v, Elem modulus) : value(reduce(v, modulus)), p(modulus) { require_prime(modulus); }

    friend bool operator==(const FieldElem &, const FieldElem &) = default;
};

class ZpVector {
   public:
    ZpVector() = default;
    ZpVector(Elem p, std::size_t n) : p_(p), e_(n, 0) {}
    ZpVector(Elem p, std::initializer_list<std::int64_t> vals) : p_(p) {
        e_.reserve(vals.size());
        for (auto v : vals) e_.push_back(reduce(v, p));
    }
    ZpVector(Elem p, const std::vector<std::int64_t> &vals) : p_(p) {
        e_.reserve(vals.size());
        for (auto v : vals) e_.push_back(reduce(v, p));
    }
    ZpVector(Elem p, std::vector<Elem> reduced) : p_(p), e_(std::move(reduced)) {
        for (auto &v : e_) v %= p;
    }

    Elem modulus() const { return p_; }
    std::size_t size() const { return e_.size(); }
    Elem operator[](std::size_t k) const { return e_[k]; }
    Elem &operator[](std::size_t k) { return e_[k]; }
    const std::vector<Elem> &values() const { return e_; }
    FieldElem at(std::size_t k) const { return FieldElem(e_.at(k), p_); }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](Elem v) { return v == 0; });
    }

    friend bool operator==(const ZpVector &, const ZpVector &) = default;
    friend auto operator<=>(const ZpVector &a, const ZpVector &b) { return a.e_ <=> b.e_; }

    friend ZpVector operator+(const ZpVector &a, const ZpVector &b) {
        check_same(a, b);
        ZpVector r(a.p_, a.size());
        for (std::size_t k = 0; k < a.size(); ++k) r.e_[k] = add_mod(a.e_[k], b.e_[k], a.p_);
        return r;
    }
    friend ZpVector operator-(const ZpVector &a, const ZpVector &b) {
        check_same(a, b);
        ZpVector r(a.p_, a.size());
        for (std::size_t k = 0; k < a.size(); ++k) r.e_[k] = sub_mod(a.e_[k], b.e_[k], a.p_);
        return r;
    }
    friend ZpVector operator*(Elem c, const ZpVector &a) {
        ZpVector r(a.p_, a.size());
        for (std::size_t k = 0; k < a.size(); ++k) r.e_[k] = mul_mod(c % a.p_, a.e_[k], a.p_);
        return r;
    }

    friend std::ostream &operator<<(std::ostream &os, const ZpVector &v) {
        os << '(';
        for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v.e_[k];
        return os << ')';
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t k = 0; k < e_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(e_[k]);
        }
        return s + ')';
    }

   private:
    static void check_same(const ZpVector &a, const ZpVector &b) {
        if (a.p_ != b.p_ || a.size() != b.size()) {
            throw Error(ErrorKind::DimensionMismatch, "vector shapes or moduli differ");
        }
    }

    Elem p_ = 2;
    std::vector<Elem> e_;
};

class ZpMatrix {
   public:
    ZpMatrix() = default;
    ZpMatrix(Elem p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), e_(rows * cols, 0) {}
    ZpMatrix(Elem p, std::initializer_list<std::initializer_list<std::int64_t>> rows) : p_(p), rows_(rows.size()) {
        cols_ = rows.size() ? rows.begin()->size() : 0;
        for (const auto &r : rows) {
            if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
            for (auto v : r) e_.push_back(reduce(v, p));
        }
    }
    ZpMatrix(Elem p, const std::vector<std::vector<std::int64_t>> &rows) : p_(p), rows_(rows.size()) {
        cols_ = rows.empty() ? 0 : rows.front().size();
        for (const auto &r : rows) {
            if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
            for (auto v : r) e_.push_back(reduce(v, p));
        }
    }

    Elem modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Elem &operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    ZpVector row(std::size_t r) const {
        return ZpVector(p_, std::vector<Elem>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_));
    }

    ZpVector operator*(const ZpVector &x) const {
        if (x.size() != cols_ || x.modulus() != p_) {
            throw Error(ErrorKind::DimensionMismatch, "matrix-vector shapes or moduli differ");
        }
        ZpVector y(p_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < cols_; ++c) acc = (acc + std::uint64_t{(*this)(r, c)} * x[c]) % p_;
            y[r] = static_cast<Elem>(acc);
        }
        return y;
    }

    friend bool operator==(const ZpMatrix &, const ZpMatrix &) = default;

   private:
    Elem p_ = 2;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> e_;
};

/// x0 + span(basis); every member solves the system it came from.
struct AffineSolutionSet {
    ZpVector particular;
    std::vector<ZpVector> basis;
    std::size_t ambient_dim = 0;

    Elem modulus() const { return particular.modulus(); }
};

inline IndexSet support(const ZpVector &v) {
    IndexSet s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] != 0) s.push_back(k + 1);
    }
    return s;
}

namespace detail {

struct Echelon {
    ZpMatrix rref;                   // augmented [A | b] when solving
    std::vector<std::size_t> pivots;  // 0-based pivot column of each leading row
};

// Reduced row echelon form; pivots chosen left-to-right, first nonzero entry.
inline Echelon rref(ZpMatrix m, std::size_t pivot_cols) {
    const Elem p = m.modulus();
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(r, k));
        }
        const Elem inv = inv_mod(m(r, c), p);
        for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = mul_mod(m(r, k), inv, p);
        for (std::size_t rr = 0; rr < m.rows(); ++rr) {
            if (rr == r || m(rr, c) == 0) continue;
            const Elem f = m(rr, c);
            for (std::size_t k = 0; k < m.cols(); ++k) {
                m(rr, k) = sub_mod(m(rr, k), mul_mod(f, m(r, k), p), p);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rref = std::move(m);
    return out;
}

}  // namespace detail

inline std::size_t rank(const ZpMatrix &a) { return detail::rref(a, a.cols()).pivots.size(); }

/// Solves Ax = b. Returns nullopt when the system is inconsistent.
inline std::optional<AffineSolutionSet> gauss_solve(const ZpMatrix &a, const ZpVector &b) {
    if (b.size() != a.rows() || b.modulus() != a.modulus()) {
        throw Error(ErrorKind::DimensionMismatch, "b must have one entry per row of A and share its modulus");
    }
    const Elem p = a.modulus();
    const std::size_t m = a.rows(), n = a.cols();
    ZpMatrix aug(p, m, n + 1);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    auto ech = detail::rref(std::move(aug), n);
    const auto &R = ech.rref;
    for (std::size_t r = ech.pivots.size(); r < m; ++r) {
        if (R(r, n) != 0) return std::nullopt;
    }

    AffineSolutionSet sol{ZpVector(p, n), {}, n};
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        is_pivot[ech.pivots[r]] = true;
        sol.particular[ech.pivots[r]] = R(r, n);
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        ZpVector v(p, n);
        v[f] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = neg_mod(R(r, f), p);
        sol.basis.push_back(std::move(v));
    }
    return sol;
}

/// All p^|basis| members, ordered lexicographically by coefficient tuple
/// (first basis vector most significant).
inline std::vector<ZpVector> enumerate_affine(const AffineSolutionSet &s, const Limits &lim = {}) {
    const Elem p = s.modulus();
    const std::size_t k = s.basis.size();
    const auto count = checked_pow(p, k, lim.enumeration_cap);
    if (count > lim.enumeration_cap) {
        throw Error(ErrorKind::EnumerationTooLarge, std::to_string(p) + "^" + std::to_string(k) +
                                                        " members exceed cap " + std::to_string(lim.enumeration_cap));
    }
    std::vector<ZpVector> out;
    out.reserve(count);
    std::vector<Elem> coef(k, 0);
    for (std::uint64_t it = 0; it < count; ++it) {
        ZpVector v = s.particular;
        for (std::size_t q = 0; q < k; ++q) {
            if (coef[q] != 0) v = v + coef[q] * s.basis[q];
        }
        out.push_back(std::move(v));
        for (std::size_t q = k; q-- > 0;) {
            if (++coef[q] < p) break;
            coef[q] = 0;
        }
    }
    return out;
}

}  // namespace lcs
