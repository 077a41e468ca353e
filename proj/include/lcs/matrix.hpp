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

// Square matrices over a pluggable scalar field.
//
// Two scalar types are supported:
//   * std::complex<double> for general numerical representations;
//   * Cyclotomic, exact arithmetic in Q(w) with w = exp(2 pi i / p), used
//     for representations whose entries are rational combinations of p-th
//     roots of unity. Residuals over Cyclotomic are exactly 0 whenever the
//     identity being checked holds.

#pragma once

#include <boost/rational.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "lcs/error.hpp"
#include "lcs/zp.hpp"

namespace lcs {

using Complex = std::complex<double>;

/// w^k for the principal p-th root of unity. Values at the quarter turns are
/// exact, and w^(p-k) is the exact conjugate of w^k.
inline Complex complex_root(Elem p, std::int64_t k) {
    const auto kk = static_cast<std::int64_t>(reduce(k, p));
    if (kk == 0) return {1.0, 0.0};
    if (2 * kk == p) return {-1.0, 0.0};
    if (4 * kk == p) return {0.0, 1.0};
    if (4 * kk == 3 * static_cast<std::int64_t>(p)) return {0.0, -1.0};
    if (2 * kk > p) return std::conj(complex_root(p, p - kk));
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(kk) / static_cast<double>(p);
    return std::polar(1.0, angle);
}

/// Element of the cyclotomic field Q(w_p), stored as rational coefficients
/// on 1, w, ..., w^(p-1) with the last coefficient normalised to zero.
/// p == 0 marks a plain rational that has not met a root of unity yet.
class Cyclotomic {
   public:
    using Rational = boost::rational<std::int64_t>;

    Cyclotomic() : c_{Rational(0)} {}
    Cyclotomic(std::int64_t v) : c_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
    Cyclotomic(Rational v) : c_{v} {}                 // NOLINT(google-explicit-constructor)

    static Cyclotomic root(Elem p, std::int64_t k) {
        Cyclotomic r;
        r.p_ = p;
        r.c_.assign(p, Rational(0));
        r.c_[reduce(k, p)] = 1;
        r.normalize();
        return r;
    }

    Elem modulus() const { return p_; }

    bool is_zero() const {
        for (const auto &q : c_) {
            if (q.numerator() != 0) return false;
        }
        return true;
    }

    Complex to_complex() const {
        if (p_ == 0) return {boost::rational_cast<double>(c_[0]), 0.0};
        Complex z{0.0, 0.0};
        for (Elem k = 0; k < p_; ++k) {
            if (c_[k].numerator() != 0) z += boost::rational_cast<double>(c_[k]) * complex_root(p_, k);
        }
        return z;
    }

    Cyclotomic conj() const {
        if (p_ == 0) return *this;
        Cyclotomic r = *this;
        for (Elem k = 0; k < p_; ++k) r.c_[(p_ - k) % p_] = c_[k];
        r.normalize();
        return r;
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto &q : r.c_) q = -q;
        return r;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) {
        Cyclotomic bb = b;
        unify(a, bb);
        for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] += bb.c_[k];
        a.normalize();
        return a;
    }
    friend Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b) { return a + (-b); }

    friend Cyclotomic operator*(Cyclotomic a, Cyclotomic b) {
        if (a.p_ == 0 || b.p_ == 0) {
            const bool a_rat = a.p_ == 0;
            const Rational s = a_rat ? a.c_[0] : b.c_[0];
            Cyclotomic r = a_rat ? b : a;
            for (auto &q : r.c_) q *= s;
            return r;
        }
        unify(a, b);
        const Elem p = a.p_;
        Cyclotomic r;
        r.p_ = p;
        r.c_.assign(p, Rational(0));
        for (Elem i = 0; i < p; ++i) {
            if (a.c_[i].numerator() == 0) continue;
            for (Elem j = 0; j < p; ++j) {
                if (b.c_[j].numerator() != 0) r.c_[(i + j) % p] += a.c_[i] * b.c_[j];
            }
        }
        r.normalize();
        return r;
    }

    Cyclotomic &operator+=(const Cyclotomic &o) { return *this = *this + o; }
    Cyclotomic &operator-=(const Cyclotomic &o) { return *this = *this - o; }
    Cyclotomic &operator*=(const Cyclotomic &o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) { return (a - b).is_zero(); }

   private:
    static void promote(Cyclotomic &x, Elem p) {
        const Rational v = x.c_[0];
        x.p_ = p;
        x.c_.assign(p, Rational(0));
        x.c_[0] = v;
        x.normalize();
    }

    static void unify(Cyclotomic &a, Cyclotomic &b) {
        if (a.p_ == b.p_) return;
        if (a.p_ == 0) return promote(a, b.p_);
        if (b.p_ == 0) return promote(b, a.p_);
        throw Error(ErrorKind::DimensionMismatch, "cyclotomic values from different fields");
    }

    // 1 + w + ... + w^(p-1) = 0, so shifting all coefficients is free.
    void normalize() {
        if (p_ == 0) return;
        const Rational last = c_[p_ - 1];
        if (last.numerator() == 0) return;
        for (auto &q : c_) q -= last;
    }

    Elem p_ = 0;
    std::vector<Rational> c_;
};

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    static Complex root(Elem p, std::int64_t k) { return complex_root(p, k); }
    static Complex rational(std::int64_t num, std::int64_t den) {
        return {static_cast<double>(num) / static_cast<double>(den), 0.0};
    }
    static Complex conj(const Complex &z) { return std::conj(z); }
    static double abs2(const Complex &z) { return std::norm(z); }
    static Complex to_complex(const Complex &z) { return z; }
};

template <>
struct ScalarTraits<Cyclotomic> {
    static constexpr bool exact = true;
    static Cyclotomic root(Elem p, std::int64_t k) { return Cyclotomic::root(p, k); }
    static Cyclotomic rational(std::int64_t num, std::int64_t den) { return Cyclotomic::Rational(num, den); }
    static Cyclotomic conj(const Cyclotomic &z) { return z.conj(); }
    static double abs2(const Cyclotomic &z) { return z.is_zero() ? 0.0 : std::norm(z.to_complex()); }
    static Complex to_complex(const Cyclotomic &z) { return z.to_complex(); }
};

template <class T>
class Matrix {
   public:
    using Traits = ScalarTraits<T>;

    Matrix() = default;
    explicit Matrix(std::size_t dim) : n_(dim), a_(dim * dim, T(0)) {}

    static Matrix zero(std::size_t dim) { return Matrix(dim); }
    static Matrix identity(std::size_t dim) { return scalar(dim, T(1)); }
    static Matrix scalar(std::size_t dim, const T &v) {
        Matrix m(dim);
        for (std::size_t k = 0; k < dim; ++k) m(k, k) = v;
        return m;
    }

    std::size_t dim() const { return n_; }
    T &operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    Matrix adjoint() const {
        Matrix m(n_);
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t c = 0; c < n_; ++c) m(c, r) = Traits::conj((*this)(r, c));
        }
        return m;
    }

    /// Every entry exactly zero (not within tolerance).
    bool is_exact_zero() const {
        for (const auto &v : a_) {
            if (!(v == T(0))) return false;
        }
        return true;
    }

    Matrix &operator+=(const Matrix &o) {
        check(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix &operator-=(const Matrix &o) {
        check(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix &operator*=(const T &s) {
        for (auto &v : a_) v *= s;
        return *this;
    }

    /// Exact entrywise equality; use distance() for numerical comparison.
    friend bool operator==(const Matrix &a, const Matrix &b) { return a.n_ == b.n_ && a.a_ == b.a_; }

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(const T &s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        a.check(b);
        const std::size_t n = a.n_;
        Matrix r(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const T &aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
            }
        }
        return r;
    }

    /// Signed power; negative exponents use the adjoint, which is the inverse
    /// for the unitary images this library works with.
    Matrix pow(std::int64_t e) const {
        const Matrix base = e < 0 ? adjoint() : *this;
        Matrix r = identity(n_);
        for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) r = r * base;
        return r;
    }

   private:
    void check(const Matrix &o) const {
        if (o.n_ != n_) {
            throw Error(ErrorKind::DimensionMismatch,
                        "matrix dimensions " + std::to_string(n_) + " and " + std::to_string(o.n_) + " differ");
        }
    }

    std::size_t n_ = 0;
    std::vector<T> a_;
};

using ComplexMatrix = Matrix<Complex>;
using ExactMatrix = Matrix<Cyclotomic>;

template <class T>
double frobenius(const Matrix<T> &m) {
    double s = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) s += ScalarTraits<T>::abs2(m(r, c));
    }
    return std::sqrt(s);
}

/// ||a - b||_F
template <class T>
double distance(const Matrix<T> &a, const Matrix<T> &b) {
    return frobenius(a - b);
}

template <class T>
double commutator_norm(const Matrix<T> &a, const Matrix<T> &b) {
    return distance(a * b, b * a);
}

template <class T>
ComplexMatrix to_complex(const Matrix<T> &m) {
    ComplexMatrix out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = ScalarTraits<T>::to_complex(m(r, c));
    }
    return out;
}

/// Kronecker product, used to assemble two-qubit operators.
template <class T>
Matrix<T> kron(const Matrix<T> &a, const Matrix<T> &b) {
    Matrix<T> r(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < b.dim(); ++k) {
                for (std::size_t l = 0; l < b.dim(); ++l) r(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
            }
        }
    }
    return r;
}

}  // namespace lcs
