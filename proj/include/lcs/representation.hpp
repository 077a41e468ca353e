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

#pragma once

#include <string>
#include <vector>

#include "lcs/lcs_system.hpp"
#include "lcs/matrix.hpp"

namespace lcs {

inline constexpr const char *kOmegaConvention = "exp(2*pi*i/p)";

/// Matrices assigned to the generators g_1..g_n and J of the solution group.
/// When j_identified is set, J is meant to act as w * I, i.e. the
/// representation factors through the quotient by <J - w>.
template <class T>
struct Representation {
    Elem p = 2;
    std::vector<Matrix<T>> g;  // g[j-1] is the image of g_j
    Matrix<T> J;
    bool j_identified = false;
    std::vector<std::string> warnings;

    std::size_t dim() const { return J.dim(); }
    std::size_t num_vars() const { return g.size(); }
    T omega() const { return ScalarTraits<T>::root(p, 1); }

    const Matrix<T> &image(std::size_t j) const { return g.at(j - 1); }

    void check_shapes() const {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (g[j].dim() != J.dim()) {
                throw Error(ErrorKind::DimensionMismatch, "image of g" + std::to_string(j + 1) + " has dimension " +
                                                              std::to_string(g[j].dim()) + ", J has " +
                                                              std::to_string(J.dim()));
            }
        }
    }
};

using ComplexRepresentation = Representation<Complex>;
using ExactRepresentation = Representation<Cyclotomic>;

template <class T>
double unitarity_residual(const Matrix<T> &u) {
    return distance(u.adjoint() * u, Matrix<T>::identity(u.dim()));
}

template <class T>
double j_identification_residual(const Representation<T> &rep) {
    return distance(rep.J, Matrix<T>::scalar(rep.dim(), rep.omega()));
}

/// One-dimensional representation g_j -> w^(x*_j), J -> w.
template <class T = Cyclotomic>
Representation<T> scalar_rep_from_solution(const LinearSystem &sys, const ZpVector &xstar) {
    if (!is_solution(sys, xstar)) {
        throw Error(ErrorKind::NotASolution, xstar.str() + " does not solve Ax = b");
    }
    Representation<T> rep;
    rep.p = sys.p();
    for (std::size_t j = 0; j < sys.cols(); ++j) {
        rep.g.push_back(Matrix<T>::scalar(1, ScalarTraits<T>::root(sys.p(), xstar[j])));
    }
    rep.J = Matrix<T>::scalar(1, ScalarTraits<T>::root(sys.p(), 1));
    rep.j_identified = true;
    return rep;
}

namespace pauli {

inline ComplexMatrix I() { return ComplexMatrix::identity(2); }
inline ComplexMatrix X() {
    ComplexMatrix m(2);
    m(0, 1) = m(1, 0) = 1.0;
    return m;
}
inline ComplexMatrix Y() {
    ComplexMatrix m(2);
    m(0, 1) = Complex(0.0, -1.0);
    m(1, 0) = Complex(0.0, 1.0);
    return m;
}
inline ComplexMatrix Z() {
    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

}  // namespace pauli

/// Two-qubit operator solution of the built-in magic square:
///
///     X(x)I   I(x)X   X(x)X
///     I(x)Z   Z(x)I   Z(x)Z
///     X(x)Z   Z(x)X   Y(x)Y
///
/// Every row and the first two columns multiply to +I; the third column
/// multiplies to -I = J.
inline ComplexRepresentation pauli_magic_square_rep() {
    using namespace pauli;
    ComplexRepresentation rep;
    rep.p = 2;
    rep.g = {kron(X(), I()), kron(I(), X()), kron(X(), X()), kron(I(), Z()), kron(Z(), I()),
             kron(Z(), Z()), kron(X(), Z()), kron(Z(), X()), kron(Y(), Y())};
    rep.J = ComplexMatrix::scalar(4, -1.0);
    rep.j_identified = true;
    return rep;
}

/// U * image * U^dagger applied to every generator.
template <class T>
Representation<T> conjugate(const Representation<T> &rep, const Matrix<T> &u) {
    Representation<T> out = rep;
    const auto ud = u.adjoint();
    for (auto &m : out.g) m = u * m * ud;
    out.J = u * rep.J * ud;
    return out;
}

}  // namespace lcs
