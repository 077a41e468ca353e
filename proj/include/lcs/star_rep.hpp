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

// Finite-dimensional *-representations linking three algebras:
//
//   * the quotient of the solution-group algebra by <J - w>, given as a
//     Representation (matrices for g_1..g_n, J);
//   * the syncLCS game algebra, given as a ProjectionFamily of matrices
//     E_{i,x} standing for the generators a_{i,x};
//   * the Iso(G_{A,b}, G_{A,0}) game algebra, given as an IsoFamily of
//     matrices E_{(i,x),(j,y)}.
//
// psi sends a_{i,x} to the product over j in V_i of the spectral projection
// f_j(x_j) of g_j; phi sends g_j to sum_{x in S_i} w^{x_j} a_{i,x}. On the
// Iso side, e_{(i,x),(j,y)} goes to delta_ij a_{i,x+y}. Every identity that
// makes these maps mutually inverse *-homomorphisms is checked numerically
// and reported as a Frobenius residual.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lcs/checks.hpp"
#include "lcs/game_graphs.hpp"
#include "lcs/lcs_system.hpp"
#include "lcs/representation.hpp"
#include "lcs/solution_group.hpp"

namespace lcs {

/// (1/p) sum_{t<p} (w^{-s} g)^t, the projection onto the w^s-eigenspace of g.
template <class T>
Matrix<T> spectral_projection(const Matrix<T> &g, Elem p, std::int64_t s) {
    const Matrix<T> base = ScalarTraits<T>::root(p, -s) * g;
    Matrix<T> term = Matrix<T>::identity(g.dim());
    Matrix<T> acc = term;
    for (Elem t = 1; t < p; ++t) {
        term = term * base;
        acc += term;
    }
    return ScalarTraits<T>::rational(1, p) * acc;
}

template <class T>
Matrix<T> f_projection(const Representation<T> &rep, std::size_t j, std::int64_t s) {
    rep.check_shapes();
    if (j < 1 || j > rep.num_vars()) throw Error(ErrorKind::DimensionMismatch, "no generator g" + std::to_string(j));
    return spectral_projection(rep.image(j), rep.p, s);
}

/// Spectral-projection suite for every generator: idempotent, self-adjoint,
/// pairwise orthogonal in s, summing to I, reconstructing g_j, and the shift
/// identity w^s f_j(s) = g_j f_j(s).
template <class T>
CheckReport spectral_checks(const Representation<T> &rep, double tol = kDefaultTolerance) {
    rep.check_shapes();
    const Elem p = rep.p;
    const auto id = Matrix<T>::identity(rep.dim());
    CheckAccumulator idem("spectral", "idempotent", tol), adj("spectral", "self_adjoint", tol),
        orth("spectral", "orthogonal", tol), sum("spectral", "sum_identity", tol),
        recon("spectral", "reconstruct_generator", tol), shift("spectral", "eigen_shift", tol);
    for (std::size_t j = 1; j <= rep.num_vars(); ++j) {
        std::vector<Matrix<T>> f;
        for (Elem s = 0; s < p; ++s) f.push_back(f_projection(rep, j, s));
        Matrix<T> total = Matrix<T>::zero(rep.dim());
        Matrix<T> weighted = Matrix<T>::zero(rep.dim());
        for (Elem s = 0; s < p; ++s) {
            const auto lbl = "f_" + std::to_string(j) + "(" + std::to_string(s) + ")";
            idem.observe(distance(f[s] * f[s], f[s]), lbl);
            adj.observe(distance(f[s].adjoint(), f[s]), lbl);
            shift.observe(distance(ScalarTraits<T>::root(p, s) * f[s], rep.image(j) * f[s]), lbl);
            for (Elem r = 0; r < p; ++r) {
                if (r != s) orth.observe(frobenius(f[s] * f[r]), lbl + "f_" + std::to_string(j) + "(" + std::to_string(r) + ")");
            }
            total += f[s];
            weighted += ScalarTraits<T>::root(p, s) * f[s];
        }
        sum.observe(distance(total, id), "g" + std::to_string(j));
        recon.observe(distance(weighted, rep.image(j)), "g" + std::to_string(j));
    }
    CheckReport out;
    for (const auto *a : {&idem, &adj, &orth, &sum, &recon, &shift}) out.add(a->finish());
    return out;
}

namespace detail {

template <class T>
void require_compatible(const Representation<T> &rep, const LinearSystem &sys) {
    rep.check_shapes();
    if (rep.num_vars() != sys.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "representation has " + std::to_string(rep.num_vars()) +
                                                      " variables, system has " + std::to_string(sys.cols()));
    }
    if (rep.p != sys.p()) throw Error(ErrorKind::DimensionMismatch, "representation and system disagree on p");
}

template <class T>
void require_row_commuting(const Representation<T> &rep, const IndexSet &vi, std::size_t i, double tol) {
    for (std::size_t a = 0; a < vi.size(); ++a) {
        for (std::size_t b = a + 1; b < vi.size(); ++b) {
            const double c = commutator_norm(rep.image(vi[a]), rep.image(vi[b]));
            if (!(c <= tol)) {
                throw Error(ErrorKind::NonCommutingFactors, "g" + std::to_string(vi[a]) + " and g" +
                                                                std::to_string(vi[b]) + " (row " + std::to_string(i) +
                                                                ") have commutator norm " + std::to_string(c));
            }
        }
    }
}

// Product over V_i in ascending order of cached spectral projections.
template <class T>
Matrix<T> psi_product(const std::vector<std::vector<Matrix<T>>> &f, const IndexSet &vi, const ZpVector &x,
                      std::size_t dim) {
    Matrix<T> acc = Matrix<T>::identity(dim);
    for (auto j : vi) acc = acc * f[j - 1][x[j - 1]];
    return acc;
}

template <class T>
std::vector<std::vector<Matrix<T>>> spectral_table(const std::vector<Matrix<T>> &g, Elem p) {
    std::vector<std::vector<Matrix<T>>> f(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        for (Elem s = 0; s < p; ++s) f[j].push_back(spectral_projection(g[j], p, s));
    }
    return f;
}

}  // namespace detail

/// psi(a_{i,x}): product of f_j(x_j) over j in V_i, ascending j. The images
/// of the generators in row i must commute within tol.
template <class T>
Matrix<T> psi_image(const Representation<T> &rep, const LinearSystem &sys, std::size_t i, const ZpVector &x,
                    double tol = kDefaultTolerance) {
    detail::require_compatible(rep, sys);
    check_row(sys, i);
    if (!solves_row(sys, i, x)) throw Error(ErrorKind::NotASolution, x.str() + " is not in S_" + std::to_string(i));
    const auto vi = row_support(sys, i);
    detail::require_row_commuting(rep, vi, i, tol);
    Matrix<T> acc = Matrix<T>::identity(rep.dim());
    for (auto j : vi) acc = acc * f_projection(rep, j, x[j - 1]);
    return acc;
}

/// Matrices E_{i,x} for every row i and x in S_i, stored in the order of
/// row_solutions.
template <class T>
class ProjectionFamily {
   public:
    ProjectionFamily(LinearSystem sys, std::size_t dim, std::vector<std::vector<Matrix<T>>> entries,
                     const Limits &lim = {})
        : sys_(std::move(sys)), rows_(all_rows(sys_, lim)), dim_(dim), e_(std::move(entries)) {
        if (e_.size() != rows_.size()) throw Error(ErrorKind::DimensionMismatch, "one entry list per row expected");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (e_[i].size() != rows_[i].solutions.size()) {
                throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(i + 1) + " needs " +
                                                              std::to_string(rows_[i].solutions.size()) + " entries");
            }
            for (const auto &m : e_[i]) {
                if (m.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "entry dimension differs from family");
            }
        }
    }

    const LinearSystem &system() const { return sys_; }
    const std::vector<RowData> &rows() const { return rows_; }
    const RowData &row(std::size_t i) const { return rows_.at(i - 1); }
    std::size_t dim() const { return dim_; }
    const std::vector<std::vector<Matrix<T>>> &entries() const { return e_; }
    const Matrix<T> &entry(std::size_t i, std::size_t k) const { return e_.at(i - 1).at(k); }

    std::optional<std::size_t> index_of(std::size_t i, const ZpVector &x) const {
        const auto &s = rows_.at(i - 1).solutions;
        auto it = std::lower_bound(s.begin(), s.end(), x);
        if (it == s.end() || !(*it == x)) return std::nullopt;
        return static_cast<std::size_t>(it - s.begin());
    }

    const Matrix<T> &at(std::size_t i, const ZpVector &x) const {
        check_row(sys_, i);
        auto k = index_of(i, x);
        if (!k) throw Error(ErrorKind::NotASolution, x.str() + " is not in S_" + std::to_string(i));
        return e_[i - 1][*k];
    }

    /// Variables that occur in no row; phi is undefined on them.
    IndexSet unused_variables() const {
        IndexSet out;
        for (std::size_t j = 1; j <= sys_.cols(); ++j) {
            if (rows_containing(j).empty()) out.push_back(j);
        }
        return out;
    }

    std::vector<std::size_t> rows_containing(std::size_t j) const {
        std::vector<std::size_t> out;
        for (const auto &r : rows_) {
            if (std::binary_search(r.support.begin(), r.support.end(), j)) out.push_back(r.index);
        }
        return out;
    }

   private:
    LinearSystem sys_;
    std::vector<RowData> rows_;
    std::size_t dim_;
    std::vector<std::vector<Matrix<T>>> e_;
};

/// Applies psi to every generator without checking the family invariants.
template <class T>
ProjectionFamily<T> make_projection_family(const Representation<T> &rep, const LinearSystem &sys,
                                           double tol = kDefaultTolerance, const Limits &lim = {}) {
    detail::require_compatible(rep, sys);
    if (!rep.j_identified) {
        throw Error(ErrorKind::JNotIdentified, "projection families need a representation with J identified with w*I");
    }
    const auto rows = all_rows(sys, lim);
    const auto f = detail::spectral_table(rep.g, rep.p);
    std::vector<std::vector<Matrix<T>>> entries(rows.size());
    for (const auto &r : rows) {
        detail::require_row_commuting(rep, r.support, r.index, tol);
        for (const auto &x : r.solutions) entries[r.index - 1].push_back(detail::psi_product(f, r.support, x, rep.dim()));
    }
    return ProjectionFamily<T>(sys, rep.dim(), std::move(entries), lim);
}

/// Game-algebra relations on a family: self-adjoint idempotents, E_{i,x}
/// E_{k,y} = 0 for incompatible (x, y), and sum_{x in S_i} E_{i,x} = I.
template <class T>
CheckReport projection_family_checks(const ProjectionFamily<T> &fam, double tol = kDefaultTolerance) {
    const auto &rows = fam.rows();
    const auto id = Matrix<T>::identity(fam.dim());
    CheckAccumulator idem("projection_family", "idempotent", tol), adj("projection_family", "self_adjoint", tol),
        orth("projection_family", "orthogonal_incompatible", tol), sum("projection_family", "row_sum_identity", tol);
    for (const auto &r : rows) {
        Matrix<T> total = Matrix<T>::zero(fam.dim());
        for (std::size_t k = 0; k < r.solutions.size(); ++k) {
            const auto &e = fam.entry(r.index, k);
            const auto lbl = "E(" + std::to_string(r.index) + "," + r.solutions[k].str() + ")";
            idem.observe(distance(e * e, e), lbl);
            adj.observe(distance(e.adjoint(), e), lbl);
            total += e;
        }
        sum.observe(distance(total, id), "row " + std::to_string(r.index));
    }
    for (const auto &ri : rows) {
        for (const auto &rk : rows) {
            const auto shared = intersect(ri.support, rk.support);
            for (std::size_t a = 0; a < ri.solutions.size(); ++a) {
                for (std::size_t b = 0; b < rk.solutions.size(); ++b) {
                    const auto &x = ri.solutions[a];
                    const auto &y = rk.solutions[b];
                    bool agree = true;
                    for (auto k : shared) agree = agree && x[k - 1] == y[k - 1];
                    if (agree) continue;
                    orth.observe(frobenius(fam.entry(ri.index, a) * fam.entry(rk.index, b)),
                                 "E(" + std::to_string(ri.index) + "," + x.str() + ")E(" + std::to_string(rk.index) +
                                     "," + y.str() + ")");
                }
            }
        }
    }
    CheckReport out;
    for (const auto *a : {&idem, &adj, &orth, &sum}) out.add(a->finish());
    return out;
}

/// psi applied to a representation, with every family invariant enforced.
template <class T>
ProjectionFamily<T> build_projection_family(const Representation<T> &rep, const LinearSystem &sys,
                                            double tol = kDefaultTolerance, const Limits &lim = {}) {
    auto fam = make_projection_family(rep, sys, tol, lim);
    const auto rep_checks = projection_family_checks(fam, tol);
    if (const auto *bad = rep_checks.first_failure()) {
        throw Error(ErrorKind::InvariantViolation, bad->name + " failed at " + bad->worst + " (residual " +
                                                       std::to_string(bad->residual) + ")");
    }
    return fam;
}

template <class T>
struct PhiImage {
    Matrix<T> image;
    std::size_t row = 0;        // canonical (lowest) row containing the variable
    double discrepancy = 0.0;   // max over other rows of ||phi_k(g_j) - image||
    std::size_t worst_row = 0;  // row realising the discrepancy (0 if none)
};

namespace detail {
template <class T>
Matrix<T> phi_via_row(const ProjectionFamily<T> &fam, std::size_t i, std::size_t j) {
    const auto &r = fam.row(i);
    const Elem p = fam.system().p();
    Matrix<T> acc = Matrix<T>::zero(fam.dim());
    for (std::size_t k = 0; k < r.solutions.size(); ++k) {
        acc += ScalarTraits<T>::root(p, r.solutions[k][j - 1]) * fam.entry(i, k);
    }
    return acc;
}
}  // namespace detail

/// phi(g_j) = sum_{x in S_i} w^{x_j} E_{i,x} using the lowest row i whose
/// support contains j; the other rows are evaluated for comparison only.
template <class T>
PhiImage<T> phi_image(const ProjectionFamily<T> &fam, std::size_t j) {
    if (j < 1 || j > fam.system().cols()) throw Error(ErrorKind::DimensionMismatch, "no variable " + std::to_string(j));
    const auto containing = fam.rows_containing(j);
    if (containing.empty()) throw Error(ErrorKind::VariableUnused, "variable " + std::to_string(j) + " is in no row");
    PhiImage<T> out{detail::phi_via_row(fam, containing.front(), j), containing.front(), 0.0, 0};
    for (std::size_t q = 1; q < containing.size(); ++q) {
        const double d = distance(detail::phi_via_row(fam, containing[q], j), out.image);
        if (out.worst_row == 0 || d > out.discrepancy) {
            out.discrepancy = d;
            out.worst_row = containing[q];
        }
    }
    return out;
}

/// P_{i,j}(t): sum of E_{i,x} over x in S_i with x_j = t.
template <class T>
Matrix<T> p_block(const ProjectionFamily<T> &fam, std::size_t i, std::size_t j, Elem t) {
    const auto &r = fam.row(i);
    Matrix<T> acc = Matrix<T>::zero(fam.dim());
    for (std::size_t k = 0; k < r.solutions.size(); ++k) {
        if (r.solutions[k][j - 1] == t) acc += fam.entry(i, k);
    }
    return acc;
}

/// Images phi(g_j) (identity for unused variables) and phi(J) = w I.
template <class T>
Representation<T> phi_representation(const ProjectionFamily<T> &fam) {
    Representation<T> rep;
    rep.p = fam.system().p();
    for (std::size_t j = 1; j <= fam.system().cols(); ++j) {
        if (fam.rows_containing(j).empty()) {
            rep.g.push_back(Matrix<T>::identity(fam.dim()));
        } else {
            rep.g.push_back(phi_image(fam, j).image);
        }
    }
    rep.J = Matrix<T>::scalar(fam.dim(), ScalarTraits<T>::root(rep.p, 1));
    rep.j_identified = true;
    return rep;
}

/// Well-definedness of phi (row choice, P-block agreement) and the solution
/// group relations on the phi images (suite "phi").
template <class T>
CheckReport phi_checks(const ProjectionFamily<T> &fam, double tol = kDefaultTolerance) {
    const Elem p = fam.system().p();
    CheckAccumulator wd("phi", "well_defined", tol), blocks("phi", "p_block_consistency", tol);
    for (std::size_t j = 1; j <= fam.system().cols(); ++j) {
        const auto containing = fam.rows_containing(j);
        if (containing.empty()) continue;
        const auto img = phi_image(fam, j);
        wd.observe(img.discrepancy, "g" + std::to_string(j) + " rows " + std::to_string(img.row) + "/" +
                                        std::to_string(img.worst_row));
        for (Elem t = 0; t < p; ++t) {
            const auto canon = p_block(fam, containing.front(), j, t);
            for (std::size_t q = 1; q < containing.size(); ++q) {
                blocks.observe(distance(p_block(fam, containing[q], j, t), canon),
                               "P(" + std::to_string(containing[q]) + "," + std::to_string(j) + "," +
                                   std::to_string(t) + ")");
            }
        }
    }
    CheckReport out;
    out.add(wd.finish());
    out.add(blocks.finish());

    const auto pres = build_presentation(fam.system());
    CheckAccumulator hom("phi", "relations_on_images", tol);
    for (const auto &c : relation_residuals(phi_representation(fam), pres, tol).checks) {
        if (c.suite == "relations") hom.observe(c.residual, c.name);
    }
    out.add(hom.finish());
    return out;
}

/// Both round trips on generators:
///   psi(phi(g_l)) = g_l through every row containing l, and psi(phi(J)) = J;
///   phi(psi(a_{i,y})) = a_{i,y} for every row i and y in S_i.
template <class T>
CheckReport check_mutual_inverse(const Representation<T> &rep, const ProjectionFamily<T> &fam,
                                 double tol = kDefaultTolerance) {
    detail::require_compatible(rep, fam.system());
    if (fam.dim() != rep.dim()) throw Error(ErrorKind::DimensionMismatch, "family and representation dimensions differ");
    const Elem p = rep.p;
    CheckAccumulator gen("mutual_inverse", "psi_phi_generators", tol), jj("mutual_inverse", "psi_phi_J", tol),
        proj("mutual_inverse", "phi_psi_projections", tol);

    for (std::size_t l = 1; l <= rep.num_vars(); ++l) {
        for (auto i : fam.rows_containing(l)) {
            gen.observe(distance(detail::phi_via_row(fam, i, l), rep.image(l)),
                        "g" + std::to_string(l) + " via row " + std::to_string(i));
        }
    }
    jj.observe(j_identification_residual(rep), "J");

    const auto phi_rep = phi_representation(fam);
    const auto f = detail::spectral_table(phi_rep.g, p);
    for (const auto &r : fam.rows()) {
        for (std::size_t k = 0; k < r.solutions.size(); ++k) {
            proj.observe(distance(detail::psi_product(f, r.support, r.solutions[k], fam.dim()), fam.entry(r.index, k)),
                         "a(" + std::to_string(r.index) + "," + r.solutions[k].str() + ")");
        }
    }
    CheckReport out;
    out.add(gen.finish());
    out.add(jj.finish());
    out.add(proj.finish());
    return out;
}

template <class T>
CheckReport check_mutual_inverse(const Representation<T> &rep, const LinearSystem &sys,
                                 double tol = kDefaultTolerance, const Limits &lim = {}) {
    return check_mutual_inverse(rep, make_projection_family(rep, sys, tol, lim), tol);
}

// ---------------------------------------------------------------------------
// Iso(G_{A,b}, G_{A,0})

/// E_{(i,x),(j,y)} over V(G_{A,b}) x V(G_{A,0}); entries for i != j are the
/// structural zero and stored as nullopt.
template <class T>
struct IsoFamily {
    GameGraph G;
    GameGraph H;
    std::size_t dim = 0;
    std::vector<std::optional<Matrix<T>>> E;

    const std::optional<Matrix<T>> &at(std::size_t g, std::size_t h) const { return E[g * H.size() + h]; }
    Matrix<T> value(std::size_t g, std::size_t h) const {
        const auto &e = at(g, h);
        return e ? *e : Matrix<T>::zero(dim);
    }
};

template <class T>
IsoFamily<T> iso_generator_images(const ProjectionFamily<T> &fam, const Limits &lim = {}) {
    IsoFamily<T> out{build_game_graph(fam.system(), false, lim), build_game_graph(fam.system(), true, lim), fam.dim(),
                     {}};
    out.E.resize(out.G.size() * out.H.size());
    for (std::size_t g = 0; g < out.G.size(); ++g) {
        const auto &vg = out.G.vertex(g);
        for (std::size_t h = 0; h < out.H.size(); ++h) {
            const auto &vh = out.H.vertex(h);
            if (vg.row != vh.row) continue;
            auto k = fam.index_of(vg.row, vg.x + vh.x);
            if (!k) {
                throw Error(ErrorKind::InvariantViolation,
                            "x + y left S_" + std::to_string(vg.row) + " for " + vg.label() + ", " + vh.label());
            }
            out.E[g * out.H.size() + h] = fam.entry(vg.row, *k);
        }
    }
    return out;
}

/// Partition-of-unity identities of the Iso game algebra and the structural
/// checks on the delta_ij pattern and on psi(a_{i,x}) = sum_k E_{(i,x),(k,0)}.
template <class T>
CheckReport iso_partition_checks(const IsoFamily<T> &iso, const ProjectionFamily<T> &fam,
                                 double tol = kDefaultTolerance) {
    const auto id = Matrix<T>::identity(iso.dim);
    CheckAccumulator over_g("iso_images", "sum_over_G_vertices", tol), over_h("iso_images", "sum_over_H_vertices", tol),
        cross("iso_images", "cross_row_zero", tol), psi("iso_images", "psi_structural", tol);
    for (std::size_t h = 0; h < iso.H.size(); ++h) {
        Matrix<T> total = Matrix<T>::zero(iso.dim);
        for (std::size_t g = 0; g < iso.G.size(); ++g) {
            if (const auto &e = iso.at(g, h)) total += *e;
        }
        over_g.observe(distance(total, id), "H:" + iso.H.vertex(h).label());
    }
    for (std::size_t g = 0; g < iso.G.size(); ++g) {
        Matrix<T> total = Matrix<T>::zero(iso.dim);
        for (std::size_t h = 0; h < iso.H.size(); ++h) {
            const auto &e = iso.at(g, h);
            if (e) total += *e;
            if (iso.G.vertex(g).row != iso.H.vertex(h).row) {
                cross.observe(e ? frobenius(*e) : 0.0, iso.G.vertex(g).label() + "/" + iso.H.vertex(h).label());
            }
        }
        over_h.observe(distance(total, id), "G:" + iso.G.vertex(g).label());
    }
    for (std::size_t g = 0; g < iso.G.size(); ++g) {
        const auto &vg = iso.G.vertex(g);
        Matrix<T> total = Matrix<T>::zero(iso.dim);
        for (std::size_t k = 1; k <= fam.system().rows(); ++k) {
            if (auto h = iso.H.index_of(k, ZpVector(fam.system().p(), fam.system().cols()))) {
                if (const auto &e = iso.at(g, *h)) total += *e;
            }
        }
        psi.observe(distance(total, fam.at(vg.row, vg.x)), vg.label());
    }
    CheckReport out;
    for (const auto *a : {&over_g, &over_h, &cross, &psi}) out.add(a->finish());
    return out;
}

/// Number of ordered quadruples ((g,h),(g',h')) on which the Iso rule is
/// zero, i.e. relation_G(g,g') != relation_H(h,h').
inline std::uint64_t count_rule_zero_quadruples(const GameGraph &G, const GameGraph &H) {
    auto histogram = [](const GameGraph &X) {
        std::array<std::uint64_t, 3> c{0, 0, 0};
        for (std::size_t u = 0; u < X.size(); ++u) {
            for (std::size_t w = 0; w < X.size(); ++w) ++c[static_cast<int>(X.relation(u, w))];
        }
        return c;
    };
    const auto cg = histogram(G), ch = histogram(H);
    const std::uint64_t all = (cg[0] + cg[1] + cg[2]) * (ch[0] + ch[1] + ch[2]);
    return all - (cg[0] * ch[0] + cg[1] * ch[1] + cg[2] * ch[2]);
}

/// Each E is a self-adjoint idempotent, and E_{g,h} E_{g',h'} = 0 whenever
/// the relation of (g, g') in G differs from that of (h, h') in H. With
/// skip_exact_zeros, products with an exactly-zero factor are counted as
/// exact zeros instead of being multiplied out.
template <class T>
CheckReport check_iso_relations(const IsoFamily<T> &iso, double tol = kDefaultTolerance,
                                bool skip_exact_zeros = true) {
    const std::size_t nh = iso.H.size();
    CheckAccumulator idem("iso_relations", "idempotent", tol), adj("iso_relations", "self_adjoint", tol),
        zero("iso_relations", "rule_zero_products", tol);

    std::vector<std::size_t> live;
    std::vector<Matrix<T>> mats(iso.E.size());
    for (std::size_t q = 0; q < iso.E.size(); ++q) {
        mats[q] = iso.E[q] ? *iso.E[q] : Matrix<T>::zero(iso.dim);
        const auto lbl = iso.G.vertex(q / nh).label() + "/" + iso.H.vertex(q % nh).label();
        idem.observe(distance(mats[q] * mats[q], mats[q]), lbl);
        adj.observe(distance(mats[q].adjoint(), mats[q]), lbl);
        if (!skip_exact_zeros || !mats[q].is_exact_zero()) live.push_back(q);
    }

    std::uint64_t evaluated = 0;
    for (auto a : live) {
        const std::size_t g = a / nh, h = a % nh;
        for (auto b : live) {
            const std::size_t g2 = b / nh, h2 = b % nh;
            if (iso.G.relation(g, g2) == iso.H.relation(h, h2)) continue;
            ++evaluated;
            zero.observe(frobenius(mats[a] * mats[b]), "[" + iso.G.vertex(g).label() + "/" + iso.H.vertex(h).label() +
                                                           "][" + iso.G.vertex(g2).label() + "/" +
                                                           iso.H.vertex(h2).label() + "]");
        }
    }
    zero.observe_exact_zeros(count_rule_zero_quadruples(iso.G, iso.H) - evaluated);

    CheckReport out;
    for (const auto *a : {&idem, &adj, &zero}) out.add(a->finish());
    return out;
}

// ---------------------------------------------------------------------------

struct RepcheckOptions {
    double tol = kDefaultTolerance;
    bool skip_exact_zeros = true;
    Limits limits;
};

/// Every suite in order: group relations, spectral projections, projection
/// family, phi, mutual inverse, Iso images and Iso relations.
template <class T>
CheckReport run_all_checks(const Representation<T> &rep, const LinearSystem &sys, const RepcheckOptions &opt = {}) {
    CheckReport out;
    out.append(relation_residuals(rep, build_presentation(sys), opt.tol));
    out.append(spectral_checks(rep, opt.tol));
    const auto fam = make_projection_family(rep, sys, opt.tol, opt.limits);
    out.append(projection_family_checks(fam, opt.tol));
    out.append(phi_checks(fam, opt.tol));
    out.append(check_mutual_inverse(rep, fam, opt.tol));
    const auto iso = iso_generator_images(fam, opt.limits);
    out.append(iso_partition_checks(iso, fam, opt.tol));
    out.append(check_iso_relations(iso, opt.tol, opt.skip_exact_zeros));
    return out;
}

}  // namespace lcs
