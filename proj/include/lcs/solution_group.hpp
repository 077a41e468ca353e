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

// The finitely presented solution group of Ax = b: generators g_1..g_n and a
// central J of order p, intra-row commutation, and one product relation per
// row. Representations are certified by evaluating every relator.

#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcs/checks.hpp"
#include "lcs/lcs_system.hpp"
#include "lcs/representation.hpp"

namespace lcs {

enum class RelationFamily { OrderG, OrderJ, CentralJ, RowCommutation, RowProduct };

inline std::string_view to_string(RelationFamily f) {
    switch (f) {
        case RelationFamily::OrderG: return "order-g";
        case RelationFamily::OrderJ: return "order-J";
        case RelationFamily::CentralJ: return "central-J";
        case RelationFamily::RowCommutation: return "row-commutation";
        case RelationFamily::RowProduct: return "row-product";
    }
    return "?";
}

/// Generator id 0 is J; 1..n are g_1..g_n.
inline constexpr std::size_t kJ = 0;

inline std::string generator_name(std::size_t gen) { return gen == kJ ? "J" : "g" + std::to_string(gen); }

struct Factor {
    std::size_t gen = kJ;
    std::int64_t exp = 1;

    friend bool operator==(const Factor &, const Factor &) = default;
};

struct Word {
    std::vector<Factor> factors;

    bool empty() const { return factors.empty(); }

    /// Exponents reduced into [0, p), zero-exponent factors dropped.
    Word normalized(Elem p) const {
        Word w;
        for (const auto &f : factors) {
            const auto e = reduce(f.exp, p);
            if (e != 0) w.factors.push_back({f.gen, static_cast<std::int64_t>(e)});
        }
        return w;
    }

    /// Space-separated factors, e.g. "g1 g2^2 J^-1"; the empty word is "1".
    std::string str() const {
        if (factors.empty()) return "1";
        std::string s;
        for (const auto &f : factors) {
            if (!s.empty()) s += ' ';
            s += generator_name(f.gen);
            if (f.exp != 1) s += "^" + std::to_string(f.exp);
        }
        return s;
    }

    friend bool operator==(const Word &, const Word &) = default;
};

struct Relation {
    RelationFamily family;
    std::optional<std::size_t> row;  // row that produced it, if any
    Word word;                       // relator: word = identity
    std::string text;                // relator in conventional notation
};

struct GroupPresentation {
    std::size_t n = 0;
    Elem p = 2;
    std::vector<Relation> relations;

    std::size_t count(RelationFamily f) const {
        std::size_t c = 0;
        for (const auto &r : relations) c += r.family == f ? 1 : 0;
        return c;
    }

    /// One relator per line.
    std::string relators_text() const {
        std::string s;
        for (const auto &r : relations) s += r.text + '\n';
        return s;
    }
};

namespace detail {
inline Relation power_relation(RelationFamily fam, std::size_t gen, Elem p) {
    Word w{{{gen, static_cast<std::int64_t>(p)}}};
    return {fam, std::nullopt, w, w.str()};
}
inline Relation commutator(RelationFamily fam, std::optional<std::size_t> row, std::size_t a, std::size_t b) {
    Word w{{{a, 1}, {b, 1}, {a, -1}, {b, -1}}};
    return {fam, row, w, "[" + generator_name(a) + "," + generator_name(b) + "]"};
}
}  // namespace detail

inline GroupPresentation build_presentation(const LinearSystem &sys) {
    GroupPresentation pres;
    pres.n = sys.cols();
    pres.p = sys.p();
    const auto n = pres.n;
    auto &rel = pres.relations;

    for (std::size_t j = 1; j <= n; ++j) rel.push_back(detail::power_relation(RelationFamily::OrderG, j, sys.p()));
    rel.push_back(detail::power_relation(RelationFamily::OrderJ, kJ, sys.p()));
    for (std::size_t j = 1; j <= n; ++j) rel.push_back(detail::commutator(RelationFamily::CentralJ, std::nullopt, j, kJ));

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 1; i <= sys.rows(); ++i) {
        const auto vi = row_support(sys, i);
        for (std::size_t a = 0; a < vi.size(); ++a) {
            for (std::size_t b = a + 1; b < vi.size(); ++b) {
                if (seen.emplace(vi[a], vi[b]).second) {
                    rel.push_back(detail::commutator(RelationFamily::RowCommutation, i, vi[a], vi[b]));
                }
            }
        }
    }

    for (std::size_t i = 1; i <= sys.rows(); ++i) {
        Word w;
        for (std::size_t j = 1; j <= n; ++j) {
            if (auto e = sys.a()(i - 1, j - 1); e != 0) w.factors.push_back({j, static_cast<std::int64_t>(e)});
        }
        if (auto bi = sys.b()[i - 1]; bi != 0) w.factors.push_back({kJ, -static_cast<std::int64_t>(bi)});
        rel.push_back({RelationFamily::RowProduct, i, w, w.str()});
    }
    return pres;
}

template <class T>
Matrix<T> evaluate(const Word &w, const Representation<T> &rep) {
    Matrix<T> acc = Matrix<T>::identity(rep.dim());
    for (const auto &f : w.factors) {
        const auto &img = f.gen == kJ ? rep.J : rep.image(f.gen);
        acc = acc * img.pow(f.exp);
    }
    return acc;
}

/// ||eval(w) - I||_F for every relator (suite "relations"), plus unitarity
/// of each generator image (suite "unitarity").
template <class T>
CheckReport relation_residuals(const Representation<T> &rep, const GroupPresentation &pres,
                               double tol = kDefaultTolerance) {
    rep.check_shapes();
    if (rep.num_vars() != pres.n) {
        throw Error(ErrorKind::DimensionMismatch, "representation has " + std::to_string(rep.num_vars()) +
                                                      " g-generators, presentation has " + std::to_string(pres.n));
    }
    if (rep.p != pres.p) throw Error(ErrorKind::DimensionMismatch, "representation and presentation disagree on p");

    CheckReport out;
    const auto id = Matrix<T>::identity(rep.dim());
    for (std::size_t j = 0; j <= rep.num_vars(); ++j) {
        const auto gen = j == rep.num_vars() ? kJ : j + 1;
        const auto &img = gen == kJ ? rep.J : rep.image(gen);
        CheckAccumulator acc("unitarity", generator_name(gen), tol);
        acc.observe(unitarity_residual(img), generator_name(gen));
        out.add(acc.finish());
    }
    for (const auto &r : pres.relations) {
        CheckAccumulator acc("relations", std::string(to_string(r.family)) + ":" + r.text, tol);
        acc.observe(distance(evaluate(r.word, rep), id), r.text);
        out.add(acc.finish());
    }
    return out;
}

}  // namespace lcs
