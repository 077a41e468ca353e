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

// Incompatibility graphs of a linear system, the graph isomorphism game, and
// a colour-refinement isomorphism search.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcs/lcs_system.hpp"
#include "lcs/sync_game.hpp"

namespace lcs {

struct GraphVertex {
    std::size_t row = 0;  // 1-based
    ZpVector x;

    std::string label() const { return std::to_string(row) + ":" + x.str(); }
    friend bool operator==(const GraphVertex &, const GraphVertex &) = default;
};

enum class VertexRelation { Equal, Adjacent, Distinct };

class GameGraph {
   public:
    GameGraph() = default;
    GameGraph(std::vector<GraphVertex> vertices, std::vector<char> adjacency, std::string digest, bool homogeneous)
        : v_(std::move(vertices)), adj_(std::move(adjacency)), digest_(std::move(digest)), homogeneous_(homogeneous) {}

    std::size_t size() const { return v_.size(); }
    const std::vector<GraphVertex> &vertices() const { return v_; }
    const GraphVertex &vertex(std::size_t u) const { return v_[u]; }
    bool adjacent(std::size_t u, std::size_t w) const { return adj_[u * v_.size() + w] != 0; }

    VertexRelation relation(std::size_t u, std::size_t w) const {
        if (u == w) return VertexRelation::Equal;
        return adjacent(u, w) ? VertexRelation::Adjacent : VertexRelation::Distinct;
    }

    std::size_t degree(std::size_t u) const {
        std::size_t d = 0;
        for (std::size_t w = 0; w < v_.size(); ++w) d += adjacent(u, w) ? 1 : 0;
        return d;
    }

    std::size_t edge_count() const {
        std::size_t e = 0;
        for (std::size_t u = 0; u < v_.size(); ++u) {
            for (std::size_t w = u + 1; w < v_.size(); ++w) e += adjacent(u, w) ? 1 : 0;
        }
        return e;
    }

    std::optional<std::size_t> index_of(std::size_t row, const ZpVector &x) const {
        for (std::size_t u = 0; u < v_.size(); ++u) {
            if (v_[u].row == row && v_[u].x == x) return u;
        }
        return std::nullopt;
    }

    /// Digest of the system the graph was built from.
    const std::string &system_digest() const { return digest_; }
    bool homogeneous() const { return homogeneous_; }

   private:
    std::vector<GraphVertex> v_;
    std::vector<char> adj_;
    std::string digest_;
    bool homogeneous_ = false;
};

/// G_{A,b} (or G_{A,0} when homogeneous): vertices (i, x in S_i), with
/// (i,x) ~ (j,y) when x and y differ on some variable shared by rows i, j.
inline GameGraph build_game_graph(const LinearSystem &sys, bool homogeneous, const Limits &lim = {}) {
    const LinearSystem used = homogeneous ? sys.homogeneous() : sys;
    const auto rows = all_rows(used, lim);
    std::vector<GraphVertex> verts;
    for (const auto &r : rows) {
        for (const auto &x : r.solutions) verts.push_back({r.index, x});
    }
    const std::size_t n = verts.size();
    std::vector<char> adj(n * n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t w = u + 1; w < n; ++w) {
            const auto &a = verts[u];
            const auto &b = verts[w];
            for (auto k : intersect(rows[a.row - 1].support, rows[b.row - 1].support)) {
                if (a.x[k - 1] != b.x[k - 1]) {
                    adj[u * n + w] = adj[w * n + u] = 1;
                    break;
                }
            }
        }
    }
    return GameGraph(std::move(verts), std::move(adj), system_digest(sys), homogeneous);
}

/// Iso(G, H). Inputs and outputs are V(G) followed by V(H). A pair of answers
/// wins when each answer lies in the graph opposite its question and every
/// same-graph pair among the four vertices stands in the same relation
/// (equal / adjacent / distinct non-adjacent) as its counterpart.
inline SynchronousGame build_iso_game(const GameGraph &G, const GameGraph &H) {
    const std::size_t ng = G.size();
    std::vector<std::string> labels;
    for (const auto &v : G.vertices()) labels.push_back("G:" + v.label());
    for (const auto &v : H.vertices()) labels.push_back("H:" + v.label());

    auto gp = std::make_shared<const GameGraph>(G);
    auto hp = std::make_shared<const GameGraph>(H);
    auto rel = [gp, hp, ng](std::size_t a, std::size_t b) {
        return a < ng ? gp->relation(a, b) : hp->relation(a - ng, b - ng);
    };
    auto rule = [ng, rel](std::size_t x, std::size_t y, std::size_t v, std::size_t w) {
        const bool sv = v < ng, sw = w < ng, sx = x < ng, sy = y < ng;
        if (sv == sx || sw == sy) return false;
        if (sv == sw) return rel(v, w) == rel(x, y);
        return rel(v, y) == rel(x, w);
    };
    return SynchronousGame(labels, labels, rule);
}

struct VertexBijection {
    std::vector<std::size_t> forward;  // G index -> H index
    std::vector<std::size_t> inverse;  // H index -> G index

    static VertexBijection from_forward(std::vector<std::size_t> fwd) {
        VertexBijection b{std::move(fwd), {}};
        b.inverse.assign(b.forward.size(), b.forward.size());
        for (std::size_t u = 0; u < b.forward.size(); ++u) {
            if (b.forward[u] >= b.forward.size() || b.inverse[b.forward[u]] != b.forward.size()) {
                throw Error(ErrorKind::InvariantViolation, "vertex map is not a bijection");
            }
            b.inverse[b.forward[u]] = u;
        }
        return b;
    }

    bool is_identity() const {
        for (std::size_t u = 0; u < forward.size(); ++u) {
            if (forward[u] != u) return false;
        }
        return true;
    }

    friend bool operator==(const VertexBijection &, const VertexBijection &) = default;
};

inline bool is_isomorphism(const GameGraph &G, const GameGraph &H, const VertexBijection &f) {
    const std::size_t n = G.size();
    if (H.size() != n || f.forward.size() != n || f.inverse.size() != n) return false;
    for (std::size_t u = 0; u < n; ++u) {
        if (f.forward[u] >= n || f.inverse[f.forward[u]] != u) return false;
    }
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t w = u + 1; w < n; ++w) {
            if (G.adjacent(u, w) != H.adjacent(f.forward[u], f.forward[w])) return false;
        }
    }
    return true;
}

namespace detail {

// 1-dimensional Weisfeiler-Leman refinement on the disjoint union G + H.
// Colours are renumbered by sorted signature, so both sides share one palette.
class UnionRefiner {
   public:
    UnionRefiner(const GameGraph &G, const GameGraph &H) : ng_(G.size()), n_(G.size() + H.size()) {
        nbr_.resize(n_);
        for (std::size_t u = 0; u < ng_; ++u) {
            for (std::size_t w = 0; w < ng_; ++w) {
                if (G.adjacent(u, w)) nbr_[u].push_back(w);
            }
        }
        for (std::size_t u = 0; u < H.size(); ++u) {
            for (std::size_t w = 0; w < H.size(); ++w) {
                if (H.adjacent(u, w)) nbr_[ng_ + u].push_back(ng_ + w);
            }
        }
    }

    std::size_t size() const { return n_; }
    std::size_t split() const { return ng_; }

    void refine(std::vector<std::uint32_t> &color) const {
        std::size_t classes = count_classes(color);
        while (true) {
            std::vector<std::vector<std::uint32_t>> sig(n_);
            for (std::size_t u = 0; u < n_; ++u) {
                auto &s = sig[u];
                s.reserve(nbr_[u].size() + 1);
                for (auto w : nbr_[u]) s.push_back(color[w]);
                std::sort(s.begin(), s.end());
                s.insert(s.begin(), color[u]);
            }
            std::map<std::vector<std::uint32_t>, std::uint32_t> palette;
            for (const auto &s : sig) palette.emplace(s, 0);
            std::uint32_t next = 0;
            for (auto &[s, c] : palette) c = next++;
            for (std::size_t u = 0; u < n_; ++u) color[u] = palette[sig[u]];
            if (palette.size() == classes) return;
            classes = palette.size();
        }
    }

    bool balanced(const std::vector<std::uint32_t> &color) const {
        std::map<std::uint32_t, std::int64_t> diff;
        for (std::size_t u = 0; u < n_; ++u) diff[color[u]] += u < ng_ ? 1 : -1;
        for (const auto &[c, d] : diff) {
            if (d != 0) return false;
        }
        return true;
    }

   private:
    static std::size_t count_classes(const std::vector<std::uint32_t> &color) {
        std::vector<std::uint32_t> c = color;
        std::sort(c.begin(), c.end());
        return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
    }

    std::size_t ng_, n_;
    std::vector<std::vector<std::size_t>> nbr_;
};

}  // namespace detail

/// Individualisation-refinement search. Exhausting the tree without a match
/// proves G and H are not isomorphic.
inline std::optional<VertexBijection> find_isomorphism(const GameGraph &G, const GameGraph &H, const Limits &lim = {},
                                                       SearchStats *stats = nullptr) {
    SearchStats local;
    if (G.size() != H.size()) {
        local.exhausted = true;
        if (stats) *stats = local;
        return std::nullopt;
    }
    const detail::UnionRefiner U(G, H);
    const std::size_t ng = U.split();
    std::optional<VertexBijection> found;

    std::function<bool(std::vector<std::uint32_t>)> search = [&](std::vector<std::uint32_t> color) -> bool {
        if (++local.nodes > lim.search_budget) {
            throw Error(ErrorKind::SearchBudgetExceeded,
                        "isomorphism search exceeded " + std::to_string(lim.search_budget) + " nodes");
        }
        U.refine(color);
        if (!U.balanced(color)) return false;

        std::map<std::uint32_t, std::vector<std::size_t>> cells;  // G-side cells
        for (std::size_t u = 0; u < ng; ++u) cells[color[u]].push_back(u);
        const std::vector<std::size_t> *target = nullptr;
        std::uint32_t target_color = 0;
        for (const auto &[c, members] : cells) {
            if (members.size() > 1 && (!target || members.size() < target->size())) {
                target = &members;
                target_color = c;
            }
        }

        if (!target) {
            std::vector<std::size_t> fwd(ng);
            std::map<std::uint32_t, std::size_t> h_of;
            for (std::size_t w = ng; w < U.size(); ++w) h_of[color[w]] = w - ng;
            for (std::size_t u = 0; u < ng; ++u) fwd[u] = h_of.at(color[u]);
            auto bij = VertexBijection::from_forward(std::move(fwd));
            if (!is_isomorphism(G, H, bij)) return false;
            found = std::move(bij);
            return true;
        }

        const std::size_t v = target->front();
        const auto fresh = static_cast<std::uint32_t>(U.size() + 1);
        for (std::size_t w = ng; w < U.size(); ++w) {
            if (color[w] != target_color) continue;
            auto next = color;
            next[v] = fresh;
            next[w] = fresh;
            if (search(std::move(next))) return true;
        }
        return false;
    };

    search(std::vector<std::uint32_t>(U.size(), 0));
    local.exhausted = !found.has_value();
    if (stats) *stats = local;
    return found;
}

/// (i, x) -> (i, x - x* restricted to V_i), an isomorphism G_{A,b} -> G_{A,0}
/// for any solution x* of Ax = b. The result is verified before returning.
inline VertexBijection translate_isomorphism(const LinearSystem &sys, const ZpVector &xstar, const Limits &lim = {}) {
    if (!is_solution(sys, xstar)) throw Error(ErrorKind::NotASolution, xstar.str() + " does not solve Ax = b");
    const auto G = build_game_graph(sys, false, lim);
    const auto H = build_game_graph(sys, true, lim);
    std::vector<std::size_t> fwd;
    fwd.reserve(G.size());
    for (const auto &v : G.vertices()) {
        ZpVector shift(sys.p(), sys.cols());
        for (auto k : row_support(sys, v.row)) shift[k - 1] = xstar[k - 1];
        auto h = H.index_of(v.row, v.x - shift);
        if (!h) throw Error(ErrorKind::InvariantViolation, "translate of " + v.label() + " is not a vertex");
        fwd.push_back(*h);
    }
    auto bij = VertexBijection::from_forward(std::move(fwd));
    if (!is_isomorphism(G, H, bij)) throw Error(ErrorKind::InvariantViolation, "translation map does not preserve edges");
    return bij;
}

inline std::string export_dot(const GameGraph &G) {
    std::ostringstream os;
    os << "graph " << (G.homogeneous() ? "G_A_0" : "G_A_b") << " {\n";
    for (std::size_t u = 0; u < G.size(); ++u) os << "  n" << u << " [label=\"" << G.vertex(u).label() << "\"];\n";
    for (std::size_t u = 0; u < G.size(); ++u) {
        for (std::size_t w = u + 1; w < G.size(); ++w) {
            if (G.adjacent(u, w)) os << "  n" << u << " -- n" << w << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace lcs
