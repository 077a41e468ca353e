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

// Synchronous nonlocal games with a uniform question distribution, the
// linear-constraint-system game built from Ax = b, and deterministic strategy
// search.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lcs/lcs_system.hpp"

namespace lcs {

/// Exact fraction wins/total. Kept unreduced so reports show raw pair counts.
struct GameValue {
    std::uint64_t wins = 0;
    std::uint64_t total = 1;

    double as_double() const { return total ? static_cast<double>(wins) / static_cast<double>(total) : 0.0; }
    std::string str() const { return std::to_string(wins) + "/" + std::to_string(total); }
    /// Lowest terms; whole numbers print without a denominator ("1", "0").
    std::string reduced_str() const {
        const auto g = std::gcd(wins, total);
        if (g == 0) return str();
        if (total / g == 1) return std::to_string(wins / g);
        return std::to_string(wins / g) + "/" + std::to_string(total / g);
    }
    bool is_one() const { return wins == total; }

    friend bool operator==(const GameValue &a, const GameValue &b) { return a.wins * b.total == b.wins * a.total; }
    friend bool operator<(const GameValue &a, const GameValue &b) { return a.wins * b.total < b.wins * a.total; }
};

/// Finite game with rule lambda(x, y | i, j) over 0-based input/output indices.
class SynchronousGame {
   public:
    using Rule = std::function<bool(std::size_t x, std::size_t y, std::size_t i, std::size_t j)>;

    SynchronousGame(std::vector<std::string> input_labels, std::vector<std::string> output_labels, Rule rule)
        : inputs_(std::move(input_labels)), outputs_(std::move(output_labels)), rule_(std::move(rule)) {}

    std::size_t num_inputs() const { return inputs_.size(); }
    std::size_t num_outputs() const { return outputs_.size(); }
    const std::vector<std::string> &input_labels() const { return inputs_; }
    const std::vector<std::string> &output_labels() const { return outputs_; }

    bool operator()(std::size_t x, std::size_t y, std::size_t i, std::size_t j) const { return rule_(x, y, i, j); }

   private:
    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
    Rule rule_;
};

struct DeterministicStrategy {
    std::vector<std::size_t> assignment;  // input index -> output index

    std::size_t operator()(std::size_t input) const { return assignment.at(input); }
    friend bool operator==(const DeterministicStrategy &, const DeterministicStrategy &) = default;
};

inline bool check_synchronous(const SynchronousGame &g) {
    for (std::size_t i = 0; i < g.num_inputs(); ++i) {
        for (std::size_t x = 0; x < g.num_outputs(); ++x) {
            for (std::size_t y = 0; y < g.num_outputs(); ++y) {
                if (x != y && g(x, y, i, i)) return false;
            }
        }
    }
    return true;
}

namespace detail {
inline void require_total(const DeterministicStrategy &s, const SynchronousGame &g) {
    if (s.assignment.size() != g.num_inputs()) {
        throw Error(ErrorKind::DimensionMismatch, "strategy is not total on the input set");
    }
    for (auto o : s.assignment) {
        if (o >= g.num_outputs()) throw Error(ErrorKind::DimensionMismatch, "strategy answers an unknown output");
    }
}
}  // namespace detail

inline GameValue game_value(const DeterministicStrategy &s, const SynchronousGame &g) {
    detail::require_total(s, g);
    const std::size_t n = g.num_inputs();
    GameValue v{0, static_cast<std::uint64_t>(n) * n};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) v.wins += g(s(i), s(j), i, j) ? 1 : 0;
    }
    return v;
}

inline bool is_perfect(const DeterministicStrategy &s, const SynchronousGame &g) {
    detail::require_total(s, g);
    for (std::size_t i = 0; i < g.num_inputs(); ++i) {
        for (std::size_t j = 0; j < g.num_inputs(); ++j) {
            if (!g(s(i), s(j), i, j)) return false;
        }
    }
    return true;
}

struct SearchStats {
    std::uint64_t nodes = 0;
    bool exhausted = false;
};

/// Index-ordered backtracking. Returns the first perfect strategy in
/// lexicographic order of (output of input 0, output of input 1, ...), or
/// nullopt once the whole tree has been refuted.
inline std::optional<DeterministicStrategy> find_perfect_deterministic(const SynchronousGame &g,
                                                                       const Limits &lim = {},
                                                                       SearchStats *stats = nullptr) {
    const std::size_t n = g.num_inputs();
    std::vector<std::vector<std::size_t>> cand(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x = 0; x < g.num_outputs(); ++x) {
            if (g(x, x, i, i)) cand[i].push_back(x);
        }
    }
    SearchStats local;
    std::vector<std::size_t> assign(n, 0);

    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (auto x : cand[i]) {
            if (++local.nodes > lim.search_budget) {
                throw Error(ErrorKind::SearchBudgetExceeded,
                            "strategy search exceeded " + std::to_string(lim.search_budget) + " nodes");
            }
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) ok = g(assign[k], x, k, i) && g(x, assign[k], i, k);
            if (!ok) continue;
            assign[i] = x;
            if (dfs(i + 1)) return true;
        }
        return false;
    };

    const bool found = dfs(0);
    local.exhausted = !found;
    if (stats) *stats = local;
    if (!found) return std::nullopt;
    return DeterministicStrategy{assign};
}

struct BestStrategy {
    DeterministicStrategy strategy;
    GameValue value;
};

/// Exact maximum of game_value over deterministic strategies, by branch and
/// bound. Outputs that never take part in a winning tuple for an input are
/// dropped from that input's branch set (they score 0 on every pair touching
/// that input, so any other answer is at least as good).
inline BestStrategy best_deterministic(const SynchronousGame &g, const Limits &lim = {},
                                       SearchStats *stats = nullptr) {
    const std::size_t n = g.num_inputs(), no = g.num_outputs();
    if (n == 0) return {{}, {0, 0}};
    if (no == 0) throw Error(ErrorKind::DimensionMismatch, "game has no outputs");

    std::vector<std::vector<std::size_t>> cand(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x = 0; x < no; ++x) {
            bool useful = false;
            for (std::size_t j = 0; j < n && !useful; ++j) {
                for (std::size_t y = 0; y < no && !useful; ++y) useful = g(x, y, i, j) || g(y, x, j, i);
            }
            if (useful) cand[i].push_back(x);
        }
        if (cand[i].empty()) cand[i].push_back(0);
    }

    // remaining[i] = pairs involving inputs i.. with all earlier inputs, plus themselves
    std::vector<std::uint64_t> remaining(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) remaining[i] = remaining[i + 1] + 1 + 2 * i;

    SearchStats local;
    std::vector<std::size_t> assign(n, 0);
    BestStrategy best{{std::vector<std::size_t>(n, cand[0][0])}, {0, static_cast<std::uint64_t>(n) * n}};
    for (std::size_t i = 0; i < n; ++i) best.strategy.assignment[i] = cand[i][0];
    best.value = game_value(best.strategy, g);

    std::function<void(std::size_t, std::uint64_t)> dfs = [&](std::size_t i, std::uint64_t wins) {
        if (i == n) {
            if (wins > best.value.wins) {
                best.value.wins = wins;
                best.strategy.assignment = assign;
            }
            return;
        }
        for (auto x : cand[i]) {
            if (++local.nodes > lim.search_budget) {
                throw Error(ErrorKind::SearchBudgetExceeded,
                            "value search exceeded " + std::to_string(lim.search_budget) + " nodes");
            }
            std::uint64_t gain = g(x, x, i, i) ? 1 : 0;
            for (std::size_t k = 0; k < i; ++k) gain += (g(assign[k], x, k, i) ? 1 : 0) + (g(x, assign[k], i, k) ? 1 : 0);
            if (wins + gain + remaining[i + 1] <= best.value.wins) continue;
            assign[i] = x;
            dfs(i + 1, wins + gain);
            if (best.value.is_one()) return;
        }
    };
    if (!best.value.is_one()) dfs(0, 0);
    local.exhausted = true;
    if (stats) *stats = local;
    return best;
}

// ---------------------------------------------------------------------------
// syncLCS(A, b)

/// The game together with the solution vector behind each output index.
/// Outputs are the lexicographically sorted union of the S_i followed by one
/// bucket standing for every other vector of Z_p^n; the bucket loses on every
/// question, so the rest of Z_p^n need not be stored.
struct LcsGame {
    SynchronousGame game;
    std::vector<ZpVector> outputs;
    std::vector<RowData> rows;

    std::size_t losing_output() const { return outputs.size(); }

    std::optional<std::size_t> output_index(const ZpVector &x) const {
        auto it = std::lower_bound(outputs.begin(), outputs.end(), x);
        if (it == outputs.end() || !(*it == x)) return std::nullopt;
        return static_cast<std::size_t>(it - outputs.begin());
    }
};

inline LcsGame build_synclcs_game(const LinearSystem &sys, const Limits &lim = {}) {
    auto rows = all_rows(sys, lim);
    const std::size_t m = sys.rows();

    std::vector<ZpVector> outputs;
    for (const auto &r : rows) outputs.insert(outputs.end(), r.solutions.begin(), r.solutions.end());
    std::sort(outputs.begin(), outputs.end());
    outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());

    // member[o * m + i]: output o lies in S_i
    std::vector<char> member(outputs.size() * m, 0);
    for (const auto &r : rows) {
        for (const auto &x : r.solutions) {
            auto o = static_cast<std::size_t>(std::lower_bound(outputs.begin(), outputs.end(), x) - outputs.begin());
            member[o * m + (r.index - 1)] = 1;
        }
    }
    std::vector<IndexSet> shared(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) shared[i * m + j] = intersect(rows[i].support, rows[j].support);
    }

    std::vector<std::string> in_labels, out_labels;
    for (std::size_t i = 1; i <= m; ++i) in_labels.push_back(std::to_string(i));
    for (const auto &x : outputs) out_labels.push_back(x.str());
    out_labels.push_back("other");

    const std::size_t stored = outputs.size();
    auto rule = [m, stored, member = std::move(member), shared = std::move(shared), outputs](
                    std::size_t x, std::size_t y, std::size_t i, std::size_t j) {
        if (x >= stored || y >= stored) return false;
        if (!member[x * m + i] || !member[y * m + j]) return false;
        for (auto k : shared[i * m + j]) {
            if (outputs[x][k - 1] != outputs[y][k - 1]) return false;
        }
        return true;
    };
    return LcsGame{SynchronousGame(std::move(in_labels), std::move(out_labels), std::move(rule)), std::move(outputs),
                   std::move(rows)};
}

/// Answer each question i with x* restricted to V_i.
inline DeterministicStrategy strategy_from_solution(const LcsGame &lg, const ZpVector &xstar) {
    DeterministicStrategy s;
    for (const auto &r : lg.rows) {
        ZpVector x(xstar.modulus(), xstar.size());
        for (auto k : r.support) x[k - 1] = xstar[k - 1];
        auto o = lg.output_index(x);
        if (!o) throw Error(ErrorKind::NotASolution, "restriction of x* is not in S_" + std::to_string(r.index));
        s.assignment.push_back(*o);
    }
    return s;
}

}  // namespace lcs
