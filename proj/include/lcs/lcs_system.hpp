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

// Linear constraint systems Ax = b over Z_p: row supports V_i, the per-row
// solution sets S_i, and compatibility of row solutions.

#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lcs/zp.hpp"

namespace lcs {

class LinearSystem {
   public:
    LinearSystem(ZpMatrix a, ZpVector b) : a_(std::move(a)), b_(std::move(b)) {
        require_prime(a_.modulus());
        if (b_.modulus() != a_.modulus()) throw Error(ErrorKind::DimensionMismatch, "A and b moduli differ");
        if (b_.size() != a_.rows()) {
            throw Error(ErrorKind::DimensionMismatch, "b has length " + std::to_string(b_.size()) + " but A has " +
                                                          std::to_string(a_.rows()) + " rows");
        }
    }
    LinearSystem(Elem p, const std::vector<std::vector<std::int64_t>> &a, const std::vector<std::int64_t> &b)
        : LinearSystem(ZpMatrix(checked(p), a), ZpVector(p, b)) {}

    Elem p() const { return a_.modulus(); }
    std::size_t rows() const { return a_.rows(); }
    std::size_t cols() const { return a_.cols(); }
    const ZpMatrix &a() const { return a_; }
    const ZpVector &b() const { return b_; }

    /// Same A, right-hand side replaced by zero.
    LinearSystem homogeneous() const { return LinearSystem(a_, ZpVector(p(), rows())); }

    friend bool operator==(const LinearSystem &, const LinearSystem &) = default;

   private:
    static Elem checked(Elem p) {
        require_prime(p);
        return p;
    }

    ZpMatrix a_;
    ZpVector b_;
};

inline void check_row(const LinearSystem &sys, std::size_t i) {
    if (i < 1 || i > sys.rows()) {
        throw Error(ErrorKind::RowOutOfRange,
                    "row " + std::to_string(i) + " outside 1.." + std::to_string(sys.rows()));
    }
}

/// V_i: 1-based columns where row i of A is nonzero.
inline IndexSet row_support(const LinearSystem &sys, std::size_t i) {
    check_row(sys, i);
    return support(sys.a().row(i - 1));
}

/// S_i: solutions of equation i supported inside V_i, as full length-n
/// vectors in lexicographic order.
inline std::vector<ZpVector> row_solutions(const LinearSystem &sys, std::size_t i, const Limits &lim = {}) {
    const auto vi = row_support(sys, i);
    const Elem p = sys.p();
    const std::size_t n = sys.cols();
    const Elem bi = sys.b()[i - 1];
    if (vi.empty()) {
        if (bi == 0) return {ZpVector(p, n)};
        return {};
    }
    ZpMatrix restricted(p, 1, vi.size());
    for (std::size_t k = 0; k < vi.size(); ++k) restricted(0, k) = sys.a()(i - 1, vi[k] - 1);
    auto sol = gauss_solve(restricted, ZpVector(p, std::vector<Elem>{bi}));
    auto local = enumerate_affine(*sol, lim);  // a nonzero row is always consistent

    std::vector<ZpVector> out;
    out.reserve(local.size());
    for (const auto &loc : local) {
        ZpVector full(p, n);
        for (std::size_t k = 0; k < vi.size(); ++k) full[vi[k] - 1] = loc[k];
        out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool solves_row(const LinearSystem &sys, std::size_t i, const ZpVector &x) {
    if (x.size() != sys.cols() || x.modulus() != sys.p()) return false;
    const auto row = sys.a().row(i - 1);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] != 0 && row[k] == 0) return false;
        acc = (acc + std::uint64_t{row[k]} * x[k]) % sys.p();
    }
    return acc == sys.b()[i - 1];
}

inline IndexSet intersect(const IndexSet &a, const IndexSet &b) {
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// x in S_i and y in S_j agree on every shared variable of rows i and j.
inline bool compatible(const LinearSystem &sys, std::size_t i, std::size_t j, const ZpVector &x, const ZpVector &y) {
    check_row(sys, i);
    check_row(sys, j);
    if (!solves_row(sys, i, x)) throw Error(ErrorKind::NotASolution, x.str() + " is not in S_" + std::to_string(i));
    if (!solves_row(sys, j, y)) throw Error(ErrorKind::NotASolution, y.str() + " is not in S_" + std::to_string(j));
    for (auto k : intersect(row_support(sys, i), row_support(sys, j))) {
        if (x[k - 1] != y[k - 1]) return false;
    }
    return true;
}

struct RowData {
    std::size_t index = 0;
    IndexSet support;
    std::vector<ZpVector> solutions;
};

inline std::vector<RowData> all_rows(const LinearSystem &sys, const Limits &lim = {}) {
    std::vector<RowData> rows;
    rows.reserve(sys.rows());
    for (std::size_t i = 1; i <= sys.rows(); ++i) {
        rows.push_back({i, row_support(sys, i), row_solutions(sys, i, lim)});
    }
    return rows;
}

inline bool is_solution(const LinearSystem &sys, const ZpVector &x) {
    return x.size() == sys.cols() && x.modulus() == sys.p() && sys.a() * x == sys.b();
}

// ---------------------------------------------------------------------------
// Validation

enum class Verdict { Pass, Warn, Fail };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Warn: return "warn";
        case Verdict::Fail: return "fail";
    }
    return "?";
}

struct ValidationItem {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationItem> items;

    bool ok() const {
        return std::none_of(items.begin(), items.end(), [](const auto &it) { return it.verdict == Verdict::Fail; });
    }
    const ValidationItem *find(std::string_view name) const {
        for (const auto &it : items) {
            if (it.name == name) return &it;
        }
        return nullptr;
    }
};

/// Validates raw (unreduced) input. Never throws; structural problems are
/// reported as failures and stop the remaining checks.
inline ValidationReport validate_system(std::int64_t p, const std::vector<std::vector<std::int64_t>> &a,
                                        const std::vector<std::int64_t> &b) {
    ValidationReport rep;
    const bool prime = p > 1 && is_prime(static_cast<std::uint64_t>(p)) && p < (std::int64_t{1} << 31);
    rep.items.push_back({"modulus_prime", prime ? Verdict::Pass : Verdict::Fail,
                         prime ? "p = " + std::to_string(p) : "modulus " + std::to_string(p) + " is not prime"});

    const std::size_t m = a.size();
    const std::size_t n = m ? a.front().size() : 0;
    std::string shape_msg = std::to_string(m) + "x" + std::to_string(n) + ", b length " + std::to_string(b.size());
    bool shape_ok = true;
    for (std::size_t r = 0; r < m; ++r) {
        if (a[r].size() != n) {
            shape_ok = false;
            shape_msg = "row " + std::to_string(r + 1) + " has " + std::to_string(a[r].size()) + " entries, expected " +
                        std::to_string(n);
            break;
        }
    }
    if (shape_ok && b.size() != m) {
        shape_ok = false;
        shape_msg = "b has length " + std::to_string(b.size()) + " but A has " + std::to_string(m) + " rows";
    }
    rep.items.push_back({"shape", shape_ok ? Verdict::Pass : Verdict::Fail, shape_msg});
    if (!prime || !shape_ok) return rep;

    LinearSystem sys(static_cast<Elem>(p), a, b);
    std::vector<std::size_t> empty_rows;
    for (std::size_t i = 1; i <= m; ++i) {
        if (row_support(sys, i).empty() && sys.b()[i - 1] != 0) empty_rows.push_back(i);
    }
    if (empty_rows.empty()) {
        rep.items.push_back({"zero_rows", Verdict::Pass, "no zero row with nonzero right-hand side"});
    } else {
        std::string msg = "S_i empty for rows";
        for (auto i : empty_rows) msg += " " + std::to_string(i);
        msg += "; the game algebra is the zero algebra";
        rep.items.push_back({"zero_rows", Verdict::Warn, msg});
    }

    std::map<std::vector<Elem>, std::size_t> seen;
    std::string dups;
    for (std::size_t i = 1; i <= m; ++i) {
        auto [it, fresh] = seen.emplace(sys.a().row(i - 1).values(), i);
        if (!fresh) dups += " " + std::to_string(it->second) + "=" + std::to_string(i);
    }
    rep.items.push_back({"duplicate_rows", dups.empty() ? Verdict::Pass : Verdict::Warn,
                         dups.empty() ? "no duplicate rows" : "duplicate rows:" + dups});

    const bool consistent = gauss_solve(sys.a(), sys.b()).has_value();
    rep.items.push_back({"classical_solvability", consistent ? Verdict::Pass : Verdict::Warn,
                         consistent ? "system is consistent" : "system inconsistent (no classical solution)"});
    return rep;
}

inline ValidationReport validate_system(const LinearSystem &sys) {
    std::vector<std::vector<std::int64_t>> a(sys.rows(), std::vector<std::int64_t>(sys.cols()));
    std::vector<std::int64_t> b(sys.rows());
    for (std::size_t r = 0; r < sys.rows(); ++r) {
        for (std::size_t c = 0; c < sys.cols(); ++c) a[r][c] = sys.a()(r, c);
        b[r] = sys.b()[r];
    }
    return validate_system(sys.p(), a, b);
}

/// 64-bit FNV-1a as 16 lowercase hex digits.
inline std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char *hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k, h >>= 4) out[k] = hex[h & 0xf];
    return out;
}

/// Digest of the canonical (reduced) contents; stable across platforms.
inline std::string system_digest(const LinearSystem &sys) {
    std::ostringstream os;
    os << "p=" << sys.p() << ";m=" << sys.rows() << ";n=" << sys.cols() << ";A=";
    for (std::size_t r = 0; r < sys.rows(); ++r) {
        for (std::size_t c = 0; c < sys.cols(); ++c) os << sys.a()(r, c) << ',';
        os << ';';
    }
    os << "b=";
    for (std::size_t r = 0; r < sys.rows(); ++r) os << sys.b()[r] << ',';
    return fnv1a_hex(os.str());
}

namespace builtin {

/// 3x3 grid, variables numbered row-major. Equations 1-3 are the grid rows,
/// 4-6 the columns; only the last column has right-hand side 1.
inline LinearSystem magic_square() {
    return LinearSystem(2,
                        {
                            {1, 1, 1, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 1, 1, 1, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 1, 1, 1},
                            {1, 0, 0, 1, 0, 0, 1, 0, 0},
                            {0, 1, 0, 0, 1, 0, 0, 1, 0},
                            {0, 0, 1, 0, 0, 1, 0, 0, 1},
                        },
                        {0, 0, 0, 0, 0, 1});
}

inline LinearSystem one_eq() { return LinearSystem(2, {{1, 1}}, {0}); }

inline LinearSystem p3_demo() { return LinearSystem(3, {{1, 2, 0}}, {1}); }

inline const std::vector<std::string> &names() {
    static const std::vector<std::string> n = {"magic-square", "one-eq", "p3-demo"};
    return n;
}

inline LinearSystem by_name(std::string_view name) {
    if (name == "magic-square") return magic_square();
    if (name == "one-eq") return one_eq();
    if (name == "p3-demo") return p3_demo();
    throw Error(ErrorKind::UnknownExample, "no built-in example named '" + std::string(name) + "'");
}

}  // namespace builtin

}  // namespace lcs
