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

// JSON serialisation of systems, representations, presentations, graphs,
// rule tables and check reports. All objects are written with a fixed key
// order so identical inputs produce identical bytes.

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lcs/checks.hpp"
#include "lcs/game_graphs.hpp"
#include "lcs/lcs_system.hpp"
#include "lcs/representation.hpp"
#include "lcs/solution_group.hpp"
#include "lcs/sync_game.hpp"

namespace lcs {

using Json = nlohmann::ordered_json;

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json parse_json(const std::string &text, const std::string &what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorKind::ParseError, what + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// System files: { "p": int, "A": [[int]], "b": [int] }

/// Unreduced file contents; shape and primality are judged by validate_system.
struct SystemFile {
    std::int64_t p = 0;
    std::vector<std::vector<std::int64_t>> a;
    std::vector<std::int64_t> b;

    ValidationReport validate() const { return validate_system(p, a, b); }
    LinearSystem to_system() const { return LinearSystem(static_cast<Elem>(p), a, b); }
};

inline SystemFile parse_system(const std::string &text) {
    const auto j = parse_json(text, "system file");
    auto fail = [](const std::string &msg) { return Error(ErrorKind::ParseError, "system file: " + msg); };
    if (!j.is_object()) throw fail("top level must be an object");
    for (const char *key : {"p", "A", "b"}) {
        if (!j.contains(key)) throw fail(std::string("missing \"") + key + "\"");
    }
    if (!j["p"].is_number_integer()) throw fail("\"p\" must be an integer");
    SystemFile sf;
    sf.p = j["p"].get<std::int64_t>();
    if (!j["A"].is_array()) throw fail("\"A\" must be an array of rows");
    for (const auto &row : j["A"]) {
        if (!row.is_array()) throw fail("every row of \"A\" must be an array");
        std::vector<std::int64_t> r;
        for (const auto &v : row) {
            if (!v.is_number_integer()) throw fail("entries of \"A\" must be integers");
            r.push_back(v.get<std::int64_t>());
        }
        if (!sf.a.empty() && r.size() != sf.a.front().size()) {
            throw fail("ragged rows: row " + std::to_string(sf.a.size() + 1) + " has " + std::to_string(r.size()) +
                       " entries, row 1 has " + std::to_string(sf.a.front().size()));
        }
        sf.a.push_back(std::move(r));
    }
    if (!j["b"].is_array()) throw fail("\"b\" must be an array");
    for (const auto &v : j["b"]) {
        if (!v.is_number_integer()) throw fail("entries of \"b\" must be integers");
        sf.b.push_back(v.get<std::int64_t>());
    }
    return sf;
}

inline Json system_to_json(const LinearSystem &sys) {
    Json j;
    j["p"] = sys.p();
    Json a = Json::array();
    for (std::size_t r = 0; r < sys.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < sys.cols(); ++c) row.push_back(sys.a()(r, c));
        a.push_back(row);
    }
    j["A"] = a;
    Json b = Json::array();
    for (std::size_t r = 0; r < sys.rows(); ++r) b.push_back(sys.b()[r]);
    j["b"] = b;
    return j;
}

/// Canonical system file text: compact rows, one row per line.
inline std::string system_file_text(const LinearSystem &sys) {
    std::ostringstream os;
    os << "{\n  \"p\": " << sys.p() << ",\n  \"A\": [\n";
    for (std::size_t r = 0; r < sys.rows(); ++r) {
        os << "    [";
        for (std::size_t c = 0; c < sys.cols(); ++c) os << (c ? ", " : "") << sys.a()(r, c);
        os << "]" << (r + 1 < sys.rows() ? "," : "") << "\n";
    }
    os << "  ],\n  \"b\": [";
    for (std::size_t r = 0; r < sys.rows(); ++r) os << (r ? ", " : "") << sys.b()[r];
    os << "]\n}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Representation files

inline Json matrix_to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(row);
    }
    return rows;
}

template <class T>
Json representation_to_json(const Representation<T> &rep) {
    Json j;
    j["p"] = rep.p;
    j["dim"] = rep.dim();
    j["omega_convention"] = kOmegaConvention;
    Json gens;
    for (std::size_t k = 1; k <= rep.num_vars(); ++k) gens["g" + std::to_string(k)] = matrix_to_json(to_complex(rep.image(k)));
    gens["J"] = matrix_to_json(to_complex(rep.J));
    j["generators"] = gens;
    return j;
}

enum class QuotientPolicy { Require, Warn };

struct LoadOptions {
    double tol = kDefaultTolerance;
    QuotientPolicy quotient = QuotientPolicy::Require;
};

namespace detail {
inline ComplexMatrix matrix_from_json(const Json &j, std::size_t dim, const std::string &name) {
    auto fail = [&](const std::string &msg) { return Error(ErrorKind::ParseError, "generator " + name + ": " + msg); };
    if (!j.is_array() || j.size() != dim) throw fail("expected " + std::to_string(dim) + " rows");
    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const auto &row = j[r];
        if (!row.is_array() || row.size() != dim) throw fail("matrix is not square " + std::to_string(dim) + "x" + std::to_string(dim));
        for (std::size_t c = 0; c < dim; ++c) {
            const auto &e = row[c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw fail("entries must be [re, im] pairs");
            }
            m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}
}  // namespace detail

inline ComplexRepresentation parse_representation(const std::string &text, const LoadOptions &opt = {}) {
    const auto j = parse_json(text, "representation file");
    auto fail = [](const std::string &msg) { return Error(ErrorKind::ParseError, "representation file: " + msg); };
    if (!j.is_object()) throw fail("top level must be an object");
    if (!j.contains("p") || !j["p"].is_number_integer()) throw fail("\"p\" must be an integer");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1) {
        throw fail("\"dim\" must be a positive integer");
    }
    if (j.contains("omega_convention") && j["omega_convention"] != kOmegaConvention) {
        throw fail(std::string("unsupported omega_convention, expected ") + kOmegaConvention);
    }
    if (!j.contains("generators") || !j["generators"].is_object()) throw fail("\"generators\" must be an object");
    const auto p = j["p"].get<std::int64_t>();
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw fail("p = " + std::to_string(p) + " is not prime");

    const auto dim = j["dim"].get<std::size_t>();
    const auto &gens = j["generators"];
    if (!gens.contains("J")) throw fail("missing generator J");
    ComplexRepresentation rep;
    rep.p = static_cast<Elem>(p);
    std::size_t n = gens.size() - 1;
    for (std::size_t k = 1; k <= n; ++k) {
        const auto name = "g" + std::to_string(k);
        if (!gens.contains(name)) throw fail("generators must be g1..g" + std::to_string(n) + " and J; missing " + name);
        rep.g.push_back(detail::matrix_from_json(gens[name], dim, name));
    }
    rep.J = detail::matrix_from_json(gens["J"], dim, "J");

    for (std::size_t k = 0; k <= n; ++k) {
        const auto &m = k < n ? rep.g[k] : rep.J;
        const auto name = k < n ? "g" + std::to_string(k + 1) : std::string("J");
        const double r = unitarity_residual(m);
        if (!(r <= opt.tol)) {
            throw Error(ErrorKind::UnitarityViolation, name + " is not unitary (residual " + std::to_string(r) + ")");
        }
    }
    const double jr = j_identification_residual(rep);
    rep.j_identified = jr <= opt.tol;
    if (!rep.j_identified) {
        const std::string msg = "J is not w*I (residual " + std::to_string(jr) + ")";
        if (opt.quotient == QuotientPolicy::Require) throw Error(ErrorKind::JNotIdentified, msg);
        rep.warnings.push_back("JNotIdentified: " + msg);
    }
    return rep;
}

inline ComplexRepresentation load_representation(const std::string &path, const LoadOptions &opt = {}) {
    return parse_representation(read_file(path), opt);
}

// ---------------------------------------------------------------------------
// Presentations, graphs, games

inline Json word_to_json(const Word &w) {
    Json out = Json::array();
    for (const auto &f : w.factors) out.push_back(Json::array({generator_name(f.gen), f.exp}));
    return out;
}

inline Json presentation_to_json(const GroupPresentation &pres) {
    Json j;
    j["p"] = pres.p;
    Json gens = Json::array();
    for (std::size_t k = 1; k <= pres.n; ++k) gens.push_back(generator_name(k));
    gens.push_back("J");
    j["generators"] = gens;
    Json rels = Json::array();
    for (const auto &r : pres.relations) {
        Json e;
        e["family"] = to_string(r.family);
        e["row"] = r.row ? Json(*r.row) : Json(nullptr);
        e["relator"] = r.text;
        e["word"] = word_to_json(r.word);
        rels.push_back(e);
    }
    j["relations"] = rels;
    return j;
}

inline Json graph_to_json(const GameGraph &G) {
    Json j;
    j["graph"] = G.homogeneous() ? "G_A_0" : "G_A_b";
    j["system_digest"] = G.system_digest();
    Json verts = Json::array();
    for (const auto &v : G.vertices()) {
        Json e;
        e["row"] = v.row;
        e["x"] = v.x.values();
        verts.push_back(e);
    }
    j["vertices"] = verts;
    Json adj = Json::array();
    for (std::size_t u = 0; u < G.size(); ++u) {
        Json nbrs = Json::array();
        for (std::size_t w = 0; w < G.size(); ++w) {
            if (G.adjacent(u, w)) nbrs.push_back(w);
        }
        adj.push_back(nbrs);
    }
    j["adjacency"] = adj;
    return j;
}

/// Winning tuples (i, j, x, y) of a game, by label. Refuses games with more
/// than `cap` candidate tuples.
inline Json rule_table_to_json(const SynchronousGame &g, std::uint64_t cap = 1u << 22) {
    const std::uint64_t ni = g.num_inputs(), no = g.num_outputs();
    if (ni * ni * no * no > cap) {
        throw Error(ErrorKind::EnumerationTooLarge, "rule table has " + std::to_string(ni * ni * no * no) + " cells");
    }
    Json j;
    j["inputs"] = g.input_labels();
    j["outputs"] = g.output_labels();
    Json wins = Json::array();
    for (std::size_t i = 0; i < ni; ++i) {
        for (std::size_t k = 0; k < ni; ++k) {
            for (std::size_t x = 0; x < no; ++x) {
                for (std::size_t y = 0; y < no; ++y) {
                    if (g(x, y, i, k)) wins.push_back(Json::array({i, k, x, y}));
                }
            }
        }
    }
    j["winning"] = wins;
    return j;
}

inline Json checks_to_json(const CheckReport &rep) {
    Json out = Json::array();
    for (const auto &c : rep.checks) {
        Json e;
        e["suite"] = c.suite;
        e["name"] = c.name;
        e["residual"] = c.residual;
        e["tolerance"] = c.tolerance;
        e["count"] = c.count;
        e["verdict"] = c.pass() ? "pass" : "fail";
        e["worst"] = c.worst;
        out.push_back(e);
    }
    return out;
}

inline Json validation_to_json(const ValidationReport &rep) {
    Json out = Json::array();
    for (const auto &it : rep.items) {
        Json e;
        e["name"] = it.name;
        e["verdict"] = to_string(it.verdict);
        e["message"] = it.message;
        out.push_back(e);
    }
    return out;
}

}  // namespace lcs
