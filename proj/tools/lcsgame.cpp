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

// lcsgame: command-line front end. Every command prints one JSON report;
// all fields except "volatile" are a pure function of the inputs and flags.
//
// Exit codes: 0 pass, 1 check failure, 2 validation failure, 3 parse error,
// 4 budget exceeded.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lcs/lcs.hpp"

namespace {

using namespace lcs;

enum Exit : int { kPass = 0, kCheckFailure = 1, kValidationFailure = 2, kParseFailure = 3, kBudgetExceeded = 4 };

int exit_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError: return kParseFailure;
        case ErrorKind::EnumerationTooLarge:
        case ErrorKind::SearchBudgetExceeded: return kBudgetExceeded;
        case ErrorKind::NotPrime:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::UnknownExample:
        case ErrorKind::NotASolution: return kValidationFailure;
        default: return kCheckFailure;
    }
}

std::string utc_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Options {
    std::string path;
    std::string report_path;
    bool homogeneous = false;
    std::string dot_path;
    std::string format = "json";
    std::string out_path;
    std::string rep = "pauli-ms";
    double tol = kDefaultTolerance;
    bool all_products = false;
    std::string example;
};

class Report {
   public:
    Report(std::string command, double tol) {
        j_["command"] = std::move(command);
        j_["toolkit_version"] = kVersion;
        j_["inputs_digest"] = nullptr;
        j_["omega_convention"] = kOmegaConvention;
        j_["tolerance"] = tol;
        j_["results"] = Json::object();
        j_["checks"] = Json::array();
    }

    void digest(const std::string &d) { j_["inputs_digest"] = d; }
    Json &results() { return j_["results"]; }
    void checks(const CheckReport &c) { j_["checks"] = checks_to_json(c); }

    int finish(int code, const std::string &note, const Options &o) {
        Json s;
        s["verdict"] = code == kPass ? "pass" : "fail";
        s["exit_code"] = code;
        s["note"] = note;
        j_["summary"] = s;
        j_["volatile"] = Json{{"timestamp", utc_now()}};
        const auto text = j_.dump(2) + "\n";
        if (o.report_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream(o.report_path, std::ios::binary) << text;
        }
        return code;
    }

    int fail(const Error &e, const Options &o) {
        j_["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
        return finish(exit_for(e.kind()), e.what(), o);
    }

   private:
    Json j_;
};

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << text;
}

// Loads and validates; a structural failure is reported with exit 2.
struct Loaded {
    std::optional<LinearSystem> sys;
    ValidationReport validation;
};

Loaded load_system(const std::string &path) {
    const auto sf = parse_system(read_file(path));
    Loaded l;
    l.validation = sf.validate();
    if (l.validation.ok()) l.sys = sf.to_system();
    return l;
}

Json vec_json(const ZpVector &x) { return x.values(); }

std::optional<ZpVector> classical_solution(const LinearSystem &sys) {
    auto s = gauss_solve(sys.a(), sys.b());
    if (!s) return std::nullopt;
    return s->particular;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options &o) {
    Report r("validate", o.tol);
    const auto sf = parse_system(read_file(o.path));
    const auto v = sf.validate();
    if (v.ok()) r.digest(system_digest(sf.to_system()));
    r.results()["validation"] = validation_to_json(v);
    if (!v.ok()) return r.finish(kValidationFailure, "structural failure", o);
    const auto *cs = v.find("classical_solvability");
    const bool inconsistent = cs && cs->verdict == Verdict::Warn;
    return r.finish(kPass, inconsistent ? "classically inconsistent" : "valid", o);
}

int cmd_analyze(const Options &o, const Limits &lim) {
    Report r("analyze", o.tol);
    const auto l = load_system(o.path);
    r.results()["validation"] = validation_to_json(l.validation);
    if (!l.sys) return r.finish(kValidationFailure, "structural failure", o);
    const auto &sys = *l.sys;
    r.digest(system_digest(sys));
    try {
        Json rows = Json::array();
        for (const auto &rd : all_rows(sys, lim)) {
            rows.push_back(Json{{"row", rd.index},
                                {"support", rd.support},
                                {"support_size", rd.support.size()},
                                {"solutions", rd.solutions.size()}});
        }
        r.results()["p"] = sys.p();
        r.results()["m"] = sys.rows();
        r.results()["n"] = sys.cols();
        r.results()["rows"] = rows;
        r.results()["classically_solvable"] = classical_solution(sys).has_value();
        Json warnings = Json::array();
        for (const auto &it : l.validation.items) {
            if (it.verdict == Verdict::Warn) warnings.push_back(it.name + ": " + it.message);
        }
        r.results()["warnings"] = warnings;
        for (bool hom : {false, true}) {
            const auto G = build_game_graph(sys, hom, lim);
            r.results()[hom ? "graph_A_0" : "graph_A_b"] = Json{{"vertices", G.size()}, {"edges", G.edge_count()}};
        }
    } catch (const Error &e) {
        return r.fail(e, o);
    }
    return r.finish(kPass, "analyzed", o);
}

int cmd_solve(const Options &o, const Limits &lim) {
    Report r("solve", o.tol);
    const auto l = load_system(o.path);
    if (!l.sys) {
        r.results()["validation"] = validation_to_json(l.validation);
        return r.finish(kValidationFailure, "structural failure", o);
    }
    const auto &sys = *l.sys;
    r.digest(system_digest(sys));
    try {
        const auto g = gauss_solve(sys.a(), sys.b());
        Json gj;
        gj["consistent"] = g.has_value();
        if (g) {
            gj["particular"] = vec_json(g->particular);
            gj["nullity"] = g->basis.size();
        }
        r.results()["gauss_solve"] = gj;

        const auto lg = build_synclcs_game(sys, lim);
        SearchStats st;
        const auto perfect = find_perfect_deterministic(lg.game, lim, &st);
        Json sj;
        sj["perfect_strategy_exists"] = perfect.has_value();
        sj["nodes"] = st.nodes;
        if (perfect) {
            Json assign = Json::array();
            for (std::size_t i = 0; i < perfect->assignment.size(); ++i) {
                assign.push_back(Json{{"row", i + 1}, {"answer", lg.game.output_labels()[perfect->assignment[i]]}});
            }
            sj["strategy"] = assign;
            sj["value"] = game_value(*perfect, lg.game).reduced_str();
        } else {
            SearchStats bst;
            const auto best = best_deterministic(lg.game, lim, &bst);
            sj["value"] = best.value.str();
            sj["value_reduced"] = best.value.reduced_str();
            sj["best_nodes"] = bst.nodes;
        }
        r.results()["synclcs"] = sj;
        if (g.has_value() != perfect.has_value()) {
            return r.finish(kCheckFailure, "gauss_solve and strategy search disagree", o);
        }
        return r.finish(kPass, perfect ? "perfect deterministic strategy" : "no perfect deterministic strategy", o);
    } catch (const Error &e) {
        return r.fail(e, o);
    }
}

int cmd_graph(const Options &o, const Limits &lim) {
    Report r("graph", o.tol);
    const auto l = load_system(o.path);
    if (!l.sys) {
        r.results()["validation"] = validation_to_json(l.validation);
        return r.finish(kValidationFailure, "structural failure", o);
    }
    r.digest(system_digest(*l.sys));
    try {
        const auto G = build_game_graph(*l.sys, o.homogeneous, lim);
        r.results()["graph"] = o.homogeneous ? "G_A_0" : "G_A_b";
        r.results()["vertices"] = G.size();
        r.results()["edges"] = G.edge_count();
        const auto dot = export_dot(G);
        r.results()["dot_digest"] = fnv1a_hex(dot);
        if (!o.dot_path.empty()) write_text(o.dot_path, dot);
    } catch (const Error &e) {
        return r.fail(e, o);
    }
    return r.finish(kPass, "graph built", o);
}

int cmd_iso(const Options &o, const Limits &lim) {
    Report r("iso", o.tol);
    const auto l = load_system(o.path);
    if (!l.sys) {
        r.results()["validation"] = validation_to_json(l.validation);
        return r.finish(kValidationFailure, "structural failure", o);
    }
    const auto &sys = *l.sys;
    r.digest(system_digest(sys));
    try {
        const auto G = build_game_graph(sys, false, lim);
        const auto H = build_game_graph(sys, true, lim);
        SearchStats st;
        const auto f = find_isomorphism(G, H, lim, &st);
        Json ij;
        ij["vertices"] = G.size();
        ij["found"] = f.has_value();
        ij["nodes"] = st.nodes;
        ij["exhausted"] = st.exhausted;
        if (f) {
            ij["verified"] = is_isomorphism(G, H, *f);
            ij["identity"] = f->is_identity();
            ij["forward"] = f->forward;
        }
        r.results()["search"] = ij;

        const auto xs = classical_solution(sys);
        r.results()["classically_solvable"] = xs.has_value();
        if (xs) {
            const auto t = translate_isomorphism(sys, *xs, lim);
            r.results()["translation"] = Json{{"solution", vec_json(*xs)}, {"verified", true}, {"forward", t.forward}};
        }
        if (xs.has_value() != f.has_value()) return r.finish(kCheckFailure, "search and gauss_solve disagree", o);
        if (f && !is_isomorphism(G, H, *f)) return r.finish(kCheckFailure, "search result fails verification", o);
        return r.finish(kPass, f ? "isomorphic" : "not isomorphic", o);
    } catch (const Error &e) {
        return r.fail(e, o);
    }
}

int cmd_group(const Options &o) {
    Report r("group", o.tol);
    const auto l = load_system(o.path);
    if (!l.sys) {
        r.results()["validation"] = validation_to_json(l.validation);
        return r.finish(kValidationFailure, "structural failure", o);
    }
    r.digest(system_digest(*l.sys));
    const auto pres = build_presentation(*l.sys);
    Json counts;
    for (auto f : {RelationFamily::OrderG, RelationFamily::OrderJ, RelationFamily::CentralJ,
                   RelationFamily::RowCommutation, RelationFamily::RowProduct}) {
        counts[std::string(to_string(f))] = pres.count(f);
    }
    r.results()["relations"] = pres.relations.size();
    r.results()["by_family"] = counts;
    r.results()["format"] = o.format;
    const auto text = o.format == "relators" ? pres.relators_text() : presentation_to_json(pres).dump(2) + "\n";
    r.results()["presentation_digest"] = fnv1a_hex(text);
    try {
        if (!o.out_path.empty()) write_text(o.out_path, text);
    } catch (const Error &e) {
        return r.fail(e, o);
    }
    return r.finish(kPass, "presentation built", o);
}

std::optional<ZpVector> parse_solution(const std::string &s, Elem p) {
    std::vector<std::int64_t> vals;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            vals.push_back(std::stoll(tok, &used));
            if (used != tok.size()) return std::nullopt;
        } catch (const std::exception &) {
            return std::nullopt;
        }
    }
    return ZpVector(p, vals);
}

int cmd_repcheck(const Options &o, const Limits &lim) {
    Report r("repcheck", o.tol);
    const auto l = load_system(o.path);
    if (!l.sys) {
        r.results()["validation"] = validation_to_json(l.validation);
        return r.finish(kValidationFailure, "structural failure", o);
    }
    const auto &sys = *l.sys;
    RepcheckOptions ro;
    ro.tol = o.tol;
    ro.skip_exact_zeros = !o.all_products;
    ro.limits = lim;
    r.results()["source"] = o.rep;
    try {
        CheckReport checks;
        std::string digest = system_digest(sys);
        if (o.rep == "pauli-ms") {
            if (digest != system_digest(builtin::magic_square())) {
                throw Error(ErrorKind::NotASolution, "pauli-ms only applies to the built-in magic square");
            }
            checks = run_all_checks(pauli_magic_square_rep(), sys, ro);
            r.results()["dim"] = 4;
        } else if (o.rep.rfind("scalar:", 0) == 0) {
            const auto x = parse_solution(o.rep.substr(7), sys.p());
            if (!x) throw Error(ErrorKind::ParseError, "scalar solution must be comma-separated integers");
            if (x->size() != sys.cols()) {
                throw Error(ErrorKind::DimensionMismatch, "scalar solution has " + std::to_string(x->size()) +
                                                              " entries, system has " + std::to_string(sys.cols()));
            }
            checks = run_all_checks(scalar_rep_from_solution(sys, *x), sys, ro);
            r.results()["dim"] = 1;
            r.results()["exact"] = true;
        } else {
            const auto text = read_file(o.rep);
            LoadOptions lo;
            lo.tol = o.tol;
            const auto rep = parse_representation(text, lo);
            digest += "+" + fnv1a_hex(text);
            checks = run_all_checks(rep, sys, ro);
            r.results()["dim"] = rep.dim();
        }
        r.digest(digest);
        r.checks(checks);
        r.results()["max_residual"] = checks.max_residual();
        if (const auto *bad = checks.first_failure()) {
            return r.finish(kCheckFailure, "first failure: " + bad->suite + "/" + bad->name + " at " + bad->worst, o);
        }
        return r.finish(kPass, "all residuals within tolerance", o);
    } catch (const Error &e) {
        return r.fail(e, o);
    }
}

int cmd_examples(const Options &o) {
    Report r("examples", o.tol);
    try {
        const auto sys = builtin::by_name(o.example);
        r.digest(system_digest(sys));
        const auto path = o.out_path.empty() ? o.example + ".json" : o.out_path;
        write_text(path, system_file_text(sys));
        r.results()["name"] = o.example;
        r.results()["file"] = path;
        r.results()["p"] = sys.p();
        r.results()["m"] = sys.rows();
        r.results()["n"] = sys.cols();
    } catch (const Error &e) {
        return r.fail(e, o);
    }
    return r.finish(kPass, "example written", o);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Linear constraint system games over Z_p: solving, graphs, presentations and operator checks"};
    app.set_version_flag("--version", std::string(lcs::kVersion));
    app.require_subcommand(1);

    Options o;
    auto add_path = [&](CLI::App *c) {
        c->add_option("path", o.path, "system file { \"p\", \"A\", \"b\" }")->required();
        c->add_option("--report", o.report_path, "write the report here instead of stdout");
    };

    auto *validate = app.add_subcommand("validate", "structural checks on a system file");
    add_path(validate);
    auto *analyze = app.add_subcommand("analyze", "row supports, solution counts, graph sizes");
    add_path(analyze);
    auto *solve = app.add_subcommand("solve", "classical solution and best deterministic strategy");
    add_path(solve);
    auto *graph = app.add_subcommand("graph", "build G_{A,b} (or G_{A,0}) and export DOT");
    add_path(graph);
    graph->add_flag("--homogeneous", o.homogeneous, "use b = 0");
    graph->add_option("--dot", o.dot_path, "DOT output file");
    auto *iso = app.add_subcommand("iso", "search for G_{A,b} ~ G_{A,0}");
    add_path(iso);
    auto *group = app.add_subcommand("group", "solution-group presentation");
    add_path(group);
    group->add_option("--format", o.format, "json or relators")->check(CLI::IsMember({"json", "relators"}));
    group->add_option("-o,--out", o.out_path, "presentation output file");
    auto *repcheck = app.add_subcommand("repcheck", "verify an operator solution against every identity");
    add_path(repcheck);
    repcheck->add_option("--rep", o.rep, "FILE, scalar:<x1,...,xn> or pauli-ms");
    repcheck->add_option("--tol", o.tol, "residual tolerance")->check(CLI::PositiveNumber);
    repcheck->add_flag("--all-products", o.all_products, "multiply out products with an exactly-zero factor");
    auto *examples = app.add_subcommand("examples", "write a built-in system file");
    examples->add_option("name", o.example, "magic-square, one-eq or p3-demo")->required();
    examples->add_option("-o,--out", o.out_path, "output file (default <name>.json)");
    examples->add_option("--report", o.report_path, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kValidationFailure;
    }

    const auto lim = lcs::Limits::from_env();
    try {
        if (*validate) return cmd_validate(o);
        if (*analyze) return cmd_analyze(o, lim);
        if (*solve) return cmd_solve(o, lim);
        if (*graph) return cmd_graph(o, lim);
        if (*iso) return cmd_iso(o, lim);
        if (*group) return cmd_group(o);
        if (*repcheck) return cmd_repcheck(o, lim);
        if (*examples) return cmd_examples(o);
    } catch (const lcs::Error &e) {
        // Failures before a report could be started: unreadable or malformed input.
        std::cerr << "lcsgame: " << e.what() << "\n";
        return exit_for(e.kind());
    }
    return kCheckFailure;
}
