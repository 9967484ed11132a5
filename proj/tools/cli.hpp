#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cwlcp/cwlcp.hpp"

namespace cwlcp::cli {

enum ExitCode : int {
    ok = 0,
    usage = 1,
    parse_error = 2,
    validation_error = 3,
    mismatch = 4,
    budget = 5,
    internal = 6,
};

struct Options {
    std::string problem;
    int k = 0;
    std::string gamma;
    std::string sizes;
    std::string required_file;
    std::string expr_file;
    std::string graph_file;
    bool balanced = false;
    bool coloring = false;
    bool json = false;
    bool no_prune = false;
    double budget = oracle::kDefaultBudget;
};

// One answer in a shape shared by the dynamic program, the drivers and the oracles.
struct Answer {
    WeightValue weight;
    std::optional<std::vector<std::string>> colors;  // color name per graph vertex
    int nodes = 0;
    std::size_t memo_entries = 0;
    double elapsed_ms = 0;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw ValidationError("bad integer list '" + s + "'");
        out.push_back(v);
    }
    return out;
}

inline Rational parse_gamma(const std::string& s) {
    if (s.empty()) throw ValidationError("--gamma p/r is required");
    auto slash = s.find('/');
    Rational r;
    try {
        r.num = std::stoll(s.substr(0, slash));
        r.den = slash == std::string::npos ? 1 : std::stoll(s.substr(slash + 1));
    } catch (const std::exception&) {
        throw ValidationError("bad --gamma '" + s + "'");
    }
    return r;
}

// Whitespace-separated vertex names; '#' starts a comment.
inline std::vector<std::string> read_names(const std::string& path) {
    std::vector<std::string> out;
    std::istringstream in(slurp(path));
    for (std::string line; std::getline(in, line);) {
        line = line.substr(0, line.find('#'));
        std::istringstream ls(line);
        for (std::string w; ls >> w;) out.push_back(w);
    }
    return out;
}

struct Instance {
    std::optional<CwExpression> expr;
    Graph graph;
};

inline Instance load_instance(const Options& o, bool need_expr) {
    Instance in;
    if (!o.expr_file.empty()) {
        in.expr = parse_expression(slurp(o.expr_file));
        require_valid(*in.expr);
    } else if (need_expr) {
        throw ValidationError("--expr is required");
    }
    if (!o.graph_file.empty()) {
        in.graph = parse_graph(slurp(o.graph_file));
        if (in.expr && !check_realizes(*in.expr, in.graph))
            throw MismatchError("expression does not realize the graph in '" + o.graph_file + "'");
    } else if (in.expr) {
        in.graph = realize(*in.expr).graph;
    } else {
        throw ValidationError("--graph or --expr is required");
    }
    return in;
}

// Problems answered by a single model solve; nullopt for the driver problems.
inline std::optional<ProblemModel> single_model(const Options& o, const Graph& g) {
    const auto& p = o.problem;
    if (p == "mis") return builtin::max_independent_set(g);
    if (p == "kcoloring") return builtin::k_coloring(g, o.k);
    if (p == "kroman") return builtin::k_roman(g, o.k);
    if (p == "mds") return builtin::min_dominating_set(g);
    if (p == "odd_ds") return builtin::odd_dominating_set(g);
    if (o.sizes.empty()) return std::nullopt;
    const auto sizes = parse_int_list(o.sizes);
    if (p == "global_kroman") return builtin::specified_size_global_k_roman(g, o.k, sizes, ComplementCheck::strict);
    if (p == "global_kroman_literal") return builtin::specified_size_global_k_roman(g, o.k, sizes, ComplementCheck::literal);
    if (p == "community") return builtin::specified_size_k_community(g, o.k, sizes);
    if (p == "pds") {
        if (sizes.size() != 2) throw ValidationError("pds: --sizes expects |S|,|V\\S|");
        std::vector<std::string> req;
        if (!o.required_file.empty()) req = read_names(o.required_file);
        return builtin::specified_size_pds(g, sizes[0], sizes[1], req);
    }
    if (p == "quasi_clique") {
        if (sizes.size() != 1) throw ValidationError("quasi_clique: --sizes expects |S|");
        return builtin::quasi_clique(g, parse_gamma(o.gamma), sizes[0]);
    }
    throw ValidationError("unknown problem '" + p + "'");
}

inline bool is_driver_problem(const std::string& p) {
    return p == "global_kroman" || p == "global_kroman_literal" || p == "community" || p == "pds" || p == "quasi_clique";
}

inline std::vector<std::string> names_by_model(const ProblemModel& m, const Coloring& c) {
    std::vector<std::string> out;
    for (Color a : c) out.push_back(m.color_name(a));
    return out;
}

// Color names used by the driver problems, indexed like their models' colors.
inline std::vector<std::string> driver_color_names(const Options& o) {
    if (o.problem == "community") {
        std::vector<std::string> out;
        for (int i = 1; i <= o.k; ++i) out.push_back(std::to_string(i));
        return out;
    }
    if (o.problem == "pds" || o.problem == "quasi_clique") return {"out", "in"};
    std::vector<std::string> out;
    for (int i = 0; i <= o.k + 1; ++i) out.push_back(std::to_string(i));
    return out;
}

inline Answer solve_answer(const Options& o, const Instance& in) {
    const bool prune = !o.no_prune;
    Answer a;
    a.nodes = in.expr->size();
    if (auto m = single_model(o, in.graph)) {
        auto s = solve(*m, *in.expr, SolveOptions{true, prune});
        if (s.coloring) {
            auto v = oracle::verify_coloring(*m, in.graph, *s.coloring);
            if (!v) throw InternalError("witness fails verification: " + v.diagnostic);
            a.colors = names_by_model(*m, *s.coloring);
        }
        a.weight = s.weight;
        a.memo_entries = s.stats.memo_entries;
        a.elapsed_ms = s.stats.elapsed_ms;
        return a;
    }
    DriverResult r;
    const auto& p = o.problem;
    if (p == "global_kroman" || p == "global_kroman_literal")
        r = solve_global_k_roman(o.k, in.graph, *in.expr, p == "global_kroman" ? ComplementCheck::strict : ComplementCheck::literal, prune);
    else if (p == "community")
        r = solve_k_community(o.k, in.graph, *in.expr, o.balanced, prune);
    else if (p == "pds")
        r = solve_max_pds(in.graph, *in.expr, o.required_file.empty() ? std::vector<std::string>{} : read_names(o.required_file), prune);
    else
        r = solve_max_quasi_clique(parse_gamma(o.gamma), in.graph, *in.expr, prune);
    a.weight = r.weight;
    if (r.coloring) {
        const auto names = driver_color_names(o);
        a.colors.emplace();
        for (Color c : *r.coloring) a.colors->push_back(names.at(c));
    }
    a.memo_entries = r.memo_entries;
    a.elapsed_ms = r.elapsed_ms;
    return a;
}

inline Answer oracle_answer(const Options& o, const Instance& in) {
    Answer a;
    if (auto m = single_model(o, in.graph)) {
        auto s = oracle::brute_force_solve(*m, in.graph, o.budget);
        a.weight = s.weight;
        if (s.coloring) a.colors = names_by_model(*m, *s.coloring);
        return a;
    }
    const auto& p = o.problem;
    const auto& g = in.graph;
    std::optional<oracle::Witnessed> w;
    if (p == "global_kroman" || p == "global_kroman_literal") {
        w = oracle::min_global_k_roman(g, o.k, o.budget);
    } else if (p == "community") {
        w = oracle::find_k_community(g, o.k, o.balanced, o.budget);
    } else if (p == "pds") {
        std::vector<int> req;
        if (!o.required_file.empty())
            for (const auto& n : read_names(o.required_file)) req.push_back(g.index_of(n));
        w = oracle::max_pds(g, req, o.budget);
    } else {
        w = oracle::max_quasi_clique(g, parse_gamma(o.gamma), o.budget);
    }
    if (w) {
        a.weight = WeightValue(w->value);
        const auto names = driver_color_names(o);
        a.colors.emplace();
        for (int c : w->assignment) a.colors->push_back(names.at(c));
    }
    return a;
}

inline void print_answer(std::ostream& out, const Options& o, const Graph& g, const Answer& a) {
    if (o.json) {
        nlohmann::ordered_json j;
        j["problem"] = o.problem;
        if (a.weight.is_error())
            j["weight"] = "infeasible";
        else
            j["weight"] = a.weight.value();
        if (o.coloring && a.colors) {
            nlohmann::ordered_json c = nlohmann::ordered_json::object();
            for (int v = 0; v < g.vertex_count(); ++v) c[g.name(v)] = (*a.colors)[v];
            j["coloring"] = c;
        }
        j["stats"] = {{"nodes", a.nodes}, {"memo_entries", a.memo_entries}, {"elapsed_ms", a.elapsed_ms}};
        out << j.dump(2) << "\n";
        return;
    }
    out << a.weight << "\n";
    if (o.coloring && a.colors)
        for (int v = 0; v < g.vertex_count(); ++v) out << g.name(v) << " " << (*a.colors)[v] << "\n";
}

// Named problem for the compare sweep: mis, mds, odd_ds, kcoloringK, kromanK.
inline ProblemModel sweep_model(const std::string& name, const Graph& g) {
    auto suffix = [&](const std::string& prefix) {
        const auto rest = name.substr(prefix.size());
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw ValidationError("problem '" + name + "' needs a numeric suffix");
        return std::stoi(rest);
    };
    if (name == "mis") return builtin::max_independent_set(g);
    if (name == "mds") return builtin::min_dominating_set(g);
    if (name == "odd_ds") return builtin::odd_dominating_set(g);
    if (name.rfind("kcoloring", 0) == 0) return builtin::k_coloring(g, suffix("kcoloring"));
    if (name.rfind("kroman", 0) == 0) return builtin::k_roman(g, suffix("kroman"));
    throw ValidationError("unknown sweep problem '" + name + "'");
}

inline int run_compare(int max_n, const std::string& problems, bool prune, std::ostream& out) {
    std::vector<std::string> names;
    std::stringstream ss(problems);
    for (std::string p; std::getline(ss, p, ',');)
        if (!p.empty()) names.push_back(p);
    if (names.empty()) throw ValidationError("--problems is empty");
    for (const auto& p : names) sweep_model(p, graphs::path(1));  // reject unknown names up front
    long instances = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& g : graphs::connected_up_to_iso(n)) {
            const auto e = trivial_expression(g);
            for (const auto& p : names) {
                const auto m = sweep_model(p, g);
                const auto dp = solve(m, e, SolveOptions{true, prune});
                const auto bf = oracle::brute_force_solve(m, g);
                ++instances;
                bool witness_ok = true;
                if (dp.coloring)
                    witness_ok = oracle::verify_coloring(m, g, *dp.coloring) && oracle::coloring_weight(m, *dp.coloring) == dp.weight;
                if (dp.weight != bf.weight || !witness_ok) {
                    out << "MISMATCH problem=" << p << " dp=" << dp.weight << " oracle=" << bf.weight
                        << (witness_ok ? "" : " (witness rejected)") << "\n"
                        << g.to_text();
                    return internal;
                }
            }
        }
    out << "compared " << instances << " instances, 0 mismatches\n";
    return ok;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locally checkable problems on clique-width expressions"};
    app.require_subcommand(1);
    Options o;
    std::string path;
    std::string family;
    int fam_n = 0, fam_m = 0;
    int max_n = 0;
    std::string sweep_problems;

    auto* validate_cmd = app.add_subcommand("validate", "check an expression for redundant joins and empty renames");
    validate_cmd->add_option("expr", path, "expression file")->required();

    auto* realize_cmd = app.add_subcommand("realize", "print the graph an expression builds, with final labels");
    realize_cmd->add_option("expr", path, "expression file")->required();

    auto* family_cmd = app.add_subcommand("family", "emit a family expression (path, cycle, complete, complete_bipartite, trivial)");
    family_cmd->add_option("name", family)->required();
    family_cmd->add_option("n", fam_n);
    family_cmd->add_option("m", fam_m);
    family_cmd->add_option("--graph", o.graph_file, "graph file (trivial only)");

    auto add_problem_flags = [&](CLI::App* c) {
        c->add_option("--problem", o.problem,
                      "mis, kcoloring, kroman, mds, odd_ds, global_kroman, global_kroman_literal, community, pds, quasi_clique")
            ->required();
        c->add_option("--k", o.k);
        c->add_option("--gamma", o.gamma, "p/r");
        c->add_option("--sizes", o.sizes, "a,b,c");
        c->add_option("--required", o.required_file, "file of vertex names forced into S (pds)");
        c->add_flag("--balanced", o.balanced);
        c->add_option("--expr", o.expr_file);
        c->add_option("--graph", o.graph_file);
        c->add_flag("--coloring", o.coloring);
        c->add_flag("--json", o.json);
    };
    auto* solve_cmd = app.add_subcommand("solve", "solve a problem on an expression");
    add_problem_flags(solve_cmd);
    solve_cmd->add_flag("--no-prune", o.no_prune, "enumerate without reachable-profile pruning");
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force the same problem on the graph");
    add_problem_flags(oracle_cmd);
    oracle_cmd->add_option("--budget", o.budget, "maximum number of assignments");

    auto* compare_cmd = app.add_subcommand("compare", "DP versus brute force over all small connected graphs");
    compare_cmd->add_option("--max-n", max_n)->required();
    compare_cmd->add_option("--problems", sweep_problems, "e.g. mis,kcoloring3,kroman2")->required();
    compare_cmd->add_flag("--no-prune", o.no_prune);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (validate_cmd->parsed()) {
            auto e = parse_expression(slurp(path));
            auto report = validate(e);
            for (const auto& w : report.warnings)
                err << "warning: " << to_string(w.kind) << " at " << w.line << ":" << w.column << ": " << w.message << "\n";
            if (!report.ok()) {
                for (const auto& v : report.violations)
                    out << to_string(v.kind) << " at " << v.line << ":" << v.column << ": " << v.message << "\n";
                return validation_error;
            }
            out << "ok k=" << e.k() << " vertices=" << e.vertex_count() << "\n";
            return ok;
        }
        if (realize_cmd->parsed()) {
            auto e = parse_expression(slurp(path));
            require_valid(e);
            auto r = realize(e);
            out << r.graph.to_text();
            for (const auto& [v, l] : r.labels) out << "# label " << v << " " << l << "\n";
            return ok;
        }
        if (family_cmd->parsed()) {
            auto f = family_from_name(family);
            if (!f) throw ValidationError("unknown family '" + family + "'");
            if (*f == Family::trivial) {
                if (o.graph_file.empty()) throw ValidationError("trivial family needs --graph");
                out << to_text(trivial_expression(parse_graph(slurp(o.graph_file)))) << "\n";
            } else {
                if (fam_n < 1) throw ValidationError("family size must be >= 1");
                out << to_text(build_family(*f, fam_n, fam_m)) << "\n";
            }
            return ok;
        }
        if (solve_cmd->parsed()) {
            auto in = load_instance(o, true);
            print_answer(out, o, in.graph, solve_answer(o, in));
            return ok;
        }
        if (oracle_cmd->parsed()) {
            auto in = load_instance(o, false);
            print_answer(out, o, in.graph, oracle_answer(o, in));
            return ok;
        }
        if (compare_cmd->parsed()) return run_compare(max_n, sweep_problems, !o.no_prune, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const ValidationError& e) {
        err << "invalid: " << e.what() << "\n";
        return validation_error;
    } catch (const MismatchError& e) {
        err << "mismatch: " << e.what() << "\n";
        return mismatch;
    } catch (const BudgetExceeded& e) {
        err << "budget: " << e.what() << "\n";
        return budget;
    } catch (const InternalError& e) {
        err << "internal: " << e.what() << "\n";
        return internal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

}  // namespace cwlcp::cli
