#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <mdim/mdim.hpp>

namespace mdim::cli {

// Exit contract, stable for scripting.
constexpr int exit_ok = 0;           // success / all verdicts pass
constexpr int exit_verify_fail = 1;  // a verification claim failed
constexpr int exit_usage = 2;        // usage or domain error
constexpr int exit_budget = 3;       // search budget exhausted

namespace detail {

struct Range {
    int lo = 0;
    int hi = 0;
};

inline int parse_int_strict(const std::string& s, const char* what) {
    std::size_t idx = 0;
    int v = 0;
    try {
        v = std::stoi(s, &idx);
    } catch (const std::exception&) {
        throw DomainError(std::string(what) + ": not a number: '" + s + "'");
    }
    if (idx != s.size())
        throw DomainError(std::string(what) + ": trailing characters in '" + s + "'");
    return v;
}

/// "A" or "A..B", inclusive.
inline Range parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        const int v = parse_int_strict(text, "range");
        return {v, v};
    }
    Range r{parse_int_strict(text.substr(0, pos), "range"),
            parse_int_strict(text.substr(pos + 2), "range")};
    if (r.hi < r.lo)
        throw DomainError("range: upper bound below lower bound in '" + text + "'");
    return r;
}

/// Run task(0..count-1) on up to `threads` workers pulling from a shared
/// index. Tasks must write only to their own slot; the caller emits results
/// in index order afterwards, so output does not depend on scheduling.
template <class Task>
inline void run_indexed(int threads, int count, Task&& task) {
    if (threads < 1) throw DomainError("--threads must be at least 1");
    const int workers = std::min(threads, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex mu;
    std::exception_ptr first;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!first) first = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first) std::rethrow_exception(first);
}

inline void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                           const char* command) {
    for (const char* a : allowed)
        if (format == a) return;
    std::string msg = std::string(command) + ": invalid --format '" + format + "' (choose from";
    for (const char* a : allowed) msg += std::string(" ") + a;
    throw DomainError(msg + ")");
}

inline std::string witness_braces(const std::vector<int>& verts, int base) {
    std::string s = "{";
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(verts[i] + base);
    }
    return s + "}";
}

}  // namespace detail

inline int cmd_graph(int n, int k, std::string format, int base, std::ostream& out) {
    if (format.empty()) format = "dot";
    detail::require_format(format, {"dot", "json", "csv"}, "graph");
    const Graph g = build_circulant(build_connection_set(n, k));
    if (format == "dot")
        out << to_dot(g, base);
    else if (format == "json")
        out << graph_to_json(g, base).dump(2) << '\n';
    else
        out << distances_to_csv(all_pairs_distances(g));
    return exit_ok;
}

inline int cmd_dims(int n, int k, std::vector<std::string> which, const std::string& method,
                    std::string format, const SearchBudget& budget, bool no_timing, int base,
                    std::ostream& out) {
    if (format.empty()) format = "json";
    detail::require_format(format, {"json", "table"}, "dims");
    if (which.empty()) which = {"beta", "psi", "sdim"};
    bool want_beta = false, want_psi = false, want_sdim = false;
    for (const auto& w : which) {
        if (w == "beta")
            want_beta = true;
        else if (w == "psi")
            want_psi = true;
        else if (w == "sdim")
            want_sdim = true;
        else
            throw DomainError("dims: unknown problem in --which: '" + w +
                              "' (choose from beta psi sdim)");
    }
    if (method != "enum" && method != "vc" && method != "both")
        throw DomainError("dims: invalid --method '" + method + "' (choose from enum vc both)");
    const DistanceMatrix dist = all_pairs_distances(build_circulant(build_connection_set(n, k)));
    std::vector<SolverReport> reports;
    int known_beta = -1;
    if (want_beta) {
        reports.push_back(min_resolving_set(dist, budget));
        known_beta = reports.back().optimum;
    }
    if (want_psi) reports.push_back(min_doubly_resolving_set(dist, budget, known_beta));
    if (want_sdim) {
        if (method == "enum" || method == "both")
            reports.push_back(min_strong_resolving_set_enum(dist, budget, known_beta));
        if (method == "vc" || method == "both")
            reports.push_back(min_strong_resolving_set_vc(dist, budget));
    }
    for (const auto& r : reports) {
        if (format == "json") {
            out << to_json(r, !no_timing, base).dump() << '\n';
        } else {
            out << to_string(r.problem) << " = " << r.optimum << "  witness "
                << detail::witness_braces(r.witness.vertices, base) << "  method "
                << to_string(r.method) << "  nodes " << r.nodes_explored;
            if (!no_timing) out << "  millis " << r.millis;
            out << '\n';
        }
    }
    return exit_ok;
}

inline int cmd_verify(const std::string& n_range, std::string format, const SearchBudget& budget,
                      int threads, std::ostream& out, std::ostream& err) {
    if (format.empty()) format = "csv";
    detail::require_format(format, {"csv", "json"}, "verify");
    const auto range = detail::parse_range(n_range);
    std::vector<int> ns;
    for (int n = range.lo; n <= range.hi; ++n) {
        if (n >= 8 && n % 2 == 0)
            ns.push_back(n);
        else
            err << "verify: skipping n=" << n << " (family requires even n >= 8)\n";
    }
    if (ns.empty()) throw DomainError("verify: no valid n in range " + n_range);
    std::vector<FamilyReport> reports(ns.size());
    detail::run_indexed(threads, static_cast<int>(ns.size()),
                        [&](int i) { reports[static_cast<std::size_t>(i)] = verify_family(
                                         ns[static_cast<std::size_t>(i)], budget); });
    if (format == "csv") {
        out << family_csv_header() << '\n';
        for (const auto& r : reports) out << to_csv_row(r) << '\n';
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
    }
    bool any_fail = false, any_budget = false;
    for (const auto& r : reports) {
        if (r.budget_exhausted)
            any_budget = true;
        else if (!r.pass())
            any_fail = true;
    }
    if (any_fail) return exit_verify_fail;
    if (any_budget) return exit_budget;
    return exit_ok;
}

inline int cmd_sweep(const std::string& n_range, std::string format, const SearchBudget& budget,
                     int threads, std::ostream& out, std::ostream& err) {
    if (format.empty()) format = "csv";
    detail::require_format(format, {"csv"}, "sweep");
    const auto range = detail::parse_range(n_range);
    struct Cell {
        int n = 0, k = 0;
        int beta = -1, psi = -1, sdim = -1, omega = -1;
        int diameter = 0;
    };
    std::vector<Cell> cells;
    for (int n = range.lo; n <= range.hi; ++n) {
        if (n < 4) {
            err << "sweep: skipping n=" << n << " (need n >= 4)\n";
            continue;
        }
        for (int k = 1; k <= n / 2 - 1; ++k) cells.push_back({n, k, -1, -1, -1, -1, 0});
    }
    if (cells.empty()) throw DomainError("sweep: no valid n in range " + n_range);
    detail::run_indexed(threads, static_cast<int>(cells.size()), [&](int i) {
        Cell& c = cells[static_cast<std::size_t>(i)];
        const Graph g = build_circulant(build_connection_set(c.n, c.k));
        const DistanceMatrix dist = all_pairs_distances(g);
        c.diameter = dist.diameter();
        // Budget aborts mark the cell and leave the rest of the row useful.
        try {
            c.omega = clique_number(g, budget);
        } catch (const BudgetError&) {
        }
        int known_beta = -1;
        try {
            c.beta = min_resolving_set(dist, budget).optimum;
            known_beta = c.beta;
        } catch (const BudgetError&) {
        }
        try {
            c.psi = min_doubly_resolving_set(dist, budget, known_beta).optimum;
        } catch (const BudgetError&) {
        }
        try {
            c.sdim = min_strong_resolving_set_enum(dist, budget, known_beta).optimum;
        } catch (const BudgetError&) {
        }
    });
    auto cell_str = [](int v) { return v < 0 ? std::string("?") : std::to_string(v); };
    out << "n,k,beta,psi,sdim,omega,diameter\n";
    for (const auto& c : cells)
        out << c.n << ',' << c.k << ',' << cell_str(c.beta) << ',' << cell_str(c.psi) << ','
            << cell_str(c.sdim) << ',' << cell_str(c.omega) << ',' << c.diameter << '\n';
    return exit_ok;
}

inline int cmd_witness(int n, std::string format, int base, std::ostream& out) {
    if (format.empty()) format = "table";
    detail::require_format(format, {"table", "json"}, "witness");
    const WitnessSet w = canonical_witness(n);
    const DistanceMatrix dist =
        all_pairs_distances(build_circulant(build_connection_set(n, n / 2 - 1)));
    const bool r = is_resolving(w, dist).ok;
    const bool dr = is_doubly_resolving(w, dist).ok;
    const bool sr = is_strong_resolving(w, dist).ok;
    if (format == "table") {
        out << "n: " << n << '\n'
            << "witness: " << detail::witness_braces(w.vertices, base) << '\n'
            << "resolving: " << (r ? "true" : "false") << '\n'
            << "doubly_resolving: " << (dr ? "true" : "false") << '\n'
            << "strong_resolving: " << (sr ? "true" : "false") << '\n';
    } else {
        ordered_json j;
        j["n"] = n;
        j["witness"] = mdim::detail::shift_labels(w.vertices, base);
        j["resolving"] = r;
        j["doubly_resolving"] = dr;
        j["strong_resolving"] = sr;
        out << j.dump(2) << '\n';
    }
    return r && dr && sr ? exit_ok : exit_verify_fail;
}

/// Entry point shared by the binary and the test suite; returns the process
/// exit code and writes only to the two provided streams.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Circulant landmark-set toolkit: builds Cay(Z_n, S_k), checks "
                 "resolving/doubly-resolving/strong-resolving witnesses, and solves the three "
                 "minimum-dimension problems exactly."};
    app.require_subcommand(1);

    int n = 0, k = 0;
    std::string n_range, format, method = "enum";
    std::vector<std::string> which;
    SearchBudget defaults;
    std::uint64_t budget_subsets = defaults.max_subsets;
    std::uint64_t budget_ms = defaults.max_millis;
    int threads = 1;
    bool no_timing = false, one_based = false;

    const auto add_budget = [&](CLI::App* c) {
        c->add_option("--budget-subsets", budget_subsets,
                      "Search-node limit per solver call (must be positive)");
        c->add_option("--budget-ms", budget_ms,
                      "Wall-clock limit per solver call, milliseconds (must be positive)");
    };
    const auto add_common = [&](CLI::App* c) {
        c->add_flag("--no-timing", no_timing, "Suppress timing fields for byte-stable output");
        c->add_flag("--one-based", one_based, "Print 1-based vertex labels");
    };

    CLI::App* c_graph = app.add_subcommand("graph", "Emit the circulant graph or its distances");
    c_graph->add_option("n", n, "Group order (n >= 4)")->required();
    c_graph->add_option("k", k, "Connection half-width (1 <= k <= n/2-1)")->required();
    c_graph->add_option("--format", format, "dot | json | csv (default dot)");
    add_common(c_graph);

    CLI::App* c_dims = app.add_subcommand("dims", "Solve the minimum-dimension problems exactly");
    c_dims->add_option("n", n, "Group order")->required();
    c_dims->add_option("k", k, "Connection half-width")->required();
    c_dims->add_option("--which", which, "Problems to solve: beta,psi,sdim (default all)")
        ->delimiter(',');
    c_dims->add_option("--method", method, "sdim route: enum | vc | both (default enum)");
    c_dims->add_option("--format", format, "json | table (default json)");
    add_budget(c_dims);
    add_common(c_dims);

    CLI::App* c_verify =
        app.add_subcommand("verify", "Check the closed form beta = psi = sdim = k+1 over a range");
    c_verify->add_option("--n", n_range, "Range of orders, A or A..B (even n >= 8 processed)")
        ->required();
    c_verify->add_option("--format", format, "csv | json (default csv)");
    c_verify->add_option("--threads", threads, "Worker threads across family members")
        ->check(CLI::PositiveNumber);
    add_budget(c_verify);
    add_common(c_verify);

    CLI::App* c_sweep =
        app.add_subcommand("sweep", "Tabulate beta, psi, sdim, omega, diameter over all (n,k)");
    c_sweep->add_option("--n", n_range, "Range of orders, A or A..B")->required();
    c_sweep->add_option("--format", format, "csv (default)");
    c_sweep->add_option("--threads", threads, "Worker threads across (n,k) cells")
        ->check(CLI::PositiveNumber);
    add_budget(c_sweep);
    add_common(c_sweep);

    CLI::App* c_witness =
        app.add_subcommand("witness", "Print the canonical witness and its three predicate checks");
    c_witness->add_option("n", n, "Even group order >= 8")->required();
    c_witness->add_option("--format", format, "table | json (default table)");
    add_common(c_witness);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("mdim");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const auto& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? exit_ok : exit_usage;
    }

    try {
        const SearchBudget budget{budget_subsets, budget_ms};
        budget.validate();
        const int base = one_based ? 1 : 0;
        if (*c_graph) return cmd_graph(n, k, format, base, out);
        if (*c_dims) return cmd_dims(n, k, which, method, format, budget, no_timing, base, out);
        if (*c_verify) return cmd_verify(n_range, format, budget, threads, out, err);
        if (*c_sweep) return cmd_sweep(n_range, format, budget, threads, out, err);
        if (*c_witness) return cmd_witness(n, format, base, out);
        err << "error: no command selected\n";
        return exit_usage;
    } catch (const BudgetError& e) {
        err << "budget exhausted: " << e.what() << " (bounds " << e.lower_bound << ".."
            << e.upper_bound << ", nodes " << e.nodes_explored << ")\n";
        return exit_budget;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace mdim::cli
