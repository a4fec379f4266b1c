#include <xh/forbid.hpp>
#include <xh/homcount.hpp>
#include <xh/io.hpp>
#include <xh/lagopt.hpp>
#include <xh/parallel.hpp>
#include <xh/symlab.hpp>
#include <xh/xsearch.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

namespace
{
    using nlohmann::json;
    using namespace xh;

    enum Exit
    {
        Ok = 0,
        Fails = 1,
        Usage = 2,
    };

    struct Globals
    {
        bool json = false;
        std::uint64_t seed = 0;
        std::size_t threads = 0;
    };

    auto count_json(Count c) -> json
    {
        if (c <= std::numeric_limits<std::uint64_t>::max())
            return json(static_cast<std::uint64_t>(c));
        return json(to_string(c));
    }

    auto edges_json(const Hypergraph & h) -> json
    {
        return json::parse(format_hypergraph_json(h));
    }

    auto format_double(double x) -> std::string
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.9f", x);
        return buf;
    }

    auto format_partition(const VertexPartition & p) -> std::string
    {
        std::string out;
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
            if (i)
                out += " | ";
            for (std::size_t j = 0; j < p.parts[i].size(); ++j)
                out += (j ? " " : "") + std::to_string(p.parts[i][j]);
        }
        return out;
    }

    /// "5..9" or "5,6,10".
    auto parse_range(const std::string & text) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> out;
        if (auto dots = text.find(".."); dots != std::string::npos) {
            auto lo = std::stoul(text.substr(0, dots));
            auto hi = std::stoul(text.substr(dots + 2));
            for (auto n = lo; n <= hi; ++n)
                out.push_back(n);
            return out;
        }
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ','))
            out.push_back(std::stoul(item));
        return out;
    }

    struct CountArgs
    {
        std::string pattern, host;
        bool hom = false;
        bool per_vertex = false;
    };

    auto run_count(const Globals & g, const CountArgs & a) -> int
    {
        Pattern q(read_hypergraph(a.pattern));
        auto h = read_hypergraph(a.host);
        if (q.uniformity() != h.uniformity())
            throw ArityError("pattern is " + std::to_string(q.uniformity()) + "-uniform but host is " +
                    std::to_string(h.uniformity()) + "-uniform");
        Count value = a.hom ? count_hom(q, h) : count_inj(q, h);
        std::vector<Count> degrees;
        if (a.per_vertex)
            degrees = q_degrees(q, h);
        if (g.json) {
            json out{{"mode", a.hom ? "hom" : "inj"}, {"count", count_json(value)}};
            if (a.per_vertex) {
                json d = json::array();
                for (auto c : degrees)
                    d.push_back(count_json(c));
                out["q_degrees"] = d;
            }
            std::cout << out.dump() << "\n";
        } else {
            std::cout << to_string(value) << "\n";
            for (std::size_t v = 0; v < degrees.size(); ++v)
                std::cout << "  d_Q(" << v << ") = " << to_string(degrees[v]) << "\n";
        }
        return Ok;
    }

    struct CheckArgs
    {
        std::string host;
        std::string forbid;
        std::size_t lpartite = 0;
        std::string colorable;
    };

    auto run_check(const Globals & g, const CheckArgs & a) -> int
    {
        auto h = read_hypergraph(a.host);
        int chosen = ! a.forbid.empty() + (a.lpartite > 0) + ! a.colorable.empty();
        if (chosen != 1) {
            std::cerr << "check: give exactly one of --forbid, --lpartite, --colorable\n";
            return Usage;
        }
        json out;
        bool holds = false;
        std::string text;
        if (! a.forbid.empty()) {
            auto family = parse_family(a.forbid);
            holds = is_free(family, h);
            out = {{"property", "free"}, {"family", family.describe()}, {"holds", holds}};
            text = std::string(holds ? "free of " : "contains a member of ") + family.describe();
        } else if (a.lpartite > 0) {
            auto partition = is_l_partite(h, a.lpartite);
            holds = partition.has_value();
            out = {{"property", "l-partite"}, {"l", a.lpartite}, {"holds", holds}};
            text = holds ? std::to_string(a.lpartite) + "-partite: " + format_partition(*partition)
                         : "not " + std::to_string(a.lpartite) + "-partite";
            if (holds) {
                out["parts"] = partition->parts;
            }
        } else {
            auto target = read_hypergraph(a.colorable);
            auto coloring = find_coloring(h, target);
            holds = coloring.has_value();
            out = {{"property", "colorable"}, {"holds", holds}};
            text = holds ? "has a homomorphism into " + a.colorable : "no homomorphism into " + a.colorable;
            if (holds)
                out["map"] = *coloring;
        }
        if (g.json)
            std::cout << out.dump() << "\n";
        else
            std::cout << text << "\n";
        return holds ? Ok : Fails;
    }

    struct SymmetrizeArgs
    {
        std::string pattern, forbid, host, out, trace;
        std::size_t max_iters = 100000;
    };

    auto run_symmetrize(const Globals & g, const SymmetrizeArgs & a) -> int
    {
        GammaFunctional gamma(Pattern(read_hypergraph(a.pattern)), parse_family(a.forbid));
        auto h = read_hypergraph(a.host);
        auto result = symmetrize(gamma, h, a.max_iters);
        if (! a.out.empty())
            write_hypergraph(a.out, result.final);
        if (! a.trace.empty()) {
            std::ofstream trace(a.trace);
            trace << format_trace_json(result) << "\n";
        }
        const Count final_gamma = gamma(result.final);
        if (g.json) {
            json out{{"status", to_string(result.status)}, {"steps", result.steps.size()},
                    {"gamma", count_json(final_gamma)}, {"psi", psi(result.final)}, {"final", edges_json(result.final)}};
            if (result.stuck_pair)
                out["stuck_pair"] = {result.stuck_pair->first, result.stuck_pair->second};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "status " << to_string(result.status) << "\n"
                      << "steps  " << result.steps.size() << "\n"
                      << "gamma  " << to_string(final_gamma) << "\n"
                      << "psi    " << psi(result.final) << "\n"
                      << "edges  " << result.final.size() << "\n";
            if (result.stuck_pair)
                std::cout << "stuck on pair (" << result.stuck_pair->first << ", " << result.stuck_pair->second << ")\n";
        }
        return result.status == SymmetrizationStatus::Symmetrized ? Ok : Fails;
    }

    struct LagrangianArgs
    {
        std::string pattern, host, dump;
        std::size_t restarts = 32;
    };

    auto run_lagrangian(const Globals & g, const LagrangianArgs & a) -> int
    {
        Pattern q(read_hypergraph(a.pattern));
        auto h = read_hypergraph(a.host);
        auto poly = build_poly(q, h);
        if (! a.dump.empty()) {
            std::ofstream out(a.dump);
            out << format_polynomial_json(poly) << "\n";
        }
        OptimizeOptions options;
        options.restarts = a.restarts;
        options.seed = g.seed;
        auto best = maximize_on_simplex(poly, options);
        double residual = multiplier_residual(poly, best.x);
        if (g.json) {
            std::cout << json{{"lambda", best.lambda}, {"x", best.x.weights}, {"residual", residual}}.dump() << "\n";
        } else {
            std::cout << "lambda   " << format_double(best.lambda) << "\n" << "x       ";
            for (auto w : best.x.weights)
                std::cout << " " << format_double(w);
            std::cout << "\nresidual " << residual << "\n";
        }
        return Ok;
    }

    struct SearchArgs
    {
        std::string pattern, forbid, run_dir;
        std::size_t n = 0;
        bool override_cap = false;
        std::size_t max_witnesses = 32;
    };

    auto run_search(const Globals & g, const SearchArgs & a) -> int
    {
        Pattern q(read_hypergraph(a.pattern));
        auto family = parse_family(a.forbid);
        SearchOptions options;
        options.generation.override_cap = a.override_cap;
        options.max_witnesses = a.max_witnesses;
        options.pattern_id = a.pattern;
        auto report = brute_force_extremal(a.n, q, family, options);
        if (! a.run_dir.empty())
            write_witnesses(a.run_dir, report.witnesses);
        if (g.json) {
            json witnesses = json::array();
            for (const auto & w : report.witnesses)
                witnesses.push_back(edges_json(w));
            std::cout << json{{"n", report.n}, {"pattern", report.pattern_id}, {"family", report.family_spec},
                                 {"extremal_value", count_json(report.extremal_value)},
                                 {"witness_count", report.witness_count}, {"witnesses", witnesses},
                                 {"elapsed", report.elapsed_seconds}, {"nodes", report.nodes_explored}}
                                 .dump()
                      << "\n";
        } else {
            std::cout << to_string(report.extremal_value) << "\n"
                      << "witnesses " << report.witness_count << ", nodes " << report.nodes_explored << ", "
                      << report.elapsed_seconds << " s\n";
        }
        return Ok;
    }

    struct VerifyArgs
    {
        std::string range = "5..9";
        bool brute = false;
        bool override_cap = false;
        std::string csv;
    };

    auto run_verify_pentagon(const Globals & g, const VerifyArgs & a) -> int
    {
        PentagonOptions options;
        options.brute = a.brute;
        options.brute_max = std::numeric_limits<std::size_t>::max();
        options.generation.override_cap = a.override_cap;
        auto rows = verify_pentagon(parse_range(a.range), options);
        auto csv = format_pentagon_csv(rows);
        bool all = std::all_of(rows.begin(), rows.end(), [](const PentagonRow & r) { return r.match; });
        if (a.csv == "-") {
            std::cout << csv;
            return all ? Ok : Fails;
        }
        if (! a.csv.empty()) {
            std::ofstream out(a.csv, std::ios::binary);
            out << csv;
        }
        if (g.json) {
            json out = json::array();
            for (const auto & r : rows)
                out.push_back({{"n", r.n}, {"formula_value", count_json(r.formula_value)},
                        {"brute_value", r.brute_value ? count_json(*r.brute_value) : json(nullptr)},
                        {"construction_value", count_json(r.construction_value)}, {"match", r.match}});
            std::cout << out.dump() << "\n";
        } else {
            std::printf("%4s %10s %10s %12s %6s\n", "n", "formula", "brute", "construction", "match");
            for (const auto & r : rows)
                std::printf("%4zu %10s %10s %12s %6s\n", r.n, to_string(r.formula_value).c_str(),
                        r.brute_value ? to_string(*r.brute_value).c_str() : "-", to_string(r.construction_value).c_str(),
                        r.match ? "yes" : "NO");
        }
        return all ? Ok : Fails;
    }

    struct ProbeArgs
    {
        std::string pattern, forbid, colorable, run_dir;
        std::size_t lpartite = 0;
        double eps = 0.1;
        std::size_t n = 0;
        bool override_cap = false;
    };

    auto run_probe(const Globals & g, const ProbeArgs & a) -> int
    {
        if ((a.lpartite > 0) == ! a.colorable.empty()) {
            std::cerr << "probe: give exactly one of --lpartite, --colorable\n";
            return Usage;
        }
        Pattern q(read_hypergraph(a.pattern));
        auto family = parse_family(a.forbid);
        auto membership = a.lpartite > 0 ? Membership::l_partite(a.lpartite)
                                         : Membership::colorable(read_hypergraph(a.colorable));
        ProbeOptions options;
        options.generation.override_cap = a.override_cap;
        auto report = degree_stability_probe(q, family, membership, a.eps, a.n, ProbeMode::Exhaustive, options);
        if (! a.run_dir.empty() && ! report.counterexamples.empty())
            write_witnesses(a.run_dir, report.counterexamples);
        if (g.json) {
            json qualifiers = json::array();
            for (const auto & e : report.qualifiers)
                qualifiers.push_back({{"host", edges_json(e.host)}, {"min_q_degree", count_json(e.min_q_degree)},
                        {"member", e.member}});
            std::cout << json{{"n", report.n}, {"extremal_value", count_json(report.extremal_value)},
                                 {"threshold", report.threshold}, {"scanned", report.scanned},
                                 {"qualifiers", qualifiers}, {"counterexamples", report.counterexamples.size()}}
                                 .dump()
                      << "\n";
        } else {
            std::cout << "inj(n,Q,F) " << to_string(report.extremal_value) << ", threshold " << report.threshold
                      << ", scanned " << report.scanned << "\n";
            for (const auto & e : report.qualifiers)
                std::cout << "  " << e.host.size() << " edges, min d_Q " << to_string(e.min_q_degree) << ", "
                          << membership.describe() << (e.member ? " yes" : " NO") << "\n";
            std::cout << report.counterexamples.size() << " counterexamples\n";
        }
        return report.holds() ? Ok : Fails;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"xh: counting, symmetrization and extremal search for uniform hypergraphs"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--seed", g.seed, "Seed for randomized steps");
    app.add_option("--threads", g.threads, "Worker cap (1 = sequential)");

    CountArgs count;
    auto * c = app.add_subcommand("count", "hom/inj counts of a pattern in a host");
    c->add_option("--pattern", count.pattern)->required()->check(CLI::ExistingFile);
    c->add_option("--host", count.host)->required()->check(CLI::ExistingFile);
    auto * hom = c->add_flag("--hom", count.hom, "Count homomorphisms");
    bool inj = false;
    c->add_flag("--inj", inj, "Count injective homomorphisms (default)")->excludes(hom);
    c->add_flag("--per-vertex", count.per_vertex, "Also print Q-degrees");

    CheckArgs check;
    auto * k = app.add_subcommand("check", "freeness, l-partiteness or colorability of a host");
    k->add_option("--host", check.host)->required()->check(CLI::ExistingFile);
    k->add_option("--forbid", check.forbid, "list:a.hg,b.hg | expansion:F.hg:r | weakexp:L:r");
    k->add_option("--lpartite", check.lpartite);
    k->add_option("--colorable", check.colorable)->check(CLI::ExistingFile);

    SymmetrizeArgs sym;
    auto * s = app.add_subcommand("symmetrize", "lexicographic (Gamma, Psi) symmetrization");
    s->add_option("--pattern", sym.pattern)->required()->check(CLI::ExistingFile);
    s->add_option("--forbid", sym.forbid)->required();
    s->add_option("--host", sym.host)->required()->check(CLI::ExistingFile);
    s->add_option("--max-iters", sym.max_iters);
    s->add_option("--out", sym.out, "Final host (.hg or .json)");
    s->add_option("--trace", sym.trace, "Step trace (JSON)");

    LagrangianArgs lag;
    auto * l = app.add_subcommand("lagrangian", "maximize the Q-Lagrange polynomial on the simplex");
    l->add_option("--pattern", lag.pattern)->required()->check(CLI::ExistingFile);
    l->add_option("--host", lag.host)->required()->check(CLI::ExistingFile);
    l->add_option("--restarts", lag.restarts);
    l->add_option("--dump-poly", lag.dump, "Write the polynomial as JSON");

    SearchArgs search;
    auto * x = app.add_subcommand("search", "exhaustive inj(n, Q, F)");
    x->add_option("--pattern", search.pattern)->required()->check(CLI::ExistingFile);
    x->add_option("--forbid", search.forbid)->required();
    x->add_option("-n", search.n)->required();
    x->add_flag("--override-cap", search.override_cap);
    x->add_option("--max-witnesses", search.max_witnesses);
    x->add_option("--run-dir", search.run_dir, "Directory for witness .hg files");

    VerifyArgs verify;
    auto * v = app.add_subcommand("verify", "check exact formulas");
    v->require_subcommand(1);
    auto * vp = v->add_subcommand("pentagon", "10 * prod floor((n+i)/5) against brute force and blowups");
    vp->add_option("--n", verify.range, "Range a..b or list a,b,c");
    vp->add_flag("--brute", verify.brute);
    vp->add_flag("--override-cap", verify.override_cap);
    vp->add_option("--csv", verify.csv, "Write the table as CSV to this file (\"-\" for stdout)");

    ProbeArgs probe;
    auto * p = app.add_subcommand("probe", "exhaustive degree-stability probe");
    p->add_option("--pattern", probe.pattern)->required()->check(CLI::ExistingFile);
    p->add_option("--forbid", probe.forbid)->required();
    p->add_option("--lpartite", probe.lpartite);
    p->add_option("--colorable", probe.colorable)->check(CLI::ExistingFile);
    p->add_option("--eps", probe.eps);
    p->add_option("-n", probe.n)->required();
    p->add_flag("--override-cap", probe.override_cap);
    p->add_option("--run-dir", probe.run_dir, "Directory for counterexample .hg files");

    app.fallthrough();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return Usage;
    }

    set_max_threads(g.threads);
    try {
        if (c->parsed())
            return run_count(g, count);
        if (k->parsed())
            return run_check(g, check);
        if (s->parsed())
            return run_symmetrize(g, sym);
        if (l->parsed())
            return run_lagrangian(g, lag);
        if (x->parsed())
            return run_search(g, search);
        if (vp->parsed())
            return run_verify_pentagon(g, verify);
        if (p->parsed())
            return run_probe(g, probe);
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}
