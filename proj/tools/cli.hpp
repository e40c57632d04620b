#ifndef LPT_TOOLS_CLI_HPP
#define LPT_TOOLS_CLI_HPP

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpt/lpt.hpp"

namespace lpt::cli {

using nlohmann::ordered_json;

struct Options {
    std::string kind = "path";
    std::string input;
    std::string format;
    std::string out;
    std::uint64_t seed = 1;
    int cap = 24;
    int jobs = 1;
    bool force = false;
    bool timing = false;
    bool records = false;

    // subcommand specific
    std::string omega;
    std::string check = "all";
    int samples = 100000;
    int exhaustive = 0;
    int min_order = -1;
    std::string csv;
    int max_order = 16;
    std::string group;
};

inline Kind parse_kind(const std::string& s) {
    if (s == "path") return Kind::Path;
    if (s == "cycle") return Kind::Cycle;
    throw InputError("unknown kind '" + s + "' (expected path or cycle)");
}

inline OracleConfig oracle_config(const Options& o) {
    if (o.cap < 1 || o.cap > 64) throw InputError("--cap must lie in 1..64");
    return OracleConfig{o.cap, 4'000'000};
}

inline Graph load_graph(const Options& o) {
    if (o.input.empty()) throw InputError("--input is required");
    const GraphFormat f = o.format.empty() ? guess_format(o.input) : parse_format(o.format);
    return read_graph(o.input, f);
}

inline ordered_json describe_graph(const Graph& g, const std::string& source) {
    return ordered_json{{"source", source}, {"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}};
}

inline std::vector<Vertex> parse_int_list(const std::string& text) {
    std::vector<Vertex> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad integer '" + token + "' in list '" + text + "'");
        }
    }
    return out;
}

inline ordered_json certificate_json(const TransversalCertificate& c) {
    ordered_json j;
    j["kind"] = to_string(c.kind);
    j["n"] = c.n;
    j["ell"] = c.ell;
    j["branch"] = to_string(c.branch);
    j["S"] = c.s;
    j["S_size"] = c.s.size();
    j["bound"] = c.bound_used;
    if (c.hitting_cycle) j["hitting_cycle"] = c.hitting_cycle->vertices;
    if (c.case1) {
        const auto& w = *c.case1;
        j["case1"] = ordered_json{{"x", w.x},          {"y", w.y},          {"shortcut", w.shortcut.vertices},
                                  {"c1", w.c1.vertices}, {"c2", w.c2.vertices}, {"k1", w.k1},
                                  {"k2", w.k2}};
    }
    if (c.case2) {
        const auto& w = *c.case2;
        ordered_json bags = ordered_json::array();
        for (const auto& b : w.decomposition.bags) bags.push_back(b);
        j["case2"] = ordered_json{{"omega", w.society.omega}, {"p", w.p}, {"bags", bags}, {"index", w.index}, {"intervals", w.intervals}};
    }
    return j;
}

inline void cmd_transversal(const Options& o, RunReport& rep) {
    const Graph g = load_graph(o);
    const Kind kind = parse_kind(o.kind);
    rep.instance = describe_graph(g, o.input);
    EngineOptions engine{o.force, oracle_config(o)};
    TransversalCertificate cert = transversal(g, kind, engine);
    const LongestFamily fam = enumerate_longest(g, kind, engine.oracle);
    const std::string why = certificate_violation(g, cert, fam);
    check_true("transversal.certificate", why.empty(), [&] { return why; });
    rep.result = certificate_json(cert);
}

inline void cmd_oracle(const Options& o, RunReport& rep) {
    const Graph g = load_graph(o);
    const Kind kind = parse_kind(o.kind);
    rep.instance = describe_graph(g, o.input);
    const LongestFamily fam = enumerate_longest(g, kind, oracle_config(o));
    const HittingSet h = minimum_hitting_set(fam);
    rep.result["kind"] = to_string(kind);
    rep.result["length"] = fam.length;
    rep.result["members"] = fam.size();
    rep.result["transversal_number"] = h.vertices.size();
    rep.result["minimum_transversal"] = h.vertices;
    rep.result["optimal"] = h.optimal;
    bool pairwise = true;
    for (std::size_t a = 0; a < fam.size() && pairwise; ++a)
        for (std::size_t b = a + 1; b < fam.size() && pairwise; ++b) pairwise = (fam.masks[a] & fam.masks[b]) != 0;
    rep.result["pairwise_intersecting"] = pairwise;
    if (g.order() > 0 && is_connected(g) && (kind == Kind::Path || is_two_connected(g)))
        check_true("oracle.pairwise_intersect", pairwise, [&] { return to_graph6(g); });
}

inline void cmd_decompose(const Options& o, RunReport& rep) {
    const Graph g = load_graph(o);
    rep.instance = describe_graph(g, o.input);
    const TreeDecomposition td = tutte_decomposition(g);
    const DecompositionReport vr = verify_tree_decomposition(g, td);
    check_true("tutte.valid", vr.valid, [&] { return vr.violations.empty() ? std::string() : vr.violations.front(); });
    check_le("tutte.adhesion", vr.adhesion, 2.0, [&] { return to_graph6(g); });
    ordered_json bags = ordered_json::array();
    for (std::size_t t = 0; t < td.bags.size(); ++t)
        bags.push_back(ordered_json{{"vertices", td.bags[t]}, {"torso", to_string(td.torso_kinds[t])}});
    rep.result["bags"] = bags;
    rep.result["tree_edges"] = td.tree_edges;
    rep.result["adhesion"] = vr.adhesion;
}

inline void cmd_society(const Options& o, RunReport& rep) {
    const Graph g = load_graph(o);
    rep.instance = describe_graph(g, o.input);
    if (o.omega.empty()) throw InputError("--omega is required");
    const Society s(g, parse_int_list(o.omega));
    if (s.size() < 2) throw InputError("society needs at least two vertices in --omega");
    if (!is_connected(g)) throw InputError("society graph must be connected");
    rep.instance["omega"] = s.omega;
    const Transaction tx = max_transaction(s);
    const LinearDecomposition ld = build_linear_decomposition(s);
    const LinearDecompositionReport vr = verify_linear_decomposition(s, ld);
    check_true("linear.valid", vr.valid, [&] { return vr.violations.empty() ? std::string() : vr.violations.front(); });
    check_le("linear.adhesion", vr.adhesion, tx.order(), [&] { return to_graph6(g); });
    ordered_json paths = ordered_json::array();
    for (const auto& p : tx.paths) paths.push_back(p.vertices);
    ordered_json bags = ordered_json::array();
    for (const auto& b : ld.bags) bags.push_back(b);
    rep.result["transaction_order"] = tx.order();
    rep.result["transaction"] = paths;
    rep.result["bags"] = bags;
    rep.result["adhesion"] = vr.adhesion;
    rep.result["from_search"] = ld.from_search;
}

inline void cmd_lemmas(const Options& o, RunReport& rep) {
    static const std::vector<std::string> kChecks{"matching", "cubic", "distantpairs", "inequality", "decomposition"};
    if (o.check != "all" && std::find(kChecks.begin(), kChecks.end(), o.check) == kChecks.end())
        throw InputError("unknown --check '" + o.check + "'");
    if (o.samples < 1) throw InputError("--samples must be positive");
    auto wanted = [&](const std::string& c) { return o.check == "all" || o.check == c; };
    if (wanted("matching")) merge_outcome(rep, matching_experiment(o.seed, 200, 30, 12, o.jobs));
    if (wanted("cubic")) merge_outcome(rep, cubic_experiment(o.seed, 100, 20, o.jobs));
    if (wanted("distantpairs")) merge_outcome(rep, distant_pairs_experiment(12, 4, 6, o.jobs));
    if (wanted("inequality")) merge_outcome(rep, inequality_experiment(o.seed, o.samples, o.jobs));
    if (wanted("decomposition")) merge_outcome(rep, decomposition_experiment(o.seed, 100, 30, 100, 18, o.jobs));
}

inline void cmd_sweep(const Options& o, RunReport& rep) {
    SweepOptions opt;
    opt.kind = parse_kind(o.kind);
    opt.jobs = o.jobs;
    opt.force_construction = o.force;
    opt.timing = o.timing;
    opt.cap = oracle_config(o).cap;
    ExperimentOutcome out;
    if (o.exhaustive > 0) {
        if (!o.input.empty()) throw InputError("--exhaustive and --input are exclusive");
        if (o.exhaustive > 9) throw InputError("--exhaustive supports orders up to 9");
        opt.max_order = o.exhaustive;
        opt.min_order = o.min_order < 0 ? o.exhaustive : o.min_order;
        if (opt.min_order > opt.max_order) throw InputError("--min-order exceeds --exhaustive");
        out = sweep_exhaustive(opt);
        const std::size_t expected_rows = out.csv_rows.size();
        std::size_t known = 0;
        for (int n = std::max(opt.min_order, opt.kind == Kind::Path ? 2 : 3); n <= opt.max_order; ++n)
            known += static_cast<std::size_t>(opt.kind == Kind::Path ? kConnectedGraphCounts[static_cast<std::size_t>(n)]
                                                                     : kTwoConnectedGraphCounts[static_cast<std::size_t>(n)]);
        ScopedCheckLog scope(out.log);
        check_true("sweep.class_count", expected_rows == known,
                   [&] { return std::to_string(expected_rows) + " classes vs " + std::to_string(known) + " known"; });
        rep.instance = ordered_json{{"corpus", "exhaustive"}, {"min_order", opt.min_order}, {"max_order", opt.max_order}};
    } else {
        if (o.input.empty()) throw InputError("sweep needs --exhaustive N or --input FILE");
        const std::vector<Graph> graphs = parse_graph6_lines(read_text_file(o.input));
        for (const Graph& g : graphs)
            if (g.order() > opt.cap) throw OracleInfeasible("graph with " + std::to_string(g.order()) + " vertices exceeds --cap");
        out = sweep_graphs(graphs, opt);
        out.name = std::string("sweep-") + to_string(opt.kind);
        rep.instance = ordered_json{{"corpus", o.input}, {"graphs", graphs.size()}};
    }
    if (!o.csv.empty()) {
        std::string text = std::string(kCsvHeader) + "\n";
        for (const auto& row : out.csv_rows) text += row + "\n";
        write_text_file(o.csv, text);
    }
    out.summary["rows"] = out.csv_rows.size();
    merge_outcome(rep, std::move(out));
}

inline void cmd_vt(const Options& o, RunReport& rep) {
    if (o.max_order < 3) throw InputError("--max-order must be at least 3");
    std::vector<VTInstance> corpus = vt_corpus(o.max_order);
    if (!o.group.empty()) corpus.push_back(gen_cayley(parse_group_table(read_text_file(o.group)), o.group));
    for (const auto& inst : corpus)
        if (inst.graph.order() > oracle_config(o).cap) throw OracleInfeasible(inst.name + " exceeds --cap");
    rep.instance = ordered_json{{"corpus", "circulants"}, {"max_order", o.max_order}, {"instances", corpus.size()}};
    merge_outcome(rep, vt_experiment(corpus, o.jobs), true);
}

// Parses argv, runs one subcommand, writes the report and returns the exit
// code: 0 when every check passed, 1 on a failed check, 2 on bad input.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Longest path and cycle transversal engine"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub, bool graph_input) {
        sub->add_option("--kind", o.kind, "path or cycle")->check(CLI::IsMember({"path", "cycle"}));
        sub->add_option("--input", o.input, graph_input ? "graph file" : "input file");
        sub->add_option("--format", o.format, "edgelist or graph6 (default: by extension)")->check(CLI::IsMember({"edgelist", "graph6"}));
        sub->add_option("--out", o.out, "write the JSON report here instead of stdout");
        sub->add_option("--seed", o.seed, "seed for every randomized corpus");
        sub->add_option("--cap", o.cap, "oracle vertex cap");
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
        sub->add_flag("--force", o.force, "use the structural construction even when a short cycle suffices");
        sub->add_flag("--timing", o.timing, "record wall-clock timings");
        sub->add_flag("--records", o.records, "include every check record in the report");
    };
    auto* tr = app.add_subcommand("transversal", "certified transversal of one graph");
    common(tr, true);
    auto* orc = app.add_subcommand("oracle", "exact longest family and transversal number");
    common(orc, true);
    auto* dec = app.add_subcommand("decompose", "2-separator tree decomposition");
    common(dec, true);
    auto* soc = app.add_subcommand("society", "maximum transaction and linear decomposition");
    common(soc, true);
    soc->add_option("--omega", o.omega, "comma-separated cyclic order, e.g. 0,3,5")->required();
    auto* lem = app.add_subcommand("lemmas", "randomized and exhaustive lemma checks");
    common(lem, false);
    lem->add_option("--check", o.check, "matching|cubic|distantpairs|inequality|decomposition|all");
    lem->add_option("--samples", o.samples, "inequality sample count");
    auto* sw = app.add_subcommand("sweep", "engine vs oracle over a corpus");
    common(sw, false);
    sw->add_option("--exhaustive", o.exhaustive, "every class on N vertices (see --min-order)");
    sw->add_option("--min-order", o.min_order, "smallest order in the exhaustive corpus (default N)");
    sw->add_option("--csv", o.csv, "CSV summary path");
    auto* vt = app.add_subcommand("vt", "vertex-transitive corollary checks");
    common(vt, false);
    vt->add_option("--max-order", o.max_order, "largest circulant order");
    vt->add_option("--group", o.group, "extra Cayley graph from a group table file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    RunReport rep;
    rep.command = sub->get_name();
    rep.include_records = o.records;
    rep.log = CheckLog(o.records);
    // Output locations and thread count do not affect results; leaving them
    // out keeps reports byte-identical across --jobs values.
    static const std::vector<std::string> kUnrecorded{"help", "out", "csv", "jobs"};
    for (const CLI::Option* opt : sub->get_options()) {
        const std::string name = opt->get_single_name();
        if (opt->count() > 0 && std::find(kUnrecorded.begin(), kUnrecorded.end(), name) == kUnrecorded.end())
            rep.arguments[name] = opt->as<std::string>();
    }
    rep.arguments["seed"] = o.seed;

    const auto start = std::chrono::steady_clock::now();
    try {
        ScopedCheckLog scope(rep.log);
        const std::string& name = rep.command;
        if (name == "transversal") cmd_transversal(o, rep);
        else if (name == "oracle") cmd_oracle(o, rep);
        else if (name == "decompose") cmd_decompose(o, rep);
        else if (name == "society") cmd_society(o, rep);
        else if (name == "lemmas") cmd_lemmas(o, rep);
        else if (name == "sweep") cmd_sweep(o, rep);
        else cmd_vt(o, rep);
    } catch (const CheckFailure&) {
        // Already in the log with its witness.
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const OracleInfeasible& e) {
        err << "oracle infeasible: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        rep.errors.push_back(std::string("internal error: ") + e.what());
    }
    if (o.timing)
        rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    const std::string text = dump_report(rep);
    try {
        if (o.out.empty()) out << text;
        else write_text_file(o.out, text);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
    if (!rep.passed()) {
        err << rep.command << ": " << rep.log.failures() << " failed checks, " << rep.errors.size() << " errors\n";
        for (const auto& r : rep.log.records())
            if (!r.pass) err << "  " << r.id << ": " << r.witness << "\n";
        for (const auto& e : rep.errors) err << "  " << e << "\n";
        return 1;
    }
    return 0;
}

}  // namespace lpt::cli

#endif  // LPT_TOOLS_CLI_HPP
