#ifndef LPT_EXPERIMENTS_HPP
#define LPT_EXPERIMENTS_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "lpt/checks.hpp"
#include "lpt/enumerate_graphs.hpp"
#include "lpt/generators.hpp"
#include "lpt/io.hpp"
#include "lpt/lemmas/cubic.hpp"
#include "lpt/lemmas/distant_pairs.hpp"
#include "lpt/lemmas/inequality.hpp"
#include "lpt/lemmas/matching.hpp"
#include "lpt/linear_decomposition.hpp"
#include "lpt/report.hpp"
#include "lpt/transversal.hpp"
#include "lpt/tree_decomposition.hpp"
#include "lpt/vt.hpp"

namespace lpt {

// Output of one instance of an experiment, produced under its own check log.
struct ItemResult {
    CheckLog log;
    std::string error;
    nlohmann::ordered_json data;
    std::string csv;
};

struct ExperimentOutcome {
    std::string name;
    CheckLog log;
    std::vector<std::string> errors;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    std::vector<nlohmann::ordered_json> items;
    std::vector<std::string> csv_rows;

    bool passed() const { return log.failures() == 0 && errors.empty(); }
};

// Runs fn(i, item) for i < count on `jobs` threads and merges the results in
// index order, so the outcome does not depend on scheduling.
inline ExperimentOutcome run_items(std::string name, std::size_t count, int jobs,
                                   const std::function<void(std::size_t, ItemResult&)>& fn) {
    std::vector<ItemResult> results(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            ItemResult& item = results[i];
            ScopedCheckLog scope(item.log);
            try {
                fn(i, item);
            } catch (const CheckFailure&) {
                // Already recorded as a failed check.
            } catch (const std::exception& e) {
                item.error = "item " + std::to_string(i) + ": " + e.what();
            }
        }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    ExperimentOutcome out;
    out.name = std::move(name);
    for (auto& item : results) {
        out.log.append(item.log);
        if (!item.error.empty()) out.errors.push_back(item.error);
        if (!item.data.is_null()) out.items.push_back(std::move(item.data));
        if (!item.csv.empty()) out.csv_rows.push_back(std::move(item.csv));
    }
    out.summary["instances"] = count;
    return out;
}

inline std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

// ---------------------------------------------------------------- sweeps

struct SweepOptions {
    Kind kind = Kind::Path;
    int min_order = 2;
    int max_order = 7;
    int jobs = 1;
    bool force_construction = false;
    bool timing = false;
    int cap = 24;
};

// Runs the engine on every graph of the list and cross-checks each
// certificate against the exact oracle.
inline ExperimentOutcome sweep_graphs(const std::vector<Graph>& graphs, const SweepOptions& opt) {
    EngineOptions engine{opt.force_construction, OracleConfig{opt.cap, 4'000'000}};
    ExperimentOutcome out = run_items("sweep", graphs.size(), opt.jobs, [&](std::size_t i, ItemResult& item) {
        const Graph& g = graphs[i];
        const std::string name = to_graph6(g);
        auto start = std::chrono::steady_clock::now();
        LongestFamily fam = enumerate_longest(g, opt.kind, engine.oracle);
        TransversalCertificate cert = transversal(g, opt.kind, engine);
        const std::string why = certificate_violation(g, cert, fam);
        check_true("sweep.certificate", why.empty(), [&] { return name + " " + why; });
        const std::size_t exact = minimum_hitting_set(fam).vertices.size();
        check_le("sweep.oracle_dominance", static_cast<double>(exact), static_cast<double>(cert.s.size()), [&] { return name; });
        bool pairwise = true;
        for (std::size_t a = 0; a < fam.size() && pairwise; ++a)
            for (std::size_t b = a + 1; b < fam.size() && pairwise; ++b) pairwise = (fam.masks[a] & fam.masks[b]) != 0;
        check_true("sweep.pairwise_intersect", pairwise, [&] { return name; });
        const double size = static_cast<double>(cert.s.size());
        check_le("sweep.bound_sqrt", size, std::sqrt(8.0 * g.order()), [&] { return name; });
        if (opt.kind == Kind::Path) check_le("sweep.bound_power", size, 33.0 * std::pow(cert.ell, 5.0 / 9.0), [&] { return name; });
        const double ms = opt.timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() : 0.0;
        const double margin = cert.bound_used - static_cast<double>(cert.s.size());
        item.csv = name + "," + std::to_string(g.order()) + "," + std::to_string(g.size()) + "," + to_string(opt.kind) + "," +
                   std::to_string(cert.ell) + "," + std::to_string(exact) + "," + std::to_string(cert.s.size()) + "," +
                   to_string(cert.branch) + "," + format_double(cert.bound_used) + "," + format_double(margin) + "," +
                   format_double(ms);
        item.data["branch"] = to_string(cert.branch);
        if (cert.case2) {
            item.data["p"] = cert.case2->p;
            item.data["S"] = cert.s.size();
        }
    });
    std::map<std::string, int> branches;
    int case2 = 0, max_p = 0;
    for (const auto& d : out.items) {
        ++branches[d["branch"].get<std::string>()];
        if (d.contains("p")) {
            ++case2;
            max_p = std::max(max_p, d["p"].get<int>());
        }
    }
    out.summary["kind"] = to_string(opt.kind);
    out.summary["force_construction"] = opt.force_construction;
    out.summary["branches"] = branches;
    out.summary["case2_runs"] = case2;
    out.summary["case2_max_p"] = max_p;
    out.items.clear();
    return out;
}

// Connected (path kind) or 2-connected (cycle kind) graphs with order in
// [min_order, max_order], one per isomorphism class.
inline std::vector<Graph> exhaustive_corpus(Kind kind, int min_order, int max_order) {
    std::vector<Graph> out;
    for (int n = std::max(min_order, kind == Kind::Path ? 2 : 3); n <= max_order; ++n) {
        auto level = kind == Kind::Path ? connected_graphs(n) : two_connected_graphs(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

inline ExperimentOutcome sweep_exhaustive(const SweepOptions& opt) {
    auto graphs = exhaustive_corpus(opt.kind, opt.min_order, opt.max_order);
    ExperimentOutcome out = sweep_graphs(graphs, opt);
    out.name = std::string("sweep-") + to_string(opt.kind);
    out.summary["min_order"] = opt.min_order;
    out.summary["max_order"] = opt.max_order;
    return out;
}

// ---------------------------------------------------------------- lemmas

// Most matching edges on any path of P1 ∪ P2 ∪ M. A matching edge stays
// usable while both ends are unused or one end is the current endpoint.
inline int matching_path_oracle(const MatchingInstance& inst) {
    Graph g = inst.union_graph();
    const int n = g.order();
    std::vector<Vertex> partner(static_cast<std::size_t>(n), -1);
    for (auto [a, b] : inst.m) {
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }
    const int total = static_cast<int>(inst.m.size());
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto usable = [&](Vertex end) {
        int k = 0;
        for (auto [a, b] : inst.m)
            k += (!used[static_cast<std::size_t>(a)] || a == end) && (!used[static_cast<std::size_t>(b)] || b == end);
        return k;
    };
    int best = 0;
    std::function<void(Vertex, int)> dfs = [&](Vertex v, int count) {
        best = std::max(best, count);
        if (best == total || count + usable(v) <= best) return;
        for (Vertex w : g.neighbors(v)) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            dfs(w, count + (partner[static_cast<std::size_t>(v)] == w));
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (Vertex s = 0; s < n && best < total; ++s) {
        used[static_cast<std::size_t>(s)] = 1;
        dfs(s, 0);
        used[static_cast<std::size_t>(s)] = 0;
    }
    return best;
}

// Largest |V(C) \ V(C0)| over cycles C through e, by exhaustive search.
inline int cubic_gain_oracle(const CubicInstance& inst) {
    const Graph& g = inst.graph;
    const VertexSet on = inst.c0.vertex_set();
    const int outside = g.order() - static_cast<int>(on.size());
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    int best = 0, gained = 0;
    std::function<void(Vertex)> dfs = [&](Vertex v) {
        for (Vertex w : g.neighbors(v)) {
            if (best == outside) return;
            if (w == inst.e.u) {
                if (v != inst.e.v) best = std::max(best, gained);
                continue;
            }
            if (used[static_cast<std::size_t>(w)]) continue;
            const bool off = !contains(on, w);
            used[static_cast<std::size_t>(w)] = 1;
            gained += off;
            dfs(w);
            gained -= off;
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    used[static_cast<std::size_t>(inst.e.u)] = used[static_cast<std::size_t>(inst.e.v)] = 1;
    dfs(inst.e.v);
    return best;
}

inline ExperimentOutcome matching_experiment(std::uint64_t seed, int count = 200, int max_m = 30, int exhaustive_max = 12,
                                             int jobs = 1) {
    ExperimentOutcome out = run_items("matching", static_cast<std::size_t>(count), jobs, [&](std::size_t i, ItemResult& item) {
        Rng rng = Rng::stream(seed, i);
        const int m = rng.uniform_int(1, max_m);
        MatchingInstance inst = random_matching_instance(m, m <= exhaustive_max ? 2 : 6, rng);
        MatchingResult res = matching_traverse_path(inst);
        check_true("matching.path_valid", is_path_in(inst.union_graph(), res.path), [&] { return to_string(res.path.vertices); });
        if (m <= exhaustive_max)
            check_le("matching.oracle", res.matching_edges, matching_path_oracle(inst), [&] { return "|M|=" + std::to_string(m); });
        item.data = nlohmann::ordered_json{{"m", m}, {"edges", res.matching_edges}};
    });
    out.summary["seed"] = seed;
    return out;
}

inline ExperimentOutcome cubic_experiment(std::uint64_t seed, int count = 100, int max_n = 20, int jobs = 1) {
    ExperimentOutcome out = run_items("cubic", static_cast<std::size_t>(count), jobs, [&](std::size_t i, ItemResult& item) {
        Rng rng = Rng::stream(seed, i);
        CubicInstance inst = random_cubic_instance(max_n, rng);
        CubicResult r = cubic_cycle_finder(inst);
        check_true("cubic.cycle_valid", is_cycle_in(inst.graph, r.cycle) && cycle_has_edge(r.cycle, inst.e),
                   [&] { return to_string(r.cycle.vertices); });
        check_le("cubic.oracle", r.gain, cubic_gain_oracle(inst), [&] { return "n=" + std::to_string(inst.graph.order()); });
        item.data = nlohmann::ordered_json{{"n", inst.graph.order()}, {"gain", r.gain}, {"outside", r.outside}};
    });
    out.summary["seed"] = seed;
    return out;
}

// Every non-interleaved placement of k pairs on cycles up to max_len, plus
// the extremal configuration for 2 <= k <= extremal_k.
inline ExperimentOutcome distant_pairs_experiment(int max_len = 12, int max_k = 4, int extremal_k = 6, int jobs = 1) {
    ExperimentOutcome out = run_items("distantpairs", static_cast<std::size_t>(max_len - 2), jobs, [&](std::size_t idx, ItemResult& item) {
        const int len = static_cast<int>(idx) + 3;
        Cycle c;
        for (int i = 0; i < len; ++i) c.vertices.push_back(i);
        long long placements = 0;
        for (int k = 1; k <= max_k && 2 * k <= len; ++k) {
            std::vector<int> pick(static_cast<std::size_t>(len), 0);
            std::fill(pick.end() - 2 * k, pick.end(), 1);
            do {
                std::vector<int> chosen;
                for (int i = 0; i < len; ++i)
                    if (pick[static_cast<std::size_t>(i)]) chosen.push_back(i);
                for (int rot = 0; rot < 2 * k; ++rot) {
                    std::vector<int> as, bs;
                    for (int i = 0; i < 2 * k; ++i) (i < k ? as : bs).push_back(chosen[static_cast<std::size_t>((rot + i) % (2 * k))]);
                    std::vector<int> perm(static_cast<std::size_t>(k));
                    std::iota(perm.begin(), perm.end(), 0);
                    do {
                        std::vector<std::pair<Vertex, Vertex>> pairs;
                        for (int i = 0; i < k; ++i) pairs.emplace_back(as[static_cast<std::size_t>(i)], bs[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
                        distant_pairs_sum(c, pairs);
                        ++placements;
                    } while (std::next_permutation(perm.begin(), perm.end()));
                }
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
        item.data = nlohmann::ordered_json{{"cycle", len}, {"placements", placements}};
    });
    long long placements = 0;
    for (const auto& d : out.items) placements += d["placements"].get<long long>();
    out.items.clear();
    ScopedCheckLog scope(out.log);
    nlohmann::ordered_json extremal = nlohmann::ordered_json::object();
    for (int k = 2; k <= extremal_k; ++k) {
        auto [c, pairs] = extremal_distant_pairs(k);
        long long sum = 0;
        try {
            sum = distant_pairs_sum(c, pairs).sum;
        } catch (const CheckFailure&) {
        }
        check_true("distantpairs.extremal", sum == (k * k + 1) / 2, [&] { return "k=" + std::to_string(k) + " sum=" + std::to_string(sum); });
        extremal[std::to_string(k)] = sum;
    }
    out.summary["placements"] = placements;
    out.summary["extremal_sums"] = extremal;
    return out;
}

inline ExperimentOutcome inequality_experiment(std::uint64_t seed, int samples = 100000, int jobs = 1) {
    constexpr int kChunk = 1000;
    const int chunks = (samples + kChunk - 1) / kChunk;
    ExperimentOutcome out = run_items("inequality", static_cast<std::size_t>(chunks), jobs, [&](std::size_t i, ItemResult&) {
        Rng rng = Rng::stream(seed, i);
        const int here = std::min(kChunk, samples - static_cast<int>(i) * kChunk);
        for (int s = 0; s < here; ++s) {
            const double c = 0.18 * (1.0 - rng.uniform01());
            const double x = rng.uniform(0.0, 100.0);
            std::vector<double> ys(static_cast<std::size_t>(rng.uniform_int(1, 6)));
            for (double& y : ys) y = rng.uniform(0.0, 100.0);
            try {
                inequality_check(c, x, ys);
            } catch (const CheckFailure&) {
            }
        }
    });
    out.summary["seed"] = seed;
    out.summary["samples"] = samples;
    return out;
}

inline Society random_society(Rng& rng, int max_n) {
    const int n = rng.uniform_int(2, max_n);
    Graph g = random_connected(n, rng.uniform(0.05, 0.35), rng);
    std::vector<Vertex> vs = g.vertices();
    rng.shuffle(vs);
    vs.resize(static_cast<std::size_t>(rng.uniform_int(2, n)));
    return Society(std::move(g), vs);
}

inline ExperimentOutcome decomposition_experiment(std::uint64_t seed, int tutte_count = 100, int tutte_max_n = 30,
                                                  int society_count = 100, int society_max_n = 18, int jobs = 1) {
    const std::size_t total = static_cast<std::size_t>(tutte_count + society_count);
    ExperimentOutcome out = run_items("decomposition", total, jobs, [&](std::size_t i, ItemResult& item) {
        if (i < static_cast<std::size_t>(tutte_count)) {
            Rng rng = Rng::stream(seed, i);
            Graph g = random_two_connected(rng.uniform_int(3, tutte_max_n), rng.uniform(0.0, 0.3), rng);
            TreeDecomposition td = tutte_decomposition(g);
            DecompositionReport rep = verify_tree_decomposition(g, td);
            check_true("tutte.valid", rep.valid, [&] { return to_graph6(g) + (rep.violations.empty() ? "" : " " + rep.violations.front()); });
            check_le("tutte.adhesion", rep.adhesion, 2.0, [&] { return to_graph6(g); });
            item.data = nlohmann::ordered_json{{"type", "tutte"}, {"n", g.order()}, {"bags", td.bag_count()}};
        } else {
            Rng rng = Rng::stream(seed, 100000 + i);
            Society s = random_society(rng, society_max_n);
            const int p = max_transaction(s).order();
            LinearDecomposition ld = build_linear_decomposition(s);
            LinearDecompositionReport rep = verify_linear_decomposition(s, ld);
            check_true("linear.valid", rep.valid, [&] { return to_graph6(s.graph) + " " + to_string(s.omega); });
            check_le("linear.adhesion", rep.adhesion, p, [&] { return to_graph6(s.graph) + " " + to_string(s.omega); });
            item.data = nlohmann::ordered_json{{"type", "society"}, {"n", s.graph.order()}, {"t", s.size()}, {"p", p}};
        }
    });
    out.summary["seed"] = seed;
    out.items.clear();
    return out;
}

// ---------------------------------------------------------------- vertex-transitive

inline std::vector<VTInstance> vt_corpus(int max_n, bool petersen = true) {
    std::vector<VTInstance> out;
    for (int n = 3; n <= max_n; ++n) {
        auto level = all_connected_circulants(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    if (petersen) out.push_back(gen_named(petersen_graph(), "petersen"));
    return out;
}

inline ExperimentOutcome vt_experiment(const std::vector<VTInstance>& corpus, int jobs = 1) {
    ExperimentOutcome out = run_items("vt", corpus.size(), jobs, [&](std::size_t i, ItemResult& item) {
        const VTInstance& inst = corpus[i];
        CorollaryReport r = corollary_check(inst);
        item.data = nlohmann::ordered_json{{"name", inst.name},       {"family", to_string(inst.family)},
                                           {"n", r.n},                {"degree", r.degree},
                                           {"ell", r.ell},            {"ell_cycle", r.ell_cycle},
                                           {"lpt", r.lpt},            {"connectivity", r.connectivity}};
    });
    return out;
}

// Copies an outcome into a run report.
inline void merge_outcome(RunReport& rep, ExperimentOutcome&& out, bool keep_items = false) {
    rep.log.append(out.log);
    rep.errors.insert(rep.errors.end(), out.errors.begin(), out.errors.end());
    nlohmann::ordered_json j = out.summary;
    j["pass"] = out.passed();
    if (keep_items) j["items"] = out.items;
    rep.result[out.name] = std::move(j);
}

}  // namespace lpt

#endif  // LPT_EXPERIMENTS_HPP
