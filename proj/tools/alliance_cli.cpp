// Command-line front end. Results go to stdout as JSON (instances as text or
// JSON), diagnostics to stderr. Exit codes: 0 found/yes, 1 none/no, 2 bad
// input. verify-reduction exits 0 when every check passes and 1 on a mismatch.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "alliance/alliance.hpp"
#include "alliance/exact.hpp"
#include "alliance/generators.hpp"
#include "alliance/io.hpp"
#include "alliance/nd_solver.hpp"
#include "alliance/reductions.hpp"
#include "alliance/tree_dp.hpp"
#include "alliance/type_partition.hpp"
#include "alliance/weighted.hpp"

using namespace alliance;

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_input = 2;

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const json &j) { std::cout << j.dump(2) << '\n'; }

Graph load_graph(const std::string &path) { return parse_graph(read_file(path)); }

int emit_record(const ResultRecord &rec) {
    emit(rec.to_json());
    return rec.status == "found" ? exit_yes : exit_no;
}

struct Options {
    std::string graph, set, instance, kind, stage = "plain", dump_dp;
    int kmin = 2, k = 0, root = -1, n = 0, s = 0, m = 0, wmax = 1, count = 10, jobs = 1;
    long long r = 1;
    double p = 0.5;
    std::uint64_t seed = 0;
    bool seed_given = false, connected = false;
};

int cmd_check(const Options &o) {
    Graph g = load_graph(o.graph);
    VertexSet s = parse_vertex_list(o.set);
    require_members_of(g, s);
    auto report = protection_report(g, s);
    json j = to_json(report);
    j["set"] = to_json(s);
    j["locally_minimal"] = is_locally_minimal(g, s);
    j["certificate"] = certify_sufficient_minimality(g, s);
    auto cap = Capacity::from_environment();
    if (static_cast<int>(s.size()) <= cap.enumeration_set)
        j["globally_minimal"] = is_globally_minimal(g, s, cap.enumeration_set);
    else
        j["globally_minimal"] = nullptr;
    emit(j);
    return report.is_alliance ? exit_yes : exit_no;
}

int cmd_solve_brute(const Options &o) {
    Stopwatch clock;
    if (!o.instance.empty()) {
        auto inst = annotated_from_json(json::parse(read_file(o.instance)));
        int k_min = static_cast<int>(std::max<long long>(o.kmin, inst.k));
        auto res = annotated_max_gmda(inst.graph, inst.necessary, inst.forbidden, k_min);
        return emit_record(make_record(inst.graph, res, "enumeration", clock.ms()));
    }
    Graph g = load_graph(o.graph);
    auto res = o.root >= 0 ? rooted_exists_bruteforce(g, o.root) : max_gmda_bruteforce(g, o.kmin);
    return emit_record(make_record(g, res, "enumeration", clock.ms()));
}

int cmd_solve_tree(const Options &o) {
    Graph g = load_graph(o.graph);
    Vertex root = std::max(o.root, 0);
    Stopwatch clock;
    auto res = solve_tree(g, o.kmin, root);
    auto rec = make_record(g, res, "marginal-certificate", clock.ms());
    if (!o.dump_dp.empty()) {
        auto t = root_tree(g, root);
        std::ofstream out(o.dump_dp);
        if (!out) throw std::invalid_argument("cannot write " + o.dump_dp);
        out << dp_to_json(t, compute_dp(t)).dump(1) << '\n';
    }
    return emit_record(rec);
}

int cmd_solve_nd(const Options &o) {
    Graph g = load_graph(o.graph);
    Stopwatch clock;
    auto res = solve_nd(g, o.kmin);
    auto rec = make_record(g, res.result, res.verified_by == "enumeration" ? "enumeration" : "marginal-certificate",
                           clock.ms());
    if (res.result.found) rec.class_counts = res.counts;
    return emit_record(rec);
}

int cmd_nd_partition(const Options &o) {
    Graph g = load_graph(o.graph);
    auto p = compute_type_partition(g);
    emit(partition_to_json(p, build_type_graph(g, p)));
    return exit_yes;
}

int cmd_reduce(const Options &o) {
    if (o.kind == "clique-rooted") {
        auto inst = reduce_clique_to_rooted(load_graph(o.graph), o.k);
        emit(to_json(inst));
        return exit_yes;
    }
    auto gw = parse_weighted_graph(read_file(o.graph));
    auto chain = reduce_mmo_chain(gw, o.r);
    if (o.stage == "fn") emit(to_json(chain.fn));
    else if (o.stage == "f") emit(to_json(chain.f));
    else std::cout << "# k " << chain.plain_k << '\n' << format_graph(chain.plain);
    return exit_yes;
}

int verify_clique_rooted(const Options &o) {
    Graph g = load_graph(o.graph);
    auto inst = reduce_clique_to_rooted(g, o.k);
    auto clique = find_k_clique(g, o.k);
    auto rooted = rooted_exists_bruteforce(inst.graph, inst.root);
    json j{{"kind", "clique-rooted"}, {"k", o.k}, {"target_order", inst.graph.order()},
           {"base", clique ? "yes" : "no"}, {"target", rooted.found ? "yes" : "no"}};
    bool ok = clique.has_value() == rooted.found;
    if (clique) {
        auto lifted = lift_clique_witness(inst, *clique);
        bool verified = lifted.contains(inst.root) && certify_sufficient_minimality(inst.graph, lifted);
        j["lifted_witness"] = to_json(lifted);
        j["witness_verified"] = verified;
        ok = ok && verified;
    }
    j["agree"] = ok;
    emit(j);
    return ok ? exit_yes : exit_no;
}

int verify_mmo(const Options &o) {
    auto gw = parse_weighted_graph(read_file(o.graph));
    auto chain = reduce_mmo_chain(gw, o.r);
    auto orient = mmo_bruteforce(gw, o.r);
    json j{{"kind", "mmo"},
           {"r", o.r},
           {"k", chain.fn.k},
           {"k_plain", chain.plain_k},
           {"pairs", chain.pairs.size()},
           {"fn_order", chain.fn.graph.order()},
           {"plain_order", chain.plain.order()},
           {"base", orient ? "yes" : "no"}};
    bool ok = true;
    if (orient) {
        auto s = lift_mmo_witness(chain.fn, gw, *orient, o.r);
        bool fn_ok = static_cast<long long>(s.size()) == chain.fn.k && s.includes(chain.fn.necessary) &&
                     !s.intersects(chain.fn.forbidden) && certify_sufficient_minimality(chain.fn.graph, s);
        bool round_trip = fn_ok && extract_orientation(chain.fn, gw, s) == *orient;
        auto plain = lift_fn_to_plain(chain, s);
        bool plain_ok = static_cast<long long>(plain.size()) == chain.plain_k &&
                        certify_sufficient_minimality(chain.plain, plain);
        j["fn_witness_verified"] = fn_ok;
        j["round_trip"] = round_trip;
        j["plain_witness_verified"] = plain_ok;
        ok = fn_ok && round_trip && plain_ok;
    }
    j["verified"] = ok;
    emit(j);
    return ok ? exit_yes : exit_no;
}

int cmd_gen(const Options &o) {
    if (!o.seed_given) throw std::invalid_argument("gen requires --seed");
    if (o.kind == "tree") std::cout << format_graph(random_tree(o.n, o.seed));
    else if (o.kind == "gnp") std::cout << format_graph(random_gnp(o.n, o.p, o.seed));
    else if (o.kind == "regular") std::cout << format_graph(random_regular(o.n, o.s, o.seed));
    else if (o.connected) std::cout << format_weighted_graph(random_connected_weighted(o.n, o.m, o.wmax, o.seed));
    else std::cout << format_weighted_graph(random_weighted(o.n, o.m, o.wmax, o.seed));
    return exit_yes;
}

/// Solves `count` generated instances (seeds seed, seed+1, ...) on `jobs`
/// worker threads and reports per-instance sizes and times.
int cmd_bench(const Options &o) {
    if (o.count < 0 || o.jobs < 1) throw std::invalid_argument("bench needs --count >= 0 and --jobs >= 1");
    auto cap = Capacity::from_environment();
    struct Row {
        std::uint64_t seed = 0;
        long long size = 0;
        double ms = 0;
        std::string error;
    };
    std::vector<Row> rows(static_cast<std::size_t>(o.count));
    std::atomic<int> next{0};
    Stopwatch total;
    auto worker = [&] {
        for (int i; (i = next++) < o.count;) {
            Row &row = rows[i];
            row.seed = o.seed + static_cast<std::uint64_t>(i);
            try {
                Stopwatch clock;
                SolveResult res;
                if (o.kind == "tree") res = solve_tree(random_tree(o.n, row.seed), o.kmin);
                else if (o.kind == "nd") res = solve_nd(random_gnp(o.n, o.p, row.seed), o.kmin, cap).result;
                else res = max_gmda_bruteforce(random_gnp(o.n, o.p, row.seed), o.kmin, cap);
                row.ms = clock.ms();
                row.size = static_cast<long long>(res.size());
            } catch (const std::exception &e) {
                row.error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < o.jobs; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();

    json results = json::array();
    bool failed = false;
    for (const auto &row : rows) {
        json r{{"seed", row.seed}, {"size", row.size}, {"time_ms", row.ms}};
        if (!row.error.empty()) {
            r["error"] = row.error;
            failed = true;
        }
        results.push_back(r);
    }
    emit({{"kind", o.kind}, {"n", o.n}, {"count", o.count}, {"jobs", o.jobs}, {"wall_ms", total.ms()},
          {"results", results}});
    return failed ? exit_input : exit_yes;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Globally minimal defensive alliance solvers and reductions"};
    app.require_subcommand(1);
    Options o;

    auto graph_opt = [&](CLI::App *c) { return c->add_option("--graph", o.graph, "graph file")->check(CLI::ExistingFile); };

    auto *check = app.add_subcommand("check", "evaluate the alliance predicates on a vertex set");
    graph_opt(check)->required();
    check->add_option("--set", o.set, "comma separated vertex list")->required();

    auto *brute = app.add_subcommand("solve-brute", "exact search by connected subset enumeration");
    graph_opt(brute);
    brute->add_option("--kmin", o.kmin, "minimum solution size");
    brute->add_option("--root", o.root, "report a minimal alliance containing this vertex");
    brute->add_option("--instance", o.instance, "annotated instance JSON")->check(CLI::ExistingFile);

    auto *tree = app.add_subcommand("solve-tree", "tree dynamic program");
    graph_opt(tree)->required();
    tree->add_option("--kmin", o.kmin, "minimum solution size");
    tree->add_option("--root", o.root, "root used by the recurrence");
    tree->add_option("--dump-dp", o.dump_dp, "write the DP table as JSON to this file");

    auto *nd = app.add_subcommand("solve-nd", "search over class count vectors");
    graph_opt(nd)->required();
    nd->add_option("--kmin", o.kmin, "minimum solution size");

    auto *part = app.add_subcommand("nd-partition", "type classes and type graph");
    graph_opt(part)->required();

    auto *reduce = app.add_subcommand("reduce", "build a reduced instance");
    reduce->add_option("kind", o.kind, "clique-rooted | mmo")->required()->check(CLI::IsMember({"clique-rooted", "mmo"}));
    graph_opt(reduce)->required();
    reduce->add_option("--k", o.k, "clique size");
    reduce->add_option("--r", o.r, "outdegree bound");
    reduce->add_option("--stage", o.stage, "fn | f | plain")->check(CLI::IsMember({"fn", "f", "plain"}));

    auto *verify = app.add_subcommand("verify-reduction", "check a reduction end to end with the oracles");
    verify->add_option("kind", o.kind, "clique-rooted | mmo")->required()->check(CLI::IsMember({"clique-rooted", "mmo"}));
    graph_opt(verify)->required();
    verify->add_option("--k", o.k, "clique size");
    verify->add_option("--r", o.r, "outdegree bound");

    auto *gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->add_option("kind", o.kind, "tree | gnp | regular | weighted")
        ->required()
        ->check(CLI::IsMember({"tree", "gnp", "regular", "weighted"}));
    gen->add_option("--n", o.n, "vertices")->required();
    gen->add_option("--p", o.p, "edge probability (gnp)");
    gen->add_option("--s", o.s, "degree (regular)");
    gen->add_option("--m", o.m, "edges (weighted)");
    gen->add_option("--wmax", o.wmax, "maximum weight (weighted)");
    gen->add_flag("--connected", o.connected, "start from a random spanning tree (weighted)");
    gen->add_option("--seed", o.seed, "PRNG seed")->required();

    auto *bench = app.add_subcommand("bench", "time a solver over seeded instances");
    bench->add_option("kind", o.kind, "tree | nd | brute")->required()->check(CLI::IsMember({"tree", "nd", "brute"}));
    bench->add_option("--n", o.n, "vertices")->required();
    bench->add_option("--count", o.count, "instances");
    bench->add_option("--p", o.p, "edge probability (nd, brute)");
    bench->add_option("--kmin", o.kmin, "minimum solution size");
    bench->add_option("--seed", o.seed, "first seed");
    bench->add_option("--jobs", o.jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_input;
    }
    o.seed_given = gen->count("--seed") > 0;

    try {
        if (*check) return cmd_check(o);
        if (*brute) {
            if (o.graph.empty() == o.instance.empty())
                throw std::invalid_argument("solve-brute needs exactly one of --graph and --instance");
            return cmd_solve_brute(o);
        }
        if (*tree) return cmd_solve_tree(o);
        if (*nd) return cmd_solve_nd(o);
        if (*part) return cmd_nd_partition(o);
        if (*reduce) {
            if (o.kind == "clique-rooted" && !reduce->count("--k")) throw std::invalid_argument("reduce clique-rooted needs --k");
            if (o.kind == "mmo" && !reduce->count("--r")) throw std::invalid_argument("reduce mmo needs --r");
            return cmd_reduce(o);
        }
        if (*verify) {
            if (o.kind == "clique-rooted") {
                if (!verify->count("--k")) throw std::invalid_argument("verify-reduction clique-rooted needs --k");
                return verify_clique_rooted(o);
            }
            if (!verify->count("--r")) throw std::invalid_argument("verify-reduction mmo needs --r");
            return verify_mmo(o);
        }
        if (*gen) return cmd_gen(o);
        if (*bench) return cmd_bench(o);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        emit({{"status", "error"}, {"message", e.what()}});
        return exit_input;
    }
    return exit_input;
}
