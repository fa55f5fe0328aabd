#include "vmstar/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vmstar/dh.hpp"
#include "vmstar/dh_solver.hpp"
#include "vmstar/io.hpp"
#include "vmstar/ksoet.hpp"
#include "vmstar/oracle.hpp"
#include "vmstar/randgen.hpp"
#include "vmstar/small_target.hpp"
#include "vmstar/soet.hpp"
#include "vmstar/tableau.hpp"

namespace vmstar {

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInternal = 4;

std::vector<Label> parse_label_list(const std::string& csv) {
    std::vector<Label> out;
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) out.emplace_back(tok);
    }
    return out;
}

std::vector<int> parse_sizes(const std::string& spec) {
    // "10..200" (doubling steps), "10..200:25" (fixed step) or "10,25,50".
    std::vector<int> out;
    auto dots = spec.find("..");
    if (dots != std::string::npos) {
        int lo = std::stoi(spec.substr(0, dots));
        std::string rest = spec.substr(dots + 2);
        auto colon = rest.find(':');
        int step = 0;
        int hi;
        if (colon != std::string::npos) {
            hi = std::stoi(rest.substr(0, colon));
            step = std::stoi(rest.substr(colon + 1));
        } else {
            hi = std::stoi(rest);
        }
        if (step > 0)
            for (int n = lo; n <= hi; n += step) out.push_back(n);
        else
            for (int n = lo; n <= hi; n *= 2) out.push_back(n);
        return out;
    }
    for (const auto& l : parse_label_list(spec)) out.push_back(int(l.value()));
    return out;
}

json plan_json(const Plan& p) { return io::plan_moves_to_json(p); }

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

int cmd_check_vm(const std::string& graph_path, const std::string& target_path, long long budget,
                 std::ostream& out) {
    Graph g = io::load_graph(graph_path);
    Graph target = io::load_graph(target_path);
    OracleOptions opt;
    opt.budget = budget;
    try {
        auto plan = vertex_minor_bruteforce(g, target, opt);
        if (plan) {
            emit(out, json{{"vertex_minor", true}, {"plan", plan_json(*plan)}});
            return kExitYes;
        }
        emit(out, json{{"vertex_minor", false}});
        return kExitNo;
    } catch (const BudgetExceeded& e) {
        emit(out, json{{"status", "budget_exceeded"}, {"detail", e.what()}});
        return kExitUnknown;
    }
}

int cmd_dh_star(const std::string& graph_path, const std::string& targets, bool assume_dh,
                std::ostream& out) {
    Graph g = io::load_graph(graph_path);
    SolverOptions opt;
    opt.assume_dh = assume_dh;
    SolverVerdict v = solve_star(g, parse_label_list(targets), opt);
    switch (v.status) {
        case SolveStatus::Plan:
            emit(out, json{{"status", "plan"},
                           {"certified_dh", v.certified_dh},
                           {"plan", plan_json(*v.plan)}});
            return kExitYes;
        case SolveStatus::NotVertexMinor:
            emit(out, json{{"status", "not_vertex_minor"}, {"certified_dh", v.certified_dh}});
            return kExitNo;
        case SolveStatus::UnknownNotDH:
            emit(out, json{{"status", "unknown_not_dh"}, {"certified_dh", false}});
            return kExitUnknown;
    }
    return kExitInternal;
}

int cmd_small(const std::string& graph_path, const std::string& targets, const std::string& shape,
              std::ostream& out) {
    Graph g = io::load_graph(graph_path);
    std::vector<Label> t = parse_label_list(targets);
    if (t.empty() || t.size() > 3) throw InvalidTarget("small targets have 1 to 3 vertices");
    for (const auto& v : t)
        if (!g.has_vertex(v)) {
            // a connected target is a vertex-minor exactly when its
            // vertices are present, so absence is a certified negative
            emit(out, json{{"status", "not_vertex_minor"},
                           {"detail", "target vertex '" + v.text() + "' not in the graph"}});
            return kExitNo;
        }
    Graph target = [&]() {
        if (shape == "triangle") {
            if (t.size() != 3) throw InvalidTarget("a triangle needs 3 vertices");
            return Graph::complete(t);
        }
        if (shape == "path") return Graph::path(t);
        return Graph::star(t, t.front());  // star: first listed label is the center
    }();
    try {
        Plan p = small_vertex_minor(g, target);
        emit(out, json{{"status", "plan"}, {"plan", plan_json(p)}});
        return kExitYes;
    } catch (const NotConnected& e) {
        emit(out, json{{"status", "not_vertex_minor"}, {"detail", e.what()}});
        return kExitNo;
    }
}

int cmd_ksoet(const std::string& mg_path, const std::string& marked, int max_k, long long budget,
              std::ostream& out) {
    MultiGraph f = io::load_multigraph(mg_path);
    KSoetOptions opt;
    opt.max_k = max_k;
    opt.dpp_budget = budget;
    try {
        auto w = k_soet(f, parse_label_list(marked), opt);
        if (w) {
            std::string word = io::write_word(w->tour.induced_word());
            std::string order;
            for (size_t i = 0; i < w->order.size(); ++i) {
                if (i) order += ' ';
                order += w->order[i].text();
            }
            emit(out, json{{"exists", true}, {"witness_word", word}, {"order", order}});
            return kExitYes;
        }
        emit(out, json{{"exists", false}});
        return kExitNo;
    } catch (const BudgetExceeded& e) {
        emit(out, json{{"status", "budget_exceeded"}, {"detail", e.what()}});
        return kExitUnknown;
    }
}

int cmd_expand(const std::string& cubic_path, const std::string& format, std::ostream& out) {
    Graph r = io::load_graph(cubic_path);
    TriangularExpansion exp = triangular_expansion(r);
    if (format == "text") {
        io::write_multigraph_text(out, exp.multigraph);
        return kExitYes;
    }
    json edges = json::array();
    for (const auto& e : exp.multigraph.edges())
        edges.push_back(json::array({e.id, io::label_to_json(e.u), io::label_to_json(e.v)}));
    json originals = json::array();
    for (const auto& v : r.labels()) originals.push_back(io::label_to_json(v));
    emit(out, json{{"multigraph", json{{"edges", edges}}}, {"original_vertices", originals}});
    return kExitYes;
}

int cmd_reduce(const std::string& cubic_path, std::ostream& out) {
    Graph r = io::load_graph(cubic_path);
    auto [g, targets] = reduce_cubham_to_starvm(r);
    json t = json::array();
    for (const auto& v : targets) t.push_back(io::label_to_json(v));
    emit(out, json{{"graph", io::graph_to_json(g)}, {"targets", t}});
    return kExitYes;
}

int cmd_gen_dh(int n, uint64_t seed, double p_leaf, double p_false, double p_true, bool dot,
               std::ostream& out) {
    Rng rng(seed);
    std::vector<GrowthStep> trace;
    Graph g = random_dh(n, rng, p_leaf, p_false, p_true, &trace);
    if (dot) {
        io::write_graph_dot(out, g);
        return kExitYes;
    }
    json jtrace = json::array();
    for (const auto& s : trace) {
        const char* op = s.op == GrowthOp::Leaf ? "leaf"
                                                : (s.op == GrowthOp::FalseTwin ? "false_twin" : "true_twin");
        jtrace.push_back(json{{"op", op},
                              {"anchor", io::label_to_json(s.anchor)},
                              {"new", io::label_to_json(s.added)}});
    }
    emit(out, json{{"graph", io::graph_to_json(g)}, {"trace", jtrace}});
    return kExitYes;
}

int cmd_gen_cubic(int n, uint64_t seed, bool dot, std::ostream& out) {
    Rng rng(seed);
    Graph g = random_cubic(n, rng);
    if (dot) {
        io::write_graph_dot(out, g);
        return kExitYes;
    }
    emit(out, json{{"graph", io::graph_to_json(g)}});
    return kExitYes;
}

int cmd_verify(const std::string& graph_path, const std::string& target_path,
               const std::string& plan_path, int cap, std::ostream& out) {
    Graph g = io::load_graph(graph_path);
    Graph target = io::load_graph(target_path);
    std::ifstream pf(plan_path);
    if (!pf) throw FormatError("cannot open '" + plan_path + "'");
    json pj = json::parse(pf);
    Plan plan;
    plan.moves = io::plan_moves_from_json(pj);
    plan.source_vertices = g.labels();
    plan.target_vertices = target.labels();
    VerifyOptions opt;
    opt.qubit_cap = cap;
    VerifyResult res = verify_plan(g, target, plan, opt);
    if (res.ok) {
        emit(out, json{{"verified", true}});
        return kExitYes;
    }
    emit(out, json{{"verified", false}, {"failing_branch", res.failing_branch}});
    return kExitNo;
}

int cmd_bench(const std::string& algo, const std::string& sizes_spec, int trials, int targets,
              uint64_t seed, std::ostream& out) {
    std::vector<int> sizes = parse_sizes(sizes_spec);
    for (int n : sizes) {
        std::vector<double> ms;
        ms.reserve(trials);
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(seed ^ (uint64_t(n) << 24) ^ uint64_t(trial));
            Graph g = random_dh(n, rng);
            std::vector<Label> tset;
            {
                std::vector<int> idx(n);
                for (int i = 0; i < n; ++i) idx[i] = i;
                std::shuffle(idx.begin(), idx.end(), rng);
                for (int i = 0; i < std::min(targets, n); ++i) tset.push_back(g.label(idx[i]));
            }
            auto t0 = std::chrono::steady_clock::now();
            if (algo == "brute") {
                OracleOptions opt;
                (void)vertex_minor_bruteforce(g, Graph::star(tset, tset.front()), opt);
            } else {
                SolverOptions opt;
                opt.assume_dh = true;  // generated DH by construction
                (void)solve_star(g, tset, opt);
            }
            auto t1 = std::chrono::steady_clock::now();
            ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        std::vector<double> sorted(ms);
        std::sort(sorted.begin(), sorted.end());
        double median = sorted[sorted.size() / 2];
        double mean = 0, mx = 0;
        for (double v : ms) {
            mean += v;
            mx = std::max(mx, v);
        }
        mean /= double(ms.size());
        emit(out, json{{"algorithm", algo},
                       {"n", n},
                       {"trials", trials},
                       {"targets", targets},
                       {"seed", seed},
                       {"median_ms", median},
                       {"mean_ms", mean},
                       {"max_ms", mx}});
    }
    return kExitYes;
}

int cmd_convert(const std::string& word_text, const std::string& graph_path, const std::string& to,
                std::ostream& out) {
    if (!word_text.empty()) {
        Dow w = io::read_word(word_text);
        if (to == "multigraph") {
            auto [f, tour] = multigraph_from_word(w);
            io::write_multigraph_text(out, f);
            return kExitYes;
        }
        if (to == "graph" || to == "alternance") {
            emit(out, io::graph_to_json(w.alternance_graph()));
            return kExitYes;
        }
        throw FormatError("cannot convert a word to '" + to + "'");
    }
    Graph g = io::load_graph(graph_path);
    if (to == "dot") {
        io::write_graph_dot(out, g);
        return kExitYes;
    }
    if (to == "json") {
        emit(out, io::graph_to_json(g));
        return kExitYes;
    }
    if (to == "text") {
        io::write_graph_text(out, g);
        return kExitYes;
    }
    throw FormatError("cannot convert a graph to '" + to + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graph-state extraction toolkit: vertex-minor search and witnesses"};
    app.require_subcommand(1);

    std::string graph_path, target_path, targets_csv, plan_path, marked_csv, word_text;
    std::string sizes_spec = "10..160";
    std::string algo = "dh-star", shape = "star", to = "json", format = "json";
    long long budget = 20'000'000;
    if (const char* env = std::getenv("VMSTAR_BUDGET")) {
        try {
            budget = std::stoll(env);
        } catch (...) {
            err << "ignoring malformed VMSTAR_BUDGET\n";
        }
    }
    bool assume_dh = false;
    int trials = 20, target_count = 4, max_k = 5, cap = 16, n = 10;
    bool dot = false;
    uint64_t seed = 1;
    double p_leaf = 1.0 / 3, p_false = 1.0 / 3, p_true = 1.0 / 3;

    auto* check = app.add_subcommand("check-vm", "brute-force vertex-minor decision with witness");
    check->add_option("--graph", graph_path, "source graph file")->required();
    check->add_option("--target", target_path, "target graph file")->required();
    check->add_option("--budget", budget, "elimination branch budget");

    auto* dhstar = app.add_subcommand("dh-star", "star vertex-minor on distance-hereditary graphs");
    dhstar->add_option("--graph", graph_path, "source graph file")->required();
    dhstar->add_option("--targets", targets_csv, "comma-separated star vertices")->required();
    dhstar->add_flag("--assume-dh", assume_dh, "skip the distance-hereditary certification");

    auto* small = app.add_subcommand("small", "targets on at most three vertices");
    small->add_option("--graph", graph_path, "source graph file")->required();
    small->add_option("--target", targets_csv, "comma-separated target vertices")->required();
    small->add_option("--shape", shape, "star|triangle|path (star centers on the first vertex)");

    auto* ks = app.add_subcommand("ksoet", "fixed-parameter semi-ordered Eulerian tour search");
    ks->add_option("--multigraph", graph_path, "4-regular multigraph file ('id u v' lines)")
        ->required();
    ks->add_option("--marked", marked_csv, "comma-separated marked vertices")->required();
    ks->add_option("--max-k", max_k, "largest allowed marked set");
    ks->add_option("--budget", budget, "disjoint-path search budget");

    auto* expand = app.add_subcommand("expand", "triangular expansion of a cubic graph");
    expand->add_option("--cubic", graph_path, "cubic graph file")->required();
    expand->add_option("--format", format, "json|text");

    auto* reduce = app.add_subcommand("reduce", "instance reductions");
    auto* red_ch = reduce->add_subcommand("cubham-to-starvm",
                                          "cubic Hamiltonicity as a star vertex-minor instance");
    red_ch->add_option("--cubic", graph_path, "cubic graph file")->required();

    auto* gendh = app.add_subcommand("gen-dh", "random connected distance-hereditary graph");
    gendh->add_option("--n", n, "vertex count")->required();
    gendh->add_option("--seed", seed, "rng seed");
    gendh->add_option("--p-leaf", p_leaf, "leaf probability");
    gendh->add_option("--p-false", p_false, "false twin probability");
    gendh->add_option("--p-true", p_true, "true twin probability");
    gendh->add_flag("--dot", dot, "emit DOT instead of JSON");

    auto* gencub = app.add_subcommand("gen-cubic", "random connected cubic graph");
    gencub->add_option("--n", n, "vertex count (even)")->required();
    gencub->add_option("--seed", seed, "rng seed");
    gencub->add_flag("--dot", dot, "emit DOT instead of JSON");

    auto* verify = app.add_subcommand("verify", "stabilizer verification of a plan");
    verify->add_option("--graph", graph_path, "source graph file")->required();
    verify->add_option("--target", target_path, "target graph file")->required();
    verify->add_option("--plan", plan_path, "plan JSON file")->required();
    verify->add_option("--cap", cap, "qubit cap");

    auto* bench = app.add_subcommand("bench", "runtime measurements on random DH instances");
    bench->add_option("--algo", algo, "dh-star|brute");
    bench->add_option("--sizes", sizes_spec, "e.g. 25..200 (doubling), 10..50:10, or 10,20,40");
    bench->add_option("--trials", trials, "graphs per size");
    bench->add_option("--targets", target_count, "target set size");
    bench->add_option("--seed", seed, "rng seed");

    auto* convert = app.add_subcommand("convert", "format conversions");
    convert->add_option("--word", word_text, "double occurrence word, whitespace-separated");
    convert->add_option("--graph", graph_path, "graph file");
    convert->add_option("--to", to, "multigraph|graph|dot|json|text");

    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitYes;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check_vm(graph_path, target_path, budget, out);
        if (dhstar->parsed()) return cmd_dh_star(graph_path, targets_csv, assume_dh, out);
        if (small->parsed()) return cmd_small(graph_path, targets_csv, shape, out);
        if (ks->parsed()) return cmd_ksoet(graph_path, marked_csv, max_k, budget, out);
        if (expand->parsed()) return cmd_expand(graph_path, format, out);
        if (reduce->parsed()) {
            if (red_ch->parsed()) return cmd_reduce(graph_path, out);
            err << "reduce needs a reduction kind\n";
            return kExitUsage;
        }
        if (gendh->parsed()) return cmd_gen_dh(n, seed, p_leaf, p_false, p_true, dot, out);
        if (gencub->parsed()) return cmd_gen_cubic(n, seed, dot, out);
        if (verify->parsed()) return cmd_verify(graph_path, target_path, plan_path, cap, out);
        if (bench->parsed()) return cmd_bench(algo, sizes_spec, trials, target_count, seed, out);
        if (convert->parsed()) return cmd_convert(word_text, graph_path, to, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    err << "no subcommand\n";
    return kExitUsage;
}

}  // namespace vmstar
