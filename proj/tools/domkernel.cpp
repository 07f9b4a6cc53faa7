#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "domkernel/domination.hpp"
#include "domkernel/error.hpp"
#include "domkernel/gadgets.hpp"
#include "domkernel/generators.hpp"
#include "domkernel/harness.hpp"
#include "domkernel/io.hpp"
#include "domkernel/json.hpp"
#include "domkernel/kernelize.hpp"
#include "domkernel/regions.hpp"

using namespace domkernel;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_violation = 2;
constexpr int exit_infrastructure = 3;

// Integers separated by commas and/or whitespace.
std::vector<int> parse_int_list(const std::string& text) {
    std::string spaced = text;
    for (char& c : spaced)
        if (c == ',')
            c = ' ';
    std::istringstream in(spaced);
    std::vector<int> out;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used != token.size())
            throw Error(ErrorKind::invalid_argument, "not an integer: '" + token + "'");
        out.push_back(value);
    }
    return out;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text_file(path, text);
}

int cmd_solve(const std::string& file, const std::string& variant_text, const std::string& mode_text,
              int brute_cap, std::uint64_t node_limit) {
    const GraphFile in = read_graph_file(file);
    const DominationVariant variant = DominationVariant::parse(variant_text);
    SolveMode mode;
    if (mode_text == "brute")
        mode = SolveMode::brute;
    else if (mode_text == "bnb")
        mode = SolveMode::branch_and_bound;
    else
        throw Error(ErrorKind::invalid_argument, "unknown mode '" + mode_text + "'");
    const SolveResult r = solve_minimum(in.graph, variant, mode, {brute_cap, node_limit});
    Json out;
    out["variant"] = variant.name();
    out["mode"] = mode_text;
    out["feasible"] = r.feasible();
    out["cardinality"] = r.feasible() ? Json(r.cardinality()) : Json(nullptr);
    out["set"] = r.feasible() ? Json(r.certificate->set) : Json::array();
    out["status"] = to_json(r)["status"];
    out["nodes_explored"] = r.nodes_explored;
    out["wall_time"] = r.wall_time_ms;
    std::cout << out.dump(2) << '\n';
    return r.status == SolveResult::Status::node_limit ? exit_infrastructure : 0;
}

int cmd_kernelize(const std::string& file, const std::string& trace_path) {
    const GraphFile in = read_graph_file(file);
    const auto [kernel, trace] = kernelize_double_domination(in.graph);
    std::cout << to_edge_list(kernel);
    if (!trace_path.empty())
        write_text_file(trace_path, to_json(trace).dump(2) + "\n");
    return 0;
}

VertexSet auto_dset(const Graph& g, RegionRegime regime) {
    DominationVariant variant = DominationVariant::double_domination();
    if (regime == RegionRegime::liars)
        variant = DominationVariant::liars();
    else if (regime == RegionRegime::ktuple3)
        variant = DominationVariant::k_tuple(3);
    const SolveResult r = solve_minimum(g, variant, SolveMode::branch_and_bound);
    if (!r.feasible())
        throw Error(ErrorKind::invalid_input, "no " + variant.name() + " set exists on this graph");
    return r.certificate->set;
}

int cmd_regions(const std::string& file, const std::string& dset_text, const std::string& regime_text,
                const std::string& dot_path) {
    const PlaneGraph pg = to_plane_graph(read_graph_file(file));
    const RegionRegime regime = parse_region_regime(regime_text);
    const VertexSet dset = dset_text == "auto" ? auto_dset(pg.graph(), regime)
                                               : make_vertex_set(parse_int_list(dset_text));
    for (Vertex x : dset)
        pg.graph().require_live(x);
    const RegionDecomposition rd = region_decomposition(pg, dset);
    const RegionBoundsReport report = check_region_bounds(rd, regime);

    Json out = to_json(rd);
    out["bounds_report"] = to_json(report);
    std::cout << out.dump(2) << '\n';
    if (!dot_path.empty())
        emit(dot_path, induced_multigraph_dot(rd));
    return report.passed() ? 0 : exit_violation;
}

int cmd_gadget(const std::string& file, const std::string& kind, int param, const std::string& meta_path,
               int verify_cap) {
    const GraphFile in = read_graph_file(file);
    if (param < 0)
        throw Error(ErrorKind::invalid_argument, "--param must be >= 0");
    GadgetInstance gadget;
    if (kind == "liars") {
        gadget = build_liars_gadget(in.graph, param);
    } else if (kind == "planar-liars") {
        std::optional<PlaneGraph> pg;
        if (in.rotation)
            pg = to_plane_graph(in);
        gadget = build_planar_liars_gadget(in.graph, param, pg ? &*pg : nullptr);
    } else if (kind.rfind("ktuple:", 0) == 0) {
        gadget = build_ktuple_gadget(in.graph, param, DominationVariant::parse(kind).k);
    } else {
        throw Error(ErrorKind::invalid_argument, "unknown gadget kind '" + kind + "'");
    }

    Json meta = to_json(gadget);
    int code = 0;
    if (verify_cap >= 0) {
        if (in.graph.num_live() <= verify_cap) {
            const GadgetCheck check = verify_gadget(gadget);
            meta["verify"] = {{"gamma", check.gamma_original},
                              {"gamma_transformed", check.gamma_transformed ? Json(*check.gamma_transformed)
                                                                            : Json("infeasible")},
                              {"equivalent", check.equivalent}};
            if (!check.equivalent) {
                meta["verify"]["first_mismatch"] = check.first_mismatch;
                code = exit_violation;
            }
        } else {
            meta["verify"] = {{"skipped", "n = " + std::to_string(in.graph.num_live()) + " exceeds --verify"}};
        }
    }
    const std::string body = gadget.embedding ? to_embedding_text(*gadget.embedding)
                                              : to_edge_list(gadget.transformed);
    if (meta_path.empty()) {
        std::cout << "c meta " << meta.dump() << '\n' << body;
    } else {
        std::cout << body;
        write_text_file(meta_path, meta.dump(2) + "\n");
    }
    return code;
}

int cmd_gen(const std::string& family, const std::string& size, std::uint64_t seed, const std::string& out) {
    const GeneratorSpec spec{parse_family(family), parse_int_list(size), seed};
    const Instance inst = generate(spec);
    emit(out, inst.embedding ? to_embedding_text(*inst.embedding) : to_edge_list(inst.graph));
    return 0;
}

int cmd_bench(const std::string& suite, const std::string& corpus_path, const std::string& out_path,
              const std::string& csv_path, const std::string& dot_dir, int threads) {
    if (suite != "kernel" && suite != "gadget" && suite != "region" && suite != "all")
        throw Error(ErrorKind::invalid_argument, "unknown suite '" + suite + "'");
    Corpus corpus = default_corpus();
    if (!corpus_path.empty()) {
        std::ifstream in(corpus_path);
        if (!in)
            throw Error(ErrorKind::invalid_input, "cannot open " + corpus_path);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception& e) {
            throw Error(ErrorKind::parse, corpus_path + ": " + e.what());
        }
        corpus = corpus_from_json(j);
    }
    corpus.config = apply_environment(corpus.config);
    if (threads >= 0)
        corpus.config.threads = threads;
    RunOptions options;
    if (!dot_dir.empty())
        options.dot_dir = dot_dir;

    std::vector<ExperimentReport> reports;
    if (suite == "kernel" || suite == "all")
        reports.push_back(run_kernel_suite(corpus.kernel, corpus.config));
    if (suite == "gadget" || suite == "all")
        reports.push_back(run_gadget_suite(corpus.gadget, corpus.config));
    if (suite == "region" || suite == "all")
        reports.push_back(run_region_suite(corpus.region, corpus.config, options));

    Json out;
    out["corpus"] = corpus_to_json(corpus);
    out["corpus"]["config"].erase("threads");
    out["suites"] = Json::array();
    bool violation = false, broken = false;
    for (const auto& r : reports) {
        out["suites"].push_back(to_json(r));
        const Json s = summarize(r);
        std::cerr << r.suite << ": " << s["instances"] << " instances, " << s["passed"] << " passed, "
                  << s["failed"] << " failed, " << s["skipped"] << " skipped\n";
        violation = violation || r.failures() > 0;
        broken = broken || r.failures_of("infrastructure") > 0;
    }
    emit(out_path, out.dump(2) + "\n");
    if (!csv_path.empty())
        write_text_file(csv_path, to_csv(reports));
    return broken ? exit_infrastructure : violation ? exit_violation : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kernels and exact solvers for double, k-tuple and liar's domination"};
    app.require_subcommand(1);
    int code = 0;

    std::string file, variant = "dom", mode = "bnb";
    int brute_cap = 24;
    std::uint64_t node_limit = 0;
    auto* solve = app.add_subcommand("solve", "minimum dominating set of a variant");
    solve->add_option("graphfile", file, "edge-list file")->required();
    solve->add_option("--variant", variant, "dom, ktuple:K or liars")->capture_default_str();
    solve->add_option("--mode", mode, "brute or bnb")->capture_default_str();
    solve->add_option("--brute-cap", brute_cap, "largest n brute force accepts")->capture_default_str();
    solve->add_option("--node-limit", node_limit, "branch-and-bound node budget, 0 = none");

    std::string trace;
    auto* kern = app.add_subcommand("kernelize", "exhaustive double-domination reduction");
    kern->add_option("graphfile", file, "edge-list file")->required();
    kern->add_option("--trace", trace, "write the reduction trace as JSON");

    std::string dset, regime = "reduced-double", dot;
    auto* regions = app.add_subcommand("regions", "greedy region decomposition of a plane graph");
    regions->add_option("embeddingfile", file, "embedding file")->required();
    regions->add_option("--dset", dset, "vertex ids (comma separated) or 'auto'")->required();
    regions->add_option("--regime", regime, "reduced-double, liars or ktuple3")->capture_default_str();
    regions->add_option("--dot", dot, "write the induced multigraph as DOT ('-' for stdout)");

    std::string kind, meta;
    int param = 0, verify = -1;
    auto* gadget = app.add_subcommand("gadget", "reduction gadget from dominating set");
    gadget->add_option("graphfile", file, "edge-list or embedding file")->required();
    gadget->add_option("--kind", kind, "ktuple:K, liars or planar-liars")->required();
    gadget->add_option("--param", param, "source parameter p")->required();
    gadget->add_option("--meta", meta, "write metadata JSON here instead of a comment line");
    gadget->add_option("--verify", verify, "run the oracle equivalence when n <= N");

    std::string family, size, out = "-";
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("--family", family, "cycle, path, star, grid, wheel, complete, stacked, trigger, "
                                        "stacked_trigger or gnp")
        ->required();
    gen->add_option("--size", size, "size parameters, comma separated")->required();
    gen->add_option("--seed", seed, "generator seed")->capture_default_str();
    gen->add_option("-o,--output", out, "output file ('-' for stdout)");

    std::string suite = "all", corpus, report = "-", csv, dot_dir;
    int threads = -1;
    auto* bench = app.add_subcommand("bench", "run the verification suites");
    bench->add_option("--suite", suite, "kernel, gadget, region or all")->capture_default_str();
    bench->add_option("--corpus", corpus, "corpus JSON (default: built-in corpus)");
    bench->add_option("--out", report, "report JSON ('-' for stdout)");
    bench->add_option("--csv", csv, "per-instance CSV");
    bench->add_option("--dot", dot_dir, "directory for induced-multigraph DOT dumps");
    bench->add_option("--threads", threads, "worker threads, 0 = hardware concurrency");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : exit_usage;
    }

    try {
        if (*solve)
            code = cmd_solve(file, variant, mode, brute_cap, node_limit);
        else if (*kern)
            code = cmd_kernelize(file, trace);
        else if (*regions)
            code = cmd_regions(file, dset, regime, dot);
        else if (*gadget)
            code = cmd_gadget(file, kind, param, meta, verify);
        else if (*gen)
            code = cmd_gen(family, size, seed, out);
        else if (*bench)
            code = cmd_bench(suite, corpus, report, csv, dot_dir, threads);
    } catch (const Error& e) {
        std::cerr << "domkernel: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return *bench ? exit_infrastructure : exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "domkernel: " << e.what() << '\n';
        return exit_infrastructure;
    }
    return code;
}
