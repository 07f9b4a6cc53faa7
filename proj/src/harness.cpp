#include "domkernel/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "domkernel/domination.hpp"
#include "domkernel/error.hpp"
#include "domkernel/gadgets.hpp"
#include "domkernel/io.hpp"
#include "domkernel/kernelize.hpp"
#include "domkernel/random.hpp"
#include "domkernel/regions.hpp"

namespace domkernel {

HarnessConfig apply_environment(HarnessConfig config) {
    if (const char* cap = std::getenv("DOMKERNEL_ORACLE_CAP")) {
        try {
            config.oracle_cap = std::stoi(cap);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::invalid_argument, std::string("DOMKERNEL_ORACLE_CAP='") + cap + "'");
        }
    }
    return config;
}

// ---------------------------------------------------------------- corpus ----

namespace {

std::vector<GeneratorSpec> expand(Family family, std::vector<int> size, int size_max, std::uint64_t seed,
                                  int seed_count) {
    std::vector<GeneratorSpec> out;
    const int last = std::max(size_max, size.empty() ? 0 : size[0]);
    for (int first = size.empty() ? 0 : size[0]; first <= last; ++first) {
        if (!size.empty())
            size[0] = first;
        for (int s = 0; s < seed_count; ++s)
            out.push_back({family, size, seed + static_cast<std::uint64_t>(s)});
        if (size.empty())
            break;
    }
    return out;
}

void append(std::vector<GeneratorSpec>& to, std::vector<GeneratorSpec> from) {
    to.insert(to.end(), from.begin(), from.end());
}

std::vector<GeneratorSpec> entries_from_json(const Json& list) {
    std::vector<GeneratorSpec> out;
    for (const Json& entry : list) {
        const GeneratorSpec base = generator_spec_from_json(entry);
        const int size_max = entry.value("size_max", base.size.empty() ? 0 : base.size[0]);
        const int seed_count = entry.value("seed_count", 1);
        append(out, expand(base.family, base.size, size_max, base.seed, seed_count));
    }
    return out;
}

Json entries_to_json(const std::vector<GeneratorSpec>& specs) {
    Json out = Json::array();
    for (const auto& s : specs)
        out.push_back(to_json(s));
    return out;
}

}  // namespace

Corpus default_corpus() {
    Corpus c;
    append(c.kernel, expand(Family::stacked, {6}, 16, 1, 30));
    for (int base : {4, 6, 8})
        for (int fans : {1, 2})
            for (int t : {2, 3})
                append(c.kernel, expand(Family::stacked_trigger, {base, fans, t}, base, 1, 15));
    append(c.kernel, expand(Family::trigger, {1}, 14, 0, 1));
    append(c.kernel, expand(Family::cycle, {3}, 16, 0, 1));
    append(c.kernel, expand(Family::wheel, {3}, 12, 0, 1));
    append(c.kernel, {{Family::grid, {3, 3}, 0}, {Family::grid, {3, 4}, 0}, {Family::grid, {4, 4}, 0}});
    append(c.kernel, expand(Family::gnp, {6, 35}, 14, 1, 5));

    append(c.region, expand(Family::stacked, {4}, 14, 1, 8));
    append(c.region, expand(Family::stacked_trigger, {4, 1, 2}, 8, 1, 4));
    append(c.region, expand(Family::stacked_trigger, {4, 2, 3}, 6, 1, 3));
    append(c.region, expand(Family::trigger, {2}, 12, 0, 1));
    append(c.region, expand(Family::cycle, {3}, 14, 0, 1));
    append(c.region, expand(Family::wheel, {3}, 12, 0, 1));
    append(c.region, expand(Family::complete, {2}, 4, 0, 1));
    append(c.region, {{Family::grid, {2, 2}, 0},
                      {Family::grid, {2, 3}, 0},
                      {Family::grid, {2, 5}, 0},
                      {Family::grid, {3, 3}, 0},
                      {Family::grid, {3, 4}, 0}});
    append(c.region, expand(Family::stacked, {16}, 30, 1, 2));
    append(c.region, {{Family::grid, {4, 5}, 0}, {Family::grid, {5, 5}, 0}, {Family::grid, {5, 6}, 0}});
    append(c.region, expand(Family::stacked, {40}, 40, 1, 3));

    append(c.gadget.planar_liars, expand(Family::path, {1}, 5, 0, 1));
    append(c.gadget.planar_liars, expand(Family::cycle, {3}, 6, 0, 1));
    append(c.gadget.planar_liars, {{Family::grid, {2, 2}, 0}, {Family::grid, {2, 3}, 0}, {Family::grid, {3, 3}, 0}});
    return c;
}

Corpus corpus_from_json(const Json& j) {
    Corpus c;
    c.config = {};
    c.gadget = {};
    try {
        if (j.contains("config")) {
            const Json& cfg = j.at("config");
            c.config.oracle_cap = cfg.value("oracle_cap", c.config.oracle_cap);
            c.config.brute_cap_double = cfg.value("brute_cap_double", c.config.brute_cap_double);
            c.config.brute_cap_liars = cfg.value("brute_cap_liars", c.config.brute_cap_liars);
            c.config.bound_cap = cfg.value("bound_cap", c.config.bound_cap);
            c.config.node_limit = cfg.value("node_limit", c.config.node_limit);
            c.config.threads = cfg.value("threads", c.config.threads);
        }
        if (j.contains("kernel"))
            c.kernel = entries_from_json(j.at("kernel"));
        if (j.contains("region"))
            c.region = entries_from_json(j.at("region"));
        if (j.contains("gadget")) {
            const Json& g = j.at("gadget");
            c.gadget.liars_exhaustive_max_n = g.value("liars_exhaustive_max_n", c.gadget.liars_exhaustive_max_n);
            c.gadget.ktuple_max_n = g.value("ktuple_max_n", c.gadget.ktuple_max_n);
            c.gadget.ktuple_seeds = g.value("ktuple_seeds", c.gadget.ktuple_seeds);
            c.gadget.ktuple_k = g.value("ktuple_k", c.gadget.ktuple_k);
            c.gadget.enumerate_cap = g.value("enumerate_cap", c.gadget.enumerate_cap);
            if (g.contains("planar_liars"))
                c.gadget.planar_liars = entries_from_json(g.at("planar_liars"));
        }
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::invalid_input, std::string("corpus: ") + e.what());
    }
    return c;
}

Json corpus_to_json(const Corpus& corpus) {
    const HarnessConfig& cfg = corpus.config;
    return {{"config",
             {{"oracle_cap", cfg.oracle_cap},
              {"brute_cap_double", cfg.brute_cap_double},
              {"brute_cap_liars", cfg.brute_cap_liars},
              {"bound_cap", cfg.bound_cap},
              {"node_limit", cfg.node_limit},
              {"threads", cfg.threads}}},
            {"kernel", entries_to_json(corpus.kernel)},
            {"region", entries_to_json(corpus.region)},
            {"gadget",
             {{"liars_exhaustive_max_n", corpus.gadget.liars_exhaustive_max_n},
              {"ktuple_max_n", corpus.gadget.ktuple_max_n},
              {"ktuple_seeds", corpus.gadget.ktuple_seeds},
              {"ktuple_k", corpus.gadget.ktuple_k},
              {"enumerate_cap", corpus.gadget.enumerate_cap},
              {"planar_liars", entries_to_json(corpus.gadget.planar_liars)}}}};
}

// ------------------------------------------------------------ records ----

int ExperimentReport::failures() const {
    return static_cast<int>(std::count_if(records.begin(), records.end(),
                                          [](const InstanceRecord& r) { return r.status == "fail"; }));
}

int ExperimentReport::skipped() const {
    return static_cast<int>(std::count_if(records.begin(), records.end(),
                                          [](const InstanceRecord& r) { return r.status == "skipped"; }));
}

int ExperimentReport::failures_of(const std::string& prefix) const {
    int n = 0;
    for (const auto& r : records)
        n += std::any_of(r.checks.begin(), r.checks.end(),
                         [&](const Check& c) { return !c.passed && c.name.rfind(prefix, 0) == 0; });
    return n;
}

int ExperimentReport::checks_of(const std::string& prefix) const {
    int n = 0;
    for (const auto& r : records)
        for (const auto& c : r.checks)
            n += c.name.rfind(prefix, 0) == 0;
    return n;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void check(InstanceRecord& rec, std::string name, bool passed, std::string detail = {}) {
    rec.checks.push_back({std::move(name), passed, std::move(detail)});
}

// Ends a record: status from checks, counterexample when anything failed.
void finish(InstanceRecord& rec, const std::string& graph_text, Clock::time_point start) {
    const bool failed = std::any_of(rec.checks.begin(), rec.checks.end(), [](const Check& c) { return !c.passed; });
    rec.status = failed ? "fail" : rec.skip_reason.empty() ? "pass" : "skipped";
    if (failed) {
        Json names = Json::array();
        for (const auto& c : rec.checks)
            if (!c.passed)
                names.push_back(c.name);
        rec.counterexample = {{"failed_checks", names}, {"graph", graph_text}, {"data", rec.data}};
    }
    rec.wall_time_ms = elapsed_ms(start);
}

// Exact solves with the harness caps: branch-and-bound, cross-checked by brute
// force where cheap.
class Oracle {
public:
    Oracle(const HarnessConfig& config, InstanceRecord& rec) : config_(config), rec_(rec) {}

    /// nullopt when the instance is beyond reach or the node budget ran out.
    std::optional<SolveResult> solve(const Graph& g, const DominationVariant& variant, const std::string& label) {
        if (g.num_live() > config_.oracle_cap)
            return std::nullopt;
        SolveOptions options;
        options.node_limit = config_.node_limit;
        SolveResult fast = solve_minimum(g, variant, SolveMode::branch_and_bound, options);
        if (fast.status == SolveResult::Status::node_limit) {
            rec_.skip_reason = label + ": node budget exhausted";
            return std::nullopt;
        }
        const int cap = variant.kind == DominationVariant::Kind::liars ? config_.brute_cap_liars
                                                                       : config_.brute_cap_double;
        if (g.num_live() <= cap) {
            options.brute_cap = cap;
            const SolveResult slow = solve_minimum(g, variant, SolveMode::brute, options);
            const bool agree = fast.status == slow.status &&
                               (!fast.feasible() || fast.cardinality() == slow.cardinality());
            check(rec_, "oracle_agree:" + variant.name(), agree, label);
        }
        return fast;
    }

private:
    const HarnessConfig& config_;
    InstanceRecord& rec_;
};

Json gamma_json(const std::optional<SolveResult>& r) {
    if (!r)
        return "unknown";
    if (!r->feasible())
        return "infeasible";
    return r->cardinality();
}

std::string graph_text_of(const Instance& inst) {
    return inst.embedding ? to_embedding_text(*inst.embedding) : to_edge_list(inst.graph);
}

// Decompose with D and record every region check for the regime. With
// `bounds` false only the structural checks run (D not minimum).
void run_regime(InstanceRecord& rec, const PlaneGraph& pg, const VertexSet& dset, const std::string& regime_name,
                std::optional<RegionRegime> bounds, const RunOptions& options, const std::string& file_stem) {
    Json summary;
    summary["dset"] = dset;
    RegionDecomposition rd;
    try {
        rd = region_decomposition(pg, dset);
    } catch (const Error& e) {
        check(rec, "cover:" + regime_name, false, e.what());
        rec.data["regions"][regime_name] = summary;
        return;
    }
    const auto problems = validate_decomposition(pg, rd);
    check(rec, "validity:" + regime_name, problems.empty(), problems.empty() ? "" : problems.front());
    check(rec, "thin_planar:" + regime_name, thin_planar_check(rd));
    summary["regions"] = rd.regions.size();
    summary["induced_edges"] = rd.induced_multigraph.size();

    int max_size = 0;
    for (const auto& r : rd.regions)
        max_size = std::max(max_size, r.size());
    summary["max_region_size"] = max_size;

    if (bounds) {
        const RegionBoundsReport report = check_region_bounds(rd, *bounds);
        check(rec, "cover:" + regime_name, report.cover_ok);
        check(rec, "count:" + regime_name, report.count_ok);
        check(rec, "region_size:" + regime_name, report.sizes_ok,
              report.sizes_ok ? "" : report.violations.front());
        check(rec, "global:" + regime_name, report.global_ok);
        summary["bounds"] = to_json(report);
    } else {
        check(rec, "cover:" + regime_name, static_cast<int>(rd.covered.size()) == rd.num_vertices);
        check(rec, "count:" + regime_name, rd.regions.size() <= 3 * rd.dset.size());
    }
    rec.data["regions"][regime_name] = summary;

    if (options.dot_dir) {
        std::filesystem::create_directories(*options.dot_dir);
        write_text_file((std::filesystem::path(*options.dot_dir) / (file_stem + "_" + regime_name + ".dot")).string(),
                        induced_multigraph_dot(rd));
    }
}

std::string sanitize(std::string s) {
    for (char& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)))
            c = '_';
    return s;
}

InstanceRecord guarded(const std::string& id, const std::function<InstanceRecord()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        InstanceRecord rec;
        rec.id = id;
        rec.status = "fail";
        check(rec, "infrastructure", false, e.what());
        rec.counterexample = {{"failed_checks", {"infrastructure"}}, {"error", e.what()}};
        return rec;
    }
}

template <typename Job>
std::vector<InstanceRecord> parallel_records(std::size_t count, int threads, Job job) {
    std::vector<InstanceRecord> out(count);
    unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++)
            out[i] = job(i);
    };
    if (workers <= 1) {
        worker();
        return out;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(worker);
    pool.clear();
    return out;
}

// ---------------------------------------------------------- kernel suite ----

InstanceRecord kernel_instance(const GeneratorSpec& spec, const HarnessConfig& config) {
    const auto start = Clock::now();
    const Instance inst = generate(spec);
    const Graph& g = inst.graph;
    InstanceRecord rec;
    rec.id = inst.id;
    rec.data["spec"] = to_json(spec);
    rec.data["n"] = g.num_live();
    rec.data["m"] = g.num_edges();
    rec.data["planar"] = inst.embedding.has_value();

    const auto [kernel, trace] = kernelize_double_domination(g);
    rec.data["reduced_n"] = kernel.num_live();
    rec.data["reduction_steps"] = trace.steps.size();
    rec.data["passes"] = trace.passes;
    check(rec, "reduced", is_reduced(kernel));
    check(rec, "idempotent", kernelize_double_domination(kernel).first == kernel);
    check(rec, "monotone_size",
          kernel.num_live() <= g.num_live() && (kernel.num_live() == g.num_live()) == trace.steps.empty());

    std::optional<PlaneGraph> kernel_pg;
    if (inst.embedding) {
        try {
            kernel_pg = restrict_embedding_to(*inst.embedding, kernel);
            check(rec, "planarity_preserved", true);
        } catch (const Error& e) {
            check(rec, "planarity_preserved", false, e.what());
        }
    }

    Oracle oracle(config, rec);
    const auto before = oracle.solve(g, DominationVariant::double_domination(), "gamma2(G)");
    const auto after = before ? oracle.solve(kernel, DominationVariant::double_domination(), "gamma2(G')")
                              : std::nullopt;
    rec.data["gamma2"] = gamma_json(before);
    rec.data["gamma2_kernel"] = gamma_json(after);
    if (before && after) {
        const bool same = before->feasible() == after->feasible() &&
                          (!before->feasible() || before->cardinality() == after->cardinality());
        check(rec, "safeness", same);
        if (kernel_pg && after->feasible()) {
            const int gamma = after->cardinality();
            check(rec, "kernel_bound", kernel.num_live() <= 18 * gamma);
            rec.data["kernel_ratio"] = static_cast<double>(kernel.num_live()) / gamma;
            run_regime(rec, *kernel_pg, after->certificate->set, "reduced-double", RegionRegime::reduced_double, {},
                       sanitize(rec.id));
        }
    } else if (rec.skip_reason.empty()) {
        rec.data["note"] = "beyond oracle reach: structural checks only";
    }
    finish(rec, graph_text_of(inst), start);
    return rec;
}

// ---------------------------------------------------------- region suite ----

InstanceRecord region_instance(std::size_t index, const GeneratorSpec& spec, const HarnessConfig& config,
                               const RunOptions& options) {
    const auto start = Clock::now();
    const Instance inst = generate(spec);
    InstanceRecord rec;
    rec.id = inst.id;
    rec.data["spec"] = to_json(spec);
    if (!inst.embedding) {
        rec.skip_reason = "no embedding";
        finish(rec, to_edge_list(inst.graph), start);
        return rec;
    }
    const PlaneGraph& pg = *inst.embedding;
    const Graph& g = pg.graph();
    const int n = g.num_live();
    const int delta = minimum_degree(g);
    rec.data["n"] = n;
    rec.data["m"] = g.num_edges();
    rec.data["min_degree"] = delta;
    const std::string stem = std::to_string(index) + "_" + sanitize(rec.id);

    Oracle oracle(config, rec);
    if (n > config.oracle_cap) {
        rec.data["note"] = "beyond oracle reach: structural checks only";
        if (auto d = greedy_k_tuple_dominating_set(g, 2))
            run_regime(rec, pg, *d, "greedy-double", std::nullopt, options, stem);
        finish(rec, graph_text_of(inst), start);
        return rec;
    }

    const auto gamma2 = oracle.solve(g, DominationVariant::double_domination(), "gamma2");
    rec.data["gamma2"] = gamma_json(gamma2);

    const auto [kernel, trace] = kernelize_double_domination(g);
    rec.data["reduced_n"] = kernel.num_live();
    const PlaneGraph kernel_pg = restrict_embedding_to(pg, kernel);
    const auto gamma2_kernel = oracle.solve(kernel, DominationVariant::double_domination(), "gamma2(G')");
    if (gamma2_kernel && gamma2_kernel->feasible()) {
        check(rec, "kernel_bound", kernel.num_live() <= 18 * gamma2_kernel->cardinality());
        rec.data["kernel_ratio"] = static_cast<double>(kernel.num_live()) / gamma2_kernel->cardinality();
        run_regime(rec, kernel_pg, gamma2_kernel->certificate->set, "reduced-double", RegionRegime::reduced_double,
                   options, stem);
    }

    std::optional<SolveResult> gamma_lr, gamma3;
    if (n <= config.bound_cap) {
        gamma_lr = oracle.solve(g, DominationVariant::liars(), "gammaLR");
        if (delta >= 2)
            gamma3 = oracle.solve(g, DominationVariant::k_tuple(3), "gamma3");
    }
    rec.data["gamma_lr"] = gamma_json(gamma_lr);
    rec.data["gamma3"] = gamma_json(gamma3);

    if (gamma_lr && gamma_lr->feasible()) {
        const VertexSet& lr = gamma_lr->certificate->set;
        check(rec, "liars_is_double", is_k_tuple_dominating(g, lr, 2));
        check(rec, "liars_bound", n <= 15 * gamma_lr->cardinality());
        run_regime(rec, pg, lr, "liars", RegionRegime::liars, options, stem);
    }
    if (gamma3 && gamma3->feasible()) {
        const VertexSet& t = gamma3->certificate->set;
        check(rec, "triple_is_liars", is_liars_dominating(g, t));
        check(rec, "ktuple_bound", n <= 12 * gamma3->cardinality());
        run_regime(rec, pg, t, "ktuple3", RegionRegime::ktuple3, options, stem);
    }
    if (gamma2 && gamma_lr && gamma3 && gamma2->feasible() && gamma_lr->feasible() && gamma3->feasible()) {
        const int a = gamma2->cardinality(), b = gamma_lr->cardinality(), c = gamma3->cardinality();
        check(rec, "sandwich", a <= b && b <= c,
              std::to_string(a) + " <= " + std::to_string(b) + " <= " + std::to_string(c));
    }
    finish(rec, graph_text_of(inst), start);
    return rec;
}

// ---------------------------------------------------------- gadget suite ----

struct GadgetJob {
    std::string id;
    std::function<GadgetInstance()> build;
};

InstanceRecord gadget_instance(const GadgetJob& job, const GadgetCorpus& corpus, const HarnessConfig& config) {
    const auto start = Clock::now();
    const GadgetInstance gadget = job.build();
    InstanceRecord rec;
    rec.id = job.id;
    rec.data["gadget"] = to_json(gadget);
    rec.data["original"] = to_edge_list(gadget.original);

    const GadgetCheck result = verify_gadget(gadget);
    rec.data["gamma"] = result.gamma_original;
    rec.data["gamma_transformed"] =
        result.gamma_transformed ? Json(*result.gamma_transformed) : Json("infeasible");
    check(rec, "gadget_equivalence", result.equivalent,
          result.equivalent ? "" : "first mismatch at p = " + std::to_string(result.first_mismatch));

    // Cross-check both solves by brute force where cheap.
    Oracle oracle(config, rec);
    const DominationVariant target = gadget.kind == GadgetKind::ktuple ? DominationVariant::k_tuple(gadget.k)
                                                                       : DominationVariant::liars();
    oracle.solve(gadget.original, DominationVariant::plain(), "gamma(G)");
    if (gadget.transformed.num_live() <= config.brute_cap_liars)
        oracle.solve(gadget.transformed, target, "gamma'(G')");

    if (gadget.kind != GadgetKind::planar_liars && gadget.transformed.num_live() <= corpus.enumerate_cap) {
        VertexSet forced;
        for (const auto& [label, id] : gadget.new_vertices)
            if (gadget.kind == GadgetKind::ktuple || label != "w")
                forced.push_back(id);
        forced = make_vertex_set(std::move(forced));
        bool all = true;
        for (const VertexSet& s : enumerate_minimum(gadget.transformed, target, corpus.enumerate_cap))
            all = all && std::includes(s.begin(), s.end(), forced.begin(), forced.end());
        check(rec, gadget.kind == GadgetKind::ktuple ? "structure:contains_Vk" : "structure:contains_uu'vv'", all);
    }
    if (gadget.kind == GadgetKind::planar_liars)
        check(rec, "planarity_preserved", gadget.embedding.has_value());
    finish(rec, to_edge_list(gadget.transformed), start);
    return rec;
}

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1)
                edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

}  // namespace

ExperimentReport run_kernel_suite(const std::vector<GeneratorSpec>& corpus, const HarnessConfig& config) {
    if (corpus.empty())
        throw Error(ErrorKind::invalid_input, "kernel corpus is empty");
    ExperimentReport report;
    report.suite = "kernel";
    report.records = parallel_records(corpus.size(), config.threads, [&](std::size_t i) {
        return guarded(corpus[i].id(), [&] { return kernel_instance(corpus[i], config); });
    });
    return report;
}

ExperimentReport run_region_suite(const std::vector<GeneratorSpec>& corpus, const HarnessConfig& config,
                                  const RunOptions& options) {
    if (corpus.empty())
        throw Error(ErrorKind::invalid_input, "region corpus is empty");
    ExperimentReport report;
    report.suite = "region";
    report.records = parallel_records(corpus.size(), config.threads, [&](std::size_t i) {
        return guarded(corpus[i].id(), [&] { return region_instance(i, corpus[i], config, options); });
    });
    return report;
}

ExperimentReport run_gadget_suite(const GadgetCorpus& corpus, const HarnessConfig& config) {
    std::vector<GadgetJob> jobs;
    for (int n = 1; n <= corpus.liars_exhaustive_max_n; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
            jobs.push_back({"liars:n=" + std::to_string(n) + ":edges=" + std::to_string(mask),
                            [n, mask] { return build_liars_gadget(graph_from_pair_mask(n, mask), 0); }});
    }
    for (int seed = 1; seed <= corpus.ktuple_seeds; ++seed) {
        SplitMix64 rng(static_cast<std::uint64_t>(seed));
        const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(corpus.ktuple_max_n)));
        const int pairs = n * (n - 1) / 2;
        const std::uint64_t mask = pairs == 0 ? 0 : rng.next() & ((std::uint64_t{1} << pairs) - 1);
        for (int k : corpus.ktuple_k)
            jobs.push_back({"ktuple:k=" + std::to_string(k) + ":seed=" + std::to_string(seed),
                            [n, mask, k] { return build_ktuple_gadget(graph_from_pair_mask(n, mask), 0, k); }});
    }
    for (const GeneratorSpec& spec : corpus.planar_liars)
        jobs.push_back({"planar-liars:" + spec.id(), [spec] {
                            const Instance inst = generate(spec);
                            const PlaneGraph* emb = inst.embedding ? &*inst.embedding : nullptr;
                            return build_planar_liars_gadget(inst.graph, 0, emb);
                        }});

    ExperimentReport report;
    report.suite = "gadget";
    report.records = parallel_records(jobs.size(), config.threads, [&](std::size_t i) {
        return guarded(jobs[i].id, [&] { return gadget_instance(jobs[i], corpus, config); });
    });
    return report;
}

// ------------------------------------------------------------- output ----

Json summarize(const ExperimentReport& report) {
    std::map<std::string, int> run, failed;
    double max_ratio = 0.0;
    std::map<std::string, int> max_region;
    double wall = 0.0;
    int passed = 0;
    for (const auto& r : report.records) {
        passed += r.status == "pass";
        wall += r.wall_time_ms;
        for (const auto& c : r.checks) {
            ++run[c.name];
            if (!c.passed)
                ++failed[c.name];
        }
        if (r.data.contains("kernel_ratio"))
            max_ratio = std::max(max_ratio, r.data["kernel_ratio"].get<double>());
        if (r.data.contains("regions"))
            for (const auto& [regime, summary] : r.data["regions"].items())
                if (summary.contains("max_region_size"))
                    max_region[regime] = std::max(max_region[regime], summary["max_region_size"].get<int>());
    }
    Json checks = Json::object();
    for (const auto& [name, count] : run)
        checks[name] = {{"run", count}, {"failed", failed[name]}};
    Json j = {{"instances", report.records.size()},
              {"passed", passed},
              {"failed", report.failures()},
              {"skipped", report.skipped()},
              {"checks", std::move(checks)}};
    if (report.suite != "gadget")
        j["max_kernel_ratio"] = max_ratio;
    if (!max_region.empty())
        j["max_region_size"] = max_region;
    j["wall_time_ms"] = wall;
    return j;
}

Json to_json(const ExperimentReport& report) {
    Json records = Json::array();
    for (const auto& r : report.records) {
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            Json cj = {{"name", c.name}, {"passed", c.passed}};
            if (!c.detail.empty())
                cj["detail"] = c.detail;
            checks.push_back(std::move(cj));
        }
        Json rj = {{"id", r.id}, {"status", r.status}};
        if (!r.skip_reason.empty())
            rj["skip_reason"] = r.skip_reason;
        rj["data"] = r.data;
        rj["checks"] = std::move(checks);
        if (!r.counterexample.is_null())
            rj["counterexample"] = r.counterexample;
        rj["wall_time_ms"] = r.wall_time_ms;
        records.push_back(std::move(rj));
    }
    return {{"suite", report.suite}, {"summary", summarize(report)}, {"instances", std::move(records)}};
}

std::string to_csv(const std::vector<ExperimentReport>& reports) {
    std::ostringstream out;
    out << "suite,id,status,n,m,reduced_n,gamma2,gamma_lr,gamma3,kernel_ratio,failed_checks\n";
    auto field = [](const Json& data, const char* key) -> std::string {
        if (!data.contains(key))
            return "";
        const Json& v = data.at(key);
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    for (const auto& report : reports)
        for (const auto& r : report.records) {
            std::string failed;
            for (const auto& c : r.checks)
                if (!c.passed)
                    failed += (failed.empty() ? "" : ";") + c.name;
            out << report.suite << ",\"" << r.id << "\"," << r.status << ',' << field(r.data, "n") << ','
                << field(r.data, "m") << ',' << field(r.data, "reduced_n") << ',' << field(r.data, "gamma2") << ','
                << field(r.data, "gamma_lr") << ',' << field(r.data, "gamma3") << ','
                << field(r.data, "kernel_ratio") << ',' << failed << '\n';
        }
    return out.str();
}

}  // namespace domkernel
