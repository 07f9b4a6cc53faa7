#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domkernel/generators.hpp"
#include "domkernel/json.hpp"

namespace domkernel {

struct HarnessConfig {
    /// Largest n on which any exact solve is attempted.
    int oracle_cap = 30;
    /// Brute-force cross-checks of branch-and-bound run up to these sizes.
    int brute_cap_double = 18;
    int brute_cap_liars = 16;
    /// Liar's and 3-tuple bound checks are limited to this many vertices.
    int bound_cap = 14;
    /// Per-solve search budget; exhausted solves mark the instance skipped.
    std::uint64_t node_limit = 20'000'000;
    /// Worker threads; 0 means hardware concurrency.
    int threads = 1;
};

/// Applies DOMKERNEL_ORACLE_CAP when set.
HarnessConfig apply_environment(HarnessConfig config);

struct GadgetCorpus {
    int liars_exhaustive_max_n = 5;
    int ktuple_max_n = 7;
    int ktuple_seeds = 200;
    std::vector<int> ktuple_k = {1, 2, 3};
    /// Structural checks enumerate every minimum solution up to this size.
    int enumerate_cap = 12;
    std::vector<GeneratorSpec> planar_liars;
};

struct Corpus {
    HarnessConfig config;
    std::vector<GeneratorSpec> kernel;
    std::vector<GeneratorSpec> region;
    GadgetCorpus gadget;
};

/// Corpus used by the acceptance suite and by `bench` without --corpus.
Corpus default_corpus();

/// Reads the corpus schema:
///   {"config": {...HarnessConfig fields...},
///    "kernel": [entry...], "region": [entry...],
///    "gadget": {"liars_exhaustive_max_n", "ktuple_max_n", "ktuple_seeds",
///               "ktuple_k", "enumerate_cap", "planar_liars": [entry...]}}
/// where an entry is {"family", "size": [...], "seed"} plus optional
/// "size_max" (sweeps size[0] up to it) and "seed_count" (consecutive seeds).
Corpus corpus_from_json(const Json& j);
Json corpus_to_json(const Corpus& corpus);

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct InstanceRecord {
    std::string id;
    std::string status;  // "pass", "fail" or "skipped"
    std::string skip_reason;
    Json data = Json::object();  // sizes, γ values, region summaries
    std::vector<Check> checks;
    Json counterexample;  // null unless a check failed
    double wall_time_ms = 0.0;
};

struct ExperimentReport {
    std::string suite;
    std::vector<InstanceRecord> records;

    int failures() const;
    int skipped() const;
    /// Number of records holding a failed check whose name starts with `prefix`.
    int failures_of(const std::string& prefix) const;
    /// Number of checks run whose name starts with `prefix`.
    int checks_of(const std::string& prefix) const;
};

struct RunOptions {
    /// When set, DOT dumps of induced multigraphs go here.
    std::optional<std::string> dot_dir;
};

ExperimentReport run_kernel_suite(const std::vector<GeneratorSpec>& corpus, const HarnessConfig& config);
ExperimentReport run_gadget_suite(const GadgetCorpus& corpus, const HarnessConfig& config);
ExperimentReport run_region_suite(const std::vector<GeneratorSpec>& corpus, const HarnessConfig& config,
                                  const RunOptions& options = {});

Json to_json(const ExperimentReport& report);
Json summarize(const ExperimentReport& report);
std::string to_csv(const std::vector<ExperimentReport>& reports);

}  // namespace domkernel
