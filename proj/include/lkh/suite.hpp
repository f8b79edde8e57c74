#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lkh/config.hpp"
#include "lkh/verifier.hpp"

namespace lkh {

enum class Suite { lkh, lkh_log, ssa, lkh3, lemma, equality_gap, all };
enum class OutputFormat { human, json, csv };

Suite suite_from_name(const std::string& name);  // UsageError on unknown names
std::string suite_name(Suite s);
OutputFormat format_from_name(const std::string& name);
std::string format_name(OutputFormat f);

struct EpsSweep {
    double start = 1e-8;
    double stop = 1e-1;
    int points = 8;
    bool log_spaced = true;

    std::vector<double> grid() const;
};

// Parses "a:b:n[:log|:lin]" or a single value "x" (one point).
EpsSweep parse_eps_spec(const std::string& spec);

struct RunConfig {
    std::array<std::size_t, 3> dims{2, 2, 2};
    int trials = 100;
    std::uint64_t seed = 1;
    double tol = kLoewnerTol;
    std::optional<EpsSweep> eps_sweep;
    OutputFormat format = OutputFormat::human;
    std::size_t max_dim = kDefaultMaxTotalDim;

    void validate() const;  // UsageError on violations
};

struct TrialResult {
    int index = 0;
    std::uint64_t seed = 0;  // substream seed of this trial
    double gap = 0.0;
    bool verdict = false;
    std::string error;  // empty unless the trial failed numerically
    std::map<std::string, double> diagnostics;
};

struct RunSummary {
    double min_gap = 0.0;
    double median_gap = 0.0;
    int failures = 0;
    int numerical_failures = 0;
    double wall_time = 0.0;  // seconds
};

struct RunReport {
    std::string suite;
    RunConfig config;
    std::vector<TrialResult> trials;
    RunSummary summary;
};

// Recomputes the summary from the trial list (wall_time is preserved).
void finalize_report(RunReport& report);

// Runs `trials` seeded instances of one suite. Trial i draws its substreams
// from substream_seed(config.seed, i); numerical failures are retried on
// shifted substreams up to 3 attempts before being recorded.
RunReport run_suite(Suite suite, const RunConfig& config);

// Exit-code contract: 0 all pass, 1 violation found, 2 usage error (raised as
// UsageError before any report exists), 3 numerical failure beyond the retry
// budget. Violations take precedence over numerical failures.
int exit_code_for(const RunReport& report);

struct SweepRow {
    double epsilon;
    double lemma_gap;        // min eig of (1+sqrt(eps)) B - A
    bool lemma_verdict;
    double restricted_gap;   // regularized inequality compressed back
    double direct_gap;       // constant column: plain operator check
};

struct SweepReport {
    RunConfig config;
    std::vector<SweepRow> rows;
    double direct_gap = 0.0;
};

// Epsilon sweep on one seeded instance pair: the lemma bound per epsilon and
// the regularized-embedding gap converging to the direct one.
SweepReport run_epsilon_sweep(const RunConfig& config);

}  // namespace lkh
