#include "lkh/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "lkh/config.hpp"
#include "lkh/entropy.hpp"
#include "lkh/errors.hpp"
#include "lkh/rng.hpp"

namespace lkh {

Suite suite_from_name(const std::string& name) {
    if (name == "lkh") return Suite::lkh;
    if (name == "lkh-log") return Suite::lkh_log;
    if (name == "ssa") return Suite::ssa;
    if (name == "lkh3") return Suite::lkh3;
    if (name == "lemma") return Suite::lemma;
    if (name == "equality-gap") return Suite::equality_gap;
    if (name == "all") return Suite::all;
    throw UsageError("unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::lkh: return "lkh";
        case Suite::lkh_log: return "lkh-log";
        case Suite::ssa: return "ssa";
        case Suite::lkh3: return "lkh3";
        case Suite::lemma: return "lemma";
        case Suite::equality_gap: return "equality-gap";
        case Suite::all: return "all";
    }
    return "?";
}

OutputFormat format_from_name(const std::string& name) {
    if (name == "human") return OutputFormat::human;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw UsageError("unknown format '" + name + "'");
}

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::human: return "human";
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
    }
    return "?";
}

std::vector<double> EpsSweep::grid() const {
    if (points < 1) throw UsageError("eps sweep needs at least one point");
    if (!(start > 0.0) || !(stop > 0.0)) throw UsageError("eps sweep bounds must be positive");
    std::vector<double> g(points);
    if (points == 1) {
        g[0] = start;
    } else if (log_spaced) {
        const double step = (std::log(stop) - std::log(start)) / (points - 1);
        for (int i = 0; i < points; ++i) g[i] = std::exp(std::log(start) + step * i);
    } else {
        const double step = (stop - start) / (points - 1);
        for (int i = 0; i < points; ++i) g[i] = start + step * i;
    }
    return g;
}

EpsSweep parse_eps_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);

    try {
        EpsSweep sweep;
        if (parts.size() == 1) {
            sweep.start = sweep.stop = std::stod(parts[0]);
            sweep.points = 1;
            return sweep;
        }
        if (parts.size() < 3 || parts.size() > 4) throw UsageError("bad eps spec");
        sweep.start = std::stod(parts[0]);
        sweep.stop = std::stod(parts[1]);
        sweep.points = std::stoi(parts[2]);
        if (parts.size() == 4) {
            if (parts[3] == "log") sweep.log_spaced = true;
            else if (parts[3] == "lin") sweep.log_spaced = false;
            else throw UsageError("bad eps spacing");
        }
        (void)sweep.grid();  // validates
        return sweep;
    } catch (const UsageError&) {
        throw UsageError("bad --eps spec '" + spec + "' (expected a:b:n[:log|:lin] or a single value)");
    } catch (const std::exception&) {
        throw UsageError("bad --eps spec '" + spec + "' (expected a:b:n[:log|:lin] or a single value)");
    }
}

void RunConfig::validate() const {
    if (trials < 1) throw UsageError("trials must be at least 1");
    if (!(tol > 0.0)) throw UsageError("tol must be positive");
    std::size_t product = 1;
    for (auto d : dims) {
        if (d < 1) throw UsageError("dimensions must be positive");
        product *= d;
    }
    if (product > max_dim) {
        throw UsageError("product of dims exceeds --max-dim (" + std::to_string(product) + " > " +
                         std::to_string(max_dim) + ")");
    }
}

namespace {

TrialResult run_trial(Suite suite, const RunConfig& config, int index, std::uint64_t trial_seed) {
    TrialResult tr;
    tr.index = index;
    tr.seed = trial_seed;
    const auto [d1, d2, d3] = config.dims;

    switch (suite) {
        case Suite::lkh: {
            const LkhInstance inst = random_lkh_instance(d1, d2, d3, trial_seed);
            const GapReport rep = check_lkh_operator(inst, config.tol);
            tr.gap = rep.min_eig_gap;
            tr.verdict = rep.verdict;
            tr.diagnostics = rep.diagnostics;
            break;
        }
        case Suite::lkh_log: {
            const LkhInstance inst = random_lkh_instance(d1, d2, d3, trial_seed);
            const GapReport rep = check_lkh_log(inst, config.tol);
            tr.gap = rep.min_eig_gap;
            tr.verdict = rep.verdict;
            tr.diagnostics = rep.diagnostics;
            break;
        }
        case Suite::ssa: {
            const MultiSystem sys{d1, d2, d3};
            const DensityMatrix rho = random_density(sys, sys.total_dim(), trial_seed);
            const SsaReduction red = reduce_ssa_to_lkh3(rho);
            const double weak = araki_lieb_weak_gap(rho);
            const double diff = std::abs(red.direct - red.via_purification);
            tr.gap = red.direct;
            tr.verdict = red.direct >= -config.tol && diff <= kRouteAgreementTol &&
                         weak >= red.direct - config.tol;
            tr.diagnostics = {
                {"ssa_gap", red.direct},
                {"via_purification", red.via_purification},
                {"purification_diff", diff},
                {"araki_lieb_weak_gap", weak},
            };
            break;
        }
        case Suite::lkh3: {
            const MultiSystem sys{d1, d2, d3};
            const DensityMatrix rho = random_density(sys, sys.total_dim(), trial_seed);
            const double gap = lkh3_gap(rho);
            const double trace_form = lkh3_from_trace(rho);
            const double diff = std::abs(gap - trace_form);
            tr.gap = gap;
            tr.verdict = gap >= -config.tol && trace_form >= -kRouteAgreementTol &&
                         diff <= kRouteAgreementTol;
            tr.diagnostics = {
                {"lkh3_gap", gap},
                {"lkh3_from_trace", trace_form},
                {"route_diff", diff},
            };
            break;
        }
        case Suite::lemma: {
            // Default evaluation point is the sufficiency threshold itself;
            // an explicit --eps grid overrides it (values above eps* refuse).
            LemmaInstance inst = random_lemma_instance(d1, d2, d3, 1.0, trial_seed);
            const DensityMatrix sigma3 = reduced_density(inst.phi, SubsystemSet{0});
            const double mu = min_eigenvalue(sigma3.mat());
            const double eps_star = lemma_epsilon_star(mu, d2, d3);
            std::vector<double> eps_values;
            if (config.eps_sweep) {
                eps_values = config.eps_sweep->grid();
            } else {
                eps_values = {eps_star};
            }
            tr.gap = std::numeric_limits<double>::infinity();
            tr.verdict = true;
            for (double eps : eps_values) {
                inst.epsilon = eps;
                const GapReport rep = lemma_bound_check(inst, config.tol);
                if (rep.min_eig_gap < tr.gap) tr.gap = rep.min_eig_gap;
                tr.verdict = tr.verdict && rep.verdict;
            }
            tr.diagnostics = {
                {"mu", mu},
                {"epsilon_star", eps_star},
                {"eps_points", static_cast<double>(eps_values.size())},
                {"eps_max", *std::max_element(eps_values.begin(), eps_values.end())},
            };
            break;
        }
        case Suite::equality_gap: {
            const LkhInstance inst = random_lkh_instance(d1, d2, d3, trial_seed);
            auto diag = equality_gap_check(inst);
            tr.gap = diag.at("gap");
            if (d2 >= 2) {
                tr.verdict = tr.gap > 1e-12 &&
                             diag.at("inv_trace_product") >= static_cast<double>(d2 * d2) - 1e-9;
            } else {
                // d2 = 1 is the equality case: gap 0 and trace product 1.
                tr.verdict = std::abs(tr.gap) <= config.tol * std::max(1.0, diag.at("diff_norm")) &&
                             std::abs(diag.at("inv_trace_product") - 1.0) <= 1e-9;
            }
            tr.diagnostics = std::move(diag);
            break;
        }
        case Suite::all:
            throw UsageError("run_trial: 'all' is expanded by the caller");
    }
    return tr;
}

}  // namespace

void finalize_report(RunReport& report) {
    auto& s = report.summary;
    s.failures = 0;
    s.numerical_failures = 0;
    std::vector<double> gaps;
    for (const auto& t : report.trials) {
        if (!t.error.empty()) {
            ++s.numerical_failures;
            continue;
        }
        if (!t.verdict) ++s.failures;
        gaps.push_back(t.gap);
    }
    if (gaps.empty()) {
        s.min_gap = 0.0;
        s.median_gap = 0.0;
        return;
    }
    std::sort(gaps.begin(), gaps.end());
    s.min_gap = gaps.front();
    s.median_gap = gaps.size() % 2 == 1 ? gaps[gaps.size() / 2]
                                        : 0.5 * (gaps[gaps.size() / 2 - 1] + gaps[gaps.size() / 2]);
}

RunReport run_suite(Suite suite, const RunConfig& config) {
    if (suite == Suite::all) throw UsageError("run_suite: expand 'all' into individual suites");
    config.validate();
    set_max_total_dim(config.max_dim);

    const auto t0 = std::chrono::steady_clock::now();
    RunReport report;
    report.suite = suite_name(suite);
    report.config = config;
    report.trials.reserve(config.trials);

    constexpr int kRetryBudget = 3;
    for (int i = 0; i < config.trials; ++i) {
        const std::uint64_t trial_seed = Rng::substream_seed(config.seed, static_cast<std::uint64_t>(i));
        TrialResult tr;
        for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
            const std::uint64_t attempt_seed =
                attempt == 0 ? trial_seed : Rng::substream_seed(trial_seed, 1000 + attempt);
            try {
                tr = run_trial(suite, config, i, attempt_seed);
                tr.seed = attempt_seed;
                tr.error.clear();
                break;
            } catch (const IllConditionedError& e) {
                tr = TrialResult{};
                tr.index = i;
                tr.seed = attempt_seed;
                tr.gap = std::numeric_limits<double>::quiet_NaN();
                tr.error = std::string("IllConditioned: ") + e.what();
            } catch (const NonConvergenceError& e) {
                tr = TrialResult{};
                tr.index = i;
                tr.seed = attempt_seed;
                tr.gap = std::numeric_limits<double>::quiet_NaN();
                tr.error = std::string("NonConvergence: ") + e.what();
            }
        }
        report.trials.push_back(std::move(tr));
    }

    finalize_report(report);
    report.summary.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

int exit_code_for(const RunReport& report) {
    if (report.summary.failures > 0) return 1;
    if (report.summary.numerical_failures > 0) return 3;
    return 0;
}

SweepReport run_epsilon_sweep(const RunConfig& config) {
    if (!config.eps_sweep) throw UsageError("sweep requires --eps");
    config.validate();
    set_max_total_dim(config.max_dim);
    const auto [d1, d2, d3] = config.dims;

    SweepReport sweep;
    sweep.config = config;

    LemmaInstance lemma_inst =
        random_lemma_instance(d1, d2, d3, 1.0, Rng::substream_seed(config.seed, 0));
    const LkhInstance lkh_inst = random_lkh_instance(d1, d2, d3, Rng::substream_seed(config.seed, 1));
    sweep.direct_gap = check_lkh_operator(lkh_inst, config.tol).min_eig_gap;

    for (double eps : config.eps_sweep->grid()) {
        lemma_inst.epsilon = eps;
        const GapReport rep = lemma_bound_eval(lemma_inst, config.tol, 1.0 + std::sqrt(eps));
        SweepRow row{};
        row.epsilon = eps;
        row.lemma_gap = rep.min_eig_gap;
        row.lemma_verdict = rep.verdict;
        row.restricted_gap = regularized_restricted_gap(lkh_inst, d2 + 1, eps);
        row.direct_gap = sweep.direct_gap;
        sweep.rows.push_back(row);
    }
    return sweep;
}

}  // namespace lkh
