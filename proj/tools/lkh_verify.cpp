// Batch-verification front end: seeded state generation, inequality suites
// over random instances, epsilon sweeps, machine-readable reports.
//
// Exit codes: 0 all pass, 1 violation found, 2 usage error, 3 numerical
// failure beyond the retry budget.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lkh/config.hpp"
#include "lkh/errors.hpp"
#include "lkh/report.hpp"
#include "lkh/rng.hpp"
#include "lkh/statefile.hpp"
#include "lkh/states.hpp"
#include "lkh/suite.hpp"

namespace {

std::vector<std::size_t> parse_dims(const std::string& spec) {
    std::vector<std::size_t> dims;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw lkh::UsageError("bad --dims '" + spec + "'");
        const long v = std::stol(cur);
        if (v < 1) throw lkh::UsageError("dimensions must be positive");
        dims.push_back(static_cast<std::size_t>(v));
        cur.clear();
    };
    try {
        for (char c : spec) {
            if (c == ',') flush();
            else cur.push_back(c);
        }
        flush();
    } catch (const lkh::UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw lkh::UsageError("bad --dims '" + spec + "'");
    }
    return dims;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw lkh::IoError("cannot open " + out_path);
    os << text;
    if (!os) throw lkh::IoError("write failed for " + out_path);
}

struct CommonFlags {
    std::string dims = "2,2,2";
    int trials = 100;
    std::uint64_t seed = 1;
    double tol = lkh::kLoewnerTol;
    std::string eps;
    std::string format = "human";
    std::size_t max_dim = lkh::kDefaultMaxTotalDim;
    std::string out;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--dims", f.dims, "subsystem dimensions d1,d2,d3");
    cmd->add_option("--trials", f.trials, "number of seeded instances");
    cmd->add_option("--seed", f.seed, "master seed; trial i uses substream i");
    cmd->add_option("--tol", f.tol, "relative tolerance for operator-order verdicts");
    cmd->add_option("--eps", f.eps, "epsilon spec a:b:n[:log|:lin] or a single value");
    cmd->add_option("--format", f.format, "human|json|csv");
    cmd->add_option("--max-dim", f.max_dim, "cap on the total Hilbert-space dimension");
    cmd->add_option("--out", f.out, "write the report to this path instead of stdout");
}

lkh::RunConfig config_from(const CommonFlags& f) {
    lkh::RunConfig config;
    const auto dims = parse_dims(f.dims);
    if (dims.size() != 3) throw lkh::UsageError("verification suites need exactly three dimensions");
    config.dims = {dims[0], dims[1], dims[2]};
    config.trials = f.trials;
    config.seed = f.seed;
    config.tol = f.tol;
    if (!f.eps.empty()) config.eps_sweep = lkh::parse_eps_spec(f.eps);
    config.format = lkh::format_from_name(f.format);
    config.max_dim = f.max_dim;
    config.validate();
    return config;
}

int run_verify(const std::string& suite_name_arg, const CommonFlags& flags) {
    const lkh::Suite suite = lkh::suite_from_name(suite_name_arg);
    const lkh::RunConfig config = config_from(flags);

    std::vector<lkh::Suite> suites;
    if (suite == lkh::Suite::all) {
        suites = {lkh::Suite::lkh,   lkh::Suite::lkh_log, lkh::Suite::ssa,
                  lkh::Suite::lkh3,  lkh::Suite::lemma,   lkh::Suite::equality_gap};
    } else {
        suites = {suite};
    }

    std::string text;
    int exit_code = 0;
    bool violation = false;
    for (lkh::Suite s : suites) {
        const lkh::RunReport report = lkh::run_suite(s, config);
        text += lkh::report_to(report, config.format);
        const int code = lkh::exit_code_for(report);
        if (code == 1) violation = true;
        exit_code = std::max(exit_code, code);
    }
    if (violation) exit_code = 1;
    emit(text, flags.out);
    return exit_code;
}

int run_sweep(const CommonFlags& flags) {
    lkh::RunConfig config = config_from(flags);
    if (!config.eps_sweep) throw lkh::UsageError("sweep-eps requires --eps");
    const lkh::SweepReport sweep = lkh::run_epsilon_sweep(config);
    emit(lkh::sweep_to(sweep, config.format), flags.out);
    return 0;
}

int run_gen_state(const std::string& dims_spec, std::size_t rank, std::uint64_t seed,
                  std::size_t max_dim, const std::string& out) {
    if (out.empty()) throw lkh::UsageError("gen-state requires --out");
    const auto dims = parse_dims(dims_spec);
    lkh::MultiSystem sys(dims);
    if (sys.total_dim() > max_dim) throw lkh::UsageError("product of dims exceeds --max-dim");
    lkh::set_max_total_dim(max_dim);
    if (rank == 0) rank = sys.total_dim();
    const lkh::DensityMatrix rho = lkh::random_density(sys, rank, seed);
    lkh::write_state_file(out, rho.sys(), rho.mat());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of the Lin-Kim-Hsieh operator inequality and strong subadditivity"};
    app.require_subcommand(1);

    // verify
    std::string suite_arg;
    CommonFlags verify_flags;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite over seeded instances");
    verify->add_option("suite", suite_arg, "lkh|lkh-log|ssa|lkh3|lemma|equality-gap|all")->required();
    add_common_flags(verify, verify_flags);

    // sweep-eps
    CommonFlags sweep_flags;
    CLI::App* sweep = app.add_subcommand("sweep-eps", "epsilon sweep on one seeded instance pair");
    add_common_flags(sweep, sweep_flags);

    // gen-state
    std::string gen_dims = "2,2";
    std::size_t gen_rank = 0;
    std::uint64_t gen_seed = 1;
    std::size_t gen_max_dim = lkh::kDefaultMaxTotalDim;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen-state", "write a seeded random density matrix to a file");
    gen->add_option("--dims", gen_dims, "subsystem dimensions d1,d2,...");
    gen->add_option("--rank", gen_rank, "rank of the generated state (default: full)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--max-dim", gen_max_dim, "cap on the total Hilbert-space dimension");
    gen->add_option("--out", gen_out, "output path")->required();

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return run_verify(suite_arg, verify_flags);
        if (sweep->parsed()) return run_sweep(sweep_flags);
        if (gen->parsed()) return run_gen_state(gen_dims, gen_rank, gen_seed, gen_max_dim, gen_out);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const lkh::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const lkh::EpsilonTooLargeError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const lkh::ShapeError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const lkh::IllConditionedError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const lkh::NonConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const lkh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
