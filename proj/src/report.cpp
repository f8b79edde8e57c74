#include "lkh/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lkh/statefile.hpp"

namespace lkh {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_to_json(const RunConfig& c) {
    ordered_json j;
    j["dims"] = c.dims;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["tol"] = c.tol;
    j["max_dim"] = c.max_dim;
    j["format"] = format_name(c.format);
    if (c.eps_sweep) {
        j["eps"] = {{"start", c.eps_sweep->start},
                    {"stop", c.eps_sweep->stop},
                    {"points", c.eps_sweep->points},
                    {"log_spaced", c.eps_sweep->log_spaced}};
    }
    return j;
}

}  // namespace

std::string report_to_json(const RunReport& report) {
    ordered_json j;
    j["suite"] = report.suite;
    j["config"] = config_to_json(report.config);
    j["trials"] = ordered_json::array();
    for (const auto& t : report.trials) {
        ordered_json jt;
        jt["index"] = t.index;
        jt["seed"] = t.seed;
        if (std::isfinite(t.gap)) {
            jt["gap"] = t.gap;
        } else {
            jt["gap"] = nullptr;
        }
        jt["verdict"] = t.verdict;
        jt["diagnostics"] = ordered_json::object();
        for (const auto& [k, v] : t.diagnostics) {
            if (std::isfinite(v)) jt["diagnostics"][k] = v;
            else jt["diagnostics"][k] = nullptr;
        }
        if (!t.error.empty()) jt["error"] = t.error;
        j["trials"].push_back(std::move(jt));
    }
    j["summary"] = {{"min_gap", report.summary.min_gap},
                    {"failures", report.summary.failures},
                    {"wall_time", report.summary.wall_time}};
    return j.dump(2) + "\n";
}

std::string report_to_csv(const RunReport& report) {
    // Column set: the fixed trial fields plus the union of diagnostic keys.
    std::set<std::string> diag_keys;
    for (const auto& t : report.trials)
        for (const auto& [k, v] : t.diagnostics) diag_keys.insert(k);

    std::ostringstream os;
    os << "index,seed,gap,verdict";
    for (const auto& k : diag_keys) os << ',' << k;
    os << ",error\n";
    for (const auto& t : report.trials) {
        os << t.index << ',' << t.seed << ',';
        os << (std::isfinite(t.gap) ? format_double(t.gap) : "") << ',';
        os << (t.verdict ? "true" : "false");
        for (const auto& k : diag_keys) {
            os << ',';
            auto it = t.diagnostics.find(k);
            if (it != t.diagnostics.end() && std::isfinite(it->second)) os << format_double(it->second);
        }
        os << ',' << t.error << '\n';
    }
    return os.str();
}

std::string report_to_human(const RunReport& report) {
    std::ostringstream os;
    const auto& c = report.config;
    os << "suite " << report.suite << "  dims " << c.dims[0] << ',' << c.dims[1] << ',' << c.dims[2]
       << "  trials " << c.trials << "  seed " << c.seed << "  tol " << c.tol << "\n";
    os << "  index        gap          verdict\n";
    char line[128];
    for (const auto& t : report.trials) {
        if (!t.error.empty()) {
            std::snprintf(line, sizeof(line), "  %5d  %-13s  ERROR  %s\n", t.index, "-", t.error.c_str());
            os << line;
            continue;
        }
        std::snprintf(line, sizeof(line), "  %5d  %+.6e  %s\n", t.index, t.gap,
                      t.verdict ? "pass" : "FAIL");
        os << line;
    }
    for (const auto& t : report.trials) {
        if (t.error.empty() && !t.verdict) {
            os << "VIOLATION dims=" << c.dims[0] << ',' << c.dims[1] << ',' << c.dims[2]
               << " seed=" << c.seed << " trial=" << t.index << " (trial seed " << t.seed << ")\n";
        }
    }
    std::snprintf(line, sizeof(line),
                  "summary: min gap %+.6e  median gap %+.6e  failures %d  numerical failures %d  "
                  "wall %.3fs\n",
                  report.summary.min_gap, report.summary.median_gap, report.summary.failures,
                  report.summary.numerical_failures, report.summary.wall_time);
    os << line;
    return os.str();
}

std::string report_to(const RunReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return report_to_json(report);
        case OutputFormat::csv: return report_to_csv(report);
        case OutputFormat::human: return report_to_human(report);
    }
    return {};
}

std::string sweep_to_json(const SweepReport& sweep) {
    ordered_json j;
    j["config"] = config_to_json(sweep.config);
    j["direct_gap"] = sweep.direct_gap;
    j["rows"] = ordered_json::array();
    for (const auto& r : sweep.rows) {
        j["rows"].push_back({{"epsilon", r.epsilon},
                             {"lemma_gap", r.lemma_gap},
                             {"lemma_verdict", r.lemma_verdict},
                             {"restricted_gap", r.restricted_gap},
                             {"direct_gap", r.direct_gap}});
    }
    return j.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepReport& sweep) {
    std::ostringstream os;
    os << "epsilon,lemma_gap,lemma_verdict,restricted_gap,direct_gap\n";
    for (const auto& r : sweep.rows) {
        os << format_double(r.epsilon) << ',' << format_double(r.lemma_gap) << ','
           << (r.lemma_verdict ? "true" : "false") << ',' << format_double(r.restricted_gap) << ','
           << format_double(r.direct_gap) << '\n';
    }
    return os.str();
}

std::string sweep_to_human(const SweepReport& sweep) {
    std::ostringstream os;
    const auto& c = sweep.config;
    os << "epsilon sweep  dims " << c.dims[0] << ',' << c.dims[1] << ',' << c.dims[2] << "  seed "
       << c.seed << "\n";
    os << "  epsilon        lemma gap      verdict  restricted gap  direct gap\n";
    char line[160];
    for (const auto& r : sweep.rows) {
        std::snprintf(line, sizeof(line), "  %-13.6e  %+.6e  %-7s  %+.6e   %+.6e\n", r.epsilon,
                      r.lemma_gap, r.lemma_verdict ? "pass" : "FAIL", r.restricted_gap, r.direct_gap);
        os << line;
    }
    return os.str();
}

std::string sweep_to(const SweepReport& sweep, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return sweep_to_json(sweep);
        case OutputFormat::csv: return sweep_to_csv(sweep);
        case OutputFormat::human: return sweep_to_human(sweep);
    }
    return {};
}

}  // namespace lkh
