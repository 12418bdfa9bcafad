// SPDX-License-Identifier: Apache-2.0
//
// amoc: changepoint analysis for daily keyword-count series.
//
//   amoc ingest    records -> per-group daily-count CSVs
//   amoc detect    daily-count CSVs -> changepoint table + results JSON
//   amoc acf       daily-count CSVs -> autocorrelation CSV/JSON
//   amoc simulate  Monte Carlo calibration/power runs on synthetic series
//   amoc report    re-render a results JSON as a table
//
// Exit codes: 0 success, 1 usage/config error, 2 data error.

#include "amoc/acf.hpp"
#include "amoc/changepoint.hpp"
#include "amoc/error.hpp"
#include "amoc/report.hpp"
#include "amoc/series.hpp"
#include "amoc/synth.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct IngestOptions {
    std::string records_path;
    std::string format = "auto";
    std::string groups_path;
    std::string start;
    std::string end;
    std::string out_dir;
};

struct DetectOptions {
    std::vector<std::string> series_paths;
    std::string out_path;
    double alpha = 0.05;
    std::string method = "permutation";
    int permutations = 999;
    std::uint64_t seed = 0;
    std::optional<double> penalty;
};

struct AcfOptions {
    std::vector<std::string> series_paths;
    std::string out_dir;
    long max_lag = 30;
};

struct SimulateOptions {
    long length = 0;
    std::optional<long> tau;
    double mu = 0;
    double delta = 0;
    std::string noise = "gaussian";
    double sigma = 1.0;
    std::uint64_t seed = 0;
    int trials = 1;
    std::string out_path;
    std::string per_trial_path;
    double alpha = 0.05;
    std::string method = "permutation";
    int permutations = 999;
};

amoc::RecordFormat resolveFormat(const IngestOptions& opt) {
    if (opt.format != "auto") {
        return amoc::parseRecordFormat(opt.format);
    }
    std::string ext = fs::path(opt.records_path).extension().string();
    if (ext == ".jsonl" || ext == ".ndjson") {
        return amoc::RecordFormat::JsonLines;
    }
    if (ext == ".csv") {
        return amoc::RecordFormat::Csv;
    }
    throw amoc::ConfigError("cannot infer record format from \"" + opt.records_path +
                            "\"; pass --format jsonl|csv");
}

std::string sanitizeFilename(const std::string& name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '.' || c == '-' || c == '_';
        out.push_back(ok ? c : '_');
    }
    return out.empty() ? "group" : out;
}

void writeTextFile(const fs::path& path, const std::string& content) {
    std::ofstream out{path};
    if (!out) {
        throw amoc::ConfigError("cannot write " + path.string());
    }
    out << content;
}

amoc::SignificanceConfig makeSignificanceConfig(double alpha, const std::string& method,
                                                int permutations, std::uint64_t seed,
                                                std::optional<double> penalty) {
    amoc::SignificanceConfig config;
    config.alpha = alpha;
    config.method = amoc::parseSignificanceMethod(method);
    config.permutations = permutations;
    config.seed = seed;
    config.penalty_value = penalty;
    amoc::validate(config);
    return config;
}

int runIngest(const IngestOptions& opt) {
    auto groups = amoc::loadKeywordGroups(opt.groups_path);
    amoc::DateRange range =
        amoc::makeDateRange(amoc::parseDate(opt.start), amoc::parseDate(opt.end));

    std::ifstream in{opt.records_path};
    if (!in) {
        throw amoc::ConfigError("cannot open records file: " + opt.records_path);
    }
    auto records = amoc::dedupRecords(amoc::parseRecords(in, resolveFormat(opt)));

    fs::create_directories(opt.out_dir);

    // One pseudo-group with every phrase gives the "matches anything" total.
    std::vector<std::string> all_phrases;
    for (const auto& g : groups) {
        all_phrases.insert(all_phrases.end(), g.phrases.begin(), g.phrases.end());
    }
    std::vector<std::string> unique_phrases;
    {
        std::vector<std::string> seen;
        for (auto& p : all_phrases) {
            std::string norm = amoc::normalizeText(p);
            if (std::find(seen.begin(), seen.end(), norm) == seen.end()) {
                seen.push_back(norm);
                unique_phrases.push_back(p);
            }
        }
    }
    amoc::KeywordGroup total_group = amoc::makeKeywordGroup("total", std::move(unique_phrases));

    std::vector<fs::path> written;
    auto emit = [&](const amoc::KeywordGroup& group) {
        amoc::DailySeries series = amoc::aggregateDaily(records, group, range);
        fs::path path = fs::path(opt.out_dir) / (sanitizeFilename(group.name) + ".csv");
        if (std::find(written.begin(), written.end(), path) != written.end()) {
            throw amoc::ConfigError("group names collide on output file " + path.string());
        }
        written.push_back(path);
        amoc::writeDailyCsv(path, series);
        std::cout << group.name << ": " << series.total() << " matched records -> "
                  << path.string() << '\n';
    };

    for (const auto& group : groups) {
        emit(group);
    }
    emit(total_group);
    return 0;
}

int runDetect(const DetectOptions& opt) {
    amoc::SignificanceConfig config = makeSignificanceConfig(opt.alpha, opt.method,
                                                             opt.permutations, opt.seed,
                                                             opt.penalty);

    std::vector<amoc::TableRow> rows;
    json results = json::array();
    int failures = 0;
    for (const std::string& path : opt.series_paths) {
        amoc::DailySeries series = amoc::readDailyCsv(path);
        amoc::validateCounts(series);
        try {
            amoc::ChangepointResult result = amoc::detectAmoc(series, config);
            rows.push_back(amoc::toTableRow(series.label, series.total(), result));
            results.push_back(amoc::resultToJson(series.label, series.total(), result));
        } catch (const amoc::DataError& e) {
            ++failures;
            rows.push_back(amoc::TableRow{series.label, series.total(), {}, false, {}, e.what()});
            results.push_back(amoc::errorRowToJson(series.label, series.total(), e.what()));
        }
    }

    json doc{{"alpha", config.alpha},
             {"method", amoc::toString(config.method)},
             {"results", std::move(results)}};
    writeTextFile(opt.out_path, doc.dump(2) + "\n");

    std::cout << amoc::renderTable(rows);
    return failures == static_cast<int>(opt.series_paths.size()) ? 2 : 0;
}

int runAcf(const AcfOptions& opt) {
    fs::create_directories(opt.out_dir);
    int failures = 0;
    for (const std::string& path : opt.series_paths) {
        amoc::DailySeries series = amoc::readDailyCsv(path);
        amoc::validateCounts(series);
        try {
            amoc::AcfResult result = amoc::acf(series, opt.max_lag);

            fs::path base = fs::path(opt.out_dir) / (sanitizeFilename(series.label) + "_acf");
            std::ofstream csv_out{base.string() + ".csv"};
            if (!csv_out) {
                throw amoc::ConfigError("cannot write " + base.string() + ".csv");
            }
            amoc::writeAcfCsv(csv_out, result);
            writeTextFile(base.string() + ".json", amoc::acfToJson(result).dump(2) + "\n");

            std::cout << series.label << ": T = " << result.series_length
                      << ", band halfwidth = " << result.band_halfwidth << " -> " << base.string()
                      << ".{csv,json}\n";
        } catch (const amoc::DataError& e) {
            ++failures;
            std::cout << series.label << ": error: " << e.what() << '\n';
        }
    }
    return failures == static_cast<int>(opt.series_paths.size()) ? 2 : 0;
}

int runSimulate(const SimulateOptions& opt) {
    amoc::SyntheticSpec spec;
    spec.length = opt.length;
    if (opt.tau) {
        spec.tau = *opt.tau;
    }
    spec.mu = opt.mu;
    spec.delta = opt.delta;
    spec.noise = amoc::parseNoiseModel(opt.noise);
    spec.sigma = opt.sigma;
    spec.seed = opt.seed;

    amoc::SignificanceConfig config = makeSignificanceConfig(opt.alpha, opt.method,
                                                             opt.permutations, 0, std::nullopt);

    std::vector<amoc::TrialOutcome> outcomes;
    amoc::EvalSummary summary =
        amoc::evaluate(spec, opt.trials, config,
                       opt.per_trial_path.empty() ? nullptr : &outcomes);

    writeTextFile(opt.out_path, amoc::summaryToJson(summary).dump(2) + "\n");
    if (!opt.per_trial_path.empty()) {
        std::ostringstream csv;
        csv << "trial,tau_hat,significant,p_value\n";
        for (const auto& o : outcomes) {
            csv << o.trial << ',' << o.tau_hat << ',' << (o.significant ? 1 : 0) << ',';
            if (o.p_value) {
                csv << *o.p_value;
            }
            csv << '\n';
        }
        writeTextFile(opt.per_trial_path, csv.str());
    }

    std::cout << "trials: " << summary.trials << '\n';
    std::cout << "detection rate: " << summary.detection_rate << '\n';
    if (summary.false_positive_rate) {
        std::cout << "false positive rate: " << *summary.false_positive_rate << '\n';
    }
    if (summary.median_abs_localization_error) {
        std::cout << "median |tau_hat - tau|: " << *summary.median_abs_localization_error << '\n';
    }
    return 0;
}

int runReport(const std::string& results_path) {
    std::ifstream in{results_path};
    if (!in) {
        throw amoc::ConfigError("cannot open results file: " + results_path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw amoc::DataError("invalid results file: " + std::string(e.what()));
    }
    if (!doc.contains("results") || !doc["results"].is_array()) {
        throw amoc::DataError("results file has no \"results\" array");
    }
    std::vector<amoc::TableRow> rows;
    for (const auto& row : doc["results"]) {
        rows.push_back(amoc::tableRowFromJson(row));
    }
    std::cout << amoc::renderTable(rows);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"changepoint analysis for daily keyword-count series"};
    app.require_subcommand(1);

    IngestOptions ingest_opt;
    auto* ingest = app.add_subcommand("ingest", "aggregate records into daily-count CSVs");
    ingest->add_option("--records", ingest_opt.records_path, "records file (json-lines or CSV)")
        ->required();
    ingest->add_option("--format", ingest_opt.format, "records format: auto|jsonl|csv");
    ingest->add_option("--groups", ingest_opt.groups_path, "keyword groups JSON file")->required();
    ingest->add_option("--start", ingest_opt.start, "first day (YYYY-MM-DD)")->required();
    ingest->add_option("--end", ingest_opt.end, "last day, inclusive (YYYY-MM-DD)")->required();
    ingest->add_option("--out", ingest_opt.out_dir, "output directory")->required();

    DetectOptions detect_opt;
    auto* detect = app.add_subcommand("detect", "estimate and test a changepoint per series");
    detect->add_option("series", detect_opt.series_paths, "daily-count CSV files")
        ->required()
        ->expected(-1);
    detect->add_option("--out", detect_opt.out_path, "results JSON file")->required();
    detect->add_option("--alpha", detect_opt.alpha, "type-1 error level (default 0.05)");
    detect->add_option("--method", detect_opt.method, "significance method: permutation|penalty");
    detect->add_option("--permutations", detect_opt.permutations,
                       "permutation count B (default 999)");
    detect->add_option("--seed", detect_opt.seed, "permutation seed (default 0)");
    double penalty_arg = 0;
    auto* penalty_flag =
        detect->add_option("--penalty", penalty_arg, "penalty threshold (default 3 ln T)");

    AcfOptions acf_opt;
    auto* acf_cmd = app.add_subcommand("acf", "sample autocorrelations per series");
    acf_cmd->add_option("series", acf_opt.series_paths, "daily-count CSV files")
        ->required()
        ->expected(-1);
    acf_cmd->add_option("--out", acf_opt.out_dir, "output directory")->required();
    acf_cmd->add_option("--max-lag", acf_opt.max_lag, "largest lag (default 30)");

    SimulateOptions sim_opt;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo runs on synthetic series");
    simulate->add_option("--length", sim_opt.length, "series length T")->required();
    long tau_arg = 0;
    auto* tau_flag = simulate->add_option("--tau", tau_arg, "true changepoint (omit for null)");
    simulate->add_option("--mu", sim_opt.mu, "pre-change mean")->required();
    simulate->add_option("--delta", sim_opt.delta, "mean shift after tau (default 0)");
    simulate->add_option("--noise", sim_opt.noise, "noise model: gaussian|poisson");
    simulate->add_option("--sigma", sim_opt.sigma, "gaussian noise sd (default 1)");
    simulate->add_option("--seed", sim_opt.seed, "base seed (default 0)");
    simulate->add_option("--trials", sim_opt.trials, "number of trials")->required();
    simulate->add_option("--out", sim_opt.out_path, "summary JSON file")->required();
    simulate->add_option("--per-trial", sim_opt.per_trial_path, "optional per-trial CSV");
    simulate->add_option("--alpha", sim_opt.alpha, "type-1 error level (default 0.05)");
    simulate->add_option("--method", sim_opt.method, "significance method: permutation|penalty");
    simulate->add_option("--permutations", sim_opt.permutations,
                         "permutation count B (default 999)");

    std::string report_path;
    auto* report = app.add_subcommand("report", "render a results JSON as a table");
    report->add_option("results", report_path, "results JSON from detect")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*ingest) {
            return runIngest(ingest_opt);
        }
        if (*detect) {
            if (*penalty_flag) {
                detect_opt.penalty = penalty_arg;
            }
            return runDetect(detect_opt);
        }
        if (*acf_cmd) {
            return runAcf(acf_opt);
        }
        if (*simulate) {
            if (*tau_flag) {
                sim_opt.tau = tau_arg;
            }
            return runSimulate(sim_opt);
        }
        if (*report) {
            return runReport(report_path);
        }
    } catch (const amoc::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const amoc::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
