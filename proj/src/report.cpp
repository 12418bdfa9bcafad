// SPDX-License-Identifier: Apache-2.0
#include "amoc/report.hpp"

#include "amoc/error.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace amoc {

namespace {

const char* kMonthNames[] = {"January", "February", "March",     "April",   "May",      "June",
                             "July",    "August",   "September", "October", "November", "December"};

std::string ordinalSuffix(unsigned day) {
    if (day % 100 / 10 == 1) {
        return "th"; // 11th, 12th, 13th
    }
    switch (day % 10) {
    case 1:
        return "st";
    case 2:
        return "nd";
    case 3:
        return "rd";
    default:
        return "th";
    }
}

std::string formatPvalue(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", p);
    return buf;
}

std::string changepointCell(const TableRow& row) {
    if (!row.error.empty()) {
        return "error: " + row.error;
    }
    if (row.significant && row.tau_date) {
        return formatDate(*row.tau_date) + " (" + ordinalDayMonth(*row.tau_date) + ")";
    }
    if (row.p_value) {
        return "none (p = " + formatPvalue(*row.p_value) + ")";
    }
    return "none";
}

} // namespace

std::string ordinalDayMonth(const Date& d) {
    unsigned day = static_cast<unsigned>(d.day());
    unsigned month = static_cast<unsigned>(d.month());
    return std::to_string(day) + ordinalSuffix(day) + " " + kMonthNames[month - 1];
}

std::string withThousands(long long n) {
    std::string digits = std::to_string(n < 0 ? -n : n);
    std::string out;
    out.reserve(digits.size() + digits.size() / 3 + 1);
    int until_comma = static_cast<int>(digits.size() % 3);
    if (until_comma == 0) {
        until_comma = 3;
    }
    for (char c : digits) {
        if (until_comma == 0) {
            out.push_back(',');
            until_comma = 3;
        }
        out.push_back(c);
        --until_comma;
    }
    return n < 0 ? "-" + out : out;
}

std::string renderTable(const std::vector<TableRow>& rows) {
    const std::string headers[3] = {"name", "#tweets", "changepoint"};
    std::vector<std::array<std::string, 3>> cells;
    cells.reserve(rows.size());
    for (const TableRow& row : rows) {
        cells.push_back({row.label, row.total ? withThousands(*row.total) : std::string("-"),
                         changepointCell(row)});
    }

    std::size_t width[3];
    for (int c = 0; c < 3; ++c) {
        width[c] = headers[c].size();
        for (const auto& r : cells) {
            width[c] = std::max(width[c], r[c].size());
        }
    }

    std::ostringstream out;
    auto pad = [](const std::string& s, std::size_t w, bool right) {
        std::string fill(w - s.size(), ' ');
        return right ? fill + s : s + fill;
    };
    out << pad(headers[0], width[0], false) << " | " << pad(headers[1], width[1], true) << " | "
        << headers[2] << '\n';
    out << std::string(width[0] + 1, '-') << '+' << std::string(width[1] + 2, '-') << '+'
        << std::string(width[2] + 1, '-') << '\n';
    for (const auto& r : cells) {
        out << pad(r[0], width[0], false) << " | " << pad(r[1], width[1], true) << " | " << r[2]
            << '\n';
    }
    return out.str();
}

TableRow toTableRow(const std::string& label, long long total, const ChangepointResult& result) {
    TableRow row;
    row.label = label;
    row.total = total;
    row.tau_date = result.tau_date;
    row.significant = result.significant;
    row.p_value = result.p_value;
    return row;
}

std::string renderReport(
    const std::vector<std::tuple<std::string, long long, ChangepointResult>>& results) {
    std::vector<TableRow> rows;
    rows.reserve(results.size());
    for (const auto& [label, total, result] : results) {
        rows.push_back(toTableRow(label, total, result));
    }
    return renderTable(rows);
}

nlohmann::json resultToJson(const std::string& label, long long total,
                            const ChangepointResult& result) {
    nlohmann::json row{
        {"label", label},
        {"T", result.curve.series_length},
        {"total", total},
        {"tau_hat", result.tau_hat},
        {"tau_date", formatDate(result.tau_date)},
        {"max_stat", result.max_stat},
        {"significant", result.significant},
        {"pre_mean", result.pre_mean},
        {"post_mean", result.post_mean},
        {"delta_hat", result.delta_hat},
    };
    if (result.p_value) {
        row["p_value"] = *result.p_value;
    }
    return row;
}

nlohmann::json errorRowToJson(const std::string& label, std::optional<long long> total,
                              const std::string& error) {
    nlohmann::json row{{"label", label}, {"error", error}};
    if (total) {
        row["total"] = *total;
    }
    return row;
}

TableRow tableRowFromJson(const nlohmann::json& row) {
    if (!row.is_object() || !row.contains("label")) {
        throw DataError("result row must be an object with a label");
    }
    TableRow out;
    out.label = row["label"].get<std::string>();
    if (row.contains("total")) {
        out.total = row["total"].get<long long>();
    }
    if (row.contains("error")) {
        out.error = row["error"].get<std::string>();
        return out;
    }
    out.significant = row.at("significant").get<bool>();
    out.tau_date = parseDate(row.at("tau_date").get<std::string>());
    if (row.contains("p_value")) {
        out.p_value = row["p_value"].get<double>();
    }
    return out;
}

nlohmann::json acfToJson(const AcfResult& result) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index k = 0; k < result.correlations.size(); ++k) {
        rows.push_back({{"lag", k}, {"r", result.correlations[k]}});
    }
    return nlohmann::json{{"label", result.label},
                          {"T", result.series_length},
                          {"band_halfwidth", result.band_halfwidth},
                          {"rows", std::move(rows)}};
}

nlohmann::json summaryToJson(const EvalSummary& summary) {
    nlohmann::json spec{
        {"length", summary.spec.length}, {"mu", summary.spec.mu},
        {"delta", summary.spec.delta},   {"noise", toString(summary.spec.noise)},
        {"seed", summary.spec.seed},
    };
    if (summary.spec.tau) {
        spec["tau"] = *summary.spec.tau;
    }
    if (summary.spec.noise == NoiseModel::Gaussian) {
        spec["sigma"] = summary.spec.sigma;
    }

    nlohmann::json significance{
        {"alpha", summary.config.alpha},
        {"method", toString(summary.config.method)},
        {"permutations", summary.config.permutations},
    };
    if (summary.config.penalty_value) {
        significance["penalty_value"] = *summary.config.penalty_value;
    }

    nlohmann::json out{
        {"trials", summary.trials},
        {"detection_rate", summary.detection_rate},
        {"spec", std::move(spec)},
        {"significance", std::move(significance)},
    };
    if (summary.false_positive_rate) {
        out["false_positive_rate"] = *summary.false_positive_rate;
    }
    if (summary.median_abs_localization_error) {
        out["median_abs_localization_error"] = *summary.median_abs_localization_error;
    }
    return out;
}

} // namespace amoc
