// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "amoc/acf.hpp"
#include "amoc/changepoint.hpp"
#include "amoc/synth.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace amoc {

// One line of the summary table. An error row carries the reason instead of
// a detection outcome.
struct TableRow {
    std::string label;
    std::optional<long long> total;
    std::optional<Date> tau_date;
    bool significant = false;
    std::optional<double> p_value;
    std::string error;
};

// "29th March", "2nd May".
std::string ordinalDayMonth(const Date& d);

// "235,542".
std::string withThousands(long long n);

// Plain-text table with columns name | #tweets | changepoint. Changepoint
// cells show the ISO date plus the human-readable form for significant
// results, "none" otherwise.
std::string renderTable(const std::vector<TableRow>& rows);

TableRow toTableRow(const std::string& label, long long total, const ChangepointResult& result);

// Convenience over toTableRow + renderTable.
std::string renderReport(
    const std::vector<std::tuple<std::string, long long, ChangepointResult>>& results);

// Structured row: {label, T, total, tau_hat, tau_date, max_stat, p_value?,
// significant, pre_mean, post_mean, delta_hat}.
nlohmann::json resultToJson(const std::string& label, long long total,
                            const ChangepointResult& result);
nlohmann::json errorRowToJson(const std::string& label, std::optional<long long> total,
                              const std::string& error);
TableRow tableRowFromJson(const nlohmann::json& row);

// {label, T, band_halfwidth, rows: [{lag, r}]}.
nlohmann::json acfToJson(const AcfResult& result);

nlohmann::json summaryToJson(const EvalSummary& summary);

} // namespace amoc
