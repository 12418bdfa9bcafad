// SPDX-License-Identifier: Apache-2.0
#include "amoc/series.hpp"

#include "amoc/csv.hpp"
#include "amoc/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace amoc {

void validateCounts(const DailySeries& series) {
    if (series.counts.size() < 1) {
        throw DataError("series \"" + series.label + "\" is empty");
    }
    for (Eigen::Index i = 0; i < series.counts.size(); ++i) {
        double v = series.counts[i];
        if (!(v >= 0) || v != std::floor(v)) {
            throw DataError("series \"" + series.label + "\" has a non-count value at day " +
                            std::to_string(i));
        }
    }
}

DailySeries aggregateDaily(const std::vector<RawRecord>& records, const KeywordGroup& group,
                           const DateRange& range) {
    DailySeries series;
    series.label = group.name;
    series.start = range.start;
    series.counts = Eigen::ArrayXd::Zero(range.size());
    for (const RawRecord& r : records) {
        long idx = range.indexOf(utcDate(r.timestamp));
        if (idx >= 0 && matchRecord(r, group)) {
            series.counts[idx] += 1.0;
        }
    }
    return series;
}

DailySeries readDailyCsv(std::istream& in, std::string label) {
    std::vector<std::string> fields;
    std::size_t line = 1;

    if (!csv::readRecord(in, fields, line) || fields.size() != 2 ||
        normalizeText(fields[0]) != "date" || normalizeText(fields[1]) != "count") {
        throw DataError("series \"" + label + "\": expected CSV header \"date,count\"");
    }

    DailySeries series;
    series.label = std::move(label);
    std::vector<double> counts;
    while (true) {
        std::size_t record_line = line;
        if (!csv::readRecord(in, fields, line)) {
            break;
        }
        if (fields.size() == 1 && fields[0].empty()) {
            continue;
        }
        if (fields.size() != 2) {
            throw ParseError(record_line, "expected 2 CSV fields");
        }
        Date date = parseDate(fields[0]);
        if (counts.empty()) {
            series.start = date;
        } else if (daysBetween(series.start, date) != static_cast<long>(counts.size())) {
            throw ParseError(record_line, "days are not contiguous at " + fields[0]);
        }

        long long value = 0;
        const char* first = fields[1].data();
        const char* last = first + fields[1].size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || value < 0) {
            throw ParseError(record_line, "count must be a non-negative integer, got \"" +
                                              fields[1] + "\"");
        }
        counts.push_back(static_cast<double>(value));
    }
    if (counts.empty()) {
        throw DataError("series \"" + series.label + "\" has no rows");
    }
    series.counts = Eigen::Map<Eigen::ArrayXd>(counts.data(), counts.size());
    return series;
}

DailySeries readDailyCsv(const std::filesystem::path& path) {
    std::ifstream in{path};
    if (!in) {
        throw ConfigError("cannot open series file: " + path.string());
    }
    return readDailyCsv(in, path.stem().string());
}

void writeDailyCsv(std::ostream& out, const DailySeries& series) {
    out << "date,count\n";
    for (Eigen::Index i = 0; i < series.length(); ++i) {
        out << formatDate(series.dateAt(i)) << ','
            << static_cast<long long>(series.counts[i]) << '\n';
    }
}

void writeDailyCsv(const std::filesystem::path& path, const DailySeries& series) {
    std::ofstream out{path};
    if (!out) {
        throw ConfigError("cannot write series file: " + path.string());
    }
    writeDailyCsv(out, series);
}

} // namespace amoc
