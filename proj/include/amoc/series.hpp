// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "amoc/dates.hpp"
#include "amoc/keyword.hpp"
#include "amoc/record.hpp"

#include <Eigen/Core>

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace amoc {

// Contiguous per-day counts starting at `start`. Absent days are explicit
// zeros, so counts[i] always belongs to start + i days. Values are
// integer-valued and non-negative; they are kept as doubles so the series
// feeds the numeric kernels directly.
struct DailySeries {
    std::string label;
    Date start{};
    Eigen::ArrayXd counts;

    Eigen::Index length() const { return counts.size(); }
    Date dateAt(Eigen::Index i) const { return addDays(start, i); }
    long long total() const { return static_cast<long long>(counts.sum()); }
};

// Throws DataError unless length >= 1 and every entry is a non-negative
// integer value.
void validateCounts(const DailySeries& series);

// counts[d] = number of deduplicated matching records whose UTC calendar
// date equals range.start + d. Records outside the range are ignored.
DailySeries aggregateDaily(const std::vector<RawRecord>& records, const KeywordGroup& group,
                           const DateRange& range);

// Daily-count CSV: header "date,count", ISO dates, one row per day,
// contiguous ascending. Readers throw DataError on gaps, negative or
// non-integer counts.
DailySeries readDailyCsv(std::istream& in, std::string label);
DailySeries readDailyCsv(const std::filesystem::path& path); // label = file stem
void writeDailyCsv(std::ostream& out, const DailySeries& series);
void writeDailyCsv(const std::filesystem::path& path, const DailySeries& series);

} // namespace amoc
