// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <string>

namespace amoc {

using Date = std::chrono::year_month_day;
using UtcTime = std::chrono::sys_seconds;

// "YYYY-MM-DD". Throws DataError on anything else.
Date parseDate(const std::string& text);

std::string formatDate(const Date& d);

// RFC 3339 timestamp, e.g. "2020-01-01T05:00:00Z" or
// "2020-01-01T01:00:00-05:00". Fractional seconds are accepted and
// discarded. The result is the UTC instant.
UtcTime parseTimestamp(const std::string& text);

// UTC calendar date of an instant.
Date utcDate(UtcTime t);

Date addDays(const Date& d, long n);

// b - a in days.
long daysBetween(const Date& a, const Date& b);

// Inclusive range of calendar days.
struct DateRange {
    Date start;
    Date end;

    long size() const { return daysBetween(start, end) + 1; }

    // 0-based day index of d inside the range, or -1.
    long indexOf(const Date& d) const;
};

// Validates start <= end.
DateRange makeDateRange(const Date& start, const Date& end);

} // namespace amoc
