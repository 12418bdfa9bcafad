// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "amoc/dates.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace amoc {

// One timestamped text item from an input file.
struct RawRecord {
    std::string id;
    UtcTime timestamp{};
    std::string text;
};

enum class RecordFormat { JsonLines, Csv };

// Accepts "jsonl", "json-lines" or "csv". Throws ConfigError otherwise.
RecordFormat parseRecordFormat(const std::string& tag);

// ASCII case-folded, whitespace runs collapsed to single spaces, leading and
// trailing whitespace removed. This is the canonical form used for both
// dedup keys and keyword matching.
std::string normalizeText(std::string_view text);

// json-lines: one object per line with string fields id, timestamp, text.
// csv: header row id,timestamp,text with RFC 4180 quoting.
// Records come back in file order with timestamps normalized to UTC.
// Throws ParseError (with line number) on malformed input.
std::vector<RawRecord> parseRecords(std::istream& in, RecordFormat format);

// Keeps the first occurrence per normalized-text key and drops retweets
// (normalized text starting with "rt @"). Stable order; idempotent.
std::vector<RawRecord> dedupRecords(const std::vector<RawRecord>& records);

} // namespace amoc
