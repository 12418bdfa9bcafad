// SPDX-License-Identifier: Apache-2.0
#include "amoc/record.hpp"

#include "amoc/csv.hpp"
#include "amoc/error.hpp"

#include <json.hpp>

#include <cctype>
#include <unordered_set>

namespace amoc {

namespace {

// Strips a UTF-8 byte order mark if the stream starts with one.
void skipBom(std::istream& in) {
    if (in.peek() == 0xEF) {
        char bom[3];
        in.read(bom, 3);
        if (in.gcount() == 3 && bom[0] == '\xEF' && bom[1] == '\xBB' && bom[2] == '\xBF') {
            return;
        }
        // Not a BOM; rewind.
        for (int i = static_cast<int>(in.gcount()) - 1; i >= 0; --i) {
            in.putback(bom[i]);
        }
        in.clear();
    }
}

RawRecord makeRecord(std::string id, const std::string& timestamp, std::string text,
                     std::size_t line) {
    if (id.empty()) {
        throw ParseError(line, "record id must be non-empty");
    }
    RawRecord r;
    r.id = std::move(id);
    try {
        r.timestamp = parseTimestamp(timestamp);
    } catch (const DataError& e) {
        throw ParseError(line, e.what());
    }
    r.text = std::move(text);
    return r;
}

std::vector<RawRecord> parseJsonLines(std::istream& in) {
    std::vector<RawRecord> records;
    std::string line_text;
    std::size_t line = 0;
    while (std::getline(in, line_text)) {
        ++line;
        if (!line_text.empty() && line_text.back() == '\r') {
            line_text.pop_back();
        }
        if (line_text.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line_text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(line, std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object()) {
            throw ParseError(line, "expected a JSON object");
        }
        for (const char* key : {"id", "timestamp", "text"}) {
            if (!obj.contains(key) || !obj[key].is_string()) {
                throw ParseError(line, std::string("missing or non-string field \"") + key + "\"");
            }
        }
        records.push_back(makeRecord(obj["id"].get<std::string>(),
                                     obj["timestamp"].get<std::string>(),
                                     obj["text"].get<std::string>(), line));
    }
    return records;
}

std::vector<RawRecord> parseCsvRecords(std::istream& in) {
    std::vector<RawRecord> records;
    std::vector<std::string> fields;
    std::size_t line = 1;

    if (!csv::readRecord(in, fields, line)) {
        return records; // empty file: no header, no records
    }
    if (fields.size() != 3 || normalizeText(fields[0]) != "id" ||
        normalizeText(fields[1]) != "timestamp" || normalizeText(fields[2]) != "text") {
        throw ParseError(1, "expected CSV header \"id,timestamp,text\"");
    }

    while (true) {
        std::size_t record_line = line;
        if (!csv::readRecord(in, fields, line)) {
            break;
        }
        if (fields.size() == 1 && fields[0].empty()) {
            continue; // blank line
        }
        if (fields.size() != 3) {
            throw ParseError(record_line, "expected 3 CSV fields, got " +
                                              std::to_string(fields.size()));
        }
        records.push_back(makeRecord(fields[0], fields[1], fields[2], record_line));
    }
    return records;
}

} // namespace

RecordFormat parseRecordFormat(const std::string& tag) {
    if (tag == "jsonl" || tag == "json-lines") {
        return RecordFormat::JsonLines;
    }
    if (tag == "csv") {
        return RecordFormat::Csv;
    }
    throw ConfigError("unknown record format \"" + tag + "\" (expected jsonl or csv)");
}

std::string normalizeText(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (unsigned char c : text) {
        if (std::isspace(c) != 0) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    return out;
}

std::vector<RawRecord> parseRecords(std::istream& in, RecordFormat format) {
    skipBom(in);
    switch (format) {
    case RecordFormat::JsonLines:
        return parseJsonLines(in);
    case RecordFormat::Csv:
        return parseCsvRecords(in);
    }
    throw ConfigError("unhandled record format");
}

std::vector<RawRecord> dedupRecords(const std::vector<RawRecord>& records) {
    std::vector<RawRecord> kept;
    std::unordered_set<std::string> seen;
    for (const RawRecord& r : records) {
        std::string key = normalizeText(r.text);
        if (key.starts_with("rt @")) {
            continue;
        }
        if (seen.insert(std::move(key)).second) {
            kept.push_back(r);
        }
    }
    return kept;
}

} // namespace amoc
