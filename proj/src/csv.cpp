// SPDX-License-Identifier: Apache-2.0
#include "amoc/csv.hpp"

#include "amoc/error.hpp"

namespace amoc::csv {

bool readRecord(std::istream& in, std::vector<std::string>& fields, std::size_t& line) {
    fields.clear();
    int first = in.peek();
    if (first == std::istream::traits_type::eof()) {
        return false;
    }

    std::size_t start_line = line;
    std::string field;
    bool quoted = false;
    bool field_done_quoted = false; // closing quote seen; only , or newline may follow

    for (;;) {
        int ci = in.get();
        if (ci == std::istream::traits_type::eof()) {
            if (quoted) {
                throw ParseError(start_line, "unterminated quoted CSV field");
            }
            fields.push_back(std::move(field));
            return true;
        }
        char c = static_cast<char>(ci);

        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    quoted = false;
                    field_done_quoted = true;
                }
            } else {
                if (c == '\n') {
                    ++line;
                }
                field.push_back(c);
            }
            continue;
        }

        if (c == '\r') {
            // Only meaningful as part of CRLF; stray CR is dropped.
            continue;
        }
        if (c == '\n') {
            ++line;
            fields.push_back(std::move(field));
            return true;
        }
        if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
            field_done_quoted = false;
            continue;
        }
        if (field_done_quoted) {
            throw ParseError(line, "unexpected character after closing quote");
        }
        if (c == '"') {
            if (!field.empty()) {
                throw ParseError(line, "quote inside unquoted CSV field");
            }
            quoted = true;
            continue;
        }
        field.push_back(c);
    }
}

std::string escape(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) {
        return field;
    }
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace amoc::csv
