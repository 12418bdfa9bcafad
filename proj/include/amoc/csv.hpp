// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace amoc::csv {

// Reads the next logical CSV record (RFC 4180: quoted fields may contain
// commas, doubled quotes and newlines). Returns false on clean end of
// input. `line` must start at 1 and is advanced past the record, so errors
// and records can be attributed to physical lines.
bool readRecord(std::istream& in, std::vector<std::string>& fields, std::size_t& line);

// Quotes a field iff it contains a comma, quote or newline.
std::string escape(const std::string& field);

} // namespace amoc::csv
