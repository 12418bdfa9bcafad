// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "amoc/record.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace amoc {

// A named set of match phrases (e.g. the CY / ON / TW sub-classes, or a
// single keyword).
struct KeywordGroup {
    std::string name;
    std::vector<std::string> phrases;
};

// Validates that phrases is non-empty, each phrase is non-empty and no two
// phrases collide after normalization. Throws ConfigError.
KeywordGroup makeKeywordGroup(std::string name, std::vector<std::string> phrases);

// True iff any phrase occurs as a case-insensitive substring of the
// whitespace-collapsed record text. A space inside a phrase matches exactly
// one space in the collapsed text, so "cyber bully" does not match
// "cyber-bully".
bool matchRecord(const RawRecord& record, const KeywordGroup& group);

// JSON array of {"name": ..., "phrases": [...]}. Throws ConfigError.
std::vector<KeywordGroup> loadKeywordGroups(const std::filesystem::path& path);

} // namespace amoc
