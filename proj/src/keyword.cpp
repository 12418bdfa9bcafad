// SPDX-License-Identifier: Apache-2.0
#include "amoc/keyword.hpp"

#include "amoc/error.hpp"

#include <json.hpp>

#include <fstream>
#include <unordered_set>

namespace amoc {

KeywordGroup makeKeywordGroup(std::string name, std::vector<std::string> phrases) {
    if (phrases.empty()) {
        throw ConfigError("keyword group \"" + name + "\" has no phrases");
    }
    std::unordered_set<std::string> seen;
    for (const std::string& phrase : phrases) {
        std::string norm = normalizeText(phrase);
        if (norm.empty()) {
            throw ConfigError("keyword group \"" + name + "\" contains an empty phrase");
        }
        if (!seen.insert(std::move(norm)).second) {
            throw ConfigError("keyword group \"" + name + "\" repeats phrase \"" + phrase +
                              "\" (case-insensitive)");
        }
    }
    return KeywordGroup{std::move(name), std::move(phrases)};
}

bool matchRecord(const RawRecord& record, const KeywordGroup& group) {
    std::string text = normalizeText(record.text);
    if (text.empty()) {
        return false;
    }
    for (const std::string& phrase : group.phrases) {
        if (text.find(normalizeText(phrase)) != std::string::npos) {
            return true;
        }
    }
    return false;
}

std::vector<KeywordGroup> loadKeywordGroups(const std::filesystem::path& path) {
    std::ifstream in{path};
    if (!in) {
        throw ConfigError("cannot open keyword groups file: " + path.string());
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("invalid keyword groups file " + path.string() + ": " + e.what());
    }
    if (!doc.is_array() || doc.empty()) {
        throw ConfigError("keyword groups file must be a non-empty JSON array");
    }

    std::vector<KeywordGroup> groups;
    std::unordered_set<std::string> names;
    for (const auto& entry : doc) {
        if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string() ||
            !entry.contains("phrases") || !entry["phrases"].is_array()) {
            throw ConfigError("each keyword group needs a \"name\" string and a "
                              "\"phrases\" array");
        }
        std::vector<std::string> phrases;
        for (const auto& p : entry["phrases"]) {
            if (!p.is_string()) {
                throw ConfigError("phrases must be strings");
            }
            phrases.push_back(p.get<std::string>());
        }
        std::string name = entry["name"].get<std::string>();
        if (!names.insert(name).second) {
            throw ConfigError("duplicate keyword group name \"" + name + "\"");
        }
        groups.push_back(makeKeywordGroup(std::move(name), std::move(phrases)));
    }
    return groups;
}

} // namespace amoc
