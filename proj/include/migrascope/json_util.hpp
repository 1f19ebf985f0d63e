#pragma once

#include <string>

#include "json.hpp"

namespace migrascope {

/// Canonical dump: lexicographically sorted keys (nlohmann's default object
/// ordering), 2-space indentation, trailing newline.
inline std::string dump_canonical(const nlohmann::json& value) {
    return value.dump(2) + "\n";
}

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Parses text or raises Error(ProfileParse) with the file name in the message.
nlohmann::json parse_json_or_raise(const std::string& text, const std::string& origin);

} // namespace migrascope
