#include "migrascope/json_util.hpp"

#include <fstream>
#include <sstream>

#include "migrascope/errors.hpp"

namespace migrascope {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        raise(ErrorKind::Io, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        raise(ErrorKind::Io, "cannot write " + path);
    }
    out << content;
    if (!out) {
        raise(ErrorKind::Io, "short write to " + path);
    }
}

nlohmann::json parse_json_or_raise(const std::string& text, const std::string& origin) {
    nlohmann::json parsed = nlohmann::json::parse(text, nullptr, false);
    if (parsed.is_discarded()) {
        raise(ErrorKind::ProfileParse, "malformed JSON in " + origin);
    }
    return parsed;
}

} // namespace migrascope
