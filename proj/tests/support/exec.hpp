#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace testsupport {

struct ExecResult {
    int exit_code = -1;
    std::string output; // stdout + stderr interleaved
};

inline std::string shell_quote(const std::string& arg) {
    std::string out = "'";
    for (char c : arg) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out += c;
        }
    }
    out += "'";
    return out;
}

/// Runs a command line through the shell with stderr folded into stdout.
inline ExecResult run_command(const std::vector<std::string>& args, const std::string& cwd = "") {
    std::string command;
    if (!cwd.empty()) {
        command += "cd " + shell_quote(cwd) + " && ";
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) {
            command += ' ';
        }
        command += shell_quote(args[i]);
    }
    command += " 2>&1";
    ExecResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    std::array<char, 4096> buffer;
    while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe)) {
        result.output.append(buffer.data(), got);
    }
    int status = ::pclose(pipe);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

} // namespace testsupport
