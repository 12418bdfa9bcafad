// SPDX-License-Identifier: Apache-2.0
//
// Shared test helpers: temp directories, file I/O, CLI invocation.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace testutil {

namespace fs = std::filesystem;

// Self-deleting directory under the system temp root.
class TempDir {
public:
    TempDir() {
        std::random_device rd;
        std::mt19937_64 gen{rd()};
        for (int attempt = 0; attempt < 32; ++attempt) {
            fs::path candidate =
                fs::temp_directory_path() / ("amoc_test_" + std::to_string(gen()));
            std::error_code ec;
            if (fs::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("could not create temp directory");
    }

    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }

    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path file(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

inline void writeFile(const fs::path& path, const std::string& content) {
    std::ofstream out{path};
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
}

inline std::string readFile(const fs::path& path) {
    std::ifstream in{path};
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shellQuote(const std::string& arg) {
    std::string quoted = "'";
    for (char c : arg) {
        if (c == '\'') {
            quoted += "'\\''";
        } else {
            quoted.push_back(c);
        }
    }
    quoted += "'";
    return quoted;
}

#ifdef AMOC_CLI_PATH
// Runs the amoc binary (path baked in via AMOC_CLI_PATH) with the given
// arguments, capturing stdout/stderr through files in a scratch dir.
inline CliResult runCli(const std::vector<std::string>& args, const TempDir& scratch) {
    static int counter = 0;
    fs::path out_path = scratch.file("cli_out_" + std::to_string(counter) + ".txt");
    fs::path err_path = scratch.file("cli_err_" + std::to_string(counter) + ".txt");
    ++counter;

    std::string cmd = shellQuote(AMOC_CLI_PATH);
    for (const auto& arg : args) {
        cmd += ' ';
        cmd += shellQuote(arg);
    }
    cmd += " > " + shellQuote(out_path.string()) + " 2> " + shellQuote(err_path.string());

    int status = std::system(cmd.c_str());
    CliResult result;
    if (status == -1) {
        result.exit_code = -1;
    } else if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else {
        result.exit_code = 128;
    }
    result.out = readFile(out_path);
    result.err = readFile(err_path);
    return result;
}
#endif

} // namespace testutil
