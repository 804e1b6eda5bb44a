// Small helper for driving the CLI binary from integration tests:
// runs a shell command with stdin supplied from a string and captures
// stdout, stderr, and the exit code through temp files in the working
// directory.

#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace testsupport {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    f << content;
}

// prefix keeps temp files of concurrently running test binaries apart
inline RunResult run_command(const std::string& prefix,
                             const std::string& command,
                             const std::string& stdin_data = "") {
    const std::string in_path = prefix + "_stdin.tmp";
    const std::string out_path = prefix + "_stdout.tmp";
    const std::string err_path = prefix + "_stderr.tmp";
    write_file(in_path, stdin_data);

    const std::string full = command + " < " + in_path + " > " + out_path +
                             " 2> " + err_path;
    const int status = std::system(full.c_str());

    RunResult result;
    if (status != -1 && WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

}  // namespace testsupport
