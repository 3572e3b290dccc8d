#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr interleaved
};

// Runs a shell command, capturing combined output and the exit code.
inline RunResult run(const std::string& command) {
    RunResult res;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
    const int status = pclose(pipe);
    if (WIFEXITED(status))
        res.exit_code = WEXITSTATUS(status);
    else
        res.exit_code = -1;
    return res;
}

} // namespace testutil
