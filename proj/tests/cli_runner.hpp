#pragma once

// Runs the command-line tool and captures stdout and the exit status.

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace cli {

struct Result {
    int status = -1;
    std::string out;
};

inline Result run(const std::string& args) {
    Result r;
    const std::string cmd = std::string(CURVELAB_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

inline void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

} // namespace cli
