#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramjump/json_io.hpp"

namespace ramjump {

Json cmd_normalize(const Problem& prob);
Json cmd_jumps(const Problem& prob);
// Exit-relevant flag comes back through the payload's "all_match".
Json cmd_verify(const Problem& prob);

struct SelftestOptions {
    int p = 3;
    int n = 2;
    int d = 2;
    long long count = 100;
    unsigned long long seed = 1;
    long long precision = 128;
};

Json cmd_selftest(const SelftestOptions& opt);

struct CommandResult {
    int exit_code = 0;
    std::string out; // JSON payload
    std::string err; // JSON diagnostics, empty on success
};

// Full dispatch used by both the binary and the tests. argv-style arguments
// without the program name.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace ramjump
