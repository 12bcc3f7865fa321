#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "wcount_checks/acceptance.hpp"

// Usage: wcount_acceptance [--reduced] [--seed N] [--threads N] [ids...]
int main(int argc, char** argv) {
    wcount::acceptance::Config config;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--reduced") {
            config.reduced = true;
        } else if (arg == "--seed" && i + 1 < argc) {
            config.seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (arg == "--threads" && i + 1 < argc) {
            config.threads = std::atoi(argv[++i]);
        } else {
            ids.push_back(std::atoi(arg.c_str()));
        }
    }
    int failed = 0;
    wcount::acceptance::run(config, ids, [&](const wcount::acceptance::Result& r) {
        std::printf("%s\n", wcount::acceptance::format(r).c_str());
        std::fflush(stdout);
        failed += r.pass ? 0 : 1;
    });
    return failed == 0 ? 0 : 1;
}
