#include <iostream>

#include "commands.hpp"
#include "wcount/error.hpp"
#include "wcount/oracle.hpp"

namespace {

int exit_code_for(wcount::ErrorKind kind) {
    switch (kind) {
        case wcount::ErrorKind::GammaNotGreaterThanOne:
            return 3;
        case wcount::ErrorKind::InfeasibleWitness:
        case wcount::ErrorKind::NotAHomomorphism:
            return 4;
        case wcount::ErrorKind::EnumerationLimitExceeded:
            return 5;
        default:
            return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate weighted counts of integer points in sparse linear systems and codes"};
    app.require_subcommand(1);
    app.fallthrough();

    wcli::Settings settings;
    settings.limit = wcount::kDefaultEnumerationLimit;
    int threads = 0;
    app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag_callback("--json", [&settings] { settings.format = "json"; }, "Same as --format json");
    app.add_option("--threads,-j", threads, "Worker threads (default: WCOUNT_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--limit", settings.limit, "Most candidate vectors an exhaustive enumeration may visit")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timing", settings.timing, "Report wall-clock seconds");

    wcli::Action action;
    wcli::add_core_commands(app, settings, action);
    wcli::add_code_commands(app, settings, action);
    wcli::add_reduction_commands(app, settings, action);
    wcli::add_misc_commands(app, settings, action);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (threads > 0) {
        settings.threads = threads;
    }

    try {
        wcli::Outcome outcome = action();
        if (outcome.raw) {
            std::cout << *outcome.raw;
        } else {
            wcli::render(outcome.report, settings.json_output(), std::cout);
        }
        return outcome.exit_code;
    } catch (const wcount::Error& e) {
        if (settings.json_output()) {
            wcli::json report{{"error", wcount::to_string(e.kind())}, {"message", e.what()}};
            wcli::render(report, true, std::cout);
        }
        std::cerr << "wcount: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "wcount: " << e.what() << '\n';
        return 1;
    }
}
