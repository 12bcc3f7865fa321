#ifndef WCOUNT_TOOLS_COMMANDS_HPP
#define WCOUNT_TOOLS_COMMANDS_HPP

#include <CLI11.hpp>

#include "report.hpp"
#include "wcount/instance.hpp"
#include "wcount/interpolation.hpp"

namespace wcli {

// Each function adds its subcommands; a parsed subcommand stores its work in `action`.
void add_core_commands(CLI::App& app, const Settings& settings, Action& action);
void add_code_commands(CLI::App& app, const Settings& settings, Action& action);
void add_reduction_commands(CLI::App& app, const Settings& settings, Action& action);
void add_misc_commands(CLI::App& app, const Settings& settings, Action& action);

/// Options shared by the commands that run the approximation.
struct ApproxFlags {
    double epsilon = 1e-3;
    int s = -1;
    bool force = false;
    bool details = false;

    void attach(CLI::App* cmd);
    wcount::ApproxOptions options(const Settings& settings) const;
};

json instance_summary(const wcount::WeightedInstance& inst);
json instance_summary(const wcount::ModularInstance& inst);

/// Adds "exact" and "log_error" for a reference value.
void compare_with(json& report, Complex approx, Complex exact);

/// Refuse exhaustive work over more than `limit` candidates.
void require_within_limit(double candidates, const Settings& settings, const char* what);

}  // namespace wcli

#endif
