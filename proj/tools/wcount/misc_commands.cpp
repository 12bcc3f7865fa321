#include <fstream>
#include <iostream>
#include <memory>

#include "commands.hpp"
#include "wcount/error.hpp"
#include "wcount/generators.hpp"
#include "wcount/newton.hpp"
#include "wcount/text_io.hpp"
#include "wcount/wcount_format.hpp"
#include "wcount_checks/acceptance.hpp"

namespace wcli {

using namespace wcount;

namespace {

struct GenArgs {
    std::string kind = "instance";
    uint64_t seed = 1;
    std::string out;
    int n = 10;
    int m = 6;
    int r = 4;
    int c = 3;
    int nu = 2;
    int coeff = 2;
    int kappa = 2;
    double scale = 1.0;
    bool exact_magnitude = false;
    bool real = false;
    double p = 0.3;
    double loops = 0.0;
    int degree = 3;
    int k = 2;
    int parts = 3;
    int extra = 3;
    double off_scale = 0.01;
    double e_max = 0.01;
    double rewire = 0.1;
};

std::string generate(const GenArgs& g) {
    Rng rng(g.seed);
    if (g.kind == "instance") {
        InstanceParams p;
        p.n = g.n;
        p.m = g.m;
        p.r = g.r;
        p.c = g.c;
        p.nu_max = g.nu;
        p.coeff_max = g.coeff;
        p.scale = g.scale;
        p.exact_magnitude = g.exact_magnitude;
        p.complex_weights = !g.real;
        return format_instance(random_instance(rng, p));
    }
    if (g.kind == "code") {
        CodeParams p;
        p.kappa = g.kappa;
        p.n = g.n;
        p.m = g.m;
        p.r = g.r;
        p.c = g.c;
        p.scale = g.scale;
        p.exact_magnitude = g.exact_magnitude;
        p.complex_weights = !g.real;
        return format_instance(random_code(rng, p));
    }
    if (g.kind == "scaling") {
        return format_instance(scaling_instance(rng, g.n, 0.5 * g.scale, g.rewire));
    }
    if (g.kind == "graph") {
        return format_graph(random_connected_graph(rng, g.n, g.p, g.loops));
    }
    if (g.kind == "regular") {
        return format_graph(random_regular_graph(rng, g.n, g.degree));
    }
    if (g.kind == "hypergraph") {
        return format_hypergraph(random_hypergraph(rng, g.k, g.parts, g.extra, g.off_scale));
    }
    return format_matrix(random_permanent_matrix(rng, g.n, g.e_max));
}

Outcome run_gen(const GenArgs& args) {
    Outcome out;
    std::string text = generate(args);
    if (args.out.empty()) {
        out.raw = text;
        return out;
    }
    std::ofstream file(args.out);
    if (!(file << text)) {
        fail(ErrorKind::InvalidInput, "cannot write " + args.out);
    }
    out.report["kind"] = args.kind;
    out.report["seed"] = args.seed;
    out.report["written"] = args.out;
    return out;
}

struct SelftestArgs {
    int seeds = 1;
    uint64_t seed = acceptance::Config{}.seed;
    bool full = false;
    bool inject_fault = false;
    std::vector<int> criteria;
};

Outcome run_selftest(const SelftestArgs& args, const Settings& settings) {
    debug::set_newton_fault(args.inject_fault);
    Outcome out;
    json runs = json::array();
    int total = 0;
    int failed = 0;
    for (int i = 0; i < args.seeds; ++i) {
        acceptance::Config config;
        config.seed = args.seed + static_cast<uint64_t>(i);
        config.reduced = !args.full;
        config.threads = settings.thread_count();
        if (!settings.json_output()) {
            std::cout << "seed " << config.seed << '\n';
        }
        json results = json::array();
        acceptance::run(config, args.criteria, [&](const acceptance::Result& r) {
            ++total;
            failed += r.pass ? 0 : 1;
            if (settings.json_output()) {
                json j{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
                if (settings.timing) {
                    j["seconds"] = r.seconds;
                }
                results.push_back(j);
            } else {
                std::cout << "  " << acceptance::format(r) << '\n' << std::flush;
            }
        });
        runs.push_back(json{{"seed", config.seed}, {"results", results}});
    }
    debug::set_newton_fault(false);
    if (settings.json_output()) {
        out.report["runs"] = runs;
        out.report["checks"] = total;
        out.report["failed"] = failed;
    } else {
        out.raw = "selftest: " + std::to_string(total - failed) + " of " + std::to_string(total) + " passed\n";
    }
    out.exit_code = failed == 0 ? 0 : 1;
    return out;
}

}  // namespace

void add_misc_commands(CLI::App& app, const Settings& settings, Action& action) {
    {
        auto args = std::make_shared<GenArgs>();
        auto* cmd = app.add_subcommand("gen", "Write a seeded random instance, code, graph, hypergraph or matrix");
        cmd->add_option("--kind", args->kind, "What to generate")
            ->check(CLI::IsMember({"instance", "code", "scaling", "graph", "regular", "hypergraph", "matrix"}));
        cmd->add_option("--seed", args->seed, "Random seed");
        cmd->add_option("--out,-o", args->out, "Output file (default: standard output)");
        cmd->add_option("--n,-n", args->n, "Columns, vertices or matrix size")->check(CLI::PositiveNumber);
        cmd->add_option("--m,-m", args->m, "Rows")->check(CLI::PositiveNumber);
        cmd->add_option("--r", args->r, "Max nonzeros per row")->check(CLI::Range(2, 64));
        cmd->add_option("--c", args->c, "Max nonzeros per column")->check(CLI::PositiveNumber);
        cmd->add_option("--nu", args->nu, "Max cap per column")->check(CLI::PositiveNumber);
        cmd->add_option("--coeff", args->coeff, "Max coefficient magnitude")->check(CLI::PositiveNumber);
        cmd->add_option("--kappa", args->kappa, "Modulus for codes")->check(CLI::Range(2, 1 << 20));
        cmd->add_option("--scale", args->scale, "Weight modulus as a fraction of the certified threshold");
        cmd->add_flag("--exact-magnitude", args->exact_magnitude, "Every weight exactly at the scaled threshold");
        cmd->add_flag("--real", args->real, "Real positive weights");
        cmd->add_option("--p", args->p, "Extra edge probability for graphs")->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--loops", args->loops, "Loop probability for graphs")->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--degree", args->degree, "Degree of regular graphs")->check(CLI::PositiveNumber);
        cmd->add_option("--k", args->k, "Edge size of hypergraphs")->check(CLI::PositiveNumber);
        cmd->add_option("--parts", args->parts, "Matching edges of hypergraphs")->check(CLI::PositiveNumber);
        cmd->add_option("--extra", args->extra, "Further hypergraph edges")->check(CLI::NonNegativeNumber);
        cmd->add_option("--off-scale", args->off_scale, "Max modulus of weights off the matching");
        cmd->add_option("--e-max", args->e_max, "Max modulus of off-diagonal matrix entries");
        cmd->add_option("--rewire", args->rewire, "Fraction of rewired rows in scaling instances")
            ->check(CLI::Range(0.0, 1.0));
        cmd->callback([args, &action] { action = [args] { return run_gen(*args); }; });
    }
    {
        auto args = std::make_shared<SelftestArgs>();
        auto* cmd = app.add_subcommand("selftest", "Run the acceptance suites on seeded random inputs");
        cmd->add_option("--seeds", args->seeds, "Number of consecutive seeds")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", args->seed, "First seed");
        cmd->add_flag("--full", args->full, "Full instance counts instead of the reduced ones");
        cmd->add_flag("--inject-fault", args->inject_fault, "Break the power-sum recursion to check the suites fail");
        cmd->add_option("--criteria", args->criteria, "Only these criteria (1-9)")
            ->delimiter(',')
            ->check(CLI::Range(1, acceptance::kCriterionCount));
        cmd->callback(
            [args, &settings, &action] { action = [args, &settings] { return run_selftest(*args, settings); }; });
    }
}

}  // namespace wcli
