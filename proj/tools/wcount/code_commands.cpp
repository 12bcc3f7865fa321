#include <memory>

#include "commands.hpp"
#include "wcount/codes.hpp"
#include "wcount/error.hpp"
#include "wcount/text_io.hpp"
#include "wcount/wcount_format.hpp"

namespace wcli {

using namespace wcount;

namespace {

ModularInstance load_code(const std::string& path) { return parse_modular_instance(read_file(path)); }

void require_prime(const ModularInstance& code) {
    if (!is_prime(code.kappa)) {
        fail(ErrorKind::InvalidInput, "dual codes need a prime modulus, got " + std::to_string(code.kappa));
    }
}

mpz_class total(const std::vector<mpz_class>& coeffs) {
    mpz_class t = 0;
    for (const auto& c : coeffs) {
        t += c;
    }
    return t;
}

json rational_list(const std::vector<mpq_class>& v) {
    json out = json::array();
    for (const auto& x : v) {
        out.push_back(to_json(x));
    }
    return out;
}

bool same(const std::vector<mpq_class>& lhs, const std::vector<mpz_class>& rhs) {
    if (lhs.size() != rhs.size()) {
        return false;
    }
    for (size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] != mpq_class(rhs[i])) {
            return false;
        }
    }
    return true;
}

struct FileArgs {
    std::string file;
};

Outcome run_code_weight(const FileArgs& args, const Settings& settings) {
    Stopwatch sw;
    auto code = load_code(args.file);
    Outcome out;
    out.report["instance"] = instance_summary(code);
    auto pi = code_pi_table(code, code.exact_weights(), settings.limit);
    GaussianRational value;
    for (const auto& p : pi) {
        value += p;
    }
    out.report["value"] = to_json(value.to_complex());
    out.report["exact"] = to_json(value);
    out.report["by_support"] = indexed(exact_list(pi), 0);
    sw.stamp(out.report, settings);
    return out;
}

struct CodeApproxArgs {
    std::string file;
    ApproxFlags flags;
    bool exact = false;
};

Outcome run_code_approx(const CodeApproxArgs& args, const Settings& settings) {
    Stopwatch sw;
    auto code = load_code(args.file);
    Outcome out;
    auto rep = approx_code_weight(code, args.flags.options(settings));
    out.report["instance"] = instance_summary(code);
    out.report.update(approx_report(rep, args.flags.details));
    if (args.exact) {
        compare_with(out.report, rep.value, code_weight_exact(code, settings.limit).to_complex());
    }
    sw.stamp(out.report, settings);
    return out;
}

Outcome run_enumerator(const FileArgs& args, const Settings& settings) {
    Stopwatch sw;
    auto code = load_code(args.file);
    Outcome out;
    out.report["instance"] = instance_summary(code);
    auto px = enumerator_polynomial(code, settings.limit);
    out.report["size"] = to_json(total(px));
    out.report["enumerator"] = indexed(integer_list(px), 0);
    if (is_prime(code.kappa)) {
        int rank = rank_mod_prime(code.a, code.kappa);
        mpz_class expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(code.kappa),
                      static_cast<unsigned long>(code.cols() - rank));
        auto pc = dual_enumerator_polynomial(code.a, code.kappa, settings.limit);
        out.report["rank"] = rank;
        out.report["size_from_rank"] = to_json(expected);
        out.report["dual_enumerator"] = indexed(integer_list(pc), 0);
        if (expected != total(px)) {
            out.exit_code = 1;
        }
    }
    sw.stamp(out.report, settings);
    return out;
}

struct MacWilliamsArgs {
    std::string file;
    std::string z;
};

Outcome run_macwilliams(const MacWilliamsArgs& args, const Settings& settings) {
    Stopwatch sw;
    auto code = load_code(args.file);
    require_prime(code);
    const int p = code.kappa;
    const int n = code.cols();
    Outcome out;
    out.report["instance"] = instance_summary(code);
    auto px = enumerator_polynomial(code, settings.limit);
    auto pc = dual_enumerator_polynomial(code.a, p, settings.limit);
    int dim_c = rank_mod_prime(code.a, p);
    auto from_dual = macwilliams_transform(pc, p, n, dim_c);
    auto from_code = macwilliams_transform(px, p, n, n - dim_c);
    bool forward = same(from_dual, px);
    bool inverse = same(from_code, pc);
    out.report["dual_dimension"] = dim_c;
    out.report["enumerator"] = indexed(integer_list(px), 0);
    out.report["dual_enumerator"] = indexed(integer_list(pc), 0);
    out.report["transform_of_dual"] = indexed(rational_list(from_dual), 0);
    out.report["transform_of_code"] = indexed(rational_list(from_code), 0);
    out.report["forward_identity"] = forward;
    out.report["inverse_identity"] = inverse;
    if (!args.z.empty()) {
        Complex z = parse_complex(args.z);
        std::vector<Complex> pc_float;
        for (const auto& c : pc) {
            pc_float.push_back(c.get_d());
        }
        out.report["z"] = to_json(z);
        out.report["code_at_z"] = to_json(evaluate(px, z));
        out.report["from_dual_at_z"] = to_json(macwilliams_forward(pc_float, p, n, dim_c, z));
    }
    if (!forward || !inverse) {
        out.exit_code = 1;
    }
    sw.stamp(out.report, settings);
    return out;
}

struct CutCodeArgs {
    std::string file;
    std::string weight = "0.1";
};

Outcome run_cut_code(const CutCodeArgs& args) {
    auto g = parse_graph(read_file(args.file));
    auto code = cut_code_matrix(g, parse_complex(args.weight));
    auto comma = args.weight.find(',');
    auto exact = comma == std::string::npos
                     ? GaussianRational::parse(args.weight)
                     : GaussianRational::parse(args.weight.substr(0, comma), args.weight.substr(comma + 1));
    code.exact_w = std::vector<GaussianRational>(code.cols(), exact);
    Outcome out;
    out.raw = format_instance(code);
    return out;
}

}  // namespace

void add_code_commands(CLI::App& app, const Settings& settings, Action& action) {
    {
        auto args = std::make_shared<FileArgs>();
        auto* cmd = app.add_subcommand("code-weight", "Exact weight of a code by enumeration");
        cmd->add_option("file", args->file, "WCOUNT v1 instance in modular mode")->required()->check(CLI::ExistingFile);
        cmd->callback(
            [args, &settings, &action] { action = [args, &settings] { return run_code_weight(*args, settings); }; });
    }
    {
        auto args = std::make_shared<CodeApproxArgs>();
        auto* cmd = app.add_subcommand("code-approx", "Approximate the weight of a code");
        cmd->add_option("file", args->file, "WCOUNT v1 instance in modular mode")->required()->check(CLI::ExistingFile);
        args->flags.attach(cmd);
        cmd->add_flag("--exact", args->exact, "Also compute the weight by enumeration and report the error");
        cmd->callback(
            [args, &settings, &action] { action = [args, &settings] { return run_code_approx(*args, settings); }; });
    }
    {
        auto args = std::make_shared<FileArgs>();
        auto* cmd = app.add_subcommand("enumerator", "Weight enumerator of a code and, for prime moduli, its dual");
        cmd->add_option("file", args->file, "WCOUNT v1 instance in modular mode")->required()->check(CLI::ExistingFile);
        cmd->callback(
            [args, &settings, &action] { action = [args, &settings] { return run_enumerator(*args, settings); }; });
    }
    {
        auto args = std::make_shared<MacWilliamsArgs>();
        auto* cmd = app.add_subcommand("macwilliams", "Check the MacWilliams identity in rational arithmetic");
        cmd->add_option("file", args->file, "WCOUNT v1 instance in modular mode")->required()->check(CLI::ExistingFile);
        cmd->add_option("--z", args->z, "Also evaluate both sides at z (re or re,im)");
        cmd->callback(
            [args, &settings, &action] { action = [args, &settings] { return run_macwilliams(*args, settings); }; });
    }
    {
        auto args = std::make_shared<CutCodeArgs>();
        auto* cmd = app.add_subcommand("cut-code", "Write the binary code of a graph's vertex-edge incidence matrix");
        cmd->add_option("file", args->file, "Edge-list graph")->required()->check(CLI::ExistingFile);
        cmd->add_option("--weight,-w", args->weight, "Weight of every edge (re or re,im)");
        cmd->callback([args, &action] { action = [args] { return run_cut_code(*args); }; });
    }
}

}  // namespace wcli
