#include <algorithm>
#include <cmath>
#include <memory>
#include <variant>

#include "commands.hpp"
#include "wcount/codes.hpp"
#include "wcount/error.hpp"
#include "wcount/newton.hpp"
#include "wcount/oracle.hpp"
#include "wcount/powersum.hpp"
#include "wcount/wcount_format.hpp"

namespace wcli {

using namespace wcount;

void ApproxFlags::attach(CLI::App* cmd) {
    cmd->add_option("--epsilon,-e", epsilon, "Target error of ln w")->check(CLI::PositiveNumber);
    cmd->add_option("--s", s, "Truncation order instead of the one derived from epsilon")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--force", force, "Run even when the weights are outside the certified region");
    cmd->add_flag("--details", details, "Include power sums and Taylor coefficients");
}

ApproxOptions ApproxFlags::options(const Settings& settings) const {
    ApproxOptions o;
    o.epsilon = epsilon;
    if (s >= 0) {
        o.s_override = s;
    }
    o.force = force;
    o.threads = settings.thread_count();
    return o;
}

json instance_summary(const WeightedInstance& inst) {
    return json{{"mode", "integer"}, {"rows", inst.rows()}, {"cols", inst.cols()}, {"degree", inst.degree()}};
}

json instance_summary(const ModularInstance& inst) {
    return json{{"mode", "modular"}, {"kappa", inst.kappa}, {"rows", inst.rows()}, {"cols", inst.cols()}};
}

void compare_with(json& report, Complex approx, Complex exact) {
    report["exact"] = to_json(exact);
    report["log_error"] = std::abs(std::log(approx / exact));
}

void require_within_limit(double candidates, const Settings& settings, const char* what) {
    if (candidates > static_cast<double>(settings.limit)) {
        fail(ErrorKind::EnumerationLimitExceeded,
             std::string(what) + " would visit more than " + std::to_string(settings.limit) + " candidates");
    }
}

namespace {

ApproxReport approximate(const WeightedInstance& inst, const ApproxOptions& o) { return approx_w(inst, o); }
ApproxReport approximate(const ModularInstance& inst, const ApproxOptions& o) { return approx_code_weight(inst, o); }

GaussianRational exact_value(const WeightedInstance& inst, uint64_t limit) { return exact_w_rational(inst, limit); }
GaussianRational exact_value(const ModularInstance& inst, uint64_t limit) { return code_weight_exact(inst, limit); }

FastResult<Complex> fast_sigma(const WeightedInstance& inst, int k, const FastOptions& o) {
    return sigma_fast(inst, k, o);
}
FastResult<Complex> fast_sigma(const ModularInstance& inst, int k, const FastOptions& o) {
    return code_sigma_fast(inst, k, o);
}
FastResult<GaussianRational> fast_sigma_exact(const WeightedInstance& inst, int k, const FastOptions& o) {
    return sigma_fast(inst, inst.exact_weights(), k, o);
}
FastResult<GaussianRational> fast_sigma_exact(const ModularInstance& inst, int k, const FastOptions& o) {
    return code_sigma_fast(inst, inst.exact_weights(), k, o);
}

std::vector<GaussianRational> oracle_pi(const WeightedInstance& inst, int s, uint64_t limit) {
    return pi_table_exact(inst, s, limit);
}
std::vector<GaussianRational> oracle_pi(const ModularInstance& inst, int s, uint64_t limit) {
    auto pi = code_pi_table(inst, inst.exact_weights(), limit);
    pi.resize(static_cast<size_t>(s) + 1, GaussianRational());
    return pi;
}

std::vector<Complex> roots_of(const WeightedInstance& inst, uint64_t limit) { return roots_of_w(inst, limit); }
std::vector<Complex> roots_of(const ModularInstance& inst, uint64_t limit) { return code_roots(inst, limit); }

struct ApproxArgs {
    std::string file;
    ApproxFlags flags;
    bool exact = false;
};

Outcome run_approx(const ApproxArgs& args, const Settings& settings) {
    Stopwatch sw;
    auto any = load_instance_file(args.file);
    Outcome out;
    std::visit(
        [&](const auto& inst) {
            auto rep = approximate(inst, args.flags.options(settings));
            out.report["instance"] = instance_summary(inst);
            out.report.update(approx_report(rep, args.flags.details));
            if (args.exact) {
                compare_with(out.report, rep.value, exact_value(inst, settings.limit).to_complex());
            }
        },
        any);
    sw.stamp(out.report, settings);
    return out;
}

struct OracleArgs {
    std::string file;
    long cap = -1;
    bool points = false;
};

Outcome run_oracle(const OracleArgs& args, const Settings& settings) {
    Stopwatch sw;
    auto any = load_instance_file(args.file);
    Outcome out;
    std::optional<long> cap;
    if (args.cap >= 0) {
        cap = args.cap;
    }
    json listed = json::array();
    uint64_t count = 0;
    auto visit = [&](std::span<const int> x, long degree) {
        if (cap && degree > *cap) {
            return;
        }
        ++count;
        if (args.points) {
            listed.push_back(std::vector<int>(x.begin(), x.end()));
        }
    };
    std::vector<GaussianRational> pi;
    if (const auto* inst = std::get_if<WeightedInstance>(&any)) {
        out.report["instance"] = instance_summary(*inst);
        long top = cap ? std::min(*cap, inst->degree()) : inst->degree();
        pi = pi_table_exact(*inst, static_cast<int>(top), settings.limit);
        enumerate_points(*inst, cap, visit, settings.limit);
    } else {
        const auto& code = std::get<ModularInstance>(any);
        out.report["instance"] = instance_summary(code);
        pi = code_pi_table(code, code.exact_weights(), settings.limit);
        if (cap && static_cast<long>(pi.size()) > *cap + 1) {
            pi.resize(static_cast<size_t>(*cap) + 1);
        }
        modular_enumerate(
            code, [&](std::span<const int> x, int support) { visit(x, support); }, settings.limit);
    }
    GaussianRational total;
    for (const auto& p : pi) {
        total += p;
    }
    out.report["value"] = to_json(total.to_complex());
    out.report["exact"] = to_json(total);
    out.report["points"] = count;
    std::vector<Complex> pi_float;
    for (const auto& p : pi) {
        pi_float.push_back(p.to_complex());
    }
    out.report["pi"] = indexed(complex_list(pi_float), 0);
    out.report["pi_exact"] = indexed(exact_list(pi), 0);
    if (args.points) {
        out.report["solutions"] = listed;
    }
    sw.stamp(out.report, settings);
    return out;
}

struct SigmaArgs {
    std::string file;
    int k = 6;
    bool oracle = false;
    bool exact = false;
    bool no_prune = false;
    bool disconnected = false;
};

Outcome run_sigma(const SigmaArgs& args, const Settings& settings) {
    Stopwatch sw;
    auto any = load_instance_file(args.file);
    FastOptions fo;
    fo.threads = settings.thread_count();
    fo.prune = !args.no_prune;
    fo.include_disconnected = args.disconnected;
    Outcome out;
    std::visit(
        [&](const auto& inst) {
            out.report["instance"] = instance_summary(inst);
            out.report["k"] = args.k;
            auto counts = [&](const auto& res) {
                out.report["subsets_enumerated"] = res.subsets_enumerated;
                out.report["subsets_by_size"] = indexed(json(res.subsets_by_size), 0);
                out.report["sets_evaluated"] = res.sets_evaluated;
                if (args.disconnected) {
                    out.report["max_disconnected_mu"] = res.max_disconnected_mu;
                }
            };
            std::vector<Complex> sigma;
            if (args.exact) {
                auto res = fast_sigma_exact(inst, args.k, fo);
                out.report["sigma_exact"] =
                    indexed(exact_list(std::vector<GaussianRational>(res.sigma.begin() + 1, res.sigma.end())), 1);
                for (const auto& v : res.sigma) {
                    sigma.push_back(v.to_complex());
                }
                counts(res);
            } else {
                auto res = fast_sigma(inst, args.k, fo);
                sigma = res.sigma;
                counts(res);
            }
            out.report["sigma"] = indexed(complex_list(std::vector<Complex>(sigma.begin() + 1, sigma.end())), 1);
            if (args.oracle) {
                auto reference = sigma_from_pi(oracle_pi(inst, args.k, settings.limit), args.k);
                double worst = 0.0;
                std::vector<Complex> ref;
                for (int k = 1; k <= args.k; ++k) {
                    ref.push_back(reference[k].to_complex());
                    worst = std::max(worst, std::abs(sigma[k] - ref.back()) / std::max(1.0, std::abs(ref.back())));
                }
                out.report["oracle_sigma"] = indexed(complex_list(ref), 1);
                out.report["max_scaled_difference"] = worst;
            }
        },
        any);
    sw.stamp(out.report, settings);
    return out;
}

struct RootsArgs {
    std::string file;
    int k = 0;
};

Outcome run_roots(const RootsArgs& args, const Settings& settings) {
    Stopwatch sw;
    auto any = load_instance_file(args.file);
    Outcome out;
    std::visit(
        [&](const auto& inst) {
            out.report["instance"] = instance_summary(inst);
            auto roots = roots_of(inst, settings.limit);
            std::stable_sort(roots.begin(), roots.end(),
                             [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
            out.report["degree"] = roots.size();
            out.report["min_modulus"] = roots.empty() ? json(nullptr) : json(std::abs(roots.front()));
            out.report["roots"] = complex_list(roots);
            if (args.k > 0) {
                auto sigma = sigma_from_roots(roots, args.k);
                out.report["sigma"] = indexed(complex_list(std::vector<Complex>(sigma.begin() + 1, sigma.end())), 1);
            }
        },
        any);
    sw.stamp(out.report, settings);
    return out;
}

}  // namespace

void add_core_commands(CLI::App& app, const Settings& settings, Action& action) {
    {
        auto args = std::make_shared<ApproxArgs>();
        auto* cmd = app.add_subcommand("approx", "Approximate w(X) for an instance file");
        cmd->add_option("file", args->file, "WCOUNT v1 instance")->required()->check(CLI::ExistingFile);
        args->flags.attach(cmd);
        cmd->add_flag("--exact", args->exact, "Also compute w(X) by enumeration and report the error");
        cmd->callback([args, &settings, &action] { action = [args, &settings] { return run_approx(*args, settings); }; });
    }
    {
        auto args = std::make_shared<OracleArgs>();
        auto* cmd = app.add_subcommand("oracle", "Exact w(X) and coefficient table by enumeration");
        cmd->add_option("file", args->file, "WCOUNT v1 instance")->required()->check(CLI::ExistingFile);
        cmd->add_option("--cap", args->cap, "Only points of degree (support, for codes) at most this")
            ->check(CLI::NonNegativeNumber);
        cmd->add_flag("--points", args->points, "List the solutions");
        cmd->callback([args, &settings, &action] { action = [args, &settings] { return run_oracle(*args, settings); }; });
    }
    {
        auto args = std::make_shared<SigmaArgs>();
        auto* cmd = app.add_subcommand("sigma", "Power sums of inverse roots from connected column sets");
        cmd->add_option("file", args->file, "WCOUNT v1 instance")->required()->check(CLI::ExistingFile);
        cmd->add_option("--k,-k", args->k, "Highest power sum")->check(CLI::Range(1, 64));
        cmd->add_flag("--oracle", args->oracle, "Compare against power sums from enumeration");
        cmd->add_flag("--exact", args->exact, "Rational arithmetic on the exact weights");
        cmd->add_flag("--no-prune", args->no_prune, "Evaluate every connected set");
        cmd->add_flag("--disconnected", args->disconnected, "Also evaluate disconnected sets and report the largest mu");
        cmd->callback([args, &settings, &action] { action = [args, &settings] { return run_sigma(*args, settings); }; });
    }
    {
        auto args = std::make_shared<RootsArgs>();
        auto* cmd = app.add_subcommand("roots", "Roots of w(X; z)");
        cmd->add_option("file", args->file, "WCOUNT v1 instance")->required()->check(CLI::ExistingFile);
        cmd->add_option("--k,-k", args->k, "Also print power sums of inverse roots up to k")
            ->check(CLI::NonNegativeNumber);
        cmd->callback([args, &settings, &action] { action = [args, &settings] { return run_roots(*args, settings); }; });
    }
}

}  // namespace wcli
