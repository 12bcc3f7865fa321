#include <cmath>
#include <memory>

#include "commands.hpp"
#include "wcount/error.hpp"
#include "wcount/reductions.hpp"
#include "wcount/text_io.hpp"
#include "wcount/wcount_format.hpp"
#include "wcount_checks/reference.hpp"

namespace wcli {

using namespace wcount;

namespace {

std::vector<int> to_zero_based(const std::vector<int>& v, int size, const char* what) {
    std::vector<int> out;
    for (int x : v) {
        if (x < 1 || x > size) {
            fail(ErrorKind::InvalidInput, std::string(what) + " " + std::to_string(x) + " is out of range");
        }
        out.push_back(x - 1);
    }
    return out;
}

struct HammingArgs {
    std::string file;
    std::vector<int> witness;
    std::vector<long> rhs;
    std::string omega = "0.1";
    ApproxFlags flags;
    bool brute = false;
};

Outcome run_hamming(const HammingArgs& args, const Settings& settings) {
    Stopwatch sw;
    auto inst = parse_weighted_instance(read_file(args.file));
    const SparseMatrix& a = inst.a;
    if (static_cast<int>(args.witness.size()) != a.cols()) {
        fail(ErrorKind::InvalidInput, "witness needs " + std::to_string(a.cols()) + " entries");
    }
    std::vector<long> b = args.rhs;
    if (b.empty()) {
        b.assign(a.rows(), 0);
        for (int i = 0; i < a.rows(); ++i) {
            for (const auto& e : a.row(i)) {
                b[i] += e.value * args.witness[e.index];
            }
        }
    }
    AffineSystem sys(a, b, args.witness);
    Complex omega = parse_complex(args.omega);
    auto rep = hamming_sum(sys, omega, args.flags.options(settings));
    Outcome out;
    out.report["rows"] = a.rows();
    out.report["cols"] = a.cols();
    out.report["omega"] = to_json(omega);
    out.report.update(approx_report(rep, args.flags.details));
    if (args.brute) {
        require_within_limit(std::ldexp(1.0, a.cols()), settings, "exhaustive search");
        std::vector<Complex> w(a.cols(), omega);
        compare_with(out.report, rep.value, reference::hamming_weight_sum(a, b, args.witness, w));
    }
    sw.stamp(out.report, settings);
    return out;
}

struct MatchingArgs {
    std::string file;
    std::string omega;
    ApproxFlags flags;
    bool brute = false;
};

MatchingOptions matching_options(const MatchingArgs& args, const Settings& settings) {
    MatchingOptions mo;
    mo.approx = args.flags.options(settings);
    if (!args.omega.empty()) {
        mo.omega = parse_complex(args.omega);
    }
    return mo;
}

Outcome run_matchings(const MatchingArgs& args, const Settings& settings) {
    Stopwatch sw;
    auto h = parse_hypergraph(read_file(args.file));
    auto rep = matching_weight(h, matching_options(args, settings));
    Outcome out;
    out.report["vertices"] = h.n;
    out.report["edges"] = h.edge_count();
    out.report["uniformity"] = h.uniformity() ? json(*h.uniformity()) : json(nullptr);
    out.report["max_degree"] = h.max_degree();
    out.report.update(approx_report(rep, args.flags.details));
    if (args.brute) {
        require_within_limit(std::ldexp(1.0, h.edge_count()), settings, "exhaustive search");
        compare_with(out.report, rep.value, reference::matching_sum(h));
    }
    sw.stamp(out.report, settings);
    return out;
}

Outcome run_permanent(const MatchingArgs& args, const Settings& settings) {
    Stopwatch sw;
    auto m = parse_matrix(read_file(args.file));
    auto rep = permanent_weight(m, matching_options(args, settings));
    Outcome out;
    out.report["n"] = m.size();
    out.report.update(approx_report(rep, args.flags.details));
    if (args.brute) {
        require_within_limit(std::tgamma(static_cast<double>(m.size()) + 1.0), settings, "exhaustive permanent");
        compare_with(out.report, rep.value, reference::permanent(m));
    }
    sw.stamp(out.report, settings);
    return out;
}

struct HomArgs {
    std::string g1;
    std::string g2;
    int anchor = 1;
    int target = 1;
    std::vector<int> phi;
    std::string omega = "0.02";
    bool unanchored = false;
    bool count = false;
    bool brute = false;
    ApproxFlags flags;
};

Outcome run_hom(const HomArgs& args, const Settings& settings) {
    Stopwatch sw;
    HomInput inp;
    inp.g1 = parse_graph(read_file(args.g1));
    inp.g2 = parse_graph(read_file(args.g2));
    inp.anchor = to_zero_based({args.anchor}, inp.g1.size(), "anchor")[0];
    inp.target = to_zero_based({args.target}, inp.g2.size(), "target")[0];
    inp.anchored = !args.unanchored;
    if (!args.phi.empty()) {
        if (static_cast<int>(args.phi.size()) != inp.g1.size()) {
            fail(ErrorKind::InvalidInput, "phi needs one image per vertex of the first graph");
        }
        inp.phi = to_zero_based(args.phi, inp.g2.size(), "image");
    }
    auto sys = hom_system(inp);
    auto st = sparsity(sys.a);
    Outcome out;
    out.report["variables"] = sys.a.cols();
    out.report["equations"] = sys.a.rows();
    out.report["r"] = st.r;
    out.report["c"] = st.c;
    out.report["degree_bound"] = sys.degree_bound;

    const int anchor = inp.anchored ? inp.anchor : -1;
    const int target = inp.anchored ? inp.target : -1;
    auto exhaustive_maps = std::pow(static_cast<double>(inp.g2.size()), inp.g1.size());
    if (args.count) {
        require_within_limit(std::ldexp(1.0, sys.a.cols()), settings, "solution count");
        require_within_limit(exhaustive_maps, settings, "homomorphism count");
        out.report["solutions"] = reference::count_01_solutions(sys.a, sys.b);
        out.report["homomorphisms"] = reference::homomorphisms(inp.g1, inp.g2, anchor, target).size();
        if (out.report["solutions"] != out.report["homomorphisms"]) {
            out.exit_code = 1;
        }
    }
    if (inp.phi) {
        Complex omega = parse_complex(args.omega);
        auto rep = hom_sum(inp, omega, args.flags.options(settings));
        out.report["omega"] = to_json(omega);
        out.report.update(approx_report(rep, args.flags.details));
        if (args.brute) {
            require_within_limit(exhaustive_maps, settings, "exhaustive sum");
            compare_with(out.report, rep.value,
                         reference::hom_distance_sum(inp.g1, inp.g2, *inp.phi, omega, anchor, target));
        }
    }
    sw.stamp(out.report, settings);
    return out;
}

struct IndepArgs {
    std::string file;
    std::string omega = "0.02";
    bool brute = false;
    ApproxFlags flags;
};

Outcome run_indep(const IndepArgs& args, const Settings& settings) {
    Stopwatch sw;
    auto g = parse_graph(read_file(args.file));
    auto inp = independence_instance(g);
    const int d = *g.regular_degree();
    Complex omega = parse_complex(args.omega);
    Complex lambda = std::pow(omega, 2 * d);
    auto rep = hom_sum(inp, omega, args.flags.options(settings));
    Outcome out;
    out.report["vertices"] = g.size();
    out.report["degree"] = d;
    out.report["omega"] = to_json(omega);
    out.report["lambda"] = to_json(lambda);
    out.report.update(approx_report(rep, args.flags.details));
    if (args.brute) {
        require_within_limit(std::ldexp(1.0, g.size()), settings, "exhaustive search");
        compare_with(out.report, rep.value, reference::independence_polynomial(g, lambda));
    }
    sw.stamp(out.report, settings);
    return out;
}

}  // namespace

void add_reduction_commands(CLI::App& app, const Settings& settings, Action& action) {
    {
        auto args = std::make_shared<HammingArgs>();
        auto* cmd = app.add_subcommand("hamming", "Sum of omega^dist(x, y) over 0-1 solutions of Ax = b");
        cmd->add_option("file", args->file, "WCOUNT v1 instance; only its matrix is used")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--witness,-y", args->witness, "Known 0-1 solution y")->required()->delimiter(',');
        cmd->add_option("--rhs,-b", args->rhs, "Right-hand side b (default: Ay)")->delimiter(',');
        cmd->add_option("--omega", args->omega, "Weight per differing coordinate (re or re,im)");
        cmd->add_flag("--brute", args->brute, "Also sum over all 0-1 solutions");
        args->flags.attach(cmd);
        cmd->callback([args, &settings, &action] { action = [args, &settings] { return run_hamming(*args, settings); }; });
    }
    {
        auto args = std::make_shared<MatchingArgs>();
        auto* cmd = app.add_subcommand("matchings", "Weighted perfect matchings of a uniform hypergraph");
        cmd->add_option("file", args->file, "Hypergraph file with a matching section")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--omega", args->omega, "Override the default omega");
        cmd->add_flag("--brute", args->brute, "Also sum over all perfect matchings");
        args->flags.attach(cmd);
        cmd->callback(
            [args, &settings, &action] { action = [args, &settings] { return run_matchings(*args, settings); }; });
    }
    {
        auto args = std::make_shared<MatchingArgs>();
        auto* cmd = app.add_subcommand("permanent", "Permanent of a square matrix with a nonzero diagonal");
        cmd->add_option("file", args->file, "Matrix file")->required()->check(CLI::ExistingFile);
        cmd->add_option("--omega", args->omega, "Override the default omega");
        cmd->add_flag("--brute", args->brute, "Also sum over all permutations");
        args->flags.attach(cmd);
        cmd->callback(
            [args, &settings, &action] { action = [args, &settings] { return run_permanent(*args, settings); }; });
    }
    {
        auto args = std::make_shared<HomArgs>();
        auto* cmd = app.add_subcommand("hom", "Homomorphism system and distance sums between two graphs");
        cmd->add_option("g1", args->g1, "Source graph")->required()->check(CLI::ExistingFile);
        cmd->add_option("g2", args->g2, "Target graph")->required()->check(CLI::ExistingFile);
        cmd->add_option("--anchor", args->anchor, "Anchor vertex of the source graph (1-based)");
        cmd->add_option("--target", args->target, "Image of the anchor (1-based)");
        cmd->add_option("--phi", args->phi, "Known homomorphism, one 1-based image per vertex")->delimiter(',');
        cmd->add_option("--omega", args->omega, "Weight per differing encoding variable");
        cmd->add_flag("--unanchored", args->unanchored, "Leave the anchor image free");
        cmd->add_flag("--count", args->count, "Count system solutions and homomorphisms exhaustively");
        cmd->add_flag("--brute", args->brute, "Also compute the distance sum exhaustively");
        args->flags.attach(cmd);
        cmd->callback([args, &settings, &action] { action = [args, &settings] { return run_hom(*args, settings); }; });
    }
    {
        auto args = std::make_shared<IndepArgs>();
        auto* cmd = app.add_subcommand("indep", "Independence polynomial of a regular graph at omega^(2d)");
        cmd->add_option("file", args->file, "Edge-list graph")->required()->check(CLI::ExistingFile);
        cmd->add_option("--omega", args->omega, "omega (re or re,im)");
        cmd->add_flag("--brute", args->brute, "Also sum over all independent sets");
        args->flags.attach(cmd);
        cmd->callback([args, &settings, &action] { action = [args, &settings] { return run_indep(*args, settings); }; });
    }
}

}  // namespace wcli
