#include "wcount_checks/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "wcount/codes.hpp"
#include "wcount/connected_subsets.hpp"
#include "wcount/error.hpp"
#include "wcount/interpolation.hpp"
#include "wcount/newton.hpp"
#include "wcount/oracle.hpp"
#include "wcount/powersum.hpp"
#include "wcount/reductions.hpp"
#include "wcount_checks/reference.hpp"

namespace wcount::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

int count(const Config& config, int full, int reduced) { return config.reduced ? reduced : full; }

/// |ln(approx / exact)|, the error measure for multiplicative approximations.
double log_error(Complex approx, Complex exact) { return std::abs(std::log(approx / exact)); }

std::vector<Complex> to_complex(const std::vector<GaussianRational>& v) {
    std::vector<Complex> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        out.push_back(x.to_complex());
    }
    return out;
}

/// Collects failures; the first few are kept for the report.
struct Tally {
    int cases = 0;
    int failures = 0;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        ++cases;
        if (!ok) {
            ++failures;
            if (notes.size() < 3) {
                notes.push_back(what);
            }
        }
    }

    std::string summary() const {
        std::string s = std::to_string(cases) + " checks, " + std::to_string(failures) + " failed";
        for (const auto& n : notes) {
            s += "; " + n;
        }
        return s;
    }
};

Result finish(int id, std::string name, bool pass, std::string detail, Clock::time_point t0) {
    return Result{id, std::move(name), pass, std::move(detail), seconds_since(t0)};
}

template <class F>
Result guarded(int id, const std::string& name, F&& body) {
    auto t0 = Clock::now();
    try {
        return body(t0);
    } catch (const std::exception& e) {
        return finish(id, name, false, std::string("unexpected error: ") + e.what(), t0);
    }
}

ColumnGraph as_column_graph(const Graph& g) {
    ColumnGraph cg;
    cg.adj.resize(g.size());
    for (int v = 0; v < g.size(); ++v) {
        cg.adj[v] = g.neighbors(v);
    }
    return cg;
}

}  // namespace

WeightedInstance family_instance(uint64_t seed, int index) {
    Rng rng(derive_seed(seed, static_cast<uint64_t>(index)));
    InstanceParams p;
    p.n = rng.between(4, 14);
    p.m = rng.between(2, 10);
    p.r = rng.between(2, 4);
    p.c = rng.between(1, 3);
    p.nu_max = 2;
    return random_instance(rng, p);
}

Result oracle_equivalence(const Config& config) {
    const std::string name = "oracle/fast power-sum equivalence";
    return guarded(1, name, [&](Clock::time_point t0) {
        const int instances = count(config, 200, 40);
        const int k_max = 6;
        FastOptions fo;
        fo.threads = config.threads;
        Tally tally;
        double worst = 0.0;
        for (int t = 0; t < instances; ++t) {
            auto inst = family_instance(config.seed, t);
            auto oracle = to_complex(sigma_from_pi(pi_table_exact(inst, k_max), k_max));
            auto fast = sigma_fast(inst, k_max, fo).sigma;
            for (int k = 1; k <= k_max; ++k) {
                double err = std::abs(fast[k] - oracle[k]) / std::max(1.0, std::abs(oracle[k]));
                worst = std::max(worst, err);
                tally.check(err <= 1e-9, "instance " + std::to_string(t) + " k=" + std::to_string(k) +
                                             " error " + fmt(err));
            }
        }
        double elapsed = seconds_since(t0);
        bool fast_enough = elapsed < 60.0;
        return finish(1, name, tally.failures == 0 && fast_enough,
                      std::to_string(instances) + " instances, k<=6, max scaled error " + fmt(worst) + ", " +
                          tally.summary() + (fast_enough ? "" : ", over the 60 s budget"),
                      t0);
    });
}

Result end_to_end_accuracy(const Config& config) {
    const std::string name = "end-to-end accuracy of ln w(X)";
    return guarded(2, name, [&](Clock::time_point t0) {
        const int instances = count(config, 200, 40);
        Tally tally;
        double worst = 0.0;
        for (int t = 0; t < instances; ++t) {
            auto inst = family_instance(config.seed, t);
            Complex exact = exact_w_rational(inst).to_complex();
            for (double eps : {1e-2, 1e-3}) {
                ApproxOptions o;
                o.epsilon = eps;
                o.threads = config.threads;
                auto rep = approx_w(inst, o);
                double err = log_error(rep.value, exact);
                worst = std::max(worst, err / eps);
                tally.check(err <= eps, "instance " + std::to_string(t) + " eps=" + fmt(eps) + " error " + fmt(err));
            }
        }
        return finish(2, name, tally.failures == 0,
                      std::to_string(instances) + " instances x 2 tolerances, max error/eps " + fmt(worst) + ", " +
                          tally.summary(),
                      t0);
    });
}

Result zero_freeness(const Config& config) {
    const std::string name = "zero-freeness at the weight threshold";
    return guarded(3, name, [&](Clock::time_point t0) {
        const int instances = count(config, 100, 25);
        const double radius = kAlpha / kBeta - 1e-9;
        Tally tally;
        double closest = INFINITY;
        int drawn = 0;
        for (int t = 0; t < instances; ++t) {
            WeightedInstance inst;
            do {
                Rng rng(derive_seed(config.seed + 3, static_cast<uint64_t>(drawn++)));
                InstanceParams p;
                p.n = rng.between(2, 8);
                p.m = rng.between(1, 6);
                p.r = rng.between(2, 4);
                p.c = rng.between(1, 3);
                p.nu_max = 2;
                p.exact_magnitude = true;
                inst = random_instance(rng, p);
            } while (inst.degree() > 12);
            bool nonzero = !exact_w_rational(inst).is_zero();
            double m = INFINITY;
            for (const auto& z : roots_of_w(inst)) {
                m = std::min(m, std::abs(z));
            }
            closest = std::min(closest, m);
            tally.check(nonzero && m > radius, "instance " + std::to_string(t) + " min |root| " + fmt(m));
        }
        const int kappas[] = {2, 3, 5};
        double closest_code = INFINITY;
        for (int t = 0; t < instances; ++t) {
            Rng rng(derive_seed(config.seed + 33, static_cast<uint64_t>(t)));
            CodeParams p;
            p.kappa = kappas[t % 3];
            p.n = rng.between(2, p.kappa == 5 ? 10 : 12);
            p.m = rng.between(1, 6);
            p.r = rng.between(2, 4);
            p.c = rng.between(1, 3);
            p.exact_magnitude = true;
            auto code = random_code(rng, p);
            bool nonzero = !code_weight_exact(code).is_zero();
            double m = INFINITY;
            for (const auto& z : code_roots(code)) {
                m = std::min(m, std::abs(z));
            }
            closest_code = std::min(closest_code, m);
            tally.check(nonzero && m > radius, "code " + std::to_string(t) + " (kappa " + std::to_string(p.kappa) +
                                                   ") min |root| " + fmt(m));
        }
        return finish(3, name, tally.failures == 0,
                      std::to_string(instances) + " integer systems (min |root| " + fmt(closest) + "), " +
                          std::to_string(instances) + " codes over Z/2, Z/3, Z/5 (min |root| " + fmt(closest_code) +
                          "), radius " + fmt(kAlpha / kBeta) + ", " + tally.summary(),
                      t0);
    });
}

Result additivity(const Config& config) {
    const std::string name = "additivity over direct sums";
    return guarded(4, name, [&](Clock::time_point t0) {
        const int pairs = count(config, 50, 12);
        const int k_max = 6;
        FastOptions fo;
        fo.threads = config.threads;
        Tally tally;
        double worst = 0.0;
        for (int t = 0; t < pairs; ++t) {
            Rng rng(derive_seed(config.seed + 4, static_cast<uint64_t>(t)));
            InstanceParams p;
            p.n = rng.between(3, 10);
            p.m = rng.between(2, 7);
            auto x = random_instance(rng, p);
            p.n = rng.between(3, 10);
            p.m = rng.between(2, 7);
            auto y = random_instance(rng, p);
            auto xy = direct_sum(x, y);

            auto sx = sigma_fast(x, k_max, fo).sigma;
            auto sy = sigma_fast(y, k_max, fo).sigma;
            auto sxy = sigma_fast(xy, k_max, fo).sigma;
            for (int k = 1; k <= k_max; ++k) {
                double scale = std::abs(sx[k]) + std::abs(sy[k]);
                double diff = std::abs(sxy[k] - (sx[k] + sy[k]));
                double rel = scale > 0.0 ? diff / scale : diff;
                worst = std::max(worst, rel);
                tally.check(rel <= 1e-12, "pair " + std::to_string(t) + " k=" + std::to_string(k) + " relative " +
                                              fmt(rel));
            }
            auto ex = sigma_fast(x, x.exact_weights(), k_max, fo).sigma;
            auto ey = sigma_fast(y, y.exact_weights(), k_max, fo).sigma;
            auto exy = sigma_fast(xy, xy.exact_weights(), k_max, fo).sigma;
            for (int k = 1; k <= k_max; ++k) {
                tally.check(exy[k] == ex[k] + ey[k], "pair " + std::to_string(t) + " k=" + std::to_string(k) +
                                                         " differs in exact arithmetic");
            }
        }
        return finish(4, name, tally.failures == 0,
                      std::to_string(pairs) + " block pairs, k<=6, max relative deviation " + fmt(worst) +
                          ", exact mode compared for equality, " + tally.summary(),
                      t0);
    });
}

Result disconnected_vanishing(const Config& config) {
    const std::string name = "mu vanishes on disconnected column sets";
    return guarded(5, name, [&](Clock::time_point t0) {
        const int instances = count(config, 50, 12);
        const int k = 5;
        Tally tally;
        double worst = 0.0;
        uint64_t disconnected = 0;
        for (int t = 0; t < instances; ++t) {
            Rng rng(derive_seed(config.seed + 5, static_cast<uint64_t>(t)));
            InstanceParams p;
            p.n = rng.between(3, 10);
            p.m = rng.between(2, 7);
            p.r = rng.between(2, 4);
            p.c = rng.between(1, 3);
            auto inst = random_instance(rng, p);
            for (const auto& e : mu_table(inst, inst.w, k, true)) {
                if (e.connected) {
                    continue;
                }
                ++disconnected;
                for (int i = 1; i <= k; ++i) {
                    worst = std::max(worst, std::abs(e.mu[i]));
                    tally.check(std::abs(e.mu[i]) <= 1e-12, "instance " + std::to_string(t) + " |mu_" +
                                                                std::to_string(i) + "| " + fmt(std::abs(e.mu[i])));
                }
            }
            for (const auto& e : mu_table(inst, inst.exact_weights(), k, true)) {
                if (e.connected) {
                    continue;
                }
                for (int i = 1; i <= k; ++i) {
                    tally.check(e.mu[i].is_zero(), "instance " + std::to_string(t) + " exact mu_" +
                                                       std::to_string(i) + " nonzero");
                }
            }
        }
        return finish(5, name, tally.failures == 0,
                      std::to_string(instances) + " instances, " + std::to_string(disconnected) +
                          " disconnected sets, max |mu| " + fmt(worst) + ", exact mode all zero required, " +
                          tally.summary(),
                      t0);
    });
}

Result subset_enumeration(const Config& config) {
    const std::string name = "connected column-set enumeration";
    return guarded(6, name, [&](Clock::time_point t0) {
        const int graphs = count(config, 40, 10);
        Tally tally;
        double tightest = 0.0;  // largest count / bound seen
        auto check_bound = [&](const ColumnGraph& g, double d, int k_top, const std::string& label) {
            for (int k = 2; k <= k_top; ++k) {
                double bound = connected_subset_bound(d, k);
                auto counts = containing_counts(g, k);
                uint64_t most = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
                if (bound > 0) {
                    tightest = std::max(tightest, static_cast<double>(most) / bound);
                }
                tally.check(static_cast<double>(most) <= bound,
                            label + " k=" + std::to_string(k) + " count " + std::to_string(most));
            }
        };
        auto compare = [&](const ColumnGraph& g, const std::string& label) {
            std::vector<int> ks{1, 2, 3, 4, 5, g.size()};
            for (int k : ks) {
                if (k < 1) {
                    continue;
                }
                tally.check(connected_subsets(g, k) == reference::connected_subsets(g.adj, k),
                            label + " k=" + std::to_string(k) + " differs from brute force");
            }
        };
        for (int t = 0; t < graphs; ++t) {
            Rng rng(derive_seed(config.seed + 6, static_cast<uint64_t>(t)));
            InstanceParams p;
            p.n = rng.between(4, 18);
            p.m = rng.between(2, 12);
            p.r = rng.between(2, 4);
            p.c = rng.between(1, 3);
            auto inst = random_instance(rng, p);
            auto g = column_graph(inst.a);
            tally.check(g.adj == reference::column_graph_pairs(inst.a),
                        "instance " + std::to_string(t) + " column graph differs");
            compare(g, "instance " + std::to_string(t));
            check_bound(g, static_cast<double>(sparsity(inst.a).d), 6, "instance " + std::to_string(t));

            auto h = as_column_graph(random_connected_graph(rng, rng.between(2, 18), rng.uniform(0.05, 0.4)));
            compare(h, "graph " + std::to_string(t));
            check_bound(h, static_cast<double>(std::max<size_t>(h.max_degree(), 1)), 6, "graph " + std::to_string(t));
        }
        for (int t = 0; t < count(config, 200, 40); ++t) {
            auto inst = family_instance(config.seed, t);
            check_bound(column_graph(inst.a), static_cast<double>(sparsity(inst.a).d), 6,
                        "family " + std::to_string(t));
        }
        Rng rng(derive_seed(config.seed + 66, 0));
        auto big = scaling_instance(rng, config.reduced ? 300 : 1000);
        check_bound(column_graph(big.a), static_cast<double>(sparsity(big.a).d), 6, "scaling instance");
        return finish(6, name, tally.failures == 0,
                      std::to_string(graphs) + " column graphs and " + std::to_string(graphs) +
                          " random graphs vs brute force, largest count/bound " + fmt(tightest) + ", " +
                          tally.summary(),
                      t0);
    });
}

Result macwilliams_round_trip(const Config& config) {
    const std::string name = "MacWilliams identity, exact";
    return guarded(7, name, [&](Clock::time_point t0) {
        const int codes = count(config, 50, 12);
        Tally tally;
        for (int t = 0; t < codes; ++t) {
            Rng rng(derive_seed(config.seed + 7, static_cast<uint64_t>(t)));
            CodeParams p;
            p.kappa = 2;
            p.n = rng.between(2, 12);
            p.m = rng.between(1, 8);
            p.r = rng.between(2, 4);
            p.c = rng.between(1, 3);
            auto code = random_code(rng, p);
            const int n = code.cols();
            const std::string label = "code " + std::to_string(t);

            std::vector<mpz_class> px(static_cast<size_t>(n) + 1, 0);
            for (const auto& x : reference::modular_codewords(code)) {
                px[std::count_if(x.begin(), x.end(), [](int v) { return v != 0; })] += 1;
            }
            auto pc = reference::row_space_enumerator(code.a, 2);
            mpz_class size_c = 0;
            for (const auto& v : pc) {
                size_c += v;
            }
            int dim_c = 0;
            while (mpz_class(1) << dim_c < size_c) {
                ++dim_c;
            }
            tally.check((mpz_class(1) << dim_c) == size_c, label + " dual size is not a power of 2");
            tally.check(rank_mod_prime(code.a, 2) == dim_c, label + " rank differs from dual dimension");
            tally.check(enumerator_polynomial(code) == px, label + " enumerator differs from enumeration");
            tally.check(dual_enumerator_polynomial(code.a, 2) == pc, label + " dual enumerator differs");

            auto forward = macwilliams_transform(pc, 2, n, dim_c);
            auto backward = macwilliams_transform(px, 2, n, n - dim_c);
            bool ok_forward = forward.size() == px.size();
            bool ok_backward = backward.size() == pc.size();
            for (size_t i = 0; ok_forward && i < px.size(); ++i) {
                ok_forward = forward[i] == mpq_class(px[i]);
            }
            for (size_t i = 0; ok_backward && i < pc.size(); ++i) {
                ok_backward = backward[i] == mpq_class(pc[i]);
            }
            tally.check(ok_forward, label + " transform of the dual enumerator differs");
            tally.check(ok_backward, label + " transform of the code enumerator differs");
        }
        return finish(7, name, tally.failures == 0,
                      std::to_string(codes) + " binary codes, both directions in rational arithmetic, " +
                          tally.summary(),
                      t0);
    });
}

Result applications(const Config& config) {
    const std::string name = "matchings, permanents, homomorphisms vs exhaustive";
    return guarded(8, name, [&](Clock::time_point t0) {
        const double eps = 1e-3;
        ApproxOptions approx;
        approx.epsilon = eps;
        approx.threads = config.threads;
        Tally tally;
        double worst = 0.0;
        auto within = [&](Complex got, Complex want, const std::string& label) {
            double err = log_error(got, want);
            worst = std::max(worst, err);
            tally.check(err <= eps, label + " error " + fmt(err));
        };

        for (int t = 0; t < count(config, 24, 6); ++t) {
            Rng rng(derive_seed(config.seed + 81, static_cast<uint64_t>(t)));
            int k = rng.between(2, 3);
            int parts = rng.between(2, k == 2 ? 5 : 4);
            int extra = rng.between(0, 12 - parts);
            auto h = random_hypergraph(rng, k, parts, extra, 1.0);
            const double d = std::max(h.max_degree(), 2);
            // Keep off-matching weights inside the guaranteed region after rescaling.
            const double scale = 0.4 * kBeta * kBeta / (d * d * k);
            std::vector<char> in_matching(h.edge_count(), 0);
            for (int e : h.matching) {
                in_matching[e] = 1;
            }
            for (int e = 0; e < h.edge_count(); ++e) {
                if (!in_matching[e]) {
                    h.a[e] *= scale;
                }
            }
            MatchingOptions mo;
            mo.approx = approx;
            within(matching_weight(h, mo).value, reference::matching_sum(h), "hypergraph " + std::to_string(t));
        }

        for (int t = 0; t < count(config, 24, 6); ++t) {
            Rng rng(derive_seed(config.seed + 82, static_cast<uint64_t>(t)));
            auto m = random_permanent_matrix(rng, rng.between(1, 8), 0.01);
            MatchingOptions mo;
            mo.approx = approx;
            within(permanent_weight(m, mo).value, reference::permanent(m), "permanent " + std::to_string(t));
        }

        for (int t = 0; t < count(config, 40, 10); ++t) {
            Rng rng(derive_seed(config.seed + 83, static_cast<uint64_t>(t)));
            HomInput inp;
            inp.g1 = random_connected_graph(rng, rng.between(2, 5), 0.4);
            inp.g2 = random_connected_graph(rng, rng.between(2, 4), 0.5, 0.3);
            inp.anchor = static_cast<int>(rng.below(inp.g1.size()));
            inp.target = static_cast<int>(rng.below(inp.g2.size()));
            auto sys = hom_system(inp);
            auto homs = reference::homomorphisms(inp.g1, inp.g2, inp.anchor, inp.target);
            tally.check(reference::count_01_solutions(sys.a, sys.b) == homs.size(),
                        "hom pair " + std::to_string(t) + " anchored count differs");
            inp.anchored = false;
            auto free_sys = hom_system(inp);
            tally.check(reference::count_01_solutions(free_sys.a, free_sys.b) ==
                            reference::homomorphisms(inp.g1, inp.g2).size(),
                        "hom pair " + std::to_string(t) + " unanchored count differs");
        }

        for (int t = 0, done = 0; done < count(config, 20, 5); ++t) {
            Rng rng(derive_seed(config.seed + 84, static_cast<uint64_t>(t)));
            HomInput inp;
            inp.g1 = random_connected_graph(rng, rng.between(2, 4), 0.4);
            inp.g2 = random_connected_graph(rng, rng.between(2, 4), 0.5, 0.3);
            inp.anchor = static_cast<int>(rng.below(inp.g1.size()));
            inp.target = static_cast<int>(rng.below(inp.g2.size()));
            auto homs = reference::homomorphisms(inp.g1, inp.g2, inp.anchor, inp.target);
            if (homs.empty()) {
                continue;
            }
            inp.phi = homs[rng.below(homs.size())];
            Complex omega = 0.5 * 0.1 / inp.g2.max_degree() * rng.phase();
            within(hom_sum(inp, omega, approx).value,
                   reference::hom_distance_sum(inp.g1, inp.g2, *inp.phi, omega, inp.anchor, inp.target),
                   "hom sum " + std::to_string(t));
            ++done;
        }

        std::vector<Graph> regular{cycle_graph(3), cycle_graph(4), cycle_graph(5), cycle_graph(6),
                                   complete_graph(4)};
        Rng rrng(derive_seed(config.seed + 85, 0));
        for (int t = 0; t < count(config, 4, 1); ++t) {
            regular.push_back(random_regular_graph(rrng, 6, 3));
        }
        for (size_t t = 0; t < regular.size(); ++t) {
            const auto& g = regular[t];
            auto inp = independence_instance(g);
            Complex omega = 0.025 * rrng.phase();
            Complex lambda = std::pow(omega, 2 * *g.regular_degree());
            within(hom_sum(inp, omega, approx).value, reference::independence_polynomial(g, lambda),
                   "independence " + std::to_string(t));
        }
        return finish(8, name, tally.failures == 0,
                      "eps " + fmt(eps) + ", max |ln ratio| " + fmt(worst) + ", " + tally.summary(), t0);
    });
}

Result scaling(const Config& config) {
    const std::string name = "sigma_6 scaling to n = 10^4";
    return guarded(9, name, [&](Clock::time_point t0) {
        const int small = 1000, large = 10000;
        FastOptions fo;
        fo.threads = config.threads;
        auto time_one = [&](int n, int repeats) {
            Rng rng(derive_seed(config.seed + 9, static_cast<uint64_t>(n)));
            auto inst = scaling_instance(rng, n);
            double best = INFINITY;
            for (int r = 0; r < repeats; ++r) {
                auto t = Clock::now();
                auto res = sigma_fast(inst, 6, fo);
                best = std::min(best, seconds_since(t));
            }
            return best;
        };
        double t_small = time_one(small, 3);
        double t_large = time_one(large, 2);
        double ratio = t_large / t_small;
        double allowed = 1.5 * large / small;
        bool pass = t_large < 600.0 && ratio <= allowed;
        return finish(9, name, pass,
                      "n=1000: " + fmt(t_small) + " s, n=10000: " + fmt(t_large) + " s, ratio " + fmt(ratio) +
                          " (limit " + fmt(allowed) + "), " + std::to_string(fo.threads) + " thread(s)",
                      t0);
    });
}

std::vector<Result> run(const Config& config, const std::vector<int>& ids,
                        const std::function<void(const Result&)>& progress) {
    using Runner = Result (*)(const Config&);
    static const Runner runners[kCriterionCount] = {oracle_equivalence, end_to_end_accuracy,    zero_freeness,
                                                    additivity,         disconnected_vanishing, subset_enumeration,
                                                    macwilliams_round_trip, applications,       scaling};
    std::vector<Result> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), id) == ids.end()) {
            continue;
        }
        out.push_back(runners[id - 1](config));
        if (progress) {
            progress(out.back());
        }
    }
    return out;
}

std::string format(const Result& r) {
    char time[32];
    std::snprintf(time, sizeof time, "%.2f s", r.seconds);
    return std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.name + "  [" + r.detail +
           "]  (" + time + ")";
}

}  // namespace wcount::acceptance
