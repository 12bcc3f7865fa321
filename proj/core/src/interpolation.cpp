#include "wcount/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wcount/error.hpp"
#include "wcount/newton.hpp"
#include "wcount/powersum.hpp"

namespace wcount {

namespace {

double max_abs(const std::vector<Complex>& w) {
    double m = 0.0;
    for (const auto& z : w) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double gamma_for(const SparseMatrix& a, const std::vector<Complex>& w, double alpha, double extra) {
    double mx = max_abs(w);
    if (mx == 0.0) {
        fail(ErrorKind::AllWeightsZero, "all weights are zero; w(X) = 1 exactly");
    }
    SparsityStats st = sparsity(a);
    double r = std::max(st.r, 2);
    double c = std::max(st.c, 1);
    return alpha / (extra * r * std::sqrt(c) * mx);
}

double log_bound(long n, double gamma, double s) {
    return std::log(static_cast<double>(n)) - std::log(s + 1.0) - s * std::log(gamma) - std::log(gamma - 1.0);
}

template <class Instance, class Sigma>
ApproxReport approximate(const Instance& reduced, const ZeroColumnFactor& factor, long degree, double gamma_extra,
                         const ApproxOptions& options, Sigma&& sigma_fn) {
    if (!(options.epsilon > 0.0)) {
        fail(ErrorKind::InvalidInput, "epsilon must be positive");
    }
    if (options.s_override && *options.s_override < 0) {
        fail(ErrorKind::InvalidInput, "truncation order must be non-negative");
    }
    ApproxReport rep;
    rep.factor = factor.evaluate(1.0);
    rep.columns = reduced.cols();
    rep.stats = sparsity(reduced.a);
    rep.max_weight = max_abs(reduced.w);
    rep.degree_bound = degree;
    if (options.degree_bound && *options.degree_bound < degree) {
        rep.degree_bound = std::max(0L, *options.degree_bound);
    }

    if (reduced.cols() == 0 || rep.max_weight == 0.0) {
        rep.value = rep.factor;
        rep.log_value = 0.0;
        rep.bound = 0.0;
        rep.sigma = {0.0};
        rep.coefficients = {0.0};
        return rep;
    }

    const double gamma = gamma_for(reduced.a, reduced.w, options.alpha, gamma_extra);
    rep.gamma = gamma;
    if (gamma <= 1.0) {
        if (!options.force) {
            std::ostringstream msg;
            msg << "weights exceed the certified region: gamma = " << gamma << " <= 1 (use --force to run anyway)";
            fail(ErrorKind::GammaNotGreaterThanOne, msg.str());
        }
        rep.certified = false;
        rep.warnings.push_back("weights outside the zero-free region; error bound is not certified");
    }

    if (options.s_override) {
        rep.s = *options.s_override;
    } else if (gamma > 1.0) {
        rep.s = choose_s(rep.degree_bound, gamma, options.epsilon);
    } else {
        rep.s = static_cast<int>(std::min<long>(rep.degree_bound, std::numeric_limits<int>::max()));
    }
    if (gamma > 1.0) {
        rep.bound = truncation_bound(rep.degree_bound, gamma, rep.s);
        if (*rep.bound > options.epsilon) {
            rep.warnings.push_back("truncation order is below what the requested accuracy needs");
        }
    }

    rep.k_computed = static_cast<int>(std::min<long>(rep.s, rep.degree_bound));
    FastOptions fo;
    fo.threads = options.threads;
    auto fast = sigma_fn(rep.k_computed, fo);
    rep.subsets_enumerated = fast.subsets_enumerated;
    rep.sigma = extend_sigma(fast.sigma, rep.degree_bound, rep.s);
    rep.coefficients = taylor_from_sigma(rep.sigma, rep.s);
    Complex t = 0.0;
    for (int k = 1; k <= rep.s; ++k) {
        t += rep.coefficients[k];
    }
    rep.log_value = t;
    rep.value = std::exp(t) * rep.factor;
    return rep;
}

}  // namespace

double effective_gamma(const WeightedInstance& inst, double alpha) { return gamma_for(inst.a, inst.w, alpha, 1.0); }

double effective_gamma(const ModularInstance& inst, double alpha) {
    return gamma_for(inst.a, inst.w, alpha, inst.kappa - 1.0);
}

double truncation_bound(long n, double gamma, int s) {
    if (!(gamma > 1.0)) {
        fail(ErrorKind::GammaNotGreaterThanOne, "truncation bound needs gamma > 1");
    }
    if (n <= 0) {
        return 0.0;
    }
    return std::exp(log_bound(n, gamma, s));
}

int choose_s(long n, double gamma, double epsilon) {
    if (!(gamma > 1.0)) {
        fail(ErrorKind::GammaNotGreaterThanOne, "choosing a truncation order needs gamma > 1");
    }
    if (!(epsilon > 0.0)) {
        fail(ErrorKind::InvalidInput, "epsilon must be positive");
    }
    if (n <= 0) {
        return 0;
    }
    const double target = std::log(epsilon);
    auto ok = [&](long s) {
        double lb = log_bound(n, gamma, static_cast<double>(s));
        return lb <= target && std::exp(lb) <= epsilon;
    };
    long hi = 1;
    while (!ok(hi)) {
        hi *= 2;
        if (hi > std::numeric_limits<int>::max() / 2) {
            fail(ErrorKind::GammaNotGreaterThanOne, "gamma is too close to 1 for the requested accuracy");
        }
    }
    long lo = -1;  // ok(lo) false or lo = -1
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (mid >= 0 && ok(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return static_cast<int>(hi);
}

std::vector<Complex> taylor_from_sigma(const std::vector<Complex>& sigma, int s) {
    if (s < 0 || static_cast<size_t>(s) >= sigma.size() + (s == 0 ? 1 : 0)) {
        fail(ErrorKind::InvalidInput, "not enough power sums for the requested order");
    }
    std::vector<Complex> coeffs(static_cast<size_t>(s) + 1, 0.0);
    for (int k = 1; k <= s; ++k) {
        coeffs[k] = -sigma[k] / static_cast<double>(k);
    }
    return coeffs;
}

ApproxReport approx_w(const WeightedInstance& inst, const ApproxOptions& options) {
    auto red = prepare(inst);
    const auto& r = red.instance;
    return approximate(r, red.factor, r.degree(), 1.0, options, [&](int k, const FastOptions& fo) {
        return sigma_fast(r, k, fo);
    });
}

ApproxReport approx_code_weight(const ModularInstance& inst, const ApproxOptions& options) {
    auto red = prepare(inst);
    const auto& r = red.instance;
    return approximate(r, red.factor, r.cols(), r.kappa - 1.0, options, [&](int k, const FastOptions& fo) {
        return code_sigma_fast(r, k, fo);
    });
}

}  // namespace wcount
