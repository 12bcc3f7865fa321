#include "wcount/oracle.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Eigenvalues>

#include "wcount/error.hpp"

namespace wcount {

namespace {

uint64_t saturating_mul(uint64_t a, uint64_t b, uint64_t ceiling) {
    if (a == 0 || b == 0) {
        return 0;
    }
    if (a > ceiling / b) {
        return ceiling;
    }
    return std::min(a * b, ceiling);
}

/// Depth-first walk over the box with row-range pruning.
class BoxWalker {
public:
    BoxWalker(const WeightedInstance& inst, std::optional<long> cap,
              const std::function<void(std::span<const int>, long)>& visit)
        : a_(inst.a), nu_(inst.nu), cap_(cap), visit_(visit), x_(inst.cols(), 0), partial_(inst.rows(), 0),
          pos_rem_(inst.rows(), 0), neg_rem_(inst.rows(), 0) {
        for (int j = 0; j < a_.cols(); ++j) {
            for (const auto& e : a_.col(j)) {
                long span = e.value * nu_[j];
                (span > 0 ? pos_rem_[e.index] : neg_rem_[e.index]) += span > 0 ? span : -span;
            }
        }
    }

    void run() { walk(0, 0); }

private:
    void walk(int j, long degree) {
        if (j == a_.cols()) {
            visit_(x_, degree);
            return;
        }
        auto col = a_.col(j);
        for (const auto& e : col) {
            long span = e.value * nu_[j];
            (span > 0 ? pos_rem_[e.index] : neg_rem_[e.index]) -= span > 0 ? span : -span;
        }
        for (int v = 0; v <= nu_[j]; ++v) {
            if (cap_ && degree + v > *cap_) {
                break;
            }
            bool feasible = true;
            for (const auto& e : col) {
                long p = partial_[e.index] + e.value * v;
                if (p - neg_rem_[e.index] > 0 || p + pos_rem_[e.index] < 0) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) {
                continue;
            }
            for (const auto& e : col) {
                partial_[e.index] += e.value * v;
            }
            x_[j] = v;
            walk(j + 1, degree + v);
            for (const auto& e : col) {
                partial_[e.index] -= e.value * v;
            }
        }
        x_[j] = 0;
        for (const auto& e : col) {
            long span = e.value * nu_[j];
            (span > 0 ? pos_rem_[e.index] : neg_rem_[e.index]) += span > 0 ? span : -span;
        }
    }

    const SparseMatrix& a_;
    const std::vector<int>& nu_;
    std::optional<long> cap_;
    const std::function<void(std::span<const int>, long)>& visit_;
    std::vector<int> x_;
    std::vector<long> partial_;
    std::vector<long> pos_rem_;
    std::vector<long> neg_rem_;
};

template <class S>
std::vector<std::vector<S>> power_table(const std::vector<S>& w, const std::vector<int>& nu, long cap) {
    std::vector<std::vector<S>> pw(w.size());
    for (size_t j = 0; j < w.size(); ++j) {
        long top = std::min<long>(nu[j], cap);
        pw[j].reserve(static_cast<size_t>(top) + 1);
        pw[j].push_back(S(1));
        for (long t = 1; t <= top; ++t) {
            pw[j].push_back(pw[j].back() * w[j]);
        }
    }
    return pw;
}

}  // namespace

uint64_t candidate_count(const std::vector<int>& nu, std::optional<long> cap, uint64_t limit) {
    const uint64_t ceiling = limit + 1;
    if (!cap) {
        uint64_t total = 1;
        for (int v : nu) {
            total = saturating_mul(total, static_cast<uint64_t>(v) + 1, ceiling);
        }
        return total;
    }
    if (*cap < 0) {
        return 0;
    }
    // counts[t] = number of prefixes of degree t, saturating.
    std::vector<uint64_t> counts(static_cast<size_t>(*cap) + 1, 0);
    counts[0] = 1;
    for (int v : nu) {
        std::vector<uint64_t> next(counts.size(), 0);
        for (size_t t = 0; t < counts.size(); ++t) {
            if (counts[t] == 0) {
                continue;
            }
            for (long u = 0; u <= v && t + u < counts.size(); ++u) {
                next[t + u] = std::min(ceiling, next[t + u] + counts[t]);
            }
        }
        counts = std::move(next);
    }
    uint64_t total = 0;
    for (uint64_t c : counts) {
        total = std::min(ceiling, total + c);
    }
    return total;
}

void enumerate_points(const WeightedInstance& inst, std::optional<long> cap,
                      const std::function<void(std::span<const int>, long)>& visit, uint64_t limit) {
    uint64_t count = candidate_count(inst.nu, cap, limit);
    if (count > limit) {
        fail(ErrorKind::EnumerationLimitExceeded,
             "more than " + std::to_string(limit) + " candidate vectors; raise the enumeration limit");
    }
    BoxWalker(inst, cap, visit).run();
}

std::vector<std::vector<int>> collect_points(const WeightedInstance& inst, std::optional<long> cap, uint64_t limit) {
    std::vector<std::vector<int>> out;
    enumerate_points(
        inst, cap, [&](std::span<const int> x, long) { out.emplace_back(x.begin(), x.end()); }, limit);
    return out;
}

template <class S>
std::vector<S> pi_table(const WeightedInstance& inst, const std::vector<S>& w, int s, uint64_t limit) {
    if (s < 0) {
        fail(ErrorKind::InvalidInput, "truncation order must be non-negative");
    }
    auto pw = power_table(w, inst.nu, s);
    std::vector<S> pi(static_cast<size_t>(s) + 1, S(0));
    enumerate_points(
        inst, s,
        [&](std::span<const int> x, long degree) {
            S term(1);
            for (size_t j = 0; j < x.size(); ++j) {
                if (x[j] != 0) {
                    term *= pw[j][x[j]];
                }
            }
            pi[degree] += term;
        },
        limit);
    return pi;
}

template <class S>
S exact_w(const WeightedInstance& inst, const std::vector<S>& w, uint64_t limit) {
    auto pw = power_table(w, inst.nu, inst.degree());
    S total(0);
    enumerate_points(
        inst, std::nullopt,
        [&](std::span<const int> x, long) {
            S term(1);
            for (size_t j = 0; j < x.size(); ++j) {
                if (x[j] != 0) {
                    term *= pw[j][x[j]];
                }
            }
            total += term;
        },
        limit);
    return total;
}

template std::vector<Complex> pi_table(const WeightedInstance&, const std::vector<Complex>&, int, uint64_t);
template std::vector<GaussianRational> pi_table(const WeightedInstance&, const std::vector<GaussianRational>&, int,
                                                uint64_t);
template Complex exact_w(const WeightedInstance&, const std::vector<Complex>&, uint64_t);
template GaussianRational exact_w(const WeightedInstance&, const std::vector<GaussianRational>&, uint64_t);

std::vector<Complex> pi_table(const WeightedInstance& inst, int s, uint64_t limit) {
    return pi_table(inst, inst.w, s, limit);
}

std::vector<GaussianRational> pi_table_exact(const WeightedInstance& inst, int s, uint64_t limit) {
    return pi_table(inst, inst.exact_weights(), s, limit);
}

Complex exact_w(const WeightedInstance& inst, uint64_t limit) { return exact_w(inst, inst.w, limit); }

GaussianRational exact_w_rational(const WeightedInstance& inst, uint64_t limit) {
    return exact_w(inst, inst.exact_weights(), limit);
}

std::vector<GaussianRational> w_polynomial(const WeightedInstance& inst, uint64_t limit) {
    long degree = inst.degree();
    auto exact = inst.exact_weights();
    auto pw = power_table(exact, inst.nu, degree);
    std::vector<GaussianRational> coeffs(static_cast<size_t>(degree) + 1);
    enumerate_points(
        inst, std::nullopt,
        [&](std::span<const int> x, long deg) {
            GaussianRational term(1);
            for (size_t j = 0; j < x.size(); ++j) {
                if (x[j] != 0) {
                    term *= pw[j][x[j]];
                }
            }
            coeffs[deg] += term;
        },
        limit);
    while (coeffs.size() > 1 && coeffs.back().is_zero()) {
        coeffs.pop_back();
    }
    return coeffs;
}

std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs) {
    while (!coeffs.empty() && is_zero(coeffs.back())) {
        coeffs.pop_back();
    }
    if (coeffs.size() <= 1) {
        return {};
    }
    // Zero roots factor out directly.
    size_t zeros = 0;
    while (is_zero(coeffs[zeros])) {
        ++zeros;
    }
    std::vector<Complex> roots(zeros, Complex(0.0));
    const int deg = static_cast<int>(coeffs.size() - 1 - zeros);
    if (deg == 0) {
        return roots;
    }
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    const Complex lead = coeffs.back();
    for (int i = 1; i < deg; ++i) {
        companion(i, i - 1) = 1.0;
    }
    for (int i = 0; i < deg; ++i) {
        companion(i, deg - 1) = -coeffs[zeros + i] / lead;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        fail(ErrorKind::InvalidInput, "eigenvalue iteration did not converge");
    }
    for (int i = 0; i < deg; ++i) {
        roots.push_back(solver.eigenvalues()[i]);
    }
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

std::vector<Complex> roots_of_w(const WeightedInstance& inst, uint64_t limit) {
    auto exact = w_polynomial(inst, limit);
    std::vector<Complex> coeffs;
    coeffs.reserve(exact.size());
    for (const auto& c : exact) {
        coeffs.push_back(c.to_complex());
    }
    return polynomial_roots(std::move(coeffs));
}

std::vector<Complex> sigma_from_roots(const std::vector<Complex>& roots, int k_max) {
    std::vector<Complex> sigma(static_cast<size_t>(k_max) + 1, 0.0);
    for (const auto& z : roots) {
        if (is_zero(z)) {
            fail(ErrorKind::DivisionByZero, "power sums of inverse roots are undefined for a zero root");
        }
        Complex inv = 1.0 / z;
        Complex p = 1.0;
        for (int k = 1; k <= k_max; ++k) {
            p *= inv;
            sigma[k] += p;
        }
    }
    return sigma;
}

}  // namespace wcount
