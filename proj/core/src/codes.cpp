#include "wcount/codes.hpp"

#include <algorithm>
#include <string>

#include "wcount/error.hpp"

namespace wcount {

namespace {

uint64_t power_count(int base, int exp, uint64_t limit) {
    uint64_t total = 1;
    for (int i = 0; i < exp; ++i) {
        if (total > (limit + 1) / static_cast<uint64_t>(base)) {
            return limit + 1;
        }
        total *= static_cast<uint64_t>(base);
    }
    return total;
}

void check_limit(uint64_t count, uint64_t limit) {
    if (count > limit) {
        fail(ErrorKind::EnumerationLimitExceeded,
             "more than " + std::to_string(limit) + " candidate vectors; raise the enumeration limit");
    }
}

class ModularWalker {
public:
    ModularWalker(const ModularInstance& inst, const std::function<void(std::span<const int>, int)>& visit)
        : a_(inst.a), kappa_(inst.kappa), visit_(visit), x_(inst.cols(), 0), partial_(inst.rows(), 0),
          last_(inst.rows(), -1) {
        for (int j = 0; j < a_.cols(); ++j) {
            for (const auto& e : a_.col(j)) {
                last_[e.index] = j;
            }
        }
    }

    void run() { walk(0, 0); }

private:
    void walk(int j, int support) {
        if (j == a_.cols()) {
            visit_(x_, support);
            return;
        }
        auto col = a_.col(j);
        for (int v = 0; v < kappa_; ++v) {
            bool ok = true;
            for (const auto& e : col) {
                long p = (partial_[e.index] + e.value * v) % kappa_;
                if (last_[e.index] == j && p != 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            for (const auto& e : col) {
                partial_[e.index] = (partial_[e.index] + e.value * v) % kappa_;
            }
            x_[j] = v;
            walk(j + 1, support + (v != 0));
            for (const auto& e : col) {
                partial_[e.index] = ((partial_[e.index] - e.value * v) % kappa_ + kappa_) % kappa_;
            }
        }
        x_[j] = 0;
    }

    const SparseMatrix& a_;
    int kappa_;
    const std::function<void(std::span<const int>, int)>& visit_;
    std::vector<int> x_;
    std::vector<long> partial_;
    std::vector<int> last_;
};

/// Reduced row echelon basis of the row space over F_p.
std::vector<std::vector<long>> row_basis(const SparseMatrix& a, int p) {
    std::vector<std::vector<long>> m(a.rows(), std::vector<long>(a.cols(), 0));
    for (const auto& t : a.triplets()) {
        m[t.row][t.col] = ((t.value % p) + p) % p;
    }
    auto inverse = [p](long x) {
        long result = 1;
        long base = x % p;
        long e = p - 2;
        while (e > 0) {
            if (e & 1) {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    int rank = 0;
    for (int c = 0; c < a.cols() && rank < a.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < a.rows(); ++r) {
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(m[rank], m[pivot]);
        long inv = inverse(m[rank][c]);
        for (auto& v : m[rank]) {
            v = v * inv % p;
        }
        for (int r = 0; r < a.rows(); ++r) {
            if (r != rank && m[r][c] != 0) {
                long f = m[r][c];
                for (int k = 0; k < a.cols(); ++k) {
                    m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
                }
            }
        }
        ++rank;
    }
    m.resize(rank);
    return m;
}

mpz_class mpz_pow(long base, int exp) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return out;
}

}  // namespace

void modular_enumerate(const ModularInstance& inst, const std::function<void(std::span<const int>, int)>& visit,
                       uint64_t limit) {
    check_limit(power_count(inst.kappa, inst.cols(), limit), limit);
    ModularWalker(inst, visit).run();
}

std::vector<std::vector<int>> modular_points(const ModularInstance& inst, uint64_t limit) {
    std::vector<std::vector<int>> out;
    modular_enumerate(
        inst, [&](std::span<const int> x, int) { out.emplace_back(x.begin(), x.end()); }, limit);
    return out;
}

template <class S>
std::vector<S> code_pi_table(const ModularInstance& inst, const std::vector<S>& w, uint64_t limit) {
    std::vector<S> pi(static_cast<size_t>(inst.cols()) + 1, S(0));
    modular_enumerate(
        inst,
        [&](std::span<const int> x, int support) {
            S term(1);
            for (size_t j = 0; j < x.size(); ++j) {
                if (x[j] != 0) {
                    term *= w[j];
                }
            }
            pi[support] += term;
        },
        limit);
    return pi;
}

template std::vector<Complex> code_pi_table(const ModularInstance&, const std::vector<Complex>&, uint64_t);
template std::vector<GaussianRational> code_pi_table(const ModularInstance&, const std::vector<GaussianRational>&,
                                                     uint64_t);

Complex code_weight(const ModularInstance& inst, uint64_t limit) {
    Complex total = 0.0;
    for (const auto& v : code_pi_table(inst, inst.w, limit)) {
        total += v;
    }
    return total;
}

GaussianRational code_weight_exact(const ModularInstance& inst, uint64_t limit) {
    GaussianRational total;
    for (const auto& v : code_pi_table(inst, inst.exact_weights(), limit)) {
        total += v;
    }
    return total;
}

std::vector<Complex> code_roots(const ModularInstance& inst, uint64_t limit) {
    std::vector<Complex> coeffs;
    for (const auto& v : code_pi_table(inst, inst.exact_weights(), limit)) {
        coeffs.push_back(v.to_complex());
    }
    return polynomial_roots(std::move(coeffs));
}

std::vector<mpz_class> enumerator_polynomial(const ModularInstance& inst, uint64_t limit) {
    std::vector<mpz_class> p(static_cast<size_t>(inst.cols()) + 1, 0);
    modular_enumerate(
        inst, [&](std::span<const int>, int support) { p[support] += 1; }, limit);
    return p;
}

bool is_prime(long p) {
    if (p < 2) {
        return false;
    }
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

int rank_mod_prime(const SparseMatrix& a, int p) {
    if (!is_prime(p)) {
        fail(ErrorKind::InvalidInput, "rank over Z/" + std::to_string(p) + " needs a prime modulus");
    }
    return static_cast<int>(row_basis(a, p).size());
}

std::vector<mpz_class> dual_enumerator_polynomial(const SparseMatrix& a, int p, uint64_t limit) {
    if (!is_prime(p)) {
        fail(ErrorKind::InvalidInput, "the dual code needs a prime modulus");
    }
    auto basis = row_basis(a, p);
    const int dim = static_cast<int>(basis.size());
    check_limit(power_count(p, dim, limit), limit);
    std::vector<mpz_class> out(static_cast<size_t>(a.cols()) + 1, 0);
    std::vector<int> coeff(dim, 0);
    std::vector<long> word(a.cols(), 0);
    for (;;) {
        int support = 0;
        for (long v : word) {
            support += v != 0;
        }
        out[support] += 1;
        // Next coefficient vector in base p, updating the word incrementally.
        int i = 0;
        for (; i < dim; ++i) {
            ++coeff[i];
            for (int c = 0; c < a.cols(); ++c) {
                word[c] = (word[c] + basis[i][c]) % p;
            }
            if (coeff[i] < p) {
                break;
            }
            coeff[i] = 0;  // p additions of a row bring the word back
        }
        if (i == dim) {
            break;
        }
    }
    return out;
}

std::vector<mpq_class> macwilliams_transform(const std::vector<mpz_class>& enumerator, int p, int n, int dim) {
    if (static_cast<int>(enumerator.size()) > n + 1) {
        fail(ErrorKind::InvalidInput, "enumerator degree exceeds the code length");
    }
    // Binomial-style expansion with exact integer arithmetic.
    std::vector<mpz_class> total(static_cast<size_t>(n) + 1, 0);
    for (int k = 0; k < static_cast<int>(enumerator.size()); ++k) {
        if (enumerator[k] == 0) {
            continue;
        }
        std::vector<mpz_class> poly{1};
        auto multiply = [&](long c0, long c1, int times) {
            for (int t = 0; t < times; ++t) {
                std::vector<mpz_class> next(poly.size() + 1, 0);
                for (size_t i = 0; i < poly.size(); ++i) {
                    next[i] += poly[i] * c0;
                    next[i + 1] += poly[i] * c1;
                }
                poly = std::move(next);
            }
        };
        multiply(1, -1, k);
        multiply(1, p - 1, n - k);
        for (size_t i = 0; i < poly.size(); ++i) {
            total[i] += enumerator[k] * poly[i];
        }
    }
    mpz_class scale = mpz_pow(p, dim);
    std::vector<mpq_class> out;
    out.reserve(total.size());
    for (auto& v : total) {
        mpq_class q(v, scale);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

Complex evaluate(const std::vector<mpz_class>& coeffs, Complex z) {
    Complex v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        v = v * z + it->get_d();
    }
    return v;
}

Complex macwilliams_forward(const std::vector<Complex>& dual_enumerator, int p, int n, int dim_c, Complex z) {
    Complex den = 1.0 + static_cast<double>(p - 1) * z;
    if (is_zero(den)) {
        fail(ErrorKind::DivisionByZero, "1 + (p - 1) z vanishes");
    }
    Complex t = (1.0 - z) / den;
    Complex pc = 0.0;
    for (auto it = dual_enumerator.rbegin(); it != dual_enumerator.rend(); ++it) {
        pc = pc * t + *it;
    }
    return std::pow(static_cast<double>(p), -dim_c) * std::pow(den, n) * pc;
}

Complex macwilliams_dual_value(Complex px_at_z, int p, int n, int dim_c, Complex z) {
    Complex den = 1.0 + static_cast<double>(p - 1) * z;
    if (is_zero(den)) {
        fail(ErrorKind::DivisionByZero, "1 + (p - 1) z vanishes");
    }
    return std::pow(static_cast<double>(p), dim_c) * px_at_z / std::pow(den, n);
}

ModularInstance cut_code_matrix(const Graph& g, Complex w) {
    if (g.has_loops()) {
        fail(ErrorKind::InvalidInput, "cut codes need a graph without loops");
    }
    std::vector<Triplet> entries;
    const auto& edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        entries.push_back({edges[e].first, static_cast<int>(e), 1});
        entries.push_back({edges[e].second, static_cast<int>(e), 1});
    }
    SparseMatrix a(g.size(), static_cast<int>(edges.size()), std::move(entries));
    return ModularInstance(2, a, std::vector<Complex>(edges.size(), w));
}

}  // namespace wcount
