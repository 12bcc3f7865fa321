#include "wcount/wcount_format.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "text_util.hpp"
#include "wcount/error.hpp"
#include "wcount/text_io.hpp"

namespace wcount {

namespace {

using detail::Line;
using detail::bad;
using detail::expect_arity;
using detail::to_double;
using detail::to_int;
using detail::to_long;
using detail::tokenize;

struct Weight {
    Complex value;
    GaussianRational exact;
};

Weight to_weight(const Line& line, const std::string& re, const std::string& im) {
    Weight w;
    w.value = {to_double(line, re), to_double(line, im)};
    try {
        w.exact = GaussianRational::parse(re, im);
    } catch (const Error&) {
        bad(line, "malformed weight '" + re + " " + im + "'");
    }
    return w;
}

std::string format_weight(const Complex& w, const std::optional<std::vector<GaussianRational>>& exact, size_t j) {
    if (exact) {
        return (*exact)[j].real().get_str() + " " + (*exact)[j].imag().get_str();
    }
    return format_double(w.real()) + " " + format_double(w.imag());
}

void append_body(std::ostringstream& out, const SparseMatrix& a, const std::vector<Complex>& w,
                 const std::optional<std::vector<GaussianRational>>& exact) {
    out << "weights list\n";
    for (size_t j = 0; j < w.size(); ++j) {
        out << format_weight(w[j], exact, j) << "\n";
    }
    out << "entries\n";
    for (const auto& t : a.triplets()) {
        out << t.row + 1 << " " << t.col + 1 << " " << t.value << "\n";
    }
    out << "end\n";
}

}  // namespace

AnyInstance parse_instance(std::string_view text) {
    auto lines = tokenize(text);
    size_t at = 0;
    auto next = [&](const char* what) -> const Line& {
        if (at >= lines.size()) {
            fail(ErrorKind::InvalidInput, std::string("unexpected end of input, expected ") + what);
        }
        return lines[at++];
    };

    const Line& header = next("header");
    if (header.tokens.size() != 2 || header.tokens[0] != "WCOUNT" || header.tokens[1] != "v1") {
        bad(header, "expected 'WCOUNT v1'");
    }

    const Line& mode = next("mode");
    bool modular = false;
    int kappa = 0;
    if (mode.tokens[0] != "mode") {
        bad(mode, "expected 'mode'");
    }
    if (mode.tokens.size() == 2 && mode.tokens[1] == "integer") {
        modular = false;
    } else if (mode.tokens.size() == 3 && mode.tokens[1] == "modular") {
        modular = true;
        kappa = to_int(mode, mode.tokens[2]);
        if (kappa < 2) {
            bad(mode, "modulus must be at least 2");
        }
    } else {
        bad(mode, "expected 'mode integer' or 'mode modular <kappa>'");
    }

    const Line& dims = next("dims");
    if (dims.tokens[0] != "dims") {
        bad(dims, "expected 'dims'");
    }
    expect_arity(dims, 3);
    int m = to_int(dims, dims.tokens[1]);
    int n = to_int(dims, dims.tokens[2]);
    if (m < 0 || n < 0) {
        bad(dims, "dimensions must be non-negative");
    }

    std::vector<int> nu;
    if (!modular) {
        const Line& nl = next("nu");
        if (nl.tokens[0] != "nu") {
            bad(nl, "expected 'nu'");
        }
        expect_arity(nl, static_cast<size_t>(n) + 1);
        for (int j = 0; j < n; ++j) {
            int v = to_int(nl, nl.tokens[j + 1]);
            if (v < 1) {
                bad(nl, "cap of column " + std::to_string(j + 1) + " must be at least 1");
            }
            nu.push_back(v);
        }
    }

    const Line& wl = next("weights");
    if (wl.tokens[0] != "weights" || wl.tokens.size() < 2) {
        bad(wl, "expected 'weights uniform <re> <im>' or 'weights list'");
    }
    std::vector<Complex> w;
    std::vector<GaussianRational> exact;
    if (wl.tokens[1] == "uniform") {
        expect_arity(wl, 4);
        Weight u = to_weight(wl, wl.tokens[2], wl.tokens[3]);
        w.assign(n, u.value);
        exact.assign(n, u.exact);
    } else if (wl.tokens[1] == "list") {
        expect_arity(wl, 2);
        for (int j = 0; j < n; ++j) {
            const Line& l = next("weight line");
            expect_arity(l, 2);
            Weight u = to_weight(l, l.tokens[0], l.tokens[1]);
            w.push_back(u.value);
            exact.push_back(u.exact);
        }
    } else {
        bad(wl, "unknown weights form '" + wl.tokens[1] + "'");
    }

    const Line& el = next("entries");
    if (el.tokens.size() != 1 || el.tokens[0] != "entries") {
        bad(el, "expected 'entries'");
    }
    std::vector<Triplet> triplets;
    for (;;) {
        const Line& l = next("entry or 'end'");
        if (l.tokens.size() == 1 && l.tokens[0] == "end") {
            break;
        }
        expect_arity(l, 3);
        int i = to_int(l, l.tokens[0]);
        int j = to_int(l, l.tokens[1]);
        long v = to_long(l, l.tokens[2]);
        if (i < 1 || i > m || j < 1 || j > n) {
            bad(l, "index (" + l.tokens[0] + ", " + l.tokens[1] + ") out of range");
        }
        if (v == 0) {
            bad(l, "zero coefficient");
        }
        triplets.push_back({i - 1, j - 1, v});
    }
    if (at != lines.size()) {
        bad(lines[at], "unexpected content after 'end'");
    }

    SparseMatrix a(m, n, std::move(triplets));
    if (modular) {
        return ModularInstance(kappa, a, std::move(w), std::move(exact));
    }
    return WeightedInstance(std::move(a), std::move(w), std::move(nu), std::move(exact));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AnyInstance load_instance_file(const std::string& path) { return parse_instance(read_text_file(path)); }

WeightedInstance parse_weighted_instance(std::string_view text) {
    auto any = parse_instance(text);
    if (auto* p = std::get_if<WeightedInstance>(&any)) {
        return std::move(*p);
    }
    fail(ErrorKind::InvalidInput, "expected an integer-mode instance");
}

ModularInstance parse_modular_instance(std::string_view text) {
    auto any = parse_instance(text);
    if (auto* p = std::get_if<ModularInstance>(&any)) {
        return std::move(*p);
    }
    fail(ErrorKind::InvalidInput, "expected a modular-mode instance");
}

std::string format_instance(const WeightedInstance& inst) {
    std::ostringstream out;
    out << "WCOUNT v1\nmode integer\ndims " << inst.rows() << " " << inst.cols() << "\nnu";
    for (int v : inst.nu) {
        out << " " << v;
    }
    out << "\n";
    append_body(out, inst.a, inst.w, inst.exact_w);
    return out.str();
}

std::string format_instance(const ModularInstance& inst) {
    std::ostringstream out;
    out << "WCOUNT v1\nmode modular " << inst.kappa << "\ndims " << inst.rows() << " " << inst.cols() << "\n";
    append_body(out, inst.a, inst.w, inst.exact_w);
    return out.str();
}

}  // namespace wcount
