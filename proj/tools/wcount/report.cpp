#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "wcount/error.hpp"
#include "wcount/powersum.hpp"
#include "wcount/text_io.hpp"
#include "wcount/wcount_format.hpp"

namespace wcli {

namespace {

int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

bool is_complex(const json& j) { return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im"); }

bool is_leaf(const json& j) { return !j.is_structured() || is_complex(j); }

std::string scalar_text(const json& j) {
    if (j.is_number_float()) {
        return wcount::format_double(j.get<double>());
    }
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_null()) {
        return "-";
    }
    return j.dump();
}

std::string leaf_text(const json& j) {
    if (!is_complex(j)) {
        return scalar_text(j);
    }
    std::string re = scalar_text(j["re"]);
    std::string im = scalar_text(j["im"]);
    if (im == "0" || im == "-0") {
        return re;
    }
    if (im.front() == '-') {
        return re + " - " + im.substr(1) + "i";
    }
    return re + " + " + im + "i";
}

void render_text(const json& j, int indent, std::ostream& out);

void render_entry(const std::string& label, const json& v, int indent, std::ostream& out) {
    std::string pad(indent, ' ');
    if (is_leaf(v)) {
        out << pad << label << ": " << leaf_text(v) << '\n';
        return;
    }
    if (v.empty()) {
        out << pad << label << ": (none)\n";
        return;
    }
    if (v.is_array() && v.size() <= 8 &&
        std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); })) {
        out << pad << label << ":";
        for (const auto& x : v) {
            out << ' ' << scalar_text(x);
        }
        out << '\n';
        return;
    }
    out << pad << label << ":\n";
    render_text(v, indent + 2, out);
}

void render_text(const json& j, int indent, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [key, v] : j.items()) {
            render_entry(key, v, indent, out);
        }
        return;
    }
    int i = 0;
    for (const auto& v : j) {
        render_entry("[" + std::to_string(i++) + "]", v, indent, out);
    }
}

}  // namespace

int Settings::thread_count() const { return threads ? *threads : wcount::default_thread_count(); }

json to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const GaussianRational& z) { return json{{"re", z.real().get_str()}, {"im", z.imag().get_str()}}; }

json to_json(const mpz_class& v) {
    if (v.fits_slong_p()) {
        return v.get_si();
    }
    return v.get_str();
}

json to_json(const mpq_class& v) {
    if (v.get_den() == 1) {
        return to_json(v.get_num());
    }
    return v.get_str();
}

json complex_list(const std::vector<Complex>& v) {
    json out = json::array();
    for (const auto& z : v) {
        out.push_back(to_json(z));
    }
    return out;
}

json exact_list(const std::vector<GaussianRational>& v) {
    json out = json::array();
    for (const auto& z : v) {
        out.push_back(to_json(z));
    }
    return out;
}

json integer_list(const std::vector<mpz_class>& v) {
    json out = json::array();
    for (const auto& x : v) {
        out.push_back(to_json(x));
    }
    return out;
}

json indexed(const json& array, int first) {
    json out = json::object();
    for (const auto& v : array) {
        out[std::to_string(first++)] = v;
    }
    return out;
}

json approx_report(const wcount::ApproxReport& rep, bool details) {
    json j;
    j["value"] = to_json(rep.value);
    j["log_value"] = to_json(rep.log_value);
    j["s"] = rep.s;
    j["gamma"] = rep.gamma ? json(*rep.gamma) : json(nullptr);
    j["bound"] = rep.bound ? json(*rep.bound) : json(nullptr);
    j["certified"] = rep.certified;
    j["degree_bound"] = rep.degree_bound;
    j["k_computed"] = rep.k_computed;
    j["r"] = rep.stats.r;
    j["c"] = rep.stats.c;
    j["max_weight"] = rep.max_weight;
    j["columns"] = rep.columns;
    j["removed_factor"] = to_json(rep.factor);
    j["subsets_enumerated"] = rep.subsets_enumerated;
    if (details) {
        j["sigma"] = indexed(complex_list(rep.sigma), 0);
        j["coefficients"] = indexed(complex_list(rep.coefficients), 0);
    }
    j["warnings"] = rep.warnings;
    return j;
}

void render(const json& report, bool as_json, std::ostream& out) {
    if (as_json) {
        out << report.dump(2) << '\n';
        return;
    }
    render_text(report, 0, out);
}

Complex parse_complex(const std::string& text) { return wcount::parse_complex_token(text); }

std::string read_file(const std::string& path) { return wcount::read_text_file(path); }

Stopwatch::Stopwatch() : start_ns_(now_ns()) {}

void Stopwatch::stamp(json& report, const Settings& settings) const {
    if (settings.timing) {
        report["seconds"] = static_cast<double>(now_ns() - start_ns_) * 1e-9;
    }
}

}  // namespace wcli
