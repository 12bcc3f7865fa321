#ifndef WCOUNT_TOOLS_REPORT_HPP
#define WCOUNT_TOOLS_REPORT_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "wcount/interpolation.hpp"
#include "wcount/scalar.hpp"

namespace wcli {

using json = nlohmann::ordered_json;
using wcount::Complex;
using wcount::GaussianRational;

/// Settings shared by every subcommand.
struct Settings {
    std::string format = "text";
    std::optional<int> threads;
    uint64_t limit = 0;
    bool timing = false;

    int thread_count() const;
    bool json_output() const { return format == "json"; }
};

/// What a subcommand produced: a report, or raw text (generated files), and an exit code.
struct Outcome {
    json report = json::object();
    std::optional<std::string> raw;
    int exit_code = 0;
};

using Action = std::function<Outcome()>;

json to_json(Complex z);
json to_json(const GaussianRational& z);
json to_json(const mpz_class& v);
json to_json(const mpq_class& v);
json complex_list(const std::vector<Complex>& v);
json exact_list(const std::vector<GaussianRational>& v);
json integer_list(const std::vector<mpz_class>& v);
/// Array as an object keyed "first", "first + 1", ...
json indexed(const json& array, int first);
json approx_report(const wcount::ApproxReport& rep, bool details);

/// JSON as-is, or indented `key: value` text with complex numbers written a+bi.
void render(const json& report, bool as_json, std::ostream& out);

Complex parse_complex(const std::string& text);
std::string read_file(const std::string& path);

/// Seconds since `start`, added to the report under "seconds" when timing is on.
class Stopwatch {
public:
    Stopwatch();
    void stamp(json& report, const Settings& settings) const;

private:
    int64_t start_ns_;
};

}  // namespace wcli

#endif
