#ifndef WCOUNT_SRC_TEXT_UTIL_HPP
#define WCOUNT_SRC_TEXT_UTIL_HPP

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wcount/error.hpp"
#include "wcount/scalar.hpp"

namespace wcount::detail {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++number;
        std::string_view raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{number, {}};
        std::istringstream in{std::string(raw)};
        std::string tok;
        while (in >> tok) {
            line.tokens.push_back(tok);
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
        pos = end + 1;
    }
    return lines;
}

[[noreturn]] inline void bad(const Line& line, const std::string& what) {
    fail(ErrorKind::InvalidInput, "line " + std::to_string(line.number) + ": " + what);
}

inline long to_long(const Line& line, const std::string& tok) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        bad(line, "expected an integer, got '" + tok + "'");
    }
    return value;
}

inline int to_int(const Line& line, const std::string& tok) {
    long value = to_long(line, tok);
    if (value < INT32_MIN || value > INT32_MAX) {
        bad(line, "integer out of range: '" + tok + "'");
    }
    return static_cast<int>(value);
}

inline double to_double(const Line& line, const std::string& tok) {
    double value = 0.0;
    const char* first = tok.data();
    if (*first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        // Fractions are not understood by from_chars; take the rational path.
        try {
            return parse_rational(tok).get_d();
        } catch (const Error&) {
            bad(line, "expected a number, got '" + tok + "'");
        }
    }
    return value;
}

inline void expect_arity(const Line& line, size_t count) {
    if (line.tokens.size() != count) {
        bad(line, "expected " + std::to_string(count) + " fields, got " + std::to_string(line.tokens.size()));
    }
}

}  // namespace wcount::detail

#endif
