#include "wcount/scalar.hpp"

#include <bit>
#include <cctype>
#include <cstdint>
#include <cmath>

#include "wcount/error.hpp"

namespace wcount {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::EnumerationLimitExceeded: return "enumeration-limit-exceeded";
    case ErrorKind::GammaNotGreaterThanOne: return "gamma-not-greater-than-one";
    case ErrorKind::InfeasibleWitness: return "infeasible-witness";
    case ErrorKind::IncompatibleInputs: return "incompatible-inputs";
    case ErrorKind::AllWeightsZero: return "all-weights-zero";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::ZeroWeightOnMatching: return "zero-weight-on-matching";
    case ErrorKind::NotAHomomorphism: return "phi-not-homomorphism";
    }
    return "unknown";
}

GaussianRational GaussianRational::from_double(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im)) {
        fail(ErrorKind::InvalidInput, "non-finite value cannot be converted to a rational");
    }
    return GaussianRational(mpq_class(re), mpq_class(im));
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    mpq_class den = o.re_ * o.re_ + o.im_ * o.im_;
    if (sgn(den) == 0) {
        fail(ErrorKind::DivisionByZero, "division of a Gaussian rational by zero");
    }
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / den;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

double nearest_double(const mpq_class& q) {
    double d = q.get_d();  // truncates toward zero
    if (sgn(q) == 0 || !std::isfinite(d)) {
        return d;
    }
    double away = std::nextafter(d, sgn(q) > 0 ? INFINITY : -INFINITY);
    if (!std::isfinite(away)) {
        return d;
    }
    mpq_class lo_gap = abs(q - mpq_class(d));
    mpq_class hi_gap = abs(mpq_class(away) - q);
    int c = cmp(lo_gap, hi_gap);
    if (c < 0) {
        return d;
    }
    if (c > 0) {
        return away;
    }
    return (std::bit_cast<uint64_t>(d) & 1) == 0 ? d : away;
}

Complex GaussianRational::to_complex() const { return {nearest_double(re_), nearest_double(im_)}; }

std::string GaussianRational::to_string() const {
    std::string out = re_.get_str();
    if (sgn(im_) >= 0) {
        out += "+";
    }
    out += im_.get_str();
    out += "i";
    return out;
}

mpq_class parse_rational(std::string_view text) {
    auto bad = [&]() -> mpq_class {
        fail(ErrorKind::InvalidInput, "malformed number '" + std::string(text) + "'");
    };
    if (text.empty()) {
        return bad();
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpq_class num = parse_rational(text.substr(0, slash));
        mpq_class den = parse_rational(text.substr(slash + 1));
        if (sgn(den) == 0) {
            fail(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
        }
        mpq_class out = num / den;
        return out;
    }

    size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }

    std::string digits;
    long scale = 0;
    bool seen_point = false;
    bool seen_digit = false;
    for (; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_point) {
                --scale;
            }
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) {
        return bad();
    }

    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E') {
            return bad();
        }
        ++pos;
        bool exp_negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            exp_negative = text[pos] == '-';
            ++pos;
        }
        if (pos == text.size()) {
            return bad();
        }
        long exponent = 0;
        for (; pos < text.size(); ++pos) {
            char ch = text[pos];
            if (!std::isdigit(static_cast<unsigned char>(ch)) || exponent > 100000) {
                return bad();
            }
            exponent = exponent * 10 + (ch - '0');
        }
        scale += exp_negative ? -exponent : exponent;
    }

    mpz_class mantissa(digits, 10);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    mpq_class out;
    if (scale >= 0) {
        out = mpq_class(mantissa * power);
    } else {
        out = mpq_class(mantissa, power);
        out.canonicalize();
    }
    if (negative) {
        out = -out;
    }
    return out;
}

GaussianRational GaussianRational::parse(std::string_view re, std::string_view im) {
    return GaussianRational(parse_rational(re), parse_rational(im));
}

}  // namespace wcount
