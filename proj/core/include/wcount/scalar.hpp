#ifndef WCOUNT_SCALAR_HPP
#define WCOUNT_SCALAR_HPP

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

// Scalar types shared by the floating and exact code paths.
//
// Every templated algorithm in the library is instantiated for `Complex`
// (double precision) and `GaussianRational` (exact). The only operations
// the algorithms need are ring arithmetic, division by a nonzero value,
// construction from an integer and an exact zero test.

namespace wcount {

using Complex = std::complex<double>;

/**
 * Complex number with arbitrary-precision rational real and imaginary parts.
 */
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long value) : re_(value), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    /// Exact conversion: every finite double is a dyadic rational.
    static GaussianRational from_double(double re, double im = 0.0);
    static GaussianRational from_complex(const Complex& z) { return from_double(z.real(), z.imag()); }

    /**
     * Parse decimal literals such as `0.1`, `-3`, `2.5e-3` or fractions `1/7` exactly.
     * Throws `Error(InvalidInput)` on malformed text.
     */
    static GaussianRational parse(std::string_view re, std::string_view im = "0");

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    Complex to_complex() const;
    std::string to_string() const;

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return GaussianRational(-a.re_, -a.im_); }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    mpq_class re_;
    mpq_class im_;
};

inline bool is_zero(const Complex& z) { return z.real() == 0.0 && z.imag() == 0.0; }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

inline Complex to_complex(const Complex& z) { return z; }
inline Complex to_complex(const GaussianRational& z) { return z.to_complex(); }

/// The double nearest to q (ties to even).
double nearest_double(const mpq_class& q);

/// Exact rational parse of a decimal or fraction literal.
mpq_class parse_rational(std::string_view text);

}  // namespace wcount

#endif
