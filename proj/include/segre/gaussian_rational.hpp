#ifndef SEGRE_GAUSSIAN_RATIONAL_HPP
#define SEGRE_GAUSSIAN_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <iosfwd>
#include <string>

namespace segre {

using Rational = boost::multiprecision::mpq_rational;

/// Exact element of Q(i).  Both components are canonical GMP rationals,
/// so no rounding ever happens and conjugation is an involution.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int n) : re_(n) {}
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    /// Parses "p/q" (or "p") component strings.  Throws std::invalid_argument
    /// on malformed input or zero denominators.
    static GaussianRational parse(const std::string& re, const std::string& im);

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// Squared modulus re^2 + im^2, a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const;

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    /// Compact display form: "0", "1/2", "-3i", "(1/2+3i)", ...
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

/// Parses a single rational "p/q" or "p"; validates and canonicalizes.
Rational parse_rational(const std::string& text);

std::string rational_str(const Rational& q);

std::ostream& operator<<(std::ostream& os, const GaussianRational& c);

} // namespace segre

#endif
