#include "segre/gaussian_rational.hpp"

#include <ostream>
#include <stdexcept>

namespace segre {

using Integer = boost::multiprecision::mpz_int;

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        const Integer num(text.substr(0, slash));
        const Integer den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator in rational literal '" + text + "'");
        return Rational(num) / Rational(den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational literal '" + text + "'");
    }
}

std::string rational_str(const Rational& q) {
    return q.str();
}

GaussianRational GaussianRational::parse(const std::string& re, const std::string& im) {
    return GaussianRational(parse_rational(re), parse_rational(im));
}

GaussianRational GaussianRational::inverse() const {
    const Rational n = norm();
    if (n == 0)
        throw std::domain_error("division by zero in Q(i)");
    return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    const Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = re;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

std::string GaussianRational::str() const {
    if (im_ == 0)
        return rational_str(re_);
    const std::string imag_part = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : rational_str(im_) + "i";
    if (re_ == 0)
        return imag_part;
    if (im_ > 0)
        return "(" + rational_str(re_) + "+" + imag_part + ")";
    return "(" + rational_str(re_) + imag_part + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& c) {
    return os << c.str();
}

} // namespace segre
