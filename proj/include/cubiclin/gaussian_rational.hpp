#ifndef CUBICLIN_GAUSSIAN_RATIONAL_HPP
#define CUBICLIN_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubiclin {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct arithmetic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact scalar a + b*i with arbitrary-precision rational a, b.
/// Components are always canonical: lowest terms, positive denominator.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re_, -a.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_,
                                a.re_ * b.im_ + a.im_ * b.re_);
    }
    GaussianRational& operator+=(const GaussianRational& b) {
        re_ += b.re_;
        im_ += b.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& b) {
        re_ -= b.re_;
        im_ -= b.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// |a|^2 = re^2 + im^2, a rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inv() const {
        if (is_zero()) throw arithmetic_error("division by zero");
        mpq_class n = norm();
        return GaussianRational(re_ / n, -im_ / n);
    }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inv();
    }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    /// Total order used for deterministic sorting only (no field meaning).
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    /// Canonical text form: "a", "a+c/d*i", "a-c/d*i", "i", "-i", "c/d*i", ...
    std::string to_string() const {
        if (im_ == 0) return re_.get_str();
        std::string out;
        if (re_ != 0) out = re_.get_str();
        mpq_class ai = abs(im_);
        std::string sign = im_ < 0 ? "-" : (out.empty() ? "" : "+");
        out += sign;
        if (ai != 1) out += ai.get_str() + "*";
        out += "i";
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& a) {
        return os << a.to_string();
    }

private:
    mpq_class re_, im_;
};

namespace detail {

// rat = [-]?digits(/digits)?
inline mpq_class parse_rat(std::string_view text, size_t& pos) {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t dstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == dstart)
        throw parse_error("expected digits at '" + std::string(text.substr(start)) + "'");
    std::string num(text.substr(start, pos - start));
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        size_t nstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == nstart)
            throw parse_error("expected denominator digits at '" +
                              std::string(text.substr(nstart)) + "'");
        den = std::string(text.substr(nstart, pos - nstart));
    }
    mpz_class d(den);
    if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

}  // namespace detail

/// Grammar: rat | rat? (+|-) rat? i, with an optional '*' before i.
/// Accepts e.g. "1/6", "-i", "2/4", "1+i", "-1/2+3/4*i".
inline GaussianRational parse_scalar(std::string_view text) {
    std::string stripped;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
    if (stripped.empty()) throw parse_error("empty scalar");

    size_t pos = 0;
    std::string_view s = stripped;

    auto parse_imag_tail = [&](int sign) -> mpq_class {
        // after the sign: rat? '*'? 'i'
        mpq_class coeff = 1;
        if (s[pos] != 'i') {
            coeff = detail::parse_rat(s, pos);
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        if (pos >= s.size() || s[pos] != 'i')
            throw parse_error("expected 'i' at '" + std::string(s.substr(pos)) + "'");
        ++pos;
        return sign * coeff;
    };

    mpq_class re = 0, im = 0;
    // Pure imaginary forms: "i", "-i", "3/4*i", "-3/4i"
    bool leading_minus = s[0] == '-';
    size_t probe = (leading_minus || s[0] == '+') ? 1 : 0;
    if (probe < s.size() && s[probe] == 'i' && probe + 1 == s.size()) {
        im = leading_minus ? -1 : 1;
        return GaussianRational(re, im);
    }
    if (s.back() == 'i' && s.find_first_of("+-", 1) == std::string_view::npos) {
        int sign = 1;
        if (s[0] == '-') {
            sign = -1;
            ++pos;
        } else if (s[0] == '+') {
            ++pos;
        }
        im = parse_imag_tail(sign);
        if (pos != s.size())
            throw parse_error("trailing text '" + std::string(s.substr(pos)) + "'");
        return GaussianRational(re, im);
    }

    re = detail::parse_rat(s, pos);
    if (pos == s.size()) return GaussianRational(re, im);
    if (s[pos] != '+' && s[pos] != '-')
        throw parse_error("expected '+' or '-' at '" + std::string(s.substr(pos)) + "'");
    int sign = s[pos] == '-' ? -1 : 1;
    ++pos;
    if (pos >= s.size()) throw parse_error("dangling sign in '" + std::string(s) + "'");
    im = parse_imag_tail(sign);
    if (pos != s.size())
        throw parse_error("trailing text '" + std::string(s.substr(pos)) + "'");
    return GaussianRational(re, im);
}

inline std::string format_scalar(const GaussianRational& a) { return a.to_string(); }

}  // namespace cubiclin

#endif
