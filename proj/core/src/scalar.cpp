#include "mhx/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "mhx/error.hpp"

namespace mhx {

Scalar Scalar::inverse() const {
    Rational n = norm();
    if (n == 0) throw InputError("division by zero scalar");
    return Scalar(re / n, -im / n);
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
}

namespace {

std::string rational_str(const Rational& r) {
    Rational c(r);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational in scalar literal");
    std::size_t slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto digits_ok = [](const std::string& s, bool sign_ok) {
        if (s.empty()) return false;
        std::size_t k = 0;
        if (sign_ok && (s[0] == '-' || s[0] == '+')) k = 1;
        if (k == s.size()) return false;
        return std::all_of(s.begin() + static_cast<long>(k), s.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw InputError("malformed rational '" + text + "'");
    Rational r;
    if (r.set_str(num + "/" + den, 10) != 0)
        throw InputError("malformed rational '" + text + "'");
    if (r.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

}  // namespace

std::string to_string(const Scalar& s) {
    if (s.im == 0) return rational_str(s.re);
    std::string imag = rational_str(s.im < 0 ? Rational(-s.im) : s.im) + "*i";
    std::string sign = s.im < 0 ? "-" : "+";
    if (s.re == 0) return (s.im < 0 ? "-" : "") + imag;
    return rational_str(s.re) + sign + imag;
}

Scalar parse_scalar(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    if (text.empty()) throw InputError("empty scalar literal");

    // Split into real and imaginary summands at a sign that is neither the
    // leading sign nor part of an exponent (exponents never occur here).
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < text.size(); ++k)
        if (text[k] == '+' || text[k] == '-') {
            if (split != std::string::npos)
                throw InputError("malformed scalar '" + raw + "'");
            split = k;
        }

    auto parse_imag = [&raw](std::string part) {
        if (part.size() < 2 || part.substr(part.size() - 2) != "*i")
            throw InputError("malformed scalar '" + raw + "'");
        return parse_rational(part.substr(0, part.size() - 2));
    };

    const bool has_i = text.size() >= 2 && text.substr(text.size() - 2) == "*i";
    if (split == std::string::npos)
        return has_i ? Scalar(Rational(0), parse_imag(text)) : Scalar(parse_rational(text));

    if (!has_i) throw InputError("malformed scalar '" + raw + "'");
    Rational re = parse_rational(text.substr(0, split));
    Rational im = parse_imag(text.substr(split + 1));
    if (text[split] == '-') im = -im;
    return Scalar(std::move(re), std::move(im));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector dimension mismatch");
    Vec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector dimension mismatch");
    Vec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) r[k] = c * v[k];
    return r;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec conj(const Vec& v) {
    Vec r(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) r[k] = v[k].conj();
    return r;
}

}  // namespace mhx
