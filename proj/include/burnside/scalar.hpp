#pragma once

// Exact Gaussian-rational scalars: re + im*i with re, im in Q.

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace burnside {

namespace detail {

// Parses an optionally signed "p" or "p/q" literal. Empty digits after a
// lone sign mean a unit magnitude (used for "i" and "-i").
inline std::optional<mpq_class> parse_rational(std::string_view text, bool allow_unit)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        if (!allow_unit) return std::nullopt;
        return mpq_class(negative ? -1 : 1);
    }
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (!digits(num) || !digits(den)) return std::nullopt;
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    mpq_class q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

inline std::optional<mpq_class> rational_sqrt(const mpq_class& q)
{
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpq_class r(sqrt(n), sqrt(d));
    r.canonicalize();
    return r;
}

} // namespace detail

class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(int v) : re_(v) {}
    Scalar(mpq_class re) : re_(std::move(re)) {}
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar rational(long num, long den)
    {
        if (den == 0) throw std::domain_error("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(q);
    }
    static Scalar imaginary_unit() { return Scalar(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    // |z|^2, always rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o)
    {
        re_ += o.re_;
        if (!o.is_real()) im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o)
    {
        re_ -= o.re_;
        if (!o.is_real()) im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o)
    {
        if (is_real() && o.is_real()) {
            re_ *= o.re_;
            return *this;
        }
        mpq_class re = re_ * o.re_ - im_ * o.im_;
        mpq_class im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    Scalar& operator/=(const Scalar& o)
    {
        if (o.is_zero()) throw std::domain_error("division by zero");
        if (o.is_real()) {
            re_ /= o.re_;
            if (!is_real()) im_ /= o.re_;
            return *this;
        }
        mpq_class n = o.norm();
        *this *= o.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical text form: "p", "p/q", or "<re>+<im>i" / "<re>-<im>i".
    std::string to_string() const
    {
        std::string s = re_.get_str();
        if (is_real()) return s;
        s += sgn(im_) < 0 ? '-' : '+';
        s += mpq_class(abs(im_)).get_str();
        s += 'i';
        return s;
    }

    // Accepts "p", "p/q", "p/q+r/si", "r/si", "i", "-i", with optional signs.
    static std::optional<Scalar> parse(std::string_view text)
    {
        std::string compact;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
        std::string_view s(compact);
        if (s.empty()) return std::nullopt;
        if (s.back() != 'i') {
            auto re = detail::parse_rational(s, false);
            if (!re) return std::nullopt;
            return Scalar(*re);
        }
        s.remove_suffix(1);
        // The imaginary part starts at the last sign that is not the leading one.
        std::size_t split = std::string_view::npos;
        for (std::size_t k = s.size(); k-- > 1;) {
            if (s[k] == '+' || s[k] == '-') {
                split = k;
                break;
            }
        }
        if (split == std::string_view::npos) {
            auto im = detail::parse_rational(s, true);
            if (!im) return std::nullopt;
            return Scalar(0, *im);
        }
        auto re = detail::parse_rational(s.substr(0, split), false);
        auto im = detail::parse_rational(s.substr(split), true);
        if (!re || !im) return std::nullopt;
        return Scalar(*re, *im);
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline Scalar conj(const Scalar& s) { return s.conj(); }
inline bool is_zero(const Scalar& s) { return s.is_zero(); }

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// Exact square root in Q(i), when one exists.
inline std::optional<Scalar> exact_sqrt(const Scalar& s)
{
    if (s.is_real()) {
        if (sgn(s.re()) >= 0) {
            if (auto r = detail::rational_sqrt(s.re())) return Scalar(*r);
            return std::nullopt;
        }
        if (auto r = detail::rational_sqrt(-s.re())) return Scalar(0, *r);
        return std::nullopt;
    }
    // (x + yi)^2 = a + bi  =>  x^2 = (a + |s|)/2, y = b / (2x).
    auto modulus = detail::rational_sqrt(s.norm());
    if (!modulus) return std::nullopt;
    auto x = detail::rational_sqrt((s.re() + *modulus) / 2);
    if (!x || sgn(*x) == 0) return std::nullopt;
    mpq_class y = s.im() / (2 * *x);
    Scalar root(*x, y);
    if (root * root != s) return std::nullopt;
    return root;
}

} // namespace burnside
