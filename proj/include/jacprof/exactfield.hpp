#ifndef JACPROF_EXACTFIELD_HPP
#define JACPROF_EXACTFIELD_HPP

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace jacprof {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_squarefree(long d)
{
    if (d == 0)
        return false;
    unsigned long n = static_cast<unsigned long>(std::labs(d));
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

/* d = 0 is plain Q */
struct FieldCtx {
    long d = 0;

    FieldCtx() = default;
    explicit FieldCtx(long dd) : d(dd)
    {
        if (d != 0 && (d == 1 || !is_squarefree(d)))
            fail(ErrorKind::InvalidArgument, "field radicand must be square-free and != 1: " + std::to_string(d));
    }
    bool operator==(const FieldCtx&) const = default;
};

inline std::optional<Rational> rational_sqrt(const Rational& q)
{
    if (sgn(q) < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    Rational r(Integer(sqrt(q.get_num())), Integer(sqrt(q.get_den())));
    r.canonicalize();
    return r;
}

/* squarefree s with q = s * r^2, s = 1 when q is a square */
inline long squarefree_part(const Rational& q)
{
    if (sgn(q) == 0)
        fail(ErrorKind::InvalidArgument, "squarefree part of zero");
    Integer n = q.get_num() * q.get_den();
    long sign = sgn(n) < 0 ? -1 : 1;
    n = abs(n);
    Integer out = 1;
    for (unsigned long p = 2; Integer(p) * Integer(p) <= n; ++p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        if (e % 2)
            out *= p;
    }
    out *= n;
    if (!out.fits_slong_p())
        fail(ErrorKind::InvalidArgument, "radicand too large");
    return sign * out.get_si();
}

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(long n) : a_(n) {}
    FieldElement(int n) : a_(n) {}
    FieldElement(const Rational& a) : a_(a) {}
    FieldElement(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d)
    {
        if (sgn(b_) == 0) {
            d_ = 0;
        } else {
            FieldCtx check(d);
            if (d == 0)
                fail(ErrorKind::CtxMismatch, "irrational part over plain Q");
        }
    }

    static FieldElement sqrt_d(long d) { return FieldElement(0, 1, d); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    /* radicand of the irrational part; 0 when the value is rational */
    long radicand() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    friend bool operator==(const FieldElement& x, const FieldElement& y)
    {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    FieldElement operator-() const
    {
        FieldElement r;
        r.a_ = -a_;
        r.b_ = -b_;
        r.d_ = d_;
        return r;
    }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y)
    {
        long d = common(x, y);
        return FieldElement(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y)
    {
        long d = common(x, y);
        return FieldElement(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y)
    {
        long d = common(x, y);
        if (d == 0)
            return FieldElement(Rational(x.a_ * y.a_));
        return FieldElement(x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y)
    {
        if (y.is_zero())
            fail(ErrorKind::DivisionByZero, "division by zero");
        long d = common(x, y);
        if (d == 0)
            return FieldElement(Rational(x.a_ / y.a_));
        Rational n = y.norm();
        FieldElement c = x * y.conjugate();
        return FieldElement(c.a_ / n, c.b_ / n, d);
    }

    FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
    FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
    FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }
    FieldElement& operator/=(const FieldElement& y) { return *this = *this / y; }

    FieldElement conjugate() const
    {
        FieldElement r = *this;
        r.b_ = -r.b_;
        return r;
    }
    Rational norm() const { return a_ * a_ - d_ * b_ * b_; }

    std::string str() const;
    static FieldElement parse(std::string_view text);

private:
    static long common(const FieldElement& x, const FieldElement& y)
    {
        if (x.d_ == 0)
            return y.d_;
        if (y.d_ != 0 && y.d_ != x.d_)
            fail(ErrorKind::CtxMismatch,
                 "sqrt(" + std::to_string(x.d_) + ") and sqrt(" + std::to_string(y.d_) + ") mixed");
        return x.d_;
    }

    Rational a_ = 0;
    Rational b_ = 0;
    long d_ = 0;
};

inline std::string FieldElement::str() const
{
    if (is_rational())
        return a_.get_str();
    std::string rad = "sqrt(" + std::to_string(d_) + ")";
    std::string coef;
    Rational mag = abs(b_);
    std::string body = (mag == 1 ? rad : mag.get_str() + "*" + rad);
    if (sgn(a_) == 0)
        return (sgn(b_) < 0 ? "-" : "") + body;
    return a_.get_str() + (sgn(b_) < 0 ? "-" : "+") + body;
}

namespace detail {

inline Rational parse_rational(std::string_view s)
{
    if (s.empty())
        fail(ErrorKind::InvalidArgument, "empty rational");
    std::string t(s);
    if (t[0] == '+')
        t.erase(0, 1);
    Rational q;
    if (q.set_str(t, 10) != 0 || t.empty() || t.find_first_not_of("-0123456789/") != std::string::npos)
        fail(ErrorKind::InvalidArgument, "bad rational: " + std::string(s));
    if (q.get_den() == 0)
        fail(ErrorKind::DivisionByZero, "zero denominator: " + std::string(s));
    q.canonicalize();
    return q;
}

} // namespace detail

/* accepts "p/q", "p/q+r/s*sqrt(d)", "r/s*sqrt(d)", "-sqrt(d)" */
inline FieldElement FieldElement::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (c != ' ')
            s.push_back(c);
    auto pos = s.find("sqrt(");
    if (pos == std::string::npos)
        return FieldElement(detail::parse_rational(s));
    auto close = s.find(')', pos);
    if (close == std::string::npos || close + 1 != s.size())
        fail(ErrorKind::InvalidArgument, "bad scalar: " + s);
    long d = 0;
    try {
        d = std::stol(s.substr(pos + 5, close - pos - 5));
    } catch (const std::exception&) {
        fail(ErrorKind::InvalidArgument, "bad radicand: " + s);
    }
    std::string head = s.substr(0, pos);
    /* split head into rational part and coefficient of the radical */
    std::string coef = head;
    std::string ratp;
    if (!coef.empty() && coef.back() == '*')
        coef.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < coef.size(); ++i)
        if ((coef[i] == '+' || coef[i] == '-') && coef[i - 1] != '/')
            split = i;
    if (split != std::string::npos) {
        ratp = coef.substr(0, split);
        coef = coef.substr(split);
    }
    Rational b;
    if (coef.empty() || coef == "+")
        b = 1;
    else if (coef == "-")
        b = -1;
    else
        b = detail::parse_rational(coef);
    Rational a = ratp.empty() ? Rational(0) : detail::parse_rational(ratp);
    if (d == 0 || d == 1 || !is_squarefree(d))
        fail(ErrorKind::InvalidArgument, "bad radicand: " + s);
    return FieldElement(a, b, d);
}

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x)
{
    return os << x.str();
}

/* root in Q(sqrt(ctx.d)), if any, with positive rational part (then positive radical part) */
inline std::optional<FieldElement> try_sqrt(const FieldElement& x, FieldCtx ctx = {})
{
    long d = x.radicand() != 0 ? x.radicand() : ctx.d;
    if (x.radicand() != 0 && ctx.d != 0 && ctx.d != x.radicand())
        fail(ErrorKind::CtxMismatch, "sqrt requested in a different extension");
    if (x.is_zero())
        return FieldElement();
    const Rational& a = x.rational_part();
    const Rational& b = x.radical_part();
    if (sgn(b) == 0) {
        if (auto r = rational_sqrt(a))
            return FieldElement(*r);
        if (d == 0)
            return std::nullopt;
        if (auto r = rational_sqrt(Rational(a / d)))
            return FieldElement(Rational(0), *r, d);
        return std::nullopt;
    }
    /* (p + q sqrt d)^2 = a + b sqrt d  =>  p^2 = (a +- sqrt(a^2 - d b^2)) / 2 */
    auto n = rational_sqrt(Rational(a * a - d * b * b));
    if (!n)
        return std::nullopt;
    for (int sign : {1, -1}) {
        Rational p2 = (a + sign * *n) / 2;
        auto p = rational_sqrt(p2);
        if (!p || sgn(*p) == 0)
            continue;
        Rational q = b / (2 * *p);
        return FieldElement(*p, q, d);
    }
    return std::nullopt;
}

inline FieldElement sqrt_exact(const FieldElement& x, FieldCtx ctx = {})
{
    auto r = try_sqrt(x, ctx);
    if (!r)
        fail(ErrorKind::NoSquareRoot, "no square root of " + x.str() + " in Q(sqrt(" + std::to_string(ctx.d) + "))");
    return *r;
}

} // namespace jacprof

#endif
