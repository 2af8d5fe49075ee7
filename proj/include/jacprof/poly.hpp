#ifndef JACPROF_POLY_HPP
#define JACPROF_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "exactfield.hpp"
#include "linalg.hpp"

namespace jacprof {

/* dense, lowest degree first */
class Poly {
public:
    Poly() = default;
    Poly(const FieldElement& c) : c_{c} { trim(); }
    Poly(long c) : c_{FieldElement(c)} { trim(); }
    Poly(int c) : c_{FieldElement(c)} { trim(); }
    explicit Poly(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<FieldElement> coeffs) : c_(coeffs) { trim(); }

    static Poly x() { return monomial(1); }
    static Poly monomial(int k, const FieldElement& coef = FieldElement(1))
    {
        std::vector<FieldElement> c(k + 1);
        c[k] = coef;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement coeff(int i) const
    {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return FieldElement();
        return c_[i];
    }
    FieldElement leading() const { return c_.empty() ? FieldElement() : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == FieldElement(1); }

    Poly monic() const
    {
        if (is_zero())
            return *this;
        return *this * (FieldElement(1) / leading());
    }

    friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& c : r.c_)
            c = -c;
        return r;
    }

    friend Poly operator+(const Poly& p, const Poly& q)
    {
        std::vector<FieldElement> c(std::max(p.c_.size(), q.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < p.c_.size())
                c[i] += p.c_[i];
            if (i < q.c_.size())
                c[i] += q.c_[i];
        }
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

    friend Poly operator*(const Poly& p, const Poly& q)
    {
        if (p.is_zero() || q.is_zero())
            return Poly();
        std::vector<FieldElement> c(p.c_.size() + q.c_.size() - 1);
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (p.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < q.c_.size(); ++j)
                c[i + j] += p.c_[i] * q.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& p, const FieldElement& s)
    {
        if (s.is_zero())
            return Poly();
        Poly r = p;
        for (auto& c : r.c_)
            c *= s;
        r.trim();
        return r;
    }
    friend Poly operator*(const FieldElement& s, const Poly& p) { return p * s; }

    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    FieldElement operator()(const FieldElement& t) const
    {
        FieldElement acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * t + *it;
        return acc;
    }

    Poly derivative() const
    {
        std::vector<FieldElement> c;
        for (std::size_t i = 1; i < c_.size(); ++i)
            c.push_back(c_[i] * FieldElement(static_cast<long>(i)));
        return Poly(std::move(c));
    }

    /* p(x + a) */
    Poly shift(const FieldElement& a) const
    {
        Poly lin{a, FieldElement(1)};
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * lin + Poly(*it);
        return acc;
    }

    Poly pow(int e) const
    {
        Poly r(1), b = *this;
        while (e > 0) {
            if (e & 1)
                r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /* first k coefficients */
    Poly truncate(int k) const
    {
        std::vector<FieldElement> c(c_.begin(), c_.begin() + std::min<std::size_t>(std::max(k, 0), c_.size()));
        return Poly(std::move(c));
    }

    std::string str() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const FieldElement& c = c_[i];
            if (c.is_zero())
                continue;
            std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
            if (!c.is_rational()) {
                s += (s.empty() ? "" : "+") + ("(" + c.str() + ")") + (mono.empty() ? "" : "*" + mono);
                continue;
            }
            Rational r = c.rational_part();
            bool neg = sgn(r) < 0;
            Rational m = abs(r);
            if (neg)
                s += "-";
            else if (!s.empty())
                s += "+";
            if (mono.empty())
                s += m.get_str();
            else if (m == 1)
                s += mono;
            else
                s += m.get_str() + "*" + mono;
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<FieldElement> c_;
};

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        fail(ErrorKind::ZeroPolynomial, "polynomial division by zero");
    std::vector<FieldElement> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db)
        return {Poly(), a};
    std::vector<FieldElement> q(a.degree() - db + 1);
    FieldElement inv = FieldElement(1) / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i].is_zero())
            continue;
        FieldElement t = r[i] * inv;
        q[i - db] = t;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= t * b.coeff(j);
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

/* a / b, requiring zero remainder */
inline Poly exact_div(const Poly& a, const Poly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        fail(ErrorKind::InternalMismatch, "inexact polynomial division");
    return q;
}

inline Poly poly_gcd(Poly f, Poly g)
{
    if (f.is_zero() && g.is_zero())
        fail(ErrorKind::ZeroPolynomial, "gcd(0, 0)");
    while (!g.is_zero()) {
        Poly r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

struct ExtGcd {
    Poly g, s, t; /* g = s f + t h, g monic */
};

inline ExtGcd ext_gcd(const Poly& f, const Poly& h)
{
    if (f.is_zero() && h.is_zero())
        fail(ErrorKind::ZeroPolynomial, "gcd(0, 0)");
    Poly r0 = f, r1 = h, s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    FieldElement inv = FieldElement(1) / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

/* the (2n-1)x(2n-1) Sylvester matrix of f and f' */
inline Matrix sylvester_matrix(const Poly& f)
{
    if (f.is_zero())
        fail(ErrorKind::ZeroPolynomial, "Sylvester matrix of zero");
    const int n = f.degree();
    if (n < 1)
        fail(ErrorKind::WrongDegree, "Sylvester matrix needs degree >= 1");
    const int size = 2 * n - 1;
    Matrix m = zero_matrix(size, size);
    for (int col = 0; col < n - 1; ++col)
        for (int k = 0; k <= n; ++k)
            m[col + k][col] = f.coeff(n - k);
    for (int col = 0; col < n; ++col)
        for (int k = 0; k < n; ++k)
            m[col + k][n - 1 + col] = f.coeff(n - k) * FieldElement(static_cast<long>(n - k));
    return m;
}

inline FieldElement sylvester_det(const Poly& f)
{
    return determinant(sylvester_matrix(f));
}

inline bool is_separable(const Poly& f)
{
    bool by_det = !sylvester_det(f).is_zero();
    bool by_gcd = poly_gcd(f, f.derivative()).degree() == 0;
    if (by_det != by_gcd)
        fail(ErrorKind::InternalMismatch, "Sylvester and gcd separability disagree");
    return by_det;
}

/* truncated power series: coefficients a_0 .. a_{order-1} */
class Series {
public:
    Series() = default;
    Series(std::vector<FieldElement> coeffs, int order) : c_(std::move(coeffs)), order_(order)
    {
        if (static_cast<int>(c_.size()) > order_)
            fail(ErrorKind::InvalidArgument, "series prefix longer than its order");
        c_.resize(order_);
    }

    int order() const { return order_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    const FieldElement& operator[](int i) const
    {
        if (i < 0 || i >= order_)
            fail(ErrorKind::InsufficientPrecision,
                 "series coefficient " + std::to_string(i) + " beyond order " + std::to_string(order_));
        return c_[i];
    }
    Poly truncated(int k) const
    {
        if (k > order_)
            fail(ErrorKind::InsufficientPrecision, "truncation beyond series order");
        return Poly(std::vector<FieldElement>(c_.begin(), c_.begin() + std::max(k, 0)));
    }

private:
    std::vector<FieldElement> c_;
    int order_ = 0;
};

inline Series series_sqrt(const Poly& f, const FieldElement& branch, int order)
{
    if (branch * branch != f.coeff(0))
        fail(ErrorKind::BadBranch, "branch squared is not f(0)");
    if (branch.is_zero())
        fail(ErrorKind::BadBranch, "f(0) = 0 has no invertible square root");
    std::vector<FieldElement> a;
    a.reserve(order);
    FieldElement inv2a0 = FieldElement(1) / (FieldElement(2) * branch);
    for (int k = 0; k < order; ++k) {
        if (k == 0) {
            a.push_back(branch);
            continue;
        }
        FieldElement acc = f.coeff(k);
        for (int i = 1; i < k; ++i)
            acc -= a[i] * a[k - i];
        a.push_back(acc * inv2a0);
    }
    return Series(std::move(a), order);
}

struct HankelSpec {
    int start = 0;
    int rows = 1;
    int cols = 1;
};

inline Matrix hankel_matrix(const Series& s, const HankelSpec& spec)
{
    if (spec.rows < 1 || spec.cols < 1)
        fail(ErrorKind::InvalidArgument, "Hankel block needs rows, cols >= 1");
    if (spec.start + spec.rows + spec.cols - 2 >= s.order())
        fail(ErrorKind::InsufficientPrecision, "series too short for Hankel block");
    Matrix m = zero_matrix(spec.rows, spec.cols);
    for (int i = 0; i < spec.rows; ++i)
        for (int j = 0; j < spec.cols; ++j)
            m[i][j] = s[spec.start + i + j];
    return m;
}

inline FieldElement hankel_det(const Series& s, const HankelSpec& spec)
{
    if (spec.rows != spec.cols)
        fail(ErrorKind::InvalidArgument, "determinant of a non-square Hankel block");
    return determinant(hankel_matrix(s, spec));
}

inline bool hankel_rank_deficient(const Series& s, const HankelSpec& spec)
{
    return rank(hankel_matrix(s, spec)) < static_cast<std::size_t>(std::min(spec.rows, spec.cols));
}

} // namespace jacprof

#endif
