#ifndef JACPROF_CONSTRUCTIONS_HPP
#define JACPROF_CONSTRUCTIONS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "profile.hpp"

namespace jacprof {

struct Construction {
    std::string family;
    std::vector<std::pair<std::string, std::string>> params;
    HyperellipticCurve curve;
    AffinePoint point;
    int order = 0;                               /* claimed torsion order */
    std::optional<ProfilePattern> pattern;       /* claimed profile, when the family has one */
    Poly h;                                      /* y^2 + h y = F model, when there is one */
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    long nonzero(long bound)
    {
        long v = 0;
        while (v == 0)
            v = uniform(-bound, bound);
        return v;
    }
    /* k distinct nonzero integers in [-bound, bound] */
    std::vector<long> distinct_nonzero(int k, long bound)
    {
        std::vector<long> out;
        while (static_cast<int>(out.size()) < k) {
            long v = nonzero(bound);
            if (std::find(out.begin(), out.end(), v) == out.end())
                out.push_back(v);
        }
        return out;
    }

private:
    std::mt19937_64 gen_;
};

namespace detail {

inline Poly linear(const FieldElement& root) { return Poly{-root, FieldElement(1)}; }

inline Poly from_roots(const std::vector<long>& roots)
{
    Poly p(1);
    for (long r : roots)
        p *= linear(FieldElement(r));
    return p;
}

inline std::string join(const std::vector<long>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

/* radicand of Q(sqrt(q)), 0 when q is a rational square */
inline long field_for(const Rational& q)
{
    long d = squarefree_part(q);
    return d == 1 ? 0 : d;
}

inline FieldElement root_of(const Rational& q)
{
    return sqrt_exact(FieldElement(q), FieldCtx(field_for(q)));
}

/* descending window with epsilon_from = gamma, up to floor(N/2) */
inline std::vector<int> dip_window(int gamma, int N, int from)
{
    std::vector<int> w;
    for (int r = gamma + 2; r <= N / 2; ++r)
        w.push_back(gamma - (r - from));
    return w;
}

inline FieldElement imag(const Rational& q) { return FieldElement(Rational(0), q, -1); }

inline Poly times_i(const Poly& p)
{
    std::vector<FieldElement> c;
    for (const auto& x : p.coeffs()) {
        if (!x.is_rational())
            fail(ErrorKind::InvalidArgument, "expected rational coefficients");
        c.push_back(imag(x.rational_part()));
    }
    return Poly(c);
}

template <class Build>
Construction retry(int max_tries, Build&& build)
{
    for (int k = 0; k < max_tries; ++k) {
        try {
            return build();
        } catch (const error& e) {
            if (e.kind() != ErrorKind::Inseparable && e.kind() != ErrorKind::InvalidArgument)
                throw;
        }
    }
    fail(ErrorKind::MaxRetriesExceeded, "no admissible parameters after " + std::to_string(max_tries) + " draws");
}

} // namespace detail

/* orders 2g+1, 2g+2, 2g+3 for variants 1, 2, 3 */
inline Construction small_torsion_curve(int gamma, int variant, const FieldElement& a, const Poly& v0, const Poly& v1 = Poly())
{
    Poly X = detail::linear(a);
    Poly f;
    int N = 0;
    switch (variant) {
    case 1:
        if (v0.degree() > gamma)
            fail(ErrorKind::WrongDegree, "variant 1 needs deg v0 <= gamma");
        f = X.pow(2 * gamma + 1) + v0 * v0;
        N = 2 * gamma + 1;
        break;
    case 2:
        if (v0.degree() != gamma + 1)
            fail(ErrorKind::WrongDegree, "variant 2 needs deg v0 = gamma + 1");
        f = X.pow(2 * gamma + 2) + v0 * v0;
        N = 2 * gamma + 2;
        break;
    case 3: {
        if (v0.degree() != 2 * gamma + 2 || v1.degree() > gamma)
            fail(ErrorKind::WrongDegree, "variant 3 needs deg v0 = 2 gamma + 2, deg v1 <= gamma");
        Poly T = X.pow(2 * gamma + 3);
        auto [q, r] = divmod(v0 * v0 - T * v1 * v1, Poly(1) - T);
        if (!r.is_zero())
            fail(ErrorKind::NonPolynomialQuotient, "variant 3 quotient is not a polynomial");
        f = q;
        N = 2 * gamma + 3;
        break;
    }
    default:
        fail(ErrorKind::InvalidArgument, "variant must be 1, 2 or 3");
    }
    if (f.degree() == 2 * gamma + 1 && !f.is_monic())
        fail(ErrorKind::NotMonic, "f is not monic");
    AffinePoint p{a, v0(a)};
    if (p.y.is_zero())
        fail(ErrorKind::InvalidArgument, "v0(a) = 0 puts the point at a Weierstrass point");
    HyperellipticCurve C(gamma, f);
    std::vector<std::pair<std::string, std::string>> params{
        {"gamma", std::to_string(gamma)}, {"variant", std::to_string(variant)}, {"a", a.str()}, {"v0", v0.str()}};
    if (variant == 3)
        params.push_back({"v1", v1.str()});
    return {"SMALL_TORSION_" + std::to_string(variant), params, C, p, N, ProfilePattern{gamma, {}, N}, Poly()};
}

inline Construction sample_small_torsion(int gamma, int variant, Rng& rng, int max_tries = 200)
{
    return detail::retry(max_tries, [&] {
        FieldElement a(rng.uniform(-3, 3));
        auto in_x = [&](const Poly& inX) { return inX.shift(-a); };
        if (variant == 1) {
            std::vector<FieldElement> c;
            for (int i = 0; i <= gamma; ++i)
                c.push_back(FieldElement(rng.uniform(-5, 5)));
            return small_torsion_curve(gamma, 1, a, in_x(Poly(c)));
        }
        if (variant == 2) {
            std::vector<FieldElement> c;
            for (int i = 0; i < gamma; ++i)
                c.push_back(FieldElement(rng.uniform(-5, 5)));
            c.push_back(FieldElement(Rational(-1, 2)));
            c.push_back(FieldElement(1));
            return small_torsion_curve(gamma, 2, a, in_x(detail::times_i(Poly(c))));
        }
        /* w0 + w1 = Q = 1 + X + .. + X^(2g+2) and w1(1) = (2g+3)/2 */
        std::vector<FieldElement> c;
        for (int i = 0; i <= gamma; ++i)
            c.push_back(FieldElement(rng.uniform(-5, 5)));
        Poly w1(c);
        w1 += Poly(FieldElement(Rational(2 * gamma + 3, 2)) - w1(FieldElement(1)));
        std::vector<FieldElement> ones(2 * gamma + 3, FieldElement(1));
        Poly w0 = Poly(ones) - w1;
        return small_torsion_curve(gamma, 3, a, in_x(detail::times_i(w0)), in_x(detail::times_i(w1)));
    });
}

/* order 2g+2s at (0, sqrt(-1/2)) */
inline Construction torsion_even_s(int gamma, int s)
{
    if (gamma < 1 || s < 1 || s > gamma)
        fail(ErrorKind::InvalidArgument, "need 1 <= s <= gamma");
    Poly inner = Poly::monomial(gamma + s) - Poly::monomial(gamma - s + 1) + Poly(1);
    Poly f = (inner * inner - Poly::monomial(2 * (gamma + s))) * FieldElement(Rational(-1, 2));
    HyperellipticCurve C(gamma, f);
    AffinePoint p{FieldElement(0), sqrt_exact(FieldElement(Rational(-1, 2)), FieldCtx(-2))};
    int N = 2 * gamma + 2 * s;
    return {"TORSION_EVEN_S", {{"gamma", std::to_string(gamma)}, {"s", std::to_string(s)}}, C, p, N,
            ProfilePattern{gamma, detail::dip_window(gamma, N, gamma + 1), N}, Poly()};
}

/* order 4g+4-2s; a has s entries, b has g+1-s */
inline Construction torsion2_family(int gamma, int s, const std::vector<long>& a, const std::vector<long>& b)
{
    int r = gamma + 1 - s;
    if (s < 1 || s > gamma || static_cast<int>(a.size()) != s || static_cast<int>(b.size()) != r)
        fail(ErrorKind::InvalidArgument, "torsion2 needs s in [1, gamma], s roots a_i and gamma+1-s roots b_j");
    long sum = 0;
    for (long x : a)
        sum += x;
    for (long x : b)
        sum += 2 * x;
    if (sum == 0)
        fail(ErrorKind::InvalidArgument, "sum a_i + 2 sum b_j vanishes");
    for (long x : a)
        if (x == 0)
            fail(ErrorKind::InvalidArgument, "a_i must be nonzero");
    for (long x : b)
        if (x == 0)
            fail(ErrorKind::InvalidArgument, "b_j must be nonzero");
    Rational c(1, sum);
    c.canonicalize();
    Poly P = detail::from_roots(a), B = detail::from_roots(b);
    Poly f = P * (Poly::monomial(2 * gamma + 2 - s) - P * B * B) * FieldElement(c);
    HyperellipticCurve C(gamma, f);
    FieldElement root = detail::root_of(Rational(-c));
    Poly v = P * B * root;
    int N = 4 * gamma + 4 - 2 * s;
    return {"TORSION2_SR",
            {{"gamma", std::to_string(gamma)}, {"s", std::to_string(s)}, {"r", std::to_string(r)},
             {"a", detail::join(a)}, {"b", detail::join(b)}},
            C, AffinePoint{FieldElement(0), v(FieldElement(0))}, N,
            ProfilePattern{gamma, detail::dip_window(gamma, N, gamma + 2), N}, Poly()};
}

inline Construction sample_torsion2(int gamma, int s, Rng& rng, int max_tries = 200)
{
    return detail::retry(max_tries, [&] {
        auto roots = rng.distinct_nonzero(gamma + 1, 9);
        std::vector<long> a(roots.begin(), roots.begin() + s), b(roots.begin() + s, roots.end());
        return torsion2_family(gamma, s, a, b);
    });
}

/* order 4g+2-2s, 1 <= s <= g-1 */
inline Construction torsion3_family(int gamma, int s, const std::vector<long>& a, long b, const Rational& c)
{
    if (s < 1 || s > gamma - 1 || static_cast<int>(a.size()) != s)
        fail(ErrorKind::InvalidArgument, "torsion3 needs 1 <= s <= gamma-1 and s roots");
    if (b == 0 || sgn(c) == 0)
        fail(ErrorKind::InvalidArgument, "b and c must be nonzero");
    for (long x : a)
        if (x == 0)
            fail(ErrorKind::InvalidArgument, "a_i must be nonzero");
    const int M = 2 * gamma + 1 - s;
    Poly P = detail::from_roots(a), xb = detail::linear(FieldElement(b));
    Poly g = Poly::monomial(M, FieldElement(c)) + P * xb * xb;
    Poly f = P * g * (FieldElement(1) / FieldElement(c));
    HyperellipticCurve C(gamma, f);
    Rational inv = 1 / c;
    Poly v = P * xb * detail::root_of(inv);
    int N = 4 * gamma + 2 - 2 * s;
    return {"TORSION3_S",
            {{"gamma", std::to_string(gamma)}, {"s", std::to_string(s)}, {"a", detail::join(a)},
             {"b", std::to_string(b)}, {"c", c.get_str()}},
            C, AffinePoint{FieldElement(0), v(FieldElement(0))}, N,
            ProfilePattern{gamma, detail::dip_window(gamma, N, gamma + 1), N}, Poly()};
}

inline Construction sample_torsion3(int gamma, int s, Rng& rng, int max_tries = 200)
{
    return detail::retry(max_tries, [&] {
        auto roots = rng.distinct_nonzero(s + 1, 9);
        long b = roots.back();
        roots.pop_back();
        Rational c(rng.nonzero(6), rng.uniform(1, 4));
        c.canonicalize();
        return torsion3_family(gamma, s, roots, b, c);
    });
}

/*
 * order 2g+6: P monic of degree g+1 with 4 e2 = 3 e1^2, b = -e1/2,
 * g(x) = x^(g+3) - P (x-b)^2 of degree g with leading coefficient c, f = P g / c.
 * tail holds the coefficients of x^0 .. x^(g-2) of P.
 */
inline Construction torsion4_family(int gamma, const Rational& e1, const std::vector<long>& tail)
{
    if (gamma < 1 || static_cast<int>(tail.size()) != gamma - 1)
        fail(ErrorKind::InvalidArgument, "torsion4 needs gamma-1 coefficients below x^(gamma-1)");
    if (sgn(e1) == 0)
        fail(ErrorKind::InvalidArgument, "e1 must be nonzero");
    std::vector<FieldElement> pc(gamma + 2);
    pc[gamma + 1] = FieldElement(1);
    pc[gamma] = FieldElement(Rational(-e1));
    Rational e2 = 3 * e1 * e1 / 4;
    e2.canonicalize();
    pc[gamma - 1] = FieldElement(e2);
    for (int i = 0; i + 1 < gamma; ++i)
        pc[i] = FieldElement(tail[i]);
    Poly P(pc);
    if (P.coeff(0).is_zero())
        fail(ErrorKind::InvalidArgument, "P(0) must be nonzero");
    if (!is_separable(P))
        fail(ErrorKind::Inseparable, "P has a repeated root");
    Rational bq = -e1 / 2;
    FieldElement b(bq);
    Poly xb = detail::linear(b);
    Poly g = Poly::monomial(gamma + 3) - P * xb * xb;
    if (g.degree() != gamma)
        fail(ErrorKind::InvalidArgument, "x^(g+3) - P (x-b)^2 does not have degree g");
    FieldElement c = g.leading();
    Poly f = P * g * (FieldElement(1) / c);
    HyperellipticCurve C(gamma, f);
    Rational minus_inv = -1 / c.rational_part();
    Poly v = P * xb * detail::root_of(minus_inv);
    int N = 2 * gamma + 6;
    std::vector<std::pair<std::string, std::string>> params{{"gamma", std::to_string(gamma)}, {"e1", e1.get_str()},
                                                            {"P", P.str()}, {"b", b.str()}, {"c", c.str()}};
    return {"TORSION4", params, C, AffinePoint{FieldElement(0), v(FieldElement(0))}, N,
            ProfilePattern{gamma, {gamma, gamma}, N}, Poly()};
}

inline Construction sample_torsion4(int gamma, Rng& rng, int max_tries = 200)
{
    return detail::retry(max_tries, [&] {
        Rational e1(2 * rng.nonzero(4));
        std::vector<long> tail;
        for (int i = 0; i + 1 < gamma; ++i)
            tail.push_back(rng.uniform(-6, 6));
        return torsion4_family(gamma, e1, tail);
    });
}

/* theta_1 = phi_1 = 1 */
inline std::pair<Poly, Poly> flynn_polys(int r)
{
    if (r < 1)
        fail(ErrorKind::InvalidArgument, "r must be >= 1");
    Poly th(1), ph(1);
    Poly x2{FieldElement(2), FieldElement(1)}, x1{FieldElement(1), FieldElement(1)};
    for (int k = 1; k < r; ++k) {
        Poly nt = x2 * th + Poly(2) * x1 * ph;
        Poly np = Poly(2) * th + x2 * ph;
        th = std::move(nt);
        ph = std::move(np);
    }
    return {th, ph};
}

/* order 2g+2r-1 at the image of (0, 0) */
inline Construction flynn_curve(int gamma, int r, const Poly& w)
{
    if (r < 1)
        fail(ErrorKind::InvalidArgument, "r must be >= 1");
    FieldElement w0 = w(FieldElement(0));
    Rational forbidden = r <= 2 ? Rational(-(1L << (2 * (2 - r)))) : Rational(-1, 1L << (2 * (r - 2)));
    forbidden.canonicalize();
    if (w0.is_zero() || w0 == FieldElement(forbidden))
        fail(ErrorKind::BadW, "w(0) must avoid 0 and -4^(2-r)");
    if (w.degree() > 0 && w.degree() > gamma - 2 * r + 1)
        fail(ErrorKind::BadW, "deg w exceeds gamma - 2r + 1");
    if (r - 1 + w.degree() > gamma)
        fail(ErrorKind::GenusTooSmall, "genus too small for this r and w");
    auto [th, ph] = flynn_polys(r);
    Poly h = ph * w;
    Poly F = Poly::monomial(2 * gamma + 1) + Poly::monomial(2 * gamma) + th * w * Poly::monomial(gamma);
    auto [C, map] = from_h_form(gamma, h, F);
    int N = 2 * gamma + 2 * r - 1;
    std::optional<ProfilePattern> pat;
    if (r <= 5)
        pat = ProfilePattern{gamma, std::vector<int>(std::max(0, N / 2 - gamma - 1), gamma), N};
    return {"FLYNN", {{"gamma", std::to_string(gamma)}, {"r", std::to_string(r)}, {"w", w.str()}}, C,
            map(AffinePoint{FieldElement(0), FieldElement(0)}), N, pat, h};
}

/* order 2g+7 with (eps_{g+2}, eps_{g+3}) = (g-1, g) */
inline Construction flynn_variant(int gamma)
{
    if (gamma < 4)
        fail(ErrorKind::GenusTooSmall, "the variant needs gamma >= 4");
    Poly h = Poly::monomial(3) + Poly(4);
    Poly F = Poly::monomial(2 * gamma + 1) + Poly::monomial(2 * gamma - 2)
        - (Poly::monomial(3, FieldElement(3)) + Poly(4)) * Poly::monomial(gamma - 1);
    auto [C, map] = from_h_form(gamma, h, F);
    int N = 2 * gamma + 7;
    return {"FLYNN_VARIANT", {{"gamma", std::to_string(gamma)}}, C, map(AffinePoint{FieldElement(0), FieldElement(0)}), N,
            ProfilePattern{gamma, {gamma - 1, gamma}, N}, h};
}

/* 2y = sqrt(h^2 + 4F) - h expanded at the marked point, y the coordinate of the h-model */
inline Series h_model_series(const Construction& K, int order)
{
    if (!K.point.x.is_zero())
        fail(ErrorKind::InvalidArgument, "h-model series are taken at x = 0");
    Series Y = local_series(K.curve, K.point, order);
    std::vector<FieldElement> c;
    for (int i = 0; i < order; ++i)
        c.push_back(FieldElement(2) * Y[i] - K.h.coeff(i));
    return Series(c, order);
}

/* random monic f of degree 2g+1 with rational non-Weierstrass points over x = 0 and x = 1 */
struct SampledCurve {
    HyperellipticCurve curve;
    std::vector<AffinePoint> points;
};

inline SampledCurve sample_curve_with_points(int gamma, Rng& rng, int max_tries = 200)
{
    for (int k = 0; k < max_tries; ++k) {
        std::vector<FieldElement> c(2 * gamma + 2);
        c.back() = FieldElement(1);
        long y0 = rng.nonzero(4), y1 = rng.nonzero(4);
        c[0] = FieldElement(y0 * y0);
        long rest = 1 + y0 * y0;
        for (int i = 2; i <= 2 * gamma; ++i) {
            long v = rng.uniform(-5, 5);
            c[i] = FieldElement(v);
            rest += v;
        }
        c[1] = FieldElement(y1 * y1 - rest);
        Poly f(c);
        if (!is_separable(f))
            continue;
        return {HyperellipticCurve(gamma, f), {{FieldElement(0), FieldElement(y0)}, {FieldElement(1), FieldElement(y1)}}};
    }
    fail(ErrorKind::MaxRetriesExceeded, "no separable curve after " + std::to_string(max_tries) + " draws");
}

struct Verification {
    std::optional<int> order;
    MultiplicationProfile via_jacobian;
    MultiplicationProfile via_hankel;
    bool order_ok = false;
    bool methods_agree = false;
    bool profile_ok = true; /* against the claim, when there is one */
};

inline Verification verify_construction(const Construction& K, int max_n = 0)
{
    if (max_n <= 0)
        max_n = K.order;
    Verification out;
    out.order = torsion_order(K.curve, K.point, max_n);
    out.order_ok = out.order && *out.order == K.order;
    int upto = K.order;
    out.via_jacobian = profile_via_jacobian(K.curve, K.point, upto);
    out.via_hankel = profile_via_hankel(K.curve, K.point, upto);
    out.methods_agree = out.via_jacobian == out.via_hankel;
    if (K.pattern)
        out.profile_ok = expand_pattern(*K.pattern, upto) == out.via_jacobian;
    return out;
}

} // namespace jacprof

#endif
