#ifndef JACPROF_JACOBIAN_HPP
#define JACPROF_JACOBIAN_HPP

#include <optional>
#include <string>

#include "curve.hpp"

namespace jacprof {

/* class of div(u, v) - (deg u) q */
struct MumfordDivisor {
    Poly u = Poly(1);
    Poly v;

    static MumfordDivisor identity() { return {}; }
    int degree() const { return u.degree(); }
    bool is_identity() const { return u.degree() == 0 && v.is_zero(); }
    bool operator==(const MumfordDivisor&) const = default;
};

inline bool is_valid(const HyperellipticCurve& C, const MumfordDivisor& D)
{
    if (D.u.is_zero() || !D.u.is_monic())
        return false;
    if (D.v.degree() >= D.u.degree())
        return false;
    return (C.f() - D.v * D.v) % D.u == Poly();
}

inline void check_valid(const HyperellipticCurve& C, const MumfordDivisor& D, const char* where)
{
    if (!is_valid(C, D))
        fail(ErrorKind::InternalMismatch, std::string("Mumford conditions violated after ") + where);
}

inline bool is_reduced(const HyperellipticCurve& C, const MumfordDivisor& D)
{
    return D.u.degree() <= C.gamma();
}

inline MumfordDivisor cantor_step(const HyperellipticCurve& C, const MumfordDivisor& D)
{
    if (is_reduced(C, D))
        fail(ErrorKind::AlreadyReduced, "deg u <= gamma");
    Poly u1 = exact_div(C.f() - D.v * D.v, D.u).monic();
    Poly v1 = (-D.v) % u1;
    MumfordDivisor out{u1, v1};
    check_valid(C, out, "cantor_step");
    return out;
}

struct Reduction {
    MumfordDivisor result;
    int steps = 0;
};

inline Reduction reduce_counted(const HyperellipticCurve& C, MumfordDivisor D)
{
    int steps = 0;
    while (!is_reduced(C, D)) {
        D = cantor_step(C, D);
        ++steps;
    }
    return {std::move(D), steps};
}

inline MumfordDivisor reduce(const HyperellipticCurve& C, const MumfordDivisor& D)
{
    return reduce_counted(C, D).result;
}

/* unreduced composition via extended gcds */
inline MumfordDivisor compose(const HyperellipticCurve& C, const MumfordDivisor& D1, const MumfordDivisor& D2)
{
    ExtGcd g1 = ext_gcd(D1.u, D2.u);
    ExtGcd g2 = ext_gcd(g1.g, D1.v + D2.v);
    const Poly& d = g2.g;
    Poly s1 = g2.s * g1.s, s2 = g2.s * g1.t, s3 = g2.t;
    Poly u = exact_div(D1.u * D2.u, d * d);
    Poly num = s1 * D1.u * D2.v + s2 * D2.u * D1.v + s3 * (D1.v * D2.v + C.f());
    Poly v = exact_div(num, d) % u;
    MumfordDivisor out{u.monic(), v};
    check_valid(C, out, "compose");
    return out;
}

inline MumfordDivisor add(const HyperellipticCurve& C, const MumfordDivisor& D1, const MumfordDivisor& D2)
{
    return reduce(C, compose(C, D1, D2));
}

inline MumfordDivisor neg(const HyperellipticCurve& C, const MumfordDivisor& D)
{
    MumfordDivisor out{D.u, (-D.v) % D.u};
    check_valid(C, out, "neg");
    return out;
}

/* reduced form of n * D by double-and-add */
inline MumfordDivisor multiple(const HyperellipticCurve& C, const MumfordDivisor& D, long n)
{
    MumfordDivisor base = n < 0 ? neg(C, D) : reduce(C, D);
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    MumfordDivisor acc;
    while (k) {
        if (k & 1)
            acc = add(C, acc, base);
        k >>= 1;
        if (k)
            base = add(C, base, base);
    }
    return acc;
}

/* p - q */
inline MumfordDivisor point_divisor(const HyperellipticCurve& C, const AffinePoint& p)
{
    C.require(p);
    return {Poly{-p.x, FieldElement(1)}, Poly(p.y)};
}

/* ((x-a)^j, branch series truncated) before reduction */
inline MumfordDivisor point_power_divisor(const HyperellipticCurve& C, const AffinePoint& p, int j)
{
    Series s = local_series(C, p, j);
    Poly lin{-p.x, FieldElement(1)};
    MumfordDivisor D{lin.pow(j), s.truncated(j).shift(-p.x)};
    check_valid(C, D, "series truncation");
    return D;
}

inline MumfordDivisor scalar_mul_point(const HyperellipticCurve& C, const AffinePoint& p, int j)
{
    if (j < 0)
        fail(ErrorKind::InvalidArgument, "negative multiple");
    C.require(p);
    if (j == 0)
        return MumfordDivisor::identity();
    if (p.y.is_zero())
        return multiple(C, point_divisor(C, p), j);
    return reduce(C, point_power_divisor(C, p, j));
}

/* least j <= max_n with j (p - q) = 0; orders 3..2*gamma cannot occur */
inline std::optional<int> torsion_order(const HyperellipticCurve& C, const AffinePoint& p, int max_n)
{
    C.require(p);
    if (p.y.is_zero())
        return max_n >= 2 ? std::optional<int>(2) : std::nullopt;
    for (int j = 1; j <= max_n; ++j) {
        if (j > 2 && j <= 2 * C.gamma())
            continue;
        if (scalar_mul_point(C, p, j).is_identity())
            return j;
    }
    return std::nullopt;
}

} // namespace jacprof

#endif
