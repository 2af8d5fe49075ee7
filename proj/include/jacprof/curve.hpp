#ifndef JACPROF_CURVE_HPP
#define JACPROF_CURVE_HPP

#include <string>
#include <utility>

#include "poly.hpp"

namespace jacprof {

struct AffinePoint {
    FieldElement x, y;
    bool operator==(const AffinePoint&) const = default;
};

/* y^2 = f(x), f monic separable of degree 2*gamma+1; q is the point at infinity */
class HyperellipticCurve {
public:
    HyperellipticCurve(int gamma, Poly f) : gamma_(gamma), f_(std::move(f))
    {
        if (gamma_ < 1)
            fail(ErrorKind::InvalidArgument, "genus must be >= 1");
        if (f_.degree() != 2 * gamma_ + 1)
            fail(ErrorKind::WrongDegree, "deg f = " + std::to_string(f_.degree()) + ", expected " + std::to_string(2 * gamma_ + 1));
        if (!f_.is_monic())
            fail(ErrorKind::NotMonic, "f is not monic");
        if (!is_separable(f_))
            fail(ErrorKind::Inseparable, "f has a repeated root");
    }

    int gamma() const { return gamma_; }
    const Poly& f() const { return f_; }

    bool contains(const AffinePoint& p) const { return p.y * p.y == f_(p.x); }

    void require(const AffinePoint& p) const
    {
        if (!contains(p))
            fail(ErrorKind::PointNotOnCurve, "(" + p.x.str() + ", " + p.y.str() + ") is not on the curve");
    }

    AffinePoint involution(const AffinePoint& p) const
    {
        require(p);
        return {p.x, -p.y};
    }

    bool is_weierstrass(const AffinePoint& p) const
    {
        require(p);
        return p.y.is_zero();
    }

private:
    int gamma_;
    Poly f_;
};

/* (x, y) -> (x, y + h(x)/2) */
struct PointMap {
    Poly half_h;
    AffinePoint operator()(const AffinePoint& p) const { return {p.x, p.y + half_h(p.x)}; }
};

/* y^2 + h y = F  becomes  Y^2 = F + h^2/4 with Y = y + h/2 */
inline std::pair<HyperellipticCurve, PointMap> from_h_form(int gamma, const Poly& h, const Poly& F)
{
    Poly half_h = h * (FieldElement(1) / FieldElement(2));
    Poly f = F + half_h * half_h;
    if (f.degree() != 2 * gamma + 1 || !f.is_monic())
        fail(ErrorKind::DegreeMismatch, "F + h^2/4 is not monic of degree 2*gamma+1");
    if (!is_separable(f))
        fail(ErrorKind::Inseparable, "F + h^2/4 has a repeated root");
    return {HyperellipticCurve(gamma, f), PointMap{half_h}};
}

/* local expansion of y at p in the variable x - p.x */
inline Series local_series(const HyperellipticCurve& C, const AffinePoint& p, int order)
{
    C.require(p);
    if (p.y.is_zero())
        fail(ErrorKind::BadBranch, "no local series in x at a Weierstrass point");
    return series_sqrt(C.f().shift(p.x), p.y, order);
}

} // namespace jacprof

#endif
