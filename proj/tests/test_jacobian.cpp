#include <gtest/gtest.h>

#include "support.hpp"

using namespace jacprof;
using namespace testing_support;

namespace {

Poly genus2_f() { return Poly({q(-1, 2), q(0), q(1), q(-1), q(-1, 2), q(1)}); }

/* chord and tangent on y^2 = x^3 + a x + b */
AffinePoint chord(const FieldElement& a, const AffinePoint& p1, const AffinePoint& p2)
{
    FieldElement lam = p1.x == p2.x ? (q(3) * p1.x * p1.x + a) / (q(2) * p1.y) : (p2.y - p1.y) / (p2.x - p1.x);
    FieldElement x3 = lam * lam - p1.x - p2.x;
    return {x3, lam * (p1.x - x3) - p1.y};
}

} // namespace

TEST(Jacobian, Reducedness)
{
    HyperellipticCurve C(2, genus2_f());
    EXPECT_TRUE(is_reduced(C, MumfordDivisor::identity()));
    EXPECT_TRUE(MumfordDivisor::identity().is_identity());
    MumfordDivisor big{P({-1, 1}) * P({-2, 1}) * P({-3, 1}), Poly()};
    EXPECT_FALSE(is_reduced(C, big));
    AffinePoint p{q(0), fe("1/2*sqrt(-2)")};
    MumfordDivisor D2 = point_power_divisor(C, p, 2);
    EXPECT_EQ(D2.u, Poly::monomial(2));
    EXPECT_TRUE(is_valid(C, D2));
    EXPECT_TRUE(is_reduced(C, D2));
    EXPECT_KIND(cantor_step(C, D2), ErrorKind::AlreadyReduced);
}

TEST(Jacobian, SixTorsionClass)
{
    HyperellipticCurve C(2, genus2_f());
    AffinePoint p{q(0), fe("1/2*sqrt(-2)")};
    MumfordDivisor D6 = point_power_divisor(C, p, 6);
    auto red = reduce_counted(C, D6);
    EXPECT_TRUE(red.result.is_identity());
    EXPECT_LE(red.steps, 1);
    EXPECT_TRUE(scalar_mul_point(C, p, 6).is_identity());
    EXPECT_EQ(torsion_order(C, p, 20), std::optional<int>(6));
    EXPECT_FALSE(torsion_order(C, p, 5).has_value());
}

TEST(Jacobian, OneStepDegreeDrop)
{
    HyperellipticCurve C(2, genus2_f());
    AffinePoint p{q(0), fe("1/2*sqrt(-2)")};
    MumfordDivisor D3 = point_power_divisor(C, p, 3);
    MumfordDivisor D1 = cantor_step(C, D3);
    EXPECT_EQ(D1.degree(), 2);
}

TEST(Jacobian, SmallTorsionOneStep)
{
    /* f = x^5 + (x^2 + 1)^2 */
    Poly v0 = P({1, 0, 1});
    HyperellipticCurve C(2, Poly::monomial(5) + v0 * v0);
    MumfordDivisor D{Poly::monomial(5), v0};
    ASSERT_TRUE(is_valid(C, D));
    auto red = reduce_counted(C, D);
    EXPECT_EQ(red.steps, 1);
    EXPECT_TRUE(red.result.is_identity());
    EXPECT_EQ(torsion_order(C, {q(0), q(1)}, 10), std::optional<int>(5));
}

TEST(Jacobian, ScalarMultiplesTrivial)
{
    HyperellipticCurve C(2, genus2_f());
    AffinePoint p{q(0), fe("1/2*sqrt(-2)")};
    EXPECT_TRUE(scalar_mul_point(C, p, 0).is_identity());
    MumfordDivisor one = scalar_mul_point(C, p, 1);
    EXPECT_EQ(one.u, P({0, 1}));
    EXPECT_EQ(one.v, Poly(p.y));
    EXPECT_KIND(scalar_mul_point(C, p, -1), ErrorKind::InvalidArgument);
    HyperellipticCurve W(1, P({0, -1, 0, 1}));
    EXPECT_EQ(torsion_order(W, {q(-1), q(0)}, 10), std::optional<int>(2));
}

TEST(Jacobian, AgreesWithChordTangent)
{
    /* y^2 = x^3 - x + 1 */
    FieldElement a = q(-1);
    HyperellipticCurve E(1, P({1, -1, 0, 1}));
    AffinePoint p{q(1), q(1)}, r{q(0), q(1)};
    MumfordDivisor Dp = point_divisor(E, p), Dr = point_divisor(E, r);
    AffinePoint sum = chord(a, p, r);
    MumfordDivisor S = add(E, Dp, Dr);
    EXPECT_EQ(S.u, P({0, 1}) - Poly(sum.x));
    EXPECT_EQ(S.v, Poly(sum.y));
    AffinePoint dbl = chord(a, p, p);
    MumfordDivisor T = add(E, Dp, Dp);
    EXPECT_EQ(T.u, P({0, 1}) - Poly(dbl.x));
    EXPECT_EQ(T.v, Poly(dbl.y));
    /* several more multiples */
    AffinePoint acc = p;
    for (int k = 2; k <= 6; ++k) {
        acc = chord(a, acc, p);
        MumfordDivisor M = scalar_mul_point(E, p, k);
        EXPECT_EQ(M.u, P({0, 1}) - Poly(acc.x)) << k;
        EXPECT_EQ(M.v, Poly(acc.y)) << k;
        EXPECT_EQ(multiple(E, Dp, k), M);
    }
}

TEST(Jacobian, NegationAndInverse)
{
    HyperellipticCurve C(2, genus2_f());
    AffinePoint p{q(0), fe("1/2*sqrt(-2)")};
    MumfordDivisor D = scalar_mul_point(C, p, 2);
    EXPECT_TRUE(add(C, D, neg(C, D)).is_identity());
    EXPECT_EQ(neg(C, point_divisor(C, p)), point_divisor(C, C.involution(p)));
    EXPECT_EQ(multiple(C, point_divisor(C, p), -2), neg(C, D));
}
