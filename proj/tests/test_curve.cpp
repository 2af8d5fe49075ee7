#include <gtest/gtest.h>

#include "support.hpp"

using namespace jacprof;
using namespace testing_support;

namespace {

Poly genus2_f() { return Poly({q(-1, 2), q(0), q(1), q(-1), q(-1, 2), q(1)}); }

} // namespace

TEST(Curve, Construction)
{
    EXPECT_NO_THROW(HyperellipticCurve(2, genus2_f()));
    EXPECT_NO_THROW(HyperellipticCurve(1, P({0, -1, 0, 1})));
    EXPECT_KIND(HyperellipticCurve(2, Poly::monomial(5)), ErrorKind::Inseparable);
    EXPECT_KIND(HyperellipticCurve(2, P({0, -1, 0, 1})), ErrorKind::WrongDegree);
    EXPECT_KIND(HyperellipticCurve(1, P({0, -1, 0, 2})), ErrorKind::NotMonic);
}

TEST(Curve, EvenSExpansion)
{
    /* -(1/2)[(x^3 - x^2 + 1)^2 - x^6] */
    Poly inner = P({1, 0, -1, 1});
    EXPECT_EQ((inner * inner - Poly::monomial(6)) * q(-1, 2), genus2_f());
    EXPECT_EQ(torsion_even_s(2, 1).curve.f(), genus2_f());
}

TEST(Curve, Involution)
{
    HyperellipticCurve E(1, P({4, 0, 0, 1}));
    EXPECT_EQ(E.involution({q(0), q(2)}), (AffinePoint{q(0), q(-2)}));
    HyperellipticCurve W(1, P({0, -1, 0, 1}));
    AffinePoint w{q(1), q(0)};
    EXPECT_EQ(W.involution(w), w);
    EXPECT_TRUE(W.is_weierstrass(w));
    HyperellipticCurve C(2, genus2_f());
    AffinePoint p{q(0), fe("1/2*sqrt(-2)")};
    AffinePoint ip = C.involution(p);
    EXPECT_EQ(ip.y, fe("-1/2*sqrt(-2)"));
    EXPECT_TRUE(C.contains(p));
    EXPECT_TRUE(C.contains(ip));
    EXPECT_FALSE(C.is_weierstrass(p));
    EXPECT_KIND(C.require({q(0), q(1)}), ErrorKind::PointNotOnCurve);
}

TEST(Curve, CompletingTheSquare)
{
    auto [C, map] = from_h_form(1, Poly(), P({1, 0, 0, 1}));
    EXPECT_EQ(C.f(), P({1, 0, 0, 1}));
    EXPECT_EQ(map({q(0), q(1)}), (AffinePoint{q(0), q(1)}));
    /* y^2 + 2y = x^3 + 3 gives Y^2 = x^3 + 4; with x^3 - 1 it degenerates to Y^2 = x^3 */
    auto [D, m2] = from_h_form(1, P({2}), P({3, 0, 0, 1}));
    EXPECT_EQ(D.f(), P({4, 0, 0, 1}));
    EXPECT_EQ(m2({q(1), q(0)}), (AffinePoint{q(1), q(1)}));
    EXPECT_KIND(from_h_form(1, P({2}), P({-1, 0, 0, 1})), ErrorKind::Inseparable);
    EXPECT_KIND(from_h_form(1, P({0, 0, 2}), P({0, 0, 0, 1})), ErrorKind::DegreeMismatch);
}

TEST(Curve, LocalSeries)
{
    HyperellipticCurve C(2, genus2_f());
    AffinePoint p{q(0), fe("1/2*sqrt(-2)")};
    Series s = local_series(C, p, 12);
    Poly r = s.truncated(12);
    EXPECT_EQ((r * r).truncate(12), C.f().truncate(12));
    HyperellipticCurve W(1, P({0, -1, 0, 1}));
    EXPECT_KIND(local_series(W, {q(0), q(0)}, 4), ErrorKind::BadBranch);
}

TEST(Curve, FlynnSeriesConstants)
{
    for (auto [r, g] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {4, 3}, {4, 4}, {5, 4}}) {
        Construction K = flynn_curve(g, r, Poly(1));
        Series a = h_model_series(K, g + 3);
        EXPECT_EQ(a[g], q(2)) << r << "," << g;
        EXPECT_EQ(a[g + 1], q(1)) << r << "," << g;
        EXPECT_EQ(a[g + 2], q(-1, 4)) << r << "," << g;
    }
}
