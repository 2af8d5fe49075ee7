#ifndef JACPROF_RSPACE_HPP
#define JACPROF_RSPACE_HPP

#include <string>
#include <vector>

#include "curve.hpp"

namespace jacprof {

/* coefficients a_0 .. a_{N-1} of a square root of f */
struct RPoint {
    int gamma = 1;
    int N = 1;
    std::vector<FieldElement> a;

    RPoint(int g, int n, std::vector<FieldElement> coeffs) : gamma(g), N(n), a(std::move(coeffs))
    {
        if (gamma < 1 || N < 1 || static_cast<int>(a.size()) != N)
            fail(ErrorKind::InvalidArgument, "R_N point needs gamma >= 1 and exactly N coefficients");
        if (a[0].is_zero())
            fail(ErrorKind::InvalidArgument, "a_0 must be nonzero");
    }
};

inline RPoint rpoint_from_curve(const HyperellipticCurve& C, const AffinePoint& p, int N)
{
    return RPoint(C.gamma(), N, local_series(C, p, N).coeffs());
}

/* a_k for k >= N forced by the vanishing of the k-th convolution */
inline std::vector<FieldElement> extend_coefficients(const RPoint& pt, int length)
{
    std::vector<FieldElement> a = pt.a;
    FieldElement inv = FieldElement(1) / (FieldElement(2) * a[0]);
    for (int k = pt.N; k < length; ++k) {
        FieldElement acc;
        for (int i = 1; i < k; ++i)
            acc += a[i] * a[k - i];
        a.push_back(-acc * inv);
    }
    return a;
}

inline FieldElement convolution(const std::vector<FieldElement>& a, int k, int limit)
{
    FieldElement acc;
    for (int i = 0; i <= k; ++i)
        if (i < limit && k - i < limit)
            acc += a[i] * a[k - i];
    return acc;
}

inline HankelSpec torsion_matrix_spec(int gamma, int N)
{
    if (N % 2 == 0)
        return {gamma + 2, N / 2 - 1, N / 2 - gamma};
    return {gamma + 1, (N - 1) / 2, (N + 1) / 2 - gamma};
}

struct AdmissibilityReport {
    bool polynomiality = false;
    bool degree = false;
    bool separability = false;
    bool torsionness = false;
    Poly f;

    bool all() const { return polynomiality && degree && separability && torsionness; }
};

inline AdmissibilityReport check_admissibility(const RPoint& pt)
{
    AdmissibilityReport r;
    const int g = pt.gamma, N = pt.N;
    int len = std::max(N, 2 * g + 2);
    auto a = extend_coefficients(pt, len);
    r.polynomiality = true;
    for (int k = 2 * g + 2; k <= N - 1; ++k)
        if (!convolution(a, k, N).is_zero())
            r.polynomiality = false;
    std::vector<FieldElement> fc;
    for (int k = 0; k <= 2 * g + 1; ++k)
        fc.push_back(convolution(a, k, len));
    r.f = Poly(fc);
    r.degree = !r.f.coeff(2 * g + 1).is_zero();
    r.separability = r.f.degree() >= 1 && is_separable(r.f);
    HankelSpec spec = torsion_matrix_spec(g, N);
    if (spec.rows >= 1 && spec.cols >= 1)
        r.torsionness = hankel_rank_deficient(Series(std::vector<FieldElement>(a.begin(), a.begin() + N), N), spec);
    return r;
}

struct GeneratorValue {
    std::string name;
    FieldElement value;
    bool vanishes() const { return value.is_zero(); }
};

/* 1-based rows l and columns c of M_N */
inline FieldElement torsion_matrix_entry(const RPoint& pt, int l, int c)
{
    HankelSpec s = torsion_matrix_spec(pt.gamma, pt.N);
    return pt.a.at(s.start + (l - 1) + (c - 1));
}

inline FieldElement minor2(const RPoint& pt, int l1, int l2, int c1, int c2)
{
    return torsion_matrix_entry(pt, l1, c1) * torsion_matrix_entry(pt, l2, c2)
        - torsion_matrix_entry(pt, l1, c2) * torsion_matrix_entry(pt, l2, c1);
}

/* conjectural generators of the component ideal I_component, evaluated at pt */
inline std::vector<GeneratorValue> eval_conjecture_generators(const RPoint& pt, int component)
{
    const int g = pt.gamma, N = pt.N;
    const bool n4 = N == 2 * g + 4, n6 = N == 2 * g + 6;
    if (!n4 && !n6)
        fail(ErrorKind::UnsupportedN, "generators are listed only for N = 2 gamma + 4 and 2 gamma + 6");
    if (component < 1 || component > (n4 ? 2 : 3))
        fail(ErrorKind::InvalidArgument, "no such component");
    auto x = [&](int i) { return pt.a.at(i); };
    std::vector<GeneratorValue> out;
    for (int k = 2 * g + 2; k <= N - 1; ++k)
        out.push_back({"poly_quadric_k" + std::to_string(k), convolution(pt.a, k, N)});
    HankelSpec s = torsion_matrix_spec(g, N);
    const int rows = s.rows;
    /* maximal minors: 2x2 for 2g+4, 3x3 for 2g+6 */
    if (n4) {
        for (int l1 = 1; l1 <= rows; ++l1)
            for (int l2 = l1 + 1; l2 <= rows; ++l2)
                out.push_back({"minor_" + std::to_string(l1) + "_" + std::to_string(l2), minor2(pt, l1, l2, 1, 2)});
    } else {
        for (int l1 = 1; l1 <= rows; ++l1)
            for (int l2 = l1 + 1; l2 <= rows; ++l2)
                for (int l3 = l2 + 1; l3 <= rows; ++l3) {
                    Matrix m = zero_matrix(3, 3);
                    int ls[3] = {l1, l2, l3};
                    for (int i = 0; i < 3; ++i)
                        for (int c = 0; c < 3; ++c)
                            m[i][c] = torsion_matrix_entry(pt, ls[i], c + 1);
                    out.push_back({"minor_" + std::to_string(l1) + "_" + std::to_string(l2) + "_" + std::to_string(l3), determinant(m)});
                }
    }
    auto pair_name = [](const char* tag, int l1, int l2) {
        return std::string(tag) + "_" + std::to_string(l1) + "_" + std::to_string(l2);
    };
    if (n4 && component == 1) {
        for (int j = g + 3; j <= 2 * g + 3; ++j) {
            int m = (g + 1 + j) / 2;
            out.push_back({"quadric_j" + std::to_string(j), FieldElement(2) * x(m) * x(m + 1) - x(g + 1) * x(j)});
        }
    }
    if (n4 && component == 2)
        out.push_back({"x_" + std::to_string(g + 2), x(g + 2)});
    if (n6 && component == 1) {
        for (int l1 = 1; l1 <= rows; ++l1)
            for (int l2 = l1 + 1; l2 <= rows; ++l2)
                out.push_back({pair_name("cubic", l1, l2),
                               FieldElement(-2) * x(g + 3) * minor2(pt, l1, l2, 1, 2) + x(g + 2) * minor2(pt, l1, l2, 1, 3)});
    }
    if (n6 && component == 2) {
        for (int l1 = 2; l1 <= rows; ++l1)
            for (int l2 = l1 + 1; l2 <= rows; ++l2)
                out.push_back({pair_name("cubic", l1, l2),
                               FieldElement(2) * x(g + 3) * minor2(pt, l1, l2, 1, 2) + x(g + 1) * minor2(pt, l1, l2, 2, 3)});
        for (int j = g + 3; j <= 2 * g + 3; ++j)
            out.push_back({"cubic_j" + std::to_string(j),
                           FieldElement(2) * x(g + 3) * (x(g + 1) * x(j + 2) - x(g + 3) * x(j))
                               - x(g + 1) * (x(g + 4) * x(j + 1) + x(g + 3) * x(j + 2))});
        out.push_back({"x_" + std::to_string(g + 2), x(g + 2)});
    }
    if (n6 && component == 3) {
        out.push_back({"x_" + std::to_string(g + 1), x(g + 1)});
        out.push_back({"x_" + std::to_string(g + 2), x(g + 2)});
    }
    return out;
}

} // namespace jacprof

#endif
