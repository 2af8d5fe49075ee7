#ifndef JACPROF_SEMIGROUP_HPP
#define JACPROF_SEMIGROUP_HPP

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "jacobian.hpp"

namespace jacprof {

/* N-fold cyclic covers of a genus-gamma curve by a genus-g curve */
struct CoverParams {
    int N = 2;
    int gamma = 1;
    long g = 0;

    CoverParams(int n, int gam, long genus) : N(n), gamma(gam), g(genus)
    {
        if (N < 2)
            fail(ErrorKind::InvalidArgument, "N must be >= 2");
        if (gamma < 0)
            fail(ErrorKind::InvalidArgument, "gamma must be >= 0");
        if (g < static_cast<long>(2 * N - 1) * gamma)
            fail(ErrorKind::InvalidArgument, "need g >= (2N-1) gamma");
        long num = (2 * g - 2) - static_cast<long>(N) * (2 * gamma - 2);
        long den = static_cast<long>(N) * (N - 1);
        if (num <= 0 || num % den)
            fail(ErrorKind::InvalidArgument, "d = " + std::to_string(num) + "/" + std::to_string(den) + " is not a positive integer");
        d_ = num / den;
    }

    long d() const { return d_; }

private:
    long d_ = 0;
};

/* given by its standard basis modulo M; basis[0] = M */
class NumericalSemigroup {
public:
    NumericalSemigroup(long modulus, std::vector<long> basis) : m_(modulus), e_(std::move(basis))
    {
        if (m_ < 1 || static_cast<long>(e_.size()) != m_)
            fail(ErrorKind::InvalidArgument, "standard basis must have one entry per residue");
        if (e_[0] != m_)
            fail(ErrorKind::InvalidArgument, "e_0 must equal the modulus");
        for (long i = 0; i < m_; ++i)
            if (e_[i] <= 0 || e_[i] % m_ != i % m_)
                fail(ErrorKind::InvalidArgument, "e_" + std::to_string(i) + " is not a positive element of its residue class");
        for (long i = 0; i < m_; ++i)
            for (long j = 0; j < m_; ++j)
                if (e_[i] + e_[j] < e_[(i + j) % m_])
                    fail(ErrorKind::InvalidArgument, "basis is not closed under addition at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }

    static NumericalSemigroup from_generators(const std::vector<long>& gens)
    {
        if (gens.empty())
            fail(ErrorKind::InvalidArgument, "no generators");
        long m = *std::min_element(gens.begin(), gens.end());
        long gcd = 0;
        for (long x : gens) {
            if (x <= 0)
                fail(ErrorKind::InvalidArgument, "generators must be positive");
            gcd = std::gcd(gcd, x);
        }
        if (gcd != 1)
            fail(ErrorKind::InvalidArgument, "generators are not coprime");
        /* shortest paths on residues */
        std::vector<long> dist(m, -1);
        using Item = std::pair<long, long>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        pq.push({0, 0});
        while (!pq.empty()) {
            auto [dd, r] = pq.top();
            pq.pop();
            if (dist[r] >= 0)
                continue;
            dist[r] = dd;
            for (long x : gens)
                if (dist[(r + x) % m] < 0)
                    pq.push({dd + x, (r + x) % m});
        }
        dist[0] = m;
        return NumericalSemigroup(m, dist);
    }

    long modulus() const { return m_; }
    const std::vector<long>& basis() const { return e_; }
    long max_basis() const { return *std::max_element(e_.begin(), e_.end()); }

    bool contains(long n) const { return n == 0 || (n > 0 && n >= e_[n % m_]); }

    std::vector<long> gaps() const
    {
        std::vector<long> out;
        for (long n = 1; n < max_basis(); ++n)
            if (!contains(n))
                out.push_back(n);
        return out;
    }
    long genus() const { return static_cast<long>(gaps().size()); }

    bool operator==(const NumericalSemigroup&) const = default;

private:
    long m_;
    std::vector<long> e_;
};

using AVector = std::vector<long>; /* a_1 .. a_{N-1} */

inline std::vector<long> eps_from_avector(const CoverParams& P, const AVector& a)
{
    std::vector<long> eps;
    for (std::size_t j = 0; j < a.size(); ++j)
        eps.push_back(a[j] - static_cast<long>(j + 1) * P.d());
    return eps;
}

inline bool in_box(const CoverParams& P, const AVector& a)
{
    if (static_cast<int>(a.size()) != P.N - 1)
        return false;
    for (int j = 1; j < P.N; ++j)
        if (a[j - 1] < j * P.d() || a[j - 1] > j * P.d() + P.gamma)
            return false;
    return true;
}

inline bool in_feasible(const CoverParams& P, const AVector& a)
{
    if (!in_box(P, a))
        return false;
    for (int i = 1; i < P.N; ++i)
        for (int j = 1; i + j < P.N; ++j)
            if (a[i + j - 1] > a[i - 1] + a[j - 1])
                return false;
    return true;
}

inline NumericalSemigroup semigroup_from_avector(const CoverParams& P, const AVector& a)
{
    if (P.gamma < 1)
        fail(ErrorKind::InvalidArgument, "semigroups need gamma >= 1");
    if (!in_box(P, a))
        fail(ErrorKind::InfeasibleAVector, "a-vector outside the box of admissible values");
    const long N = P.N, M = 2 * N;
    std::vector<long> e(M, 0);
    e[0] = M;
    e[N] = (2 * P.gamma + 1) * N;
    for (long j = 1; j < N; ++j) {
        long lo = N * a[j - 1] - j;
        long sum = 2 * j * N * P.d() + (2 * P.gamma + 1) * N - 2 * j;
        long hi = sum - lo;
        if (((lo % M) + M) % M == M - j) {
            e[M - j] = lo;
            e[N - j] = hi;
        } else {
            e[N - j] = lo;
            e[M - j] = hi;
        }
    }
    try {
        return NumericalSemigroup(M, e);
    } catch (const error& ex) {
        fail(ErrorKind::InfeasibleAVector, std::string("a-vector gives no semigroup: ") + ex.what());
    }
}

/* number of gaps congruent to -a mod N, for a = 0 .. N-1 */
inline std::vector<long> gap_counts_mod_N(const NumericalSemigroup& S, int N)
{
    std::vector<long> c(N, 0);
    for (long gap : S.gaps())
        c[((-gap) % N + N) % N] += 1;
    return c;
}

inline bool gap_vector_check(const NumericalSemigroup& S, const CoverParams& P)
{
    auto c = gap_counts_mod_N(S, P.N);
    long total = 0;
    for (int a = 0; a < P.N; ++a) {
        long expect = P.gamma - 1 + (a == 0 ? 1 : 0) + a * P.d();
        if (c[a] != expect)
            return false;
        total += c[a];
    }
    return total == P.g;
}

struct FeasibleSets {
    std::vector<AVector> box;      /* F~(N) */
    std::vector<AVector> feasible; /* F(N) */
};

inline FeasibleSets feasible_sets(const CoverParams& P)
{
    FeasibleSets out;
    AVector a(P.N - 1);
    for (int j = 1; j < P.N; ++j)
        a[j - 1] = j * P.d();
    for (;;) {
        out.box.push_back(a);
        if (in_feasible(P, a))
            out.feasible.push_back(a);
        int k = 0;
        while (k < P.N - 1 && a[k] == (k + 1) * P.d() + P.gamma) {
            a[k] = (k + 1) * P.d();
            ++k;
        }
        if (k == P.N - 1)
            break;
        ++a[k];
    }
    return out;
}

inline bool realizable_n3(const CoverParams& P, long a1, long a2)
{
    if (P.N != 3)
        fail(ErrorKind::WrongN, "realizable_n3 needs N = 3");
    if (!in_feasible(P, {a1, a2}))
        return false;
    if (a2 % 2 == 0)
        return true;
    return 4 * P.d() + 2 * P.gamma - 2 * a1 + 1 <= a2 && a2 <= 2 * a1;
}

enum class Realizability { Realizable, NotRealizable, Unknown };

inline const char* realizability_name(Realizability r)
{
    switch (r) {
    case Realizability::Realizable: return "REALIZABLE";
    case Realizability::NotRealizable: return "NOT_REALIZABLE";
    case Realizability::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

inline Realizability classify_realizability(const CoverParams& P, const AVector& a)
{
    if (!in_feasible(P, a))
        return Realizability::NotRealizable;
    const int N = P.N, g = P.gamma;
    if (N == 2)
        return Realizability::Realizable;
    if (N == 3)
        return realizable_n3(P, a[0], a[1]) ? Realizability::Realizable : Realizability::NotRealizable;
    auto eps = eps_from_avector(P, a);
    auto e = [&](int j) { return eps[j - 1]; };
    /* zeros: empty or the multiples of the first zero, with period n */
    int n = 0;
    for (int j = 1; j < N; ++j)
        if (e(j) == 0) {
            n = j;
            break;
        }
    if (n) {
        for (int j = 1; j < N; ++j) {
            if ((e(j) == 0) != (j % n == 0))
                return Realizability::NotRealizable;
            if (j + n < N && e(j + n) != e(j))
                return Realizability::NotRealizable;
        }
        for (int j = 1; j < n; ++j)
            if (e(j) != e(n - j))
                return Realizability::NotRealizable;
    }
    if (g == 1)
        return Realizability::Realizable;
    if (e(1) == 1) {
        bool exempt = N > 3 && e(2) == 0 && e(3) == 1;
        if (!exempt && ((N > 2 && e(2) == 1) || (N > 3 && e(3) == 1)))
            return Realizability::NotRealizable;
        for (int j = 1; j < N && j <= 2 * g; ++j)
            if (e(j) == 0 && !(j % 2 == 0 && e(2) == 0))
                return Realizability::NotRealizable;
    }
    bool all_g = true, all_0 = true;
    for (int j = 1; j < N; ++j) {
        all_g = all_g && e(j) == g;
        all_0 = all_0 && e(j) == 0;
    }
    if (all_g || all_0)
        return Realizability::Realizable;
    long k = e(1);
    if (k >= 1 && k * (N - 1) <= g) {
        bool linear = true;
        for (int j = 1; j < N; ++j)
            linear = linear && e(j) == j * k;
        if (linear)
            return Realizability::Realizable;
    }
    return Realizability::Unknown;
}

/*
 * E_1..E_{N-1} as Mumford divisors of degree eps_j: each E_j - eps_j q must be
 * reduced and equal to j (E_1 - eps_1 q).
 */
inline bool verify_witness(const HyperellipticCurve& C, const CoverParams& P, const std::vector<MumfordDivisor>& E)
{
    if (C.gamma() != P.gamma)
        fail(ErrorKind::CurveGenusMismatch, "curve genus differs from the cover parameters");
    if (static_cast<int>(E.size()) != P.N - 1)
        return false;
    for (const auto& D : E)
        if (!is_valid(C, D) || !is_reduced(C, D))
            return false;
    MumfordDivisor acc;
    for (int j = 1; j < P.N; ++j) {
        acc = add(C, acc, E[0]);
        if (!(acc == E[j - 1]))
            return false;
    }
    return true;
}

/* an effective divisor given by points, if semi-reduced */
inline std::optional<MumfordDivisor> divisor_from_points(const HyperellipticCurve& C, const std::vector<AffinePoint>& pts)
{
    for (std::size_t i = 0; i < pts.size(); ++i) {
        C.require(pts[i]);
        for (std::size_t k = i + 1; k < pts.size(); ++k) {
            if (pts[k].x != pts[i].x)
                continue;
            if (pts[k].y != pts[i].y || pts[i].y.is_zero())
                return std::nullopt;
        }
    }
    MumfordDivisor D;
    for (const auto& p : pts)
        D = compose(C, D, point_divisor(C, p));
    return D;
}

inline bool verify_witness(const HyperellipticCurve& C, const CoverParams& P, const std::vector<std::vector<AffinePoint>>& E)
{
    std::vector<MumfordDivisor> divs;
    for (const auto& pts : E) {
        auto D = divisor_from_points(C, pts);
        if (!D)
            return false;
        divs.push_back(*D);
    }
    return verify_witness(C, P, divs);
}

inline std::vector<long> minimal_generators(const NumericalSemigroup& S)
{
    std::vector<long> elems;
    for (long n = 1; n <= S.max_basis(); ++n)
        if (S.contains(n))
            elems.push_back(n);
    std::vector<long> gens;
    for (long n : S.basis()) {
        bool decomposable = false;
        for (long s : elems) {
            if (s >= n)
                break;
            if (S.contains(n - s)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable)
            gens.push_back(n);
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

/* pairs (a, b), a a minimal generator, b a gap, a < b */
inline long ewt(const NumericalSemigroup& S)
{
    auto gens = minimal_generators(S);
    long total = 0;
    for (long b : S.gaps())
        for (long a : gens)
            if (a < b)
                ++total;
    return total;
}

/* pairs (a, b), 0 < a < b, a in S, b a gap */
inline long wt(const NumericalSemigroup& S)
{
    long total = 0, below = 0;
    for (long n = 1; n < S.max_basis(); ++n) {
        if (S.contains(n))
            ++below;
        else
            total += below;
    }
    return total;
}

inline long binom2(long n) { return n * (n - 1) / 2; }

inline long ct_ewt_closed_form(long N, long gamma, long t)
{
    return (N - 1) * (2 * t + gamma - 6) + 3 * binom2(N - 1) + 1;
}

inline Rational staircase_ewt_closed_form(long N, long g, long t)
{
    Integer n(N), G(g), T(t);
    Integer v = n * n * n * (2 * T - 1) + 3 * n * n * (-6 - G + 2 * T * (2 + G))
        + n * (-110 + 18 * G - 9 * G * G + T * (10 - 6 * G * G))
        - 48 - 8 * G + 39 * G * G - 4 * G * G * G + T * (36 - 20 * G + 3 * G * G + 2 * G * G * G);
    Rational r(v, 12);
    r.canonicalize();
    return r;
}

/* (1, 2, .., gamma, .., gamma, .., 2, 1) truncated by the tent when N < 2 gamma */
inline std::vector<long> staircase_eps(int N, int gamma)
{
    std::vector<long> eps;
    for (int j = 1; j < N; ++j)
        eps.push_back(std::min({j, gamma, N - j}));
    return eps;
}

inline long staircase_genus(long N, long gamma, long t)
{
    return binom2(N) * t + N * (gamma - 1) + 1;
}

/* standard basis written out block by block */
inline NumericalSemigroup staircase_semigroup(long N, long gamma, long t)
{
    if (N <= 0 || gamma <= 0 || N % 2 || gamma % 2)
        fail(ErrorKind::BadParity, "staircase semigroup needs N and gamma even and nonzero");
    if (t < 2 * gamma + 3)
        fail(ErrorKind::TTooSmall, "staircase semigroup needs t >= 2 gamma + 3");
    if (N < 2 * gamma)
        fail(ErrorKind::InvalidArgument, "staircase blocks overlap when N < 2 gamma");
    const long M = 2 * N;
    std::vector<long> e(M, 0);
    e[0] = M;
    e[N] = (2 * gamma + 1) * N;
    auto put = [&](long j, long at_2N, long at_N) {
        e[M - j] = at_2N;
        e[N - j] = at_N;
    };
    const bool todd = t % 2;
    for (long j = 1; j < N; ++j) {
        bool jodd = j % 2;
        if (j <= gamma) {
            long x = N * (t + 1) * j - j, y = N * (t - 1) * j - j + (2 * gamma + 1) * N;
            if (todd || !jodd)
                put(j, x, y);
            else
                put(j, y, x);
        } else if (j <= N - gamma) {
            long x = N * t * j + N * gamma - j, y = N * t * j + (gamma + 1) * N - j;
            if (todd && jodd)
                put(j, y, x);
            else
                put(j, x, y);
        } else {
            long x = N * (t - 1) * j + N * N - j, y = N * j * (t + 1) + (2 * gamma + 1 - N) * N - j;
            if (todd || !jodd)
                put(j, x, y);
            else
                put(j, y, x);
        }
    }
    return NumericalSemigroup(M, e);
}

} // namespace jacprof

#endif
