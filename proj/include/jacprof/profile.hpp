#ifndef JACPROF_PROFILE_HPP
#define JACPROF_PROFILE_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jacobian.hpp"

namespace jacprof {

/* entries[j-1] = epsilon_j */
struct MultiplicationProfile {
    int gamma = 0;
    std::vector<int> entries;

    int operator[](int j) const { return entries.at(j - 1); }
    int length() const { return static_cast<int>(entries.size()); }
    /* first j with epsilon_j = 0, if within range */
    std::optional<int> torsion_order() const
    {
        for (int j = 1; j <= length(); ++j)
            if ((*this)[j] == 0)
                return j;
        return std::nullopt;
    }
    bool operator==(const MultiplicationProfile&) const = default;
};

inline MultiplicationProfile profile_via_jacobian(const HyperellipticCurve& C, const AffinePoint& p, int upto)
{
    MultiplicationProfile out{C.gamma(), {}};
    MumfordDivisor base = point_divisor(C, p);
    MumfordDivisor acc;
    for (int j = 1; j <= upto; ++j) {
        acc = add(C, acc, base);
        out.entries.push_back(acc.degree());
    }
    return out;
}

/* the block whose determinant D_n vanishes iff epsilon_n < gamma (n >= gamma+2) */
inline HankelSpec coefficient_minor_spec(int gamma, int n)
{
    if (n < gamma + 2)
        fail(ErrorKind::InvalidArgument, "D_n needs n >= gamma+2");
    if ((n + gamma) % 2)
        return {gamma + 2, (n - gamma - 1) / 2, (n - gamma - 1) / 2};
    return {gamma + 1, (n - gamma) / 2, (n - gamma) / 2};
}

inline FieldElement coefficient_minor(const Series& a, int gamma, int n)
{
    return hankel_det(a, coefficient_minor_spec(gamma, n));
}

/* fill the dips between indices where epsilon = gamma */
inline std::vector<int> profile_from_minors(const Series& a, int gamma, int upto)
{
    std::vector<int> eps(upto + 1, -1);
    for (int j = 1; j <= std::min(upto, gamma); ++j)
        eps[j] = j;
    int last = gamma + 1;
    if (last <= upto)
        eps[last] = gamma;
    for (int n = gamma + 2; last < upto; ++n) {
        if (n - last > 2 * gamma)
            fail(ErrorKind::InternalMismatch, "dip longer than 2*gamma after index " + std::to_string(last));
        if (coefficient_minor(a, gamma, n).is_zero())
            continue;
        int gap = n - last;
        if (gap > 1 && gap % 2)
            fail(ErrorKind::InternalMismatch, "odd-length dip between indices " + std::to_string(last) + " and " + std::to_string(n));
        for (int k = 1; k < gap && last + k <= upto; ++k)
            eps[last + k] = gamma - std::min(k, gap - k);
        if (n <= upto)
            eps[n] = gamma;
        last = n;
    }
    return std::vector<int>(eps.begin() + 1, eps.end());
}

inline MultiplicationProfile profile_via_hankel(const HyperellipticCurve& C, const AffinePoint& p, int upto)
{
    const int g = C.gamma();
    int order = upto + 2 * g + 2;
    for (;;) {
        Series a = local_series(C, p, order);
        try {
            return {g, profile_from_minors(a, g, upto)};
        } catch (const error& e) {
            if (e.kind() != ErrorKind::InsufficientPrecision)
                throw;
        }
        order += 2 * g + 2;
    }
}

struct MinimalPair {
    Poly p, q;
    int support_length = 0;
    int j = 0;
    int epsilon() const { return support_length - j; }
};

inline int support_length(int gamma, const Poly& p, const Poly& q)
{
    int lp = p.is_zero() ? -1 : 2 * p.degree();
    int lq = q.is_zero() ? -1 : 2 * gamma + 1 + 2 * q.degree();
    return std::max(lp, lq);
}

/* x^j | p - a q with minimal support length */
inline MinimalPair minimal_pair_from_series(const Series& a, int gamma, int j)
{
    if (j < 1)
        fail(ErrorKind::InvalidArgument, "minimal pair needs j >= 1");
    if (a.order() < j)
        fail(ErrorKind::InsufficientPrecision, "series order below j");
    for (int L = j; L <= 2 * j; ++L) {
        const int np = L / 2;
        const int nq = L >= 2 * gamma + 1 ? (L - 2 * gamma - 1) / 2 : -1;
        std::vector<std::vector<FieldElement>> ker;
        if (nq >= 0) {
            const int cols = nq + 1;
            Matrix m;
            for (int k = np + 1; k <= j - 1; ++k) {
                std::vector<FieldElement> row(cols);
                for (int i = 0; i < cols; ++i)
                    if (k - i >= 0)
                        row[i] = a[k - i];
                m.push_back(std::move(row));
            }
            ker = kernel(m, cols);
        }
        if (ker.empty()) {
            if (np >= j)
                return {Poly::monomial(j), Poly(), 2 * j, j};
            continue;
        }
        if (ker.size() > 1 || np >= j)
            fail(ErrorKind::InternalMismatch, "minimal pair is not unique at j = " + std::to_string(j));
        std::vector<FieldElement> qc = ker[0];
        auto lead = std::find_if(qc.begin(), qc.end(), [](const FieldElement& c) { return !c.is_zero(); });
        FieldElement scale = FieldElement(1) / *lead;
        for (auto& c : qc)
            c *= scale;
        Poly q(qc);
        Poly p = (a.truncated(j) * q).truncate(std::min(np + 1, j));
        if (support_length(gamma, p, q) != L)
            fail(ErrorKind::InternalMismatch, "minimal pair support length mismatch");
        return {p, q, L, j};
    }
    fail(ErrorKind::InternalMismatch, "no minimal pair found");
}

inline MinimalPair minimal_pair(const HyperellipticCurve& C, const AffinePoint& p, int j)
{
    return minimal_pair_from_series(local_series(C, p, j), C.gamma(), j);
}

struct Violation {
    int condition = 0; /* 1..5 */
    int index = 0;
    std::string message;
};

/* the five necessary conditions, checked within the finite window */
inline std::vector<Violation> validate_profile(const std::vector<int>& seq, int gamma)
{
    std::vector<Violation> out;
    const int n = static_cast<int>(seq.size());
    auto e = [&](int j) { return seq[j - 1]; };
    if (n == 0)
        return out;
    if (e(1) != 1)
        out.push_back({1, 1, "epsilon_1 must be 1"});
    for (int j = 1; j <= n; ++j)
        if (e(j) < 0 || e(j) > gamma)
            out.push_back({1, j, "entry outside [0, gamma]"});
    for (int i = 1; i <= n; ++i)
        for (int j = i; i + j <= n; ++j)
            if (e(i) + e(j) < e(i + j))
                out.push_back({2, i + j, "subadditivity fails for " + std::to_string(i) + " + " + std::to_string(j)});
    for (int j = 1; j < n; ++j) {
        if (std::abs(e(j) - e(j + 1)) > 1)
            out.push_back({3, j, "consecutive entries differ by more than 1"});
        else if (e(j) < gamma && e(j) == e(j + 1))
            out.push_back({3, j, "equal consecutive entries below gamma"});
    }
    for (int j = 1; j + 2 <= n; ++j)
        if (e(j + 1) == e(j) + 1 && e(j + 2) == e(j) && !(e(j) == 0 && n >= 2 && e(2) == 0))
            out.push_back({4, j, "pattern (a, a+1, a)"});
    int N = 0;
    for (int j = 1; j <= n; ++j)
        if (e(j) == 0) {
            N = j;
            break;
        }
    if (N) {
        if (N != 2 && N < 2 * gamma + 1)
            out.push_back({5, N, "first zero at a forbidden order"});
        for (int j = N + 1; j <= n; ++j) {
            int r = j % N;
            if (r == 0 ? e(j) != 0 : e(j) != e(r))
                out.push_back({5, j, "periodicity fails"});
        }
        for (int r = 1; r < N && N - r <= n; ++r)
            if (e(N - r) != e(r))
                out.push_back({5, N - r, "symmetry fails"});
    }
    return out;
}

/* half window epsilon_{gamma+2} .. epsilon_{floor(N/2)} */
struct ProfilePattern {
    int gamma = 0;
    std::vector<int> window;
    int order = 0;
    bool operator==(const ProfilePattern&) const = default;
};

inline MultiplicationProfile expand_pattern(const ProfilePattern& pat, int length = 0)
{
    const int N = pat.order, g = pat.gamma;
    if (length <= 0)
        length = N;
    if (N >= 2 * g + 1 && static_cast<int>(pat.window.size()) != std::max(0, N / 2 - g - 1))
        fail(ErrorKind::InvalidArgument, "pattern window has the wrong length");
    MultiplicationProfile out{g, {}};
    for (int j = 1; j <= length; ++j) {
        int r = j % N;
        r = std::min(r, N - r);
        int v;
        if (r == 0)
            v = 0;
        else if (r <= g)
            v = r;
        else if (r == g + 1)
            v = g;
        else
            v = pat.window.at(r - g - 2);
        out.entries.push_back(v);
    }
    return out;
}

inline std::vector<ProfilePattern> enumerate_torsion_patterns(int gamma, int N)
{
    if (gamma < 1)
        fail(ErrorKind::InvalidArgument, "gamma must be >= 1");
    if (N < 2 || (N >= 3 && N <= 2 * gamma))
        fail(ErrorKind::InvalidOrder, "no point of order " + std::to_string(N) + " in genus " + std::to_string(gamma));
    std::vector<ProfilePattern> out;
    if (N == 2) {
        out.push_back({gamma, {}, 2});
        return out;
    }
    const int len = std::max(0, N / 2 - gamma - 1);
    std::vector<int> w;
    std::function<void(int)> rec = [&](int prev) {
        if (static_cast<int>(w.size()) == len) {
            ProfilePattern pat{gamma, w, N};
            if (validate_profile(expand_pattern(pat, 2 * N).entries, gamma).empty())
                out.push_back(pat);
            return;
        }
        for (int v = prev + 1; v >= prev - 1; --v) {
            if (v < 1 || v > gamma)
                continue;
            w.push_back(v);
            rec(v);
            w.pop_back();
        }
    };
    rec(gamma);
    return out;
}

} // namespace jacprof

#endif
