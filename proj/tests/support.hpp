#ifndef JACPROF_TESTS_SUPPORT_HPP
#define JACPROF_TESTS_SUPPORT_HPP

#include <jacprof/jacprof.hpp>

#include <string>
#include <vector>

namespace testing_support {

using namespace jacprof;

inline FieldElement q(long n, long d = 1)
{
    Rational r(n, d);
    r.canonicalize();
    return FieldElement(r);
}

inline FieldElement fe(const std::string& s) { return FieldElement::parse(s); }

/* coefficients listed lowest degree first */
inline Poly P(std::initializer_list<long> c)
{
    std::vector<FieldElement> v;
    for (long x : c)
        v.push_back(FieldElement(x));
    return Poly(v);
}

inline std::vector<int> ints(const std::vector<int>& v) { return v; }

} // namespace testing_support

#define EXPECT_KIND(stmt, k)                                        \
    do {                                                            \
        try {                                                       \
            stmt;                                                   \
            ADD_FAILURE() << "expected " << jacprof::kind_name(k);  \
        } catch (const jacprof::error& e_) {                        \
            EXPECT_EQ(e_.kind(), k) << e_.what();                   \
        }                                                           \
    } while (0)

#endif
