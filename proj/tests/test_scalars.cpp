#include "hopfk/scalars.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hopfk;

namespace {

// Oracle: reduce x^k modulo Phi_L with plain long division over the integers.
std::vector<long> reduce_power_by_division(int L, long k) {
    const auto& phi = cyclotomic_polynomial(L);
    const std::size_t deg = phi.size() - 1;
    std::vector<long> r(static_cast<std::size_t>(k) + 1, 0);
    r[static_cast<std::size_t>(k)] = 1;
    for (std::size_t top = r.size(); top-- > deg;) {
        const long c = r[top];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= deg; ++i) r[top - deg + i] -= c * phi[i];
    }
    r.resize(deg);
    return r;
}

CycloScalar random_scalar(std::mt19937& rng, int L) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(L)));
    for (auto& v : c) v = Rational(d(rng), 1 + (d(rng) + 5) % 4);
    return CycloScalar(L, c);
}

}  // namespace

TEST(Scalars, MakeRootBasics) {
    EXPECT_TRUE(make_root(1, 0).is_one());
    EXPECT_EQ(make_root(2, 1), CycloScalar(-1));
    EXPECT_EQ(make_root(6, 3), CycloScalar(-1));
    EXPECT_TRUE(make_root(12, 0).is_one());
    EXPECT_EQ(make_root(5, 7), make_root(5, 2));
    EXPECT_EQ(make_root(5, -1), make_root(5, 4));
}

TEST(Scalars, MakeRootMatchesDivisionOracle) {
    for (int L = 1; L <= 30; ++L) {
        for (long k = 0; k < 2 * L; ++k) {
            const auto expected = reduce_power_by_division(L, k);
            std::vector<Rational> coeffs(expected.begin(), expected.end());
            EXPECT_EQ(make_root(L, k), CycloScalar(L, coeffs)) << "L=" << L << " k=" << k;
        }
    }
}

TEST(Scalars, FieldIdentities) {
    const auto z3 = make_root(3, 1);
    EXPECT_TRUE((z3 * z3.pow(2)).is_one());
    EXPECT_TRUE((CycloScalar(1) + z3 + z3 * z3).is_zero());
    EXPECT_EQ(CycloScalar(-1).inv(), CycloScalar(-1));
    EXPECT_THROW(CycloScalar(0).inv(), DivisionByZero);
    EXPECT_THROW(CycloScalar(1) / CycloScalar(0), DivisionByZero);
}

TEST(Scalars, MixedConductorsLiftToLcm) {
    const auto a = make_root(4, 1);
    const auto b = make_root(6, 1);
    const auto prod = a * b;
    EXPECT_EQ(prod, make_root(12, 5));
    EXPECT_EQ(prod / b, a);
}

TEST(Scalars, CanonicalFormSoundness) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int L1 = 1 + static_cast<int>(rng() % 24);
        const int L2 = 1 + static_cast<int>(rng() % 24);
        const auto a = random_scalar(rng, L1);
        const auto b = random_scalar(rng, L2);
        EXPECT_EQ((a + b) - b, a);
        if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one());
        EXPECT_EQ(a * b, b * a);
    }
}

TEST(Scalars, OrderOf) {
    EXPECT_EQ(order_of(CycloScalar(1)), 1);
    EXPECT_EQ(order_of(make_root(6, 3)), 2);
    EXPECT_FALSE(order_of(CycloScalar(2)).has_value());
    EXPECT_FALSE(order_of(CycloScalar(1) + make_root(5, 1)).has_value());
    EXPECT_THROW(order_of(CycloScalar(0)), std::invalid_argument);
    for (int L = 1; L <= 30; ++L)
        for (long k = 0; k < L; ++k)
            EXPECT_EQ(order_of(make_root(L, k)), L / gcd_l(L, k)) << L << "," << k;
}

TEST(Scalars, OrderOfNegatedOddRoot) {
    // -zeta_5 has order 10 but lives in Q(zeta_5)
    EXPECT_EQ(order_of(-make_root(5, 1)), 10);
    EXPECT_EQ(order_of(-make_root(15, 2)), 30);
}

TEST(Scalars, PrimitivePredicate) {
    EXPECT_TRUE(is_primitive_pth_root(make_root(6, 3), 2));
    EXPECT_TRUE(is_primitive_pth_root(make_root(6, 2), 3));
    EXPECT_TRUE(is_primitive_pth_root(CycloScalar(1), 1));
    EXPECT_FALSE(is_primitive_pth_root(make_root(6, 2), 6));
    EXPECT_FALSE(is_primitive_pth_root(CycloScalar(0), 1));
}

TEST(Scalars, RootOfUnityPairs) {
    RootOfUnity a(6, 3);
    EXPECT_EQ(a.order(), 2);
    EXPECT_EQ(a, RootOfUnity::minus_one());
    EXPECT_TRUE(RootOfUnity(7, 14).is_one());
    EXPECT_EQ(RootOfUnity(10, 1) * RootOfUnity(15, 1), RootOfUnity(6, 1));
    EXPECT_EQ(RootOfUnity(21, 5).pow(21), RootOfUnity());
    for (long n = 1; n <= 20; ++n)
        for (long k = 0; k < n; ++k) {
            const RootOfUnity r(n, k);
            EXPECT_EQ(r.to_scalar(), make_root(static_cast<int>(n), k));
            EXPECT_EQ(as_root_of_unity(r.to_scalar()), r);
        }
}

TEST(Scalars, QBinomialExamples) {
    EXPECT_TRUE(qbinom(2, 1, CycloScalar(-1)).is_zero());
    EXPECT_TRUE(qbinom(3, 1, make_root(3, 1)).is_zero());
    for (int w = 0; w < 6; ++w) EXPECT_TRUE(qbinom(w, 0, make_root(7, 3)).is_one());
    EXPECT_EQ(qbinom(4, 2, CycloScalar(1)), CycloScalar(6));
    EXPECT_THROW(qbinom(2, 3, CycloScalar(1)), std::invalid_argument);
}

TEST(Scalars, QBinomialVanishesAtPrimitiveRoots) {
    for (int p = 2; p <= 12; ++p)
        for (long k = 1; k < p; ++k) {
            if (gcd_l(p, k) != 1) continue;
            const auto q = make_root(p, k);
            for (int j = 1; j < p; ++j) EXPECT_TRUE(qbinom(p, j, q).is_zero()) << p << "," << k << "," << j;
        }
}

TEST(Scalars, QBinomialMatchesProductFormula) {
    for (int w = 1; w <= 6; ++w) {
        const auto q = make_root(w * w + 1, 1);
        for (int j = 0; j <= w; ++j) {
            CycloScalar prod(1);
            for (int t = 1; t <= j; ++t) prod *= (CycloScalar(1) - q.pow(w - t + 1)) / (CycloScalar(1) - q.pow(t));
            EXPECT_EQ(qbinom(w, j, q), prod) << w << "," << j;
        }
    }
}

TEST(Scalars, NthRoot) {
    auto r = nth_root(CycloScalar(-1), 2);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->pow(2), CycloScalar(-1));
    r = nth_root(CycloScalar(8), 3);
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, CycloScalar(2));
    for (int a : {2, 3, 5, 6, 7, -2, -3, 12}) {
        auto s = nth_root(CycloScalar(a), 2);
        ASSERT_TRUE(s) << a;
        EXPECT_EQ(s->pow(2), CycloScalar(a));
    }
    auto t = nth_root(make_root(5, 2), 5);
    ASSERT_TRUE(t);
    EXPECT_EQ(t->pow(5), make_root(5, 2));
    EXPECT_FALSE(nth_root(CycloScalar(2), 3).has_value());
}

TEST(Scalars, GaloisAndPrinting) {
    const auto z = make_root(8, 1);
    EXPECT_EQ(z.galois(3), make_root(8, 3));
    EXPECT_EQ(CycloScalar(Rational(3, 2)).to_string(), "3/2");
    EXPECT_EQ(CycloScalar(-1).to_string(), "-1");
    EXPECT_EQ(make_root(6, 1).to_string(), "zeta(6,1)");
}
