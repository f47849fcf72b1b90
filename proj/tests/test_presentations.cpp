#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace fixtures;

namespace {

KParams k_10_15() {
    return KParams::from_p(30, {10, 15}, {make_root(30, 3), make_root(30, -2)}, {CycloScalar(0), CycloScalar(1)});
}

// Random validated B instance with ell <= 30.
BParams random_b(std::mt19937& rng) {
    static const std::vector<std::vector<long>> ps = {{2, 3}, {2, 5}, {3, 4}, {3, 5}, {2, 7}, {2, 3, 5}, {4, 5}, {5, 6}};
    std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
    std::uniform_int_distribution<long> nd(1, 7), ad(-2, 2);
    const auto& p = ps[pick(rng)];
    const long ell = std::accumulate(p.begin(), p.end(), 1L, std::multiplies<>());
    std::vector<long> units;
    for (long k = 1; k < ell; ++k)
        if (std::gcd(k, ell) == 1) units.push_back(k);
    std::uniform_int_distribution<std::size_t> ud(0, units.size() - 1);
    std::vector<long> alpha{0};
    for (std::size_t i = 1; i < p.size(); ++i) alpha.push_back(ad(rng));
    long n = nd(rng);
    while (std::gcd(n, ell) != 1) n = nd(rng);  // q_i^{n_i} must stay primitive
    return b_params(n, p, units[ud(rng)], alpha);
}

}  // namespace

TEST(Validate, ExpandedBInstancePassesEverything) {
    const KParams k = b1_23().expand();
    EXPECT_EQ(k.M, 6);
    EXPECT_EQ(k.n, (std::vector<long>{3, 2}));
    EXPECT_EQ(k.q[0], CycloScalar(-1));
    EXPECT_EQ(k.q[1], make_root(3, 1));
    const auto r = validate(k);
    for (const char* id : {"K.rank", "K.order", "K.q_nonzero", "K.q_primitive", "K.q_compatible", "K.alpha", "K.coprime", "K.alpha_distinct", "K.p_min"})
        EXPECT_TRUE(r.passes(id)) << id;
    EXPECT_TRUE(r.ok());
}

TEST(Validate, NonCoprimeFailsOnlyCoprimality) {
    const auto r = validate(k_10_15());
    for (const char* id : {"K.rank", "K.order", "K.q_nonzero", "K.q_primitive", "K.q_compatible", "K.alpha", "K.alpha_distinct", "K.p_min"})
        EXPECT_TRUE(r.passes(id)) << id;
    EXPECT_FALSE(r.passes("K.coprime"));
    EXPECT_TRUE(r.ok());
}

TEST(Validate, EqualAlphasFailExtCondition) {
    const auto r = validate(b1_23(0).expand());
    EXPECT_FALSE(r.passes("K.alpha_distinct"));
    EXPECT_TRUE(r.ok());
}

TEST(Validate, BrokenInstances) {
    KParams k = b1_23().expand();
    k.n[0] = 2;
    EXPECT_FALSE(validate(k).passes("K.order"));

    k = b1_23().expand();
    k.q[0] = CycloScalar(1);
    EXPECT_FALSE(validate(k).passes("K.q_primitive"));

    k = b1_23().expand();
    k.q[1] = make_root(3, 2);
    EXPECT_TRUE(validate(k).passes("K.q_compatible"));
    k.q[1] = make_root(6, 1);
    EXPECT_FALSE(validate(k).passes("K.q_primitive"));

    k = KParams::from_p(6, {6, 1}, {make_root(6, 1), CycloScalar(1)}, {CycloScalar(0), CycloScalar(1)});
    EXPECT_FALSE(validate(k).passes("K.p_min"));
    EXPECT_THROW(HopfPresentation::k_family(k), InvalidPresentation);

    BParams b = b1_23();
    b.p = {3, 2};
    EXPECT_FALSE(validate(b).passes("B.increasing"));
    EXPECT_THROW(HopfPresentation::b_family(b), InvalidPresentation);
}

TEST(BForm, LeastExponentChosen) {
    const auto r = to_b_form(b1_23().expand());
    ASSERT_TRUE(r);
    EXPECT_EQ(r->exponent, 1);
    EXPECT_EQ(r->candidates, (std::vector<long>{1}));
    EXPECT_EQ(r->params.n, 1);
    EXPECT_EQ(r->params.p, (std::vector<long>{2, 3}));
    EXPECT_EQ(r->params.q, make_root(6, 1));
}

TEST(BForm, OtherBaseRoot) {
    const KParams k = KParams::from_p(6, {2, 3}, {CycloScalar(-1), make_root(3, 2)},
                                      {CycloScalar(0), CycloScalar(1)});
    ASSERT_TRUE(validate(k).ok());
    const auto r = to_b_form(k);
    ASSERT_TRUE(r);
    // q^3 = -1 forces k odd, q^2 = zeta_3^2 forces k = 2 mod 3
    EXPECT_EQ(r->exponent, 5);
}

TEST(BForm, NonCoprimeAbsent) { EXPECT_FALSE(to_b_form(k_10_15())); }

TEST(BForm, SortsAndPermutesAlpha) {
    const KParams src = b1_23(1).expand();
    KParams k;
    k.s = 2;
    k.M = src.M;
    k.n = {src.n[1], src.n[0]};
    k.p = {src.p[1], src.p[0]};
    k.q = {src.q[1], src.q[0]};
    k.alpha = {CycloScalar(1), CycloScalar(0)};
    ASSERT_TRUE(validate(k).ok());
    const auto r = to_b_form(k);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->params.p, (std::vector<long>{2, 3}));
    EXPECT_EQ(r->permutation, (std::vector<int>{1, 0}));
    EXPECT_EQ(r->params.alpha[0], CycloScalar(0));
    EXPECT_EQ(r->params.alpha[1], CycloScalar(1));
}

TEST(BForm, RoundTripProperty) {
    std::mt19937 rng(7);
    for (int t = 0; t < 60; ++t) {
        const BParams b = random_b(rng);
        ASSERT_TRUE(validate(b).ok());
        const KParams k = b.expand();
        ASSERT_TRUE(validate(k).ok());
        const auto r = to_b_form(k);
        ASSERT_TRUE(r);
        EXPECT_EQ(r->params.n, b.n);
        EXPECT_EQ(r->params.p, b.p);
        EXPECT_EQ(r->params.q, b.q);
        EXPECT_EQ(r->params.expand().q, k.q);
        for (std::size_t i = 0; i < b.alpha.size(); ++i) EXPECT_EQ(r->params.alpha[i], b.alpha[i]);
    }
}

TEST(Consistency, RelationBetweenRootsHolds) {
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
        const KParams k = random_b(rng).expand();
        for (int i = 0; i < k.s; ++i)
            for (int j = i + 1; j < k.s; ++j) EXPECT_TRUE((k.q[j].pow(k.n[i]) * k.q[i].pow(k.n[j])).is_one());
    }
}

TEST(Presentation, CoalgebraTables) {
    const auto b = b123_pres();
    EXPECT_EQ(b.coalgebra().left, (std::vector<long>{3, 2}));
    EXPECT_EQ(b.coalgebra().right, (std::vector<long>{0, 0}));
    const auto a = HopfPresentation::a_family(4, make_root(5, 1));
    EXPECT_EQ(a.coalgebra().left, (std::vector<long>{4}));
    const auto c = HopfPresentation::c_family(3);
    EXPECT_EQ(c.coalgebra().left, (std::vector<long>{0}));
    EXPECT_EQ(c.coalgebra().right, (std::vector<long>{2}));
    EXPECT_EQ(c.alphabet().group_name, "y");
}

TEST(Presentation, AlphaNormalisedToZero) {
    const auto h = HopfPresentation::b_family(b_params(1, {2, 3}, 1, {5, 7}));
    EXPECT_TRUE(h.k_params()->alpha[0].is_zero());
    EXPECT_EQ(h.k_params()->alpha[1], CycloScalar(2));
}

TEST(Presentation, RejectsBadComparisonData) {
    EXPECT_THROW(HopfPresentation::a_family(1, CycloScalar(0)), InvalidPresentation);
    EXPECT_THROW(HopfPresentation::c_family(0), InvalidPresentation);
}

TEST(Presentation, Describe) {
    EXPECT_EQ(HopfPresentation::c_family(3).describe(), "C(3)");
    EXPECT_NE(b123_pres().describe().find("M=6"), std::string::npos);
}
