#include "fixtures.hpp"
#include "hopfk/ncpoly.hpp"

#include <gtest/gtest.h>

using namespace hopfk;
using namespace fixtures;

namespace {

const Rule* find_rule(const RewriteSystem& rs, const std::string& label) {
    for (const auto& r : rs.rules())
        if (r.label == label) return &r;
    return nullptr;
}

Word w(std::initializer_list<int> letters) {
    Word out;
    for (int l : letters) out.push_back(static_cast<Letter>(l));
    return out;
}

constexpr int X = kGroup, XI = kGroupInv, Y1 = 2, Y2 = 3;

}  // namespace

TEST(RewriteSystem, RuleCountsPerFamily) {
    const auto b = b123_pres();
    EXPECT_EQ(b.rewrite().rules().size(), 8u);
    const Rule* power = find_rule(b.rewrite(), "y2^3");
    ASSERT_NE(power, nullptr);
    NCPoly rhs = b.rewrite().normal_form(power->rhs);
    EXPECT_EQ(rhs, mono(b, 0, {2, 0}) + mono(b, 6, {}) - mono(b, 0, {}));

    const auto a = HopfPresentation::a_family(1, make_root(7, 2));
    EXPECT_EQ(a.rewrite().rules().size(), 4u);
    // x y = q y x, so y x = q^{-1} x y
    const Rule* yx = find_rule(a.rewrite(), "y*x");
    ASSERT_NE(yx, nullptr);
    EXPECT_EQ(yx->rhs.at(0).second, make_root(7, -2));

    KParams k1 = KParams::from_p(2, {2}, {CycloScalar(-1)}, {CycloScalar(0)});
    EXPECT_EQ(HopfPresentation::k_family(k1).rewrite().rules().size(), 4u);
}

TEST(RewriteSystem, NormalFormExamples) {
    const auto b = b123_pres();
    const auto& rs = b.rewrite();
    EXPECT_EQ(rs.normal_form(w({Y2, Y1})), mono(b, 0, {1, 1}));
    EXPECT_EQ(rs.normal_form(w({Y1, X})), mono(b, 1, {1, 0}, CycloScalar(-1)));
    EXPECT_EQ(rs.normal_form(w({X, XI})), mono(b, 0, {}));
    EXPECT_EQ(rs.normal_form(w({Y2, X})), mono(b, 1, {0, 1}, make_root(3, 1)));
}

TEST(RewriteSystem, MultiplyExamples) {
    const auto b = b123_pres();
    const auto& rs = b.rewrite();
    const auto y1 = mono(b, 0, {1, 0});
    EXPECT_EQ(rs.multiply(y1, y1), mono(b, 0, {2, 0}));
    EXPECT_EQ(rs.multiply(mono(b, 0, {0, 2}), mono(b, 0, {0, 1})), mono(b, 0, {2, 0}) + mono(b, 6, {}) - mono(b, 0, {}));
    const auto p = mono(b, 3, {1, 2}, make_root(6, 1)) + mono(b, -2, {0, 1});
    EXPECT_EQ(rs.multiply(mono(b, 0, {}), p), p);
    EXPECT_EQ(rs.multiply(p, mono(b, 0, {})), p);
}

TEST(RewriteSystem, MismatchedPresentationRejected) {
    const auto b = b123_pres();
    const auto a = HopfPresentation::a_family(1, CycloScalar(2));
    EXPECT_THROW(b.rewrite().multiply(mono(b, 0, {1, 0}), mono(a, 0, {1})), std::invalid_argument);
}

TEST(RewriteSystem, OrderViolatingRuleRejected) {
    const auto b = b123_pres();
    std::vector<Rule> rules = b.rewrite().rules();
    rules.push_back({w({X, Y1}), {{w({Y1, X}), CycloScalar(1)}}, "bad"});
    EXPECT_THROW(b.rewrite().with_rules(rules), std::invalid_argument);
}

TEST(Ambiguities, PaperOverlapsAreEnumerated) {
    const auto a = HopfPresentation::a_family(1, make_root(5, 1));
    auto amb = enumerate_ambiguities(a.rewrite());
    bool xxix = false;
    for (const auto& o : amb) xxix = xxix || o.word == w({X, XI, X});
    EXPECT_TRUE(xxix);

    const auto b = b123_pres();
    amb = enumerate_ambiguities(b.rewrite());
    bool power_x = false;
    for (const auto& o : amb) power_x = power_x || o.word == w({Y2, Y2, Y2, X});
    EXPECT_TRUE(power_x);
}

TEST(Ambiguities, SingleRuleHasNone) {
    Alphabet al{1, "x", {"y"}};
    RewriteSystem rs(al, MonomialOrder({0, 0, 1}, {2}), {{w({Y1, X}), {{w({X, Y1}), make_root(3, 1)}}, "y*x"}});
    EXPECT_TRUE(enumerate_ambiguities(rs).empty());
}

TEST(Ambiguities, SelfOverlapOfPowerRule) {
    const auto b = b123_pres();
    bool self = false;
    for (const auto& o : enumerate_ambiguities(b.rewrite()))
        self = self || (o.rule1 == o.rule2 && o.word == w({Y2, Y2, Y2, Y2}));
    EXPECT_TRUE(self);
}

TEST(Confluence, StandardInstancesResolve) {
    for (const auto& h : standard_instances()) {
        const auto report = certify_confluence(h.rewrite());
        EXPECT_FALSE(report.items.empty()) << h.describe();
        EXPECT_TRUE(report.all_resolved()) << h.describe();
    }
}

TEST(Confluence, CorruptedCommutationFails) {
    const auto b = b123_pres();
    std::vector<Rule> rules = b.rewrite().rules();
    for (auto& r : rules)
        if (r.label == "y1*x") r.rhs[0].second = b.k_params()->q[0].pow(2);
    const auto report = certify_confluence(b.rewrite().with_rules(rules));
    EXPECT_FALSE(report.all_resolved());
    EXPECT_LT(report.resolved_count(), report.items.size());
}

TEST(Properties, IdempotenceAndStrategyIndependence) {
    std::mt19937 rng(11);
    for (const auto& h : standard_instances()) {
        const auto& rs = h.rewrite();
        for (int t = 0; t < 60; ++t) {
            const RawPoly p = random_raw(rng, 2 + h.skew_count(), 8, 3);
            RewriteOptions checked;
            checked.check_order = true;
            const NCPoly nf = rs.normal_form(p, checked);
            EXPECT_EQ(rs.normal_form(to_raw(nf)), nf);
            RewriteOptions right;
            right.strategy = Strategy::Rightmost;
            EXPECT_EQ(rs.normal_form(p, right), nf) << h.describe();
        }
    }
}

TEST(Properties, RingAxioms) {
    std::mt19937 rng(5);
    for (const auto& h : standard_instances()) {
        const auto& rs = h.rewrite();
        for (int t = 0; t < 15; ++t) {
            const NCPoly a = rs.normal_form(random_raw(rng, 2 + h.skew_count(), 4, 2));
            const NCPoly b = rs.normal_form(random_raw(rng, 2 + h.skew_count(), 4, 2));
            const NCPoly c = rs.normal_form(random_raw(rng, 2 + h.skew_count(), 4, 2));
            EXPECT_EQ(rs.multiply(rs.multiply(a, b), c), rs.multiply(a, rs.multiply(b, c))) << h.describe();
            EXPECT_EQ(rs.multiply(a, b + c), rs.multiply(a, b) + rs.multiply(a, c));
            EXPECT_EQ(rs.multiply(a + b, c), rs.multiply(a, c) + rs.multiply(b, c));
        }
    }
}

TEST(Properties, CentralElements) {
    for (const auto& h : standard_instances()) {
        if (h.family() != Family::K) continue;
        const auto& k = *h.k_params();
        const auto& rs = h.rewrite();
        const NCPoly xm = mono(h, k.M, {});
        std::vector<int> e(static_cast<std::size_t>(k.s), 0);
        e[0] = static_cast<int>(k.p[0]);
        const NCPoly y1p = mono(h, 0, e);
        std::vector<NCPoly> gens{mono(h, 1, {}), mono(h, -1, {})};
        for (int i = 0; i < k.s; ++i) {
            std::vector<int> u(static_cast<std::size_t>(k.s), 0);
            u[static_cast<std::size_t>(i)] = 1;
            gens.push_back(mono(h, 0, u));
        }
        for (const auto& g : gens) {
            EXPECT_TRUE((rs.multiply(xm, g) - rs.multiply(g, xm)).is_zero()) << h.describe();
            EXPECT_TRUE((rs.multiply(y1p, g) - rs.multiply(g, y1p)).is_zero()) << h.describe();
        }
    }
}

TEST(Properties, DefiningPowerIdentity) {
    for (const auto& h : standard_instances()) {
        if (h.family() != Family::K) continue;
        const auto& k = *h.k_params();
        for (int i = 0; i < k.s; ++i)
            for (int j = i + 1; j < k.s; ++j) {
                RawPoly r{{Word(static_cast<std::size_t>(k.p[j]), skew_letter(j)), CycloScalar(1)},
                          {Word(static_cast<std::size_t>(k.p[i]), skew_letter(i)), CycloScalar(-1)}};
                const CycloScalar d = k.alpha[j] - k.alpha[i];
                r.emplace_back(grouplike_power(k.M), -d);
                r.emplace_back(Word{}, d);
                EXPECT_TRUE(h.rewrite().normal_form(r).is_zero()) << h.describe();
            }
    }
}

TEST(Properties, RelationsVanish) {
    for (const auto& h : standard_instances())
        for (const auto& r : h.relations()) EXPECT_TRUE(h.rewrite().normal_form(r).is_zero()) << h.describe();
}

TEST(Printing, CanonicalText) {
    const auto b = b123_pres();
    const NCPoly p = mono(b, -3, {1, 0}, CycloScalar(-1)) + mono(b, 0, {}, CycloScalar(2));
    EXPECT_EQ(p.to_string(b.alphabet()), "-x^-3*y1 + 2");
    EXPECT_EQ(NCPoly().to_string(b.alphabet()), "0");
}
