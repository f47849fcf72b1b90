#include "hopfk/cli.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace fixtures;
using namespace hopfk::cli;
using nlohmann::json;

namespace {

const std::string kData = HOPFK_TEST_DATA;

struct Invocation {
    int code = -1;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Invocation hopfk_run(std::vector<std::string> args) {
    for (auto& a : args)
        if (a.ends_with(".json")) a = kData + "/" + a;
    std::ostringstream out, err;
    Invocation r;
    r.code = run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

HopfPresentation b123() { return HopfPresentation::b_family(b1_23()); }

}  // namespace

TEST(Expression, SumOfProducts) {
    const auto pres = b123();
    const Expression e = parse_expression("y2*y1 - y1*y2", pres.alphabet());
    ASSERT_EQ(e.kind, Expression::Kind::Sum);
    ASSERT_EQ(e.children.size(), 2u);
    EXPECT_EQ(e.children[0].kind, Expression::Kind::Product);
    EXPECT_EQ(e.children[1].kind, Expression::Kind::Product);
    EXPECT_EQ(e.negated, (std::vector<bool>{false, true}));
}

TEST(Expression, ScalarRoot) {
    const auto pres = b123();
    const Expression e = parse_expression("x^-3 * y1 + zeta(6,1)*(x^6 - 1)", pres.alphabet());
    ASSERT_EQ(e.children.size(), 2u);
    const Expression& second = e.children[1];
    ASSERT_EQ(second.kind, Expression::Kind::Product);
    EXPECT_EQ(second.children[0].kind, Expression::Kind::Scalar);
    EXPECT_EQ(second.children[0].scalar, make_root(6, 1));
    EXPECT_EQ(e.children[0].children[0].exponent, -3);
    EXPECT_EQ(print(e, pres.alphabet()), "x^-3*y1 + zeta(6,1)*(x^6 - 1)");
}

TEST(Expression, Errors) {
    const auto pres = b123();
    const auto position = [&](const std::string& s) -> std::optional<std::size_t> {
        try {
            parse_expression(s, pres.alphabet());
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::nullopt;
    };
    EXPECT_EQ(position("y1^-1"), 3u);
    EXPECT_EQ(position("x + y3"), 4u);
    EXPECT_EQ(position("x + "), 4u);
    EXPECT_EQ(position("(x + y1"), 7u);
    EXPECT_EQ(position("2/0"), 2u);
    EXPECT_EQ(position("x y1"), 2u);
    EXPECT_EQ(position("zeta(0,1)"), 5u);
    EXPECT_FALSE(position("x^-2 * (y1 + 3/4)^2"));
    // negative power of a non-unit is caught when evaluated
    const Expression e = parse_expression("(x + y1)^-1", pres.alphabet());
    EXPECT_THROW(evaluate(e, pres.rewrite()), ParseError);
}

TEST(Expression, UnitsInvert) {
    const auto pres = b123();
    const auto& rs = pres.rewrite();
    const NCPoly v = evaluate(parse_expression("(2*x^3)^-2 * x^6", pres.alphabet()), rs);
    EXPECT_EQ(v, NCPoly::constant(CycloScalar(Rational(1, 4)), 2));
}

TEST(Expression, CanonicalPrintRoundTrip) {
    const auto pres = b123();
    const auto& alpha = pres.alphabet();
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> small(-3, 3), exp(0, 3), terms(1, 4), kind(0, 3);
    for (int t = 0; t < 200; ++t) {
        NCPoly p;
        const int nterms = terms(rng);
        for (int i = 0; i < nterms; ++i) {
            NFMonomial m{small(rng), {exp(rng) % 2, exp(rng) % 3}};
            CycloScalar c;
            switch (kind(rng)) {
                case 0: c = CycloScalar(small(rng)); break;
                case 1: c = CycloScalar(Rational(small(rng), 1 + exp(rng))); break;
                case 2: c = make_root(6, small(rng)) * CycloScalar(small(rng)); break;
                default: c = CycloScalar(small(rng)) + make_root(5, 1 + exp(rng)) * CycloScalar(small(rng)); break;
            }
            p.add_term(m, c);
        }
        const std::string text = p.to_string(alpha);
        const Expression e = parse_expression(text, alpha);
        EXPECT_EQ(print(e, alpha), text);
        EXPECT_EQ(evaluate(e, pres.rewrite()), p) << text;
    }
}

TEST(Expression, AssociativityOfEvaluation) {
    const auto pres = b123();
    const std::vector<std::string> atoms{"x", "x^-1", "y1", "y2", "(y1 + 2)", "zeta(6,1)", "(x^2 - y2)", "y2^2"};
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    for (int t = 0; t < 60; ++t) {
        const std::string a = atoms[pick(rng)], b = atoms[pick(rng)], c = atoms[pick(rng)];
        const NCPoly left = evaluate(parse_expression("(" + a + "*" + b + ")*" + c, pres.alphabet()), pres.rewrite());
        const NCPoly right = evaluate(parse_expression(a + "*(" + b + "*" + c + ")", pres.alphabet()), pres.rewrite());
        EXPECT_EQ(left, right) << a << " " << b << " " << c;
    }
}

TEST(Expression, RelationsVanish) {
    const auto pres = b123();
    const auto zero = [&](const std::string& s) {
        return evaluate(parse_expression(s, pres.alphabet()), pres.rewrite()).is_zero();
    };
    // q1 = zeta_6^3 = -1, q2 = zeta_6^2
    EXPECT_TRUE(zero("y1*x + x*y1"));
    EXPECT_TRUE(zero("y2*x - zeta(3,1)*x*y2"));
    EXPECT_TRUE(zero("y2^3 - y1^2 - x^6 + 1"));
    EXPECT_FALSE(zero("y1*x - x*y1"));
}

TEST(Expression, FreeExpansionMatchesEvaluation) {
    const auto pres = b123();
    for (const std::string src : {"y2*y1 - y1*y2", "x^-3 * y1 + zeta(6,1)*(x^6 - 1)", "(y1 + x)^3 * y2^2",
                                  "(3*x^-1)^-2 * y2*y1*x", "y2^3*y1^3"}) {
        const Expression e = parse_expression(src, pres.alphabet());
        EXPECT_EQ(pres.rewrite().normal_form(expand_free(e)), evaluate(e, pres.rewrite())) << src;
    }
}

TEST(ParamsJson, ScalarRoundTrip) {
    for (const CycloScalar& a : {CycloScalar(0), CycloScalar(Rational(-7, 3)), make_root(12, 5),
                                 make_root(30, 7) * CycloScalar(Rational(5, 2)) + CycloScalar(1)})
        EXPECT_EQ(scalar_from_json(scalar_to_json(a)), a);
    EXPECT_EQ(scalar_from_json(json::parse(R"({"L":4,"poly":[[1,2],[0,1],[1,1]]})")), CycloScalar(Rational(-1, 2)));
    EXPECT_EQ(scalar_from_json(json::parse(R"({"L":1,"poly":[["123456789012345678901234567890","1"]]})")),
              CycloScalar(Rational(Integer("123456789012345678901234567890"))));
    EXPECT_THROW(scalar_from_json(json::parse(R"({"L":3,"poly":[[1,0]]})")), std::invalid_argument);
    EXPECT_THROW(scalar_from_json(json("zeta")), std::invalid_argument);
}

TEST(ParamsJson, KRoundTrip) {
    const KParams k = b1_235().expand();
    const ParamsFile f = params_from_json(params_to_json(k));
    ASSERT_TRUE(f.k);
    EXPECT_EQ(f.k->M, k.M);
    EXPECT_EQ(f.k->n, k.n);
    EXPECT_EQ(f.k->p, k.p);
    EXPECT_EQ(f.k->q, k.q);
    EXPECT_EQ(f.k->alpha, k.alpha);
}

TEST(ParamsJson, Families) {
    EXPECT_EQ(params_from_json(json::parse(slurp(kData + "/b1_23.json"))).k_params().M, 6);
    EXPECT_EQ(params_from_json(json::parse(slurp(kData + "/a2_5.json"))).q, make_root(5, 1));
    EXPECT_EQ(params_from_json(json::parse(slurp(kData + "/c3.json"))).n, 3);
    EXPECT_THROW(params_from_json(json{{"family", "Z"}}), std::invalid_argument);
    EXPECT_THROW(params_from_json(json::parse(slurp(kData + "/bad_schema.json"))), std::invalid_argument);
}

TEST(Sha256, KnownVector) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Cli, ClassifyPinned) {
    const Invocation r = hopfk_run({"classify", "b1_23.json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = r.report();
    EXPECT_EQ(j["domain"], true);
    EXPECT_EQ(j["ext1"], 0);
    EXPECT_EQ(j["gldim_finite"], true);
    EXPECT_EQ(j["invariants"], json({2, 3, 6}));
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["input_digest"].get<std::string>().size(), 64u);
}

TEST(Cli, NicholsPinned) {
    const Invocation r = hopfk_run({"nichols", "n5.json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report()["supplementary"], "N5");
    EXPECT_EQ(r.report()["supplementary_finite"], true);
}

TEST(Cli, PbwCheckCountsAmbiguities) {
    const json j = hopfk_run({"pbw-check", "b1_23.json"}).report();
    EXPECT_EQ(j["all_resolved"], true);
    EXPECT_GT(j["ambiguities"].get<int>(), 0);
    EXPECT_EQ(j["ambiguities"], j["resolved"]);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(hopfk_run({"validate", "b1_23.json"}).code, kSuccess);
    EXPECT_EQ(hopfk_run({"iso", "b1_23.json", "b1_23_alpha2.json"}).code, kSuccess);
    EXPECT_EQ(hopfk_run({"iso", "b1_23.json", "b1_23_equal.json"}).code, kNegative);
    EXPECT_EQ(hopfk_run({"zerodiv", "b1_23.json", "--cap", "2"}).code, kNegative);
    EXPECT_EQ(hopfk_run({"zerodiv", "k22.json", "--cap", "4"}).code, kSuccess);
    EXPECT_EQ(hopfk_run({"validate", "bad_schema.json"}).code, kInputError);
    EXPECT_EQ(hopfk_run({"validate", "broken.json"}).code, kInputError);
    EXPECT_EQ(hopfk_run({"validate", "missing.json"}).code, kInputError);
    EXPECT_EQ(hopfk_run({"nf", "b1_23.json", "y1^-1"}).code, kInputError);
    EXPECT_EQ(hopfk_run({"nf", "b1_23.json", "w"}).code, kInputError);
    EXPECT_EQ(hopfk_run({"iso", "k22.json", "k22.json"}).code, kInputError);
    EXPECT_EQ(hopfk_run({"frobnicate"}).code, kInputError);
    EXPECT_EQ(hopfk_run({}).code, kInputError);
    EXPECT_EQ(hopfk_run({"hopf-check", "b1_23.json", "--cap", "-1"}).code, kInputError);
}

TEST(Cli, InvalidParametersAreNegativeForValidate) {
    // an invalid record is a verdict for validate and an input error elsewhere
    std::ofstream(testing::TempDir() + "bad_q.json")
        << R"({"family":"K","M":6,"p":[2,3],"q":[{"L":2,"k":1},{"L":2,"k":1}],"alpha":[0,1]})";
    std::ostringstream out, err;
    EXPECT_EQ(run({"validate", testing::TempDir() + "bad_q.json"}, out, err), kNegative);
    EXPECT_EQ(run({"pbw-check", testing::TempDir() + "bad_q.json"}, out, err), kInputError);
}

TEST(Cli, BudgetBoundsRewriting) {
    const Invocation r = hopfk_run({"--budget", "3", "nf", "b1_23.json", "y2^5*y1^3*x"});
    EXPECT_EQ(r.code, kNegative);
    EXPECT_EQ(r.report()["budget_exhausted"], true);
    EXPECT_EQ(hopfk_run({"--budget", "1000000", "nf", "b1_23.json", "y2^5*y1^3*x"}).code, kSuccess);
}

TEST(Cli, TimingIsOptIn) {
    EXPECT_FALSE(hopfk_run({"ext1", "c3.json"}).report().contains("timing_ms"));
    EXPECT_TRUE(hopfk_run({"--timing", "ext1", "c3.json"}).report().contains("timing_ms"));
}

TEST(Cli, DigestTracksInputs) {
    const auto digest = [](std::vector<std::string> args) {
        return hopfk_run(std::move(args)).report()["input_digest"].get<std::string>();
    };
    EXPECT_EQ(digest({"ext1", "b1_23.json"}), digest({"ext1", "b1_23.json"}));
    EXPECT_NE(digest({"ext1", "b1_23.json"}), digest({"ext1", "b1_23_equal.json"}));
    EXPECT_NE(digest({"zerodiv", "k22.json", "--cap", "3"}), digest({"zerodiv", "k22.json", "--cap", "4"}));
}

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
    int code;
};

void PrintTo(const GoldenCase& g, std::ostream* os) { *os << g.name; }

class Golden : public testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesFileByteForByte) {
    const GoldenCase& g = GetParam();
    const Invocation first = hopfk_run(g.args);
    const Invocation second = hopfk_run(g.args);
    EXPECT_EQ(first.code, g.code);
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.out, slurp(kData + "/golden/" + g.name + ".json"));
}

INSTANTIATE_TEST_SUITE_P(
    Reports, Golden,
    testing::Values(GoldenCase{"classify_b1_23", {"classify", "b1_23.json"}, 0},
                    GoldenCase{"classify_k22", {"classify", "k22.json"}, 0},
                    GoldenCase{"nichols_n5", {"nichols", "n5.json"}, 0},
                    GoldenCase{"nichols_batch", {"nichols", "nichols_batch.json"}, 0},
                    GoldenCase{"pbw_b1_23", {"pbw-check", "b1_23.json"}, 0},
                    GoldenCase{"pbw_b1_235", {"pbw-check", "b1_235.json"}, 0},
                    GoldenCase{"iso_pinned", {"iso", "b1_23.json", "b1_23_alpha2.json"}, 0},
                    GoldenCase{"iso_absent", {"iso", "b1_23.json", "b1_23_equal.json"}, 1},
                    GoldenCase{"zerodiv_k22", {"zerodiv", "k22.json", "--cap", "4"}, 0},
                    GoldenCase{"validate_k_10_15", {"validate", "k_10_15.json"}, 0},
                    GoldenCase{"nf_mixed", {"nf", "b1_23.json", "x^-3 * y1 + zeta(6,1)*(x^6 - 1)"}, 0},
                    GoldenCase{"ext1_c3", {"ext1", "c3.json"}, 0},
                    GoldenCase{"hopf_b1_23", {"hopf-check", "b1_23.json", "--cap", "3"}, 0},
                    GoldenCase{"primitives_b1_23_w3", {"primitives", "b1_23.json", "--weight", "3", "--cap", "6"}, 0},
                    GoldenCase{"error_negative_power", {"nf", "b1_23.json", "y1^-1"}, 2},
                    GoldenCase{"error_schema", {"validate", "bad_schema.json"}, 2}),
    [](const testing::TestParamInfo<GoldenCase>& info) { return info.param.name; });
