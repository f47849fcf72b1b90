#pragma once

#include "hopfk/hopfops.hpp"
#include "hopfk/presentations.hpp"

#include <numeric>
#include <ostream>
#include <random>

namespace hopfk {

inline Alphabet default_alphabet(int s) {
    Alphabet a;
    a.skew_count = s;
    for (int i = 0; i < s; ++i) a.skew_names.push_back("y" + std::to_string(i + 1));
    return a;
}

inline void PrintTo(const NCPoly& p, std::ostream* os) {
    const int s = p.is_zero() ? 0 : static_cast<int>(p.terms().begin()->first.w.size());
    *os << p.to_string(default_alphabet(s));
}

inline void PrintTo(const TensorPoly& p, std::ostream* os) {
    const int s = p.is_zero() ? 0 : static_cast<int>(p.terms().begin()->first.first.w.size());
    *os << p.to_string(default_alphabet(s));
}

inline void PrintTo(const CycloScalar& c, std::ostream* os) { *os << c.to_string(); }

}  // namespace hopfk

namespace fixtures {

using namespace hopfk;

inline BParams b_params(long n, std::vector<long> p, long q_exp, std::vector<long> alpha) {
    BParams b;
    b.n = n;
    b.p = std::move(p);
    b.q = make_root(static_cast<int>(b.ell()), q_exp);
    for (long a : alpha) b.alpha.emplace_back(a);
    return b;
}

// B(1,{2,3},zeta_6,{0,1})
inline BParams b1_23(long a2 = 1) { return b_params(1, {2, 3}, 1, {0, a2}); }
// B(1,{2,3,5},zeta_30,{0,1,2})
inline BParams b1_235() { return b_params(1, {2, 3, 5}, 1, {0, 1, 2}); }

// K({2,2},{-1,-1},{0,1},2): fails coprimality but is a well defined Hopf algebra
inline KParams k22() { return KParams::from_p(2, {2, 2}, {CycloScalar(-1), CycloScalar(-1)}, {CycloScalar(0), CycloScalar(1)}); }

inline HopfPresentation b123_pres() { return HopfPresentation::b_family(b1_23()); }

inline NCPoly mono(const HopfPresentation& h, long w0, std::vector<int> w, const CycloScalar& c = CycloScalar(1)) {
    NFMonomial m{w0, std::move(w)};
    m.w.resize(static_cast<std::size_t>(h.skew_count()), 0);
    return NCPoly::monomial(m, c);
}

inline Word random_word(std::mt19937& rng, int letters, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> letter(0, letters - 1);
    Word w(len(rng));
    for (auto& l : w) l = static_cast<Letter>(letter(rng));
    return w;
}

inline RawPoly random_raw(std::mt19937& rng, int letters, std::size_t max_len, int terms) {
    std::uniform_int_distribution<int> coef(-3, 3);
    RawPoly p;
    for (int t = 0; t < terms; ++t) p.emplace_back(random_word(rng, letters, max_len), CycloScalar(coef(rng)));
    return p;
}

/// Two-generator K instances with M <= max_M: for every ordered pair of
/// divisors p_1 < p_2 of M (both >= 2), the first admissible (q_1, q_2)
/// in exponent order, with alpha = (0, 1).
inline std::vector<KParams> k_grid(long max_M) {
    std::vector<KParams> out;
    for (long M = 2; M <= max_M; ++M)
        for (long p1 = 2; p1 <= M; ++p1)
            for (long p2 = p1; p2 <= M; ++p2) {
                if (M % p1 || M % p2) continue;
                bool found = false;
                for (long a = 1; a < p1 && !found; ++a)
                    for (long b = 1; b < p2 && !found; ++b) {
                        KParams k = KParams::from_p(M, {p1, p2}, {make_root(static_cast<int>(p1), a), make_root(static_cast<int>(p2), b)},
                                                    {CycloScalar(0), CycloScalar(1)});
                        if (!validate(k).ok()) continue;
                        out.push_back(std::move(k));
                        found = true;
                    }
            }
    return out;
}

inline KParams k_of_b(long n, std::vector<long> p, long q_exp, std::vector<long> alpha) {
    return b_params(n, std::move(p), q_exp, std::move(alpha)).expand();
}

// Domain instances with some isomorphic pairs (alpha rescaled) mixed in.
inline std::vector<KParams> iso_pool() {
    std::vector<KParams> pool;
    for (long a : {0, 1, 2, -3}) pool.push_back(k_of_b(1, {2, 3}, 1, {0, a}));
    for (long a : {1, 2}) pool.push_back(k_of_b(1, {2, 3}, 5, {0, a}));
    for (long a : {1, 5}) pool.push_back(k_of_b(1, {2, 5}, 3, {0, a}));
    pool.push_back(k_of_b(5, {2, 3}, 1, {0, 1}));
    pool.push_back(k_of_b(1, {3, 4}, 1, {4, 1}));
    pool.push_back(k_of_b(1, {3, 4}, 1, {0, 3}));
    for (auto al : {std::vector<long>{0, 1, 2}, {0, 2, 4}, {0, 1, 1}, {0, -1, -2}, {3, 3, 3}})
        pool.push_back(k_of_b(1, {2, 3, 5}, 7, al));
    return pool;
}

/// The presentations exercised by the confluence and axiom checks.
inline std::vector<HopfPresentation> standard_instances() {
    return {HopfPresentation::b_family(b1_23()), HopfPresentation::b_family(b1_235()), HopfPresentation::k_family(k22()),
            HopfPresentation::a_family(2, make_root(5, 1)), HopfPresentation::c_family(3)};
}

}  // namespace fixtures
