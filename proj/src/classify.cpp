#include "hopfk/classify.hpp"

#include <algorithm>
#include <numeric>

namespace hopfk {

void require_valid(const KParams& params) {
    const auto report = validate(params);
    for (const auto& c : report.checks)
        if (c.required && !c.pass) throw InvalidPresentation("condition " + c.id + " fails: " + c.detail);
}

bool is_domain(const KParams& params) {
    require_valid(params);
    return validate(params).passes("K.coprime");
}

bool ext_vanishes(const KParams& params) {
    require_valid(params);
    return validate(params).passes("K.alpha_distinct");
}

std::vector<long> invariant_set(const KParams& params) {
    require_valid(params);
    std::vector<long> out = params.n;
    out.push_back(params.M);
    std::sort(out.begin(), out.end());
    return out;
}

bool gldim_finite(const KParams& params) { return params.s == 2 && ext_vanishes(params); }

bool a_family_iso(long m, const CycloScalar& r, long n, const CycloScalar& q) {
    if (m == n && r == q) return true;
    return m == -n && !q.is_zero() && r == q.inv();
}

bool IsoWitness::scales_realised() const {
    return std::all_of(generator_scales.begin(), generator_scales.end(), [](const auto& c) { return c.has_value(); });
}

namespace {

// alpha'_{pi(i)} - alpha'_{pi(0)} = c (alpha_i - alpha_0) for all i; c = 1 when a has equal alphas.
std::optional<CycloScalar> solve_scale(const KParams& a, const KParams& b, const std::vector<int>& pi) {
    const auto s = static_cast<std::size_t>(a.s);
    std::optional<CycloScalar> c;
    for (std::size_t i = 1; i < s; ++i) {
        const CycloScalar d = a.alpha[i] - a.alpha[0];
        const CycloScalar e = b.alpha[static_cast<std::size_t>(pi[i])] - b.alpha[static_cast<std::size_t>(pi[0])];
        if (d.is_zero() != e.is_zero()) return std::nullopt;
        if (d.is_zero()) continue;
        const CycloScalar r = e / d;
        if (c && !(*c == r)) return std::nullopt;
        c = r;
    }
    return c.value_or(CycloScalar(1));
}

bool shapes_match(const KParams& a, const KParams& b, const std::vector<int>& pi) {
    if (a.M != b.M) return false;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        const auto j = static_cast<std::size_t>(pi[i]);
        if (a.p[i] != b.p[j] || !(a.q[i] == b.q[j])) return false;
    }
    return true;
}

void fill_scales(IsoWitness& w, const KParams& a) {
    w.generator_scales.clear();
    for (long p : a.p) w.generator_scales.push_back(nth_root(w.c, static_cast<int>(p)));
    if (!w.scales_realised()) w.flags.push_back("witness scalar outside coefficient field");
}

}  // namespace

std::optional<IsoWitness> iso_test(const KParams& a, const KParams& b) {
    if (!is_domain(a) || !is_domain(b)) throw InvalidPresentation("isomorphism test needs domains");
    if (a.s != b.s) return std::nullopt;
    std::vector<int> pi(static_cast<std::size_t>(a.s));
    std::iota(pi.begin(), pi.end(), 0);
    do {
        if (!shapes_match(a, b, pi)) continue;
        const auto c = solve_scale(a, b, pi);
        if (!c) continue;
        IsoWitness w;
        w.permutation = pi;
        w.c = *c;
        fill_scales(w, a);
        return w;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return std::nullopt;
}

bool witness_holds(const IsoWitness& w, const KParams& a, const KParams& b) {
    if (a.s != b.s || w.permutation.size() != static_cast<std::size_t>(a.s) || w.c.is_zero()) return false;
    std::vector<int> sorted = w.permutation;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i)) return false;
    if (!shapes_match(a, b, w.permutation)) return false;
    const auto& pi = w.permutation;
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = 0; j < pi.size(); ++j) {
            const CycloScalar lhs = b.alpha[static_cast<std::size_t>(pi[i])] - b.alpha[static_cast<std::size_t>(pi[j])];
            if (!(lhs == w.c * (a.alpha[i] - a.alpha[j]))) return false;
        }
    for (std::size_t i = 0; i < w.generator_scales.size(); ++i)
        if (w.generator_scales[i] && !(w.generator_scales[i]->pow(a.p[i]) == w.c)) return false;
    return true;
}

IsoWitness inverse(const IsoWitness& w) {
    IsoWitness out;
    out.permutation.resize(w.permutation.size());
    out.generator_scales.resize(w.generator_scales.size());
    for (std::size_t i = 0; i < w.permutation.size(); ++i) {
        const auto j = static_cast<std::size_t>(w.permutation[i]);
        out.permutation[j] = static_cast<int>(i);
        if (i < w.generator_scales.size() && w.generator_scales[i]) out.generator_scales[j] = w.generator_scales[i]->inv();
    }
    out.c = w.c.inv();
    out.flags = w.flags;
    return out;
}

IsoWitness compose(const IsoWitness& w1, const IsoWitness& w2) {
    IsoWitness out;
    out.c = w2.c * w1.c;
    for (std::size_t i = 0; i < w1.permutation.size(); ++i) {
        const auto j = static_cast<std::size_t>(w1.permutation[i]);
        out.permutation.push_back(w2.permutation[j]);
        const auto& a = w1.generator_scales[i];
        const auto& b = w2.generator_scales[j];
        out.generator_scales.push_back(a && b ? std::optional<CycloScalar>(*a * *b) : std::nullopt);
    }
    if (!out.scales_realised()) out.flags.push_back("witness scalar outside coefficient field");
    return out;
}

}  // namespace hopfk
