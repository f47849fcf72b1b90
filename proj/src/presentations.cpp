#include "hopfk/presentations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopfk {

Word grouplike_power(long e) {
    return Word(static_cast<std::size_t>(e >= 0 ? e : -e), e >= 0 ? kGroup : kGroupInv);
}

KParams KParams::from_p(long M, std::vector<long> p, std::vector<CycloScalar> q, std::vector<CycloScalar> alpha) {
    KParams k;
    k.s = static_cast<int>(p.size());
    k.M = M;
    for (long pi : p) k.n.push_back(pi > 0 ? M / pi : 0);
    k.p = std::move(p);
    k.q = std::move(q);
    k.alpha = std::move(alpha);
    return k;
}

long BParams::ell() const {
    long l = 1;
    for (long pi : p) l *= pi;
    return l;
}

KParams BParams::expand() const {
    KParams k;
    k.s = static_cast<int>(p.size());
    k.M = M();
    for (int i = 0; i < k.s; ++i) {
        k.p.push_back(p[i]);
        k.n.push_back(k.M / p[i]);
        k.q.push_back(q.pow(m(i)));
    }
    k.alpha = alpha;
    return k;
}

// ---------------------------------------------------------------------------

bool ValidationReport::passes(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return c.pass;
    return false;
}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass || !c.required; });
}

ValidationReport validate(const KParams& k) {
    ValidationReport r;
    auto add = [&](std::string id, bool pass, std::string detail, bool required = true) {
        r.checks.push_back({std::move(id), pass, required, std::move(detail)});
    };
    const auto s = static_cast<std::size_t>(std::max(k.s, 0));
    const bool shapes = k.s >= 1 && k.n.size() == s && k.p.size() == s && k.q.size() == s && k.alpha.size() == s;

    add("K.rank", k.s >= 2 && k.M >= 2, "s=" + std::to_string(k.s) + ", M=" + std::to_string(k.M));

    bool c2 = shapes;
    for (std::size_t i = 0; c2 && i < s; ++i) c2 = k.n[i] > 0 && k.p[i] > 0 && k.n[i] * k.p[i] == k.M;
    add("K.order", c2, shapes ? "M = n_i p_i" : "parameter lists have inconsistent lengths");

    bool c3 = shapes;
    for (std::size_t i = 0; c3 && i < s; ++i) c3 = !k.q[i].is_zero();
    add("K.q_nonzero", c3, "q_i nonzero");

    bool c4 = c2 && c3;
    std::string d4;
    for (std::size_t i = 0; c4 && i < s; ++i) {
        const bool a = is_primitive_pth_root(k.q[i], k.p[i]);
        const bool b = is_primitive_pth_root(k.q[i].pow(k.n[i]), k.p[i]);
        if (!a || !b) {
            c4 = false;
            d4 = "fails at i=" + std::to_string(i + 1);
        }
    }
    add("K.q_primitive", c4, d4.empty() ? "q_i and q_i^{n_i} primitive p_i-th roots" : d4);

    bool c5 = c2 && c3;
    std::string d5;
    for (std::size_t i = 0; c5 && i < s; ++i)
        for (std::size_t j = i + 1; c5 && j < s; ++j)
            if (!(k.q[j].pow(k.n[i]) * k.q[i].pow(k.n[j])).is_one()) {
                c5 = false;
                d5 = "fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            }
    add("K.q_compatible", c5, d5.empty() ? "q_j^{n_i} q_i^{n_j} = 1" : d5);

    add("K.alpha", shapes, "alpha_i given");

    bool c7 = c2;
    for (std::size_t i = 0; c7 && i < s; ++i)
        for (std::size_t j = i + 1; c7 && j < s; ++j) c7 = gcd_l(k.p[i], k.p[j]) == 1;
    add("K.coprime", c7, "p_i pairwise coprime", false);

    bool c8 = false;
    for (std::size_t i = 0; shapes && i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) c8 = c8 || !(k.alpha[i] == k.alpha[j]);
    add("K.alpha_distinct", c8, "some alpha_i differ", false);

    bool c13 = shapes;
    for (std::size_t i = 0; c13 && i < s; ++i) c13 = k.p[i] >= 2;
    add("K.p_min", c13, "p_i >= 2");
    return r;
}

ValidationReport validate(const BParams& b) {
    ValidationReport r;
    bool inc = !b.p.empty() && b.p[0] > 1;
    for (std::size_t i = 1; inc && i < b.p.size(); ++i) inc = b.p[i] > b.p[i - 1];
    r.checks.push_back({"B.increasing", inc, true, "1 < p_1 < ... < p_s"});
    bool cop = inc;
    for (std::size_t i = 0; cop && i < b.p.size(); ++i)
        for (std::size_t j = i + 1; cop && j < b.p.size(); ++j) cop = gcd_l(b.p[i], b.p[j]) == 1;
    r.checks.push_back({"B.coprime", cop, true, "p_i pairwise coprime"});
    r.checks.push_back({"B.n", b.n >= 1, true, "n >= 1"});
    r.checks.push_back({"B.alpha", b.alpha.size() == b.p.size(), true, "one alpha per p_i"});
    const bool qok = inc && !b.q.is_zero() && is_primitive_pth_root(b.q, b.ell());
    r.checks.push_back({"B.q", qok, true, "q primitive ell-th root"});
    if (inc && b.n >= 1 && b.alpha.size() == b.p.size()) {
        for (auto& c : validate(b.expand()).checks) r.checks.push_back(std::move(c));
    }
    return r;
}

std::optional<BFormResult> to_b_form(const KParams& k) {
    const auto report = validate(k);
    for (const char* id : {"K.order", "K.q_nonzero", "K.q_primitive", "K.q_compatible", "K.alpha"})
        if (!report.passes(id)) return std::nullopt;
    if (!report.passes("K.coprime")) return std::nullopt;

    std::vector<int> perm(static_cast<std::size_t>(k.s));
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return k.p[a] < k.p[b]; });

    long ell = 1;
    for (long pi : k.p) ell *= pi;
    std::vector<RootOfUnity> qi;
    for (const auto& q : k.q) qi.push_back(*as_root_of_unity(q));

    BFormResult out;
    for (long e = 0; e < ell; ++e) {
        bool good = true;
        for (int i = 0; good && i < k.s; ++i) good = RootOfUnity(ell, e * (ell / k.p[i])) == qi[i];
        if (good) out.candidates.push_back(e);
    }
    if (out.candidates.empty()) return std::nullopt;
    out.exponent = out.candidates.front();
    out.permutation = perm;
    out.params.n = k.M / ell;
    out.params.q = make_root(static_cast<int>(ell), out.exponent);
    for (int i : perm) {
        out.params.p.push_back(k.p[i]);
        out.params.alpha.push_back(k.alpha[i]);
    }
    if (out.params.n * ell != k.M) return std::nullopt;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Word skew_power(int i, long e) { return Word(static_cast<std::size_t>(e), skew_letter(i)); }

void append_scaled(RawPoly& out, const RawPoly& in, const CycloScalar& c) {
    for (const auto& [w, v] : in) out.emplace_back(w, v * c);
}

std::string join_scalars(const std::vector<CycloScalar>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
    return out + "}";
}

std::string join_longs(const std::vector<long>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "}";
}

std::vector<Rule> inverse_rules() {
    return {{{kGroup, kGroupInv}, {{{}, CycloScalar(1)}}, "G*G^-1"},
            {{kGroupInv, kGroup}, {{{}, CycloScalar(1)}}, "G^-1*G"}};
}

}  // namespace

HopfPresentation HopfPresentation::k_family(const KParams& params) {
    const auto report = validate(params);
    for (const char* id : {"K.order", "K.q_nonzero", "K.q_primitive", "K.q_compatible", "K.alpha", "K.p_min"}) {
        if (!report.passes(id)) throw InvalidPresentation(std::string("condition ") + id + " fails");
    }
    if (params.M < 2) throw InvalidPresentation("M must be at least 2");

    KParams k = params;
    const CycloScalar a1 = k.alpha[0];
    for (auto& a : k.alpha) a -= a1;
    const int s = k.s;

    Alphabet alpha;
    alpha.skew_count = s;
    for (int i = 0; i < s; ++i) alpha.skew_names.push_back("y" + std::to_string(i + 1));

    long L = 1;
    for (long pi : k.p) L = lcm_l(L, pi);
    std::vector<long> weights{0, 0};
    std::vector<Letter> priority;
    for (int i = 0; i < s; ++i) weights.push_back(L / k.p[i]);
    for (int i = s; i-- > 0;) priority.push_back(skew_letter(i));

    std::vector<Rule> rules = inverse_rules();
    rules[0].label = "x*x^-1";
    rules[1].label = "x^-1*x";
    for (int i = 0; i < s; ++i) {
        const Letter y = skew_letter(i);
        const std::string yn = alpha.skew_names[i];
        rules.push_back({{y, kGroup}, {{{kGroup, y}, k.q[i]}}, yn + "*x"});
        rules.push_back({{y, kGroupInv}, {{{kGroupInv, y}, k.q[i].inv()}}, yn + "*x^-1"});
    }
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < j; ++i)
            rules.push_back({{skew_letter(j), skew_letter(i)},
                             {{{skew_letter(i), skew_letter(j)}, k.q[j].pow(k.n[i])}},
                             alpha.skew_names[j] + "*" + alpha.skew_names[i]});
    for (int j = 1; j < s; ++j) {
        RawPoly rhs{{skew_power(0, k.p[0]), CycloScalar(1)}};
        if (!k.alpha[j].is_zero()) {
            rhs.emplace_back(grouplike_power(k.M), k.alpha[j]);
            rhs.emplace_back(Word{}, -k.alpha[j]);
        }
        rules.push_back({skew_power(j, k.p[j]), rhs, alpha.skew_names[j] + "^" + std::to_string(k.p[j])});
    }

    HopfPresentation h(Family::K, RewriteSystem(alpha, MonomialOrder(weights, priority), std::move(rules)));

    auto& rel = h.relations_;
    rel.push_back({{{kGroup, kGroupInv}, CycloScalar(1)}, {{}, CycloScalar(-1)}});
    rel.push_back({{{kGroupInv, kGroup}, CycloScalar(1)}, {{}, CycloScalar(-1)}});
    for (int i = 0; i < s; ++i)
        rel.push_back({{{skew_letter(i), kGroup}, CycloScalar(1)}, {{kGroup, skew_letter(i)}, -k.q[i]}});
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < j; ++i)
            rel.push_back({{{skew_letter(j), skew_letter(i)}, CycloScalar(1)},
                           {{skew_letter(i), skew_letter(j)}, -k.q[j].pow(k.n[i])}});
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < j; ++i) {
            const CycloScalar d = k.alpha[j] - k.alpha[i];
            RawPoly r{{skew_power(j, k.p[j]), CycloScalar(1)}, {skew_power(i, k.p[i]), CycloScalar(-1)}};
            append_scaled(r, {{grouplike_power(k.M), CycloScalar(1)}, {{}, CycloScalar(-1)}}, -d);
            rel.push_back(std::move(r));
        }

    h.coalgebra_.left = k.n;
    h.coalgebra_.right.assign(static_cast<std::size_t>(s), 0);
    h.k_ = std::move(k);
    h.fill_antipode();
    return h;
}

HopfPresentation HopfPresentation::b_family(const BParams& params) {
    const auto report = validate(params);
    for (const auto& c : report.checks)
        if (c.required && !c.pass) throw InvalidPresentation("B-form condition " + c.id + " fails");
    return k_family(params.expand());
}

HopfPresentation HopfPresentation::a_family(long n, const CycloScalar& q) {
    if (q.is_zero()) throw InvalidPresentation("A(n,q) needs q != 0");
    Alphabet alpha;
    alpha.skew_count = 1;
    alpha.skew_names = {"y"};
    const Letter y = skew_letter(0);
    std::vector<Rule> rules = inverse_rules();
    rules[0].label = "x*x^-1";
    rules[1].label = "x^-1*x";
    // x y = q y x
    rules.push_back({{y, kGroup}, {{{kGroup, y}, q.inv()}}, "y*x"});
    rules.push_back({{y, kGroupInv}, {{{kGroupInv, y}, q}}, "y*x^-1"});
    HopfPresentation h(Family::A, RewriteSystem(alpha, MonomialOrder({0, 0, 1}, {y}), std::move(rules)));
    h.relations_.push_back({{{kGroup, kGroupInv}, CycloScalar(1)}, {{}, CycloScalar(-1)}});
    h.relations_.push_back({{{kGroupInv, kGroup}, CycloScalar(1)}, {{}, CycloScalar(-1)}});
    h.relations_.push_back({{{kGroup, y}, CycloScalar(1)}, {{y, kGroup}, -q}});
    h.coalgebra_.left = {n};
    h.coalgebra_.right = {0};
    h.cmp_n_ = n;
    h.cmp_q_ = q;
    h.fill_antipode();
    return h;
}

HopfPresentation HopfPresentation::c_family(long n) {
    if (n < 1) throw InvalidPresentation("C(n) needs n >= 1");
    Alphabet alpha;
    alpha.group_name = "y";
    alpha.skew_count = 1;
    alpha.skew_names = {"x"};
    const Letter x = skew_letter(0);
    std::vector<Rule> rules = inverse_rules();
    rules[0].label = "y*y^-1";
    rules[1].label = "y^-1*y";
    // x y - y x = y^n - y
    rules.push_back({{x, kGroup},
                     {{{kGroup, x}, CycloScalar(1)}, {grouplike_power(n), CycloScalar(1)}, {{kGroup}, CycloScalar(-1)}},
                     "x*y"});
    // x y^-1 = y^-1 x - y^{n-2} + y^-1
    rules.push_back({{x, kGroupInv},
                     {{{kGroupInv, x}, CycloScalar(1)},
                      {grouplike_power(n - 2), CycloScalar(-1)},
                      {{kGroupInv}, CycloScalar(1)}},
                     "x*y^-1"});
    HopfPresentation h(Family::C, RewriteSystem(alpha, MonomialOrder({0, 0, 1}, {x}), std::move(rules)));
    h.relations_.push_back({{{kGroup, kGroupInv}, CycloScalar(1)}, {{}, CycloScalar(-1)}});
    h.relations_.push_back({{{kGroupInv, kGroup}, CycloScalar(1)}, {{}, CycloScalar(-1)}});
    h.relations_.push_back({{{x, kGroup}, CycloScalar(1)},
                            {{kGroup, x}, CycloScalar(-1)},
                            {grouplike_power(n), CycloScalar(-1)},
                            {{kGroup}, CycloScalar(1)}});
    h.coalgebra_.left = {0};
    h.coalgebra_.right = {n - 1};
    h.cmp_n_ = n;
    h.fill_antipode();
    return h;
}

void HopfPresentation::fill_antipode() {
    const int s = skew_count();
    antipode_.assign(static_cast<std::size_t>(2 + s), NCPoly{});
    NFMonomial g = NFMonomial::one(s);
    g.w0 = -1;
    antipode_[kGroup] = NCPoly::monomial(g);
    g.w0 = 1;
    antipode_[kGroupInv] = NCPoly::monomial(g);
    for (int i = 0; i < s; ++i) {
        // S(S_i) = -G^{-left} S_i G^{-right}
        Word w = concat(concat(grouplike_power(-coalgebra_.left[i]), Word{skew_letter(i)}),
                        grouplike_power(-coalgebra_.right[i]));
        antipode_[skew_letter(i)] = rs_.normal_form(RawPoly{{w, CycloScalar(-1)}});
    }
}

HopfPresentation HopfPresentation::with_antipode(Letter l, NCPoly image) const {
    HopfPresentation h = *this;
    h.antipode_.at(l) = std::move(image);
    return h;
}

HopfPresentation HopfPresentation::with_rules(std::vector<Rule> rules) const {
    HopfPresentation h = *this;
    h.rs_ = rs_.with_rules(std::move(rules));
    return h;
}

std::string HopfPresentation::describe() const {
    std::ostringstream os;
    switch (family_) {
        case Family::K:
            os << "K(p=" << join_longs(k_->p) << ", q=" << join_scalars(k_->q) << ", alpha=" << join_scalars(k_->alpha)
               << ", M=" << k_->M << ")";
            break;
        case Family::A: os << "A(" << cmp_n_ << ", " << cmp_q_.to_string() << ")"; break;
        case Family::C: os << "C(" << cmp_n_ << ")"; break;
    }
    return os.str();
}

}  // namespace hopfk
