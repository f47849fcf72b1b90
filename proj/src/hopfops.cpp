#include "hopfk/hopfops.hpp"

#include "hopfk/linalg.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <set>
#include <shared_mutex>

namespace hopfk {

TensorPoly TensorPoly::pure(const NFMonomial& a, const NFMonomial& b, const CycloScalar& c) {
    TensorPoly t;
    t.add_term(a, b, c);
    return t;
}

void TensorPoly::add_term(const NFMonomial& a, const NFMonomial& b, const CycloScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TensorPoly& TensorPoly::operator*=(const CycloScalar& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

TensorPoly TensorPoly::tensor(const NCPoly& p, const NCPoly& q) {
    TensorPoly t;
    for (const auto& [a, c] : p.terms())
        for (const auto& [b, d] : q.terms()) t.add_term(a, b, c * d);
    return t;
}

std::string TensorPoly::to_string(const Alphabet& al) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.to_string() + ")*" + k.first.to_string(al) + " (x) " + k.second.to_string(al);
    }
    return out;
}

// ---------------------------------------------------------------------------

struct HopfOps::Cache {
    std::shared_mutex mutex;
    std::map<std::vector<int>, TensorPoly> coproduct;
    std::map<std::vector<int>, NCPoly> antipode;
};

HopfOps::HopfOps(HopfPresentation pres) : pres_(std::move(pres)), cache_(std::make_shared<Cache>()) {}

TensorPoly HopfOps::coproduct_letter(Letter l) const {
    const int s = pres_.skew_count();
    NFMonomial g = NFMonomial::one(s);
    if (l == kGroup || l == kGroupInv) {
        g.w0 = l == kGroup ? 1 : -1;
        return TensorPoly::pure(g, g);
    }
    const int i = skew_index(l);
    NFMonomial y = NFMonomial::one(s);
    y.w[static_cast<std::size_t>(i)] = 1;
    NFMonomial right = g, left = g;
    right.w0 = pres_.coalgebra().right[static_cast<std::size_t>(i)];
    left.w0 = pres_.coalgebra().left[static_cast<std::size_t>(i)];
    TensorPoly t = TensorPoly::pure(y, right);
    t.add_term(left, y, CycloScalar(1));
    return t;
}

TensorPoly HopfOps::multiply(const TensorPoly& a, const TensorPoly& b) const {
    const auto& rs = rewrite();
    TensorPoly out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const NCPoly left = rs.multiply_monomials(ka.first, kb.first);
            const NCPoly right = rs.multiply_monomials(ka.second, kb.second);
            const CycloScalar c = ca * cb;
            for (const auto& [l, lc] : left.terms())
                for (const auto& [r, rc] : right.terms()) out.add_term(l, r, c * lc * rc);
        }
    return out;
}

TensorPoly HopfOps::coproduct(const NFMonomial& m) const {
    TensorPoly skew;
    bool found = false;
    {
        std::shared_lock lock(cache_->mutex);
        auto it = cache_->coproduct.find(m.w);
        if (it != cache_->coproduct.end()) {
            skew = it->second;
            found = true;
        }
    }
    if (!found) {
        const NFMonomial one = NFMonomial::one(pres_.skew_count());
        skew = TensorPoly::pure(one, one);
        NFMonomial sk = m;
        sk.w0 = 0;
        for (Letter l : sk.to_word()) skew = multiply(skew, coproduct_letter(l));
        std::unique_lock lock(cache_->mutex);
        cache_->coproduct.emplace(m.w, skew);
    }
    if (m.w0 == 0) return skew;
    TensorPoly out;
    for (const auto& [k, c] : skew.terms()) {
        NFMonomial a = k.first, b = k.second;
        a.w0 += m.w0;
        b.w0 += m.w0;
        out.add_term(a, b, c);
    }
    return out;
}

TensorPoly HopfOps::coproduct(const NCPoly& p) const {
    TensorPoly out;
    for (const auto& [m, c] : p.terms()) {
        TensorPoly t = coproduct(m);
        t *= c;
        out += t;
    }
    return out;
}

TensorPoly HopfOps::coproduct(const RawPoly& p) const {
    const NFMonomial one = NFMonomial::one(pres_.skew_count());
    TensorPoly out;
    for (const auto& [w, c] : p) {
        TensorPoly t = TensorPoly::pure(one, one, c);
        for (Letter l : w) t = multiply(t, coproduct_letter(l));
        out += t;
    }
    return out;
}

CycloScalar HopfOps::counit(const NCPoly& p) const {
    CycloScalar out;
    for (const auto& [m, c] : p.terms())
        if (m.is_grouplike()) out += c;
    return out;
}

CycloScalar HopfOps::counit(const RawPoly& p) const {
    CycloScalar out;
    for (const auto& [w, c] : p)
        if (std::none_of(w.begin(), w.end(), is_skew)) out += c;
    return out;
}

NCPoly HopfOps::antipode(const NFMonomial& m) const {
    const auto& rs = rewrite();
    const int s = pres_.skew_count();
    NCPoly skew;
    bool found = false;
    {
        std::shared_lock lock(cache_->mutex);
        auto it = cache_->antipode.find(m.w);
        if (it != cache_->antipode.end()) {
            skew = it->second;
            found = true;
        }
    }
    if (!found) {
        skew = NCPoly::constant(CycloScalar(1), s);
        NFMonomial sk = m;
        sk.w0 = 0;
        const Word w = sk.to_word();
        for (auto it = w.rbegin(); it != w.rend(); ++it) skew = rs.multiply(skew, pres_.antipode_table()[*it]);
        std::unique_lock lock(cache_->mutex);
        cache_->antipode.emplace(m.w, skew);
    }
    if (m.w0 == 0) return skew;
    NFMonomial g = NFMonomial::one(s);
    g.w0 = -m.w0;
    return rs.multiply(skew, NCPoly::monomial(g));
}

NCPoly HopfOps::antipode(const NCPoly& p) const {
    NCPoly out;
    for (const auto& [m, c] : p.terms()) out += antipode(m) * c;
    return out;
}

NCPoly HopfOps::antipode(const RawPoly& p) const {
    const auto& rs = rewrite();
    NCPoly out;
    for (const auto& [w, c] : p) {
        NCPoly t = NCPoly::constant(c, pres_.skew_count());
        for (auto it = w.rbegin(); it != w.rend(); ++it) t = rs.multiply(t, pres_.antipode_table()[*it]);
        out += t;
    }
    return out;
}

NCPoly HopfOps::conjugate(const NCPoly& p, long g) const {
    const int s = pres_.skew_count();
    NFMonomial a = NFMonomial::one(s), b = NFMonomial::one(s);
    a.w0 = -g;
    b.w0 = g;
    const auto& rs = rewrite();
    return rs.multiply(NCPoly::monomial(a), rs.multiply(p, NCPoly::monomial(b)));
}

TensorPoly coproduct(const NCPoly& p, const HopfPresentation& pres) { return HopfOps(pres).coproduct(p); }
CycloScalar counit(const NCPoly& p, const HopfPresentation& pres) { return HopfOps(pres).counit(p); }
NCPoly antipode(const NCPoly& p, const HopfPresentation& pres) { return HopfOps(pres).antipode(p); }

// ---------------------------------------------------------------------------

std::vector<NFMonomial> basis_monomials(const HopfPresentation& pres, long cap, long window) {
    const auto& rs = pres.rewrite();
    const int s = pres.skew_count();
    std::vector<long> weight(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) weight[static_cast<std::size_t>(i)] = rs.order().weight(skew_letter(i));

    std::vector<std::vector<int>> exps;
    std::vector<int> cur(static_cast<std::size_t>(s), 0);
    auto rec = [&](auto&& self, int i, long budget) -> void {
        if (i == s) {
            exps.push_back(cur);
            return;
        }
        const long w = std::max<long>(weight[static_cast<std::size_t>(i)], 1);
        for (long e = 0; e * w <= budget; ++e) {
            cur[static_cast<std::size_t>(i)] = static_cast<int>(e);
            self(self, i + 1, budget - e * w);
        }
        cur[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, cap);

    std::vector<NFMonomial> out;
    for (const auto& e : exps) {
        NFMonomial probe{1, e};
        NFMonomial probe_inv{-1, e};
        if (!rs.is_irreducible(probe.to_word()) || !rs.is_irreducible(probe_inv.to_word())) continue;
        for (long w0 = -window; w0 <= window; ++w0) out.push_back(NFMonomial{w0, e});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using Triple = std::map<std::array<NFMonomial, 3>, CycloScalar>;

void add3(Triple& t, const NFMonomial& a, const NFMonomial& b, const NFMonomial& c, const CycloScalar& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = t.try_emplace({a, b, c}, v);
    if (inserted) return;
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
}

enum Flags : unsigned { kCoassoc = 1, kCounit = 2, kAntipode = 4 };

unsigned check_monomial(const HopfOps& ops, const NFMonomial& m) {
    const auto& rs = ops.rewrite();
    const int s = ops.presentation().skew_count();
    unsigned bad = 0;
    const TensorPoly d = ops.coproduct(m);

    Triple left, right;
    for (const auto& [k, c] : d.terms()) {
        const TensorPoly d1 = ops.coproduct(k.first);
        const TensorPoly d2 = ops.coproduct(k.second);
        for (const auto& [k2, c2] : d1.terms()) add3(left, k2.first, k2.second, k.second, c * c2);
        for (const auto& [k2, c2] : d2.terms()) add3(right, k.first, k2.first, k2.second, c * c2);
    }
    if (left != right) bad |= kCoassoc;

    const NCPoly self = NCPoly::monomial(m);
    NCPoly el, er, sl, sr;
    for (const auto& [k, c] : d.terms()) {
        if (k.first.is_grouplike()) el.add_term(k.second, c);
        if (k.second.is_grouplike()) er.add_term(k.first, c);
        sl += rs.multiply(ops.antipode(k.first), NCPoly::monomial(k.second)) * c;
        sr += rs.multiply(NCPoly::monomial(k.first), ops.antipode(k.second)) * c;
    }
    if (!(el == self) || !(er == self)) bad |= kCounit;
    const NCPoly unit_eps = m.is_grouplike() ? NCPoly::constant(CycloScalar(1), s) : NCPoly();
    if (!(sl == unit_eps) || !(sr == unit_eps)) bad |= kAntipode;
    return bad;
}

constexpr std::size_t kMaxFailures = 20;

}  // namespace

AxiomReport check_hopf_axioms(const HopfPresentation& pres, long cap, std::optional<long> window, Execution exec) {
    AxiomReport report;
    report.cap = cap;
    report.window = window.value_or(2 * cap);
    const HopfOps ops(pres);
    const auto monomials = basis_monomials(pres, cap, report.window);
    std::vector<unsigned> flags(monomials.size(), 0);
    run_indexed(monomials.size(), exec, [&](std::size_t i) { flags[i] = check_monomial(ops, monomials[i]); });
    report.monomials_checked = monomials.size();

    auto fail = [&](const std::string& axiom, const std::string& where) {
        if (report.failures.size() < kMaxFailures) report.failures.push_back({axiom, where});
    };
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        const std::string where = monomials[i].to_string(pres.alphabet());
        if (flags[i] & kCoassoc) {
            report.coassociativity = false;
            fail("coassociativity", where);
        }
        if (flags[i] & kCounit) {
            report.counit = false;
            fail("counit", where);
        }
        if (flags[i] & kAntipode) {
            report.antipode = false;
            fail("antipode", where);
        }
    }
    for (const auto& r : pres.relations()) {
        ++report.relations_checked;
        const bool ok = ops.coproduct(r).is_zero() && ops.counit(r).is_zero() && ops.antipode(r).is_zero();
        if (!ok) {
            report.relations = false;
            std::string text;
            for (const auto& [w, c] : r) text += (text.empty() ? "" : " + ") + c.to_string() + "*" + pres.alphabet().word_string(w);
            fail("relation", text);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

namespace {

NCPoly combine(const std::vector<NFMonomial>& basis, const SparseVec& v) {
    NCPoly out;
    for (const auto& [i, c] : v) out.add_term(basis[i], c);
    return out;
}

bool in_grouplikes(const NCPoly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.first.is_grouplike(); });
}

bool is_major(const CycloScalar& lambda) {
    if (lambda.is_one()) return true;
    return !order_of(lambda).has_value();
}

void push_unique(std::vector<CycloScalar>& v, const CycloScalar& c) {
    if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
}

}  // namespace

PrimitiveSpaceReport skew_primitives(const HopfPresentation& pres, long g, long cap, std::optional<long> window) {
    PrimitiveSpaceReport report;
    report.weight_exponent = g;
    report.cap = cap;
    report.window = window.value_or(cap * std::max<long>(pres.M(), 1));
    const HopfOps ops(pres);
    const int s = pres.skew_count();

    // Non-grouplike monomials first, then x^g, then the remaining grouplikes,
    // so echelon pivots land on the interesting part of each element.
    std::vector<NFMonomial> basis = basis_monomials(pres, cap, report.window);
    std::stable_partition(basis.begin(), basis.end(), [](const NFMonomial& m) { return !m.is_grouplike(); });
    const auto first_group = static_cast<std::size_t>(
        std::find_if(basis.begin(), basis.end(), [](const NFMonomial& m) { return m.is_grouplike(); }) - basis.begin());
    auto gpos = std::find_if(basis.begin() + static_cast<std::ptrdiff_t>(first_group), basis.end(),
                             [g](const NFMonomial& m) { return m.w0 == g; });
    if (gpos != basis.end()) std::rotate(basis.begin() + static_cast<std::ptrdiff_t>(first_group), gpos, gpos + 1);
    report.unknowns = basis.size();

    std::map<NFMonomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    NFMonomial one = NFMonomial::one(s), xg = NFMonomial::one(s);
    xg.w0 = g;
    std::vector<TensorPoly::Terms> columns;
    columns.reserve(basis.size());
    for (const auto& m : basis) {
        TensorPoly t = ops.coproduct(m);
        t.add_term(m, one, CycloScalar(-1));
        t.add_term(xg, m, CycloScalar(-1));
        columns.push_back(t.terms());
    }
    const auto kernel = kernel_basis(basis.size(), rows_from_columns(columns));
    report.kernel_dimension = kernel.size();

    RowEchelon ech;
    for (const auto& v : kernel) ech.insert(v);
    std::vector<NCPoly> quotient_basis;
    std::vector<std::size_t> pivot_of;
    for (std::size_t k = 0; k < ech.rank(); ++k) {
        if (ech.pivot_columns()[k] >= first_group) continue;
        quotient_basis.push_back(combine(basis, ech.rows()[k]));
        pivot_of.push_back(ech.pivot_columns()[k]);
    }
    const std::size_t d = quotient_basis.size();
    report.quotient_dimension = d;
    if (d == 0) return report;

    // Matrix of y -> x^{-g} y x^{g} on the quotient, plus eigenvalue candidates
    // read off the diagonal in the monomial basis.
    DenseMatrix T(d, std::vector<CycloScalar>(d));
    bool closed = true;
    std::vector<CycloScalar> candidates;
    for (std::size_t k = 0; k < d; ++k) {
        const NCPoly image = ops.conjugate(quotient_basis[k], g);
        NCPoly rest = image;
        for (std::size_t j = 0; j < d; ++j) {
            const CycloScalar c = image.coefficient(basis[pivot_of[j]]);
            T[j][k] = c;
            if (!c.is_zero()) rest -= quotient_basis[j] * c;
        }
        if (!in_grouplikes(rest)) closed = false;
        const NFMonomial& lead = basis[pivot_of[k]];
        const NCPoly conj_lead = ops.conjugate(NCPoly::monomial(lead), g);
        push_unique(candidates, conj_lead.coefficient(lead));
    }
    if (!closed) {
        report.unresolved_dimension = d;
        return report;
    }

    std::size_t resolved = 0;
    for (const auto& lambda : candidates) {
        const DenseMatrix A = dense_shift(T, lambda);
        RowEchelon seen;
        DenseMatrix power = A;
        EigenSpace es;
        es.lambda = lambda;
        for (std::size_t level = 1; level <= d; ++level) {
            bool grew = false;
            for (const auto& v : dense_kernel(power)) {
                SparseVec sv;
                for (std::size_t j = 0; j < d; ++j)
                    if (!v[j].is_zero()) sv.emplace(j, v[j]);
                if (!seen.insert(sv)) continue;
                grew = true;
                NCPoly element;
                for (std::size_t j = 0; j < d; ++j)
                    if (!v[j].is_zero()) element += quotient_basis[j] * v[j];
                report.records.push_back({element, g, lambda, static_cast<int>(level), is_major(lambda)});
                if (level == 1) ++es.dimension;
            }
            if (!grew) break;
            power = dense_mul(power, A);
        }
        es.generalized_dimension = seen.rank();
        if (es.generalized_dimension > 0) {
            resolved += es.generalized_dimension;
            report.eigenspaces.push_back(es);
        }
    }
    report.unresolved_dimension = d - std::min(d, resolved);
    return report;
}

std::vector<PrimitiveSpaceReport> scan_skew_primitives(const HopfPresentation& pres, long g_min, long g_max, long cap,
                                                       std::optional<long> window, Execution exec) {
    const std::size_t n = g_max >= g_min ? static_cast<std::size_t>(g_max - g_min + 1) : 0;
    std::vector<PrimitiveSpaceReport> all(n);
    run_indexed(n, exec, [&](std::size_t i) { all[i] = skew_primitives(pres, g_min + static_cast<long>(i), cap, window); });
    std::vector<PrimitiveSpaceReport> out;
    for (auto& r : all)
        if (r.quotient_dimension > 0) out.push_back(std::move(r));
    return out;
}

// ---------------------------------------------------------------------------

WeightCommutator weight_commutator(const NCPoly& y, const HopfPresentation& pres, int max_level) {
    if (y.is_zero()) throw std::invalid_argument("zero is not a skew primitive");
    const HopfOps ops(pres);
    const int s = pres.skew_count();
    TensorPoly rest = ops.coproduct(y);
    rest -= TensorPoly::tensor(y, NCPoly::constant(CycloScalar(1), s));

    std::optional<long> weight;
    std::set<long> tried;
    for (const auto& [k, c] : rest.terms()) {
        if (!k.first.is_grouplike() || !tried.insert(k.first.w0).second) continue;
        NFMonomial xg = NFMonomial::one(s);
        xg.w0 = k.first.w0;
        if (rest == TensorPoly::tensor(NCPoly::monomial(xg), y)) {
            weight = k.first.w0;
            break;
        }
    }
    if (!weight) throw std::invalid_argument("element is not skew primitive");

    WeightCommutator out;
    out.weight_exponent = *weight;
    if (in_grouplikes(y)) {
        out.commutator = CycloScalar(1);
        out.level = 0;
        return out;
    }
    const NCPoly image = ops.conjugate(y, *weight);
    std::vector<CycloScalar> candidates;
    for (const auto& [m, c] : y.terms())
        if (!m.is_grouplike()) push_unique(candidates, image.coefficient(m) / c);
    for (int level = 1; level <= max_level; ++level) {
        for (const auto& lambda : candidates) {
            NCPoly v = y;
            for (int n = 0; n < level; ++n) v = ops.conjugate(v, *weight) - v * lambda;
            if (in_grouplikes(v)) {
                out.commutator = lambda;
                out.level = level;
                return out;
            }
        }
    }
    throw std::runtime_error("no commutator found up to the level bound");
}

// ---------------------------------------------------------------------------

std::size_t ext1_dimension(const HopfPresentation& pres) {
    // variables: 0 -> t = G - 1, 1 -> t' = G^{-1} - 1, 2 + i -> S_i
    const int s = pres.skew_count();
    std::vector<SparseVec> rows;
    for (const auto& rel : pres.relations()) {
        SparseVec lin;
        auto add = [&](std::size_t var, const CycloScalar& c) {
            auto [it, inserted] = lin.try_emplace(var, c);
            if (!inserted) it->second += c;
        };
        for (const auto& [w, c] : rel) {
            const auto skew = std::count_if(w.begin(), w.end(), is_skew);
            if (skew >= 2) continue;
            if (skew == 1) {
                add(static_cast<std::size_t>(*std::find_if(w.begin(), w.end(), is_skew)), c);
                continue;
            }
            for (Letter l : w) add(l == kGroup ? 0 : 1, c);
        }
        for (auto it = lin.begin(); it != lin.end();) it = it->second.is_zero() ? lin.erase(it) : std::next(it);
        if (!lin.empty()) rows.push_back(std::move(lin));
    }
    return static_cast<std::size_t>(2 + s) - rank(rows);
}

// ---------------------------------------------------------------------------

namespace {

struct AnnihilatorSearch {
    const HopfPresentation& pres;
    std::vector<NFMonomial> span;
    std::size_t budget;
    std::size_t start_steps;
    std::size_t tried = 0;

    std::size_t used() const { return pres.rewrite().steps_taken() - start_steps; }
    bool exhausted() const { return used() > budget; }

    std::optional<NCPoly> right_annihilator(const NCPoly& a) {
        ++tried;
        if (a.is_zero()) return std::nullopt;
        const auto& rs = pres.rewrite();
        std::vector<NCPoly::Terms> columns;
        columns.reserve(span.size());
        for (const auto& m : span) columns.push_back(rs.multiply(a, NCPoly::monomial(m)).terms());
        const auto ker = kernel_basis(span.size(), rows_from_columns(columns));
        if (ker.empty()) return std::nullopt;
        NCPoly b;
        for (const auto& [i, c] : ker.front()) b.add_term(span[i], c);
        return b;
    }
};

NCPoly skew_gen(int s, int i, const CycloScalar& c = CycloScalar(1)) {
    NFMonomial m = NFMonomial::one(s);
    m.w[static_cast<std::size_t>(i)] = 1;
    return NCPoly::monomial(m, c);
}

NCPoly group_power(int s, long e, const CycloScalar& c = CycloScalar(1)) {
    NFMonomial m = NFMonomial::one(s);
    m.w0 = e;
    return NCPoly::monomial(m, c);
}

NCPoly power(const RewriteSystem& rs, const NCPoly& y, long e, int s) {
    NCPoly out = NCPoly::constant(CycloScalar(1), s);
    for (long k = 0; k < e; ++k) out = rs.multiply(out, y);
    return out;
}

}  // namespace

ZeroDivisorSearch find_zero_divisors(const HopfPresentation& pres, long cap, std::size_t budget) {
    ZeroDivisorSearch out;
    const auto& rs = pres.rewrite();
    const int s = pres.skew_count();
    AnnihilatorSearch search{pres, basis_monomials(pres, cap, cap), budget, rs.steps_taken()};
    bool unavailable = false;

    auto accept = [&](const NCPoly& a, const NCPoly& b, const std::string& method) {
        if (a.is_zero() || b.is_zero() || !rs.multiply(a, b).is_zero()) return false;
        out.status = ZeroDivisorSearch::Status::Found;
        out.witness = std::make_pair(a, b);
        out.method = method;
        return true;
    };
    auto finish = [&]() {
        out.candidates_tried = search.tried;
        out.steps_used = search.used();
        if (out.status != ZeroDivisorSearch::Status::Found && unavailable)
            out.status = ZeroDivisorSearch::Status::WitnessUnavailable;
        return out;
    };
    auto try_seed = [&](const NCPoly& a, const std::string& method) {
        if (search.exhausted()) {
            out.budget_exhausted = true;
            return false;
        }
        if (auto b = search.right_annihilator(a)) return accept(a, *b, method);
        return false;
    };

    if (const auto& k = pres.k_params()) {
        // y_i + gamma x^{n_i} with gamma^{p_i} = alpha_j - alpha_i
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                if (i == j) continue;
                const CycloScalar d = k->alpha[j] - k->alpha[i];
                std::optional<CycloScalar> gamma = d.is_zero() ? std::optional<CycloScalar>(CycloScalar(0))
                                                               : nth_root(d, static_cast<int>(k->p[i]));
                if (!gamma) {
                    unavailable = true;
                    out.notes.push_back("witness unavailable in coefficient field: root of " + d.to_string());
                    continue;
                }
                const NCPoly a = skew_gen(s, i) + group_power(s, k->n[i], *gamma);
                if (try_seed(a, "shifted generator")) return finish();
            }

        // For gcd(p_i, p_j) > 1: a = y_i + gamma x^{n_i} and b = y_j satisfy b a = lambda a b and
        // a^{p_i} - b^{p_j} = alpha_j - alpha_i. With e | gcd and mu = lambda^{uv} primitive of order e,
        // Z = a^u + xi b^v (xi^e = -1) has Z^e scalar, so Z - rho divides zero.
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                const long d = gcd_l(k->p[i], k->p[j]);
                if (i == j || d == 1) continue;
                const CycloScalar diff = k->alpha[j] - k->alpha[i];
                const auto gamma = diff.is_zero() ? std::optional<CycloScalar>(CycloScalar(0))
                                                  : nth_root(diff, static_cast<int>(k->p[i]));
                if (!gamma) continue;
                const CycloScalar lambda = k->q[j].pow(k->n[i]);
                const NCPoly a = skew_gen(s, i) + group_power(s, k->n[i], *gamma);
                for (long e : divisors(d)) {
                    if (e == 1) continue;
                    if (search.exhausted()) {
                        out.budget_exhausted = true;
                        return finish();
                    }
                    const long u = k->p[i] / e, v = k->p[j] / e;
                    if (order_of(lambda.pow(u * v)) != e) continue;
                    ++search.tried;
                    const NCPoly Z = power(rs, a, u, s) + rs.multiply(NCPoly::constant(make_root(static_cast<int>(2 * e), 1), s),
                                                                      power(rs, skew_gen(s, j), v, s));
                    const NCPoly Ze = power(rs, Z, e, s);
                    const NFMonomial one = NFMonomial::one(s);
                    const CycloScalar c = Ze.coefficient(one);
                    if (!(Ze == NCPoly::constant(c, s))) continue;
                    if (c.is_zero()) {
                        if (accept(Z, power(rs, Z, e - 1, s), "nilpotent combination")) return finish();
                        continue;
                    }
                    const auto rho = nth_root(c, static_cast<int>(e));
                    if (!rho) {
                        unavailable = true;
                        out.notes.push_back("witness unavailable in coefficient field: root of " + c.to_string());
                        continue;
                    }
                    NCPoly rest = NCPoly::constant(CycloScalar(1), s);
                    for (long t = 1; t < e; ++t)
                        rest = rs.multiply(rest, Z - NCPoly::constant(*rho * make_root(static_cast<int>(e), t), s));
                    if (accept(Z - NCPoly::constant(*rho, s), rest, "q-commuting pair factorisation")) return finish();
                }
            }

        // Y = y_i + xi y_j with equal weight and commutator; factor (Y + c g)^p - c^p.
        long conductor = 4;
        for (const auto& q : k->q) conductor = lcm_l(conductor, q.conductor());
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) {
                if (k->n[i] != k->n[j]) continue;
                const CycloScalar lambda = k->q[i].pow(k->n[i]);
                if (!(lambda == k->q[j].pow(k->n[j])) || lambda.is_one()) continue;
                const auto p = order_of(lambda);
                if (!p) continue;
                const long N = lcm_l(conductor, 2 * *p);
                const long n = k->n[i];
                for (long e = 0; e < N; ++e) {
                    if (search.exhausted()) {
                        out.budget_exhausted = true;
                        return finish();
                    }
                    ++search.tried;
                    const NCPoly Y = skew_gen(s, i) + skew_gen(s, j, make_root(static_cast<int>(N), e));
                    const NCPoly Yp = power(rs, Y, *p, s);
                    const CycloScalar b = Yp.coefficient(NFMonomial{n * *p, std::vector<int>(static_cast<std::size_t>(s), 0)});
                    if (!(Yp == group_power(s, n * *p, b) - group_power(s, 0, b))) continue;
                    if (b.is_zero()) {
                        if (accept(Y, power(rs, Y, *p - 1, s), "nilpotent combination")) return finish();
                        continue;
                    }
                    const auto c = nth_root(-b, static_cast<int>(*p));
                    if (!c) {
                        unavailable = true;
                        out.notes.push_back("witness unavailable in coefficient field: root of " + (-b).to_string());
                        continue;
                    }
                    const NCPoly Z = Y + group_power(s, n, *c);
                    const NCPoly a = Z - group_power(s, 0, *c);
                    NCPoly rest = NCPoly::constant(CycloScalar(1), s);
                    for (long t = 1; t < *p; ++t)
                        rest = rs.multiply(rest, Z - group_power(s, 0, *c * make_root(static_cast<int>(*p), t)));
                    if (accept(a, rest, "root-of-unity factorisation")) return finish();
                }
            }
    }

    // Binomials over a small span.
    std::vector<NFMonomial> small = basis_monomials(pres, std::max<long>(cap / 2, 1), 1);
    small.erase(std::remove_if(small.begin(), small.end(), [](const NFMonomial& m) { return m.is_grouplike() && m.w0 != 0; }),
                small.end());
    for (const auto& m : small)
        if (!m.is_grouplike() && try_seed(NCPoly::monomial(m), "monomial")) return finish();
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i + 1; j < small.size(); ++j)
            for (int sign : {1, -1}) {
                if (out.budget_exhausted) return finish();
                const NCPoly a = NCPoly::monomial(small[i]) + NCPoly::monomial(small[j], CycloScalar(sign));
                if (try_seed(a, "binomial")) return finish();
            }
    return finish();
}

}  // namespace hopfk
