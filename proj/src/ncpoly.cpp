#include "hopfk/ncpoly.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>

namespace hopfk {

std::string Alphabet::letter_name(Letter l) const {
    if (l == kGroupInv) return group_name + "^-1";
    if (l == kGroup) return group_name;
    const int i = skew_index(l);
    if (i < 0 || i >= skew_count) throw std::out_of_range("letter outside alphabet");
    return skew_names.at(i);
}

std::string Alphabet::word_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '*';
        out += letter_name(w[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------

Word NFMonomial::to_word() const {
    Word out;
    const Letter g = w0 >= 0 ? kGroup : kGroupInv;
    for (long k = 0; k < (w0 >= 0 ? w0 : -w0); ++k) out.push_back(g);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (int k = 0; k < w[i]; ++k) out.push_back(skew_letter(static_cast<int>(i)));
    return out;
}

bool NFMonomial::is_grouplike() const {
    return std::all_of(w.begin(), w.end(), [](int e) { return e == 0; });
}

int NFMonomial::skew_degree() const {
    int d = 0;
    for (int e : w) d += e;
    return d;
}

std::string NFMonomial::to_string(const Alphabet& a) const {
    std::vector<std::string> parts;
    if (w0 == 1) parts.push_back(a.group_name);
    else if (w0 != 0) parts.push_back(a.group_name + "^" + std::to_string(w0));
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        parts.push_back(w[i] == 1 ? a.skew_names.at(i) : a.skew_names.at(i) + "^" + std::to_string(w[i]));
    }
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

// ---------------------------------------------------------------------------

NCPoly NCPoly::monomial(NFMonomial m, const CycloScalar& c) {
    NCPoly p;
    p.add_term(m, c);
    return p;
}

NCPoly NCPoly::constant(const CycloScalar& c, int skew_count) { return monomial(NFMonomial::one(skew_count), c); }

CycloScalar NCPoly::coefficient(const NFMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycloScalar(0) : it->second;
}

void NCPoly::add_term(const NFMonomial& m, const CycloScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const CycloScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

NCPoly NCPoly::operator-() const {
    NCPoly out = *this;
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

NCPoly NCPoly::shifted(long shift) const {
    if (shift == 0) return *this;
    NCPoly out;
    for (const auto& [m, c] : terms_) {
        NFMonomial n = m;
        n.w0 += shift;
        out.terms_.emplace_hint(out.terms_.end(), std::move(n), c);
    }
    return out;
}

std::string NCPoly::to_string(const Alphabet& a) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        CycloScalar coef = c;
        bool negative = false;
        if (coef.is_rational() && coef.rational_value() < 0) {
            negative = true;
            coef = -coef;
        }
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = m.is_grouplike() && m.w0 == 0;
        if (unit) {
            os << coef.to_string();
        } else if (coef.is_one()) {
            os << m.to_string(a);
        } else {
            os << coef.to_string() << '*' << m.to_string(a);
        }
    }
    return os.str();
}

RawPoly to_raw(const NCPoly& p) {
    RawPoly out;
    out.reserve(p.size());
    for (const auto& [m, c] : p.terms()) out.emplace_back(m.to_word(), c);
    return out;
}

// ---------------------------------------------------------------------------

MonomialOrder::MonomialOrder(std::vector<long> weights, std::vector<Letter> count_priority)
    : weights_(std::move(weights)), priority_(std::move(count_priority)) {}

long MonomialOrder::weighted_degree(const Word& w) const {
    long d = 0;
    for (Letter l : w) d += weights_[l];
    return d;
}

long MonomialOrder::weighted_degree(const NFMonomial& m) const {
    long d = 0;
    d += (m.w0 >= 0 ? m.w0 * weights_[kGroup] : -m.w0 * weights_[kGroupInv]);
    for (std::size_t i = 0; i < m.w.size(); ++i) d += m.w[i] * weights_[skew_letter(static_cast<int>(i))];
    return d;
}

std::strong_ordering MonomialOrder::compare(const Word& a, const Word& b) const {
    if (auto c = weighted_degree(a) <=> weighted_degree(b); c != 0) return c;
    for (Letter l : priority_) {
        const auto ca = std::count(a.begin(), a.end(), l);
        const auto cb = std::count(b.begin(), b.end(), l);
        if (auto c = ca <=> cb; c != 0) return c;
    }
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------

struct RewriteSystem::Cache {
    std::shared_mutex mutex;
    // (skew exponents of the left factor, right monomial) -> product without G shift
    std::map<std::pair<std::vector<int>, NFMonomial>, NCPoly> products;
    std::atomic<std::size_t> steps{0};
};

RewriteSystem::RewriteSystem(Alphabet alphabet, MonomialOrder order, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), order_(std::move(order)), rules_(std::move(rules)),
      cache_(std::make_shared<Cache>()) {
    by_first_letter_.assign(alphabet_.letter_count(), {});
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        const Rule& rule = rules_[r];
        if (rule.lhs.empty()) throw std::invalid_argument("rule with empty left-hand side");
        for (Letter l : rule.lhs)
            if (l >= alphabet_.letter_count()) throw std::invalid_argument("rule letter outside alphabet");
        for (const auto& [w, c] : rule.rhs) {
            if (!order_.less(w, rule.lhs))
                throw std::invalid_argument("rule " + rule.label + " does not decrease the monomial order");
        }
        by_first_letter_[rule.lhs[0]].push_back(r);
    }
}

RewriteSystem RewriteSystem::with_rules(std::vector<Rule> rules) const {
    return RewriteSystem(alphabet_, order_, std::move(rules));
}

std::size_t RewriteSystem::steps_taken() const { return cache_->steps.load(); }

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_redex(const Word& w, Strategy s) const {
    auto match_at = [&](std::size_t pos) -> std::optional<std::size_t> {
        for (std::size_t r : by_first_letter_[w[pos]]) {
            const Word& lhs = rules_[r].lhs;
            if (pos + lhs.size() > w.size()) continue;
            if (std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) return r;
        }
        return std::nullopt;
    };
    if (s == Strategy::Leftmost) {
        for (std::size_t pos = 0; pos < w.size(); ++pos)
            if (auto r = match_at(pos)) return std::make_pair(pos, *r);
    } else {
        for (std::size_t pos = w.size(); pos-- > 0;)
            if (auto r = match_at(pos)) return std::make_pair(pos, *r);
    }
    return std::nullopt;
}

NFMonomial RewriteSystem::to_monomial(const Word& w) const {
    NFMonomial m = NFMonomial::one(skew_count());
    std::size_t i = 0;
    if (i < w.size() && (w[i] == kGroup || w[i] == kGroupInv)) {
        const Letter g = w[i];
        while (i < w.size() && w[i] == g) {
            m.w0 += (g == kGroup ? 1 : -1);
            ++i;
        }
    }
    int last = -1;
    for (; i < w.size(); ++i) {
        if (!is_skew(w[i])) throw std::logic_error("irreducible word is not PBW shaped: " + alphabet_.word_string(w));
        const int idx = skew_index(w[i]);
        if (idx < last) throw std::logic_error("irreducible word is not PBW shaped: " + alphabet_.word_string(w));
        last = idx;
        ++m.w[idx];
    }
    return m;
}

NCPoly RewriteSystem::normal_form(const RawPoly& p, const RewriteOptions& opt) const {
    auto cmp = [this](const Word& a, const Word& b) { return order_.less(a, b); };
    std::map<Word, CycloScalar, decltype(cmp)> work(cmp);
    for (const auto& [w, c] : p) {
        auto [it, inserted] = work.try_emplace(w, c);
        if (!inserted) it->second += c;
    }
    NCPoly out;
    std::size_t steps = 0;
    while (!work.empty()) {
        auto node = work.extract(std::prev(work.end()));
        const Word& w = node.key();
        const CycloScalar& coef = node.mapped();
        if (coef.is_zero()) continue;
        auto redex = find_redex(w, opt.strategy);
        if (!redex) {
            out.add_term(to_monomial(w), coef);
            continue;
        }
        if (++steps > opt.step_budget) {
            cache_->steps += steps;
            throw RewriteBudgetExceeded("rewrite step budget exhausted");
        }
        const auto [pos, r] = *redex;
        const Rule& rule = rules_[r];
        for (const auto& [rw, rc] : rule.rhs) {
            Word next;
            next.reserve(w.size() - rule.lhs.size() + rw.size());
            next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            next.insert(next.end(), rw.begin(), rw.end());
            next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), w.end());
            if (opt.check_order && !order_.less(next, w))
                throw std::logic_error("rewrite step did not decrease the order: " + alphabet_.word_string(w));
            auto [it, inserted] = work.try_emplace(std::move(next), coef * rc);
            if (!inserted) it->second += coef * rc;
        }
    }
    cache_->steps += steps;
    return out;
}

NCPoly RewriteSystem::normal_form(const Word& w, const RewriteOptions& opt) const {
    return normal_form(RawPoly{{w, CycloScalar(1)}}, opt);
}

NCPoly RewriteSystem::multiply_monomials(const NFMonomial& a, const NFMonomial& b) const {
    if (static_cast<int>(a.w.size()) != skew_count() || static_cast<int>(b.w.size()) != skew_count())
        throw std::invalid_argument("monomials from a different presentation");
    auto key = std::make_pair(a.w, b);
    {
        std::shared_lock lock(cache_->mutex);
        auto it = cache_->products.find(key);
        if (it != cache_->products.end()) return it->second.shifted(a.w0);
    }
    NFMonomial left = a;
    left.w0 = 0;
    Word w = left.to_word();
    Word rw = b.to_word();
    w.insert(w.end(), rw.begin(), rw.end());
    NCPoly prod = normal_form(w);
    {
        std::unique_lock lock(cache_->mutex);
        cache_->products.emplace(std::move(key), prod);
    }
    return prod.shifted(a.w0);
}

NCPoly RewriteSystem::multiply(const NCPoly& a, const NCPoly& b) const {
    NCPoly out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            const CycloScalar c = ca * cb;
            const NCPoly prod = multiply_monomials(ma, mb);
            for (const auto& [m, v] : prod.terms()) out.add_term(m, c * v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Overlap> enumerate_ambiguities(const RewriteSystem& rs) {
    std::vector<Overlap> out;
    const auto& rules = rs.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const Word& a = rules[i].lhs;
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& b = rules[j].lhs;
            // suffix of a equals prefix of b, proper on both sides
            for (std::size_t k = 1; k < a.size() && k < b.size(); ++k) {
                if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) continue;
                Overlap o;
                o.rule1 = i;
                o.rule2 = j;
                o.word = a;
                o.word.insert(o.word.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
                o.pos2 = a.size() - k;
                out.push_back(std::move(o));
            }
            // b strictly inside a (or equal lhs from a different rule)
            if (i != j && b.size() <= a.size()) {
                for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos) {
                    if (!std::equal(b.begin(), b.end(), a.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
                    if (b.size() == a.size() && i > j) continue;  // identical lhs: report once
                    Overlap o;
                    o.rule1 = i;
                    o.rule2 = j;
                    o.word = a;
                    o.pos2 = pos;
                    o.inclusion = true;
                    out.push_back(std::move(o));
                }
            }
        }
    }
    return out;
}

std::size_t ConfluenceReport::resolved_count() const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const auto& r) { return r.resolved; }));
}

namespace {
RawPoly apply_at(const Word& w, std::size_t pos, const Rule& rule) {
    RawPoly out;
    for (const auto& [rw, c] : rule.rhs) {
        Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), rw.begin(), rw.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), w.end());
        out.emplace_back(std::move(next), c);
    }
    return out;
}
}  // namespace

ConfluenceReport certify_confluence(const RewriteSystem& rs, const RewriteOptions& opt) {
    ConfluenceReport report;
    for (auto& o : enumerate_ambiguities(rs)) {
        AmbiguityResult r;
        r.via_rule1 = rs.normal_form(apply_at(o.word, 0, rs.rules()[o.rule1]), opt);
        r.via_rule2 = rs.normal_form(apply_at(o.word, o.pos2, rs.rules()[o.rule2]), opt);
        r.resolved = r.via_rule1 == r.via_rule2;
        r.overlap = std::move(o);
        report.items.push_back(std::move(r));
    }
    return report;
}

}  // namespace hopfk
