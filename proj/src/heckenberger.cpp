#include "hopfk/heckenberger.hpp"

#include "hopfk/classify.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace hopfk {

namespace {

using Root = RootOfUnity;

Root root(const CycloScalar& c) {
    auto r = as_root_of_unity(c);
    if (!r) throw std::invalid_argument("not a root of unity: " + c.to_string());
    return *r;
}

Root neg(const Root& x) { return x * Root::minus_one(); }
bool one(const Root& x) { return x.is_one(); }
bool in_R(const Root& x, std::initializer_list<long> orders) {
    for (long n : orders)
        if (x.in_R(n)) return true;
    return false;
}

// a = q11, r = q12 q21, b = q22
struct Entries {
    Root a, r, b;
};

using Pred = std::function<bool(const Entries&)>;

struct Row {
    const char* label;
    Pred pre;
    Pred cond;
};

bool pre2(const Entries& e) { return !one(e.r) && one(e.r * e.b); }
bool pre3(const Entries& e) {
    return !one(e.r) && !one(e.a * e.r) && !one(e.r * e.b) && e.b == Root::minus_one() && in_R(e.a, {2, 3});
}
bool pre4(const Entries& e) {
    return !one(e.r) && !one(e.a * e.r) && !one(e.r * e.b) && e.b == Root::minus_one() && !in_R(e.a, {2, 3});
}
bool pre5(const Entries& e) {
    return !one(e.r) && !one(e.a * e.r) && !one(e.r * e.b) && !(e.a == Root::minus_one()) && e.b.in_R(3);
}

const std::vector<Row>& table() {
    static const std::vector<Row> rows = {
        {"1", [](const Entries&) { return true; }, [](const Entries& e) { return one(e.r); }},

        {"2.1", pre2, [](const Entries& e) { return one(e.a * e.r); }},
        {"2.2", pre2, [](const Entries& e) { return e.a == Root::minus_one() && !one(e.r.pow(2)); }},
        {"2.3", pre2, [](const Entries& e) { return one(e.a.pow(2) * e.r); }},
        {"2.4", pre2, [](const Entries& e) { return one(e.a.pow(3) * e.r) && !one(e.a.pow(2)); }},
        {"2.5", pre2, [](const Entries& e) { return e.a.in_R(3) && !one(e.r.pow(3)); }},
        {"2.6", pre2, [](const Entries& e) { return e.r.in_R(8) && e.a == e.r.pow(2); }},
        {"2.7", pre2, [](const Entries& e) { return e.r.in_R(24) && e.a == e.r.pow(6); }},
        {"2.8", pre2, [](const Entries& e) { return e.r.in_R(30) && e.a == e.r.pow(12); }},

        {"3.1", pre3, [](const Entries& e) { return e.a == Root::minus_one() && !one(e.r.pow(2)); }},
        {"3.2", pre3, [](const Entries& e) { return e.a.in_R(3) && (e.r == e.a || e.r == neg(e.a)); }},
        {"3.3", pre3,
         [](const Entries& e) {
             const Root q0 = e.a * e.r;
             return q0.in_R(12) && e.a == q0.pow(4);
         }},
        {"3.4", pre3, [](const Entries& e) { return e.r.in_R(12) && e.a == neg(e.r.pow(2)); }},
        {"3.5", pre3, [](const Entries& e) { return e.r.in_R(9) && e.a == e.r.pow(-3); }},
        {"3.6", pre3, [](const Entries& e) { return e.r.in_R(24) && e.a == neg(e.r.pow(4)); }},
        {"3.7", pre3, [](const Entries& e) { return e.r.in_R(30) && e.a == neg(e.r.pow(5)); }},

        {"4.1", pre4, [](const Entries& e) { return e.r == e.a.pow(-2); }},
        {"4.2", pre4, [](const Entries& e) { return in_R(e.a, {5, 8, 12, 14, 20}) && e.r == e.a.pow(-3); }},
        {"4.3", pre4, [](const Entries& e) { return in_R(e.a, {10, 18}) && e.r == e.a.pow(-4); }},
        {"4.4", pre4, [](const Entries& e) { return in_R(e.a, {14, 24}) && e.r == e.a.pow(-5); }},
        {"4.5", pre4, [](const Entries& e) { return e.r.in_R(8) && e.a == e.r.pow(-2); }},
        {"4.6", pre4, [](const Entries& e) { return e.r.in_R(12) && e.a == e.r.pow(-3); }},
        {"4.7", pre4, [](const Entries& e) { return e.r.in_R(20) && e.a == e.r.pow(-4); }},
        {"4.8", pre4, [](const Entries& e) { return e.r.in_R(30) && e.a == e.r.pow(-6); }},

        {"5.1", pre5,
         [](const Entries& e) {
             const Root q0 = e.a * e.r;
             return q0.in_R(12) && e.a == q0.pow(4) && e.b == neg(q0.pow(2));
         }},
        {"5.2", pre5, [](const Entries& e) { return e.r.in_R(12) && e.a == neg(e.r.pow(2)) && e.b == e.a; }},
        {"5.3", pre5, [](const Entries& e) { return e.r.in_R(24) && e.a == e.r.pow(-6) && e.b == e.r.pow(-8); }},
        {"5.4", pre5, [](const Entries& e) { return e.a.in_R(18) && e.r == e.a.pow(-2) && e.b == neg(e.a.pow(3)); }},
        {"5.5", pre5, [](const Entries& e) { return e.a.in_R(30) && e.r == e.a.pow(-3) && e.b == neg(e.a.pow(5)); }},
    };
    return rows;
}

void collect(const Entries& e, bool permuted, std::vector<CaseMatch>& out) {
    for (const auto& row : table())
        if (row.pre(e) && row.cond(e)) out.push_back({row.label, permuted});
}

struct Datum {
    long n1, n2;
    Root q1, q2;
};

Datum datum(const DiagonalDatum& d) { return {d.n1, d.n2, root(d.q1), root(d.q2)}; }
Datum swap(const Datum& d) { return {d.n2, d.n1, d.q2, d.q1}; }

bool hypotheses(const Datum& d, long eps) {
    if (d.n1 < 1 || d.n2 < 1 || eps < 1 || std::gcd(d.n1, d.n2) != 1) return false;
    const long p1 = d.n2 * eps, p2 = d.n1 * eps;
    return d.q1.in_R(p1) && d.q1.pow(d.n1).in_R(p1) && d.q2.in_R(p2) && d.q2.pow(d.n2).in_R(p2);
}

// One ordering of the six cases, in order I..VI.
std::optional<DatumCase> datum_case_ordered(const Datum& d, long eps) {
    const long p1 = d.n2 * eps, p2 = d.n1 * eps;
    const Root& q1 = d.q1;
    const Root& q2 = d.q2;
    if (one(q2.pow(d.n1) * q1.pow(d.n2))) return DatumCase::I;
    if (d.n1 == 1 && d.n2 == 1 && q1.in_R(3) && q2.in_R(3)) return DatumCase::II;
    if (d.n1 == 1 && d.n2 == 1 && q1.in_R(5) && q2.in_R(5)) return DatumCase::III;
    if (d.n1 == 1 && d.n2 == 2 && eps == 5 && p1 == 10 && p2 == 5 && one(q1.pow(4) * q2) && one(q1.pow(2) * q2.pow(3)))
        return DatumCase::IV;
    if (d.n1 == 1 && d.n2 == 1 && eps == 7 && q1.in_R(7) && q2.in_R(7) && one(q1 * q2.pow(2)) && one(q1.pow(4) * q2))
        return DatumCase::V;
    if (d.n1 == 1 && d.n2 == 3 && eps == 7 && p1 == 21 && p2 == 7 && one(q1.pow(3) * q2.pow(4)) && one(q1.pow(6) * q2))
        return DatumCase::VI;
    return std::nullopt;
}

DatumCase datum_case_root(const Datum& d, long eps) {
    if (!hypotheses(d, eps)) return DatumCase::HypothesesViolated;
    const auto a = datum_case_ordered(d, eps);
    const auto b = datum_case_ordered(swap(d), eps);
    if (a && b) return std::min(*a, *b);
    if (a) return *a;
    if (b) return *b;
    return DatumCase::None;
}

Entries entries(const Datum& d) {
    // q11 = q1^{n1}, q12 = q2^{n1}, q21 = q1^{n2}, q22 = q2^{n2}
    return {d.q1.pow(d.n1), d.q2.pow(d.n1) * d.q1.pow(d.n2), d.q2.pow(d.n2)};
}

bool any_table_match(const Datum& d) {
    const Entries e = entries(d);
    const Entries s{e.b, e.r, e.a};
    for (const auto& row : table())
        if ((row.pre(e) && row.cond(e)) || (row.pre(s) && row.cond(s))) return true;
    return false;
}

Supplementary supplementary_ordered(const Datum& d) {
    if (d.n1 == 1 && d.n2 == 1 && d.q1.in_R(5) && d.q2.in_R(5) && d.q2 == d.q1.pow(2)) return Supplementary::N5;
    if (d.n1 == 1 && d.n2 == 2 && d.q1.in_R(10) && d.q2.in_R(5) && d.q2 == d.q1.pow(6)) return Supplementary::N10;
    if (d.n1 == 1 && d.n2 == 1 && d.q1.in_R(7) && d.q2.in_R(7) && d.q2 == d.q1.pow(3)) return Supplementary::N7;
    if (d.n1 == 1 && d.n2 == 3 && d.q1.in_R(21) && d.q2.in_R(7) && d.q2 == d.q1.pow(15)) return Supplementary::N21;
    return Supplementary::None;
}

bool supplementary_finite_ordered(const Datum& d) {
    if (d.n1 == 1 && d.n2 == 1 && d.q1.in_R(5) && d.q2 == d.q1.pow(2)) return true;
    if (d.n1 == 1 && d.n2 == 1 && d.q1.in_R(7) && d.q2 == d.q1.pow(3)) return true;
    if (d.n1 == 1 && d.n2 == 2 && d.q1.in_R(10) && d.q2 == d.q1.pow(6)) return true;
    return d.n1 == 1 && d.n2 == 3 && d.q1.in_R(21) && d.q2 == d.q1.pow(15);
}

}  // namespace

BraidingMatrix DiagonalDatum::braiding() const { return {q1.pow(n1), q2.pow(n1), q1.pow(n2), q2.pow(n2)}; }

NicholsVerdict rank_two_case(const BraidingMatrix& q) {
    const Root q11 = root(q.q11), q12 = root(q.q12), q21 = root(q.q21), q22 = root(q.q22);
    NicholsVerdict v;
    collect({q11, q12 * q21, q22}, false, v.all_matches);
    collect({q22, q21 * q12, q11}, true, v.all_matches);
    if (!v.all_matches.empty()) {
        v.case_label = v.all_matches.front().label;
        v.permutation_applied = v.all_matches.front().permuted;
    }
    return v;
}

std::string to_string(DatumCase c) {
    switch (c) {
        case DatumCase::I: return "I";
        case DatumCase::II: return "II";
        case DatumCase::III: return "III";
        case DatumCase::IV: return "IV";
        case DatumCase::V: return "V";
        case DatumCase::VI: return "VI";
        case DatumCase::HypothesesViolated: return "hypotheses-violated";
        case DatumCase::None: break;
    }
    return "none";
}

bool datum_hypotheses(const DiagonalDatum& d, long epsilon) { return hypotheses(datum(d), epsilon); }

DatumCase datum_case(const DiagonalDatum& d, long epsilon) { return datum_case_root(datum(d), epsilon); }

std::string to_string(Supplementary t) {
    switch (t) {
        case Supplementary::N5: return "N5";
        case Supplementary::N7: return "N7";
        case Supplementary::N10: return "N10";
        case Supplementary::N21: return "N21";
        case Supplementary::None: break;
    }
    return "none";
}

Supplementary supplementary_type(const DiagonalDatum& d) {
    const Datum r = datum(d);
    const Supplementary a = supplementary_ordered(r);
    return a != Supplementary::None ? a : supplementary_ordered(swap(r));
}

bool supplementary_finite(const DiagonalDatum& d) {
    const Datum r = datum(d);
    return supplementary_finite_ordered(r) || supplementary_finite_ordered(swap(r));
}

OmegaResult omega_checks(const KParams& params) {
    require_valid(params);
    OmegaResult out;
    const auto s = static_cast<std::size_t>(params.s);
    for (std::size_t i = 0; i < s; ++i) {
        const Root lambda = root(params.q[i].pow(params.n[i]));
        if (lambda.in_R(5) || lambda.in_R(7)) {
            out.omega_prime = false;
            out.findings.push_back("x^" + std::to_string(params.n[i]) + ", y" + std::to_string(i + 1) +
                                   " generate A(1, " + lambda.to_string() + ")");
        }
    }
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            const long g = std::gcd(params.n[i], params.n[j]);
            const DiagonalDatum d{params.n[i] / g, params.n[j] / g, params.q[i].pow(g), params.q[j].pow(g)};
            const Supplementary t = supplementary_type(d);
            if (t == Supplementary::None) continue;
            out.omega = false;
            out.findings.push_back("y" + std::to_string(i + 1) + ", y" + std::to_string(j + 1) + " over x^" +
                                   std::to_string(g) + " realise " + to_string(t));
        }
    return out;
}

std::vector<CycloScalar> roots_up_to(long max_order) {
    std::vector<CycloScalar> out;
    for (long L = 1; L <= max_order; ++L)
        for (long k = 0; k < L; ++k)
            if (std::gcd(k, L) == 1) out.push_back(make_root(static_cast<int>(L), k));
    return out;
}

DatumSweep sweep_datum_cases(long max_n, long max_eps, Execution exec) {
    struct Task {
        long n1, n2, eps;
        Root q1;
    };
    std::vector<Task> tasks;
    auto primitive = [](long p) {
        std::vector<Root> out;
        for (long k = 0; k < p; ++k)
            if (std::gcd(k, p) == 1) out.emplace_back(p, k);
        return out;
    };
    for (long n1 = 1; n1 <= max_n; ++n1)
        for (long n2 = 1; n2 <= max_n; ++n2) {
            if (std::gcd(n1, n2) != 1) continue;
            for (long eps = 1; eps <= max_eps; ++eps)
                for (const Root& q1 : primitive(n2 * eps))
                    if (q1.pow(n1).in_R(n2 * eps)) tasks.push_back({n1, n2, eps, q1});
        }

    std::vector<DatumSweep> parts(tasks.size());
    run_indexed(tasks.size(), exec, [&](std::size_t t) {
        const Task& task = tasks[t];
        DatumSweep& part = parts[t];
        const long p2 = task.n1 * task.eps;
        for (const Root& q2 : primitive(p2)) {
            if (!q2.pow(task.n2).in_R(p2)) continue;
            const Datum d{task.n1, task.n2, task.q1, q2};
            ++part.inputs;
            if (!any_table_match(d)) continue;
            ++part.table_matches;
            const DatumCase c = datum_case_root(d, task.eps);
            ++part.case_counts[to_string(c)];
            if (c == DatumCase::None || c == DatumCase::HypothesesViolated)
                part.unexplained.push_back({DiagonalDatum{d.n1, d.n2, d.q1.to_scalar(), d.q2.to_scalar()}, task.eps});
        }
    });

    DatumSweep out;
    for (auto& p : parts) {
        out.inputs += p.inputs;
        out.table_matches += p.table_matches;
        for (const auto& [k, v] : p.case_counts) out.case_counts[k] += v;
        for (auto& u : p.unexplained) out.unexplained.push_back(std::move(u));
    }
    return out;
}

}  // namespace hopfk
