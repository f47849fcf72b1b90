#include "hopfk/scalars.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace hopfk {

namespace {

int g_cache_bound = 256;
std::once_flag g_cache_once;
std::vector<std::vector<long>> g_phi_table;  // index L, valid for 1..bound

// (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division of integer polys.
std::vector<long> compute_phi(int n, const std::vector<std::vector<long>>& known) {
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d : divisors(n)) {
        if (d == n) continue;
        const std::vector<long>& den = known[d];
        // num /= den, den monic
        const int dn = static_cast<int>(den.size()) - 1;
        const int nn = static_cast<int>(num.size()) - 1;
        std::vector<long> quot(nn - dn + 1, 0);
        for (int i = nn; i >= dn; --i) {
            const long c = num[i];
            quot[i - dn] = c;
            if (c == 0) continue;
            for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
        }
        num = std::move(quot);
    }
    return num;
}

std::vector<std::vector<long>> build_table(int bound) {
    std::vector<std::vector<long>> table(bound + 1);
    for (int n = 1; n <= bound; ++n) table[n] = compute_phi(n, table);
    return table;
}

const std::vector<long>& uncached_phi(int L) {
    thread_local std::unordered_map<int, std::vector<long>> local;
    auto it = local.find(L);
    if (it != local.end()) return it->second;
    std::vector<std::vector<long>> known(L + 1);
    for (long d : divisors(L)) known[d] = compute_phi(static_cast<int>(d), known);
    return local.emplace(L, std::move(known[L])).first->second;
}

// ---- polynomial helpers over Q for inversion ----
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// returns (quotient, remainder)
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    QPoly q;
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - db, Rational(0));
    for (std::size_t i = a.size(); i-- > db;) {
        if (a[i] == 0) continue;
        Rational c = a[i] / b[db];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

long legendre(long a, long p) {
    long r = 1, base = ((a % p) + p) % p, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == p - 1 ? -1 : r;
}

std::optional<CycloScalar> sqrt_prime(long p) {
    if (p == 2) return make_root(8, 1) + make_root(8, 7);
    CycloScalar g;
    for (long a = 1; a < p; ++a) g += CycloScalar(legendre(a, p)) * make_root(static_cast<int>(p), a);
    if (p % 4 == 1) return g;
    return -(make_root(4, 1) * g);
}

// sqrt of a positive integer; empty if factoring gets too expensive.
std::optional<CycloScalar> sqrt_integer(Integer n) {
    CycloScalar result(1);
    Integer square_part = 1;
    for (long f = 2; Integer(f) * f <= n; ++f) {
        if (f > 1000000) return std::nullopt;
        int e = 0;
        while (n % f == 0) {
            n /= f;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) square_part *= f;
        if (e % 2 == 1) {
            auto s = sqrt_prime(f);
            if (!s) return std::nullopt;
            result *= *s;
        }
    }
    if (n > 1) {
        if (!n.fits_slong_p()) return std::nullopt;
        auto s = sqrt_prime(n.get_si());
        if (!s) return std::nullopt;
        result *= *s;
    }
    return result * CycloScalar(Rational(square_part));
}

std::optional<Integer> exact_root(const Integer& n, int p) {
    if (n < 0) return std::nullopt;
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), p) == 0) return std::nullopt;
    return r;
}

std::optional<Rational> rational_root(const Rational& r, int p) {
    auto num = exact_root(r.get_num(), p);
    auto den = exact_root(r.get_den(), p);
    if (!num || !den) return std::nullopt;
    Rational out(*num, *den);
    out.canonicalize();
    return out;
}

}  // namespace

int max_cached_conductor() { return g_cache_bound; }

void set_max_cached_conductor(int bound) {
    if (bound < 1) throw std::invalid_argument("conductor bound must be positive");
    g_cache_bound = bound;
}

const std::vector<long>& cyclotomic_polynomial(int L) {
    if (L < 1) throw std::invalid_argument("conductor must be positive");
    std::call_once(g_cache_once, [] { g_phi_table = build_table(g_cache_bound); });
    if (L < static_cast<int>(g_phi_table.size())) return g_phi_table[L];
    return uncached_phi(L);
}

long gcd_l(long a, long b) { return std::gcd(a, b); }

long lcm_l(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

CycloScalar::CycloScalar() : conductor_(1), coeffs_(1, Rational(0)) {}

CycloScalar::CycloScalar(long value) : conductor_(1), coeffs_(1, Rational(value)) {}

CycloScalar::CycloScalar(const Rational& value) : conductor_(1), coeffs_(1, value) {
    coeffs_[0].canonicalize();
}

CycloScalar::CycloScalar(int conductor, std::vector<Rational> coeffs) : conductor_(conductor) {
    if (conductor < 1) throw std::invalid_argument("conductor must be positive");
    for (auto& c : coeffs) c.canonicalize();
    reduce_from(std::move(coeffs));
}

CycloScalar CycloScalar::root(int L, long k) {
    if (L < 1) throw std::invalid_argument("make_root: L must be positive");
    long e = ((k % L) + L) % L;
    std::vector<Rational> raw(e + 1, Rational(0));
    raw[e] = 1;
    CycloScalar out;
    out.conductor_ = L;
    out.reduce_from(std::move(raw));
    return out;
}

void CycloScalar::reduce_from(std::vector<Rational>&& raw) {
    const std::vector<long>& phi = cyclotomic_polynomial(conductor_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = raw.size(); i-- > deg;) {
        if (raw[i] == 0) continue;
        const Rational c = raw[i];
        for (std::size_t j = 0; j < deg; ++j) {
            if (phi[j] != 0) raw[i - deg + j] -= c * phi[j];
        }
        raw[i] = 0;
    }
    raw.resize(deg, Rational(0));
    coeffs_ = std::move(raw);
}

bool CycloScalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycloScalar::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycloScalar::is_one() const { return is_rational() && coeffs_[0] == 1; }

Rational CycloScalar::rational_value() const {
    if (!is_rational()) throw std::logic_error("scalar is not rational");
    return coeffs_[0];
}

CycloScalar CycloScalar::lift(int target) const {
    if (target == conductor_) return *this;
    if (target % conductor_ != 0) throw std::invalid_argument("lift target must be a multiple of the conductor");
    CycloScalar out;
    out.conductor_ = target;
    if (is_rational()) {
        out.coeffs_.assign(euler_phi(target), Rational(0));
        out.coeffs_[0] = coeffs_[0];
        return out;
    }
    const long step = target / conductor_;
    std::vector<Rational> raw((coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t e = 0; e < coeffs_.size(); ++e) raw[e * step] = coeffs_[e];
    out.reduce_from(std::move(raw));
    return out;
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& other) {
    if (other.conductor_ == conductor_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        return *this;
    }
    if (other.is_rational()) {
        coeffs_[0] += other.coeffs_[0];
        return *this;
    }
    const int L = static_cast<int>(lcm_l(conductor_, other.conductor_));
    *this = lift(L);
    const CycloScalar o = other.lift(L);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& other) { return *this += -other; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& other) {
    if (other.is_rational()) {
        const Rational c = other.coeffs_[0];
        for (auto& x : coeffs_) x *= c;
        return *this;
    }
    if (is_rational()) {
        const Rational c = coeffs_[0];
        *this = other;
        for (auto& x : coeffs_) x *= c;
        return *this;
    }
    if (other.conductor_ != conductor_) {
        const int L = static_cast<int>(lcm_l(conductor_, other.conductor_));
        CycloScalar a = lift(L);
        return *this = (a *= other.lift(L));
    }
    const std::size_t n = coeffs_.size();
    std::vector<Rational> raw(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (other.coeffs_[j] == 0) continue;
            raw[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    reduce_from(std::move(raw));
    return *this;
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& other) { return *this *= other.inv(); }

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
    const int L = static_cast<int>(lcm_l(a.conductor_, b.conductor_));
    return a.lift(L).coeffs_ == b.lift(L).coeffs_;
}

CycloScalar CycloScalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    if (is_rational()) return CycloScalar(Rational(1) / coeffs_[0]);
    // Extended Euclid: find u with u * a == 1 mod Phi_L.
    const std::vector<long>& phi = cyclotomic_polynomial(conductor_);
    QPoly r0(phi.begin(), phi.end());
    QPoly r1 = coeffs_;
    trim(r1);
    QPoly s0, s1{Rational(1)};  // coefficients of a
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        QPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant since Phi_L is irreducible
    const Rational c = r1.at(0);
    for (auto& x : s1) x /= c;
    return CycloScalar(conductor_, s1);
}

CycloScalar CycloScalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycloScalar result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

CycloScalar CycloScalar::galois(long a) const {
    if (gcd_l(a, conductor_) != 1) throw std::invalid_argument("galois: exponent not a unit");
    std::vector<Rational> raw(conductor_, Rational(0));
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        const long t = ((static_cast<long>(e) * a) % conductor_ + conductor_) % conductor_;
        raw[t] += coeffs_[e];
    }
    return CycloScalar(conductor_, std::move(raw));
}

std::strong_ordering CycloScalar::canonical_compare(const CycloScalar& other) const {
    if (auto c = conductor_ <=> other.conductor_; c != 0) return c;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const int s = cmp(coeffs_[i], other.coeffs_[i]);
        if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string CycloScalar::to_string() const {
    if (is_rational()) return coeffs_[0].get_str();
    std::ostringstream os;
    int nonzero = 0;
    for (const auto& c : coeffs_) nonzero += (c != 0);
    // a lone negative root term is wrapped too, so the text can follow a '*' or '+'
    bool negative_lead = false;
    for (std::size_t e = 1; e < coeffs_.size(); ++e)
        if (coeffs_[e] != 0) {
            negative_lead = coeffs_[e] < 0 && coeffs_[0] == 0;
            break;
        }
    const bool wrap = nonzero > 1 || negative_lead;
    if (wrap) os << '(';
    bool first = true;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        Rational c = coeffs_[e];
        if (c == 0) continue;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            c = abs(c);
        } else if (c < 0 && e != 0) {
            os << '-';
            c = -c;
        }
        first = false;
        if (e == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << '*';
        os << "zeta(" << conductor_ << ',' << e << ')';
    }
    if (wrap) os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloScalar& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------

RootOfUnity::RootOfUnity(long order, long exponent) {
    if (order < 1) throw std::invalid_argument("root of unity order must be positive");
    exponent = ((exponent % order) + order) % order;
    const long g = gcd_l(order, exponent);
    if (exponent == 0) {
        order_ = 1;
        exponent_ = 0;
    } else {
        order_ = order / g;
        exponent_ = exponent / g;
    }
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    const long L = lcm_l(order_, o.order_);
    return RootOfUnity(L, exponent_ * (L / order_) + o.exponent_ * (L / o.order_));
}

RootOfUnity RootOfUnity::pow(long e) const {
    const long r = ((e % order_) + order_) % order_;
    return RootOfUnity(order_, (exponent_ * r) % order_);
}

CycloScalar RootOfUnity::to_scalar() const { return CycloScalar::root(static_cast<int>(order_), exponent_); }

std::string RootOfUnity::to_string() const {
    if (order_ == 1) return "1";
    if (order_ == 2) return "-1";
    return "zeta(" + std::to_string(order_) + "," + std::to_string(exponent_) + ")";
}

const RootOfUnity& RootOfUnity::minus_one() {
    static const RootOfUnity m(2, 1);
    return m;
}

// ---------------------------------------------------------------------------

CycloScalar make_root(int L, long k) { return CycloScalar::root(L, k); }

std::optional<long> order_of(const CycloScalar& a) {
    if (a.is_zero()) throw std::invalid_argument("order_of: zero is not a unit");
    if (a.is_rational()) {
        const Rational v = a.rational_value();
        if (v == 1) return 1;
        if (v == -1) return 2;
        return std::nullopt;
    }
    const long L = a.conductor();
    const long N = (L % 2 == 0) ? L : 2 * L;
    if (!a.pow(N).is_one()) return std::nullopt;
    for (long d : divisors(N)) {
        if (a.pow(d).is_one()) return d;
    }
    return N;
}

namespace {

std::optional<RootOfUnity> find_root(const CycloScalar& a) {
    auto n = order_of(a);
    if (!n) return std::nullopt;
    for (long k = 0; k < *n; ++k) {
        if (gcd_l(k, *n) != 1 && *n != 1) continue;
        if (make_root(static_cast<int>(*n), k) == a) return RootOfUnity(*n, k);
    }
    throw std::logic_error("as_root_of_unity: order found but exponent missing");
}

}  // namespace

std::optional<RootOfUnity> as_root_of_unity(const CycloScalar& a) {
    static std::shared_mutex mutex;
    static std::unordered_map<std::string, std::optional<RootOfUnity>> memo;
    if (a.is_zero()) throw std::invalid_argument("order_of: zero is not a unit");
    std::string key = std::to_string(a.conductor()) + ":" + a.to_string();
    {
        std::shared_lock lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    auto r = find_root(a);
    std::unique_lock lock(mutex);
    if (memo.size() > 100000) memo.clear();
    memo.emplace(std::move(key), r);
    return r;
}

bool is_primitive_pth_root(const CycloScalar& a, long p) {
    if (a.is_zero()) return false;
    auto r = as_root_of_unity(a);
    return r && r->order() == p;
}

CycloScalar qbinom(int w, int j, const CycloScalar& q) {
    if (w < 0 || j < 0 || j > w) throw std::invalid_argument("qbinom: need 0 <= j <= w");
    // row[t] holds C(r, t)_q for the current r
    std::vector<CycloScalar> row(j + 1, CycloScalar(0));
    row[0] = CycloScalar(1);
    std::vector<CycloScalar> qpow(j + 1, CycloScalar(1));
    for (int t = 1; t <= j; ++t) qpow[t] = qpow[t - 1] * q;
    for (int r = 1; r <= w; ++r) {
        for (int t = std::min(r, j); t >= 1; --t) {
            if (t == r) {
                row[t] = CycloScalar(1);
            } else {
                row[t] = row[t - 1] + qpow[t] * row[t];
            }
        }
    }
    return row[j];
}

std::optional<CycloScalar> nth_root(const CycloScalar& a, int p) {
    if (p < 1) throw std::invalid_argument("nth_root: p must be positive");
    if (a.is_zero()) return CycloScalar(0);
    if (p == 1) return a;
    const long L = a.conductor();
    const long N = (L % 2 == 0) ? L : 2 * L;
    for (long k = 0; k < N; ++k) {
        const CycloScalar b = a * make_root(static_cast<int>(N), -k);
        if (!b.is_rational()) continue;
        Rational r = b.rational_value();
        long rN = N, rk = k;
        if (r < 0) {
            r = -r;
            rk = 2 * k + rN;  // multiply by -1 = zeta_{2N}^N
            rN = 2 * N;
        }
        const CycloScalar unit_root = make_root(static_cast<int>(rN * p), rk);
        std::optional<CycloScalar> radical;
        if (auto t = rational_root(r, p)) {
            radical = CycloScalar(*t);
        } else if (p % 2 == 0) {
            if (auto t = rational_root(r, p / 2)) {
                Integer prod = t->get_num() * t->get_den();
                if (auto s = sqrt_integer(prod)) radical = *s * CycloScalar(Rational(1) / Rational(t->get_den()));
            }
        }
        if (!radical) return std::nullopt;
        CycloScalar candidate = *radical * unit_root;
        if (candidate.pow(p) == a) return candidate;
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace hopfk
