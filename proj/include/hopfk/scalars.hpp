#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_L).
//
// A CycloScalar stores its coefficients in the power basis
// 1, z, ..., z^(phi(L)-1) of Q(zeta_L), reduced modulo the L-th cyclotomic
// polynomial. Scalars of different conductors are lifted to the lcm before
// any binary operation, so mixed expressions are always exact.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfk {

using Rational = mpq_class;
using Integer = mpz_class;

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Largest conductor whose cyclotomic polynomial is cached. Larger
/// conductors still work but recompute Phi_L on every use.
int max_cached_conductor();
void set_max_cached_conductor(int bound);

/// Coefficients of Phi_L, lowest degree first (monic, length phi(L)+1).
const std::vector<long>& cyclotomic_polynomial(int L);

long euler_phi(long n);
long gcd_l(long a, long b);
long lcm_l(long a, long b);
std::vector<long> divisors(long n);

class CycloScalar {
public:
    CycloScalar();
    CycloScalar(long value);  // NOLINT(google-explicit-constructor)
    CycloScalar(const Rational& value);  // NOLINT(google-explicit-constructor)
    CycloScalar(int conductor, std::vector<Rational> coeffs);

    /// zeta_L^k, reduced.
    static CycloScalar root(int L, long k);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in Q (only the constant coefficient is set).
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    /// Re-expresses the scalar in Q(zeta_target); target must be a multiple
    /// of the current conductor.
    CycloScalar lift(int target) const;

    CycloScalar operator-() const;
    CycloScalar& operator+=(const CycloScalar& other);
    CycloScalar& operator-=(const CycloScalar& other);
    CycloScalar& operator*=(const CycloScalar& other);
    CycloScalar& operator/=(const CycloScalar& other);

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
    friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }

    friend bool operator==(const CycloScalar& a, const CycloScalar& b);

    CycloScalar inv() const;
    CycloScalar pow(long e) const;

    /// Applies the Galois automorphism zeta_L -> zeta_L^a (gcd(a, L) = 1).
    CycloScalar galois(long a) const;

    /// Total order used only for deterministic output; not a field order.
    std::strong_ordering canonical_compare(const CycloScalar& other) const;

    /// Human/parser readable form, e.g. "-1", "3/2", "(1 + 2*zeta(6,1))".
    std::string to_string() const;

private:
    int conductor_ = 1;
    std::vector<Rational> coeffs_;  // size phi(conductor_)

    void reduce_from(std::vector<Rational>&& raw);
};

std::ostream& operator<<(std::ostream& os, const CycloScalar& a);

/// zeta_n^k stored with gcd(n, k) divided out; order 1 is the scalar 1.
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(long order, long exponent);

    long order() const { return order_; }
    long exponent() const { return exponent_; }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity pow(long e) const;
    RootOfUnity inv() const { return pow(-1); }
    bool is_one() const { return order_ == 1; }
    /// Membership in R_n, the primitive n-th roots of unity.
    bool in_R(long n) const { return order_ == n; }

    CycloScalar to_scalar() const;
    std::string to_string() const;

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
    friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

    static const RootOfUnity& minus_one();

private:
    long order_ = 1;
    long exponent_ = 0;
};

CycloScalar make_root(int L, long k);

/// Multiplicative order of a root of unity; empty if a is not one.
/// Throws std::invalid_argument for a = 0.
std::optional<long> order_of(const CycloScalar& a);

/// Converts a root of unity to exact (order, exponent) form.
std::optional<RootOfUnity> as_root_of_unity(const CycloScalar& a);

bool is_primitive_pth_root(const CycloScalar& a, long p);

/// Gaussian binomial via the Pascal recurrence
/// C(w,j) = C(w-1,j-1) + q^j C(w-1,j); division free, so valid at roots of unity.
CycloScalar qbinom(int w, int j, const CycloScalar& q);

/// Some p-th root of a when one exists in a cyclotomic field reachable by the
/// supported constructions (a = rational * root of unity, using Gauss sums for
/// square roots). Empty when no such root was found.
std::optional<CycloScalar> nth_root(const CycloScalar& a, int p);

}  // namespace hopfk
