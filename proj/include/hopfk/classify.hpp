#pragma once

// Parameter-level decisions for the K family: domain and Ext tests, the
// invariant {n_1, ..., n_s, M}, the gldim predicate, and isomorphism tests.

#include "hopfk/presentations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfk {

/// Throws InvalidPresentation unless the required conditions hold.
void require_valid(const KParams& params);

/// p_i pairwise coprime.
bool is_domain(const KParams& params);
/// Some alpha_i differs from another.
bool ext_vanishes(const KParams& params);
/// {n_1, ..., n_s, M} as a sorted multiset.
std::vector<long> invariant_set(const KParams& params);
bool gldim_finite(const KParams& params);

/// A(m,r) ~ A(n,q) iff (m,r) = (n,q) or (m,r) = (-n,q^-1).
bool a_family_iso(long m, const CycloScalar& r, long n, const CycloScalar& q);

/// x -> x, y_i -> c_i y_{pi(i)} with alpha'_{pi(i)} - alpha'_{pi(j)} = c (alpha_i - alpha_j).
struct IsoWitness {
    std::vector<int> permutation;
    CycloScalar c{1};
    /// c_i with c_i^{p_i} = c, when found in a cyclotomic field.
    std::vector<std::optional<CycloScalar>> generator_scales;
    std::vector<std::string> flags;

    bool scales_realised() const;
};

/// Throws InvalidPresentation for invalid or non-domain input.
std::optional<IsoWitness> iso_test(const KParams& a, const KParams& b);

/// Checks the parameter equations of w as a map from a to b.
bool witness_holds(const IsoWitness& w, const KParams& a, const KParams& b);
IsoWitness inverse(const IsoWitness& w);
/// w2 after w1.
IsoWitness compose(const IsoWitness& w1, const IsoWitness& w2);

}  // namespace hopfk
