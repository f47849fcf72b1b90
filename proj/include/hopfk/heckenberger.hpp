#pragma once

// Rank-two diagonal braidings: the finite-dimensionality case table for
// Nichols algebras, its specialisation to data q_ij = q_j^{n_i}, the
// supplementary parameter patterns, and the Omega / Omega' checks on K.

#include "hopfk/parallel.hpp"
#include "hopfk/presentations.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace hopfk {

struct BraidingMatrix {
    CycloScalar q11, q12, q21, q22;

    /// v1 <-> v2.
    BraidingMatrix swapped() const { return {q22, q21, q12, q11}; }
};

/// Generators with weights x^{n_i} and x acting by q_i.
struct DiagonalDatum {
    long n1 = 1, n2 = 1;
    CycloScalar q1, q2;

    /// q_ij = q_j^{n_i}.
    BraidingMatrix braiding() const;
    DiagonalDatum swapped() const { return {n2, n1, q2, q1}; }
};

struct CaseMatch {
    std::string label;
    bool permuted = false;
};

struct NicholsVerdict {
    std::string case_label = "none";  // "1", "2.1" ... "5.5", or "none"
    bool permutation_applied = false;
    std::vector<CaseMatch> all_matches;  // identity ordering first, table order within each
};

/// Throws std::invalid_argument when an entry is not a root of unity.
NicholsVerdict rank_two_case(const BraidingMatrix& q);

enum class DatumCase { I, II, III, IV, V, VI, HypothesesViolated, None };
std::string to_string(DatumCase c);

/// Requires gcd(n1,n2) = 1, p1 = n2 eps, p2 = n1 eps, q1 and q1^{n1} in R_{p1},
/// q2 and q2^{n2} in R_{p2}; otherwise HypothesesViolated.
bool datum_hypotheses(const DiagonalDatum& d, long epsilon);
DatumCase datum_case(const DiagonalDatum& d, long epsilon);

enum class Supplementary { None, N5, N7, N10, N21 };
std::string to_string(Supplementary t);

Supplementary supplementary_type(const DiagonalDatum& d);
bool supplementary_finite(const DiagonalDatum& d);

struct OmegaResult {
    bool omega = true;        // no pair realises a supplementary pattern
    bool omega_prime = true;  // no x^{n_i}, y_i subalgebra A(1, lambda) with lambda of order 5 or 7
    std::vector<std::string> findings;
};

OmegaResult omega_checks(const KParams& params);

/// Every admissible datum with n1, n2 <= max_n coprime and eps <= max_eps.
struct DatumSweep {
    std::size_t inputs = 0;
    std::size_t table_matches = 0;
    std::map<std::string, std::size_t> case_counts;
    std::vector<std::pair<DiagonalDatum, long>> unexplained;  // table matches but no case (I)-(VI)
};

DatumSweep sweep_datum_cases(long max_n, long max_eps, Execution exec = Execution::Parallel);

/// All roots of unity of order <= max_order, by order then exponent.
std::vector<CycloScalar> roots_up_to(long max_order);

}  // namespace hopfk
