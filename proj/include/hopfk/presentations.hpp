#pragma once

// Parameter records for the K/B families and the comparison algebras
// A(n,q) and C(n), plus the assembled Hopf presentation (rewrite system
// and generator tables for the coproduct, counit and antipode).

#include "hopfk/ncpoly.hpp"
#include "hopfk/scalars.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfk {

class InvalidPresentation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct KParams {
    int s = 0;
    long M = 0;
    std::vector<long> n;
    std::vector<long> p;
    std::vector<CycloScalar> q;
    std::vector<CycloScalar> alpha;

    /// Fills n from M and p.
    static KParams from_p(long M, std::vector<long> p, std::vector<CycloScalar> q, std::vector<CycloScalar> alpha);
};

struct BParams {
    long n = 1;
    std::vector<long> p;
    CycloScalar q;
    std::vector<CycloScalar> alpha;

    long ell() const;
    long M() const { return n * ell(); }
    long m(int i) const { return ell() / p.at(i); }
    KParams expand() const;
};

struct ValidationCheck {
    std::string id;  // e.g. "K.q_primitive"
    bool pass = false;
    bool required = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool passes(const std::string& id) const;
    /// All required conditions hold.
    bool ok() const;
};

ValidationReport validate(const KParams& params);
ValidationReport validate(const BParams& params);

struct BFormResult {
    BParams params;
    long exponent = 0;                 // q = zeta_ell^exponent
    std::vector<long> candidates;      // every admissible exponent, ascending
    std::vector<int> permutation;      // params index i came from input index permutation[i]
};

/// Rewrites a coprime K presentation in B form, searching
/// q = zeta_ell^k for the least k with q^{m_i} = q_i.
std::optional<BFormResult> to_b_form(const KParams& params);

enum class Family { K, A, C };

/// Per skew generator S_i: Delta(S_i) = S_i (x) G^{right[i]} + G^{left[i]} (x) S_i.
struct CoalgebraTable {
    std::vector<long> left;
    std::vector<long> right;
    friend bool operator==(const CoalgebraTable&, const CoalgebraTable&) = default;
};

class HopfPresentation {
public:
    /// Requires the K.order through K.alpha checks, K.p_min and M >= 2; s = 1 is allowed
    /// as a degenerate single-generator case. alpha is normalised so alpha_1 = 0.
    static HopfPresentation k_family(const KParams& params);
    static HopfPresentation b_family(const BParams& params);
    static HopfPresentation a_family(long n, const CycloScalar& q);
    static HopfPresentation c_family(long n);

    Family family() const { return family_; }
    const std::optional<KParams>& k_params() const { return k_; }
    long a_n() const { return cmp_n_; }
    const CycloScalar& a_q() const { return cmp_q_; }
    long c_n() const { return cmp_n_; }

    int skew_count() const { return rs_.skew_count(); }
    const Alphabet& alphabet() const { return rs_.alphabet(); }
    const RewriteSystem& rewrite() const { return rs_; }
    const CoalgebraTable& coalgebra() const { return coalgebra_; }

    /// Antipode on each letter, indexed by letter code.
    const std::vector<NCPoly>& antipode_table() const { return antipode_; }
    HopfPresentation with_antipode(Letter l, NCPoly image) const;
    HopfPresentation with_rules(std::vector<Rule> rules) const;

    /// Defining relations of the algebra, each as (lhs - rhs) in the free algebra.
    const std::vector<RawPoly>& relations() const { return relations_; }

    /// Exponent d with x^d central-power role: M for K, unused otherwise.
    long M() const { return k_ ? k_->M : 0; }

    std::string describe() const;

private:
    HopfPresentation(Family f, RewriteSystem rs) : family_(f), rs_(std::move(rs)) {}
    void fill_antipode();

    Family family_;
    RewriteSystem rs_;
    std::optional<KParams> k_;
    long cmp_n_ = 0;
    CycloScalar cmp_q_;
    CoalgebraTable coalgebra_;
    std::vector<NCPoly> antipode_;
    std::vector<RawPoly> relations_;
};

/// Word helpers shared by the families.
Word grouplike_power(long e);

}  // namespace hopfk
