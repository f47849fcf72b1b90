#pragma once

// Hopf structure maps on a presentation (coproduct, counit, antipode),
// exhaustive axiom verification, skew-primitive spaces with their
// conjugation eigenvalues, Ext^1 by linearisation, and a seeded search for
// zero divisors.

#include "hopfk/ncpoly.hpp"
#include "hopfk/parallel.hpp"
#include "hopfk/presentations.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopfk {

class TensorPoly {
public:
    using Key = std::pair<NFMonomial, NFMonomial>;
    using Terms = std::map<Key, CycloScalar>;

    static TensorPoly pure(const NFMonomial& a, const NFMonomial& b, const CycloScalar& c = CycloScalar(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const NFMonomial& a, const NFMonomial& b, const CycloScalar& c);
    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator-=(const TensorPoly& o);
    TensorPoly& operator*=(const CycloScalar& c);
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.terms_ == b.terms_; }

    /// p (x) q with both legs in normal form.
    static TensorPoly tensor(const NCPoly& p, const NCPoly& q);

    std::string to_string(const Alphabet& a) const;

private:
    Terms terms_;
};

/// Structure maps bound to one presentation, with memoised generator products.
class HopfOps {
public:
    explicit HopfOps(HopfPresentation pres);

    const HopfPresentation& presentation() const { return pres_; }
    const RewriteSystem& rewrite() const { return pres_.rewrite(); }

    TensorPoly coproduct(const NCPoly& p) const;
    TensorPoly coproduct(const NFMonomial& m) const;
    /// Multiplicative extension over an arbitrary word combination.
    TensorPoly coproduct(const RawPoly& p) const;

    CycloScalar counit(const NCPoly& p) const;
    CycloScalar counit(const RawPoly& p) const;

    NCPoly antipode(const NCPoly& p) const;
    NCPoly antipode(const NFMonomial& m) const;
    NCPoly antipode(const RawPoly& p) const;

    TensorPoly multiply(const TensorPoly& a, const TensorPoly& b) const;

    /// x^{-g} p x^{g} where x is the grouplike generator.
    NCPoly conjugate(const NCPoly& p, long g) const;

private:
    TensorPoly coproduct_letter(Letter l) const;

    HopfPresentation pres_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

TensorPoly coproduct(const NCPoly& p, const HopfPresentation& pres);
CycloScalar counit(const NCPoly& p, const HopfPresentation& pres);
NCPoly antipode(const NCPoly& p, const HopfPresentation& pres);

/// Normal-form basis monomials with weighted degree <= cap and |w0| <= window.
std::vector<NFMonomial> basis_monomials(const HopfPresentation& pres, long cap, long window);

struct AxiomFailure {
    std::string axiom;
    std::string where;
};

struct AxiomReport {
    long cap = 0;
    long window = 0;
    std::size_t monomials_checked = 0;
    std::size_t relations_checked = 0;
    bool coassociativity = true;
    bool counit = true;
    bool antipode = true;
    bool relations = true;
    std::vector<AxiomFailure> failures;  // first few only

    bool all_pass() const { return coassociativity && counit && antipode && relations; }
};

/// Window defaults to 2 * cap.
AxiomReport check_hopf_axioms(const HopfPresentation& pres, long cap, std::optional<long> window = std::nullopt,
                              Execution exec = Execution::Parallel);

struct SkewPrimitiveRecord {
    NCPoly element;
    long weight_exponent = 0;
    CycloScalar commutator;
    int level = 1;
    bool is_major = false;
};

struct EigenSpace {
    CycloScalar lambda;
    std::size_t dimension = 0;              // level-1 part
    std::size_t generalized_dimension = 0;  // all levels
};

struct PrimitiveSpaceReport {
    long weight_exponent = 0;
    long cap = 0;
    long window = 0;
    std::size_t unknowns = 0;
    std::size_t kernel_dimension = 0;  // including the trivial primitive
    std::size_t quotient_dimension = 0;
    std::vector<EigenSpace> eigenspaces;
    std::vector<SkewPrimitiveRecord> records;
    std::size_t unresolved_dimension = 0;  // part of the quotient with no eigenvalue found
};

/// Skew primitives y with Delta(y) = y (x) 1 + x^g (x) y, solved exactly over
/// monomials of weighted degree <= cap and w0 in [-window, window]
/// (window defaults to cap * max(M, 1)), modulo the trivial element x^g - 1.
PrimitiveSpaceReport skew_primitives(const HopfPresentation& pres, long g_exponent, long cap,
                                     std::optional<long> window = std::nullopt);

/// Weights g in [g_min, g_max] with a nonzero quotient, each solved independently.
std::vector<PrimitiveSpaceReport> scan_skew_primitives(const HopfPresentation& pres, long g_min, long g_max, long cap,
                                                       std::optional<long> window = std::nullopt,
                                                       Execution exec = Execution::Parallel);

struct WeightCommutator {
    long weight_exponent = 0;
    CycloScalar commutator;
    int level = 0;
};

/// Throws std::invalid_argument when y is not skew primitive.
WeightCommutator weight_commutator(const NCPoly& y, const HopfPresentation& pres, int max_level = 8);

/// dim m/m^2 for the augmentation ideal m, from the linear parts of the relations.
std::size_t ext1_dimension(const HopfPresentation& pres);

struct ZeroDivisorSearch {
    enum class Status { Found, NotFound, WitnessUnavailable };
    Status status = Status::NotFound;
    std::optional<std::pair<NCPoly, NCPoly>> witness;
    std::string method;
    std::size_t candidates_tried = 0;
    std::size_t steps_used = 0;
    bool budget_exhausted = false;
    std::vector<std::string> notes;
};

/// Seeded search for a b with a b = 0: proof-shaped candidates first, then
/// binomials, each tested through the right annihilator over the bounded span.
ZeroDivisorSearch find_zero_divisors(const HopfPresentation& pres, long cap, std::size_t budget = 1'000'000);

}  // namespace hopfk
