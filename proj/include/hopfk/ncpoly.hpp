#pragma once

// Noncommutative polynomials over CycloScalar and the string-rewriting
// engine that turns words into PBW normal form.
//
// Every algebra handled here has one invertible grouplike generator G and
// skew generators S_1..S_s. Letters are encoded as small integers:
//   0 -> G^{-1}, 1 -> G, 2 + i -> S_{i+1}.
// The letter code doubles as the generator rank used by the lexicographic
// part of the monomial order (G^{-1} < G < S_1 < ... < S_s). Normal-form
// words always look like G^{w0} S_1^{w1} ... S_s^{ws}.

#include "hopfk/scalars.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfk {

using Letter = std::uint8_t;
inline constexpr Letter kGroupInv = 0;
inline constexpr Letter kGroup = 1;
constexpr Letter skew_letter(int i) { return static_cast<Letter>(2 + i); }
constexpr int skew_index(Letter l) { return static_cast<int>(l) - 2; }
constexpr bool is_skew(Letter l) { return l >= 2; }

using Word = std::vector<Letter>;

struct Alphabet {
    int skew_count = 0;
    std::string group_name = "x";
    std::vector<std::string> skew_names;

    int letter_count() const { return 2 + skew_count; }
    std::string letter_name(Letter l) const;
    std::string word_string(const Word& w) const;
};

/// PBW monomial G^{w0} S_1^{w[0]} ... S_s^{w[s-1]}.
struct NFMonomial {
    long w0 = 0;
    std::vector<int> w;

    static NFMonomial one(int s) { return {0, std::vector<int>(s, 0)}; }
    Word to_word() const;
    bool is_grouplike() const;
    int skew_degree() const;
    std::string to_string(const Alphabet& a) const;

    friend auto operator<=>(const NFMonomial&, const NFMonomial&) = default;
};

class NCPoly {
public:
    using Terms = std::map<NFMonomial, CycloScalar>;

    NCPoly() = default;
    static NCPoly monomial(NFMonomial m, const CycloScalar& c = CycloScalar(1));
    static NCPoly constant(const CycloScalar& c, int skew_count);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    CycloScalar coefficient(const NFMonomial& m) const;

    void add_term(const NFMonomial& m, const CycloScalar& c);
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const CycloScalar& c);
    NCPoly operator-() const;

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const CycloScalar& c) { return a *= c; }
    friend NCPoly operator*(const CycloScalar& c, NCPoly a) { return a *= c; }
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

    /// G^{shift} * this; valid because normal words start with their G block.
    NCPoly shifted(long shift) const;

    /// Canonical expression text, parseable by the expression grammar.
    std::string to_string(const Alphabet& a) const;

private:
    Terms terms_;
};

/// Formal linear combination of (not necessarily reduced) words.
using RawPoly = std::vector<std::pair<Word, CycloScalar>>;

RawPoly to_raw(const NCPoly& p);

/// Well-order on words compatible with concatenation:
/// (weighted degree, letter counts in priority order, length, lex by code).
class MonomialOrder {
public:
    MonomialOrder() = default;
    MonomialOrder(std::vector<long> weights, std::vector<Letter> count_priority);

    long weighted_degree(const Word& w) const;
    long weighted_degree(const NFMonomial& m) const;
    long weight(Letter l) const { return weights_.at(l); }
    std::strong_ordering compare(const Word& a, const Word& b) const;
    bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

private:
    std::vector<long> weights_;
    std::vector<Letter> priority_;
};

struct Rule {
    Word lhs;
    RawPoly rhs;
    std::string label;
};

class RewriteBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Strategy { Leftmost, Rightmost };

struct RewriteOptions {
    Strategy strategy = Strategy::Leftmost;
    std::size_t step_budget = 50'000'000;
    /// Re-check that every produced word is smaller than the word it came from.
    bool check_order = false;
};

class RewriteSystem {
public:
    RewriteSystem(Alphabet alphabet, MonomialOrder order, std::vector<Rule> rules);

    const Alphabet& alphabet() const { return alphabet_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Rule>& rules() const { return rules_; }
    int skew_count() const { return alphabet_.skew_count; }

    /// Position and rule index of a redex chosen by the strategy.
    std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w, Strategy s) const;
    bool is_irreducible(const Word& w) const { return !find_redex(w, Strategy::Leftmost).has_value(); }

    NCPoly normal_form(const RawPoly& p, const RewriteOptions& opt = {}) const;
    NCPoly normal_form(const Word& w, const RewriteOptions& opt = {}) const;

    /// Number of single rule applications performed by this system so far.
    std::size_t steps_taken() const;

    NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
    NCPoly multiply_monomials(const NFMonomial& a, const NFMonomial& b) const;

    /// Converts an irreducible word to its monomial; throws std::logic_error
    /// when the word is irreducible but not PBW shaped (an engine defect).
    NFMonomial to_monomial(const Word& irreducible) const;

    /// Returns a system with the same alphabet/order and replaced rules.
    RewriteSystem with_rules(std::vector<Rule> rules) const;

private:
    Alphabet alphabet_;
    MonomialOrder order_;
    std::vector<Rule> rules_;
    std::vector<std::vector<std::size_t>> by_first_letter_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

struct Overlap {
    std::size_t rule1 = 0;
    std::size_t rule2 = 0;
    Word word;          // lhs1 starts at 0
    std::size_t pos2 = 0;  // where lhs2 starts inside word
    bool inclusion = false;
};

std::vector<Overlap> enumerate_ambiguities(const RewriteSystem& rs);

struct AmbiguityResult {
    Overlap overlap;
    bool resolved = false;
    NCPoly via_rule1;
    NCPoly via_rule2;
};

struct ConfluenceReport {
    std::vector<AmbiguityResult> items;
    std::size_t resolved_count() const;
    bool all_resolved() const { return resolved_count() == items.size(); }
};

/// Diamond-lemma check: every ambiguity reduced both ways to normal form.
ConfluenceReport certify_confluence(const RewriteSystem& rs, const RewriteOptions& opt = {});

}  // namespace hopfk
