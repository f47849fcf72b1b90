#pragma once

// Command-line front end: expression grammar, JSON parameter files and the
// subcommand dispatcher behind tools/hopfk.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' int)?
//   atom   := generator | scalar | '(' expr ')'
//   scalar := int | int '/' int | 'zeta' '(' int ',' int ')'

#include "hopfk/presentations.hpp"

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfk::cli {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct Expression {
    enum class Kind { Scalar, Generator, Sum, Product, Power };

    Kind kind = Kind::Scalar;
    std::size_t position = 0;
    CycloScalar scalar;   // Scalar
    std::string literal;  // Scalar, as written without blanks
    Letter letter = kGroup;  // Generator
    std::vector<Expression> children;
    std::vector<bool> negated;  // Sum: sign of each child
    long exponent = 1;          // Power
};

/// Generator names come from the alphabet ("x", "y1", ...).
Expression parse_expression(const std::string& src, const Alphabet& alphabet);
std::string print(const Expression& e, const Alphabet& alphabet);
/// Throws ParseError when a negative power is applied to a non-unit.
NCPoly evaluate(const Expression& e, const RewriteSystem& rs);
/// The same element as an unreduced combination of words in the free algebra.
RawPoly expand_free(const Expression& e);

/// A parameter file after parsing; exactly one of k / b is set for K and B.
struct ParamsFile {
    std::string family;  // "K", "B", "A", "C"
    std::optional<KParams> k;
    std::optional<BParams> b;
    long n = 0;           // A and C
    CycloScalar q{1};     // A

    /// K data for the K and B families.
    KParams k_params() const;
    HopfPresentation presentation() const;
};

CycloScalar scalar_from_json(const nlohmann::json& j);
nlohmann::json scalar_to_json(const CycloScalar& a);
/// Throws std::invalid_argument on schema violations.
ParamsFile params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const KParams& k);

std::string sha256_hex(const std::string& bytes);

enum ExitCode { kSuccess = 0, kNegative = 1, kInputError = 2 };

/// argv without the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfk::cli
