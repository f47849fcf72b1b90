#include "hopfk/cli.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hopfk::cli {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument("at " + std::to_string(position) + ": " + what), position_(position) {}

namespace {

class Parser {
public:
    Parser(const std::string& src, const Alphabet& alphabet) : src_(src), alphabet_(alphabet) {}

    Expression parse() {
        Expression e = expr();
        skip();
        if (pos_ != src_.size()) throw ParseError("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
        return e;
    }

private:
    const std::string& src_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    bool at_digit() {
        skip();
        return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
    }

    std::string digits() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", start);
        return src_.substr(start, pos_ - start);
    }

    long signed_int() {
        skip();
        const std::size_t start = pos_;
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        const std::string d = digits();
        if (d.size() > 17) throw ParseError("integer too large", start);
        const long v = std::stol(d);
        return neg ? -v : v;
    }

    // Always a Sum node, so parenthesised groups survive printing.
    Expression expr() {
        skip();
        Expression sum;
        sum.kind = Expression::Kind::Sum;
        sum.position = pos_;
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        sum.children.push_back(term());
        sum.negated.push_back(neg);
        for (;;) {
            skip();
            if (accept('+')) neg = false;
            else if (accept('-')) neg = true;
            else break;
            sum.children.push_back(term());
            sum.negated.push_back(neg);
        }
        return sum;
    }

    Expression term() {
        skip();
        const std::size_t start = pos_;
        std::vector<Expression> factors{factor()};
        while (accept('*')) factors.push_back(factor());
        if (factors.size() == 1) return std::move(factors[0]);
        Expression p;
        p.kind = Expression::Kind::Product;
        p.position = start;
        p.children = std::move(factors);
        return p;
    }

    Expression factor() {
        skip();
        const std::size_t start = pos_;
        Expression base = atom();
        if (!accept('^')) return base;
        skip();
        const std::size_t exp_pos = pos_;
        const long e = signed_int();
        if (e < 0 && base.kind == Expression::Kind::Generator && is_skew(base.letter))
            throw ParseError("negative power of a non-invertible generator " + alphabet_.letter_name(base.letter),
                             exp_pos);
        Expression p;
        p.kind = Expression::Kind::Power;
        p.position = start;
        p.exponent = e;
        p.children.push_back(std::move(base));
        return p;
    }

    Expression atom() {
        skip();
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        if (accept('(')) {
            Expression inner = expr();
            expect(')');
            return inner;
        }
        if (at_digit()) return number(start);
        if (std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
            while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            const std::string name = src_.substr(start, pos_ - start);
            if (name == "zeta") return zeta(start);
            return generator(name, start);
        }
        throw ParseError("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
    }

    Expression number(std::size_t start) {
        Expression e;
        e.position = start;
        const std::string num = digits();
        e.literal = num;
        Rational value(num);
        if (accept('/')) {
            skip();
            const std::size_t den_pos = pos_;
            const std::string den = digits();
            if (Integer(den) == 0) throw ParseError("zero denominator", den_pos);
            e.literal += "/" + den;
            value = Rational(Integer(num), Integer(den));
            value.canonicalize();
        }
        e.scalar = CycloScalar(value);
        return e;
    }

    Expression zeta(std::size_t start) {
        expect('(');
        skip();
        const std::size_t order_pos = pos_;
        const long L = signed_int();
        expect(',');
        const long k = signed_int();
        expect(')');
        if (L < 1 || L > 100000) throw ParseError("root order must be in 1..100000", order_pos);
        Expression e;
        e.position = start;
        e.scalar = make_root(static_cast<int>(L), k);
        e.literal = "zeta(" + std::to_string(L) + "," + std::to_string(k) + ")";
        return e;
    }

    Expression generator(const std::string& name, std::size_t start) {
        Expression e;
        e.kind = Expression::Kind::Generator;
        e.position = start;
        if (name == alphabet_.group_name) {
            e.letter = kGroup;
            return e;
        }
        for (int i = 0; i < alphabet_.skew_count; ++i) {
            const std::string& skew = alphabet_.skew_names[i];
            // a lone "y" also answers to "y1"
            if (name == skew || (alphabet_.skew_count == 1 && name == skew + "1")) {
                e.letter = skew_letter(i);
                return e;
            }
        }
        throw ParseError("unknown generator '" + name + "'", start);
    }
};

void print_into(std::ostringstream& os, const Expression& e, const Alphabet& a, bool root) {
    using K = Expression::Kind;
    switch (e.kind) {
    case K::Scalar:
        os << e.literal;
        break;
    case K::Generator:
        os << a.letter_name(e.letter);
        break;
    case K::Sum:
        if (!root) os << '(';
        for (std::size_t i = 0; i < e.children.size(); ++i) {
            if (i == 0) {
                if (e.negated[i]) os << '-';
            } else {
                os << (e.negated[i] ? " - " : " + ");
            }
            print_into(os, e.children[i], a, false);
        }
        if (!root) os << ')';
        break;
    case K::Product:
        for (std::size_t i = 0; i < e.children.size(); ++i) {
            if (i) os << '*';
            print_into(os, e.children[i], a, false);
        }
        break;
    case K::Power:
        print_into(os, e.children[0], a, false);
        os << '^' << e.exponent;
        break;
    }
}

NCPoly power(const NCPoly& base, long e, const RewriteSystem& rs, std::size_t position) {
    const int s = rs.skew_count();
    if (e >= 0) {
        NCPoly out = NCPoly::constant(CycloScalar(1), s);
        for (long k = 0; k < e; ++k) out = rs.multiply(out, base);
        return out;
    }
    // units are the nonzero multiples of grouplike powers
    if (base.size() != 1 || !base.terms().begin()->first.is_grouplike())
        throw ParseError("negative power of a non-invertible expression", position);
    const auto& [m, c] = *base.terms().begin();
    return NCPoly::monomial({m.w0 * e, std::vector<int>(s, 0)}, c.pow(e));
}

RawPoly raw_product(const RawPoly& a, const RawPoly& b) {
    RawPoly out;
    out.reserve(a.size() * b.size());
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.emplace_back(std::move(w), ca * cb);
        }
    return out;
}

RawPoly raw_power(const RawPoly& base, long e, std::size_t position) {
    if (e >= 0) {
        RawPoly out{{Word{}, CycloScalar(1)}};
        for (long k = 0; k < e; ++k) out = raw_product(out, base);
        return out;
    }
    const bool unit = base.size() == 1 && !base[0].second.is_zero() &&
                      std::none_of(base[0].first.begin(), base[0].first.end(), is_skew);
    if (!unit) throw ParseError("negative power of a non-invertible expression", position);
    Word inv(base[0].first.rbegin(), base[0].first.rend());
    for (Letter& l : inv) l = l == kGroup ? kGroupInv : kGroup;
    return raw_power({{inv, base[0].second.inv()}}, -e, position);
}

}  // namespace

RawPoly expand_free(const Expression& e) {
    using K = Expression::Kind;
    switch (e.kind) {
    case K::Scalar:
        return {{Word{}, e.scalar}};
    case K::Generator:
        return {{Word{e.letter}, CycloScalar(1)}};
    case K::Sum: {
        RawPoly out;
        for (std::size_t i = 0; i < e.children.size(); ++i)
            for (auto& [w, c] : expand_free(e.children[i])) out.emplace_back(std::move(w), e.negated[i] ? -c : c);
        return out;
    }
    case K::Product: {
        RawPoly out = expand_free(e.children[0]);
        for (std::size_t i = 1; i < e.children.size(); ++i) out = raw_product(out, expand_free(e.children[i]));
        return out;
    }
    case K::Power:
        return raw_power(expand_free(e.children[0]), e.exponent, e.position);
    }
    return {};
}

Expression parse_expression(const std::string& src, const Alphabet& alphabet) {
    return Parser(src, alphabet).parse();
}

std::string print(const Expression& e, const Alphabet& alphabet) {
    std::ostringstream os;
    print_into(os, e, alphabet, true);
    return os.str();
}

NCPoly evaluate(const Expression& e, const RewriteSystem& rs) {
    using K = Expression::Kind;
    const int s = rs.skew_count();
    switch (e.kind) {
    case K::Scalar:
        return NCPoly::constant(e.scalar, s);
    case K::Generator: {
        NFMonomial m = NFMonomial::one(s);
        if (e.letter == kGroup) m.w0 = 1;
        else m.w[skew_index(e.letter)] = 1;
        return NCPoly::monomial(m);
    }
    case K::Sum: {
        NCPoly out;
        for (std::size_t i = 0; i < e.children.size(); ++i) {
            const NCPoly t = evaluate(e.children[i], rs);
            if (e.negated[i]) out -= t;
            else out += t;
        }
        return out;
    }
    case K::Product: {
        NCPoly out = evaluate(e.children[0], rs);
        for (std::size_t i = 1; i < e.children.size(); ++i) out = rs.multiply(out, evaluate(e.children[i], rs));
        return out;
    }
    case K::Power:
        return power(evaluate(e.children[0], rs), e.exponent, rs, e.position);
    }
    return {};
}

}  // namespace hopfk::cli
