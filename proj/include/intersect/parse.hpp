#pragma once

// Recursive-descent parser for the expression, bundle and space DSL.
//
//   expr   := term { "+" term }
//   term   := factor { "*" factor }
//   factor := atom [ "^" int ]
//   atom   := "s[" int {"," int} "]" | "zeta" | rational | "c(" int "," bundle ")"
//           | "e(" bundle ")" | "(" expr ")"
//   bundle := "S" | "Q" | "triv(" int ")" | "dual(" bundle ")" | "sym(" int "," bundle ")"
//           | "o(" int ")" | "tensor(" bundle "," bundle ")" | "quot(" bundle "," bundle ")"
//   space  := "gr(" int "," int ")" | "pbundle(" bundle "," space ")"
//
// Whitespace is ignored between tokens. Syntax errors throw ParseError,
// meaningless combinations (gr(4,2), quot with nonpositive rank) MathError.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bundle.hpp"
#include "chern.hpp"
#include "expr.hpp"
#include "rational.hpp"

namespace intersect {

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprAst expression() {
        std::vector<ExprAst> terms{term()};
        while (accept('+')) terms.push_back(term());
        return terms.size() == 1 ? terms.front() : ExprAst::sum(std::move(terms));
    }

    BundleExpr bundle() {
        skip_space();
        const std::size_t start = pos_;
        const std::string name = identifier();
        if (name == "S") return BundleExpr::taut_sub();
        if (name == "Q") return BundleExpr::taut_quot();
        if (name == "triv") {
            expect('(');
            const long r = integer();
            expect(')');
            return BundleExpr::trivial(static_cast<int>(r));
        }
        if (name == "dual") {
            expect('(');
            BundleExpr inner = bundle();
            expect(')');
            return BundleExpr::dual(std::move(inner));
        }
        if (name == "sym") {
            expect('(');
            const long d = integer();
            expect(',');
            BundleExpr inner = bundle();
            expect(')');
            return BundleExpr::sym(static_cast<int>(d), std::move(inner));
        }
        if (name == "o") {
            expect('(');
            const long k = integer();
            expect(')');
            return BundleExpr::rel_o(static_cast<int>(k));
        }
        if (name == "tensor" || name == "quot") {
            expect('(');
            BundleExpr a = bundle();
            expect(',');
            BundleExpr b = bundle();
            expect(')');
            return name == "tensor" ? BundleExpr::tensor_line(std::move(a), std::move(b))
                                    : BundleExpr::whitney_quotient(std::move(a), std::move(b));
        }
        throw ParseError(name.empty() ? "expected a bundle" : "unknown bundle '" + name + "'", start);
    }

    SpacePtr space() {
        skip_space();
        const std::size_t start = pos_;
        const std::string name = identifier();
        if (name == "gr") {
            expect('(');
            const long k = integer();
            expect(',');
            const long n = integer();
            expect(')');
            return Space::grassmannian(static_cast<int>(k), static_cast<int>(n));
        }
        if (name == "pbundle") {
            expect('(');
            BundleExpr b = bundle();
            expect(',');
            SpacePtr base = space();
            expect(')');
            return projectivize(base, b);
        }
        throw ParseError(name.empty() ? "expected a space" : "unknown space '" + name + "'", start);
    }

    void finish() {
        skip_space();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }

private:
    ExprAst term() {
        std::vector<ExprAst> factors{factor()};
        while (accept('*')) factors.push_back(factor());
        return factors.size() == 1 ? factors.front() : ExprAst::product(std::move(factors));
    }

    ExprAst factor() {
        ExprAst base = atom();
        if (accept('^')) return ExprAst::power(std::move(base), static_cast<int>(integer()));
        return base;
    }

    ExprAst atom() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            ExprAst inner = expression();
            expect(')');
            return inner;
        }
        if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) return ExprAst::number(rational());
        const std::size_t start = pos_;
        const std::string name = identifier();
        if (name == "s") {
            expect('[');
            std::vector<int> parts{static_cast<int>(integer())};
            while (accept(',')) parts.push_back(static_cast<int>(integer()));
            expect(']');
            return ExprAst::schubert(std::move(parts));
        }
        if (name == "zeta") return ExprAst::zeta();
        if (name == "c") {
            expect('(');
            const long i = integer();
            expect(',');
            BundleExpr b = bundle();
            expect(')');
            return ExprAst::chern(static_cast<int>(i), std::move(b));
        }
        if (name == "e") {
            expect('(');
            BundleExpr b = bundle();
            expect(')');
            return ExprAst::euler(std::move(b));
        }
        throw ParseError(name.empty() ? std::string("unexpected '") + ch + "'" : "unknown atom '" + name + "'", start);
    }

    Rational rational() {
        skip_space();
        const std::size_t start = pos_;
        std::string digits = signed_digits();
        if (peek() == '/') {
            ++pos_;
            skip_space();
            const std::size_t den_start = pos_;
            std::string den;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) den += text_[pos_++];
            if (den.empty()) throw ParseError("expected a denominator", den_start);
            digits += "/" + den;
        }
        Rational q;
        if (!parse_rational(digits, q)) throw ParseError("invalid rational '" + digits + "'", start);
        return q;
    }

    long integer() {
        skip_space();
        const std::size_t start = pos_;
        const std::string digits = signed_digits();
        if (digits.size() > 9) throw ParseError("integer out of range", start);
        return std::stol(digits);
    }

    std::string signed_digits() {
        const std::size_t start = pos_;
        std::string out;
        if (pos_ < text_.size() && text_[pos_] == '-') out += text_[pos_++];
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
        if (out.empty() || out == "-") throw ParseError("expected an integer", start);
        return out;
    }

    std::string identifier() {
        skip_space();
        std::string out;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
        return out;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
            throw ParseError(std::string("expected '") + c + "' but found '" + text_[pos_] + "'", pos_);
        }
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprAst parse_expression(std::string_view text) {
    detail::Parser p(text);
    ExprAst e = p.expression();
    p.finish();
    return e;
}

inline BundleExpr parse_bundle(std::string_view text) {
    detail::Parser p(text);
    BundleExpr b = p.bundle();
    p.finish();
    return b;
}

inline SpacePtr parse_space(std::string_view text) {
    detail::Parser p(text);
    SpacePtr s = p.space();
    p.finish();
    return s;
}

}  // namespace intersect
