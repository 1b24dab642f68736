#include <gtest/gtest.h>

#include <random>

#include <intersect/parse.hpp>

using namespace intersect;

namespace {

Rational integrate_text(const std::string& space, const std::string& expr) {
    const auto s = parse_space(space);
    return integrate(s, evaluate(parse_expression(expr), s));
}

// Random well-formed expression for the round-trip property.
ExprAst random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 8 : 4);
    switch (pick(rng)) {
        case 0: return ExprAst::zeta();
        case 1: return ExprAst::number(make_rational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1));
        case 2: return ExprAst::schubert({static_cast<int>(rng() % 3) + 1, static_cast<int>(rng() % 2)});
        case 3: return ExprAst::chern(static_cast<int>(rng() % 4), parse_bundle("tensor(sym(2,dual(S)),o(-1))"));
        case 4: return ExprAst::euler(parse_bundle("quot(triv(4),S)"));
        case 5:
        case 6: {
            std::vector<ExprAst> kids;
            const int n = 2 + static_cast<int>(rng() % 2);
            for (int i = 0; i < n; ++i) kids.push_back(random_expr(rng, depth - 1));
            return pick(rng) % 2 ? ExprAst::sum(kids) : ExprAst::product(kids);
        }
        default: return ExprAst::power(random_expr(rng, depth - 1), static_cast<int>(rng() % 4));
    }
}

}  // namespace

TEST(ParseExpression, KnownValues) {
    EXPECT_EQ(integrate_text("gr(2,4)", "s[1]^4"), 2);
    EXPECT_EQ(integrate_text("gr(2,5)", "e(sym(5,dual(S)))"), 2875);
    EXPECT_EQ(integrate_text("pbundle(sym(2,dual(S)),gr(3,6))",
                             "e(quot(sym(6,dual(S)),tensor(sym(4,dual(S)),o(-1)))) * (zeta + 2*s[1])"),
              440884080);
}

TEST(ParseExpression, Precedence) {
    // ^ binds tighter than *, which binds tighter than +
    const auto e = parse_expression("2*s[1]^2+zeta");
    ASSERT_EQ(e.kind(), ExprAst::Kind::Sum);
    ASSERT_EQ(e.children()[0].kind(), ExprAst::Kind::Product);
    EXPECT_EQ(e.children()[0].children()[1].kind(), ExprAst::Kind::Power);
    EXPECT_EQ(integrate_text("gr(2,4)", "2*s[1]^2*s[1]^2 + s[2,2]"), 5);
    EXPECT_EQ(integrate_text("gr(2,4)", "(s[1]+s[1])^4"), 32);
}

TEST(ParseExpression, WhitespaceInsensitive) {
    EXPECT_EQ(parse_expression("  s [ 2 , 1 ] *\tzeta ^ 2 "), parse_expression("s[2,1]*zeta^2"));
    EXPECT_EQ(parse_bundle(" quot ( sym ( 6 , dual ( S ) ) , tensor ( Q , o ( -1 ) ) ) "),
              parse_bundle("quot(sym(6,dual(S)),tensor(Q,o(-1)))"));
}

TEST(ParseExpression, RationalLiterals) {
    EXPECT_EQ(parse_expression("3/6").value(), make_rational(1, 2));
    EXPECT_EQ(parse_expression("-4").value(), -4);
    EXPECT_EQ(integrate_text("gr(2,4)", "1/2*s[1]^4"), 1);
}

TEST(ParseExpression, SyntaxErrorsCarryPositions) {
    const std::vector<std::pair<std::string, std::size_t>> bad{
        {"s[1", 3}, {"s[1]+", 5}, {"zeta^", 5}, {"foo", 0}, {"e(X)", 2}, {"s[1] s[2]", 5}, {"1/0", 0}, {"(zeta", 5}, {"", 0},
    };
    for (const auto& [text, pos] : bad) {
        try {
            parse_expression(text);
            ADD_FAILURE() << "accepted '" << text << "'";
        } catch (const ParseError& e) {
            EXPECT_EQ(e.position(), pos) << text << ": " << e.what();
        }
    }
}

TEST(ParseExpression, SemanticErrorsAreMathErrors) {
    const auto g = gr_ring(2, 4);
    EXPECT_THROW(evaluate(parse_expression("s[1,2]"), g), MathError);
    EXPECT_THROW(evaluate(parse_expression("zeta"), g), MathError);
    EXPECT_THROW(evaluate(parse_expression("e(o(1))"), g), MathError);
    EXPECT_THROW(evaluate(parse_expression("e(quot(S,Q))"), g), MathError);
    EXPECT_THROW(evaluate(parse_expression("c(-1,S)"), g), MathError);
}

TEST(ParseSpace, Literals) {
    EXPECT_EQ(parse_space("gr(3,6)"), gr_ring(3, 6));
    const auto b = parse_space("pbundle(S, pbundle(sym(2,dual(S)), gr(3,6)))");
    EXPECT_EQ(b->dim(), 16);
    EXPECT_EQ(b->to_string(), "pbundle(S,pbundle(sym(2,dual(S)),gr(3,6)))");
    EXPECT_THROW(parse_space("gr(4,2)"), MathError);
    EXPECT_THROW(parse_space("gr(2,4"), ParseError);
    EXPECT_THROW(parse_space("proj(S)"), ParseError);
    EXPECT_THROW(parse_space("pbundle(quot(S,Q),gr(2,4))"), MathError);
}

TEST(ParseBundle, RoundTrip) {
    for (const auto* text : {"S", "Q", "triv(3)", "dual(S)", "sym(6,dual(S))", "o(-1)", "tensor(sym(4,dual(S)),o(-1))",
                             "quot(sym(6,dual(S)),tensor(sym(4,dual(S)),o(-1)))"}) {
        EXPECT_EQ(parse_bundle(text).to_string(), text);
        EXPECT_EQ(parse_bundle(parse_bundle(text).to_string()), parse_bundle(text));
    }
}

TEST(ExprAst, PrintThenParseRoundTrips) {
    std::mt19937 rng(5);
    for (int i = 0; i < 300; ++i) {
        const ExprAst e = random_expr(rng, 3);
        EXPECT_EQ(parse_expression(e.to_string()), e) << e.to_string();
    }
}

TEST(ExprAst, CanonicalPrinting) {
    EXPECT_EQ(parse_expression("e(sym(3,dual(S))) * (zeta + 2 * s[1])").to_string(), "e(sym(3,dual(S)))*(zeta+2*s[1])");
    EXPECT_EQ(parse_expression("(s[1]^2)^2").to_string(), "(s[1]^2)^2");
    EXPECT_EQ(parse_expression("-3/4*zeta").to_string(), "-3/4*zeta");
}

TEST(ExprAst, Degree) {
    const auto h = parse_space("pbundle(sym(2,dual(S)),gr(3,6))");
    EXPECT_EQ(expression_degree(parse_expression("e(quot(sym(6,dual(S)),tensor(sym(4,dual(S)),o(-1))))*(zeta+2*s[1])"), *h), 14);
    EXPECT_EQ(expression_degree(parse_expression("zeta+s[2]"), *h), -1);
    EXPECT_EQ(expression_degree(parse_expression("c(3,S)^2"), *h), 6);
}
