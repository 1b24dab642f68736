// A few classical computations, written with the expression parser.

#include <iostream>

#include <intersect/bott.hpp>
#include <intersect/parse.hpp>

using namespace intersect;

int main() {
    const struct {
        const char* space;
        const char* expr;
        const char* what;
    } problems[] = {
        {"gr(2,4)", "s[1]^4", "lines meeting four general lines in P^3"},
        {"gr(2,4)", "e(sym(3,dual(S)))", "lines on a cubic surface"},
        {"gr(2,5)", "e(sym(5,dual(S)))", "lines on a quintic threefold"},
        {"pbundle(sym(2,dual(S)),gr(3,5))", "e(quot(sym(5,dual(S)),tensor(sym(3,dual(S)),o(-1))))", "conics on a quintic threefold"},
        {"gr(3,6)", "s[1]^9", "degree of Gr(3,6) in the Pluecker embedding"},
    };
    for (const auto& p : problems) {
        const SpacePtr space = parse_space(p.space);
        const ExprAst expr = parse_expression(p.expr);
        const Rational symbolic = integrate(space, evaluate(expr, space));
        const BottResult bott = bott_integrate_search(space, expr);
        std::cout << p.what << ": " << symbolic << "  (localization: " << bott.value << ", weight seed " << bott.seed << ")\n";
    }

    const SpacePtr g = gr_ring(2, 4);
    std::cout << "s[1]^2 on gr(2,4) = " << to_string(power(schubert(g, Partition{1}), 2)) << "\n";
    const SpacePtr ps = parse_space("pbundle(S,gr(2,4))");
    std::cout << "zeta^2 on " << ps->to_string() << " = " << to_string(power(relative_hyperplane(ps), 2)) << "\n";
}
