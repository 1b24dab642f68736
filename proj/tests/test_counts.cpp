#include <gtest/gtest.h>

#include <intersect/counts.hpp>

using namespace intersect;

TEST(ParameterSpace, LinesAndConics) {
    EXPECT_EQ(parameter_space(1, 5)->to_string(), "gr(2,6)");
    const auto hilb = parameter_space(2, 5);
    EXPECT_EQ(hilb->to_string(), "pbundle(sym(2,dual(S)),gr(3,6))");
    EXPECT_EQ(hilb->dim(), 14);
}

TEST(ObstructionBundle, RanksMatchDimensions) {
    const HypersurfaceProblem conics{5, 6, 2, 2};
    EXPECT_EQ(rank(obstruction_bundle(conics), *parameter_space(conics)), 13);
    const HypersurfaceProblem lines{5, 6, 1, 2};
    EXPECT_EQ(rank(obstruction_bundle(lines), *parameter_space(lines)), 7);
    EXPECT_EQ(obstruction_bundle(conics).to_string(), "quot(sym(6,dual(S)),tensor(sym(4,dual(S)),o(-1)))");
}

TEST(IncidenceClass, LinesIsSigmaOne) {
    const auto g = parameter_space(1, 5);
    EXPECT_EQ(incidence_class(g, 1), schubert(g, Partition{1}));
    EXPECT_EQ(incidence_via_universal_curve(1, 5, 2), schubert(g, Partition{1}));
}

TEST(IncidenceClass, ConicsIsZetaPlusTwoSigmaOne) {
    const auto h = parameter_space(2, 5);
    const auto expected = relative_hyperplane(h) + Rational(2) * schubert(h, Partition{1});
    EXPECT_EQ(incidence_class(h, 2), expected);
    EXPECT_EQ(incidence_via_universal_curve(2, 5, 2), expected);
}

TEST(IncidenceClass, ExpressionText) {
    EXPECT_EQ(incidence_expr(2, 2).to_string(), "zeta+2*s[1]");
    EXPECT_EQ(incidence_expr(2, 3).to_string(), "zeta*s[1]+2*s[2]");
    EXPECT_EQ(incidence_expr(1, 2).to_string(), "s[1]");
    EXPECT_EQ(count_integrand({5, 6, 2, 2}).to_string(), "e(quot(sym(6,dual(S)),tensor(sym(4,dual(S)),o(-1))))*(zeta+2*s[1])");
}

TEST(IncidenceClass, UniversalCurveOracleInOtherCodimensions) {
    for (int n : {3, 4, 5}) {
        for (int c = 1; c <= n; ++c) {
            EXPECT_EQ(incidence_class(parameter_space(1, n), 1, c), incidence_via_universal_curve(1, n, c)) << n << " " << c;
            EXPECT_EQ(incidence_class(parameter_space(2, n), 2, c), incidence_via_universal_curve(2, n, c)) << n << " " << c;
        }
    }
}

TEST(IncidenceClass, RestrictsToZetaOnAFiber) {
    const auto fiber = restrict_to_fiber(incidence_class(parameter_space(2, 5), 2));
    EXPECT_EQ(fiber, (std::vector<Rational>{0, 1, 0, 0, 0, 0}));
}

TEST(IncidenceClass, UnsupportedSpace) {
    EXPECT_THROW(incidence_class(gr_ring(3, 6), 2), MathError);
    EXPECT_THROW(incidence_class(parameter_space(2, 5), 1), MathError);
    EXPECT_THROW(incidence_class(gr_ring(2, 6), 3), MathError);
}

TEST(UniversalCurve, ConicHasDegreeTwoOnItsPlane) {
    const auto u = universal_curve_class(2);
    const auto fiber = restrict_to_fiber(u.curve_class * relative_hyperplane(u.ambient));
    ASSERT_EQ(fiber.size(), 3u);
    EXPECT_EQ(fiber[2], 2);  // the coefficient of h^2, the point class of the plane
    EXPECT_EQ(fiber[0], 0);
    EXPECT_EQ(fiber[1], 0);
}

TEST(UniversalCurve, LineIsTheWholeProjectiveBundle) {
    const auto u = universal_curve_class(1);
    EXPECT_EQ(u.curve_class, one(u.ambient));
    EXPECT_EQ(u.ambient->to_string(), "pbundle(S,gr(2,6))");
    EXPECT_THROW(universal_curve_class(3), MathError);
}

TEST(CountLines, KnownValues) {
    for (Backend b : {Backend::Symbolic, Backend::Bott}) {
        EXPECT_EQ(count_lines({5, 6, 1, 2}, b), 60480);
        EXPECT_EQ(count_lines({4, 5, 1, 0}, b), 2875);
        EXPECT_EQ(count_lines({3, 3, 1, 0}, b), 27);
    }
}

TEST(CountConics, KnownValues) {
    for (Backend b : {Backend::Symbolic, Backend::Bott}) {
        EXPECT_EQ(count_conics({5, 6, 2, 2}, b), 440884080);
        EXPECT_EQ(count_conics({4, 5, 2, 0}, b), 609250);
    }
}

TEST(Counts, MoreClassicalValues) {
    // the Fano curve of a quartic threefold has Pluecker degree 320
    EXPECT_EQ(count_lines({4, 4, 1, 2}), 320);
    // six lines through each of the three points where a line meets a cubic threefold
    EXPECT_EQ(count_lines({4, 3, 1, 3}), 18);
    // lines on a septic fourfold
    EXPECT_EQ(count_lines({5, 7, 1, 0}), 698005);
    EXPECT_EQ(count_lines({5, 7, 1, 0}, Backend::Bott), 698005);
    EXPECT_THROW(count_lines({5, 8, 1, 0}), MathError);
}

TEST(Counts, DegreeMismatchNamesTheDeficit) {
    try {
        count_conics({5, 5, 2, 2});
        FAIL() << "expected a MathError";
    } catch (const MathError& e) {
        EXPECT_NE(std::string(e.what()).find("deficit 2"), std::string::npos) << e.what();
    }
}

TEST(Counts, InvalidProblems) {
    EXPECT_THROW(count_lines({5, 6, 2, 2}), MathError);
    EXPECT_THROW(count_conics({5, 6, 1, 2}), MathError);
    EXPECT_THROW(count_conics({2, 4, 2, 0}), MathError);
    EXPECT_THROW(count_lines({5, 6, 1, 9}), MathError);
    EXPECT_THROW(count_lines({5, 6, 1, -1}), MathError);
}

TEST(Counts, DoublingTheInsertionDoublesTheCount) {
    const HypersurfaceProblem p{5, 6, 2, 2};
    const auto space = parameter_space(p);
    const auto e = euler_class(obstruction_bundle(p), space);
    const auto inc = incidence_class(space, 2);
    EXPECT_EQ(integrate(space, e * (Rational(2) * inc)), 2 * count_conics(p));
}

TEST(Counts, NonnegativeIntegers) {
    for (const HypersurfaceProblem& p : {HypersurfaceProblem{5, 6, 1, 2}, HypersurfaceProblem{5, 6, 2, 2}, HypersurfaceProblem{4, 5, 2, 0}}) {
        const Rational v = detail::count_curves(p, Backend::Symbolic);
        EXPECT_TRUE(is_integer(v));
        EXPECT_GE(v, 0);
    }
}

TEST(DimensionLedger, AllEntriesPass) {
    const auto ledger = dimension_ledger();
    EXPECT_GE(ledger.size(), 14u);
    for (const auto& e : ledger) EXPECT_TRUE(e.pass()) << e.name << ": " << e.computed << " vs " << e.expected;
}

TEST(DimensionLedger, HeadlineValues) {
    std::map<std::string, long> v;
    for (const auto& e : dimension_ledger()) v[e.name] = e.computed;
    EXPECT_EQ(v["h0(P5,O(6))"], 462);
    EXPECT_EQ(v["dim P (sextics)"], 461);
    EXPECT_EQ(v["sextics containing a conic"], 448);
    EXPECT_EQ(v["dim C_2"], 459);
    EXPECT_EQ(v["dim C_1"], 461);
    EXPECT_EQ(v["dim incidence (conic, sextic)"], 462);
    EXPECT_EQ(v["rank E"], 13);
    EXPECT_EQ(v["dim conics on X"], 1);
}

TEST(DimensionLedger, FlagsTheExcessIntersectionAssumption) {
    bool found = false;
    for (const auto& a : ledger_assumptions()) found = found || a.find("excess-intersection") != std::string::npos;
    EXPECT_TRUE(found);
}
