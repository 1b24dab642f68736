#pragma once

// Lines and conics on hypersurfaces X_d in P^n, counted as Euler-class
// integrals over the parameter spaces Gr(2, n+1) and
// Hilb(conics) = P(Sym^2 S^*) over Gr(3, n+1).

#include <string>
#include <vector>

#include "bott.hpp"
#include "bundle.hpp"
#include "chern.hpp"
#include "chowring.hpp"
#include "expr.hpp"
#include "rational.hpp"

namespace intersect {

struct HypersurfaceProblem {
    int ambient = 5;          // n, for X in P^n
    int degree = 6;           // d
    int curve_degree = 1;     // 1 = lines, 2 = conics
    int insertion_codim = 0;  // 0 = no insertion; c = curves meeting a generic codim-c linear space
};

enum class Backend { Symbolic, Bott };

inline void validate(const HypersurfaceProblem& p) {
    if (p.curve_degree != 1 && p.curve_degree != 2)
        throw MathError("only lines (1) and conics (2) are supported, got curve degree " + std::to_string(p.curve_degree));
    if (p.ambient < p.curve_degree + 1)
        throw MathError("ambient dimension " + std::to_string(p.ambient) + " is too small for curve degree " + std::to_string(p.curve_degree));
    if (p.degree < p.curve_degree) throw MathError("hypersurface degree must be at least the curve degree");
    if (p.insertion_codim < 0 || p.insertion_codim > p.ambient)
        throw MathError("insertion codimension must lie in [0, " + std::to_string(p.ambient) + "]");
}

/// Gr(2, n+1) for lines; P(Sym^2 S^*) over Gr(3, n+1) for conics.
inline SpacePtr parameter_space(int curve_degree, int ambient) {
    if (curve_degree == 1) return gr_ring(2, ambient + 1);
    if (curve_degree == 2) return projectivize(gr_ring(3, ambient + 1), BundleExpr::sym(2, BundleExpr::dual(BundleExpr::taut_sub())));
    throw MathError("unsupported curve degree " + std::to_string(curve_degree));
}

inline SpacePtr parameter_space(const HypersurfaceProblem& p) { return parameter_space(p.curve_degree, p.ambient); }

/// The bundle whose zero locus is the curves in X: Sym^d S^* for lines, and
/// Sym^d S^* / (O(-1) (x) Sym^{d-2} S^*) for conics (the equation of X on the
/// plane of the conic, modulo multiples of the conic's own quadric).
inline BundleExpr obstruction_bundle(const HypersurfaceProblem& p) {
    const BundleExpr dual_s = BundleExpr::dual(BundleExpr::taut_sub());
    if (p.curve_degree == 1) return BundleExpr::sym(p.degree, dual_s);
    return BundleExpr::whitney_quotient(BundleExpr::sym(p.degree, dual_s),
                                        BundleExpr::tensor_line(BundleExpr::sym(p.degree - 2, dual_s), BundleExpr::rel_o(-1)));
}

/// Class of the curves meeting a generic codim-c linear space, as an
/// expression: sigma_{c-1} for lines, zeta sigma_{c-2} + 2 sigma_{c-1} for conics.
/// c = 0 means no insertion.
inline ExprAst incidence_expr(int curve_degree, int codim) {
    if (codim == 0) return ExprAst::number(1);
    if (codim < 0) throw MathError("insertion codimension must be nonnegative");
    auto sigma = [](int i) { return i == 0 ? ExprAst::number(1) : ExprAst::schubert({i}); };
    if (curve_degree == 1) return sigma(codim - 1);
    if (curve_degree == 2) {
        if (codim == 1) return ExprAst::number(2);
        const ExprAst zeta_term = codim == 2 ? ExprAst::zeta() : ExprAst::product({ExprAst::zeta(), sigma(codim - 2)});
        return ExprAst::sum({zeta_term, ExprAst::product({ExprAst::number(2), sigma(codim - 1)})});
    }
    throw MathError("unsupported curve degree " + std::to_string(curve_degree));
}

/// Incidence class on the parameter space. For conics meeting a P^3 in P^5
/// this is zeta + 2 sigma_1: on the universal conic the curve is cut out by
/// the tautological quadric, a section of O(zeta + 2h) on P(S), and the
/// projection formula sends (zeta + 2h) h^2 to zeta s_0(S) + 2 s_1(S).
inline ChowElement incidence_class(const SpacePtr& space, int curve_degree, int codim = 2) {
    const bool lines_space = space->is_grassmannian() && space->sub_rank() == 2;
    const bool conics_space = !space->is_grassmannian() && space->level() == 1 && space->sub_rank() == 3 &&
                              space->bundle() == BundleExpr::sym(2, BundleExpr::dual(BundleExpr::taut_sub()));
    if ((curve_degree == 1 && !lines_space) || (curve_degree == 2 && !conics_space) || curve_degree < 1 || curve_degree > 2)
        throw MathError("incidence class unsupported on " + space->to_string() + " for curve degree " + std::to_string(curve_degree));
    return evaluate(incidence_expr(curve_degree, codim), space);
}

/// Universal curve inside P(S) over the parameter space, with h the relative
/// hyperplane of P(S) (the pullback of the hyperplane of P^n).
struct UniversalCurve {
    SpacePtr parameter_space;
    SpacePtr ambient;  // P(S) over the parameter space
    ChowElement curve_class;
};

inline UniversalCurve universal_curve_class(int curve_degree, int ambient = 5) {
    if (curve_degree != 1 && curve_degree != 2) throw MathError("universal curve needs curve degree 1 or 2");
    UniversalCurve u;
    u.parameter_space = parameter_space(curve_degree, ambient);
    u.ambient = projectivize(u.parameter_space, BundleExpr::taut_sub());
    if (curve_degree == 1) {
        // the universal line is all of P(S)
        u.curve_class = one(u.ambient);
    } else {
        const ChowElement zeta = pullback(u.ambient, relative_hyperplane(u.parameter_space));
        const ChowElement h = relative_hyperplane(u.ambient);
        u.curve_class = zeta + Rational(2) * h;
    }
    return u;
}

/// pi_*([Z] h^codim): the incidence class computed from the universal curve.
inline ChowElement incidence_via_universal_curve(int curve_degree, int ambient = 5, int codim = 2) {
    const UniversalCurve u = universal_curve_class(curve_degree, ambient);
    const ChowElement h = relative_hyperplane(u.ambient);
    return pushforward(u.ambient, u.curve_class * power(h, codim));
}

namespace detail {

inline Rational constant_term(const ChowElement& x) {
    if (x.space()->is_grassmannian()) return x.coefficient(Partition{});
    return x.tower().empty() ? Rational(0) : constant_term(x.tower().front());
}

}  // namespace detail

/// Restriction to the fiber over a point of the base: the coefficients of
/// 1, zeta, ..., zeta^{r-1} after killing positive-degree base classes.
inline std::vector<Rational> restrict_to_fiber(const ChowElement& x) {
    const auto& space = x.space();
    if (space->is_grassmannian()) throw MathError("restrict_to_fiber(): not a projective bundle");
    std::vector<Rational> out;
    for (const auto& alpha : x.tower()) {
        out.push_back(detail::constant_term(alpha));
    }
    return out;
}

/// e(obstruction) times the incidence insertion.
inline ExprAst count_integrand(const HypersurfaceProblem& p) {
    const ExprAst euler = ExprAst::euler(obstruction_bundle(p));
    if (p.insertion_codim == 0) return euler;
    return ExprAst::product({euler, incidence_expr(p.curve_degree, p.insertion_codim)});
}

namespace detail {

inline void check_top_degree(const HypersurfaceProblem& p, const Space& space) {
    const int r = rank(obstruction_bundle(p), space);
    const int insertion = p.insertion_codim == 0 ? 0 : p.insertion_codim - 1;
    const int deficit = space.dim() - (r + insertion);
    if (deficit != 0)
        throw MathError("integrand degree " + std::to_string(r + insertion) + " (rank " + std::to_string(r) + " + insertion " +
                        std::to_string(insertion) + ") does not match dim " + std::to_string(space.dim()) + " of " + space.to_string() +
                        ": deficit " + std::to_string(deficit));
}

inline Rational count_curves(const HypersurfaceProblem& p, Backend backend) {
    validate(p);
    const SpacePtr space = parameter_space(p);
    check_top_degree(p, *space);
    if (backend == Backend::Bott) return bott_integrate_search(space, count_integrand(p)).value;
    ChowElement integrand = euler_class(obstruction_bundle(p), space);
    if (p.insertion_codim != 0) integrand = integrand * incidence_class(space, p.curve_degree, p.insertion_codim);
    return integrate(space, integrand);
}

}  // namespace detail

/// Lines on X_d in P^n meeting the insertion: the integral over Gr(2, n+1) of
/// e(Sym^d S^*) times sigma_{c-1}.
inline Rational count_lines(const HypersurfaceProblem& p, Backend backend = Backend::Symbolic) {
    if (p.curve_degree != 1) throw MathError("count_lines needs curve degree 1");
    return detail::count_curves(p, backend);
}

/// Conics on X_d in P^n meeting the insertion: the integral over
/// P(Sym^2 S^*) of e(Sym^d S^* / (O(-1) (x) Sym^{d-2} S^*)) times the incidence class.
inline Rational count_conics(const HypersurfaceProblem& p, Backend backend = Backend::Symbolic) {
    if (p.curve_degree != 2) throw MathError("count_conics needs curve degree 2");
    return detail::count_curves(p, backend);
}

struct LedgerEntry {
    std::string name;
    long computed = 0;
    long expected = 0;
    std::string anchor;

    bool pass() const { return computed == expected; }
};

/// h^0(P^n, O(d)) = C(n+d, n).
inline long sections_of_hypersurface_degree(int n, int d) { return binomial(n + d, n).get_si(); }

/// Hilbert polynomial of a plane conic, 2t + 1.
inline long conic_hilbert_polynomial(int t) { return 2L * t + 1; }

/// Dimension bookkeeping for conics on a generic sextic fourfold.
inline std::vector<LedgerEntry> dimension_ledger() {
    const int n = 5;
    const int d = 6;
    const long h0_sextics = sections_of_hypersurface_degree(n, d);
    const long dim_sextics = h0_sextics - 1;
    const long h0_conic = conic_hilbert_polynomial(d);
    const long containing_conic = h0_sextics - 1 - h0_conic;

    const SpacePtr planes = gr_ring(3, n + 1);
    const SpacePtr lines = gr_ring(2, n + 1);
    const SpacePtr hilb = parameter_space(2, n);
    const long dual_plane = 2;  // lines in a fixed plane
    const long double_lines = planes->dim() + dual_plane;
    const long point = n;
    const long lines_through_point = n - 1;  // P^{n-1} of directions
    const long line_pairs = point + 2 * lines_through_point;

    const HypersurfaceProblem conics{n, d, 2, 0};
    const HypersurfaceProblem lines_problem{n, d, 1, 0};
    const BundleExpr dual_s = BundleExpr::dual(BundleExpr::taut_sub());
    const long rank_sym6 = rank(BundleExpr::sym(d, dual_s), *planes);
    const long rank_sym4 = rank(BundleExpr::sym(d - 2, dual_s), *planes);
    const long rank_e = rank(obstruction_bundle(conics), *hilb);
    const long rank_lines = rank(obstruction_bundle(lines_problem), *lines);

    return {
        {"h0(P5,O(6))", h0_sextics, 462, "sections of O(6) on P^5: C(11,5)"},
        {"dim P (sextics)", dim_sextics, 461, "projective space of sextics in P^5"},
        {"h0(C,O_C(6))", h0_conic, 13, "Hilbert polynomial 2t+1 of a conic at t=6"},
        {"sextics containing a conic", containing_conic, 448, "462 - 1 - 13, restriction to a conic is surjective"},
        {"dim I_2 (double lines)", double_lines, 11, "plane in Gr(3,6) plus a line in it"},
        {"dim C_2", double_lines + containing_conic, 459, "double lines with a sextic containing them"},
        {"dim I_1 (intersecting line pairs)", line_pairs, 13, "a point of P^5 and two lines through it"},
        {"dim C_1", line_pairs + containing_conic, 461, "line pairs with a sextic containing them"},
        {"dim Hilb(conics)", hilb->dim(), 14, "P^5-bundle P(Sym^2 S*) over Gr(3,6)"},
        {"dim incidence (conic, sextic)", hilb->dim() + containing_conic, 462, "conics with a sextic containing them"},
        {"rank Sym^6 S*", rank_sym6, 28, "C(8,2)"},
        {"rank Sym^4 S*", rank_sym4, 15, "C(6,2)"},
        {"rank E", rank_e, 13, "Sym^6 S* / (O(-1) (x) Sym^4 S*): 28 - 15"},
        {"dim conics on X", hilb->dim() - rank_e, 1, "zero locus of a section of E on Hilb(conics)"},
        {"dim lines on X", lines->dim() - rank_lines, 1, "zero locus of a section of Sym^6 S* on Gr(2,6)"},
    };
}

/// Modelling assumptions the counts rely on, reported alongside the ledger.
inline std::vector<std::string> ledger_assumptions() {
    return {
        "incidence class zeta + 2 sigma_1 is used without an excess-intersection correction along the broken-conic locus",
        "counts follow the positive-count orientation convention; orientation itself is not verified",
    };
}

}  // namespace intersect
