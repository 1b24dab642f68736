#pragma once

// The acceptance suite: seven criteria, each a list of exact checks with an
// optional wall-clock limit. Shared by the acceptance binary and `selftest`.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bott.hpp"
#include "counts.hpp"
#include "gwdt.hpp"
#include "parse.hpp"
#include "report.hpp"

namespace intersect {

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;
    double limit_seconds = 0;  // 0: untimed
    std::string error;

    bool within_time() const { return limit_seconds <= 0 || seconds < limit_seconds; }
    bool pass() const {
        if (!error.empty() || checks.empty() || !within_time()) return false;
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string summary() const {
        std::size_t ok = 0;
        for (const auto& c : checks) ok += c.pass ? 1 : 0;
        std::string s = std::to_string(ok) + "/" + std::to_string(checks.size()) + " checks";
        char buf[64];
        std::snprintf(buf, sizeof buf, ", %.3fs", seconds);
        s += buf;
        if (limit_seconds > 0) {
            std::snprintf(buf, sizeof buf, " (limit %.0fs)", limit_seconds);
            s += buf;
        }
        if (!error.empty()) s += ", error: " + error;
        return s;
    }
};

namespace detail {

inline CriterionResult timed(int id, std::string title, double limit, const std::function<void(std::vector<Check>&)>& body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.limit_seconds = limit;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(r.checks);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline Rational integrate_text(const std::string& space, const std::string& expr, Backend backend) {
    const SpacePtr s = parse_space(space);
    const ExprAst e = parse_expression(expr);
    if (backend == Backend::Bott) return bott_integrate_search(s, e).value;
    return integrate(s, evaluate(e, s));
}

}  // namespace detail

/// Property checks over the Chow ring engine and the GW/DT combinators.
inline std::vector<Check> property_checks(std::uint64_t seed = 20240601) {
    std::vector<Check> out;
    const std::vector<std::pair<int, int>> grassmannians{{2, 4}, {2, 5}, {3, 6}};

    for (const auto& [k, n] : grassmannians) {
        const SpacePtr g = gr_ring(k, n);
        const std::string tag = g->to_string();

        // Poincare duality: int sigma_a sigma_b = [b is the complement of a]
        long bad = 0;
        for (const auto& a : g->basis()) {
            for (const auto& b : g->basis()) {
                if (a.weight() + b.weight() != g->dim()) continue;
                const Rational v = integrate(g, schubert(g, a) * schubert(g, b));
                if (v != (b == a.complement(k, n - k) ? 1 : 0)) ++bad;
            }
        }
        out.push_back(make_check("poincare duality " + tag, Rational(0), Rational(bad)));

        // c(S) c(Q) = 1
        const auto cs = chern_classes(BundleExpr::taut_sub(), g);
        const auto cq = chern_classes(BundleExpr::taut_quot(), g);
        const auto prod = series_multiply(cs, cq, g, g->dim());
        bool whitney = prod[0] == one(g);
        for (std::size_t i = 1; i < prod.size(); ++i) whitney = whitney && prod[i].is_zero();
        out.push_back(make_check("c(S)c(Q)=1 " + tag, "true", whitney ? "true" : "false"));

        // LR expansion of sigma_lambda sigma_i against the Pieri rule
        long mismatches = 0;
        for (const auto& lambda : g->basis()) {
            for (int i = 1; i <= n - k; ++i) {
                const auto pieri = pieri_multiply(lambda, i, k, n - k);
                for (const auto& nu : enumerate_partitions(k, n - k)) {
                    if (nu.weight() != lambda.weight() + i) continue;
                    const long expected = std::count(pieri.begin(), pieri.end(), nu);
                    if (lr_coefficient(lambda, Partition::row(i), nu) != expected) ++mismatches;
                }
            }
        }
        out.push_back(make_check("LR vs Pieri " + tag, Rational(0), Rational(mismatches)));
    }

    // c s = 1 for a spread of bundles, including ones on a projective bundle
    const SpacePtr conic_space = parameter_space(2, 5);
    const std::vector<std::pair<SpacePtr, std::string>> bundles{
        {gr_ring(3, 6), "S"},
        {gr_ring(3, 6), "sym(2,dual(S))"},
        {gr_ring(2, 5), "sym(5,dual(S))"},
        {conic_space, "quot(sym(6,dual(S)),tensor(sym(4,dual(S)),o(-1)))"},
        {conic_space, "tensor(Q,o(2))"},
    };
    for (const auto& [space, text] : bundles) {
        const BundleExpr b = parse_bundle(text);
        const auto c = chern_classes(b, space);
        const auto s = segre_classes(b, space, space->dim());
        const auto prod = series_multiply(c, s, space, space->dim());
        bool ok = prod[0] == one(space);
        for (std::size_t i = 1; i < prod.size(); ++i) ok = ok && prod[i].is_zero();
        out.push_back(make_check("c*s=1 " + text + " on " + space->to_string(), "true", ok ? "true" : "false"));
    }

    // reduce is idempotent and agrees with ring multiplication for
    // polynomials in zeta of degree beyond the fiber rank
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    const std::vector<SpacePtr> bundles_spaces{projectivize(gr_ring(2, 4), BundleExpr::taut_sub()), conic_space,
                                               projectivize(conic_space, BundleExpr::taut_sub())};
    for (const auto& space : bundles_spaces) {
        const auto basis = monomial_basis(space->base());
        bool ok = true;
        for (int trial = 0; trial < 4; ++trial) {
            ZetaPolynomial poly(space);
            ChowElement direct = zero(space);
            const int terms = space->fiber_rank() + 3;
            for (int i = 0; i < terms; ++i) {
                ChowElement alpha = zero(space->base());
                for (const auto& [b, deg] : basis)
                    if (rng() % 4 == 0) alpha += Rational(coeff(rng)) * b;
                poly.at(static_cast<std::size_t>(i)) = alpha;
                direct += pullback(space, alpha) * power(relative_hyperplane(space), i);
            }
            const ChowElement once = reduce(space, poly);
            ok = ok && once == direct && reduce(space, ZetaPolynomial::from(once)) == once;
        }
        out.push_back(make_check("reduce idempotent on " + space->to_string(), "true", ok ? "true" : "false"));
    }

    // gw/dt round trip on random tables
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000);
    long failures = 0;
    for (int trial = 0; trial < 20; ++trial) {
        InvariantTable dt;
        dt.label = InvariantTable::Label::DT;
        for (int d = 1; d <= 12; ++d) dt.values[d] = make_rational(num(rng), den(rng));
        InvariantTable gw = gw_from_dt(dt);
        if (dt_from_gw(gw).values != dt.values) ++failures;
        gw.label = InvariantTable::Label::GW;
        if (gw_from_dt(dt_from_gw(gw)).values != gw.values) ++failures;
    }
    out.push_back(make_check("gw/dt round trip, degrees 1..12", Rational(0), Rational(failures)));
    return out;
}

inline CriterionResult criterion_lines() {
    return detail::timed(1, "lines on the sextic fourfold meeting a P^3", 1.0, [](std::vector<Check>& checks) {
        const HypersurfaceProblem p{5, 6, 1, 2};
        checks.push_back(make_check("count lines, symbolic", Rational(60480), count_lines(p, Backend::Symbolic)));
        checks.push_back(make_check("count lines, bott", Rational(60480), count_lines(p, Backend::Bott)));
    });
}

inline CriterionResult criterion_conics() {
    return detail::timed(2, "conics on the sextic fourfold meeting a P^3", 30.0, [](std::vector<Check>& checks) {
        const std::string space = "pbundle(sym(2,dual(S)),gr(3,6))";
        const std::string expr = "e(quot(sym(6,dual(S)),tensor(sym(4,dual(S)),o(-1)))) * (zeta + 2*s[1])";
        checks.push_back(make_check("conic integral, symbolic", Rational(440884080), detail::integrate_text(space, expr, Backend::Symbolic)));
        checks.push_back(make_check("conic integral, bott", Rational(440884080), detail::integrate_text(space, expr, Backend::Bott)));
        const HypersurfaceProblem p{5, 6, 2, 2};
        checks.push_back(make_check("count conics", Rational(440884080), count_conics(p)));
    });
}

inline CriterionResult criterion_gwdt() {
    return detail::timed(3, "GW/DT identity in degree 2", 0, [](std::vector<Check>& checks) {
        InvariantTable dt;
        dt.values = {{1, Rational(60480)}, {2, Rational(440884080)}};
        const InvariantTable gw = gw_from_dt(dt);
        checks.push_back(make_check("GW(1)", Rational(60480), gw.at(1)));
        checks.push_back(make_check("GW(2)", Rational(440899200), gw.at(2)));
        checks.push_back(make_check("DT(2) + DT(1)/4", Rational(440899200), dt.at(2) + cover_component_contribution(dt.at(1))));
        const InvariantTable back = dt_from_gw(gw);
        checks.push_back(make_check("dt_from_gw DT(1)", Rational(60480), back.at(1)));
        checks.push_back(make_check("dt_from_gw DT(2)", Rational(440884080), back.at(2)));
    });
}

inline CriterionResult criterion_classical() {
    return detail::timed(4, "classical counts on two backends", 0, [](std::vector<Check>& checks) {
        struct Case {
            const char* name;
            HypersurfaceProblem problem;
            long expected;
        };
        const Case cases[] = {
            {"lines on the cubic surface", {3, 3, 1, 0}, 27},
            {"lines on the quintic threefold", {4, 5, 1, 0}, 2875},
            {"conics on the quintic threefold", {4, 5, 2, 0}, 609250},
        };
        for (const auto& c : cases) {
            const Rational sym = detail::count_curves(c.problem, Backend::Symbolic);
            const Rational bott = detail::count_curves(c.problem, Backend::Bott);
            checks.push_back(make_check(std::string(c.name) + ", symbolic", Rational(c.expected), sym));
            checks.push_back(make_check(std::string(c.name) + ", bott", Rational(c.expected), bott));
            checks.push_back(make_check(std::string(c.name) + ", backends agree", sym, bott));
        }
    });
}

inline CriterionResult criterion_aspinwall_morrison() {
    return detail::timed(5, "multiple covers by localization", 0, [](std::vector<Check>& checks) {
        for (int d = 1; d <= 3; ++d) {
            for (int seed = 0; seed < 3; ++seed) {
                checks.push_back(make_check("d=" + std::to_string(d) + " seed " + std::to_string(seed), make_rational(1, d * d * d),
                                            am_localization_verify(d, seed)));
            }
            checks.push_back(make_check("1/d^3 d=" + std::to_string(d), make_rational(1, d * d * d), aspinwall_morrison_factor(d)));
        }
    });
}

inline CriterionResult criterion_ledger() {
    return detail::timed(6, "dimension ledger", 0, [](std::vector<Check>& checks) {
        for (const auto& e : dimension_ledger()) checks.push_back(make_check(e.name, Rational(e.expected), Rational(e.computed)));
    });
}

inline CriterionResult criterion_properties() {
    return detail::timed(7, "property suites", 0, [](std::vector<Check>& checks) { checks = property_checks(); });
}

inline std::vector<CriterionResult> run_acceptance() {
    return {criterion_lines(),   criterion_conics(), criterion_gwdt(),       criterion_classical(),
            criterion_aspinwall_morrison(), criterion_ledger(), criterion_properties()};
}

}  // namespace intersect
