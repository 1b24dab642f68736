#pragma once

// Command-line front end. run_cli() is what the `intersect` binary calls;
// it is kept in the library so tests can drive it in-process.
//
// Exit codes: 0 success, 1 a check failed, 2 parse error, 3 math error.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "bott.hpp"
#include "counts.hpp"
#include "gwdt.hpp"
#include "parse.hpp"
#include "report.hpp"

namespace intersect {

enum ExitCode { kExitOk = 0, kExitMismatch = 1, kExitParse = 2, kExitMath = 3 };

namespace detail {

/// "1=60480,2=440884080" -> {1: 60480, 2: 440884080}
inline std::map<int, Rational> parse_degree_table(const std::string& text) {
    std::map<int, Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected degree=value, got '" + item + "'", pos);
        const std::string deg_text = item.substr(0, eq);
        if (deg_text.empty() || deg_text.size() > 6 || deg_text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("invalid degree '" + deg_text + "'", pos);
        const int deg = std::stoi(deg_text);
        Rational value;
        if (!parse_rational(item.substr(eq + 1), value)) throw ParseError("invalid value '" + item.substr(eq + 1) + "'", pos + eq + 1);
        if (!out.emplace(deg, value).second) throw ParseError("degree " + deg_text + " given twice", pos);
        pos = comma + 1;
    }
    return out;
}

inline Rational integrate_with(const SpacePtr& space, const ExprAst& expr, Backend backend) {
    if (backend == Backend::Bott) return bott_integrate_search(space, expr).value;
    return integrate(space, evaluate(expr, space));
}

/// Known values for the classical and headline problems.
inline const Rational* known_count(const HypersurfaceProblem& p) {
    struct Entry {
        int n, d, curve, codim;
        Rational value;
    };
    static const std::vector<Entry> table{
        {3, 3, 1, 0, Rational(27)},    {4, 5, 1, 0, Rational(2875)},      {4, 5, 2, 0, Rational(609250)},
        {5, 6, 1, 2, Rational(60480)}, {5, 6, 2, 2, Rational(440884080)},
    };
    for (const auto& e : table)
        if (e.n == p.ambient && e.d == p.degree && e.curve == p.curve_degree && e.codim == p.insertion_codim) return &e.value;
    return nullptr;
}

inline Report integrate_command(const std::string& space_text, const std::string& expr_text, const std::string& backend) {
    const SpacePtr space = parse_space(space_text);
    const ExprAst expr = parse_expression(expr_text);
    Report r;
    r.space = space->to_string();
    r.expr = expr.to_string();
    r.backend = backend;
    if (expression_degree(expr, *space) >= 0 && expression_degree(expr, *space) != space->dim())
        r.notes.push_back("integrand degree " + std::to_string(expression_degree(expr, *space)) + " differs from dim " +
                          std::to_string(space->dim()) + "; the integral is 0");
    if (backend == "symbolic") {
        r.value = integrate_with(space, expr, Backend::Symbolic);
    } else if (backend == "bott") {
        const BottResult b = bott_integrate_search(space, expr);
        r.value = b.value;
        r.notes.push_back("weight seed " + std::to_string(b.seed));
    } else {
        const Rational sym = integrate_with(space, expr, Backend::Symbolic);
        const Rational bott = integrate_with(space, expr, Backend::Bott);
        r.value = sym;
        r.checks.push_back(make_check("symbolic = bott", sym, bott));
    }
    return r;
}

inline Report count_command(const std::string& kind, int ambient, int degree, int incidence) {
    HypersurfaceProblem p{ambient, degree, kind == "lines" ? 1 : 2, incidence};
    validate(p);
    Report r;
    const SpacePtr space = parameter_space(p);
    r.space = space->to_string();
    r.expr = count_integrand(p).to_string();
    r.backend = "both";
    const Rational sym = detail::count_curves(p, Backend::Symbolic);
    const Rational bott = detail::count_curves(p, Backend::Bott);
    r.value = sym;
    r.checks.push_back(make_check("symbolic = bott", sym, bott));
    r.checks.push_back(make_check("nonnegative integer", "true", is_integer(sym) && sym >= 0 ? "true" : "false"));
    if (const Rational* known = known_count(p)) r.checks.push_back(make_check("known value", *known, sym));
    if (p.curve_degree == 2) r.notes.push_back(ledger_assumptions().front());
    return r;
}

inline Report ledger_command() {
    Report r;
    for (const auto& e : dimension_ledger()) {
        Check c = make_check(e.name, Rational(e.expected), Rational(e.computed));
        r.checks.push_back(c);
        r.notes.push_back(e.name + ": " + e.anchor);
    }
    for (const auto& a : ledger_assumptions()) r.notes.push_back("assumption: " + a);
    return r;
}

inline Report gwdt_command(bool invert, const std::string& dt_text, const std::string& gw_text) {
    Report r;
    InvariantTable in;
    if (invert) {
        if (gw_text.empty()) throw ParseError("--invert needs --gw", 0);
        in.label = InvariantTable::Label::GW;
        in.values = parse_degree_table(gw_text);
        const InvariantTable dt = dt_from_gw(in);
        r.table = dt.values;
        r.expr = "dt_from_gw";
        r.checks.push_back(make_check("gw_from_dt(dt_from_gw(gw)) = gw", "true", gw_from_dt(dt).values == in.values ? "true" : "false"));
    } else {
        if (dt_text.empty()) throw ParseError("gwdt needs --dt (or --invert --gw)", 0);
        in.label = InvariantTable::Label::DT;
        in.values = parse_degree_table(dt_text);
        const InvariantTable gw = gw_from_dt(in);
        r.table = gw.values;
        r.expr = "gw_from_dt";
        r.checks.push_back(make_check("dt_from_gw(gw_from_dt(dt)) = dt", "true", dt_from_gw(gw).values == in.values ? "true" : "false"));
    }
    for (const auto& n : ledger_assumptions())
        if (n.find("orientation") != std::string::npos) r.notes.push_back(n);
    return r;
}

inline Report am_verify_command(int degree) {
    Report r;
    r.space = "M_0,0(P^1," + std::to_string(degree) + ")";
    r.expr = "e(Ob)";
    r.backend = "bott";
    const Rational expected = aspinwall_morrison_factor(degree);
    r.value = am_localization_verify(degree, 0);
    r.checks.push_back(make_check("graph sum = 1/d^3", expected, *r.value));
    for (int seed = 1; seed < 3; ++seed)
        r.checks.push_back(make_check("weight seed " + std::to_string(seed), expected, am_localization_verify(degree, seed)));
    r.notes.push_back(std::to_string(enumerate_cover_graphs(degree).size()) + " fixed-point graphs");
    return r;
}

inline Report selftest_command() {
    Report r;
    for (const auto& c : run_acceptance()) {
        const std::string prefix = "criterion " + std::to_string(c.id) + ": ";
        for (const auto& check : c.checks) {
            Check named = check;
            named.name = prefix + check.name;
            r.checks.push_back(named);
        }
        if (!c.error.empty()) r.checks.push_back(make_check(prefix + "error", "", c.error));
        if (c.limit_seconds > 0) r.checks.push_back(make_check(prefix + "time limit", "true", c.within_time() ? "true" : "false"));
        r.notes.push_back(prefix + c.title + " (" + c.summary() + ")");
    }
    return r;
}

inline std::string joined(int argc, const char* const* argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
    return s;
}

inline void print_error(std::ostream& out, std::ostream& err, bool json, const std::string& command, const std::string& kind,
                        const std::string& message, int code) {
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["error"] = {{"kind", kind}, {"message", message}};
        j["exit"] = code;
        out << j.dump(2) << "\n";
    } else {
        err << kind << " error: " << message << "\n";
    }
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Exact intersection theory on Grassmannians and projective bundles", "intersect"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "print the report as JSON");

    auto* integrate_cmd = app.add_subcommand("integrate", "integrate an expression over a space");
    std::string space_text, expr_text, backend = "symbolic";
    integrate_cmd->add_option("--space", space_text, "e.g. gr(2,4) or pbundle(sym(2,dual(S)),gr(3,6))")->required();
    integrate_cmd->add_option("--expr", expr_text, "e.g. s[1]^4")->required();
    integrate_cmd->add_option("--backend", backend)->check(CLI::IsMember({"symbolic", "bott", "both"}));
    std::string expect_text;
    integrate_cmd->add_option("--expect", expect_text, "fail with exit code 1 unless the value equals this rational");

    auto* count_cmd = app.add_subcommand("count", "count lines or conics on a hypersurface");
    std::string kind;
    int ambient = 0, degree = 0, incidence = 0;
    count_cmd->add_option("kind", kind, "lines or conics")->required()->check(CLI::IsMember({"lines", "conics"}));
    count_cmd->add_option("--ambient", ambient, "n for X in P^n")->required();
    count_cmd->add_option("--degree", degree, "degree of X")->required();
    count_cmd->add_option("--incidence", incidence, "codimension of the linear space the curves meet (0: none)");
    count_cmd->add_option("--expect", expect_text, "fail with exit code 1 unless the count equals this rational");

    auto* ledger_cmd = app.add_subcommand("ledger", "dimension bookkeeping for conics on the sextic fourfold");

    auto* gwdt_cmd = app.add_subcommand("gwdt", "GW invariants from DT invariants, or back with --invert");
    std::string dt_text, gw_text;
    bool invert = false;
    gwdt_cmd->add_option("--dt", dt_text, "deg=value,...");
    gwdt_cmd->add_option("--gw", gw_text, "deg=value,...");
    gwdt_cmd->add_flag("--invert", invert);

    auto* am_cmd = app.add_subcommand("am-verify", "multiple-cover factor by localization");
    int am_degree = 0;
    am_cmd->add_option("--degree", am_degree)->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    const std::string command = detail::joined(argc, argv);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        detail::print_error(out, err, json, command, "usage", e.what(), kExitParse);
        return kExitParse;
    }

    try {
        Report r;
        if (integrate_cmd->parsed()) r = detail::integrate_command(space_text, expr_text, backend);
        else if (count_cmd->parsed()) r = detail::count_command(kind, ambient, degree, incidence);
        else if (ledger_cmd->parsed()) r = detail::ledger_command();
        else if (gwdt_cmd->parsed()) r = detail::gwdt_command(invert, dt_text, gw_text);
        else if (am_cmd->parsed()) r = detail::am_verify_command(am_degree);
        else if (selftest_cmd->parsed()) r = detail::selftest_command();
        if (!expect_text.empty()) {
            Rational expected;
            if (!parse_rational(expect_text, expected)) throw ParseError("invalid --expect value '" + expect_text + "'", 0);
            r.checks.push_back(make_check("expected value", expected, r.value.value_or(Rational(0))));
        }
        r.command = command;
        out << (json ? r.to_json().dump(2) + "\n" : r.to_table());
        return r.passed() ? kExitOk : kExitMismatch;
    } catch (const ParseError& e) {
        detail::print_error(out, err, json, command, "parse", e.what(), kExitParse);
        return kExitParse;
    } catch (const MathError& e) {
        detail::print_error(out, err, json, command, "math", e.what(), kExitMath);
        return kExitMath;
    } catch (const WeightCollision& e) {
        detail::print_error(out, err, json, command, "math", e.what(), kExitMath);
        return kExitMath;
    }
}

}  // namespace intersect
