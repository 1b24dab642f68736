#pragma once

// Integrand expressions: sums and products of Schubert classes, the relative
// hyperplane class, rational constants, Chern and Euler classes of bundles.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bundle.hpp"
#include "chern.hpp"
#include "chowring.hpp"
#include "rational.hpp"

namespace intersect {

class ExprAst {
public:
    enum class Kind { Sum, Product, Power, Schubert, Zeta, Number, Chern, Euler };

    static ExprAst sum(std::vector<ExprAst> terms) { return ExprAst(Kind::Sum, std::move(terms)); }
    static ExprAst product(std::vector<ExprAst> factors) { return ExprAst(Kind::Product, std::move(factors)); }
    static ExprAst power(ExprAst base, int exponent) {
        ExprAst e(Kind::Power, {std::move(base)});
        e.node_->integer = exponent;
        return e;
    }
    /// Raw parts as written; validated as a partition on evaluation.
    static ExprAst schubert(std::vector<int> parts) {
        ExprAst e(Kind::Schubert, {});
        e.node_->parts = std::move(parts);
        return e;
    }
    static ExprAst zeta() { return ExprAst(Kind::Zeta, {}); }
    static ExprAst number(Rational value) {
        ExprAst e(Kind::Number, {});
        e.node_->value = std::move(value);
        return e;
    }
    static ExprAst chern(int index, BundleExpr bundle) {
        ExprAst e(Kind::Chern, {});
        e.node_->integer = index;
        e.node_->bundle = std::make_shared<const BundleExpr>(std::move(bundle));
        return e;
    }
    static ExprAst euler(BundleExpr bundle) {
        ExprAst e(Kind::Euler, {});
        e.node_->bundle = std::make_shared<const BundleExpr>(std::move(bundle));
        return e;
    }

    Kind kind() const { return node_->kind; }
    const std::vector<ExprAst>& children() const { return node_->children; }
    int exponent() const { return node_->integer; }
    int chern_index() const { return node_->integer; }
    const std::vector<int>& parts() const { return node_->parts; }
    const Rational& value() const { return node_->value; }
    const BundleExpr& bundle() const { return *node_->bundle; }

    /// Canonical DSL text; parse_expression(x.to_string()) == x.
    std::string to_string() const {
        switch (kind()) {
            case Kind::Sum: {
                std::string s;
                for (std::size_t i = 0; i < children().size(); ++i) {
                    const auto& c = children()[i];
                    if (i) s += "+";
                    s += c.kind() == Kind::Sum ? "(" + c.to_string() + ")" : c.to_string();
                }
                return s;
            }
            case Kind::Product: {
                std::string s;
                for (std::size_t i = 0; i < children().size(); ++i) {
                    const auto& c = children()[i];
                    if (i) s += "*";
                    const bool wrap = c.kind() == Kind::Sum || c.kind() == Kind::Product;
                    s += wrap ? "(" + c.to_string() + ")" : c.to_string();
                }
                return s;
            }
            case Kind::Power: {
                const auto& b = children()[0];
                const bool wrap = b.kind() == Kind::Sum || b.kind() == Kind::Product || b.kind() == Kind::Power;
                return (wrap ? "(" + b.to_string() + ")" : b.to_string()) + "^" + std::to_string(exponent());
            }
            case Kind::Schubert: {
                std::string s = "s[";
                for (std::size_t i = 0; i < parts().size(); ++i) s += (i ? "," : "") + std::to_string(parts()[i]);
                return s + "]";
            }
            case Kind::Zeta: return "zeta";
            case Kind::Number: return value().get_str();
            case Kind::Chern: return "c(" + std::to_string(chern_index()) + "," + bundle().to_string() + ")";
            case Kind::Euler: return "e(" + bundle().to_string() + ")";
        }
        return {};
    }

    friend bool operator==(const ExprAst& a, const ExprAst& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind()) return false;
        switch (a.kind()) {
            case Kind::Sum:
            case Kind::Product: return a.children() == b.children();
            case Kind::Power: return a.exponent() == b.exponent() && a.children() == b.children();
            case Kind::Schubert: return a.parts() == b.parts();
            case Kind::Zeta: return true;
            case Kind::Number: return a.value() == b.value();
            case Kind::Chern: return a.chern_index() == b.chern_index() && a.bundle() == b.bundle();
            case Kind::Euler: return a.bundle() == b.bundle();
        }
        return false;
    }

private:
    struct Node {
        Kind kind;
        std::vector<ExprAst> children;
        int integer = 0;
        std::vector<int> parts;
        Rational value;
        std::shared_ptr<const BundleExpr> bundle;
    };

    ExprAst(Kind kind, std::vector<ExprAst> children) : node_(std::make_shared<Node>()) {
        node_->kind = kind;
        node_->children = std::move(children);
    }

    std::shared_ptr<Node> node_;
};

/// Symbolic evaluation into the Chow ring of space.
inline ChowElement evaluate(const ExprAst& expr, const SpacePtr& space) {
    using Kind = ExprAst::Kind;
    switch (expr.kind()) {
        case Kind::Sum: {
            ChowElement out = zero(space);
            for (const auto& c : expr.children()) out += evaluate(c, space);
            return out;
        }
        case Kind::Product: {
            ChowElement out = one(space);
            for (const auto& c : expr.children()) out = out * evaluate(c, space);
            return out;
        }
        case Kind::Power:
            if (expr.exponent() < 0) throw MathError("negative exponent " + std::to_string(expr.exponent()));
            return power(evaluate(expr.children()[0], space), expr.exponent());
        case Kind::Schubert: return schubert(space, Partition(expr.parts()));
        case Kind::Zeta: return relative_hyperplane(space);
        case Kind::Number: return constant(space, expr.value());
        case Kind::Chern: {
            if (expr.chern_index() < 0) throw MathError("negative Chern class index");
            const ChernSeries c = chern_classes(expr.bundle(), space);
            const auto i = static_cast<std::size_t>(expr.chern_index());
            return i < c.size() ? c[i] : zero(space);
        }
        case Kind::Euler: return euler_class(expr.bundle(), space);
    }
    return zero(space);
}

/// Cohomological degree of a homogeneous expression on space, or -1 when the
/// expression mixes degrees. Zero constants count as homogeneous of any degree
/// and report 0.
inline int expression_degree(const ExprAst& expr, const Space& space) {
    using Kind = ExprAst::Kind;
    switch (expr.kind()) {
        case Kind::Sum: {
            int d = -2;
            for (const auto& c : expr.children()) {
                const int cd = expression_degree(c, space);
                if (cd < 0 || (d != -2 && cd != d)) return -1;
                d = cd;
            }
            return d < 0 ? 0 : d;
        }
        case Kind::Product: {
            int d = 0;
            for (const auto& c : expr.children()) {
                const int cd = expression_degree(c, space);
                if (cd < 0) return -1;
                d += cd;
            }
            return d;
        }
        case Kind::Power: {
            const int b = expression_degree(expr.children()[0], space);
            return b < 0 ? -1 : b * expr.exponent();
        }
        case Kind::Schubert: return Partition(expr.parts()).weight();
        case Kind::Zeta: return 1;
        case Kind::Number: return 0;
        case Kind::Chern: return expr.chern_index();
        case Kind::Euler: return rank(expr.bundle(), space);
    }
    return -1;
}

}  // namespace intersect
