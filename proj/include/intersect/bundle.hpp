#pragma once

// Vector bundle expressions over Grassmannians and projective bundles.

#include <memory>
#include <string>
#include <utility>

#include "rational.hpp"

namespace intersect {

class BundleExpr {
public:
    enum class Kind { TautSub, TautQuot, Trivial, Dual, Sym, TensorLine, WhitneyQuotient, RelO };

    static BundleExpr taut_sub() { return BundleExpr(Kind::TautSub); }
    static BundleExpr taut_quot() { return BundleExpr(Kind::TautQuot); }
    static BundleExpr trivial(int rank) {
        if (rank < 0) throw MathError("trivial bundle rank must be nonnegative");
        BundleExpr e(Kind::Trivial);
        e.node_->param = rank;
        return e;
    }
    static BundleExpr dual(BundleExpr inner) { return BundleExpr(Kind::Dual, 0, std::move(inner)); }
    static BundleExpr sym(int d, BundleExpr inner) {
        if (d < 0) throw MathError("symmetric power must be nonnegative");
        return BundleExpr(Kind::Sym, d, std::move(inner));
    }
    static BundleExpr tensor_line(BundleExpr bundle, BundleExpr line) {
        return BundleExpr(Kind::TensorLine, 0, std::move(bundle), std::move(line));
    }
    static BundleExpr whitney_quotient(BundleExpr whole, BundleExpr sub) {
        return BundleExpr(Kind::WhitneyQuotient, 0, std::move(whole), std::move(sub));
    }
    /// O(k) on a projective bundle; O(-1) is the tautological sub-line.
    static BundleExpr rel_o(int k) {
        BundleExpr e(Kind::RelO);
        e.node_->param = k;
        return e;
    }

    Kind kind() const { return node_->kind; }
    int param() const { return node_->param; }
    const BundleExpr& first() const { return *node_->first; }
    const BundleExpr& second() const { return *node_->second; }

    bool uses_relative_class() const {
        switch (kind()) {
            case Kind::RelO: return true;
            case Kind::Dual:
            case Kind::Sym: return first().uses_relative_class();
            case Kind::TensorLine:
            case Kind::WhitneyQuotient: return first().uses_relative_class() || second().uses_relative_class();
            default: return false;
        }
    }

    /// Rank on a Grassmannian Gr(k, n). Throws if a quotient would have
    /// nonpositive rank or a tensor factor is not a line bundle.
    int rank(int k, int n) const {
        switch (kind()) {
            case Kind::TautSub: return k;
            case Kind::TautQuot: return n - k;
            case Kind::Trivial: return param();
            case Kind::Dual: return first().rank(k, n);
            case Kind::Sym: {
                if (param() == 0) return 1;
                const Integer r = binomial(first().rank(k, n) + param() - 1, param());
                return static_cast<int>(r.get_si());
            }
            case Kind::TensorLine: {
                if (second().rank(k, n) != 1) throw MathError("tensor(): second argument must have rank 1");
                return first().rank(k, n);
            }
            case Kind::WhitneyQuotient: {
                const int r = first().rank(k, n) - second().rank(k, n);
                if (r <= 0) throw MathError("quot(): quotient rank must be positive, got " + std::to_string(r));
                return r;
            }
            case Kind::RelO: return 1;
        }
        return 0;
    }

    /// DSL spelling, e.g. quot(sym(6,dual(S)),tensor(sym(4,dual(S)),o(-1))).
    std::string to_string() const {
        switch (kind()) {
            case Kind::TautSub: return "S";
            case Kind::TautQuot: return "Q";
            case Kind::Trivial: return "triv(" + std::to_string(param()) + ")";
            case Kind::Dual: return "dual(" + first().to_string() + ")";
            case Kind::Sym: return "sym(" + std::to_string(param()) + "," + first().to_string() + ")";
            case Kind::TensorLine: return "tensor(" + first().to_string() + "," + second().to_string() + ")";
            case Kind::WhitneyQuotient: return "quot(" + first().to_string() + "," + second().to_string() + ")";
            case Kind::RelO: return "o(" + std::to_string(param()) + ")";
        }
        return {};
    }

    friend bool operator==(const BundleExpr& a, const BundleExpr& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind() || a.param() != b.param()) return false;
        if (static_cast<bool>(a.node_->first) != static_cast<bool>(b.node_->first)) return false;
        if (a.node_->first && !(a.first() == b.first())) return false;
        if (static_cast<bool>(a.node_->second) != static_cast<bool>(b.node_->second)) return false;
        if (a.node_->second && !(a.second() == b.second())) return false;
        return true;
    }

private:
    struct Node {
        Kind kind;
        int param = 0;
        std::shared_ptr<const BundleExpr> first;
        std::shared_ptr<const BundleExpr> second;
    };

    explicit BundleExpr(Kind kind) : node_(std::make_shared<Node>(Node{kind, 0, nullptr, nullptr})) {}
    BundleExpr(Kind kind, int param, BundleExpr a) : node_(std::make_shared<Node>(Node{kind, param, nullptr, nullptr})) {
        node_->first = std::make_shared<const BundleExpr>(std::move(a));
    }
    BundleExpr(Kind kind, int param, BundleExpr a, BundleExpr b) : BundleExpr(kind, param, std::move(a)) {
        node_->second = std::make_shared<const BundleExpr>(std::move(b));
    }

    std::shared_ptr<Node> node_;
};

}  // namespace intersect
