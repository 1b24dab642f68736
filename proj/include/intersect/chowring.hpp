#pragma once

// Graded Chow rings of Grassmannians and of (iterated) projective bundles over
// them, with exact multiplication, Grothendieck reduction, pushforward and
// integration.
//
// Conventions: P(E) parametrizes lines in E, O(-1) is the tautological
// sub-line and zeta = c_1(O(1)). The ring of P(E) over B is
// A(B)[zeta] / (sum_i c_i(E) zeta^{r-i}), elements are stored as towers
// alpha_0 + alpha_1 zeta + ... + alpha_{r-1} zeta^{r-1} with alpha_i in A(B).
// On Gr(k, n): c_i(S) = (-1)^i sigma_{1^i}, c_i(Q) = sigma_i.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "bundle.hpp"
#include "rational.hpp"
#include "symcore.hpp"

namespace intersect {

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// A class in the Chow ring of a Space, always in normal form.
class ChowElement {
public:
    ChowElement() = default;
    explicit ChowElement(SpacePtr space);

    const SpacePtr& space() const { return space_; }
    bool is_zero() const;

    /// Grassmannian level: coefficient per basis partition (Space::basis order).
    const std::vector<Rational>& schubert_coefficients() const { return coeffs_; }
    /// Projective-bundle level: alpha_0..alpha_{r-1} on the base.
    const std::vector<ChowElement>& tower() const { return tower_; }

    Rational coefficient(const Partition& lambda) const;

    ChowElement& operator+=(const ChowElement& other);
    ChowElement& operator-=(const ChowElement& other);
    ChowElement& operator*=(const Rational& scalar);

    friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
    friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
    friend ChowElement operator*(ChowElement a, const Rational& s) { return a *= s; }
    friend ChowElement operator*(const Rational& s, ChowElement a) { return a *= s; }
    friend ChowElement operator-(ChowElement a) { return a *= Rational(-1); }
    friend ChowElement operator*(const ChowElement& a, const ChowElement& b);
    friend bool operator==(const ChowElement& a, const ChowElement& b);

private:
    friend class Space;
    friend ChowElement pullback(const SpacePtr&, const ChowElement&);
    friend ChowElement multiply(const SpacePtr&, const ChowElement&, const ChowElement&);
    friend struct ZetaPolynomial;
    friend ChowElement reduce(const SpacePtr&, const struct ZetaPolynomial&);
    friend ChowElement homogeneous_part(const ChowElement&, int);
    friend ChowElement constant(const SpacePtr&, const Rational&);
    friend ChowElement schubert(const SpacePtr&, const Partition&);

    SpacePtr space_;
    std::vector<Rational> coeffs_;
    std::vector<ChowElement> tower_;
};

/// Either Gr(k, n) or P(E) over another Space. Immutable; shared.
class Space : public std::enable_shared_from_this<Space> {
public:
    enum class Kind { Grassmannian, ProjBundle };
    // (product index, coefficient) lists for every ordered pair of basis indices
    using MultTable = std::vector<std::vector<std::vector<std::pair<int, long>>>>;

    /// Gr(k, n) with 0 < k < n. Instances are shared per (k, n).
    static SpacePtr grassmannian(int k, int n);

    /// P(bundle) over base from precomputed base Chern classes c_0..c_r. Most
    /// callers want projectivize() from chern.hpp, which computes them.
    static SpacePtr projective_bundle(SpacePtr base, BundleExpr bundle, int rank, std::vector<ChowElement> chern_classes);

    Kind kind() const { return kind_; }
    bool is_grassmannian() const { return kind_ == Kind::Grassmannian; }
    int dim() const { return dim_; }
    int level() const { return base_ ? base_->level() + 1 : 0; }

    /// The Grassmannian at the bottom of the tower.
    const Space& root() const { return base_ ? base_->root() : *this; }
    int sub_rank() const { return root().k_; }
    int ambient() const { return root().n_; }

    const SpacePtr& base() const { return base_; }
    const BundleExpr& bundle() const { return bundle_; }
    int fiber_rank() const { return rank_; }
    /// c_0..c_r of the projectivized bundle, on the base.
    const std::vector<ChowElement>& bundle_chern() const { return bundle_chern_; }

    const std::vector<Partition>& basis() const { return basis_; }
    int index_of(const Partition& lambda) const {
        auto it = index_.find(lambda);
        return it == index_.end() ? -1 : it->second;
    }
    const MultTable& table() const { return table_; }

    /// DSL spelling: gr(k,n) or pbundle(B,base).
    const std::string& to_string() const { return name_; }

    bool same_as(const Space& other) const { return this == &other || name_ == other.name_; }

private:
    Space() = default;

    Kind kind_ = Kind::Grassmannian;
    int k_ = 0;
    int n_ = 0;
    int dim_ = 0;
    std::string name_;
    std::vector<Partition> basis_;
    std::map<Partition, int> index_;
    MultTable table_;

    SpacePtr base_;
    BundleExpr bundle_ = BundleExpr::taut_sub();
    int rank_ = 0;
    std::vector<ChowElement> bundle_chern_;
};

/// Alias matching the DSL's gr(k, n).
inline SpacePtr gr_ring(int k, int n) { return Space::grassmannian(k, n); }

inline ChowElement::ChowElement(SpacePtr space) : space_(std::move(space)) {
    if (!space_) return;
    if (space_->is_grassmannian()) {
        coeffs_.assign(space_->basis().size(), Rational(0));
    } else {
        tower_.assign(static_cast<std::size_t>(space_->fiber_rank()), ChowElement(space_->base()));
    }
}

inline bool ChowElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    for (const auto& t : tower_)
        if (!t.is_zero()) return false;
    return true;
}

inline Rational ChowElement::coefficient(const Partition& lambda) const {
    if (!space_ || !space_->is_grassmannian()) throw MathError("coefficient(): not a Grassmannian element");
    const int i = space_->index_of(lambda);
    return i < 0 ? Rational(0) : coeffs_[static_cast<std::size_t>(i)];
}

namespace detail {

inline void require_same_space(const SpacePtr& a, const SpacePtr& b) {
    if (!a || !b) throw MathError("element is not attached to a space");
    if (a != b && !a->same_as(*b)) throw MathError("space mismatch: " + a->to_string() + " vs " + b->to_string());
}

}  // namespace detail

inline ChowElement& ChowElement::operator+=(const ChowElement& other) {
    detail::require_same_space(space_, other.space_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    for (std::size_t i = 0; i < tower_.size(); ++i) tower_[i] += other.tower_[i];
    return *this;
}

inline ChowElement& ChowElement::operator-=(const ChowElement& other) {
    detail::require_same_space(space_, other.space_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    for (std::size_t i = 0; i < tower_.size(); ++i) tower_[i] -= other.tower_[i];
    return *this;
}

inline ChowElement& ChowElement::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    for (auto& t : tower_) t *= scalar;
    return *this;
}

inline bool operator==(const ChowElement& a, const ChowElement& b) {
    if (a.space_ != b.space_ && !(a.space_ && b.space_ && a.space_->same_as(*b.space_))) return false;
    return a.coeffs_ == b.coeffs_ && a.tower_ == b.tower_;
}

inline SpacePtr Space::grassmannian(int k, int n) {
    if (k <= 0 || k >= n) throw MathError("gr(k,n) needs 0 < k < n, got gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, SpacePtr> instances;
    std::lock_guard lock(mutex);
    if (auto it = instances.find({k, n}); it != instances.end()) return it->second;

    auto space = std::shared_ptr<Space>(new Space());
    space->kind_ = Kind::Grassmannian;
    space->k_ = k;
    space->n_ = n;
    space->dim_ = k * (n - k);
    space->name_ = "gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
    space->basis_ = enumerate_partitions(k, n - k);
    for (std::size_t i = 0; i < space->basis_.size(); ++i) space->index_.emplace(space->basis_[i], static_cast<int>(i));

    const auto size = space->basis_.size();
    space->table_.assign(size, std::vector<std::vector<std::pair<int, long>>>(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i; j < size; ++j) {
            const int w = space->basis_[i].weight() + space->basis_[j].weight();
            auto& entry = space->table_[i][j];
            for (std::size_t m = 0; m < size; ++m) {
                if (space->basis_[m].weight() != w) continue;
                const long c = lr_coefficient(space->basis_[i], space->basis_[j], space->basis_[m]);
                if (c != 0) entry.emplace_back(static_cast<int>(m), c);
            }
            space->table_[j][i] = entry;
        }
    }
    instances.emplace(std::make_pair(k, n), space);
    return space;
}

inline SpacePtr Space::projective_bundle(SpacePtr base, BundleExpr bundle, int rank, std::vector<ChowElement> chern_classes) {
    if (!base) throw MathError("projective bundle needs a base space");
    if (rank < 1) throw MathError("projective bundle needs a bundle of rank >= 1");
    chern_classes.resize(static_cast<std::size_t>(rank) + 1, ChowElement(base));
    for (const auto& c : chern_classes) detail::require_same_space(c.space(), base);
    auto space = std::shared_ptr<Space>(new Space());
    space->kind_ = Kind::ProjBundle;
    space->dim_ = base->dim() + rank - 1;
    space->name_ = "pbundle(" + bundle.to_string() + "," + base->to_string() + ")";
    space->base_ = std::move(base);
    space->bundle_ = std::move(bundle);
    space->rank_ = rank;
    space->bundle_chern_ = std::move(chern_classes);
    return space;
}

/// A polynomial in zeta of any degree with base coefficients, prior to
/// reduction by the Grothendieck relation.
struct ZetaPolynomial {
    SpacePtr space;                     // the projective bundle
    std::vector<ChowElement> coeffs;    // coeffs[i] multiplies zeta^i, on the base

    explicit ZetaPolynomial(SpacePtr s) : space(std::move(s)) {}

    /// The tower of a normal-form element, as a polynomial.
    static ZetaPolynomial from(const ChowElement& x) {
        ZetaPolynomial p(x.space());
        p.coeffs = x.tower();
        return p;
    }

    ChowElement& at(std::size_t i) {
        if (coeffs.size() <= i) coeffs.resize(i + 1, ChowElement(space->base()));
        return coeffs[i];
    }
};

inline ChowElement zero(const SpacePtr& space) { return ChowElement(space); }

inline ChowElement constant(const SpacePtr& space, const Rational& value) {
    ChowElement x(space);
    if (space->is_grassmannian()) {
        x.coeffs_[0] = value;
    } else {
        x.tower_[0] = constant(space->base(), value);
    }
    return x;
}

inline ChowElement one(const SpacePtr& space) { return constant(space, Rational(1)); }

/// pi^* from the base of a projective bundle.
inline ChowElement pullback(const SpacePtr& space, const ChowElement& base_element) {
    if (space->is_grassmannian()) throw MathError("pullback(): space is not a projective bundle");
    detail::require_same_space(base_element.space(), space->base());
    ChowElement x(space);
    x.tower_[0] = base_element;
    return x;
}

/// sigma_lambda pulled back to any level; zero if lambda leaves the box.
inline ChowElement schubert(const SpacePtr& space, const Partition& lambda) {
    if (!space->is_grassmannian()) return pullback(space, schubert(space->base(), lambda));
    ChowElement x(space);
    const int i = space->index_of(lambda);
    if (i >= 0) x.coeffs_[static_cast<std::size_t>(i)] = 1;
    return x;
}

/// Brings a zeta-polynomial to normal form using
/// zeta^m = -sum_{i=1}^{r} c_i(E) zeta^{m-i}, from the top down.
inline ChowElement reduce(const SpacePtr& space, const ZetaPolynomial& poly) {
    if (space->is_grassmannian()) throw MathError("reduce(): space is not a projective bundle");
    detail::require_same_space(poly.space, space);
    const auto r = static_cast<std::size_t>(space->fiber_rank());
    const auto& chern = space->bundle_chern();
    std::vector<ChowElement> work = poly.coeffs;
    for (std::size_t m = work.size(); m-- > r;) {
        if (work[m].is_zero()) continue;
        for (std::size_t i = 1; i <= r; ++i) {
            if (chern[i].is_zero()) continue;
            work[m - i] -= chern[i] * work[m];
        }
    }
    ChowElement x(space);
    for (std::size_t i = 0; i < r && i < work.size(); ++i) x.tower_[i] = work[i];
    return x;
}

/// Cup product in normal form.
inline ChowElement multiply(const SpacePtr& space, const ChowElement& a, const ChowElement& b) {
    detail::require_same_space(a.space(), space);
    detail::require_same_space(b.space(), space);
    ChowElement out(space);
    if (space->is_grassmannian()) {
        const auto& table = space->table();
        const auto size = a.coeffs_.size();
        for (std::size_t i = 0; i < size; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < size; ++j) {
                if (b.coeffs_[j] == 0) continue;
                const Rational ab = a.coeffs_[i] * b.coeffs_[j];
                for (const auto& [m, c] : table[i][j]) out.coeffs_[static_cast<std::size_t>(m)] += ab * c;
            }
        }
        return out;
    }
    ZetaPolynomial poly(space);
    const auto& ta = a.tower_;
    const auto& tb = b.tower_;
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (ta[i].is_zero()) continue;
        for (std::size_t j = 0; j < tb.size(); ++j) {
            if (tb[j].is_zero()) continue;
            poly.at(i + j) += multiply(space->base(), ta[i], tb[j]);
        }
    }
    return reduce(space, poly);
}

inline ChowElement operator*(const ChowElement& a, const ChowElement& b) { return multiply(a.space(), a, b); }

inline ChowElement power(const ChowElement& x, int exponent) {
    if (exponent < 0) throw MathError("negative power of a Chow class");
    ChowElement result = one(x.space());
    ChowElement base = x;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

/// zeta = c_1(O(1)) of the outermost projective bundle.
inline ChowElement relative_hyperplane(const SpacePtr& space) {
    if (space->is_grassmannian()) throw MathError("zeta is only defined on a projective bundle, not on " + space->to_string());
    ZetaPolynomial poly(space);
    poly.at(1) = one(space->base());
    return reduce(space, poly);
}

/// pi_* to the base: only the zeta^{r-1} slot of the normal form survives.
inline ChowElement pushforward(const SpacePtr& space, const ChowElement& x) {
    if (space->is_grassmannian()) throw MathError("pushforward(): space is not a projective bundle");
    detail::require_same_space(x.space(), space);
    return x.tower().back();
}

/// Degree of the fundamental class pairing; non-top components integrate to zero.
inline Rational integrate(const SpacePtr& space, const ChowElement& x) {
    detail::require_same_space(x.space(), space);
    if (space->is_grassmannian()) return x.schubert_coefficients().back();
    return integrate(space->base(), pushforward(space, x));
}

/// Component of cohomological degree d.
inline ChowElement homogeneous_part(const ChowElement& x, int degree) {
    const auto& space = x.space();
    ChowElement out(space);
    if (space->is_grassmannian()) {
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
            if (space->basis()[i].weight() == degree) out.coeffs_[i] = x.coeffs_[i];
        return out;
    }
    for (std::size_t i = 0; i < x.tower_.size(); ++i) out.tower_[i] = homogeneous_part(x.tower_[i], degree - static_cast<int>(i));
    return out;
}

/// Additive basis sigma_lambda * zeta_1^{i_1} * ... of the space, with degrees.
inline std::vector<std::pair<ChowElement, int>> monomial_basis(const SpacePtr& space) {
    std::vector<std::pair<ChowElement, int>> out;
    if (space->is_grassmannian()) {
        for (const auto& lambda : space->basis()) out.emplace_back(schubert(space, lambda), lambda.weight());
        return out;
    }
    const ChowElement z = relative_hyperplane(space);
    for (const auto& [b, d] : monomial_basis(space->base())) {
        ChowElement term = pullback(space, b);
        for (int i = 0; i < space->fiber_rank(); ++i) {
            out.emplace_back(term, d + i);
            term = term * z;
        }
    }
    return out;
}

namespace detail {

inline void append_terms(const ChowElement& x, const std::string& suffix, int level, std::vector<std::string>& terms) {
    const auto& space = x.space();
    if (space->is_grassmannian()) {
        for (std::size_t i = 0; i < x.schubert_coefficients().size(); ++i) {
            const Rational& c = x.schubert_coefficients()[i];
            if (c == 0) continue;
            const auto& parts = space->basis()[i].parts();
            std::string mono;
            if (!parts.empty()) {
                mono = "s[";
                for (std::size_t j = 0; j < parts.size(); ++j) mono += (j ? "," : "") + std::to_string(parts[j]);
                mono += "]";
            }
            std::string body = mono;
            if (!suffix.empty()) body += (body.empty() ? "" : "*") + suffix;
            std::string coeff = c.get_str();
            if (body.empty()) terms.push_back(coeff);
            else if (c == 1) terms.push_back(body);
            else terms.push_back(coeff + "*" + body);
        }
        return;
    }
    const std::string name = level == 0 ? "zeta" : "zeta" + std::to_string(level);
    for (std::size_t i = 0; i < x.tower().size(); ++i) {
        std::string s = suffix;
        if (i > 0) {
            std::string z = i == 1 ? name : name + "^" + std::to_string(i);
            s = s.empty() ? z : z + "*" + s;
        }
        append_terms(x.tower()[i], s, level + 1, terms);
    }
}

}  // namespace detail

/// Human-readable normal form, e.g. "s[2]*zeta+-1*s[2,1]". The outermost
/// relative class prints as zeta, deeper ones as zeta1, zeta2, ...
inline std::string to_string(const ChowElement& x) {
    std::vector<std::string> terms;
    detail::append_terms(x, "", 0, terms);
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? "+" : "") + terms[i];
    return out;
}

}  // namespace intersect
