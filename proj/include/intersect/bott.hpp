#pragma once

// Torus fixed-point localization on Gr(k, n) and iterated projective bundles
// over it. This evaluates integrals directly from torus characters and does
// not touch the Chow-ring multiplication; it is the cross-check for it.
//
// Characters: the torus scales coordinate i with weight w_i. At the fixed
// point spanned by the coordinates in I, S has characters {w_i : i in I} and
// Q has {w_j : j not in I}. On P(E) a fixed point picks an eigenline of
// character mu; then O(-1) has character mu and zeta = -mu.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bundle.hpp"
#include "chowring.hpp"
#include "expr.hpp"
#include "rational.hpp"
#include "symcore.hpp"

namespace intersect {

/// Pairwise distinct integer weights, one per ambient coordinate.
struct TorusWeights {
    std::vector<long> values;
};

/// A fixed point: the chosen coordinates plus one eigenline index per
/// projective-bundle level, innermost first.
struct FixedPoint {
    std::vector<int> subset;
    std::vector<int> eigenlines;
};

/// Raised when the chosen weights make a fixed-point denominator vanish or
/// leave a fiber with repeated eigenvalues; retry with the next seed.
class WeightCollision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Seed 0 is the ladder 0, 1, ..., n-1. Other seeds draw distinct integers in
/// [-997, 997] from a 64-bit Mersenne twister (raw output, so the sequence is
/// the same with every standard library).
inline TorusWeights weight_search(int seed, int n) {
    TorusWeights w;
    if (seed == 0) {
        for (int i = 0; i < n; ++i) w.values.push_back(i);
        return w;
    }
    std::mt19937_64 gen(static_cast<std::uint64_t>(seed));
    while (static_cast<int>(w.values.size()) < n) {
        const long v = static_cast<long>(gen() % 1995) - 997;
        if (std::find(w.values.begin(), w.values.end(), v) == w.values.end()) w.values.push_back(v);
    }
    return w;
}

namespace detail {

using Character = Integer;
using Characters = std::vector<Character>;
// Local value of a class at a fixed point, split by cohomological degree and
// truncated at the dimension of the space.
using Graded = std::vector<Rational>;

struct LocalContext {
    const TorusWeights* weights;
    std::vector<int> subset;
    std::vector<int> complement;
    std::vector<Character> eigen;  // eigenline character per level, innermost first
};

inline Characters bundle_characters(const BundleExpr& expr, const LocalContext& ctx, int level) {
    using Kind = BundleExpr::Kind;
    Characters out;
    switch (expr.kind()) {
        case Kind::TautSub:
            for (int i : ctx.subset) out.emplace_back(ctx.weights->values[static_cast<std::size_t>(i)]);
            break;
        case Kind::TautQuot:
            for (int j : ctx.complement) out.emplace_back(ctx.weights->values[static_cast<std::size_t>(j)]);
            break;
        case Kind::Trivial: out.assign(static_cast<std::size_t>(expr.param()), Character(0)); break;
        case Kind::Dual:
            out = bundle_characters(expr.first(), ctx, level);
            for (auto& c : out) c = -c;
            break;
        case Kind::Sym: {
            const Characters inner = bundle_characters(expr.first(), ctx, level);
            if (expr.param() == 0) {
                out.emplace_back(0);
                break;
            }
            if (inner.empty()) break;
            for (const auto& m : sym_power_roots(expr.param(), static_cast<int>(inner.size()))) {
                Character c = 0;
                for (std::size_t j = 0; j < m.size(); ++j) c += m[j] * inner[j];
                out.push_back(c);
            }
            break;
        }
        case Kind::TensorLine: {
            out = bundle_characters(expr.first(), ctx, level);
            const Characters line = bundle_characters(expr.second(), ctx, level);
            if (line.size() != 1) throw MathError("tensor(): second argument must have rank 1");
            for (auto& c : out) c += line[0];
            break;
        }
        case Kind::WhitneyQuotient: {
            out = bundle_characters(expr.first(), ctx, level);
            for (const auto& c : bundle_characters(expr.second(), ctx, level)) {
                auto it = std::find(out.begin(), out.end(), c);
                if (it == out.end())
                    throw MathError("localization unsupported: quot() sub-bundle characters are not a sub-multiset for " + expr.to_string());
                out.erase(it);
            }
            break;
        }
        case Kind::RelO:
            if (level == 0) throw MathError("o(k) needs a projective bundle");
            out.push_back(-expr.param() * ctx.eigen[static_cast<std::size_t>(level - 1)]);
            break;
    }
    return out;
}

inline Graded graded_multiply(const Graded& a, const Graded& b, int top) {
    Graded out(static_cast<std::size_t>(top) + 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(top); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline Graded graded_scalar(const Rational& value, int degree, int top) {
    Graded out(static_cast<std::size_t>(top) + 1, Rational(0));
    if (degree <= top) out[static_cast<std::size_t>(degree)] = value;
    return out;
}

// e_i of a list of characters
inline Rational elementary_symmetric(const Characters& chars, int i) {
    if (i < 0 || i > static_cast<int>(chars.size())) return 0;
    std::vector<Integer> e(static_cast<std::size_t>(i) + 1, Integer(0));
    e[0] = 1;
    for (const auto& c : chars)
        for (std::size_t j = static_cast<std::size_t>(i); j >= 1; --j) e[j] += e[j - 1] * c;
    return Rational(e[static_cast<std::size_t>(i)]);
}

// Giambelli: sigma_lambda = det(c_{lambda_a + b - a}(Q)), expanded over permutations.
inline Graded local_schubert(const Partition& lambda, const LocalContext& ctx, int top) {
    Characters quot;
    for (int j : ctx.complement) quot.emplace_back(ctx.weights->values[static_cast<std::size_t>(j)]);
    const int len = lambda.length();
    std::vector<int> perm(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) perm[static_cast<std::size_t>(i)] = i;
    Rational total = 0;
    do {
        Rational term = 1;
        for (int a = 0; a < len && term != 0; ++a) {
            const int m = lambda[static_cast<std::size_t>(a)] + perm[static_cast<std::size_t>(a)] - a;
            term *= m < 0 ? Rational(0) : elementary_symmetric(quot, m);
        }
        int inversions = 0;
        for (int a = 0; a < len; ++a)
            for (int b = a + 1; b < len; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
        total += inversions % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return graded_scalar(total, lambda.weight(), top);
}

inline Graded local_value(const ExprAst& expr, const LocalContext& ctx, int level, int top) {
    using Kind = ExprAst::Kind;
    switch (expr.kind()) {
        case Kind::Sum: {
            Graded out(static_cast<std::size_t>(top) + 1, Rational(0));
            for (const auto& c : expr.children()) {
                const Graded v = local_value(c, ctx, level, top);
                for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[i];
            }
            return out;
        }
        case Kind::Product: {
            Graded out = graded_scalar(1, 0, top);
            for (const auto& c : expr.children()) out = graded_multiply(out, local_value(c, ctx, level, top), top);
            return out;
        }
        case Kind::Power: {
            if (expr.exponent() < 0) throw MathError("negative exponent " + std::to_string(expr.exponent()));
            const Graded b = local_value(expr.children()[0], ctx, level, top);
            Graded out = graded_scalar(1, 0, top);
            for (int i = 0; i < expr.exponent(); ++i) out = graded_multiply(out, b, top);
            return out;
        }
        case Kind::Schubert: return local_schubert(Partition(expr.parts()), ctx, top);
        case Kind::Zeta:
            if (level == 0) throw MathError("zeta is only defined on a projective bundle");
            return graded_scalar(Rational(-ctx.eigen[static_cast<std::size_t>(level - 1)]), 1, top);
        case Kind::Number: return graded_scalar(expr.value(), 0, top);
        case Kind::Chern: {
            const Characters chars = bundle_characters(expr.bundle(), ctx, level);
            return graded_scalar(elementary_symmetric(chars, expr.chern_index()), expr.chern_index(), top);
        }
        case Kind::Euler: {
            const Characters chars = bundle_characters(expr.bundle(), ctx, level);
            return graded_scalar(elementary_symmetric(chars, static_cast<int>(chars.size())), static_cast<int>(chars.size()), top);
        }
    }
    return Graded(static_cast<std::size_t>(top) + 1, Rational(0));
}

inline std::vector<const Space*> tower_of(const Space& space) {
    std::vector<const Space*> levels;
    for (const Space* s = &space; s; s = s->base().get()) levels.push_back(s);
    std::reverse(levels.begin(), levels.end());
    return levels;
}

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> subset;
    auto recurse = [&](auto&& self, int start) -> void {
        if (static_cast<int>(subset.size()) == k) {
            visit(subset);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(subset.size())); ++i) {
            subset.push_back(i);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    recurse(recurse, 0);
}

}  // namespace detail

/// Visits every fixed point with its local context and tangent characters.
/// Throws WeightCollision if a fiber has a repeated eigenvalue.
template <typename Visit>
void for_each_fixed_point(const Space& space, const TorusWeights& weights, Visit&& visit) {
    const int n = space.ambient();
    const int k = space.sub_rank();
    if (static_cast<int>(weights.values.size()) != n)
        throw MathError("expected " + std::to_string(n) + " torus weights, got " + std::to_string(weights.values.size()));
    const auto levels = detail::tower_of(space);

    detail::for_each_subset(n, k, [&](const std::vector<int>& subset) {
        detail::LocalContext ctx{&weights, subset, {}, {}};
        for (int j = 0; j < n; ++j)
            if (std::find(subset.begin(), subset.end(), j) == subset.end()) ctx.complement.push_back(j);
        detail::Characters tangent;
        for (int i : subset)
            for (int j : ctx.complement) tangent.emplace_back(weights.values[static_cast<std::size_t>(j)] - weights.values[static_cast<std::size_t>(i)]);
        FixedPoint point{subset, {}};

        auto descend = [&](auto&& self, std::size_t level) -> void {
            if (level == levels.size()) {
                visit(point, ctx, tangent);
                return;
            }
            const Space& s = *levels[level];
            const detail::Characters fiber = detail::bundle_characters(s.bundle(), ctx, static_cast<int>(level) - 1);
            for (std::size_t a = 0; a < fiber.size(); ++a)
                for (std::size_t b = a + 1; b < fiber.size(); ++b)
                    if (fiber[a] == fiber[b])
                        throw WeightCollision("repeated eigenvalue in the fiber of " + s.to_string());
            for (std::size_t a = 0; a < fiber.size(); ++a) {
                const std::size_t tangent_mark = tangent.size();
                for (std::size_t b = 0; b < fiber.size(); ++b)
                    if (b != a) tangent.push_back(fiber[b] - fiber[a]);
                ctx.eigen.push_back(fiber[a]);
                point.eigenlines.push_back(static_cast<int>(a));
                self(self, level + 1);
                point.eigenlines.pop_back();
                ctx.eigen.pop_back();
                tangent.resize(tangent_mark);
            }
        };
        descend(descend, 1);
    });
}

/// Number of torus fixed points: C(n, k) times the product of fiber ranks.
inline Integer fixed_point_count(const Space& space) {
    Integer count = binomial(space.ambient(), space.sub_rank());
    for (const Space* s = &space; !s->is_grassmannian(); s = s->base().get()) count *= s->fiber_rank();
    return count;
}

/// Integral of the degree-dim part of integrand by the Atiyah-Bott formula.
inline Rational bott_integrate(const SpacePtr& space, const ExprAst& integrand, const TorusWeights& weights) {
    const int top = space->dim();
    const int level = space->level();
    Rational total = 0;
    for_each_fixed_point(*space, weights, [&](const FixedPoint&, const detail::LocalContext& ctx, const detail::Characters& tangent) {
        Integer denominator = 1;
        for (const auto& t : tangent) denominator *= t;
        if (denominator == 0) throw WeightCollision("zero tangent weight at a fixed point of " + space->to_string());
        const detail::Graded value = detail::local_value(integrand, ctx, level, top);
        total += value[static_cast<std::size_t>(top)] / Rational(denominator);
    });
    return total;
}

struct BottResult {
    Rational value;
    int seed = 0;
    TorusWeights weights;
};

/// bott_integrate with weights from weight_search(first_seed), moving to the
/// next seed after each collision.
inline BottResult bott_integrate_search(const SpacePtr& space, const ExprAst& integrand, int first_seed = 0, int max_attempts = 32) {
    for (int seed = first_seed; seed < first_seed + max_attempts; ++seed) {
        TorusWeights w = weight_search(seed, space->ambient());
        try {
            return BottResult{bott_integrate(space, integrand, w), seed, std::move(w)};
        } catch (const WeightCollision&) {
        }
    }
    throw MathError("no admissible torus weights found after " + std::to_string(max_attempts) + " seeds");
}

}  // namespace intersect
