#pragma once

// Chern, Segre and Euler classes of bundle expressions, evaluated into a Chow
// ring. Everything is truncated at the dimension of the space.

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "bundle.hpp"
#include "chowring.hpp"
#include "symcore.hpp"

namespace intersect {

/// c_0, c_1, ..., one entry per degree.
using ChernSeries = std::vector<ChowElement>;

/// Checks that expr makes sense on space and returns its rank.
inline int rank(const BundleExpr& expr, const Space& space) {
    if (expr.uses_relative_class() && space.is_grassmannian())
        throw MathError("o(k) needs a projective bundle, but the space is " + space.to_string());
    return expr.rank(space.sub_rank(), space.ambient());
}

/// 1 / c as a power series, up to degree `up_to`.
inline ChernSeries series_inverse(const ChernSeries& c, const SpacePtr& space, int up_to) {
    ChernSeries s;
    s.push_back(one(space));
    for (int j = 1; j <= up_to; ++j) {
        ChowElement term = zero(space);
        for (int i = 1; i <= j && i < static_cast<int>(c.size()); ++i) {
            if (c[static_cast<std::size_t>(i)].is_zero()) continue;
            term -= c[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j - i)];
        }
        s.push_back(std::move(term));
    }
    return s;
}

/// a / b as a power series (b_0 = 1), up to degree `up_to`.
inline ChernSeries series_divide(const ChernSeries& a, const ChernSeries& b, const SpacePtr& space, int up_to) {
    ChernSeries q;
    for (int j = 0; j <= up_to; ++j) {
        ChowElement term = j < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(j)] : zero(space);
        for (int i = 1; i <= j && i < static_cast<int>(b.size()); ++i) {
            if (b[static_cast<std::size_t>(i)].is_zero()) continue;
            term -= b[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j - i)];
        }
        q.push_back(std::move(term));
    }
    return q;
}

/// Product of two total Chern classes, truncated at `up_to`.
inline ChernSeries series_multiply(const ChernSeries& a, const ChernSeries& b, const SpacePtr& space, int up_to) {
    ChernSeries out(static_cast<std::size_t>(up_to) + 1, zero(space));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(up_to); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

namespace detail {

class ChernCache {
public:
    static ChernCache& instance() {
        static ChernCache cache;
        return cache;
    }

    bool lookup(const std::string& key, ChernSeries& out) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }

    void store(const std::string& key, const ChernSeries& value) {
        std::unique_lock lock(mutex_);
        table_.emplace(key, value);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<std::string, ChernSeries> table_;
};

inline ChernSeries chern_uncached(const BundleExpr& expr, const SpacePtr& space, int rank);

}  // namespace detail

/// c_0..c_m with m = min(rank, dim), evaluated on space.
inline ChernSeries chern_classes(const BundleExpr& expr, const SpacePtr& space) {
    const int r = rank(expr, *space);
    const std::string key = expr.to_string() + "@" + space->to_string();
    ChernSeries out;
    auto& cache = detail::ChernCache::instance();
    if (cache.lookup(key, out)) return out;
    out = detail::chern_uncached(expr, space, r);
    cache.store(key, out);
    return out;
}

namespace detail {

inline ChernSeries chern_uncached(const BundleExpr& expr, const SpacePtr& space, int r) {
    using Kind = BundleExpr::Kind;
    const int top = std::min(r, space->dim());
    ChernSeries out;

    // Classes pulled back from the base are computed there.
    if (!space->is_grassmannian() && !expr.uses_relative_class()) {
        for (const auto& c : chern_classes(expr, space->base())) out.push_back(pullback(space, c));
        out.resize(static_cast<std::size_t>(top) + 1, zero(space));
        return out;
    }

    switch (expr.kind()) {
        case Kind::TautSub:
            for (int i = 0; i <= top; ++i) {
                ChowElement c = schubert(space, Partition::column(i));
                out.push_back(i % 2 ? -c : c);
            }
            break;
        case Kind::TautQuot:
            for (int i = 0; i <= top; ++i) out.push_back(schubert(space, Partition::row(i)));
            break;
        case Kind::Trivial:
            out.push_back(one(space));
            break;
        case Kind::Dual:
            out = chern_classes(expr.first(), space);
            for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
            break;
        case Kind::Sym: {
            const int d = expr.param();
            const int inner_rank = rank(expr.first(), *space);
            if (d == 0 || inner_rank == 0) {
                out.push_back(one(space));
                break;
            }
            const ChernSeries inner = chern_classes(expr.first(), space);
            const TruncatedSymPoly poly = expand_linear_product(sym_power_roots(d, inner_rank), inner_rank, space->dim());
            // powers[i][p] = c_{i+1}(E)^p
            std::vector<std::vector<ChowElement>> powers(static_cast<std::size_t>(inner_rank));
            auto power_of = [&](std::size_t i, int p) -> const ChowElement& {
                auto& list = powers[i];
                const ChowElement base = i + 1 < inner.size() ? inner[i + 1] : zero(space);
                if (list.empty()) list.push_back(one(space));
                while (static_cast<int>(list.size()) <= p) list.push_back(list.back() * base);
                return list[static_cast<std::size_t>(p)];
            };
            out.assign(static_cast<std::size_t>(top) + 1, zero(space));
            for (const auto& [exps, coeff] : poly.terms) {
                const int deg = TruncatedSymPoly::weighted_degree(exps);
                if (deg > top) continue;
                ChowElement term = constant(space, coeff);
                for (std::size_t i = 0; i < exps.size(); ++i)
                    if (exps[i] > 0) term = term * power_of(i, exps[i]);
                out[static_cast<std::size_t>(deg)] += term;
            }
            break;
        }
        case Kind::TensorLine: {
            const ChernSeries e = chern_classes(expr.first(), space);
            const ChernSeries l = chern_classes(expr.second(), space);
            const ChowElement c1 = l.size() > 1 ? l[1] : zero(space);
            std::vector<ChowElement> line_powers{one(space)};
            for (int p = 1; p <= top; ++p) line_powers.push_back(line_powers.back() * c1);
            for (int k = 0; k <= top; ++k) {
                ChowElement ck = zero(space);
                for (int i = 0; i <= k && i < static_cast<int>(e.size()); ++i) {
                    const Integer b = binomial(r - i, k - i);
                    if (b == 0) continue;
                    ck += Rational(b) * (e[static_cast<std::size_t>(i)] * line_powers[static_cast<std::size_t>(k - i)]);
                }
                out.push_back(std::move(ck));
            }
            break;
        }
        case Kind::WhitneyQuotient: {
            const ChernSeries a = chern_classes(expr.first(), space);
            const ChernSeries b = chern_classes(expr.second(), space);
            out = series_divide(a, b, space, top);
            break;
        }
        case Kind::RelO: {
            out.push_back(one(space));
            if (top >= 1) out.push_back(Rational(expr.param()) * relative_hyperplane(space));
            break;
        }
    }
    out.resize(static_cast<std::size_t>(top) + 1, zero(space));
    return out;
}

}  // namespace detail

/// Top Chern class; zero when the rank exceeds the dimension.
inline ChowElement euler_class(const BundleExpr& expr, const SpacePtr& space) {
    const int r = rank(expr, *space);
    const ChernSeries c = chern_classes(expr, space);
    return r < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(r)] : zero(space);
}

/// s_0..s_{up_to} with s = c^{-1}; up_to is clipped to the dimension.
inline ChernSeries segre_classes(const BundleExpr& expr, const SpacePtr& space, int up_to) {
    return series_inverse(chern_classes(expr, space), space, std::min(up_to, space->dim()));
}

/// P(bundle) over base. Instances are shared per (bundle, base).
inline SpacePtr projectivize(const SpacePtr& base, const BundleExpr& bundle) {
    static std::mutex mutex;
    static std::map<std::string, SpacePtr> instances;
    const std::string key = bundle.to_string() + "@" + base->to_string();
    {
        std::lock_guard lock(mutex);
        if (auto it = instances.find(key); it != instances.end()) return it->second;
    }
    const int r = rank(bundle, *base);
    SpacePtr space = Space::projective_bundle(base, bundle, r, chern_classes(bundle, base));
    std::lock_guard lock(mutex);
    return instances.emplace(key, space).first->second;
}

}  // namespace intersect
