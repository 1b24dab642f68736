#pragma once

// Partitions, Pieri and Littlewood-Richardson combinatorics, and the
// elementary-symmetric rewriting of products of linear forms in Chern roots.

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "rational.hpp"

namespace intersect {

/// Weakly decreasing tuple of nonnegative integers with trailing zeros trimmed.
/// Indexes the Schubert class sigma_lambda; weight() is its codimension.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw MathError("partition has a negative part");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw MathError("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (1^i), the column of height i.
    static Partition column(int i) { return Partition(std::vector<int>(static_cast<std::size_t>(i), 1)); }
    /// (i), a single row.
    static Partition row(int i) { return i == 0 ? Partition() : Partition({i}); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    bool fits(int rows, int cols) const { return length() <= rows && (parts_.empty() || parts_[0] <= cols); }

    bool contains(const Partition& other) const {
        if (other.length() > length()) return false;
        for (std::size_t i = 0; i < other.parts_.size(); ++i)
            if (other.parts_[i] > parts_[i]) return false;
        return true;
    }

    /// The dual class in a rows x cols box: (cols - lambda_{rows-1}, ..., cols - lambda_0).
    Partition complement(int rows, int cols) const {
        std::vector<int> out(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) out[static_cast<std::size_t>(i)] = cols - (*this)[static_cast<std::size_t>(rows - 1 - i)];
        return Partition(std::move(out));
    }

    Partition transpose() const {
        std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
        return Partition(std::move(out));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Every partition inside a rows x cols box, ordered by weight and then by
/// descending parts. There are C(rows+cols, rows) of them.
inline std::vector<Partition> enumerate_partitions(int rows, int cols) {
    if (rows < 0 || cols < 0) throw MathError("box dimensions must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int max_part) -> void {
        out.emplace_back(current);
        if (static_cast<int>(current.size()) == rows) return;
        for (int p = max_part; p >= 1; --p) {
            current.push_back(p);
            self(self, p);
            current.pop_back();
        }
    };
    recurse(recurse, cols);
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.parts() > b.parts();
    });
    return out;
}

/// Pieri rule: the mu with mu/lambda a horizontal strip of size i that fit the
/// box. Each has coefficient one; anything outside the box is the zero class.
inline std::vector<Partition> pieri_multiply(const Partition& lambda, int i, int rows, int cols) {
    if (i < 0) throw MathError("Pieri degree must be nonnegative");
    std::vector<Partition> out;
    if (!lambda.fits(rows, cols)) return out;
    std::vector<int> mu(static_cast<std::size_t>(rows), 0);
    auto recurse = [&](auto&& self, int r, int remaining) -> void {
        if (r == rows) {
            if (remaining == 0) out.emplace_back(mu);
            return;
        }
        const int lo = lambda[static_cast<std::size_t>(r)];
        const int hi = r == 0 ? cols : lambda[static_cast<std::size_t>(r - 1)];
        for (int v = std::min(hi, lo + remaining); v >= lo; --v) {
            mu[static_cast<std::size_t>(r)] = v;
            self(self, r + 1, remaining - (v - lo));
        }
    };
    recurse(recurse, 0, i);
    return out;
}

namespace detail {

// Counts LR skew tableaux of shape nu/lambda and content mu: semistandard,
// with the right-to-left, top-to-bottom reading word a lattice word.
inline long count_lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
    struct Cell {
        int row;
        int col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < nu.length(); ++r)
        for (int c = nu[static_cast<std::size_t>(r)] - 1; c >= lambda[static_cast<std::size_t>(r)]; --c) cells.push_back({r, c});

    const int rows = nu.length();
    const int cols = rows ? nu[0] : 0;
    std::vector<int> grid(static_cast<std::size_t>(rows * cols), 0);
    auto at = [&](int r, int c) -> int& { return grid[static_cast<std::size_t>(r * cols + c)]; };
    std::vector<int> used(static_cast<std::size_t>(mu.length()) + 1, 0);

    long count = 0;
    auto recurse = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[idx];
        int hi = std::min(mu.length(), r + 1);
        if (c + 1 < nu[static_cast<std::size_t>(r)]) hi = std::min(hi, at(r, c + 1));
        int lo = 1;
        if (r > 0 && c >= lambda[static_cast<std::size_t>(r - 1)]) lo = at(r - 1, c) + 1;
        for (int v = lo; v <= hi; ++v) {
            if (used[static_cast<std::size_t>(v)] >= mu[static_cast<std::size_t>(v - 1)]) continue;
            if (v > 1 && used[static_cast<std::size_t>(v)] + 1 > used[static_cast<std::size_t>(v - 1)]) continue;
            ++used[static_cast<std::size_t>(v)];
            at(r, c) = v;
            self(self, idx + 1);
            at(r, c) = 0;
            --used[static_cast<std::size_t>(v)];
        }
    };
    recurse(recurse, 0);
    return count;
}

class LrCache {
public:
    using Key = std::tuple<Partition, Partition, Partition>;

    static LrCache& instance() {
        static LrCache cache;
        return cache;
    }

    bool lookup(const Key& key, long& value) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return false;
        value = it->second;
        return true;
    }

    // Concurrent writers for the same key always carry the same value.
    void store(const Key& key, long value) {
        std::unique_lock lock(mutex_);
        table_.emplace(key, value);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, long> table_;
};

}  // namespace detail

/// Littlewood-Richardson number c^nu_{lambda mu}.
inline long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;
    if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
    // c is symmetric in lambda and mu; store under one ordering
    const bool swap = mu < lambda;
    detail::LrCache::Key key{swap ? mu : lambda, swap ? lambda : mu, nu};
    long value = 0;
    auto& cache = detail::LrCache::instance();
    if (cache.lookup(key, value)) return value;
    value = detail::count_lr_tableaux(std::get<0>(key), std::get<1>(key), nu);
    cache.store(key, value);
    return value;
}

/// Exponent vectors (m_1..m_r), m_j >= 0, summing to d: the Chern roots of
/// Sym^d of a rank r bundle are the sums m_1 x_1 + ... + m_r x_r.
inline std::vector<std::vector<int>> sym_power_roots(int d, int r) {
    if (d < 0 || r < 1) throw MathError("sym_power_roots needs d >= 0 and r >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(r), 0);
    auto recurse = [&](auto&& self, int j, int remaining) -> void {
        if (j == r - 1) {
            current[static_cast<std::size_t>(j)] = remaining;
            out.push_back(current);
            return;
        }
        for (int m = remaining; m >= 0; --m) {
            current[static_cast<std::size_t>(j)] = m;
            self(self, j + 1, remaining - m);
        }
    };
    recurse(recurse, 0, d);
    return out;
}

/// Polynomial in e_1..e_r (deg e_i = i) with exact coefficients, truncated in
/// weighted degree. Zero coefficients are never stored.
struct TruncatedSymPoly {
    using Exponents = std::vector<int>;

    int num_generators = 0;
    int truncation = 0;
    std::map<Exponents, Rational> terms;

    static int weighted_degree(const Exponents& e) {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<int>(i + 1) * e[i];
        return d;
    }

    Rational coefficient(const Exponents& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? Rational(0) : it->second;
    }

    std::map<Exponents, Rational> homogeneous_part(int degree) const {
        std::map<Exponents, Rational> out;
        for (const auto& [e, c] : terms)
            if (weighted_degree(e) == degree) out.emplace(e, c);
        return out;
    }
};

namespace detail {

// Sparse polynomial in the roots x_1..x_r, truncated in total degree.
using RootPoly = std::map<std::vector<int>, Rational>;

inline int total_degree(const std::vector<int>& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline RootPoly multiply_truncated(const RootPoly& a, const RootPoly& b, int truncation) {
    RootPoly out;
    std::vector<int> m;
    for (const auto& [ma, ca] : a) {
        const int da = total_degree(ma);
        for (const auto& [mb, cb] : b) {
            if (da + total_degree(mb) > truncation) continue;
            m = ma;
            for (std::size_t j = 0; j < m.size(); ++j) m[j] += mb[j];
            auto [it, inserted] = out.try_emplace(m, 0);
            it->second += ca * cb;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

inline RootPoly elementary(int i, int r) {
    RootPoly e;
    std::vector<int> m(static_cast<std::size_t>(r), 0);
    auto recurse = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            e.emplace(m, 1);
            return;
        }
        for (int j = start; j < r; ++j) {
            m[static_cast<std::size_t>(j)] = 1;
            self(self, j + 1, left - 1);
            m[static_cast<std::size_t>(j)] = 0;
        }
    };
    recurse(recurse, 0, i);
    return e;
}

}  // namespace detail

/// Expands prod_f (1 + sum_j f_j x_j) over r roots, truncates at the given total
/// degree, and rewrites the result in e_1..e_r by peeling off lexicographic
/// leading terms. Throws MathError if the product is not symmetric.
inline TruncatedSymPoly expand_linear_product(const std::vector<std::vector<int>>& forms, int num_roots, int truncation) {
    if (num_roots < 1) throw MathError("expand_linear_product needs at least one root");
    if (truncation < 0) throw MathError("truncation degree must be nonnegative");
    const auto r = static_cast<std::size_t>(num_roots);

    detail::RootPoly product;
    product.emplace(std::vector<int>(r, 0), 1);
    for (const auto& form : forms) {
        if (form.size() != r) throw MathError("linear form has the wrong number of root coefficients");
        detail::RootPoly factor;
        factor.emplace(std::vector<int>(r, 0), 1);
        for (std::size_t j = 0; j < r; ++j) {
            if (form[j] == 0) continue;
            std::vector<int> m(r, 0);
            m[j] = 1;
            factor.emplace(std::move(m), form[j]);
        }
        product = detail::multiply_truncated(product, factor, truncation);
    }

    std::vector<detail::RootPoly> elementaries(r + 1);
    for (int i = 1; i <= num_roots; ++i) elementaries[static_cast<std::size_t>(i)] = detail::elementary(i, num_roots);
    std::map<std::vector<int>, detail::RootPoly> monomial_cache;
    auto expand_e_monomial = [&](auto&& self, const std::vector<int>& b) -> const detail::RootPoly& {
        if (auto it = monomial_cache.find(b); it != monomial_cache.end()) return it->second;
        detail::RootPoly value;
        auto first = std::find_if(b.begin(), b.end(), [](int x) { return x > 0; });
        if (first == b.end()) {
            value.emplace(std::vector<int>(r, 0), 1);
        } else {
            std::vector<int> rest = b;
            const auto i = static_cast<std::size_t>(first - b.begin());
            --rest[i];
            value = detail::multiply_truncated(self(self, rest), elementaries[i + 1], truncation);
        }
        return monomial_cache.emplace(b, std::move(value)).first->second;
    };

    TruncatedSymPoly result;
    result.num_generators = num_roots;
    result.truncation = truncation;
    while (!product.empty()) {
        const auto [lead, coeff] = *product.rbegin();
        std::vector<int> b(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
            const int next = i + 1 < r ? lead[i + 1] : 0;
            if (lead[i] < next) throw MathError("product of linear forms is not symmetric in the roots");
            b[i] = lead[i] - next;
        }
        const Rational c = coeff;
        for (const auto& [m, v] : expand_e_monomial(expand_e_monomial, b)) {
            auto [it, inserted] = product.try_emplace(m, 0);
            it->second -= c * v;
            if (it->second == 0) product.erase(it);
        }
        result.terms.emplace(std::move(b), c);
    }
    return result;
}

}  // namespace intersect
