#pragma once

// Multiple-cover combinatorics relating genus-zero GW invariants and DT4
// counts on a Calabi-Yau fourfold with H_2 = Z, and a localization check of
// the degree-d cover contribution of a rigid line.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bott.hpp"
#include "rational.hpp"

namespace intersect {

/// Invariants indexed by curve degree (multiples of the line class).
struct InvariantTable {
    enum class Label { GW, DT };
    Label label = Label::DT;
    std::map<int, Rational> values;

    const Rational& at(int degree) const {
        auto it = values.find(degree);
        if (it == values.end())
            throw MathError(std::string(label == Label::GW ? "GW" : "DT") + " value for degree " + std::to_string(degree) + " is missing");
        return it->second;
    }
};

inline std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int k = 1; k <= n; ++k)
        if (n % k == 0) out.push_back(k);
    return out;
}

/// Moebius function by trial division.
inline int moebius(int n) {
    if (n < 1) throw MathError("moebius() needs a positive argument");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

namespace detail {

inline void check_degrees(const InvariantTable& table) {
    for (const auto& [d, v] : table.values)
        if (d < 1) throw MathError("curve degrees must be positive, got " + std::to_string(d));
}

}  // namespace detail

/// GW_{0,b} = sum_{k | b} k^{-2} DT(b/k), for every degree present in dt.
inline InvariantTable gw_from_dt(const InvariantTable& dt) {
    detail::check_degrees(dt);
    InvariantTable gw{InvariantTable::Label::GW, {}};
    for (const auto& [beta, unused] : dt.values) {
        Rational sum = 0;
        for (int k : divisors(beta)) sum += dt.at(beta / k) / Rational(k * k);
        gw.values.emplace(beta, sum);
    }
    return gw;
}

/// DT(b) = sum_{k | b} mu(k) k^{-2} GW_{0,b/k}; inverse of gw_from_dt.
inline InvariantTable dt_from_gw(const InvariantTable& gw) {
    detail::check_degrees(gw);
    InvariantTable dt{InvariantTable::Label::DT, {}};
    for (const auto& [beta, unused] : gw.values) {
        Rational sum = 0;
        for (int k : divisors(beta)) {
            const int mu = moebius(k);
            if (mu != 0) sum += Rational(mu) * gw.at(beta / k) / Rational(k * k);
        }
        dt.values.emplace(beta, sum);
    }
    return dt;
}

/// 1/d^3: the degree-d cover contribution of a rigid (-1,-1) curve.
inline Rational aspinwall_morrison_factor(int d) {
    if (d < 1) throw MathError("cover degree must be at least 1");
    return Rational(1) / Rational(Integer(d) * d * d);
}

/// Share of GW_{0,2l} coming from double covers of lines: the 1-pointed cover
/// space pushes forward with multiplicity 2 against the universal line, times
/// the degree-2 cover factor 1/8.
inline Rational cover_component_contribution(const Rational& dt_line) {
    return Rational(2) * aspinwall_morrison_factor(2) * dt_line;
}

/// Torus-fixed locus of maps P^1 -> P^1 of degree d: a tree whose vertices sit
/// at the fixed points 0 and 1 (adjacent vertices differ) and whose edges are
/// d_e-fold covers of the line.
struct CoverGraph {
    struct Edge {
        int a;
        int b;
        int degree;
    };
    std::vector<int> labels;
    std::vector<Edge> edges;
    long automorphisms = 1;

    int valence(int v) const {
        return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const Edge& e) { return e.a == v || e.b == v; }));
    }
};

namespace detail {

// Labeled trees on n vertices from Pruefer sequences.
inline std::vector<std::vector<std::pair<int, int>>> labeled_trees(int n) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (n == 1) {
        out.emplace_back();
        return out;
    }
    if (n == 2) {
        out.push_back({{0, 1}});
        return out;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int x : seq) ++degree[static_cast<std::size_t>(x)];
        std::vector<std::pair<int, int>> edges;
        for (int x : seq) {
            int leaf = 0;
            while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
            edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
            --degree[static_cast<std::size_t>(leaf)];
            --degree[static_cast<std::size_t>(x)];
        }
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1) rest.push_back(v);
        edges.emplace_back(rest[0], rest[1]);
        std::sort(edges.begin(), edges.end());
        out.push_back(std::move(edges));

        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    return out;
}

inline std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int left, int slots) -> void {
        if (slots == 0) {
            if (left == 0) out.push_back(current);
            return;
        }
        for (int v = 1; v <= left - (slots - 1); ++v) {
            current.push_back(v);
            self(self, left - v, slots - 1);
            current.pop_back();
        }
    };
    recurse(recurse, total, parts);
    return out;
}

// Sorted (label, label, degree) triples after relabeling vertices by perm.
inline std::vector<std::vector<int>> encode(const CoverGraph& g, const std::vector<int>& perm) {
    std::vector<std::vector<int>> code;
    std::vector<int> labels(g.labels.size());
    for (std::size_t v = 0; v < g.labels.size(); ++v) labels[static_cast<std::size_t>(perm[v])] = g.labels[v];
    code.push_back(labels);
    for (const auto& e : g.edges) {
        int a = perm[static_cast<std::size_t>(e.a)];
        int b = perm[static_cast<std::size_t>(e.b)];
        if (a > b) std::swap(a, b);
        code.push_back({a, b, e.degree});
    }
    std::sort(code.begin() + 1, code.end());
    return code;
}

inline std::vector<std::vector<int>> canonical_form(const CoverGraph& g) {
    std::vector<int> perm(g.labels.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> best;
    do {
        auto code = encode(g, perm);
        if (best.empty() || code < best) best = std::move(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace detail

/// Isomorphism classes of fixed-locus graphs for degree-d maps P^1 -> P^1,
/// each with its graph automorphism count (edge cover automorphisms excluded).
inline std::vector<CoverGraph> enumerate_cover_graphs(int d) {
    if (d < 1) throw MathError("cover degree must be at least 1");
    std::map<std::vector<std::vector<int>>, std::pair<CoverGraph, long>> classes;
    for (int edges = 1; edges <= d; ++edges) {
        const int vertices = edges + 1;
        for (const auto& tree : detail::labeled_trees(vertices)) {
            for (int root_label = 0; root_label < 2; ++root_label) {
                std::vector<int> labels(static_cast<std::size_t>(vertices), -1);
                labels[0] = root_label;
                for (bool changed = true; changed;) {
                    changed = false;
                    for (const auto& [a, b] : tree) {
                        if (labels[static_cast<std::size_t>(a)] >= 0 && labels[static_cast<std::size_t>(b)] < 0) {
                            labels[static_cast<std::size_t>(b)] = 1 - labels[static_cast<std::size_t>(a)];
                            changed = true;
                        } else if (labels[static_cast<std::size_t>(b)] >= 0 && labels[static_cast<std::size_t>(a)] < 0) {
                            labels[static_cast<std::size_t>(a)] = 1 - labels[static_cast<std::size_t>(b)];
                            changed = true;
                        }
                    }
                }
                for (const auto& degrees : detail::compositions(d, edges)) {
                    CoverGraph g;
                    g.labels = labels;
                    for (std::size_t i = 0; i < tree.size(); ++i) g.edges.push_back({tree[i].first, tree[i].second, degrees[i]});
                    auto key = detail::canonical_form(g);
                    auto [it, inserted] = classes.try_emplace(std::move(key), g, 0L);
                    ++it->second.second;
                }
            }
        }
    }
    std::vector<CoverGraph> out;
    for (auto& [key, entry] : classes) {
        long factorial = 1;
        for (long i = 2; i <= static_cast<long>(entry.first.labels.size()); ++i) factorial *= i;
        entry.first.automorphisms = factorial / entry.second;
        out.push_back(std::move(entry.first));
    }
    return out;
}

/// Contribution of one fixed-locus graph to the integral over
/// Mbar_{0,0}(P^1, d) of e(R^1 pi_* f^*(O(-1) + O(-1))).
/// weights = (lambda_0, lambda_1, c_1, c_2): coordinate weights of P^1 and the
/// linearization shifts of the two O(-1) summands (O(-1) at p_i has weight
/// lambda_i + c_a).
inline Rational cover_graph_contribution(const CoverGraph& g, const TorusWeights& weights) {
    if (weights.values.size() < 4) throw MathError("cover localization needs 4 weights");
    const Rational lambda[2] = {Rational(weights.values[0]), Rational(weights.values[1])};
    const Rational shift[2] = {Rational(weights.values[2]), Rational(weights.values[3])};
    // T_{p_i} P^1 = lambda_j - lambda_i
    const Rational tangent[2] = {lambda[1] - lambda[0], lambda[0] - lambda[1]};
    auto line_weight = [&](int point, int summand) { return lambda[point] + shift[summand]; };

    Rational result = 1;
    for (const auto& e : g.edges) {
        const int i = g.labels[static_cast<std::size_t>(e.a)];
        const Rational t = tangent[i];
        const Rational delta = e.degree;
        // moving part of H^0(C_e, f^*T P^1)
        Rational h0 = 1;
        for (int a = 0; a <= 2 * e.degree; ++a)
            if (a != e.degree) h0 *= Rational(e.degree - a) * t / delta;
        // H^1(C_e, f^*O(-1)) for both summands
        Rational ob = 1;
        for (int s = 0; s < 2; ++s)
            for (int b = 1; b < e.degree; ++b) ob *= line_weight(i, s) + Rational(b) * t / delta;
        result *= ob / (h0 * delta);
    }
    for (std::size_t v = 0; v < g.labels.size(); ++v) {
        const int i = g.labels[v];
        const int val = g.valence(static_cast<int>(v));
        Rational inv_sum = 0;
        Rational inv_prod = 1;
        for (const auto& e : g.edges) {
            if (e.a != static_cast<int>(v) && e.b != static_cast<int>(v)) continue;
            const Rational omega = tangent[i] / Rational(e.degree);
            inv_sum += 1 / omega;
            inv_prod /= omega;
        }
        Rational vertex = inv_prod;
        for (int p = 0; p < val - 1; ++p) vertex *= tangent[i] * line_weight(i, 0) * line_weight(i, 1);
        if (val >= 3) {
            for (int p = 0; p < val - 3; ++p) vertex *= inv_sum;
        } else {
            for (int p = 0; p < 3 - val; ++p) vertex /= inv_sum;
        }
        result *= vertex;
    }
    return result / Rational(g.automorphisms);
}

/// Graph sum for the degree-d cover integral; equals 1/d^3 for any admissible
/// weights. Supported for 1 <= d <= 3.
inline Rational am_localization_verify(int d, const TorusWeights& weights) {
    if (d < 1 || d > 3) throw MathError("am-verify supports degrees 1..3, got " + std::to_string(d));
    Rational total = 0;
    for (const auto& g : enumerate_cover_graphs(d)) total += cover_graph_contribution(g, weights);
    return total;
}

inline Rational am_localization_verify(int d, int seed = 0) { return am_localization_verify(d, weight_search(seed, 4)); }

}  // namespace intersect
