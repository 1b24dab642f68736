#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include <intersect/symcore.hpp>

using namespace intersect;

namespace {

// Number of standard Young tableaux, by the hook length formula.
Integer standard_tableaux(const Partition& lambda) {
    Integer num = 1;
    for (long i = 2; i <= lambda.weight(); ++i) num *= i;
    Integer den = 1;
    const Partition t = lambda.transpose();
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c) den *= (lambda[r] - c - 1) + (t[c] - r - 1) + 1;
    return num / den;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(n, n))
        if (p.weight() == n) out.push_back(p);
    return out;
}

}  // namespace

TEST(Partition, TrimsTrailingZeros) {
    EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
    EXPECT_EQ(Partition({0}).length(), 0);
    EXPECT_EQ(Partition({3, 1}).weight(), 4);
}

TEST(Partition, RejectsIncreasingOrNegativeParts) {
    EXPECT_THROW(Partition({1, 2}), MathError);
    EXPECT_THROW(Partition({2, -1}), MathError);
}

TEST(Partition, ComplementAndTranspose) {
    EXPECT_EQ(Partition({2, 1}).complement(2, 2), Partition({1}));
    EXPECT_EQ(Partition({}).complement(3, 3), Partition({3, 3, 3}));
    EXPECT_EQ(Partition({3, 1}).transpose(), Partition({2, 1, 1}));
    EXPECT_EQ(Partition({2, 2}).to_string(), "(2,2)");
}

TEST(EnumeratePartitions, KnownValues) {
    const auto empty_box = enumerate_partitions(0, 5);
    ASSERT_EQ(empty_box.size(), 1u);
    EXPECT_TRUE(empty_box[0].empty());

    const auto two_by_two = enumerate_partitions(2, 2);
    const std::set<Partition> got(two_by_two.begin(), two_by_two.end());
    const std::set<Partition> expected{Partition{}, Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}, Partition{2, 2}};
    EXPECT_EQ(got, expected);

    EXPECT_EQ(enumerate_partitions(3, 3).size(), 20u);
}

TEST(EnumeratePartitions, CountIsBinomial) {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            EXPECT_EQ(Integer(static_cast<long>(enumerate_partitions(k, n - k).size())), binomial(n, k)) << k << "," << n;
}

TEST(EnumeratePartitions, SortedByWeight) {
    const auto ps = enumerate_partitions(3, 4);
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), [](const Partition& a, const Partition& b) { return a.weight() < b.weight(); }));
}

TEST(Pieri, KnownValues) {
    auto sorted = [](std::vector<Partition> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    EXPECT_EQ(sorted(pieri_multiply(Partition{1}, 1, 2, 2)), sorted({Partition{2}, Partition{1, 1}}));
    EXPECT_TRUE(pieri_multiply(Partition{2, 2}, 1, 2, 2).empty());
    EXPECT_EQ(pieri_multiply(Partition{2}, 2, 2, 2), std::vector<Partition>{Partition({2, 2})});
}

TEST(Pieri, ZeroIsIdentity) {
    for (const auto& p : enumerate_partitions(3, 3)) EXPECT_EQ(pieri_multiply(p, 0, 3, 3), std::vector<Partition>{p});
}

TEST(LittlewoodRichardson, KnownValues) {
    EXPECT_EQ(lr_coefficient(Partition{1}, Partition{1}, Partition{2}), 1);
    EXPECT_EQ(lr_coefficient(Partition{2}, Partition{1}, Partition{2, 1}), 1);
    EXPECT_EQ(lr_coefficient(Partition{1, 1}, Partition{2}, Partition{2, 2}), 0);
}

TEST(LittlewoodRichardson, KnownMultiplicityTwo) {
    // s_21 * s_21 contains s_321 twice
    EXPECT_EQ(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}), 2);
}

TEST(LittlewoodRichardson, DegreeMismatchIsZero) {
    EXPECT_EQ(lr_coefficient(Partition{1}, Partition{1}, Partition{3}), 0);
    EXPECT_EQ(lr_coefficient(Partition{2}, Partition{}, Partition{2}), 1);
}

TEST(LittlewoodRichardson, AgreesWithPieriInThreeByThreeBox) {
    for (const auto& lambda : enumerate_partitions(3, 3)) {
        for (int i = 0; i <= 3; ++i) {
            const auto pieri = pieri_multiply(lambda, i, 3, 3);
            for (const auto& nu : enumerate_partitions(3, 3)) {
                const long expected = std::count(pieri.begin(), pieri.end(), nu);
                EXPECT_EQ(lr_coefficient(lambda, Partition::row(i), nu), expected) << lambda.to_string() << " " << i << " " << nu.to_string();
            }
        }
    }
}

TEST(LittlewoodRichardson, Commutative) {
    const auto box = enumerate_partitions(3, 3);
    for (const auto& a : box)
        for (const auto& b : box)
            for (const auto& nu : box) {
                if (nu.weight() == a.weight() + b.weight()) {
                    EXPECT_EQ(lr_coefficient(a, b, nu), lr_coefficient(b, a, nu));
                }
            }
}

TEST(LittlewoodRichardson, DimensionIdentity) {
    // sum_nu c^nu_{lambda mu} f^nu = C(|lambda|+|mu|, |lambda|) f^lambda f^mu,
    // the dimension count of an induced representation of S_n
    const auto box = enumerate_partitions(2, 3);
    for (const auto& a : box) {
        for (const auto& b : box) {
            const int n = a.weight() + b.weight();
            if (n > 9) continue;
            Integer lhs = 0;
            for (const auto& nu : partitions_of(n)) lhs += lr_coefficient(a, b, nu) * standard_tableaux(nu);
            const Integer rhs = binomial(n, a.weight()) * standard_tableaux(a) * standard_tableaux(b);
            EXPECT_EQ(lhs, rhs) << a.to_string() << " " << b.to_string();
        }
    }
}

TEST(SymPowerRoots, KnownValues) {
    EXPECT_EQ(sym_power_roots(1, 3), (std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    EXPECT_EQ(sym_power_roots(6, 3).size(), 28u);
    EXPECT_EQ(sym_power_roots(4, 3).size(), 15u);
    EXPECT_EQ(sym_power_roots(0, 2), (std::vector<std::vector<int>>{{0, 0}}));
}

TEST(SymPowerRoots, EachVectorSumsToD) {
    for (const auto& v : sym_power_roots(5, 4)) EXPECT_EQ(std::accumulate(v.begin(), v.end(), 0), 5);
    EXPECT_EQ(Integer(static_cast<long>(sym_power_roots(5, 4).size())), binomial(8, 5));
}

TEST(ExpandLinearProduct, KnownValues) {
    const auto one_form = expand_linear_product({{1}}, 1, 3);
    EXPECT_EQ(one_form.coefficient({0}), 1);
    EXPECT_EQ(one_form.coefficient({1}), 1);
    EXPECT_EQ(one_form.terms.size(), 2u);

    const auto sym2 = expand_linear_product(sym_power_roots(2, 2), 2, 4);
    const auto deg1 = sym2.homogeneous_part(1);
    ASSERT_EQ(deg1.size(), 1u);
    EXPECT_EQ(deg1.at({1, 0}), 3);

    const auto sym3 = expand_linear_product(sym_power_roots(3, 2), 2, 4);
    const auto top = sym3.homogeneous_part(4);
    EXPECT_EQ(top.size(), 2u);
    EXPECT_EQ(sym3.coefficient({2, 1}), 18);
    EXPECT_EQ(sym3.coefficient({0, 2}), 9);
}

TEST(ExpandLinearProduct, TruncationDropsHighTerms) {
    const auto p = expand_linear_product(sym_power_roots(3, 2), 2, 2);
    for (const auto& [e, c] : p.terms) EXPECT_LE(TruncatedSymPoly::weighted_degree(e), 2);
}

TEST(ExpandLinearProduct, RejectsNonSymmetricProduct) {
    EXPECT_THROW(expand_linear_product({{1, 0}}, 2, 2), MathError);
}

TEST(ExpandLinearProduct, InvariantUnderReorderingForms) {
    auto forms = sym_power_roots(3, 3);
    const auto a = expand_linear_product(forms, 3, 6);
    std::mt19937 rng(7);
    std::shuffle(forms.begin(), forms.end(), rng);
    EXPECT_EQ(expand_linear_product(forms, 3, 6).terms, a.terms);
}

TEST(ExpandLinearProduct, MatchesPointEvaluation) {
    // Evaluate both sides at integer roots scaled by t and compare the
    // coefficient of t^j, which is the degree-j part.
    const int r = 3;
    const auto forms = sym_power_roots(2, r);
    const int trunc = 6;
    const auto poly = expand_linear_product(forms, r, trunc);
    const std::vector<std::vector<long>> samples{{1, 2, 3}, {-1, 4, 0}, {2, 2, -5}};
    for (const auto& x : samples) {
        // product of (1 + t m.x) as a polynomial in t
        std::vector<Rational> lhs{1};
        for (const auto& m : forms) {
            long v = 0;
            for (int j = 0; j < r; ++j) v += m[j] * x[j];
            std::vector<Rational> next(lhs.size() + 1, Rational(0));
            for (std::size_t i = 0; i < lhs.size(); ++i) {
                next[i] += lhs[i];
                next[i + 1] += lhs[i] * v;
            }
            lhs = next;
        }
        // e_i(x)
        std::vector<Rational> e(r + 1, Rational(0));
        e[0] = 1;
        for (int j = 0; j < r; ++j)
            for (int i = j + 1; i >= 1; --i) e[i] += e[i - 1] * x[j];
        std::vector<Rational> rhs(trunc + 1, Rational(0));
        for (const auto& [exps, c] : poly.terms) {
            Rational v = c;
            for (int i = 0; i < r; ++i)
                for (int p = 0; p < exps[i]; ++p) v *= e[i + 1];
            rhs[TruncatedSymPoly::weighted_degree(exps)] += v;
        }
        for (int j = 0; j <= trunc; ++j) EXPECT_EQ(rhs[j], j < static_cast<int>(lhs.size()) ? lhs[j] : Rational(0)) << "degree " << j;
    }
}
