#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "harmonic/selftest.hpp"
#include "harmonic/verdict.hpp"

using namespace harmonic;

namespace {

std::set<KTypeIndex> brute_force_ktypes(double bound) {
    std::set<KTypeIndex> out;
    for (int p = -20; p <= 20; ++p)
        for (int q = -20; q <= 20; ++q)
            if (p >= 0 && std::abs(q) <= p && (p + q) % 2 == 0 && p < bound) out.insert({p, q});
    return out;
}

std::set<KTypeIndex> as_set(const std::vector<KTypeIndex>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Verdict, HardyCases) {
    const auto h3 = model_space("h3");
    const auto v = verdict_hardy(h3, 0.25, 1.0);
    EXPECT_EQ(v.outcome, Outcome::heat_kernel_multiple);
    EXPECT_EQ(v.cited_case, "Thm 5.4(b)");
    EXPECT_EQ(verdict_hardy(h3, 1.0, 1.0).outcome, Outcome::zero);
    EXPECT_EQ(verdict_hardy(h3, 1.0, 1.0).cited_case, "Thm 5.4(a)");
    EXPECT_EQ(verdict_hardy(h3, 0.2, 1.0).outcome, Outcome::not_determined);
    // product equal to 1/4 up to rounding
    EXPECT_EQ(verdict_hardy(h3, 0.1, 2.5).outcome, Outcome::heat_kernel_multiple);
    EXPECT_THROW(verdict_hardy(h3, 0.0, 1.0), invalid_parameter);
}

TEST(Verdict, BeurlingZeroBelowDimension) {
    for (const auto& s : registry_sweep())
        for (int d = 0; d <= s.d_x; ++d) {
            const auto v = verdict_beurling(s, d);
            EXPECT_EQ(v.outcome, Outcome::zero) << s.name << " d=" << d;
            EXPECT_TRUE(v.ktypes.empty());
        }
    EXPECT_THROW(verdict_beurling(model_space("h3"), -1), invalid_parameter);
}

TEST(Verdict, BeurlingKTypesMatchBruteForce) {
    for (const auto& s : registry_sweep())
        for (int d = s.d_x + 1; d <= s.d_x + 30; ++d) {
            const auto v = verdict_beurling(s, d);
            ASSERT_EQ(v.outcome, Outcome::heat_derivative);
            EXPECT_DOUBLE_EQ(v.deg_bound, 0.5 * (d - s.d_x));
            EXPECT_EQ(as_set(v.ktypes), brute_force_ktypes(v.deg_bound)) << s.name << " d=" << d;
            for (const auto& k : v.ktypes) {
                EXPECT_TRUE(k.valid());
                EXPECT_LT(k.p, v.deg_bound);
            }
        }
}

TEST(Verdict, BeurlingSmallCasesOnH3) {
    const auto h3 = model_space("h3");
    const auto v6 = verdict_beurling(h3, 6);
    EXPECT_DOUBLE_EQ(v6.deg_bound, 1.5);
    EXPECT_EQ(as_set(v6.ktypes), (std::set<KTypeIndex>{{0, 0}, {1, -1}, {1, 1}}));
    const auto v4 = verdict_beurling(h3, 4);
    EXPECT_EQ(as_set(v4.ktypes), (std::set<KTypeIndex>{{0, 0}}));
    EXPECT_EQ(v4.cited_case, "Thm 3.1");
}

TEST(Verdict, MorganCases) {
    const auto h3 = model_space("h3");
    const auto qh = model_space("quaternionic_hyperbolic(2)");
    EXPECT_EQ(verdict_morgan(h3, 1.0, 1.0, 3.0, 0).outcome, Outcome::zero);
    EXPECT_EQ(verdict_morgan(h3, 0.25, 0.75, 4.0, 0).cited_case, "Thm 5.2(b)");
    EXPECT_EQ(verdict_morgan(h3, 0.25, 1.0, 2.0, 0).outcome, Outcome::heat_kernel_multiple);
    // threshold 2n < m_gamma + m_2gamma - 2 = 5
    EXPECT_EQ(verdict_morgan(qh, 0.25, 1.0, 2.0, 2).cited_case, "Remark 5.3");
    EXPECT_EQ(verdict_morgan(qh, 0.25, 1.0, 2.0, 3).outcome, Outcome::heat_kernel_multiple);
    EXPECT_EQ(verdict_morgan(h3, 0.1, 0.1, 2.0, 0).outcome, Outcome::not_determined);
    EXPECT_THROW(verdict_morgan(h3, 1.0, 1.0, 1.0, 0), invalid_parameter);
    EXPECT_THROW(verdict_morgan(h3, 1.0, 1.0, infinite_exponent, 0), invalid_parameter);
    EXPECT_THROW(verdict_morgan(h3, 1.0, 1.0, 2.0, -1), invalid_parameter);
}

TEST(Verdict, MorganWithExponentTwoReducesToHardy) {
    EXPECT_TRUE(selftest::morgan_hardy_reduction(200));
}

TEST(Verdict, GelfandShilovCases) {
    const auto h3 = model_space("h3");
    EXPECT_EQ(verdict_gelfand_shilov(h3, 2.0, 1.0, 2.0, 0).outcome, Outcome::zero);
    EXPECT_EQ(verdict_gelfand_shilov(h3, 1.0, 1.0, 3.0, 9).cited_case, "Thm 5.1(b)");
    EXPECT_EQ(verdict_gelfand_shilov(h3, 1.0, 1.0, 2.0, 3).cited_case, "Thm 5.1(c)");
    EXPECT_EQ(verdict_gelfand_shilov(h3, 1.0, 1.0, 2.0, 4).outcome, Outcome::heat_kernel_multiple);
    for (int N = 5; N <= 12; ++N) {
        const auto v = verdict_gelfand_shilov(h3, 1.0, 1.0, 2.0, N);
        EXPECT_EQ(v.outcome, Outcome::heat_derivative);
        EXPECT_EQ(as_set(v.ktypes), as_set(verdict_beurling(h3, 2 * N).ktypes));
    }
    EXPECT_EQ(verdict_gelfand_shilov(h3, 0.5, 1.0, 2.0, 4).outcome, Outcome::not_determined);
    EXPECT_THROW(verdict_gelfand_shilov(h3, 1.0, 1.0, 0.5, 4), invalid_parameter);
}

TEST(Verdict, CowlingPriceCases) {
    const auto h3 = model_space("h3");
    const double inf = infinite_exponent;
    EXPECT_EQ(verdict_cowling_price(h3, 1.0, 1.0, 2.0, 2.0, 0, 0).outcome, Outcome::zero);
    EXPECT_EQ(verdict_cowling_price(h3, 0.25, 1.0, inf, inf, 0, 0).outcome, Outcome::heat_kernel_multiple);
    // d_X < n <= d_X + p2
    EXPECT_EQ(verdict_cowling_price(h3, 0.25, 1.0, 2.0, 2.0, 0, 4).outcome, Outcome::heat_kernel_multiple);
    EXPECT_EQ(verdict_cowling_price(h3, 0.25, 1.0, 2.0, 2.0, 0, 5).outcome, Outcome::heat_kernel_multiple);
    // N = ceil(max(2/2 + 4/2, 1/2 + 4/2)) = 3
    const auto v = verdict_cowling_price(h3, 0.25, 1.0, 2.0, 2.0, 2, 1);
    EXPECT_EQ(v.outcome, Outcome::heat_derivative);
    EXPECT_DOUBLE_EQ(v.deg_bound, 1.5);
    EXPECT_EQ(verdict_cowling_price(h3, 0.2, 1.0, 2.0, 2.0, 0, 0).outcome, Outcome::not_determined);
    EXPECT_THROW(verdict_cowling_price(h3, 0.25, 1.0, 0.5, 2.0, 0, 0), invalid_parameter);
    EXPECT_THROW(verdict_cowling_price(h3, 0.25, 1.0, 2.0, 2.0, -1, 0), invalid_parameter);
}

TEST(Verdict, CowlingPriceAtInfinityAgreesWithHardy) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.05, 2.0);
    for (const auto& s : registry_sweep())
        for (int i = 0; i < 100; ++i) {
            const double a = u(rng), b = (i % 3 == 0) ? 0.25 / a : u(rng);
            EXPECT_EQ(verdict_cowling_price(s, a, b, infinite_exponent, infinite_exponent, 0, 0).outcome,
                      verdict_hardy(s, a, b).outcome);
        }
}

TEST(Verdict, StrengthIsMonotoneInTheProduct) {
    const auto h3 = model_space("h3");
    std::vector<double> grid;
    for (double x = 0.05; x <= 2.0; x *= 1.25) grid.push_back(x);
    grid.push_back(0.25);
    grid.push_back(1.0);
    for (double a : grid)
        for (double b : grid)
            for (double k : {1.0, 1.5, 4.0}) {
                EXPECT_GE(strength(verdict_hardy(h3, k * a, b).outcome), strength(verdict_hardy(h3, a, b).outcome));
                EXPECT_GE(strength(verdict_gelfand_shilov(h3, k * a, b, 2.0, 4).outcome),
                          strength(verdict_gelfand_shilov(h3, a, b, 2.0, 4).outcome));
            }
}

TEST(Verdict, StrengthOrder) {
    EXPECT_GT(strength(Outcome::zero), strength(Outcome::heat_kernel_multiple));
    EXPECT_GT(strength(Outcome::heat_kernel_multiple), strength(Outcome::heat_derivative));
    EXPECT_GT(strength(Outcome::heat_derivative), strength(Outcome::not_determined));
}

TEST(Verdict, GoldenTable) {
    for (const auto& row : selftest::verdict_golden_rows()) EXPECT_EQ(row.run().outcome, row.expected) << row.label;
}

TEST(Verdict, HardyDependsOnlyOnTheProduct) {
    const auto h3 = model_space("h3");
    for (double a : {0.05, 0.125, 0.25, 0.7, 1.9})
        for (double b : {0.1, 0.5, 1.0, 2.0, 0.25 / a})
            for (double s : {0.5, 2.0, 3.0}) {
                const auto u = verdict_hardy(h3, a, b), v = verdict_hardy(h3, a * s * s, b / (s * s));
                EXPECT_EQ(u.outcome, v.outcome) << a << " " << b << " " << s;
                EXPECT_EQ(u.cited_case, v.cited_case);
            }
}

TEST(Verdict, GelfandShilovNeverWeakerThanReducedCowlingPrice) {
    // Cowling-Price at ab = 1/4 outside the n-window passes through Gelfand-Shilov with
    // alpha = sqrt(2a), beta = sqrt(2b) and N = ceil(max(N1, N2)).
    const auto h3 = model_space("h3");
    struct Weights {
        double p1, p2;
        int m, n;
    };
    const std::vector<Weights> weights{{2.0, 2.0, 2, 1}, {2.0, 2.0, 0, 0}, {3.0, 1.5, 6, 9}, {4.0, 1.0, 8, 2}};
    int checked = 0;
    for (double a : {0.125, 0.25, 0.5, 1.0})
        for (const auto& w : weights) {
            const double b = 0.25 / a;
            const auto cp = verdict_cowling_price(h3, a, b, w.p1, w.p2, w.m, w.n);
            ASSERT_EQ(cp.outcome, Outcome::heat_derivative);
            const double m_prime = 4.0, n_prime = 2.0 + h3.m_gamma + h3.m_2gamma;
            const int N = static_cast<int>(std::ceil(std::max(w.m / w.p1 + m_prime * (1.0 - 1.0 / w.p1),
                                                              w.n / w.p2 + n_prime * (1.0 - 1.0 / w.p2))));
            const auto gs = verdict_gelfand_shilov(h3, std::sqrt(2.0 * a), std::sqrt(2.0 * b), 2.0, N);
            EXPECT_GE(strength(gs.outcome), strength(cp.outcome)) << a << " N=" << N;
            ++checked;
        }
    EXPECT_EQ(checked, 16);
}
