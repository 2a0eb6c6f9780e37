#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "harmonic/quadrature.hpp"
#include "harmonic/spline.hpp"

using namespace harmonic;

TEST(Quadrature, GaussLegendreIsExactForPolynomials) {
    for (int n : {1, 2, 5, 6, 12, 32}) {
        const auto& r = gauss_legendre(n);
        ASSERT_EQ(r.nodes.size(), static_cast<std::size_t>(n));
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
            const double exact = (k % 2) ? 0.0 : 2.0 / (k + 1);
            EXPECT_NEAR(s, exact, 1e-14) << "n=" << n << " k=" << k;
        }
        for (int i = 1; i < n; ++i) EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
    }
}

TEST(Quadrature, CompositeRuleIntegratesSmoothFunctions) {
    const QuadratureScheme q;
    const auto ns = composite_nodes(0.0, 10.0, q);
    EXPECT_NEAR(ns.integrate([](double x) { return std::exp(-x * x); }), 0.5 * std::sqrt(std::numbers::pi), 1e-14);
    EXPECT_NEAR(ns.integrate([](double x) { return std::cos(3.0 * x); }), std::sin(30.0) / 3.0, 1e-13);
    EXPECT_TRUE(composite_nodes(1.0, 1.0, q).x.empty());
}

TEST(Quadrature, AlignedNodesSplitAtIntegerRadii) {
    QuadratureScheme q;
    q.panels_per_unit = 4;
    const auto ns = aligned_nodes(3.1, q);
    EXPECT_NEAR(ns.integrate([](double) { return 1.0; }), 3.25, 1e-14);
    double below = 0.0;
    for (std::size_t i = 0; i < ns.size(); ++i)
        if (ns.x[i] < 2.0) below += ns.w[i];
    EXPECT_NEAR(below, 2.0, 1e-14);
}

TEST(Quadrature, GradedNodesResolveEndpointSingularity) {
    auto err = [](int levels) {
        return std::abs(graded_nodes(1.0, levels, 12).integrate([](double x) { return 1.0 / std::sqrt(x); }) - 2.0);
    };
    // the innermost panel dominates, so the error halves with every two levels
    EXPECT_LT(err(40), 1e-7);
    EXPECT_LT(err(40), err(20) / 500.0);
}

TEST(Quadrature, SchemeValidation) {
    QuadratureScheme q;
    EXPECT_NO_THROW(q.validate());
    q.gauss_points = 0;
    EXPECT_THROW(q.validate(), invalid_parameter);
    q = {};
    q.t_max = 0.5;
    EXPECT_THROW(q.validate(), invalid_parameter);
    q = {};
    q.rel_tol = 0.0;
    EXPECT_THROW(q.validate(), invalid_parameter);
}

TEST(Quadrature, TailRadius) {
    const double r = tail_radius([](double x) { return -x * x; });
    EXPECT_GE(r * r, 46.0);
    EXPECT_LT(r, 9.0);
    EXPECT_THROW(tail_radius([](double) { return 0.0; }, 46.0, 1.0, 50.0), truncation_error);
}

TEST(Spline, InterpolatesAndReproducesCubics) {
    std::vector<double> x, y;
    for (int i = 0; i <= 40; ++i) {
        x.push_back(0.1 * i);
        y.push_back(std::cos(0.1 * i));
    }
    CubicSpline s(x, y, true);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(s(x[i]), y[i], 1e-15);
    // clamped start matches cos'(0) = 0; the natural end costs accuracy only near x = 4
    for (double t = 0.0; t <= 3.0; t += 0.013) EXPECT_NEAR(s(t), std::cos(t), 2e-6);
    EXPECT_NEAR(s(3.95), std::cos(3.95), 1e-3);
    EXPECT_THROW(s(4.5), invalid_parameter);
    EXPECT_THROW(CubicSpline({0.0, 0.0, 1.0}, {1.0, 2.0, 3.0}), invalid_parameter);
}
