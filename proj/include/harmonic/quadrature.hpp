#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "harmonic/error.hpp"

namespace harmonic {

/// Knobs shared by every integral in the library.
struct QuadratureScheme {
    int panels_per_unit = 16;
    int gauss_points = 6;      // Gauss-Legendre nodes per panel
    double t_max = 40.0;       // default radial truncation
    double lambda_max = 12.0;  // default spectral truncation
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;

    void validate() const {
        if (panels_per_unit <= 0 || gauss_points <= 0 || gauss_points > 32)
            throw invalid_parameter("QuadratureScheme: panels_per_unit and gauss_points must be positive (gauss_points <= 32)");
        if (!(t_max >= 1.0) || !(lambda_max >= 1.0))
            throw invalid_parameter("QuadratureScheme: t_max and lambda_max must be >= 1");
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw invalid_parameter("QuadratureScheme: tolerances must be positive");
    }
};

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

namespace detail {

inline GaussRule build_gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0, p1 = 0.0;
        for (int k = 1; k <= n; ++k) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
        }
        dp = n * (x * p0 - p1) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace detail

/// n-point Gauss-Legendre rule on [-1, 1]; rules are built once and shared.
inline const GaussRule& gauss_legendre(int n) {
    static const std::array<GaussRule, 33> rules = [] {
        std::array<GaussRule, 33> r;
        for (int k = 1; k <= 32; ++k) r[k] = detail::build_gauss_legendre(k);
        return r;
    }();
    if (n < 1 || n > 32) throw invalid_parameter("gauss_legendre: 1 <= n <= 32");
    return rules[n];
}

/// Nodes and weights of a composite rule, ordered left to right.
struct NodeSet {
    std::vector<double> x;
    std::vector<double> w;

    std::size_t size() const noexcept { return x.size(); }

    template <class F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
        return s;
    }
};

/// Composite Gauss-Legendre on [a, b] with `panels` equal panels.
inline NodeSet composite_panels(double a, double b, int panels, int points) {
    const auto& rule = gauss_legendre(points);
    NodeSet ns;
    ns.x.reserve(static_cast<std::size_t>(panels) * points);
    ns.w.reserve(ns.x.capacity());
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        for (int i = 0; i < points; ++i) {
            ns.x.push_back(mid + 0.5 * h * rule.nodes[i]);
            ns.w.push_back(0.5 * h * rule.weights[i]);
        }
    }
    return ns;
}

/// Composite rule on [a, b] whose panel width is at most 1/panels_per_unit.
inline NodeSet composite_nodes(double a, double b, const QuadratureScheme& q) {
    if (!(b > a)) return {};
    int panels = std::max(1, static_cast<int>(std::ceil((b - a) * q.panels_per_unit - 1e-9)));
    return composite_panels(a, b, panels, q.gauss_points);
}

/// Composite rule on [0, R] with panels aligned to multiples of 1/panels_per_unit,
/// so that truncations at integer radii split the rule exactly.
inline NodeSet aligned_nodes(double R, const QuadratureScheme& q) {
    int panels = std::max(1, static_cast<int>(std::ceil(R * q.panels_per_unit - 1e-9)));
    return composite_panels(0.0, static_cast<double>(panels) / q.panels_per_unit, panels, q.gauss_points);
}

/// Geometrically graded composite rule on [0, b] that resolves endpoint
/// behaviour at 0 (used for integrable endpoint singularities after substitution).
inline NodeSet graded_nodes(double b, int levels, int points) {
    NodeSet ns;
    const auto& rule = gauss_legendre(points);
    std::vector<double> breaks;
    breaks.push_back(0.0);
    for (int k = levels; k >= 1; --k) breaks.push_back(b * std::ldexp(1.0, -k));
    breaks.push_back(b);
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double lo = breaks[p], hi = breaks[p + 1];
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int i = 0; i < points; ++i) {
            ns.x.push_back(mid + half * rule.nodes[i]);
            ns.w.push_back(half * rule.weights[i]);
        }
    }
    return ns;
}

/// Radius beyond which a log-magnitude profile stays `drop` nats below its
/// running peak, sampled every `step`. Profiles must decay eventually.
template <class F>
double tail_radius(F&& log_f, double drop = 46.0, double step = 0.25, double limit = 1e4) {
    double peak = -INFINITY;
    int below = 0;
    for (double x = step; x <= limit; x += step) {
        const double v = log_f(x);
        if (v > peak) peak = v;
        below = (v < peak - drop) ? below + 1 : 0;
        if (below >= 4) return x;
    }
    throw truncation_error("tail_radius: profile does not decay within " + std::to_string(limit), 1.0);
}

}  // namespace harmonic
