#pragma once

// Heat kernel through the inverse Abel transform.
//
// The Abel transform of a radial function factors as W^1_{m_gamma/2} o W^2_{m_2gamma/2},
//   W^s_mu g(y) = Gamma(mu)^{-1} int_y^inf g(x) (cosh sx - cosh sy)^{mu-1} d(cosh sx),
// and its heat image is e^{-t rho^2} (4 pi t)^{-1/2} e^{-s^2/4t}. Integer orders invert
// to powers of D1 = -d/d(cosh x) and D2 = -d/d(cosh 2x); one half-integer order leaves a
// single W_{1/2} integral. Everything positive stays positive, so the kernel is accurate
// far into the tail where the spectral integral has cancelled to noise.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "harmonic/calibration.hpp"
#include "harmonic/error.hpp"
#include "harmonic/quadrature.hpp"
#include "harmonic/space.hpp"

namespace harmonic {

namespace detail {

struct AbelPlan {
    int d1 = 0;           // powers of D1
    int d2 = 0;           // powers of D2
    int outer_sigma = 0;  // 0: no outer integral; 1 or 2: W^sigma_{1/2}
};

inline std::optional<AbelPlan> abel_plan(const SpaceParams& s) {
    const int mg = s.m_gamma, m2 = s.m_2gamma;
    if (m2 == 0) {
        if (mg % 2 == 0) return AbelPlan{mg / 2, 0, 0};
        return AbelPlan{(mg + 1) / 2, 0, 1};
    }
    if (mg % 2 != 0) return std::nullopt;
    if (m2 % 2 == 0) return AbelPlan{mg / 2, m2 / 2, 0};
    return AbelPlan{mg / 2, (m2 + 1) / 2, 2};
}

// Taylor coefficients of acosh(u)^2 about u0 = cosh x, orders 0..n.
// (u^2 - 1) w'' + u w' = 2 gives the recurrence; near u = 1 the expansion
// about 1 (radius 2) is shifted instead.
inline std::vector<double> acosh_sq_jet(double x, int n) {
    std::vector<double> c(n + 1, 0.0);
    const double v1 = 2.0 * std::sinh(0.5 * x) * std::sinh(0.5 * x);  // cosh x - 1
    if (v1 < 0.25) {
        constexpr int M = 90;
        std::array<double, M + 1> b{};
        b[1] = 2.0;
        for (int k = 1; k < M; ++k) b[k + 1] = -double(k) * k * b[k] / ((k + 1.0) * (2.0 * k + 1.0));
        for (int k = 0; k <= n; ++k) {
            double sum = 0.0, binom = 1.0, p = 1.0;
            for (int m = k; m <= M; ++m) {
                sum += binom * b[m] * p;
                p *= v1;
                binom = binom * (m + 1) / (m + 1 - k);
            }
            c[k] = sum;
        }
        return c;
    }
    const double u0 = 1.0 + v1;
    const double sh = std::sinh(x);
    const double A = sh * sh;
    c[0] = x * x;
    if (n >= 1) c[1] = 2.0 * x / sh;
    for (int k = 0; k + 2 <= n; ++k)
        c[k + 2] = ((k == 0 ? 2.0 : 0.0) - u0 * (k + 1.0) * (2.0 * k + 1.0) * c[k + 1] - double(k) * k * c[k]) /
                   (A * (k + 2.0) * (k + 1.0));
    return c;
}

// [D2^{d2} D1^{d1} G](cosh x) for G = exp(-acosh(u)^2 / 4t), times e^{log_scale + x^2/4t}.
inline double abel_inner(const AbelPlan& plan, double t, double x, double log_scale) {
    const int n = plan.d1 + plan.d2;
    const auto w = acosh_sq_jet(x, n);
    std::vector<double> e(n + 1, 0.0);
    e[0] = std::exp(log_scale);
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += j * (-w[j] / (4.0 * t)) * e[k - j];
        e[k] = acc / k;
    }
    auto neg_derivative = [](std::vector<double>& f) {
        for (std::size_t k = 0; k + 1 < f.size(); ++k) f[k] = -(k + 1.0) * f[k + 1];
        f.pop_back();
    };
    for (int i = 0; i < plan.d1; ++i) neg_derivative(e);
    if (plan.d2 > 0) {
        const double u0 = std::cosh(x);
        for (int i = 0; i < plan.d2; ++i) {
            neg_derivative(e);
            // multiply by 1/(4u) expanded about u0
            std::vector<double> r(e.size());
            for (std::size_t k = 0; k < e.size(); ++k) {
                double acc = 0.0, inv = 1.0 / (4.0 * u0);
                for (std::size_t j = 0; j <= k; ++j) {
                    acc += inv * e[k - j];
                    inv *= -1.0 / u0;
                }
                r[k] = acc;
            }
            e = std::move(r);
        }
    }
    return e[0];
}

// W^sigma_{1/2} applied to the inner function, at y, scaled by e^{y^2/4t}.
inline double abel_outer(const AbelPlan& plan, double t, double y) {
    const double sigma = plan.outer_sigma;
    // integrand ~ exp(-(x^2 - y^2)/4t + 3 sigma (x - y)/4); stop 50 nats down
    const double qa = 1.0 / (4.0 * t), qb = y / (2.0 * t) - 0.75 * sigma;
    const double delta = (-qb + std::sqrt(qb * qb + 4.0 * qa * 50.0)) / (2.0 * qa);
    const auto nodes = composite_panels(0.0, std::sqrt(delta), 64, 8);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double s = nodes.x[i];
        const double x = y + s * s;
        const double g = abel_inner(plan, t, x, -(x * x - y * y) / (4.0 * t));
        const double gap = 2.0 * std::sinh(0.5 * sigma * (x + y)) * std::sinh(0.5 * sigma * s * s);
        sum += nodes.w[i] * g * sigma * std::sinh(sigma * x) * 2.0 * s / std::sqrt(gap);
    }
    return sum / std::sqrt(std::numbers::pi);
}

// log of the heat kernel without the overall constant.
inline double log_heat_abel_unscaled(const SpaceParams& s, double t, double r) {
    const auto plan = abel_plan(s);
    if (!plan) throw invalid_parameter("abel route unavailable for " + s.name);
    const double v = plan->outer_sigma == 0 ? abel_inner(*plan, t, r, 0.0) : abel_outer(*plan, t, r);
    if (!(v > 0.0)) return -INFINITY;
    return std::log(v) - t * s.rho * s.rho - 0.5 * std::log(4.0 * std::numbers::pi * t) - r * r / (4.0 * t);
}

// Radius past which h_t * density is negligible (46 nats below its peak).
inline double heat_mass_radius(const SpaceParams& s, double t) {
    // h_t(r) Delta(r) <= C exp(rho r - r^2/4t) up to polynomial factors
    return tail_radius([&](double r) {
        return s.rho * r - r * r / (4.0 * t) + (s.d_x - 1) * std::log1p(r) + 0.5 * std::log1p(r / t);
    });
}

}  // namespace detail

/// True when the heat kernel of `s` has an Abel-route evaluation
/// (m_gamma even, or m_2gamma = 0).
inline bool abel_route_supported(const SpaceParams& s) { return detail::abel_plan(s).has_value(); }

/// Constant K_X making the Abel-route kernel have unit mass at t = 1.
inline double abel_heat_scale(const SpaceParams& s) {
    return detail::cached_space_constant("abel_heat_scale", s, [&] {
        const double t = 1.0;
        QuadratureScheme q;
        const auto nodes = aligned_nodes(detail::heat_mass_radius(s, t), q);
        double mass = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double r = nodes.x[i];
            mass += nodes.w[i] * std::exp(detail::log_heat_abel_unscaled(s, t, r) + log_volume_density(s, r));
        }
        return 1.0 / mass;
    });
}

inline double log_heat_kernel_abel(const SpaceParams& s, double t, double r) {
    if (!(t > 0.0)) throw invalid_parameter("heat kernel: time must be > 0");
    if (r < 0.0) throw invalid_parameter("heat kernel: r must be >= 0");
    return std::log(abel_heat_scale(s)) + detail::log_heat_abel_unscaled(s, t, r);
}

inline double heat_kernel_abel(const SpaceParams& s, double t, double r) {
    return std::exp(log_heat_kernel_abel(s, t, r));
}

}  // namespace harmonic
