#pragma once

// Structure constants and radial geometry of rank-one noncompact symmetric
// spaces X = G/K. Everything is driven by the two root multiplicities
// (m_gamma, m_2gamma); radii are measured in the unit fixed by gamma(H_gamma) = 1.

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic/error.hpp"

namespace harmonic {

struct SpaceParams {
    int m_gamma = 0;
    int m_2gamma = 0;
    double rho = 0.0;       // (m_gamma + 2 m_2gamma) / 2
    int d_x = 0;            // m_gamma + m_2gamma + 1 = dim X
    double jacobi_a = 0.0;  // (m_gamma + m_2gamma - 1) / 2
    double jacobi_b = 0.0;  // (m_2gamma - 1) / 2
    // Normalizes the Cartan density so that it behaves like
    // vol(S^{d_x-1}) t^{d_x-1} near the origin.
    double volume_scale = 1.0;
    std::string name;

    /// Multiplicities (2, 0): the hyperbolic 3-space SL(2,C)/SU(2), where
    /// phi_lambda and the heat kernel have elementary closed forms.
    bool is_h3() const noexcept { return m_gamma == 2 && m_2gamma == 0; }

    friend bool operator==(const SpaceParams& a, const SpaceParams& b) {
        return a.m_gamma == b.m_gamma && a.m_2gamma == b.m_2gamma;
    }
};

namespace detail {

// Area of the unit sphere S^{n-1} in R^n.
inline double unit_sphere_area(int n) {
    return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

}  // namespace detail

inline SpaceParams make_space(int m_gamma, int m_2gamma, std::string name = {}) {
    if (m_gamma < 1) throw invalid_parameter("make_space: m_gamma must be >= 1 (degenerate root system)");
    if (m_2gamma < 0) throw invalid_parameter("make_space: m_2gamma must be >= 0");
    SpaceParams s;
    s.m_gamma = m_gamma;
    s.m_2gamma = m_2gamma;
    s.rho = (m_gamma + 2.0 * m_2gamma) / 2.0;
    s.d_x = m_gamma + m_2gamma + 1;
    s.jacobi_a = (m_gamma + m_2gamma - 1.0) / 2.0;
    s.jacobi_b = (m_2gamma - 1.0) / 2.0;
    // (2 sinh t)^{m_gamma} (2 sinh 2t)^{m_2gamma} ~ 2^{m_gamma} 4^{m_2gamma} t^{d_x - 1}
    s.volume_scale = detail::unit_sphere_area(s.d_x) / (std::pow(2.0, m_gamma) * std::pow(4.0, m_2gamma));
    s.name = name.empty() ? "custom(" + std::to_string(m_gamma) + "," + std::to_string(m_2gamma) + ")"
                          : std::move(name);
    return s;
}

enum class ModelFamily { h3, real_hyperbolic, complex_hyperbolic, quaternionic_hyperbolic };

// The multiplicity table below is standard rank-one structure theory; only h3
// is instantiated explicitly in the source material, the families are extra data.
inline SpaceParams model_space(ModelFamily family, int n = 0) {
    switch (family) {
    case ModelFamily::h3:
        // SL(2,C)/SU(2): phi_lambda(a_t) = sin(lambda t) / (lambda sinh t) forces (2, 0).
        return make_space(2, 0, "h3");
    case ModelFamily::real_hyperbolic:
        if (n < 2) throw invalid_parameter("real_hyperbolic(n) needs n >= 2");
        return make_space(n - 1, 0, "real_hyperbolic(" + std::to_string(n) + ")");
    case ModelFamily::complex_hyperbolic:
        if (n < 2) throw invalid_parameter("complex_hyperbolic(n) needs n >= 2");
        return make_space(2 * (n - 1), 1, "complex_hyperbolic(" + std::to_string(n) + ")");
    case ModelFamily::quaternionic_hyperbolic:
        if (n < 2) throw invalid_parameter("quaternionic_hyperbolic(n) needs n >= 2");
        return make_space(4 * (n - 1), 3, "quaternionic_hyperbolic(" + std::to_string(n) + ")");
    }
    throw invalid_parameter("model_space: unknown family");
}

/// Parses "h3", "real_hyperbolic(3)", "complex_hyperbolic(2)",
/// "quaternionic_hyperbolic(2)" or "custom(m_gamma,m_2gamma)".
inline SpaceParams model_space(std::string_view name) {
    if (name == "h3") return model_space(ModelFamily::h3);
    auto open = name.find('(');
    if (open == std::string_view::npos || name.back() != ')')
        throw invalid_parameter("unknown space '" + std::string(name) + "'");
    auto family = name.substr(0, open);
    auto args = name.substr(open + 1, name.size() - open - 2);

    auto parse_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw invalid_parameter("bad integer '" + std::string(s) + "' in space name");
        return v;
    };

    if (family == "custom") {
        auto comma = args.find(',');
        if (comma == std::string_view::npos) throw invalid_parameter("custom(m_gamma,m_2gamma) expected");
        return make_space(parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)));
    }
    int n = parse_int(args);
    if (family == "real_hyperbolic") return model_space(ModelFamily::real_hyperbolic, n);
    if (family == "complex_hyperbolic") return model_space(ModelFamily::complex_hyperbolic, n);
    if (family == "quaternionic_hyperbolic") return model_space(ModelFamily::quaternionic_hyperbolic, n);
    throw invalid_parameter("unknown space family '" + std::string(family) + "'");
}

/// The spaces exercised by registry-wide sweeps.
inline std::vector<SpaceParams> registry_sweep() {
    return {model_space(ModelFamily::h3),
            model_space(ModelFamily::real_hyperbolic, 2),
            model_space(ModelFamily::real_hyperbolic, 4),
            model_space(ModelFamily::complex_hyperbolic, 2),
            model_space(ModelFamily::quaternionic_hyperbolic, 2)};
}

/// K-type label (p, q) of a class-one representation of K.
struct KTypeIndex {
    int p = 0;
    int q = 0;

    static bool is_valid(int p, int q) noexcept {
        return p >= 0 && p + q >= 0 && p - q >= 0 && (p + q) % 2 == 0;
    }
    bool valid() const noexcept { return is_valid(p, q); }

    static KTypeIndex make(int p, int q) {
        if (!is_valid(p, q))
            throw invalid_parameter("invalid K-type (" + std::to_string(p) + "," + std::to_string(q) + ")");
        return {p, q};
    }

    friend auto operator<=>(const KTypeIndex&, const KTypeIndex&) = default;
};

namespace detail {

// log(2 sinh x) for x > 0, without overflow.
inline double log_two_sinh(double x) {
    if (x > 20.0) return x + std::log1p(-std::exp(-2.0 * x));
    return std::log(2.0 * std::sinh(x));
}

}  // namespace detail

/// (2 sinh t)^{m_gamma} (2 sinh 2t)^{m_2gamma}, the unnormalized radial density.
inline double cartan_density(const SpaceParams& s, double t) {
    if (t < 0.0) throw invalid_parameter("cartan_density: t must be >= 0");
    if (t == 0.0) return 0.0;
    return std::pow(2.0 * std::sinh(t), s.m_gamma) * std::pow(2.0 * std::sinh(2.0 * t), s.m_2gamma);
}

/// Radial part of the invariant measure on X in polar coordinates.
inline double volume_density(const SpaceParams& s, double t) {
    return s.volume_scale * cartan_density(s, t);
}

inline double log_volume_density(const SpaceParams& s, double t) {
    if (t <= 0.0) return -INFINITY;
    return std::log(s.volume_scale) + s.m_gamma * detail::log_two_sinh(t) +
           s.m_2gamma * detail::log_two_sinh(2.0 * t);
}

}  // namespace harmonic
