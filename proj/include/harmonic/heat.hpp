#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "harmonic/abel.hpp"
#include "harmonic/profiles.hpp"
#include "harmonic/specfun.hpp"
#include "harmonic/transforms.hpp"

namespace harmonic {

enum class HeatMethod { closed_form, quadrature, abel };

/// e^{-t (lambda^2 + rho^2)}.
inline cdouble heat_spectral(const SpaceParams& s, double time, SpectralParam lambda) {
    if (!(time > 0.0)) throw invalid_parameter("heat_spectral: time must be > 0");
    const cdouble l = lambda.value();
    return std::exp(-time * (l * l + s.rho * s.rho));
}

namespace detail {

inline void check_heat_args(double time, double r) {
    if (!(time > 0.0)) throw invalid_parameter("heat kernel: time must be > 0");
    if (!(r >= 0.0)) throw invalid_parameter("heat kernel: r must be >= 0");
}

inline double heat_kernel_quadrature(const SpaceParams& s, double time, double r, const QuadratureScheme& q) {
    const auto nodes = composite_nodes(0.0, spectral_extent(s, SpectralProfile::heat(time)), q);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double l = nodes.x[i];
        acc += nodes.w[i] * std::exp(-time * (l * l + s.rho * s.rho)) * plancherel_density(s, l) *
               spherical_function(s, l, r).real();
    }
    return inversion_scale(s) * acc;
}

}  // namespace detail

inline double heat_kernel(const SpaceParams& s, double time, double r, HeatMethod method,
                          const QuadratureScheme& q = {}) {
    detail::check_heat_args(time, r);
    switch (method) {
    case HeatMethod::closed_form:
        if (!s.is_h3()) throw invalid_parameter("heat_kernel: closed form exists only for h3, not " + s.name);
        return std::exp(log_heat_kernel_h3(time, r));
    case HeatMethod::quadrature:
        q.validate();
        return detail::heat_kernel_quadrature(s, time, r, q);
    case HeatMethod::abel:
        return heat_kernel_abel(s, time, r);
    }
    throw invalid_parameter("heat_kernel: unknown method");
}

/// Fastest accurate method: closed form on h3, the Abel route where available, else quadrature.
inline HeatMethod default_heat_method(const SpaceParams& s) {
    if (s.is_h3()) return HeatMethod::closed_form;
    if (abel_route_supported(s)) return HeatMethod::abel;
    return HeatMethod::quadrature;
}

inline double heat_kernel(const SpaceParams& s, double time, double r) {
    return heat_kernel(s, time, r, default_heat_method(s));
}

/// int_0^inf h_t(r) Delta(r) dr.
inline double total_mass(const SpaceParams& s, double time, const QuadratureScheme& q = {}) {
    q.validate();
    if (!(time > 0.0)) throw invalid_parameter("total_mass: time must be > 0");
    const double R = detail::heat_mass_radius(s, time);
    if (default_heat_method(s) == HeatMethod::quadrature) {
        const auto h = inverse_spherical_transform(s, SpectralProfile::heat(time), q, R);
        const auto& T = *std::get<radial::Tabulated>(h.descriptor).table;
        double m = 0.0;
        for (std::size_t i = 0; i < T.grid.size(); ++i) m += T.weights[i] * T.values[i] * volume_density(s, T.grid[i]);
        return m;
    }
    const auto nodes = aligned_nodes(R, q);
    const auto f = RadialProfile::heat(time);
    double m = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        m += nodes.w[i] * std::exp(log_abs(s, f, nodes.x[i]) + log_volume_density(s, nodes.x[i]));
    return m;
}

/// sup_r |h_{t+s}(r) - (inverse transform of h^_t h^_s)(r)| over r in [0, t_max].
inline double semigroup_defect(const SpaceParams& sp, double t, double s, const QuadratureScheme& q = {}) {
    q.validate();
    if (!(t > 0.0) || !(s > 0.0)) throw invalid_parameter("semigroup_defect: times must be > 0");
    const auto lam = detail::padded_nodes(spectral_extent(sp, SpectralProfile::heat(t + s)), q);
    std::vector<double> prod(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i)
        prod[i] = heat_spectral(sp, t, lam.x[i]).real() * heat_spectral(sp, s, lam.x[i]).real();
    const auto conv = inverse_spherical_transform(sp, SpectralProfile::tabulated(lam.x, prod, lam.w), q);
    const auto& T = *std::get<radial::Tabulated>(conv.descriptor).table;
    const auto method = default_heat_method(sp);
    double defect = 0.0;
    for (std::size_t j = 0; j < T.grid.size(); ++j)
        defect = std::max(defect, std::abs(heat_kernel(sp, t + s, T.grid[j], method, q) - T.values[j]));
    return defect;
}

struct AnkerRatio {
    double sup_ratio = 0.0;
    double argmax_r = 0.0;
    std::vector<double> ratios;
};

/// h_t(r) / [t^{-1/2} e^{-rho^2 t - rho r - r^2/4t} (1 + r^2)^{(d_X - 1)/2}] over a grid.
inline AnkerRatio anker_ratio(const SpaceParams& s, double time, std::span<const double> r_grid) {
    if (!(time > 0.0)) throw invalid_parameter("anker_ratio: time must be > 0");
    AnkerRatio out;
    const auto f = RadialProfile::heat(time);
    for (double r : r_grid) {
        const double log_bound = -0.5 * std::log(time) - s.rho * s.rho * time - s.rho * r - r * r / (4.0 * time) +
                                 0.5 * (s.d_x - 1) * std::log1p(r * r);
        const double ratio = std::exp(log_abs(s, f, r) - log_bound);
        out.ratios.push_back(ratio);
        if (ratio > out.sup_ratio) {
            out.sup_ratio = ratio;
            out.argmax_r = r;
        }
    }
    return out;
}

/// Spectral output representation sum_{delta, j} P'_{delta,j}(lambda^2) Q_delta(lambda) e^{-alpha lambda^2}.
struct HeatDerivativeForm {
    double alpha = 1.0;
    // (delta, j) -> coefficients of P' in powers of lambda^2
    std::map<std::pair<KTypeIndex, int>, EvenPolynomial> terms;

    void validate(std::optional<int> beurling_d = std::nullopt, int d_x = 0) const {
        if (!(alpha > 0.0)) throw invalid_parameter("HeatDerivativeForm: alpha must be > 0");
        for (const auto& [key, poly] : terms) {
            if (!key.first.valid()) throw invalid_parameter("HeatDerivativeForm: invalid K-type");
            if (key.second < 1) throw invalid_parameter("HeatDerivativeForm: j must be >= 1");
            if (beurling_d && !(key.first.p < 0.5 * (*beurling_d - d_x)))
                throw invalid_parameter("HeatDerivativeForm: K-type p = " + std::to_string(key.first.p) +
                                        " not below (d - d_X)/2");
        }
    }
};

inline cdouble heat_derivative_eval(const HeatDerivativeForm& form, const SpaceParams& s, SpectralParam lambda) {
    form.validate();
    const cdouble l = lambda.value();
    const cdouble l2 = l * l;
    cdouble acc = 0.0;
    for (const auto& [key, poly] : form.terms) {
        cdouble p = 0.0;
        for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) p = p * l2 + *it;
        acc += p * kostant_polynomial(s, key.first, lambda);
    }
    return acc * std::exp(-form.alpha * l2);
}

/// Radial function whose spherical transform is the trivial-K-type part of the form.
inline RadialProfile spatial_profile(const HeatDerivativeForm& form, const SpaceParams& s, const QuadratureScheme& q = {}) {
    form.validate();
    EvenPolynomial total{{}};
    for (const auto& [key, poly] : form.terms) {
        if (key.first != KTypeIndex{0, 0})
            throw invalid_parameter("spatial_profile: only the trivial K-type can be synthesized radially");
        if (poly.coeffs.size() > total.coeffs.size()) total.coeffs.resize(poly.coeffs.size(), 0.0);
        for (std::size_t k = 0; k < poly.coeffs.size(); ++k) total.coeffs[k] += poly.coeffs[k];
    }
    if (total.degree() < 0) return RadialProfile::zero();
    return inverse_spherical_transform(s, SpectralProfile::closed_form(total, form.alpha), q);
}

}  // namespace harmonic
