#pragma once

// Scalar special functions on a rank-one space: complex log-gamma, Pochhammer
// symbols, Kostant polynomials, the Harish-Chandra c-function and Plancherel
// density, and the elementary spherical functions phi_lambda (Jacobi functions
// with parameters (a, b) = (jacobi_a, jacobi_b)).

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "harmonic/error.hpp"
#include "harmonic/space.hpp"

namespace harmonic {

using cdouble = std::complex<double>;

/// Point lambda of the complexified dual a*_C = C.
struct SpectralParam {
    double re = 0.0;
    double im = 0.0;

    constexpr SpectralParam() = default;
    constexpr SpectralParam(double r) : re(r) {}  // NOLINT: real lambda is the common case
    constexpr SpectralParam(double r, double i) : re(r), im(i) {}
    SpectralParam(cdouble z) : re(z.real()), im(z.imag()) {}  // NOLINT

    cdouble value() const noexcept { return {re, im}; }
    bool in_strip(double r) const noexcept { return std::abs(im) <= r; }
};

// ---------------------------------------------------------------------------
// Gamma-type functions

/// Principal branch of log Gamma (analytic continuation off the negative real axis).
inline cdouble log_gamma(cdouble z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) throw pole_error(z);

    if (z.real() < 0.5) {
        // shift into the Lanczos region: log G(z) = log G(z + n) - sum log(z + k)
        const int n = static_cast<int>(std::ceil(0.5 - z.real()));
        cdouble acc = 0.0;
        for (int k = 0; k < n; ++k) acc += std::log(z + static_cast<double>(k));
        return log_gamma(z + static_cast<double>(n)) - acc;
    }

    // Lanczos, g = 7, n = 9
    static constexpr std::array<double, 9> p = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    constexpr double g = 7.0;
    const cdouble zm = z - 1.0;
    cdouble x = p[0];
    for (int i = 1; i < 9; ++i) x += p[i] / (zm + static_cast<double>(i));
    const cdouble t = zm + g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (zm + 0.5) * std::log(t) - t + std::log(x);
}

/// Rising factorial z (z+1) ... (z+m-1); the empty product is 1.
inline cdouble pochhammer(cdouble z, int m) {
    if (m < 0) throw invalid_parameter("pochhammer: m must be >= 0");
    cdouble r = 1.0;
    for (int k = 0; k < m; ++k) r *= z + static_cast<double>(k);
    return r;
}

/// Kostant polynomial Q_delta(lambda); a polynomial of degree p_delta in lambda.
inline cdouble kostant_polynomial(const SpaceParams& s, KTypeIndex delta, SpectralParam lambda) {
    if (!delta.valid())
        throw invalid_parameter("kostant_polynomial: invalid K-type (" + std::to_string(delta.p) + "," +
                                std::to_string(delta.q) + ")");
    const cdouble il = cdouble(0.0, 1.0) * lambda.value();
    const double a = s.jacobi_a, b = s.jacobi_b;
    return pochhammer(0.5 * (a + b + 1.0 + il), (delta.p + delta.q) / 2) *
           pochhammer(0.5 * (a - b + 1.0 + il), (delta.p - delta.q) / 2);
}

/// Harish-Chandra c-function for the Jacobi normalization.
inline cdouble c_function(const SpaceParams& s, SpectralParam lambda) {
    const cdouble il = cdouble(0.0, 1.0) * lambda.value();
    const double a = s.jacobi_a, b = s.jacobi_b;
    const cdouble logc = (s.rho - il) * std::log(2.0) + log_gamma(a + 1.0) + log_gamma(il) -
                         log_gamma(0.5 * (il + s.rho)) - log_gamma(0.5 * (il + a - b + 1.0));
    return std::exp(logc);
}

/// mu(lambda) = |c(lambda)|^{-2}; exactly lambda^2 on h3.
inline double plancherel_density(const SpaceParams& s, double lambda) {
    if (lambda < 0.0) throw invalid_parameter("plancherel_density: lambda must be >= 0");
    if (s.is_h3()) return lambda * lambda;
    if (lambda == 0.0) return 0.0;
    const double a = s.jacobi_a, b = s.jacobi_b;
    const cdouble il(0.0, lambda);
    const double log_abs_c = s.rho * std::log(2.0) + log_gamma(a + 1.0).real() + log_gamma(il).real() -
                             log_gamma(0.5 * (il + s.rho)).real() - log_gamma(0.5 * (il + a - b + 1.0)).real();
    return std::exp(-2.0 * log_abs_c);
}

inline double log_plancherel_density(const SpaceParams& s, double lambda) {
    if (lambda <= 0.0) return -INFINITY;
    if (s.is_h3()) return 2.0 * std::log(lambda);
    return std::log(plancherel_density(s, lambda));
}

// ---------------------------------------------------------------------------
// Spherical functions

namespace detail {

// sin(x)/x for complex x, series near 0
inline cdouble sinc(cdouble x) {
    if (std::abs(x) < 1e-4) {
        const cdouble x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

inline double t_over_sinh(double t) {
    if (t == 0.0) return 1.0;
    if (std::abs(t) < 1e-4) return 1.0 - t * t / 6.0;
    return t / std::sinh(t);
}

inline cdouble h3_spherical(cdouble lambda, double t) {
    if (t == 0.0) return 1.0;
    return sinc(lambda * t) * t_over_sinh(t);
}

struct PhiAndDerivative {
    cdouble phi;
    cdouble dphi;
};

// phi_lambda(t) = (cosh t)^{-rho - i lambda} 2F1((rho + i lambda)/2, (a - b + 1 + i lambda)/2; a + 1; tanh^2 t)
inline PhiAndDerivative jacobi_series(const SpaceParams& s, cdouble lambda, double t) {
    if (t == 0.0) return {1.0, 0.0};
    const cdouble il = cdouble(0.0, 1.0) * lambda;
    const cdouble pa = 0.5 * (s.rho + il);
    const cdouble pb = 0.5 * (s.jacobi_a - s.jacobi_b + 1.0 + il);
    const double pc = s.jacobi_a + 1.0;
    const double th = std::tanh(t);
    const double z = th * th;

    cdouble term = 1.0, sum = 1.0, dsum = 0.0;  // dsum = dF/dz
    for (int k = 0; k < 5000; ++k) {
        const cdouble ratio = (pa + double(k)) * (pb + double(k)) / ((pc + k) * (k + 1.0));
        const cdouble next_over_z = term * ratio;  // coefficient times z^k
        term = next_over_z * z;
        sum += term;
        dsum += next_over_z * double(k + 1);
        if (k > 4 && std::abs(term) <= 1e-17 * std::abs(sum) && std::abs(next_over_z) * (k + 1) <= 1e-17 * (std::abs(dsum) + 1e-300))
            break;
    }
    const double logcosh = std::log(std::cosh(t));
    const cdouble pref = std::exp(-2.0 * pa * logcosh);
    const cdouble phi = pref * sum;
    const double dz = 2.0 * th * (1.0 - z);
    const cdouble dphi = -2.0 * pa * th * phi + pref * dsum * dz;
    return {phi, dphi};
}

// The radial eigen-equation for psi = e^{rho t} phi:
//   psi'' = -q(t) psi' - (lambda^2 - rho q(t)) psi,
//   q(t) = (2a+1)(coth t - 1) + (2b+1)(tanh t - 1),
// whose coefficients tend to those of psi'' + lambda^2 psi = 0.
template <class Scalar>
struct ScaledJacobiSystem {
    double two_a_plus_1;
    double two_b_plus_1;
    double rho;
    Scalar lambda2;

    using state = std::array<Scalar, 2>;

    void operator()(const state& x, state& dxdt, double t) const {
        const double e = std::expm1(2.0 * t);
        const double q = two_a_plus_1 * (2.0 / e) - two_b_plus_1 * (2.0 / (e + 2.0));
        dxdt[0] = x[1];
        dxdt[1] = -q * x[1] - (lambda2 - rho * q) * x[0];
    }
};

inline double series_switch_point(cdouble lambda) {
    const double m = std::abs(lambda);
    return m > 4.0 ? 4.0 / m : 1.0;
}

constexpr double ode_abs_tol = 1e-14;
constexpr double ode_rel_tol = 1e-13;

template <class Scalar>
void integrate_scaled_jacobi(const SpaceParams& s, Scalar lambda2, double t0, std::array<Scalar, 2> x,
                             std::span<const double> ts, std::span<cdouble> out) {
    namespace odeint = boost::numeric::odeint;
    using system_t = ScaledJacobiSystem<Scalar>;
    system_t sys{2.0 * s.jacobi_a + 1.0, 2.0 * s.jacobi_b + 1.0, s.rho, lambda2};
    std::vector<double> times;
    times.reserve(ts.size() + 1);
    times.push_back(t0);
    times.insert(times.end(), ts.begin(), ts.end());
    using stepper_t = odeint::runge_kutta_fehlberg78<typename system_t::state>;
    auto stepper = odeint::make_controlled(ode_abs_tol, ode_rel_tol, stepper_t());
    std::size_t idx = 0;
    odeint::integrate_times(stepper, sys, x, times.begin(), times.end(), 1e-3,
                            [&](const typename system_t::state& st, double) {
                                if (idx > 0) out[idx - 1] = st[0];
                                ++idx;
                            });
}

// Fills out[j] = phi_lambda(ts[j]) * e^{rho ts[j]} (scaled) for ascending ts.
// Real lambda (real lambda^2) integrates a real system.
inline void scaled_jacobi_profile(const SpaceParams& s, cdouble lambda, std::span<const double> ts,
                                  std::span<cdouble> out) {
    const double ts_switch = series_switch_point(lambda);
    std::size_t j = 0;
    for (; j < ts.size() && ts[j] <= ts_switch; ++j)
        out[j] = jacobi_series(s, lambda, ts[j]).phi * std::exp(s.rho * ts[j]);
    if (j == ts.size()) return;

    const auto start = jacobi_series(s, lambda, ts_switch);
    const double scale = std::exp(s.rho * ts_switch);
    const cdouble x0 = start.phi * scale, x1 = (start.dphi + s.rho * start.phi) * scale;
    const cdouble lambda2 = lambda * lambda;
    if (lambda.imag() == 0.0 || lambda.real() == 0.0)
        integrate_scaled_jacobi<double>(s, lambda2.real(), ts_switch, {x0.real(), x1.real()}, ts.subspan(j),
                                        out.subspan(j));
    else
        integrate_scaled_jacobi<cdouble>(s, lambda2, ts_switch, {x0, x1}, ts.subspan(j), out.subspan(j));
}

}  // namespace detail

/// Elementary spherical function phi_lambda(a_t). Even in lambda, phi_lambda(0) = 1.
inline cdouble spherical_function(const SpaceParams& s, SpectralParam lambda, double t) {
    if (t < 0.0) throw invalid_parameter("spherical_function: t must be >= 0");
    const cdouble lam = lambda.value();
    if (t == 0.0) return 1.0;
    if (s.is_h3()) return detail::h3_spherical(lam, t);
    if (t <= detail::series_switch_point(lam)) return detail::jacobi_series(s, lam, t).phi;
    cdouble out;
    const double tt = t;
    detail::scaled_jacobi_profile(s, lam, std::span<const double>(&tt, 1), std::span<cdouble>(&out, 1));
    return out * std::exp(-s.rho * t);
}

/// phi_lambda(t_j) for one lambda and ascending radii; one ODE sweep for generic spaces.
inline std::vector<cdouble> spherical_function_profile(const SpaceParams& s, SpectralParam lambda,
                                                       std::span<const double> ts) {
    std::vector<cdouble> out(ts.size());
    if (s.is_h3()) {
        for (std::size_t j = 0; j < ts.size(); ++j) out[j] = detail::h3_spherical(lambda.value(), ts[j]);
        return out;
    }
    detail::scaled_jacobi_profile(s, lambda.value(), ts, out);
    for (std::size_t j = 0; j < ts.size(); ++j) out[j] *= std::exp(-s.rho * ts[j]);
    return out;
}

/// Ground spherical function Xi = phi_0.
inline double xi(const SpaceParams& s, double t) { return spherical_function(s, 0.0, t).real(); }

/// log Xi(t_j) for ascending radii, valid far beyond the range where Xi underflows.
inline std::vector<double> log_xi_profile(const SpaceParams& s, std::span<const double> ts) {
    std::vector<double> out(ts.size());
    if (s.is_h3()) {
        for (std::size_t j = 0; j < ts.size(); ++j)
            out[j] = ts[j] == 0.0 ? 0.0 : std::log(ts[j]) - detail::log_two_sinh(ts[j]) + std::log(2.0);
        return out;
    }
    std::vector<cdouble> scaled(ts.size());
    detail::scaled_jacobi_profile(s, 0.0, ts, scaled);
    for (std::size_t j = 0; j < ts.size(); ++j) out[j] = std::log(scaled[j].real()) - s.rho * ts[j];
    return out;
}

}  // namespace harmonic
