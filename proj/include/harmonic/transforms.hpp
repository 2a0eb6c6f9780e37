#pragma once

// Spherical transform f^(lambda) = int_0^inf f(t) phi_lambda(t) Delta(t) dt, its inverse
// f(t) = C0 int_0^inf f^(lambda) phi_lambda(t) mu(lambda) dlambda, the Euclidean Fourier
// transform on the line (forward kernel e^{-i lambda t}, inverse carries 1/2pi),
// convolution on the line, and the Abel transform A f := F^{-1} f^.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "harmonic/calibration.hpp"
#include "harmonic/profiles.hpp"
#include "harmonic/quadrature.hpp"
#include "harmonic/specfun.hpp"

namespace harmonic {

namespace detail {

// Composite rule on [0, R] with zero-weight endpoints appended, so tabulations
// built on it cover the closed interval.
inline NodeSet padded_nodes(double R, const QuadratureScheme& q) {
    NodeSet inner = composite_nodes(0.0, R, q);
    NodeSet ns;
    ns.x.reserve(inner.size() + 2);
    ns.w.reserve(inner.size() + 2);
    ns.x.push_back(0.0);
    ns.w.push_back(0.0);
    ns.x.insert(ns.x.end(), inner.x.begin(), inner.x.end());
    ns.w.insert(ns.w.end(), inner.w.begin(), inner.w.end());
    ns.x.push_back(R);
    ns.w.push_back(0.0);
    return ns;
}

inline double sign_of(const SpaceParams& s, const RadialProfile& f, double t) {
    if (std::holds_alternative<radial::Heat>(f.descriptor) || std::holds_alternative<radial::Gaussian>(f.descriptor))
        return 1.0;
    const double v = value(s, f, t);
    return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
}

// Radial quadrature nodes for f and the weighted samples f(t) Delta(t).
struct RadialSamples {
    NodeSet nodes;
    std::vector<double> f_delta;
};

inline RadialSamples radial_samples(const SpaceParams& s, const RadialProfile& f, const QuadratureScheme& q) {
    RadialSamples rs;
    if (auto* tab = std::get_if<radial::Tabulated>(&f.descriptor)) {
        const auto& T = *tab->table;
        if (T.has_weights()) {
            rs.nodes.x = T.grid;
            rs.nodes.w = T.weights;
        } else {
            rs.nodes = padded_nodes(T.back(), q);
        }
        double peak = 0.0;
        for (double x : rs.nodes.x) {
            const double v = T(x) * volume_density(s, x);
            rs.f_delta.push_back(v);
            peak = std::max(peak, std::abs(v));
        }
        const double tail = std::abs(T(T.back()) * volume_density(s, T.back()));
        if (peak > 0.0 && tail > q.abs_tol + q.rel_tol * peak)
            throw truncation_error("radial tabulation does not decay by its last grid point", tail / peak);
        return rs;
    }
    rs.nodes = composite_nodes(0.0, radial_extent(s, f), q);
    rs.f_delta.reserve(rs.nodes.size());
    for (double x : rs.nodes.x)
        rs.f_delta.push_back(sign_of(s, f, x) * std::exp(log_abs(s, f, x) + log_volume_density(s, x)));
    return rs;
}

// Spectral nodes and samples f^(lambda) mu(lambda).
struct SpectralSamples {
    NodeSet nodes;
    std::vector<double> fhat_mu;
};

inline SpectralSamples spectral_samples(const SpaceParams& s, const SpectralProfile& fh, const QuadratureScheme& q) {
    SpectralSamples ss;
    if (auto* tab = std::get_if<spectral::Tabulated>(&fh.descriptor)) {
        const auto& T = *tab->table;
        if (T.has_weights()) {
            ss.nodes.x = T.grid;
            ss.nodes.w = T.weights;
        } else {
            ss.nodes = padded_nodes(T.back(), q);
        }
        double peak = 0.0, top = 0.0;
        for (double l : ss.nodes.x) {
            const double v = T(l) * plancherel_density(s, l);
            ss.fhat_mu.push_back(v);
            peak = std::max(peak, std::abs(v));
            top = std::max(top, std::abs(T(l)));
        }
        const double mu_end = plancherel_density(s, T.back());
        const double tail = std::abs(T(T.back()) * mu_end);
        // rounding floor of a transform computed by cancellation
        const double floor = 64.0 * std::numeric_limits<double>::epsilon() * top * mu_end;
        if (peak > 0.0 && tail > q.abs_tol + q.rel_tol * peak + floor)
            throw truncation_error("spectral tabulation does not decay by lambda = " + std::to_string(T.back()),
                                   tail / peak);
        return ss;
    }
    ss.nodes = composite_nodes(0.0, spectral_extent(s, fh), q);
    ss.fhat_mu.reserve(ss.nodes.size());
    for (double l : ss.nodes.x) ss.fhat_mu.push_back(value(s, fh, l) * plancherel_density(s, l));
    return ss;
}

// sum_i w_i fhat_mu_i phi_{lambda_i}(r_j), for ascending r.
inline std::vector<double> inverse_unscaled(const SpaceParams& s, const SpectralSamples& ss, std::span<const double> rs) {
    std::vector<double> out(rs.size(), 0.0);
    for (std::size_t i = 0; i < ss.nodes.size(); ++i) {
        const double c = ss.nodes.w[i] * ss.fhat_mu[i];
        if (c == 0.0) continue;
        const auto phi = spherical_function_profile(s, ss.nodes.x[i], rs);
        for (std::size_t j = 0; j < rs.size(); ++j) out[j] += c * phi[j].real();
    }
    return out;
}

}  // namespace detail

/// 1 / (2 pi c_X): the inversion constant implied by the volume normalization.
inline double inversion_scale_analytic(const SpaceParams& s) { return 1.0 / (2.0 * std::numbers::pi * s.volume_scale); }

/// Spherical transform, tabulated on [0, Lambda]. Lambda starts at
/// max(lambda_max, a priori extent of f) and grows until |f^| mu has decayed
/// to rel_tol of its peak (or to the rounding floor of the quadrature).
inline SpectralProfile spherical_transform(const SpaceParams& s, const RadialProfile& f, const QuadratureScheme& q = {}) {
    q.validate();
    double L = std::ceil(expected_spectral_extent(s, f, q.lambda_max));
    if (f.is_zero()) {
        const auto lam = detail::padded_nodes(L, q);
        return SpectralProfile::tabulated(lam.x, std::vector<double>(lam.size(), 0.0), lam.w);
    }
    const auto rs = detail::radial_samples(s, f, q);
    double mass = 0.0;
    for (std::size_t j = 0; j < rs.nodes.size(); ++j) mass += std::abs(rs.nodes.w[j] * rs.f_delta[j]);

    auto transform_at = [&](double l) {
        const auto phi = spherical_function_profile(s, l, rs.nodes.x);
        double acc = 0.0;
        for (std::size_t j = 0; j < rs.nodes.size(); ++j) acc += rs.nodes.w[j] * rs.f_delta[j] * phi[j].real();
        return acc;
    };

    std::vector<double> grid{0.0}, vals{transform_at(0.0)}, weights{0.0};
    double lo = 0.0, peak = 0.0;
    constexpr double hard_limit = 400.0;
    for (;;) {
        const auto chunk = composite_nodes(lo, L, q);
        double tail = 0.0;
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            const double v = transform_at(chunk.x[i]);
            grid.push_back(chunk.x[i]);
            vals.push_back(v);
            weights.push_back(chunk.w[i]);
            const double vm = std::abs(v) * plancherel_density(s, chunk.x[i]);
            peak = std::max(peak, vm);
            if (chunk.x[i] > L - 1.0) tail = std::max(tail, vm);
        }
        const double floor = 64.0 * std::numeric_limits<double>::epsilon() * mass * plancherel_density(s, L);
        if (tail <= q.abs_tol + q.rel_tol * peak + floor) break;
        if (L >= hard_limit)
            throw truncation_error("spherical_transform: no spectral decay by lambda = " + std::to_string(L), tail / peak);
        lo = L;
        L = std::ceil(L * 1.25);
    }
    grid.push_back(L);
    vals.push_back(transform_at(L));
    weights.push_back(0.0);
    return SpectralProfile::tabulated(std::move(grid), std::move(vals), std::move(weights));
}

/// C0, fixed once per space by requiring inverse o forward = identity on gaussian(1).
inline double inversion_scale(const SpaceParams& s) {
    return detail::cached_space_constant("inversion_scale", s, [&] {
        const QuadratureScheme q;
        const auto fh = spherical_transform(s, RadialProfile::gaussian(1.0), q);
        const auto rn = composite_nodes(0.0, 2.0, q);
        const auto inv = detail::inverse_unscaled(s, detail::spectral_samples(s, fh, q), rn.x);
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < rn.size(); ++j) {
            num += std::exp(-rn.x[j] * rn.x[j]) * inv[j];
            den += inv[j] * inv[j];
        }
        return num / den;
    });
}

/// Inverse spherical transform tabulated on [0, r_max] (default: t_max).
inline RadialProfile inverse_spherical_transform(const SpaceParams& s, const SpectralProfile& fh,
                                                 const QuadratureScheme& q = {}, double r_max = 0.0) {
    q.validate();
    const auto rn = detail::padded_nodes(r_max > 0.0 ? r_max : q.t_max, q);
    std::vector<double> out(rn.size(), 0.0);
    if (!fh.is_zero()) {
        out = detail::inverse_unscaled(s, detail::spectral_samples(s, fh, q), rn.x);
        const double c0 = inversion_scale(s);
        for (double& v : out) v *= c0;
    }
    return RadialProfile::tabulated(rn.x, std::move(out), rn.w);
}

// ---------------------------------------------------------------------------
// Functions on the line

/// A function on R known on quadrature nodes (zero outside their span),
/// with an optional pointwise form.
struct LineFunction {
    NodeSet nodes;
    std::vector<cdouble> values;
    std::function<cdouble(double)> exact;

    static LineFunction sample(std::function<cdouble(double)> f, NodeSet nodes) {
        LineFunction g;
        g.values.reserve(nodes.size());
        for (double x : nodes.x) g.values.push_back(f(x));
        g.nodes = std::move(nodes);
        g.exact = std::move(f);
        return g;
    }

    static LineFunction zero(NodeSet nodes) {
        LineFunction g;
        g.values.assign(nodes.size(), 0.0);
        g.nodes = std::move(nodes);
        g.exact = [](double) { return cdouble(0.0); };
        return g;
    }

    cdouble operator()(double x) const {
        if (!exact) throw invalid_parameter("LineFunction has no pointwise form");
        return exact(x);
    }

    double lo() const { return nodes.x.empty() ? 0.0 : nodes.x.front(); }
    double hi() const { return nodes.x.empty() ? 0.0 : nodes.x.back(); }
};

namespace detail {

inline void check_line_tails(const LineFunction& g, const QuadratureScheme& q, const char* what) {
    double peak = 0.0;
    for (const auto& v : g.values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0 || g.values.empty()) return;
    const double tail = std::max(std::abs(g.values.front()), std::abs(g.values.back()));
    if (tail > q.abs_tol + std::sqrt(q.rel_tol) * peak)
        throw truncation_error(std::string(what) + ": samples do not decay at the ends of their support", tail / peak);
}

}  // namespace detail

/// F g(lambda) = int g(t) e^{-i lambda t} dt at the requested frequencies.
inline std::vector<cdouble> euclidean_fourier(const LineFunction& g, std::span<const double> lambdas) {
    std::vector<cdouble> out(lambdas.size(), 0.0);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        cdouble acc = 0.0;
        for (std::size_t j = 0; j < g.nodes.size(); ++j)
            acc += g.nodes.w[j] * g.values[j] * std::polar(1.0, -lambdas[i] * g.nodes.x[j]);
        out[i] = acc;
    }
    return out;
}

/// F g on a composite grid over [-lambda_max, lambda_max].
inline LineFunction euclidean_fourier(const LineFunction& g, const QuadratureScheme& q) {
    q.validate();
    detail::check_line_tails(g, q, "euclidean_fourier");
    auto src = std::make_shared<LineFunction>(g);
    return LineFunction::sample(
        [src](double l) {
            const double x = l;
            return euclidean_fourier(*src, std::span<const double>(&x, 1))[0];
        },
        composite_nodes(-q.lambda_max, q.lambda_max, q));
}

/// F^{-1} G(x) = (2 pi)^{-1} int G(lambda) e^{i lambda x} dlambda.
inline std::vector<cdouble> euclidean_inverse_fourier(const LineFunction& G, std::span<const double> xs) {
    std::vector<cdouble> out(xs.size(), 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        cdouble acc = 0.0;
        for (std::size_t j = 0; j < G.nodes.size(); ++j)
            acc += G.nodes.w[j] * G.values[j] * std::polar(1.0, xs[i] * G.nodes.x[j]);
        out[i] = acc / (2.0 * std::numbers::pi);
    }
    return out;
}

inline LineFunction euclidean_inverse_fourier(const LineFunction& G, const QuadratureScheme& q) {
    q.validate();
    detail::check_line_tails(G, q, "euclidean_inverse_fourier");
    auto src = std::make_shared<LineFunction>(G);
    return LineFunction::sample(
        [src](double x) { return euclidean_inverse_fourier(*src, std::span<const double>(&x, 1))[0]; },
        composite_nodes(-q.t_max, q.t_max, q));
}

/// (g1 * g2)(x) = int g1(u) g2(x - u) du, integrating over the nodes of g1;
/// g2 must have a pointwise form.
inline cdouble euclidean_convolution_at(const LineFunction& g1, const LineFunction& g2, double x) {
    cdouble acc = 0.0;
    for (std::size_t j = 0; j < g1.nodes.size(); ++j) {
        if (g1.values[j] == 0.0) continue;
        acc += g1.nodes.w[j] * g1.values[j] * g2(x - g1.nodes.x[j]);
    }
    return acc;
}

inline LineFunction euclidean_convolution(const LineFunction& g1, const LineFunction& g2, const QuadratureScheme& q) {
    q.validate();
    detail::check_line_tails(g1, q, "euclidean_convolution");
    if (!g2.exact) throw invalid_parameter("euclidean_convolution: second factor needs a pointwise form");
    auto a = std::make_shared<LineFunction>(g1);
    auto b = std::make_shared<LineFunction>(g2);
    return LineFunction::sample([a, b](double x) { return euclidean_convolution_at(*a, *b, x); },
                                composite_nodes(g1.lo() + g2.lo(), g1.hi() + g2.hi(), q));
}

/// Abel transform A f, an even function on the line sampled on [-S, S] where
/// S is the radial extent of f. On h3 it is the direct integral
/// 2 v int_{|x|}^S f(t) sinh t dt (v the volume scale); elsewhere F^{-1}(f^).
inline LineFunction abel_transform(const SpaceParams& s, const RadialProfile& f, const QuadratureScheme& q = {}) {
    q.validate();
    const double S = radial_extent(s, f);
    if (f.is_zero()) return LineFunction::zero(composite_nodes(-S, S, q));
    if (s.is_h3()) {
        auto direct = [s, f, S, q](double x) {
            const auto nodes = composite_nodes(std::abs(x), S, q);
            double acc = 0.0;
            for (std::size_t i = 0; i < nodes.size(); ++i) acc += nodes.w[i] * value(s, f, nodes.x[i]) * std::sinh(nodes.x[i]);
            return cdouble(2.0 * s.volume_scale * acc, 0.0);
        };
        return LineFunction::sample(direct, composite_nodes(-S, S, q));
    }
    const auto fh = spherical_transform(s, f, q);
    const auto tab = std::get<spectral::Tabulated>(fh.descriptor).table;
    auto evenf = [tab](double x) {
        double acc = 0.0;
        for (std::size_t i = 0; i < tab->grid.size(); ++i) acc += tab->weights[i] * tab->values[i] * std::cos(tab->grid[i] * x);
        return cdouble(acc / std::numbers::pi, 0.0);
    };
    return LineFunction::sample(evenf, composite_nodes(-S, S, q));
}

}  // namespace harmonic
