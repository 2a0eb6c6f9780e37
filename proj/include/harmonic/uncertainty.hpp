#pragma once

// Beurling-type double integrals along a truncation ladder, the ridge oracle
// used to cross-check their classification, the two-space pair condition, and
// the sharpness counterexample on h3.

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "harmonic/heat.hpp"
#include "harmonic/profiles.hpp"
#include "harmonic/quadrature.hpp"
#include "harmonic/specfun.hpp"
#include "harmonic/transforms.hpp"

namespace harmonic {

struct BeurlingConfig {
    int d = 0;
    double c = 1.0;
    double eps = 0.0;  // the integrand carries Xi^{1 + eps}
    std::vector<double> ladder{2.0, 8.0, 32.0, 128.0};
    double rel_tol = 1e-3;
    double growth_factor = 10.0;
    bool waive_consistency = false;

    void validate() const {
        if (d < 0) throw invalid_parameter("BeurlingConfig: d must be >= 0");
        if (ladder.size() < 4) throw invalid_parameter("BeurlingConfig: ladder needs at least 4 rungs");
        if (!(ladder.front() > 0.0)) throw invalid_parameter("BeurlingConfig: ladder radii must be positive");
        for (std::size_t k = 1; k < ladder.size(); ++k)
            if (!(ladder[k] > ladder[k - 1])) throw invalid_parameter("BeurlingConfig: ladder must be strictly increasing");
        if (!(rel_tol > 0.0) || !(growth_factor > 1.0)) throw invalid_parameter("BeurlingConfig: bad thresholds");
    }
};

enum class Classification { converged, diverging, inconclusive };

inline const char* to_string(Classification c) {
    switch (c) {
    case Classification::converged: return "converged";
    case Classification::diverging: return "diverging";
    case Classification::inconclusive: return "inconclusive";
    }
    return "?";
}

struct ConvergenceReport {
    std::vector<double> ladder;
    std::vector<double> partial_values;      // I(R_k); may overflow to inf
    std::vector<double> log_partial_values;  // log I(R_k); -inf for an identically zero integrand
    Classification classification = Classification::inconclusive;
    std::optional<double> stabilized_value;
};

namespace detail {

// Rung-wise sums of positive contributions, each kept relative to its own log shift.
class ShellAccumulator {
public:
    explicit ShellAccumulator(std::size_t rungs) : sums_(rungs, 0.0), shifts_(rungs, -INFINITY) {}

    void add(std::size_t shell, double log_term) {
        if (log_term == -INFINITY) return;
        double& m = shifts_[shell];
        if (log_term > m) {
            sums_[shell] = (m == -INFINITY ? 0.0 : sums_[shell] * std::exp(m - log_term));
            m = log_term;
        }
        sums_[shell] += std::exp(log_term - m);
    }

    ConvergenceReport report(const std::vector<double>& ladder, const BeurlingConfig& cfg) const {
        ConvergenceReport r;
        r.ladder = ladder;
        const std::size_t K = sums_.size();
        std::vector<double> log_shell(K), log_cum(K);
        double acc = -INFINITY;
        for (std::size_t k = 0; k < K; ++k) {
            log_shell[k] = sums_[k] > 0.0 ? std::log(sums_[k]) + shifts_[k] : -INFINITY;
            acc = log_add(acc, log_shell[k]);
            log_cum[k] = acc;
            r.log_partial_values.push_back(acc);
            r.partial_values.push_back(std::exp(acc));
        }
        if (log_cum[K - 1] == -INFINITY) {
            r.classification = Classification::converged;
            r.stabilized_value = 0.0;
            return r;
        }
        const double log_g = std::log(cfg.growth_factor);
        const double last = log_shell[K - 1], prev = log_shell[K - 2];
        const bool grows = log_cum[K - 1] - log_cum[K - 2] > log_g || last - prev > log_g;
        if (last - log_cum[K - 1] < std::log(cfg.rel_tol) && last <= prev) {
            r.classification = Classification::converged;
            r.stabilized_value = r.partial_values.back();
        } else if (grows) {
            r.classification = Classification::diverging;
        } else {
            r.classification = Classification::inconclusive;
        }
        return r;
    }

private:
    static double log_add(double a, double b) {
        if (a == -INFINITY) return b;
        if (b == -INFINITY) return a;
        const double hi = std::max(a, b);
        return hi + std::log1p(std::exp(std::min(a, b) - hi));
    }

    std::vector<double> sums_;
    std::vector<double> shifts_;
};

inline std::size_t shell_of(double x, const std::vector<double>& ladder) {
    return static_cast<std::size_t>(std::upper_bound(ladder.begin(), ladder.end(), x) - ladder.begin());
}

// Per-node log factors of the integrand:
//   radial:   log|f(t)| + (1+eps) log Xi(t) + log Delta(t)
//   spectral: log|f^(lambda)| + log mu(lambda)
struct IntegrandFactors {
    std::vector<double> log_radial;
    std::vector<double> log_spectral;
};

inline std::vector<double> radial_log_factors(const SpaceParams& xs, const RadialProfile& f, double eps,
                                              std::span<const double> ts) {
    std::vector<double> out(ts.size(), -INFINITY);
    if (f.is_zero()) return out;
    const auto log_xi = log_xi_profile(xs, ts);
    for (std::size_t i = 0; i < ts.size(); ++i)
        out[i] = log_abs(xs, f, ts[i]) + (1.0 + eps) * log_xi[i] + log_volume_density(xs, ts[i]);
    return out;
}

inline std::vector<double> spectral_log_factors(const SpaceParams& ys, const SpectralProfile& fh,
                                                std::span<const double> ls) {
    std::vector<double> out(ls.size(), -INFINITY);
    if (fh.is_zero()) return out;
    if (auto* tab = std::get_if<spectral::Tabulated>(&fh.descriptor))
        if (ls.back() > tab->table->back())
            throw invalid_parameter("beurling functional: tabulated transform ends at lambda = " +
                                    std::to_string(tab->table->back()) + ", below the ladder");
    for (std::size_t j = 0; j < ls.size(); ++j) out[j] = log_abs(ys, fh, ls[j]) + log_plancherel_density(ys, ls[j]);
    return out;
}

// Relative mismatch between fhat and the transform of f at a few frequencies.
inline double pair_mismatch(const SpaceParams& s, const RadialProfile& f, const SpectralProfile& fh,
                            const QuadratureScheme& q) {
    if (f.is_zero() && fh.is_zero()) return 0.0;
    const std::vector<double> probes{0.0, 0.5, 1.0, 2.0, 3.0};
    std::vector<double> direct(probes.size(), 0.0);
    if (!f.is_zero()) {
        const auto rs = radial_samples(s, f, q);
        for (std::size_t i = 0; i < probes.size(); ++i) {
            const auto phi = spherical_function_profile(s, probes[i], rs.nodes.x);
            for (std::size_t j = 0; j < rs.nodes.size(); ++j) direct[i] += rs.nodes.w[j] * rs.f_delta[j] * phi[j].real();
        }
    }
    double scale = 0.0, diff = 0.0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const double given = fh.is_zero() ? 0.0 : value(s, fh, probes[i]);
        scale = std::max({scale, std::abs(direct[i]), std::abs(given)});
        diff = std::max(diff, std::abs(direct[i] - given));
    }
    return scale > 0.0 ? diff / scale : 0.0;
}

inline void check_pair(const SpaceParams& s, const RadialProfile& f, const SpectralProfile& fh,
                       const QuadratureScheme& q, const char* what) {
    const double m = pair_mismatch(s, f, fh, q);
    if (m > 1e-6) throw inconsistent_pair_error(std::string(what) + ": fhat is not the spherical transform of f", m);
}

inline double log_cross(const BeurlingConfig& cfg, double t, double l) {
    return cfg.c * t * l - cfg.d * std::log1p(t + l);
}

// I(R_k) = int_0^R_k int_0^R_k over (X radial side) x (Y spectral side).
inline ConvergenceReport ladder_functional(const SpaceParams& xs, const RadialProfile& f, const SpaceParams& ys,
                                           const SpectralProfile& fh, const BeurlingConfig& cfg,
                                           const QuadratureScheme& q) {
    const double R = cfg.ladder.back();
    const auto nodes = aligned_nodes(R, q);
    const auto a = radial_log_factors(xs, f, cfg.eps, nodes.x);
    const auto b = spectral_log_factors(ys, fh, nodes.x);
    const std::size_t n = nodes.size();
    std::vector<double> lw(n), a_w(n), b_w(n);
    std::vector<std::size_t> shell(n);
    for (std::size_t i = 0; i < n; ++i) {
        lw[i] = std::log(nodes.w[i]);
        a_w[i] = a[i] + lw[i];
        b_w[i] = b[i] + lw[i];
        shell[i] = shell_of(nodes.x[i], cfg.ladder);
    }
    ShellAccumulator acc(cfg.ladder.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a_w[i] == -INFINITY || shell[i] >= cfg.ladder.size()) continue;
        const double t = nodes.x[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (b_w[j] == -INFINITY || shell[j] >= cfg.ladder.size()) continue;
            acc.add(std::max(shell[i], shell[j]), a_w[i] + b_w[j] + log_cross(cfg, t, nodes.x[j]));
        }
    }
    return acc.report(cfg.ladder, cfg);
}

}  // namespace detail

/// Ladder evaluation of
///   I(R) = int_0^R int_0^R |f(t)| |f^(lambda)| e^{c t lambda} Xi(t)^{1+eps} (1+t+lambda)^{-d} Delta(t) mu(lambda).
inline ConvergenceReport beurling_functional(const SpaceParams& s, const RadialProfile& f, const SpectralProfile& fh,
                                             const BeurlingConfig& cfg, const QuadratureScheme& q = {}) {
    cfg.validate();
    q.validate();
    if (!cfg.waive_consistency) detail::check_pair(s, f, fh, q, "beurling_functional");
    return detail::ladder_functional(s, f, s, fh, cfg, q);
}

struct RidgeReport {
    double slope = 0.0;  // lambda = slope * t
    ConvergenceReport report;
};

/// The integrand restricted to its ridge lambda = slope * t, integrated in t along the same ladder.
/// The slope maximizes the integrand over lambda at a probe radius.
inline RidgeReport ridge_functional(const SpaceParams& xs, const RadialProfile& f, const SpaceParams& ys,
                                    const SpectralProfile& fh, const BeurlingConfig& cfg,
                                    const QuadratureScheme& q = {}) {
    cfg.validate();
    q.validate();
    RidgeReport out;
    const double R = cfg.ladder.back();
    if (f.is_zero() || fh.is_zero()) {
        detail::ShellAccumulator acc(cfg.ladder.size());
        out.report = acc.report(cfg.ladder, cfg);
        return out;
    }
    for (double probe = R / 8.0; probe >= 0.5; probe /= 2.0) {
        const double tt = probe;
        const double radial = detail::radial_log_factors(xs, f, cfg.eps, std::span<const double>(&tt, 1))[0];
        double best = -INFINITY, arg = 0.0;
        for (double l = 0.01; l <= R; l += 0.01) {
            const double ll = l;
            const double v = radial + detail::spectral_log_factors(ys, fh, std::span<const double>(&ll, 1))[0] +
                             detail::log_cross(cfg, probe, l);
            if (v > best) {
                best = v;
                arg = l;
            }
        }
        out.slope = arg / probe;
        if (arg < 0.9 * R) break;
    }
    const auto nodes = aligned_nodes(R, q);
    std::vector<double> ls(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) ls[i] = std::min(out.slope * nodes.x[i], R);
    const auto a = detail::radial_log_factors(xs, f, cfg.eps, nodes.x);
    const auto b = detail::spectral_log_factors(ys, fh, ls);
    detail::ShellAccumulator acc(cfg.ladder.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::size_t sh = detail::shell_of(nodes.x[i], cfg.ladder);
        if (sh >= cfg.ladder.size()) continue;
        acc.add(sh, a[i] + b[i] + detail::log_cross(cfg, nodes.x[i], ls[i]) + std::log(nodes.w[i]));
    }
    out.report = acc.report(cfg.ladder, cfg);
    return out;
}

/// Two-space pair condition: report 1 pairs f1 on X1 with f2^ on the spectrum of X2,
/// report 2 pairs f2 on X2 with f1^ on the spectrum of X1.
inline std::pair<ConvergenceReport, ConvergenceReport> demange_pair(const SpaceParams& s1, const RadialProfile& f1,
                                                                   const SpectralProfile& fh1, const SpaceParams& s2,
                                                                   const RadialProfile& f2, const SpectralProfile& fh2,
                                                                   int d, const QuadratureScheme& q = {},
                                                                   BeurlingConfig cfg = {}) {
    cfg.d = d;
    cfg.c = 1.0;
    cfg.eps = 0.0;
    cfg.validate();
    q.validate();
    if (!cfg.waive_consistency) {
        detail::check_pair(s1, f1, fh1, q, "demange_pair (first pair)");
        detail::check_pair(s2, f2, fh2, q, "demange_pair (second pair)");
    }
    return {detail::ladder_functional(s1, f1, s2, fh2, cfg, q), detail::ladder_functional(s2, f2, s1, fh1, cfg, q)};
}

// ---------------------------------------------------------------------------
// Sharpness construction on h3

namespace detail {

// Unit-mass bump A exp(-1/(1 - (u/zeta)^2)) on a 1024-node rule over [-zeta, zeta].
struct Bump {
    double zeta = 0.0;
    NodeSet nodes;
    std::vector<double> log_psi;  // log of psi at the nodes
    std::vector<double> w_psi;    // weight * psi
    double log_a = 0.0;

    double operator()(double u) const {
        const double x = u / zeta;
        return std::abs(x) < 1.0 ? std::exp(log_a - 1.0 / (1.0 - x * x)) : 0.0;
    }

    explicit Bump(double z) : zeta(z), nodes(composite_panels(-z, z, 128, 8)) {
        std::vector<double> raw(nodes.size());
        double mass = 0.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const double x = nodes.x[j] / z;
            raw[j] = -1.0 / (1.0 - x * x);
            mass += nodes.w[j] * std::exp(raw[j]);
        }
        log_a = -std::log(mass);
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            log_psi.push_back(raw[j] + log_a);
            w_psi.push_back(nodes.w[j] * std::exp(raw[j] + log_a));
        }
    }

    double fourier(double l) const {
        double acc = 0.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) acc += w_psi[j] * std::cos(l * nodes.x[j]);
        return acc;
    }
};

// Q(s) = sum_k p_k (-1)^k H_{2k+1}(s), physicists' Hermite polynomials;
// Q(s) e^{-s^2} has Fourier transform i sqrt(pi) lambda P(lambda) e^{-lambda^2/4} up to sign.
inline double hermite_combination(const EvenPolynomial& p, double s) {
    const int top = 2 * static_cast<int>(p.coeffs.size()) - 1;
    double h_prev = 1.0, h = 2.0 * s, acc = 0.0;  // H_0, H_1
    for (int n = 1; n <= top; ++n) {
        if (n % 2 == 1) {
            const int k = (n - 1) / 2;
            acc += p.coeffs[k] * (k % 2 == 0 ? 1.0 : -1.0) * h;
        }
        const double next = 2.0 * s * h - 2.0 * n * h_prev;
        h_prev = h;
        h = next;
    }
    return acc;
}

inline double hermite_combination_derivative(const EvenPolynomial& p, double s) {
    // H_n' = 2n H_{n-1}
    const int top = 2 * static_cast<int>(p.coeffs.size()) - 1;
    double h_prev = 0.0, h = 1.0, acc = 0.0;  // H_{-1} (unused), H_0
    for (int n = 0; n < top; ++n) {
        const int m = n + 1;  // derivative of H_m uses H_n
        if (m % 2 == 1) {
            const int k = (m - 1) / 2;
            acc += p.coeffs[k] * (k % 2 == 0 ? 1.0 : -1.0) * 2.0 * m * h;
        }
        const double next = 2.0 * s * h - 2.0 * n * h_prev;
        h_prev = h;
        h = next;
    }
    return acc;
}

// g(t) = C0 sqrt(pi) / sinh t * (psi * q)(t),  q(s) = Q(s) e^{-s^2}.
class SharpnessRadial final : public ProfileKernel {
public:
    SharpnessRadial(std::shared_ptr<const Bump> bump, EvenPolynomial poly, double c0)
        : bump_(std::move(bump)), poly_(std::move(poly)), log_c_(std::log(c0 * std::sqrt(std::numbers::pi))) {
        tail_ = harmonic::tail_radius([&](double t) { return log_abs(t) + log_volume_density(model_space(ModelFamily::h3), t); });
    }

    double value(double t) const override {
        if (t < 1e-6) return std::exp(log_c_) * derivative_at_zero();
        const double la = log_abs(t);
        return sign(t) * std::exp(la);
    }

    double log_abs(double t) const override {
        if (t < 1e-6) return log_c_ + std::log(std::abs(derivative_at_zero()));
        const auto [lsum, sgn] = log_conv(t);
        (void)sgn;
        return log_c_ - (detail::log_two_sinh(t) - std::log(2.0)) + lsum;
    }

    double tail_radius() const override { return tail_; }

    // (psi * q)(t) and its sign, in log form
    std::pair<double, double> log_conv(double t) const {
        const auto& b = *bump_;
        // e^{-(t-u)^2} = e^{-t^2 + 2 t zeta} e^{2t(u - zeta) - u^2}
        std::vector<double> expo(b.nodes.size());
        double top = -INFINITY;
        for (std::size_t j = 0; j < b.nodes.size(); ++j) {
            const double u = b.nodes.x[j];
            expo[j] = b.log_psi[j] + std::log(b.nodes.w[j]) + 2.0 * t * (u - b.zeta) - u * u;
            top = std::max(top, expo[j]);
        }
        double acc = 0.0;
        for (std::size_t j = 0; j < b.nodes.size(); ++j)
            acc += hermite_combination(poly_, t - b.nodes.x[j]) * std::exp(expo[j] - top);
        const double base = -t * t + 2.0 * t * b.zeta + top;
        if (acc == 0.0) return {-INFINITY, 0.0};
        return {base + std::log(std::abs(acc)), acc > 0.0 ? 1.0 : -1.0};
    }

private:
    double sign(double t) const { return log_conv(t).second; }

    double derivative_at_zero() const {
        // d/dt (psi * q)(0) = int psi(u) q'(-u) du, q' even
        const auto& b = *bump_;
        double acc = 0.0;
        for (std::size_t j = 0; j < b.nodes.size(); ++j) {
            const double u = b.nodes.x[j];
            const double qd = (hermite_combination_derivative(poly_, u) - 2.0 * u * hermite_combination(poly_, u)) *
                              std::exp(-u * u);
            acc += b.w_psi[j] * qd;
        }
        return acc;
    }

    std::shared_ptr<const Bump> bump_;
    EvenPolynomial poly_;
    double log_c_;
    double tail_ = 0.0;
};

// g^(lambda) = F psi(lambda) e^{-lambda^2/4} P(lambda)
class SharpnessSpectral final : public ProfileKernel {
public:
    SharpnessSpectral(std::shared_ptr<const Bump> bump, EvenPolynomial poly) : bump_(std::move(bump)), poly_(std::move(poly)) {
        const int deg = std::max(0, poly_.degree());
        tail_ = harmonic::tail_radius([&](double l) { return -l * l / 4.0 + (deg + 2) * std::log1p(l); });
    }
    double value(double l) const override { return bump_->fourier(l) * std::exp(-l * l / 4.0) * poly_(l); }
    double log_abs(double l) const override {
        return std::log(std::abs(bump_->fourier(l))) - l * l / 4.0 + std::log(std::abs(poly_(l)));
    }
    double tail_radius() const override { return tail_; }

private:
    std::shared_ptr<const Bump> bump_;
    EvenPolynomial poly_;
    double tail_ = 0.0;
};

}  // namespace detail

struct SharpnessPair {
    double zeta = 0.0;
    EvenPolynomial poly;
    RadialProfile g;
    SpectralProfile ghat;
    LineFunction psi;     // the bump on its nodes
    LineFunction kernel;  // q(s) = Q(s) e^{-s^2}, the Gaussian side of the convolution
    double scale = 0.0;   // g(t) sinh t = scale * (psi * q)(t)
};

/// The h3 function with g^ = F psi e^{-lambda^2/4} P, realized as g(t) = C / sinh t (psi * q)(t).
inline SharpnessPair sharpness_construct(double zeta, const EvenPolynomial& poly, const QuadratureScheme& q = {}) {
    q.validate();
    if (!(zeta > 0.0 && zeta < 0.25)) throw invalid_parameter("sharpness_construct: zeta must lie in (0, 1/4)");
    if (poly.degree() < 0) throw invalid_parameter("sharpness_construct: polynomial must be nonzero");
    const auto h3 = model_space(ModelFamily::h3);
    auto bump = std::make_shared<const detail::Bump>(zeta);
    const double c0 = inversion_scale(h3);
    SharpnessPair out;
    out.zeta = zeta;
    out.poly = poly;
    out.scale = c0 * std::sqrt(std::numbers::pi);
    out.g = RadialProfile{radial::BumpConvolved{zeta, poly, std::make_shared<detail::SharpnessRadial>(bump, poly, c0)}};
    out.ghat = SpectralProfile{spectral::Bump{zeta, poly, std::make_shared<detail::SharpnessSpectral>(bump, poly)}};
    std::vector<cdouble> pv(bump->nodes.size());
    for (std::size_t j = 0; j < pv.size(); ++j) pv[j] = std::exp(bump->log_psi[j]);
    out.psi.nodes = bump->nodes;
    out.psi.values = std::move(pv);
    out.psi.exact = [bump](double u) -> cdouble { return (*bump)(u); };
    const double S = std::sqrt(46.0 + 2.0 * std::log1p(poly.coeffs.size())) + 2.0;
    out.kernel = LineFunction::sample(
        [poly](double s) { return cdouble(detail::hermite_combination(poly, s) * std::exp(-s * s)); },
        composite_nodes(-S, S, q));
    return out;
}

struct BoundCheck {
    bool passed = false;
    double fitted_constant = 0.0;  // sup of the ratio over the head of the range
    double tail_sup = 0.0;         // sup of the ratio over the tail of the range
};

/// |g(t)| <= C e^{-t^2} e^{(4 zeta - 1) t} (1 + t)^N with N = deg P:
/// C fitted on [0.5, 6], verified on [6, 12].
inline BoundCheck sharpness_radial_bound(const SharpnessPair& p) {
    const auto h3 = model_space(ModelFamily::h3);
    const int N = std::max(0, p.poly.degree());
    BoundCheck b;
    for (double t = 0.5; t <= 12.0 + 1e-12; t += 0.01) {
        const double ratio = std::exp(log_abs(h3, p.g, t) + t * t - (4.0 * p.zeta - 1.0) * t - N * std::log1p(t));
        (t <= 6.0 ? b.fitted_constant : b.tail_sup) = std::max(t <= 6.0 ? b.fitted_constant : b.tail_sup, ratio);
    }
    b.passed = std::isfinite(b.fitted_constant) && b.tail_sup <= b.fitted_constant;
    return b;
}

/// |g^(lambda)| <= C' e^{-lambda^2/4} (1 + lambda)^N with N = deg P: C' fitted on [0, 20], verified on [20, 40].
inline BoundCheck sharpness_spectral_bound(const SharpnessPair& p) {
    const auto h3 = model_space(ModelFamily::h3);
    const int N = std::max(0, p.poly.degree());
    BoundCheck b;
    for (double l = 0.0; l <= 40.0 + 1e-12; l += 0.01) {
        const double ratio = std::exp(log_abs(h3, p.ghat, l) + l * l / 4.0 - N * std::log1p(l));
        (l <= 20.0 ? b.fitted_constant : b.tail_sup) = std::max(l <= 20.0 ? b.fitted_constant : b.tail_sup, ratio);
    }
    b.passed = std::isfinite(b.fitted_constant) && b.tail_sup <= b.fitted_constant;
    return b;
}

/// Relative sup difference between F(g sinh) computed from samples of g and
/// scale * F psi * F q computed from the two convolution factors.
inline double sharpness_convolution_check(const SharpnessPair& p, std::span<const double> lambdas,
                                          const QuadratureScheme& q = {}) {
    q.validate();
    const auto h3 = model_space(ModelFamily::h3);
    const double T = radial_extent(h3, p.g);
    const auto g_sinh = LineFunction::sample(
        [&](double t) { return cdouble(value(h3, p.g, std::abs(t)) * std::sinh(t)); }, composite_nodes(-T, T, q));
    const auto lhs = euclidean_fourier(g_sinh, lambdas);
    const auto fpsi = euclidean_fourier(p.psi, lambdas);
    const auto fker = euclidean_fourier(p.kernel, lambdas);
    double diff = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const cdouble rhs = p.scale * fpsi[i] * fker[i];
        diff = std::max(diff, std::abs(lhs[i] - rhs));
        peak = std::max(peak, std::abs(rhs));
    }
    return peak > 0.0 ? diff / peak : diff;
}

/// Weighted functional with cross exponent c and Xi^{1+eps} for a constructed pair.
inline ConvergenceReport sharpness_verify(const SharpnessPair& p, double c, double eps, int d,
                                          const QuadratureScheme& q = {}, BeurlingConfig cfg = {}) {
    cfg.d = d;
    cfg.c = c;
    cfg.eps = eps;
    return beurling_functional(model_space(ModelFamily::h3), p.g, p.ghat, cfg, q);
}

}  // namespace harmonic
