#pragma once

// Radial (K-biinvariant) functions and their spherical-transform side.

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <variant>
#include <vector>

#include "harmonic/abel.hpp"
#include "harmonic/error.hpp"
#include "harmonic/quadrature.hpp"
#include "harmonic/space.hpp"
#include "harmonic/specfun.hpp"
#include "harmonic/spline.hpp"

namespace harmonic {

enum class DecayClass { gaussian, exponential, compact, unknown };

/// Even polynomial sum_k coeffs[k] lambda^{2k}.
struct EvenPolynomial {
    std::vector<double> coeffs{1.0};

    int degree() const noexcept {
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
            if (coeffs[k] != 0.0) return 2 * k;
        return -1;
    }

    template <class T>
    T operator()(T lambda) const {
        T acc = 0.0;
        const T l2 = lambda * lambda;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * l2 + *it;
        return acc;
    }

    /// Polynomial in u = lambda^2.
    double in_square(double u) const {
        double acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
        return acc;
    }

    friend bool operator==(const EvenPolynomial&, const EvenPolynomial&) = default;
};

/// Samples on an increasing grid with optional quadrature weights; the grid
/// includes both endpoints so the spline covers the whole range.
struct Tabulation {
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<double> weights;  // empty, or one weight per grid point
    CubicSpline spline;

    static std::shared_ptr<const Tabulation> make(std::vector<double> grid, std::vector<double> values,
                                                  std::vector<double> weights = {}) {
        if (grid.size() != values.size() || (!weights.empty() && weights.size() != grid.size()))
            throw invalid_parameter("Tabulation: size mismatch");
        for (double v : values)
            if (!std::isfinite(v)) throw invalid_parameter("Tabulation: non-finite value");
        auto t = std::make_shared<Tabulation>();
        t->spline = CubicSpline(grid, values, grid.front() == 0.0);
        t->grid = std::move(grid);
        t->values = std::move(values);
        t->weights = std::move(weights);
        return t;
    }

    double operator()(double x) const { return spline(x); }
    double front() const { return grid.front(); }
    double back() const { return grid.back(); }
    bool has_weights() const { return !weights.empty(); }
};

/// Evaluator for profiles defined by a construction elsewhere in the library.
struct ProfileKernel {
    virtual ~ProfileKernel() = default;
    virtual double value(double x) const = 0;
    virtual double log_abs(double x) const = 0;
    virtual double tail_radius() const = 0;
};

namespace radial {
struct Heat {
    double time;
};
struct Gaussian {
    double alpha;
};
struct Tabulated {
    std::shared_ptr<const Tabulation> table;
};
struct BumpConvolved {
    double zeta;
    EvenPolynomial poly;
    std::shared_ptr<const ProfileKernel> kernel;
};
struct Zero {};
}  // namespace radial

struct RadialProfile {
    using Descriptor = std::variant<radial::Heat, radial::Gaussian, radial::Tabulated, radial::BumpConvolved, radial::Zero>;
    Descriptor descriptor = radial::Zero{};

    static RadialProfile heat(double time) {
        if (!(time > 0.0)) throw invalid_parameter("heat profile: time must be > 0");
        return {radial::Heat{time}};
    }
    static RadialProfile gaussian(double alpha) {
        if (!(alpha > 0.0)) throw invalid_parameter("gaussian profile: alpha must be > 0");
        return {radial::Gaussian{alpha}};
    }
    static RadialProfile zero() { return {radial::Zero{}}; }
    static RadialProfile tabulated(std::vector<double> grid, std::vector<double> values,
                                   std::vector<double> weights = {}) {
        if (grid.empty() || grid.front() != 0.0) throw invalid_parameter("radial tabulation must start at 0");
        return {radial::Tabulated{Tabulation::make(std::move(grid), std::move(values), std::move(weights))}};
    }

    /// Grid on which the profile is known exactly; empty for analytic profiles.
    std::vector<double> sample_grid() const {
        if (auto* t = std::get_if<radial::Tabulated>(&descriptor)) return t->table->grid;
        return {};
    }

    DecayClass decay_class() const {
        return std::visit(
            [](const auto& d) {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, radial::Tabulated>) return DecayClass::unknown;
                else if constexpr (std::is_same_v<T, radial::Zero>) return DecayClass::compact;
                else return DecayClass::gaussian;
            },
            descriptor);
    }

    bool is_zero() const { return std::holds_alternative<radial::Zero>(descriptor); }
};

namespace spectral {
struct HeatSpectral {
    double time;
};
struct ClosedForm {
    EvenPolynomial poly;
    double alpha;
};
struct Tabulated {
    std::shared_ptr<const Tabulation> table;
};
struct Bump {
    double zeta;
    EvenPolynomial poly;
    std::shared_ptr<const ProfileKernel> kernel;
};
}  // namespace spectral

struct SpectralProfile {
    using Descriptor = std::variant<spectral::HeatSpectral, spectral::ClosedForm, spectral::Tabulated, spectral::Bump>;
    Descriptor descriptor = spectral::ClosedForm{EvenPolynomial{{}}, 1.0};

    static SpectralProfile heat(double time) {
        if (!(time > 0.0)) throw invalid_parameter("heat_spectral: time must be > 0");
        return {spectral::HeatSpectral{time}};
    }
    static SpectralProfile closed_form(EvenPolynomial poly, double alpha) {
        if (!(alpha > 0.0)) throw invalid_parameter("closed_form: alpha must be > 0");
        return {spectral::ClosedForm{std::move(poly), alpha}};
    }
    static SpectralProfile zero() { return {spectral::ClosedForm{EvenPolynomial{{}}, 1.0}}; }
    static SpectralProfile tabulated(std::vector<double> grid, std::vector<double> values,
                                     std::vector<double> weights = {}) {
        if (grid.empty() || grid.front() < 0.0) throw invalid_parameter("spectral tabulation must be on lambda >= 0");
        return {spectral::Tabulated{Tabulation::make(std::move(grid), std::move(values), std::move(weights))}};
    }

    std::vector<double> sample_grid() const {
        if (auto* t = std::get_if<spectral::Tabulated>(&descriptor)) return t->table->grid;
        return {};
    }

    bool is_zero() const {
        if (auto* c = std::get_if<spectral::ClosedForm>(&descriptor)) return c->poly.degree() < 0;
        if (auto* t = std::get_if<spectral::Tabulated>(&descriptor)) {
            for (double v : t->table->values)
                if (v != 0.0) return false;
            return true;
        }
        return false;
    }
};

// ---------------------------------------------------------------------------
// Evaluation

/// Closed-form h3 heat kernel (4 pi t)^{-3/2} e^{-t} (r / sinh r) e^{-r^2/4t}.
inline double log_heat_kernel_h3(double t, double r) {
    const double shape = r < 1e-4 ? std::log1p(-r * r / 6.0) : std::log(r) - detail::log_two_sinh(r) + std::log(2.0);
    return -1.5 * std::log(4.0 * std::numbers::pi * t) - t + shape - r * r / (4.0 * t);
}

namespace detail {

inline double log_heat_pointwise(const SpaceParams& s, double t, double r) {
    if (s.is_h3()) return log_heat_kernel_h3(t, r);
    if (abel_route_supported(s)) return log_heat_kernel_abel(s, t, r);
    throw invalid_parameter("pointwise heat profile on " + s.name +
                            " needs heat_kernel(..., method = quadrature)");
}

}  // namespace detail

/// log |f(t)|; -inf where f vanishes.
inline double log_abs(const SpaceParams& s, const RadialProfile& f, double t) {
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, radial::Heat>) return detail::log_heat_pointwise(s, d.time, t);
            else if constexpr (std::is_same_v<T, radial::Gaussian>) return -d.alpha * t * t;
            else if constexpr (std::is_same_v<T, radial::Tabulated>) return std::log(std::abs((*d.table)(t)));
            else if constexpr (std::is_same_v<T, radial::BumpConvolved>) return d.kernel->log_abs(t);
            else return -INFINITY;
        },
        f.descriptor);
}

inline double value(const SpaceParams& s, const RadialProfile& f, double t) {
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, radial::Heat>) return std::exp(detail::log_heat_pointwise(s, d.time, t));
            else if constexpr (std::is_same_v<T, radial::Gaussian>) return std::exp(-d.alpha * t * t);
            else if constexpr (std::is_same_v<T, radial::Tabulated>) return (*d.table)(t);
            else if constexpr (std::is_same_v<T, radial::BumpConvolved>) return d.kernel->value(t);
            else return 0.0;
        },
        f.descriptor);
}

inline double log_abs(const SpaceParams& s, const SpectralProfile& fh, double lambda) {
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, spectral::HeatSpectral>) return -d.time * (lambda * lambda + s.rho * s.rho);
            else if constexpr (std::is_same_v<T, spectral::ClosedForm>)
                return std::log(std::abs(d.poly(lambda))) - d.alpha * lambda * lambda;
            else if constexpr (std::is_same_v<T, spectral::Tabulated>) return std::log(std::abs((*d.table)(lambda)));
            else return d.kernel->log_abs(lambda);
        },
        fh.descriptor);
}

/// Value at real lambda; every spectral profile is even.
inline double value(const SpaceParams& s, const SpectralProfile& fh, double lambda) {
    lambda = std::abs(lambda);
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, spectral::HeatSpectral>) return std::exp(-d.time * (lambda * lambda + s.rho * s.rho));
            else if constexpr (std::is_same_v<T, spectral::ClosedForm>) return d.poly(lambda) * std::exp(-d.alpha * lambda * lambda);
            else if constexpr (std::is_same_v<T, spectral::Tabulated>) return (*d.table)(lambda);
            else return d.kernel->value(lambda);
        },
        fh.descriptor);
}

// ---------------------------------------------------------------------------
// Effective ranges

/// Radius past which |f| times the volume density is negligible. Analytic
/// profiles use their own tails; tabulations end where their grid ends.
inline double radial_extent(const SpaceParams& s, const RadialProfile& f) {
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, radial::Heat>) {
                return detail::heat_mass_radius(s, d.time);
            } else if constexpr (std::is_same_v<T, radial::Gaussian>) {
                return tail_radius([&](double t) { return -d.alpha * t * t + 2.0 * s.rho * t + (s.d_x - 1) * std::log1p(t); });
            } else if constexpr (std::is_same_v<T, radial::Tabulated>) {
                return d.table->back();
            } else if constexpr (std::is_same_v<T, radial::BumpConvolved>) {
                return d.kernel->tail_radius();
            } else {
                return 1.0;
            }
        },
        f.descriptor);
}

/// Spectral cutoff past which |f^| mu is negligible.
inline double spectral_extent(const SpaceParams& s, const SpectralProfile& fh) {
    const double grow = s.d_x - 1;
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, spectral::HeatSpectral>) {
                return tail_radius([&](double l) { return -d.time * l * l + grow * std::log1p(l); });
            } else if constexpr (std::is_same_v<T, spectral::ClosedForm>) {
                const int deg = std::max(0, d.poly.degree());
                return tail_radius([&](double l) { return -d.alpha * l * l + (grow + deg) * std::log1p(l); });
            } else if constexpr (std::is_same_v<T, spectral::Tabulated>) {
                return d.table->back();
            } else {
                return d.kernel->tail_radius();
            }
        },
        fh.descriptor);
}

/// A priori spectral cutoff for the transform of f (Gaussian-type profiles
/// have transforms decaying like their Euclidean counterparts).
inline double expected_spectral_extent(const SpaceParams& s, const RadialProfile& f, double floor) {
    const double grow = s.d_x - 1;
    double cut = floor;
    if (auto* h = std::get_if<radial::Heat>(&f.descriptor)) {
        cut = std::max(cut, tail_radius([&](double l) { return -h->time * l * l + grow * std::log1p(l); }));
    } else if (auto* g = std::get_if<radial::Gaussian>(&f.descriptor)) {
        cut = std::max(cut, tail_radius([&](double l) { return -l * l / (4.0 * g->alpha) + grow * std::log1p(l); }));
    } else if (auto* b = std::get_if<radial::BumpConvolved>(&f.descriptor)) {
        const int deg = std::max(0, b->poly.degree());
        cut = std::max(cut, tail_radius([&](double l) { return -l * l / 4.0 + (grow + deg) * std::log1p(l); }));
    }
    return cut;
}

}  // namespace harmonic
