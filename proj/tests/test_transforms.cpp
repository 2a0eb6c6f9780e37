#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "harmonic/heat.hpp"
#include "harmonic/transforms.hpp"

using namespace harmonic;

namespace {

const double pi = std::numbers::pi;

// h3 transform of exp(-t^2): 2 pi^{3/2} e^{(1 - lambda^2)/4} sin(lambda/2) / lambda
double h3_gaussian_transform(double l) {
    const double s = l == 0.0 ? 0.5 : std::sin(0.5 * l) / l;
    return 2.0 * std::pow(pi, 1.5) * std::exp(0.25 * (1.0 - l * l)) * s;
}

}  // namespace

TEST(SphericalTransform, H3GaussianClosedForm) {
    const auto h3 = model_space("h3");
    const auto fh = spherical_transform(h3, RadialProfile::gaussian(1.0));
    for (double l = 0.0; l <= 12.0; l += 0.25) EXPECT_NEAR(value(h3, fh, l), h3_gaussian_transform(l), 1e-9) << l;
}

TEST(SphericalTransform, HeatKernelMapsToSpectralHeat) {
    const auto s = model_space("complex_hyperbolic(2)");
    const auto fh = spherical_transform(s, RadialProfile::heat(1.0));
    const double sup = std::exp(-s.rho * s.rho);
    for (double l = 0.0; l <= 8.0; l += 0.5)
        EXPECT_NEAR(value(s, fh, l), heat_spectral(s, 1.0, l).real(), 1e-6 * sup) << l;
}

TEST(SphericalTransform, ZeroProfile) {
    const auto s = model_space("real_hyperbolic(4)");
    const auto fh = spherical_transform(s, RadialProfile::zero());
    EXPECT_TRUE(fh.is_zero());
    const auto back = inverse_spherical_transform(s, SpectralProfile::zero());
    for (double r : {0.0, 1.0, 5.0}) EXPECT_EQ(value(s, back, r), 0.0);
}

TEST(SphericalTransform, RoundTripOnNonH3Space) {
    const auto s = model_space("real_hyperbolic(2)");
    const auto f = RadialProfile::gaussian(1.0);
    const auto g = inverse_spherical_transform(s, spherical_transform(s, f), {}, radial_extent(s, f));
    for (double r = 0.0; r <= 4.0; r += 0.1) EXPECT_NEAR(value(s, g, r), std::exp(-r * r), 1e-7) << r;
}

TEST(SphericalTransform, InversionConstantMatchesAnalyticValue) {
    for (const auto& s : registry_sweep())
        EXPECT_NEAR(inversion_scale(s) / inversion_scale_analytic(s), 1.0, 1e-8) << s.name;
}

TEST(SphericalTransform, TruncatedTabulationIsRejected) {
    const auto s = model_space("h3");
    std::vector<double> grid, vals;
    for (int i = 0; i <= 20; ++i) {
        grid.push_back(0.1 * i);
        vals.push_back(1.0);
    }
    EXPECT_THROW(spherical_transform(s, RadialProfile::tabulated(grid, vals)), truncation_error);
    EXPECT_THROW(RadialProfile::tabulated({0.5, 1.0}, {1.0, 1.0}), invalid_parameter);
}

TEST(EuclideanFourier, GaussianAndInverse) {
    const QuadratureScheme q;
    const auto g = LineFunction::sample([](double x) { return cdouble(std::exp(-x * x)); }, composite_nodes(-8.0, 8.0, q));
    const std::vector<double> ls{0.0, 0.5, 1.0, 3.0, 6.0};
    const auto F = euclidean_fourier(g, ls);
    for (std::size_t i = 0; i < ls.size(); ++i)
        EXPECT_NEAR(std::abs(F[i] - std::sqrt(pi) * std::exp(-ls[i] * ls[i] / 4.0)), 0.0, 1e-13);

    QuadratureScheme wide;
    wide.lambda_max = 20.0;
    const auto G = euclidean_fourier(g, wide);
    const std::vector<double> xs{0.0, 0.7, 2.0};
    const auto back = euclidean_inverse_fourier(G, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_NEAR(std::abs(back[i] - std::exp(-xs[i] * xs[i])), 0.0, 1e-12);
}

TEST(EuclideanFourier, ConvolutionOfGaussians) {
    const QuadratureScheme q;
    const auto g = LineFunction::sample([](double x) { return cdouble(std::exp(-x * x)); }, composite_nodes(-8.0, 8.0, q));
    for (double x : {0.0, 0.4, 1.5, 3.0})
        EXPECT_NEAR(std::abs(euclidean_convolution_at(g, g, x) - std::sqrt(pi / 2.0) * std::exp(-x * x / 2.0)), 0.0, 1e-13);
    const auto c = euclidean_convolution(g, g, q);
    EXPECT_NEAR(c.lo(), -c.hi(), 1e-12);
    EXPECT_GT(c.lo(), 2.0 * g.lo());
    EXPECT_LT(c.lo(), 2.0 * g.lo() + 0.1);
    EXPECT_NEAR(std::abs(c(1.0) - std::sqrt(pi / 2.0) * std::exp(-0.5)), 0.0, 1e-13);
}

TEST(EuclideanFourier, RejectsUndecayedInput) {
    const QuadratureScheme q;
    const auto g = LineFunction::sample([](double) { return cdouble(1.0); }, composite_nodes(-2.0, 2.0, q));
    EXPECT_THROW(euclidean_fourier(g, q), truncation_error);
}

TEST(AbelTransform, H3HeatIsEuclideanHeatTimesDecay) {
    // 2 pi int_|x|^inf h_t(r) sinh r dr = (4 pi t)^{-1/2} e^{-t - x^2/4t}
    const auto h3 = model_space("h3");
    for (double t : {0.5, 2.0}) {
        const auto A = abel_transform(h3, RadialProfile::heat(t));
        for (double x : {0.0, 0.5, 1.0, 3.0, -2.0})
            EXPECT_NEAR(A(x).real(), std::exp(-t - x * x / (4.0 * t)) / std::sqrt(4.0 * pi * t), 1e-10) << t << " " << x;
    }
}

TEST(AbelTransform, FourierSliceOnNonH3Space) {
    const auto s = model_space("complex_hyperbolic(2)");
    const auto f = RadialProfile::gaussian(1.0);
    const auto A = abel_transform(s, f);
    const auto fh = spherical_transform(s, f);
    const std::vector<double> ls{0.0, 1.0, 2.5, 5.0};
    const auto F = euclidean_fourier(A, ls);
    for (std::size_t i = 0; i < ls.size(); ++i) EXPECT_NEAR(std::abs(F[i] - value(s, fh, ls[i])), 0.0, 1e-6);
}
