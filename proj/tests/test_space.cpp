#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "harmonic/space.hpp"

using namespace harmonic;

TEST(Space, StructureConstantsFromMultiplicities) {
    const auto s = make_space(4, 3);
    EXPECT_DOUBLE_EQ(s.rho, 5.0);
    EXPECT_EQ(s.d_x, 8);
    EXPECT_DOUBLE_EQ(s.jacobi_a, 3.0);
    EXPECT_DOUBLE_EQ(s.jacobi_b, 1.0);
}

TEST(Space, ModelFamilies) {
    const auto h3 = model_space("h3");
    EXPECT_TRUE(h3.is_h3());
    EXPECT_EQ(h3.d_x, 3);
    EXPECT_DOUBLE_EQ(h3.rho, 1.0);

    const auto rh = model_space("real_hyperbolic(5)");
    EXPECT_EQ(rh.m_gamma, 4);
    EXPECT_EQ(rh.m_2gamma, 0);
    EXPECT_EQ(rh.d_x, 5);

    const auto ch = model_space("complex_hyperbolic(3)");
    EXPECT_EQ(ch.m_gamma, 4);
    EXPECT_EQ(ch.m_2gamma, 1);
    EXPECT_EQ(ch.d_x, 6);

    const auto qh = model_space("quaternionic_hyperbolic(2)");
    EXPECT_EQ(qh.m_gamma, 4);
    EXPECT_EQ(qh.m_2gamma, 3);
    EXPECT_EQ(qh.d_x, 8);

    EXPECT_EQ(model_space("custom(2,0)"), h3);
    EXPECT_EQ(model_space("real_hyperbolic(3)"), h3);
}

TEST(Space, RejectsBadInput) {
    EXPECT_THROW(make_space(0, 0), invalid_parameter);
    EXPECT_THROW(make_space(1, -1), invalid_parameter);
    EXPECT_THROW(model_space("h4"), invalid_parameter);
    EXPECT_THROW(model_space("real_hyperbolic(1)"), invalid_parameter);
    EXPECT_THROW(model_space("complex_hyperbolic(x)"), invalid_parameter);
    EXPECT_THROW(model_space("custom(2)"), invalid_parameter);
    EXPECT_THROW(model_space("lorentz(3)"), invalid_parameter);
}

TEST(Space, VolumeDensityMatchesEuclideanNearOrigin) {
    for (const auto& s : registry_sweep()) {
        const double t = 1e-4;
        const double sphere = 2.0 * std::pow(std::numbers::pi, 0.5 * s.d_x) / std::tgamma(0.5 * s.d_x);
        EXPECT_NEAR(volume_density(s, t) / (sphere * std::pow(t, s.d_x - 1)), 1.0, 1e-6) << s.name;
    }
}

TEST(Space, LogVolumeDensityAgreesAndStaysFinite) {
    for (const auto& s : registry_sweep()) {
        for (double t : {0.01, 0.5, 2.0, 15.0})
            EXPECT_NEAR(log_volume_density(s, t), std::log(volume_density(s, t)), 1e-12 * std::max(1.0, t)) << s.name;
        EXPECT_TRUE(std::isfinite(log_volume_density(s, 2000.0)));
        EXPECT_NEAR((log_volume_density(s, 2000.0) - log_volume_density(s, 1000.0)) / 1000.0, 2.0 * s.rho, 1e-12);
        EXPECT_EQ(log_volume_density(s, 0.0), -INFINITY);
    }
    EXPECT_THROW(cartan_density(model_space("h3"), -1.0), invalid_parameter);
}

TEST(KType, ValidityMatchesDefinitionExhaustively) {
    for (int p = -3; p <= 10; ++p)
        for (int q = -12; q <= 12; ++q) {
            const bool expect = p >= 0 && std::abs(q) <= p && (p - q) % 2 == 0;
            EXPECT_EQ(KTypeIndex::is_valid(p, q), expect) << p << "," << q;
            if (expect) {
                EXPECT_NO_THROW(KTypeIndex::make(p, q));
            } else {
                EXPECT_THROW(KTypeIndex::make(p, q), invalid_parameter);
            }
        }
}

TEST(KType, Ordering) {
    EXPECT_LT((KTypeIndex{0, 0}), (KTypeIndex{1, -1}));
    EXPECT_LT((KTypeIndex{2, -2}), (KTypeIndex{2, 0}));
    EXPECT_EQ((KTypeIndex{3, 1}), KTypeIndex::make(3, 1));
}
