#include <gtest/gtest.h>

#include <cmath>

#include "topclose/bounds.hpp"

using namespace topclose;

TEST(FarnessLowerBound, StarCentreLevelZero) {
    // K_{1,3}: f(centre) = 3
    EXPECT_EQ(farness_lower_bound(0, 0, 1, 3, 4), 3);
}

TEST(FarnessLowerBound, StarLeafLevelZero) {
    // leaf: f = 1 + 2 + 2 = 5
    EXPECT_EQ(farness_lower_bound(0, 0, 1, 1, 4), 5);
}

TEST(FarnessLowerBound, CompleteVisitIsExact) {
    EXPECT_EQ(farness_lower_bound(4, 17, 9, 0, 9), 17);
    EXPECT_EQ(farness_lower_bound(0, 0, 1, 0, 1), 0);
}

TEST(FarnessLowerBound, MayGoNegative) {
    EXPECT_LT(farness_lower_bound(0, 0, 1, 10, 2), 0);
}

TEST(ClosenessUpperBound, StarCentre) {
    EXPECT_DOUBLE_EQ(closeness_upper_bound(3, 4, 4), 1.0);
    EXPECT_DOUBLE_EQ(closeness(4, 3, 4), 1.0);
}

TEST(ClosenessUpperBound, NonPositiveIsNoBound) {
    EXPECT_EQ(closeness_upper_bound(0, 5, 10), kNoBound);
    EXPECT_EQ(closeness_upper_bound(-4, 5, 10), kNoBound);
    EXPECT_EQ(closeness_upper_bound(0, 1, 10), kNoBound);
}

TEST(ClosenessUpperBound, ThreeCycleFirstBoundary) {
    const auto lambda = farness_lower_bound(0, 0, 1, 1, 3);
    EXPECT_EQ(lambda, 3);
    EXPECT_DOUBLE_EQ(closeness_upper_bound(lambda, 3, 3), 2.0 / 3.0);
}

TEST(ClosenessUpperBound, TightBoundEqualsClosenessBitwise) {
    for (Count n : {5u, 17u, 1000u}) {
        for (Count f : {4u, 30u, 977u}) {
            EXPECT_EQ(closeness_upper_bound(static_cast<std::int64_t>(f), n, n), closeness(n, f, n));
        }
    }
}

TEST(Closeness, DegenerateCasesAreZero) {
    EXPECT_EQ(closeness(1, 0, 5), 0.0);
    EXPECT_EQ(closeness(1, 0, 1), 0.0);
    EXPECT_EQ(closeness(0, 0, 0), 0.0);
}

TEST(InverseClosenessLowerBound, DiamondSource) {
    // alpha=3, omega=5, n=4, gamma=2 at d=0; true 1/c(a) = 4/3
    const double lb = inverse_closeness_lower_bound(0, 0, 1, 2, 3, 5, 4);
    EXPECT_DOUBLE_EQ(lb, 1.125);
    EXPECT_LE(lb, 4.0 / 3.0);
}

TEST(InverseClosenessLowerBound, ExactReachabilityIsReciprocalOfUpperBound) {
    const Count n = 50, r = 20;
    for (std::uint32_t d : {0u, 1u, 3u}) {
        const Count f = 5 + d * 4, nd = 4 + d, gamma = 6;
        const auto lambda = farness_lower_bound(d, f, nd, gamma, r);
        ASSERT_GT(lambda, 0);
        const double lb = inverse_closeness_lower_bound(d, f, nd, gamma, r, r, n);
        EXPECT_DOUBLE_EQ(lb, 1.0 / closeness_upper_bound(lambda, r, n));
    }
}

TEST(InverseClosenessLowerBound, BothTermsNonPositive) {
    EXPECT_LE(inverse_closeness_lower_bound(0, 0, 1, 100, 2, 3, 10), 0.0);
}

TEST(InverseClosenessLowerBound, EndpointMinimumCoversInterior) {
    // the bound at every x in [alpha, omega] is at least the endpoint minimum
    for (std::uint32_t d = 0; d < 4; ++d) {
        for (Count gamma : {1u, 5u, 40u}) {
            const Count nd = 3 + d, f = 2 * d + 2;
            const Count alpha = 2, omega = 200, n = 500;
            const double lb = inverse_closeness_lower_bound(d, f, nd, gamma, alpha, omega, n);
            for (Count x = alpha; x <= omega; ++x) {
                const double at_x = static_cast<double>(n - 1) *
                                    static_cast<double>(farness_lower_bound(d, f, nd, gamma, x)) /
                                    static_cast<double>((x - 1) * (x - 1));
                EXPECT_LE(lb, at_x + 1e-12 * std::abs(at_x)) << "d=" << d << " gamma=" << gamma << " x=" << x;
            }
        }
    }
}
