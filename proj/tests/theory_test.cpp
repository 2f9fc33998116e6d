#include "dupdel/theory.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace dupdel {
namespace {

// Reference values computed independently with 40-digit arithmetic
// (peak-split quadrature of (d+1)*int y^d e^-y (1+y)^-(d+2) dy and the
// closed forms), frozen here.
constexpr double kC[6] = {
    0.403652637676806, 0.210957913030418, 0.123742144899239,
    0.0777737584011388, 0.0512488115033237, 0.0349736269061734,
};
constexpr double kAsym1 = 0.39548791160824896;
constexpr double kAsym100 = 1.9047261279237616e-8;
constexpr double kRatio250 = 0.94550011307269982;
constexpr double kRatio1000 = 0.97221201736942057;
constexpr double kRatio4000 = 0.98597096830173743;
constexpr double kSum200 = 0.99999999992241807;
constexpr double kTail200 = 1.6481609558758359e-10;

// Truncated-window c_0 oracle: substituting y = t/(1-t) turns the integral
// into int_0^1 exp(-t/(1-t)) dt, which composite Simpson nails because the
// integrand is flat-zero at t=1.
double simpson_c0(int intervals) {
    auto f = [](double t) { return t >= 1.0 ? 0.0 : std::exp(-t / (1.0 - t)); };
    const double h = 1.0 / intervals;
    double sum = f(0.0) + f(1.0);
    for (int i = 1; i < intervals; ++i) sum += f(i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

TEST(Quadrature, MatchesFrozenReferenceValues) {
    for (int d = 0; d <= 5; ++d)
        EXPECT_NEAR(cd_quadrature(d, 1e-10), kC[d], 1e-12) << "d=" << d;
}

TEST(Quadrature, MatchesTheIndependentSimpsonOracle) {
    EXPECT_NEAR(cd_quadrature(0, 1e-10), simpson_c0(2000), 1e-12);
}

TEST(Quadrature, ReportsItsOwnError) {
    const QuadratureResult r = cd_integral(3, 1e-8);
    EXPECT_GT(r.evals, 0u);
    EXPECT_LE(r.abs_error, 1e-8);
    EXPECT_NEAR(r.value, kC[3], 1e-8);
    EXPECT_NEAR(std::log(r.value), r.log_value, 1e-12);
}

TEST(Quadrature, LogSpaceSurvivesLargeD) {
    const QuadratureResult r = cd_integral(4000, 1e-10);
    EXPECT_GT(r.value, 0.0);  // ~2.67e-54: representable, and the log agrees
    EXPECT_NEAR(std::log(r.value), r.log_value, 1e-9);
    EXPECT_NEAR(r.log_value, cd_asymptotic_log(4000) + std::log(kRatio4000), 1e-7);
}

TEST(Quadrature, RejectsBadArguments) {
    EXPECT_THROW(cd_quadrature(-1, 1e-8), std::invalid_argument);
    EXPECT_THROW(cd_quadrature(1, 0.0), std::invalid_argument);
}

TEST(Asymptotic, ClosedFormAndLogAgree) {
    EXPECT_NEAR(cd_asymptotic(1), kAsym1, 1e-12);
    EXPECT_NEAR(cd_asymptotic(100) / kAsym100, 1.0, 1e-12);
    EXPECT_NEAR(std::exp(cd_asymptotic_log(4000)), cd_asymptotic(4000), 1e-60);
    EXPECT_THROW(cd_asymptotic(0), std::invalid_argument);
}

TEST(Asymptotic, RatioToQuadratureApproachesOneFromBelow) {
    const double r250 = std::exp(cd_quadrature_log(250, 1e-10) - cd_asymptotic_log(250));
    const double r1000 = std::exp(cd_quadrature_log(1000, 1e-10) - cd_asymptotic_log(1000));
    const double r4000 = std::exp(cd_quadrature_log(4000, 1e-10) - cd_asymptotic_log(4000));
    EXPECT_NEAR(r250, kRatio250, 1e-7);
    EXPECT_NEAR(r1000, kRatio1000, 1e-7);
    EXPECT_NEAR(r4000, kRatio4000, 1e-7);
    EXPECT_LT(r250, r1000);
    EXPECT_LT(r1000, r4000);
    EXPECT_LT(r4000, 1.0);
}

TEST(PeakLocation, ExactSmallCasesAndStationarity) {
    EXPECT_DOUBLE_EQ(peak_location(0), 0.0);
    EXPECT_DOUBLE_EQ(peak_location(4), 1.0);
    EXPECT_NEAR(peak_location(10000), 98.5112493673, 1e-8);
    // the exponent d*log y - (d+2)*log(1+y) - y is stationary there
    const int d = 10000;
    const double y = peak_location(d);
    const double fprime = d / y - (d + 2) / (1.0 + y) - 1.0;
    EXPECT_NEAR(fprime, 0.0, 1e-8);
    EXPECT_THROW(peak_location(-1), std::invalid_argument);
}

TEST(FixedPoint, MatchesQuadratureThroughTheCliqueDegreeBridge) {
    const FixedPointResult fp = fixed_point_yk(400, 1e-10);
    for (int d = 0; d <= 5; ++d)
        EXPECT_NEAR((d + 1) * fp.y[d + 1], kC[d], 1e-9) << "d=" << d;
    // cross-method agreement over a wider window
    for (int d = 0; d <= 50; ++d)
        EXPECT_NEAR((d + 1) * fp.y[d + 1], cd_quadrature(d, 1e-10), 1e-8) << "d=" << d;
}

TEST(FixedPoint, EnclosureIsMonotoneAndTight) {
    const FixedPointResult fp = fixed_point_yk(100, 1e-8);
    EXPECT_EQ(static_cast<std::size_t>(fp.sweeps), fp.enclosure_trace.size());
    EXPECT_LT(fp.enclosure, 1e-8);
    for (std::size_t j = 1; j < fp.enclosure_trace.size(); ++j)
        ASSERT_LE(fp.enclosure_trace[j], fp.enclosure_trace[j - 1]) << "sweep " << j;
    ASSERT_EQ(fp.lower.size(), fp.upper.size());
    for (std::size_t k = 0; k < fp.lower.size(); ++k) {
        ASSERT_LE(fp.lower[k], fp.upper[k]);
        ASSERT_GE(fp.lower[k], 0.0);
        ASSERT_LE(fp.upper[k], 1.0);
    }
    for (int k = 1; k <= fp.k_report; ++k) {
        ASSERT_GE(fp.y[k], fp.lower[k - 1]);
        ASSERT_LE(fp.y[k], fp.upper[k - 1]);
    }
}

// After one sweep from the constant bounds, the update rule gives
// b_k = 2k/(2k+1) and a_1 = 1/3, exactly in IEEE arithmetic; the window
// k <= k_report = 5 therefore shows the gap 10/11. A truncation this short
// floors near 3e-4, so the tolerance must sit above that to converge.
TEST(FixedPoint, FirstSweepClosedForm) {
    const FixedPointResult fp = fixed_point_yk(10, 1e-3);
    ASSERT_FALSE(fp.enclosure_trace.empty());
    EXPECT_EQ(fp.enclosure_trace[0], 10.0 / 11.0);
}

TEST(FixedPoint, ExhaustedBudgetThrowsWithTheAchievedEnclosure) {
    FixedPointOptions opts;
    opts.max_sweeps = 5;
    try {
        fixed_point_yk(100, 1e-12, opts);
        FAIL() << "expected SolverError";
    } catch (const SolverError& e) {
        EXPECT_GT(e.achieved(), 1e-12);
        EXPECT_LE(e.achieved(), 1.0);
    }
}

TEST(FixedPoint, TruncationDoublingBarelyMovesTheWindow) {
    const FixedPointResult a = fixed_point_yk(400, 1e-10);
    const FixedPointResult b = fixed_point_yk(800, 1e-10);
    for (int k = 1; k <= 50; ++k) EXPECT_NEAR(a.y[k], b.y[k], 1e-9) << "k=" << k;
}

TEST(FixedPoint, SerialAndParallelSweepsAgreeExactly) {
    FixedPointOptions serial;
    serial.parallel = false;
    const FixedPointResult a = fixed_point_yk(300, 1e-9, serial);
    const FixedPointResult b = fixed_point_yk(300, 1e-9);
    EXPECT_EQ(a.sweeps, b.sweeps);
    EXPECT_EQ(a.y, b.y);
    EXPECT_EQ(a.lower, b.lower);
    EXPECT_EQ(a.upper, b.upper);
}

TEST(FixedPoint, RejectsBadArguments) {
    EXPECT_THROW(fixed_point_yk(1, 1e-8), std::invalid_argument);
    EXPECT_THROW(fixed_point_yk(100, -1.0), std::invalid_argument);
}

TEST(Conversions, CliqueAndDegreeViewsRoundTrip) {
    const std::vector<double> cd = {1.0, 2.0, 3.0};
    const std::vector<double> yk = yk_from_cd(cd);
    ASSERT_EQ(yk.size(), 4u);
    EXPECT_DOUBLE_EQ(yk[0], 0.0);  // index 0 unused
    EXPECT_DOUBLE_EQ(yk[1], 1.0);
    EXPECT_DOUBLE_EQ(yk[2], 1.0);
    EXPECT_DOUBLE_EQ(yk[3], 1.0);
    EXPECT_EQ(cd_from_yk(yk), cd);
}

TEST(Normalization, FrozenSumTailAndResidual) {
    const std::vector<double> table = cd_table_quadrature(200, 1e-10);
    double sum = 0.0;
    for (double c : table) sum += c;
    EXPECT_NEAR(sum, kSum200, 1e-10);
    EXPECT_NEAR(asymptotic_tail_mass(200) / kTail200, 1.0, 1e-9);
    EXPECT_LT(normalization_check(table, true), 1e-9);
    EXPECT_NEAR(normalization_check(table, false), 1.0 - kSum200, 1e-10);
}

TEST(Normalization, ExactOnSyntheticInput) {
    const std::vector<double> cd = {0.25, 0.25, 0.5};
    EXPECT_DOUBLE_EQ(normalization_check(cd, false), 0.0);
}

TEST(Recursion, ResidualsVanishOnQuadratureOutput) {
    const std::vector<double> cd = cd_table_quadrature(200, 1e-10);
    EXPECT_LT(std::abs(3.0 * cd[0] - 1.0 - cd[1]), 1e-9);
    for (int d = 1; d <= 199; ++d) {
        const double residual = (2.0 * d + 3.0) * cd[d] - (d + 1.0) * (cd[d - 1] + cd[d + 1]);
        ASSERT_LT(std::abs(residual), 1e-9) << "d=" << d;
    }
}

TEST(TableQuadrature, ParallelMatchesSerialExactly) {
    EXPECT_EQ(cd_table_quadrature(40, 1e-9), cd_table_quadrature_serial(40, 1e-9));
}

}  // namespace
}  // namespace dupdel
