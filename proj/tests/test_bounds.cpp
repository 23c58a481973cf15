#include "doctest.h"

#include <cmath>

#include "permsum/bounds.hpp"
#include "permsum/errors.hpp"
#include "permsum/moments.hpp"

using namespace permsum;
using doctest::Approx;

namespace {

// reference values frozen from a high-precision evaluation of the closed forms
constexpr double kTheta = 2.0798640550036076;        // (5/2) ln 3 - 2/3
constexpr double kExpMinus2 = 0.1353352832366127;    // e^-2
constexpr double kSqrt8 = 2.8284271247461903;
constexpr double kChatterjeeT2 = 1.2130613194252668;     // 2 e^-1/2
constexpr double kBdrUnit = 3.897733039230015;           // 4 exp(-1 / (16 (theta + 1/3)))
constexpr double kTwoExpMinus1 = 0.7357588823428847;     // 2 e^-1
constexpr double kEightExpMinus1 = 2.9430355293715387;   // 8 e^-1
constexpr double kSixteenLn8 = 33.27106466687737;
constexpr double kMeanPosProbT8 = 6.972274799977263;     // 8 e^{1/16} e^{-1/5}
constexpr double kGenThreshold = 4.82842712474619;       // 2 sqrt(2) + 2
constexpr double kGenProbT16 = 16.058931793535617;       // 16 e^{1/16} e^{-1/17}
constexpr double kGaussX16 = 6.265690026828784;          // 16 e^{1/16} e^-1
constexpr double kGaussX1R1 = 16.9986783554981;          // 16 e^{1/16} e^{-1/512}
constexpr double kSqrtHalf = 0.7071067811865476;

coefficient_matrix centered_identity2() {
    return hoeffding_centering(coefficient_matrix(2, {1, 0, 0, 1}));
}

} // namespace

TEST_CASE("classical bernstein forms") {
    const bound_evaluation s = bernstein_classical_stat(4.0, 1.0, 2.0);
    CHECK(s.family == "bernstein-classical-stat");
    CHECK(s.z_threshold.value() == Approx(6.0).epsilon(1e-15));
    CHECK(s.threshold_split.value().first == Approx(4.0).epsilon(1e-15));
    CHECK(s.threshold_split.value().second == Approx(2.0).epsilon(1e-15));
    CHECK(s.probability_bound == Approx(kExpMinus2).epsilon(1e-14));

    const bound_evaluation p = bernstein_classical_prob(2.0, 0.0, kSqrt8);
    CHECK(p.probability_bound == Approx(kExpMinus2).epsilon(1e-14));
    CHECK(p.z_threshold.value() == kSqrt8);

    CHECK_THROWS_AS(bernstein_classical_stat(0.0, 1.0, 1.0), invalid_parameter_error);
    CHECK_THROWS_AS(bernstein_classical_prob(-1.0, 1.0, 1.0), invalid_parameter_error);
    CHECK_THROWS_AS(bernstein_classical_stat(1.0, -1.0, 1.0), invalid_parameter_error);
}

TEST_CASE("chatterjee bound and its rescaled branch") {
    const bound_evaluation u = chatterjee_bound(1.0, 1.0, 2.0);
    CHECK(u.probability_bound == Approx(kChatterjeeT2).epsilon(1e-14));
    CHECK(u.note == "unit-range form");

    const bound_evaluation r = chatterjee_bound(1.0, 2.0, 2.0);
    CHECK(r.note == "rescaled form (max_a > 1)");
    CHECK(r.probability_bound == Approx(2.0 * std::exp(-0.25)).epsilon(1e-14));
    // rescaling can only weaken the bound
    CHECK(r.probability_bound > u.probability_bound);

    // all mass at the center: the raw bound degenerates to the prefactor at t = 0
    const bound_evaluation z = chatterjee_bound(0.0, 0.0, 0.0);
    CHECK(z.probability_bound == 2.0);
    // ... and to zero tail mass at any t > 0
    CHECK(mean_bound_general_prob_var(0.0, 0.0, 1.0).probability_bound == 0.0);
    CHECK_THROWS_AS(chatterjee_bound(-1.0, 1.0, 1.0), invalid_parameter_error);
}

TEST_CASE("bercu-delyon-rio bound") {
    const bound_evaluation e = bdr_bound(1.0, 1.0, 1.0);
    CHECK(e.probability_bound == Approx(kBdrUnit).epsilon(1e-14));
    CHECK(e.constants.at("theta") == Approx(kTheta).epsilon(1e-15));
    CHECK(bdr_bound(1.0, 0.0, 0.0).probability_bound == 4.0);
    CHECK_THROWS_AS(bdr_bound(0.0, 0.0, 1.0), invalid_parameter_error);
}

TEST_CASE("square-root concentration around the median") {
    const bound_evaluation up = sqrt_median_bound(1.0, 1.0, 4.0, tail_side::upper);
    CHECK(up.family == "sqrt-median-upper");
    CHECK(up.probability_bound == Approx(kTwoExpMinus1).epsilon(1e-14));
    CHECK(up.z_threshold.value() == Approx(25.0).epsilon(1e-14));

    const bound_evaluation lo = sqrt_median_bound(1.0, 1.0, 4.0, tail_side::lower);
    CHECK(lo.probability_bound == Approx(kTwoExpMinus1).epsilon(1e-14));
    CHECK(lo.z_threshold.value() == 0.0);  // clamped: sqrt(med) - t sqrt(max_a) < 0

    const bound_evaluation two = sqrt_median_bound(1.0, 1.0, 4.0, tail_side::two_sided);
    CHECK(two.probability_bound == Approx(2.0 * kTwoExpMinus1).epsilon(1e-14));

    const bound_evaluation deg = sqrt_median_bound(0.0, 0.0, 3.0, tail_side::upper);
    CHECK(deg.probability_bound == 1.0);
    CHECK(deg.z_threshold.value() == 0.0);
    CHECK(deg.note == "degenerate: zero matrix, all mass at the center");
}

TEST_CASE("median-centered bound for non-negative entries") {
    const bound_evaluation one = median_bound_pos(1.0, 1.0, kSixteenLn8);
    CHECK(one.probability_bound == Approx(1.0).epsilon(1e-14));

    const bound_evaluation e = median_bound_pos(1.0, 1.0, 16.0);
    CHECK(e.z_threshold.value() == Approx(20.0).epsilon(1e-15));
    CHECK(e.probability_bound == Approx(kEightExpMinus1).epsilon(1e-14));
    CHECK(e.note == "strict deviation: P(|Z - med Z| > threshold)");
}

TEST_CASE("mean-centered bounds for non-negative entries") {
    const bound_evaluation th = mean_bound_pos_threshold(1.0, 1.0, 1.0);
    CHECK(th.z_threshold.value() == Approx(3.0).epsilon(1e-15));
    CHECK(th.threshold_split.value().first == Approx(2.0).epsilon(1e-15));
    CHECK(th.probability_bound == Approx(8.0).epsilon(1e-14));  // prefactor e^{1/16} cancels

    const bound_evaluation pr = mean_bound_pos_prob(1.0, 1.0, 8.0);
    CHECK(pr.probability_bound == Approx(kMeanPosProbT8).epsilon(1e-14));

    const bound_evaluation deg = mean_bound_pos_threshold(0.0, 0.0, 2.0);
    CHECK(deg.probability_bound == 1.0);
    CHECK(mean_bound_pos_prob(0.0, 0.0, 0.0).probability_bound ==
          Approx(8.515955671342875).epsilon(1e-15));
}

TEST_CASE("mean-centered bounds for arbitrary signs") {
    const bound_evaluation th = mean_bound_general_threshold(1.0, 1.0, 1.0);
    CHECK(th.z_threshold.value() == Approx(kGenThreshold).epsilon(1e-14));
    CHECK(th.probability_bound == Approx(16.0).epsilon(1e-14));

    const bound_evaluation pv = mean_bound_general_prob_var(1.0, 1.0, 16.0);
    CHECK(pv.probability_bound == Approx(kGenProbT16).epsilon(1e-14));

    const bound_evaluation pd = mean_bound_general_prob_d(1.0, 0.0, 16.0);
    CHECK(pd.family == "general-d-form");
    CHECK(pd.probability_bound == Approx(kGaussX16).epsilon(1e-14));
}

TEST_CASE("gaussian-style tail in sqrt(Var Z) units") {
    const bound_evaluation a = gaussian_tail_form(0.0, 16.0);
    CHECK(a.probability_bound == Approx(kGaussX16).epsilon(1e-14));
    CHECK(a.note == "deviations in sqrt(Var Z) units");
    const bound_evaluation b = gaussian_tail_form(1.0, 1.0);
    CHECK(b.probability_bound == Approx(kGaussX1R1).epsilon(1e-14));
    CHECK_FALSE(a.z_threshold.has_value());
}

TEST_CASE("probability bounds are non-increasing in the deviation") {
    double prev_ch = 1e300, prev_bdr = 1e300, prev_mg = 1e300, prev_g = 1e300;
    for (int k = 0; k <= 80; ++k) {
        const double t = 0.25 * k;
        const double ch = chatterjee_bound(2.0, 1.0, t).probability_bound;
        const double bd = bdr_bound(2.0, 1.0, t).probability_bound;
        const double mg = mean_bound_general_prob_var(2.0, 1.0, t).probability_bound;
        const double ga = gaussian_tail_form(0.5, t).probability_bound;
        CHECK(ch <= prev_ch);
        CHECK(bd <= prev_bdr);
        CHECK(mg <= prev_mg);
        CHECK(ga <= prev_g);
        prev_ch = ch;
        prev_bdr = bd;
        prev_mg = mg;
        prev_g = ga;
    }
    // threshold forms: threshold grows, bound shrinks
    double prev_thr = -1.0, prev_b = 1e300;
    for (int k = 0; k <= 40; ++k) {
        const double x = 0.5 * k;
        const bound_evaluation e = mean_bound_pos_threshold(2.0, 1.0, x);
        CHECK(e.z_threshold.value() >= prev_thr);
        CHECK(e.probability_bound <= prev_b);
        prev_thr = e.z_threshold.value();
        prev_b = e.probability_bound;
    }
}

TEST_CASE("capped() truncates at one") {
    CHECK(mean_bound_general_threshold(1.0, 1.0, 0.0).capped() == 1.0);
    CHECK(bernstein_classical_stat(1.0, 0.0, 9.0).capped() ==
          Approx(std::exp(-9.0)).epsilon(1e-14));
}

TEST_CASE("bernstein rate function h1 and its inverse") {
    CHECK(h1(4.0) == Approx(2.0).epsilon(1e-15));
    CHECK(h1_inv(2.0) == Approx(4.0).epsilon(1e-15));
    CHECK(h1(0.0) == 0.0);
    CHECK(h1_inv(0.0) == 0.0);
    for (int k = 0; k <= 1000; ++k) {
        const double v = static_cast<double>(k);
        CHECK(h1(h1_inv(v)) == Approx(v).epsilon(1e-12));
    }
    // tiny u: the cancellation-free form keeps h1(u) ~ u^2/2 accurate
    CHECK(h1(1e-8) == Approx(5e-17).epsilon(1e-9));
    CHECK_THROWS_AS(h1(-0.5), invalid_parameter_error);
}

TEST_CASE("asymptotic-normality diagnostics on the centered matrix") {
    const coefficient_matrix d = centered_identity2();
    CHECK(hoeffding_condition_r(d, 4.0) == Approx(0.5).epsilon(1e-14));
    CHECK(hoeffding_condition_max(d) == Approx(kSqrtHalf).epsilon(1e-14));
    CHECK(lindeberg_sum(d, 0.5) == Approx(2.0).epsilon(1e-14));
    CHECK(lindeberg_sum(d, 0.8) == 0.0);  // strict inequality in the indicator

    // both ratios are scale invariant
    std::vector<double> scaled;
    for (double v : d.entries()) scaled.push_back(3.0 * v);
    const coefficient_matrix d3(2, scaled);
    CHECK(hoeffding_condition_r(d3, 3.0) ==
          Approx(hoeffding_condition_r(d, 3.0)).epsilon(1e-13));
    CHECK(hoeffding_condition_max(d3) == Approx(hoeffding_condition_max(d)).epsilon(1e-13));

    CHECK_THROWS_AS(hoeffding_condition_r(d, 2.0), invalid_parameter_error);
    CHECK_THROWS_AS(lindeberg_sum(d, 0.0), invalid_parameter_error);
    const coefficient_matrix zero = coefficient_matrix::constant(3, 0.0);
    CHECK_THROWS_AS(hoeffding_condition_r(zero, 3.0), degenerate_input_error);
    CHECK_THROWS_AS(hoeffding_condition_max(zero), degenerate_input_error);
    CHECK_THROWS_AS(lindeberg_sum(zero, 0.5), degenerate_input_error);
}
