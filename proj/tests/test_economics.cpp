#include "haulsim/economics.hpp"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "haulsim/errors.hpp"

using namespace haulsim;

namespace {

Scenario hand_scenario(bool replacement) {
    Scenario s;
    s.diesel_price = 3.0;
    s.electricity_price = 0.10;
    s.e_efficiency = 2.0;
    s.d_efficiency_mpg = 7.0;
    s.d_repairs = 0.15;
    s.annual_mileage = 90000.0;
    s.general_op = 0.78;
    s.battery_price = 100.0;
    s.needs_replacement = replacement;
    s.replacement_year = 330000.0 / 90000.0;
    return s;
}

}  // namespace

TEST(PresentValue, MatchesHandValue) {
    EXPECT_NEAR(present_value(100000.0, 5.0, 0.03), 86260.87843841639, 1e-6);
    EXPECT_DOUBLE_EQ(present_value(1234.5, 0.0, 0.07), 1234.5);
    EXPECT_DOUBLE_EQ(present_value(500.0, 3.0, 0.0), 500.0);
    EXPECT_THROW(present_value(1.0, -1.0, 0.03), ArgumentError);
    EXPECT_THROW(present_value(1.0, 1.0, -1.0), ArgumentError);
}

TEST(PresentValue, InvertsCompounding) {
    double a = 77777.0;
    for (double y : {0.5, 3.0, 11.7}) {
        EXPECT_NEAR(present_value(a, y, 0.045) * std::pow(1.045, y), a, 1e-9 * a);
    }
}

TEST(CapitalRecovery, MatchesHandValues) {
    EXPECT_NEAR(capital_recovery_factor(0.03, 11.1), 0.10725357297844255, 1e-12);
    EXPECT_NEAR(capital_recovery_factor(0.03, 1e6 / 90000.0),
                0.1071629548670447, 1e-12);
    EXPECT_DOUBLE_EQ(capital_recovery_factor(0.0, 7.0), 1.0 / 7.0);
    EXPECT_THROW(capital_recovery_factor(0.03, 0.0), ArgumentError);
}

TEST(CapitalRecovery, LevelPaymentsRepayPrincipal) {
    // the discounted stream of CRF-sized payments over an integer horizon
    // sums to exactly the principal
    double rate = 0.03;
    int years = 17;
    double crf = capital_recovery_factor(rate, years);
    double total = 0.0;
    for (int k = 1; k <= years; ++k) {
        total += crf / std::pow(1.0 + rate, k);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Sampling, DeterministicForFixedSeed) {
    ParameterRanges r = baseline_ranges();
    auto a = sample_scenarios(r, 500, 11, 42);
    auto b = sample_scenarios(r, 500, 11, 42);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].diesel_price, b[i].diesel_price);
        EXPECT_EQ(a[i].battery_price, b[i].battery_price);
        EXPECT_EQ(a[i].needs_replacement, b[i].needs_replacement);
    }
    auto c = sample_scenarios(r, 500, 11, 43);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        differs = differs || a[i].diesel_price != c[i].diesel_price;
    }
    EXPECT_TRUE(differs);
}

TEST(Sampling, ValuesSitOnTheGrid) {
    ParameterRanges r = baseline_ranges();
    auto scenarios = sample_scenarios(r, 2000, 11, 7);
    auto on_grid = [](double v, const Interval& iv, int gp) {
        double step = (iv.hi - iv.lo) / (gp - 1);
        double k = (v - iv.lo) / step;
        return std::abs(k - std::round(k)) < 1e-9 && v >= iv.lo - 1e-12 &&
               v <= iv.hi + 1e-12;
    };
    for (const Scenario& s : scenarios) {
        EXPECT_TRUE(on_grid(s.diesel_price, r.diesel_price, 11));
        EXPECT_TRUE(on_grid(s.electricity_price, r.electricity_price, 11));
        EXPECT_TRUE(on_grid(s.e_efficiency, r.e_efficiency, 11));
        EXPECT_TRUE(on_grid(s.d_efficiency_mpg, r.d_efficiency, 11));
        EXPECT_TRUE(on_grid(s.annual_mileage, r.annual_mileage, 11));
        EXPECT_DOUBLE_EQ(s.replacement_year, r.replacement_miles / s.annual_mileage);
    }
    // all grid points show up in a draw this large
    for (int k = 0; k < 11; ++k) {
        double want = r.diesel_price.lo + (r.diesel_price.hi - r.diesel_price.lo) * k / 10.0;
        bool seen = false;
        for (const Scenario& s : scenarios) {
            seen = seen || std::abs(s.diesel_price - want) < 1e-9;
        }
        EXPECT_TRUE(seen) << "grid point " << k << " never drawn";
    }
}

TEST(Sampling, ReplacementTogglesWithoutDisturbingMarketDraws) {
    ParameterRanges none = baseline_ranges();
    none.replacement_fraction = 0.0;
    ParameterRanges all = baseline_ranges();
    all.replacement_fraction = 1.0;
    ParameterRanges some = baseline_ranges();

    auto a = sample_scenarios(none, 1000, 11, 42);
    auto b = sample_scenarios(all, 1000, 11, 42);
    auto c = sample_scenarios(some, 1000, 11, 42);
    std::size_t replaced = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_FALSE(a[i].needs_replacement);
        EXPECT_TRUE(b[i].needs_replacement);
        replaced += c[i].needs_replacement;
        EXPECT_EQ(a[i].diesel_price, b[i].diesel_price);
        EXPECT_EQ(a[i].e_efficiency, c[i].e_efficiency);
        EXPECT_EQ(b[i].annual_mileage, c[i].annual_mileage);
        EXPECT_EQ(b[i].battery_price, c[i].battery_price);
    }
    // 30% of 1000, loose binomial bound
    EXPECT_GT(replaced, 240u);
    EXPECT_LT(replaced, 360u);
}

TEST(Sampling, SingleGridPointCollapsesToLow) {
    ParameterRanges r = baseline_ranges();
    r.diesel_price = {3.3, 3.3};
    auto scenarios = sample_scenarios(r, 50, 1, 9);
    for (const Scenario& s : scenarios) {
        EXPECT_DOUBLE_EQ(s.diesel_price, 3.3);
        EXPECT_DOUBLE_EQ(s.electricity_price, 0.07);  // low end of its range
    }
}

TEST(Sampling, RejectsBadArguments) {
    ParameterRanges r = baseline_ranges();
    EXPECT_THROW(sample_scenarios(r, 0, 11, 1), ArgumentError);
    EXPECT_THROW(sample_scenarios(r, 10, 0, 1), ArgumentError);
    r.diesel_price = {4.0, 2.0};
    EXPECT_THROW(sample_scenarios(r, 10, 11, 1), ConfigError);
}

TEST(ValidateRanges, CatchesBadAssumptions) {
    ParameterRanges r = baseline_ranges();
    r.replacement_fraction = 1.5;
    EXPECT_THROW(validate_ranges(r), ConfigError);
    r = baseline_ranges();
    r.lifetime_miles = 0;
    EXPECT_THROW(validate_ranges(r), ConfigError);
    r = baseline_ranges();
    r.e_efficiency.lo = -0.1;
    EXPECT_THROW(validate_ranges(r), ConfigError);
    EXPECT_NO_THROW(validate_ranges(baseline_ranges()));
}

TEST(CostPerMile, MatchesHandScenario) {
    ParameterRanges r = baseline_ranges();
    CostPerMile plain = cost_per_mile(hand_scenario(false), r);
    EXPECT_NEAR(plain.diesel, 1.5371763533498364, 1e-12);
    EXPECT_NEAR(plain.electric, 1.2181398997045438, 1e-12);

    CostPerMile replaced = cost_per_mile(hand_scenario(true), r);
    EXPECT_DOUBLE_EQ(replaced.diesel, plain.diesel);
    EXPECT_NEAR(replaced.electric, 1.3249795226854215, 1e-12);
    EXPECT_NEAR(replacement_cost_pv(hand_scenario(true), r), 89728.45215222801,
                1e-6);
}

TEST(CostPerMile, ReplacementDeltaIsDiscountedPackAmortized) {
    // the only difference replacement makes is the discounted pack cost run
    // through the same amortization as the purchase price
    ParameterRanges r = baseline_ranges();
    Scenario s = hand_scenario(false);
    Scenario t = hand_scenario(true);
    double crf = capital_recovery_factor(r.discount_rate,
                                         r.lifetime_miles / s.annual_mileage);
    double expected_delta =
        replacement_cost_pv(t, r) * crf / s.annual_mileage;
    EXPECT_NEAR(cost_per_mile(t, r).electric - cost_per_mile(s, r).electric,
                expected_delta, 1e-12);
}

TEST(Distribution, SummaryStatistics) {
    Distribution d = make_distribution({2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0});
    EXPECT_DOUBLE_EQ(d.mean, 5.0);
    EXPECT_DOUBLE_EQ(d.std_dev, 2.0);  // classic population-sd example
    EXPECT_DOUBLE_EQ(d.min, 2.0);
    EXPECT_DOUBLE_EQ(d.max, 9.0);

    EXPECT_DOUBLE_EQ(median_of({5.0, 1.0, 3.0}), 3.0);
    EXPECT_DOUBLE_EQ(median_of({4.0, 1.0, 3.0, 2.0}), 2.5);
    EXPECT_DOUBLE_EQ(median_of({}), 0.0);
}

TEST(CpmDistribution, ThreadCountDoesNotChangeBytes) {
    ParameterRanges r = baseline_ranges();
    auto scenarios = sample_scenarios(r, 4000, 11, 42);
    CpmDistributions one = cpm_distribution(scenarios, r, 1);
    CpmDistributions four = cpm_distribution(scenarios, r, 4);
    ASSERT_EQ(one.diesel.samples.size(), four.diesel.samples.size());
    for (std::size_t i = 0; i < one.diesel.samples.size(); ++i) {
        EXPECT_EQ(one.diesel.samples[i], four.diesel.samples[i]);
        EXPECT_EQ(one.electric.samples[i], four.electric.samples[i]);
    }
    EXPECT_EQ(one.electric.mean, four.electric.mean);
    EXPECT_THROW(cpm_distribution(scenarios, r, 0), ArgumentError);
}

TEST(CpmDistribution, PerScenarioReplacementIdentity) {
    // matched draws: toggling the coin adds exactly the amortized discounted
    // pack for that scenario and nothing else
    ParameterRanges none = baseline_ranges();
    none.replacement_fraction = 0.0;
    ParameterRanges all = baseline_ranges();
    all.replacement_fraction = 1.0;
    auto a = sample_scenarios(none, 2000, 11, 42);
    auto b = sample_scenarios(all, 2000, 11, 42);
    CpmDistributions ca = cpm_distribution(a, none, 1);
    CpmDistributions cb = cpm_distribution(b, all, 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        double crf = capital_recovery_factor(
            none.discount_rate, none.lifetime_miles / a[i].annual_mileage);
        double delta = replacement_cost_pv(b[i], all) * crf / a[i].annual_mileage;
        EXPECT_NEAR(cb.electric.samples[i] - ca.electric.samples[i], delta,
                    1e-12);
        EXPECT_EQ(cb.diesel.samples[i], ca.diesel.samples[i]);
    }
}
