#include "haulsim/battery.hpp"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "haulsim/errors.hpp"

using namespace haulsim;

namespace {

FadeParams plain_fade() {
    // only the per-cycle term, squared in depth: loss = d0 * fec^2
    FadeParams f;
    f.base_loss_per_fec = 1.1e-4;
    f.depth_stress_exponent = 1.0;
    f.charge_rate_penalty = 0.0;
    f.grade_penalty = 0.0;
    f.calendar_loss_per_day = 0.0;
    return f;
}

}  // namespace

TEST(SizePack, ScalesRangeByIntensity) {
    PackSpec p = size_pack(500.0, 2.0);
    EXPECT_DOUBLE_EQ(p.capacity_kwh, 1000.0);
    EXPECT_DOUBLE_EQ(p.range_mi, 500.0);
    EXPECT_THROW(size_pack(0.0, 2.0), ArgumentError);
    EXPECT_THROW(size_pack(500.0, 0.0), ArgumentError);
}

TEST(SimulateLife, MatchesIndependentRecurrence) {
    FadeParams fade = plain_fade();
    PackSpec pack{1000.0, 500.0};
    RoadProfile flat;
    LifeTrace trace = simulate_life(540.0, 270.0, pack, fade, 1.0, flat, 3e5);

    double cf = 1.0;
    ASSERT_GT(trace.miles.size(), 2u);
    for (std::size_t day = 1; day < trace.miles.size(); ++day) {
        double fec = 540.0 / (1000.0 * cf);
        cf -= 1.1e-4 * fec * fec;
        EXPECT_NEAR(trace.capacity_fraction[day], cf, 1e-15);
        EXPECT_DOUBLE_EQ(trace.miles[day], 270.0 * static_cast<double>(day));
    }
}

TEST(SimulateLife, TracksCubeRootClosedFormEarlyOn) {
    // with loss = c / cf^2 per day, the continuum limit is
    // cf(t) = (1 - 3 c t)^(1/3); the day recurrence should hug it while the
    // step is small relative to remaining capacity
    FadeParams fade = plain_fade();
    PackSpec pack{1000.0, 500.0};
    RoadProfile flat;
    LifeTrace trace = simulate_life(540.0, 270.0, pack, fade, 1.0, flat, 1.2e6);
    double c = 1.1e-4 * 540.0 / 1000.0 * 540.0 / 1000.0;
    for (std::size_t day = 0; day < trace.miles.size(); day += 500) {
        double closed = std::cbrt(1.0 - 3.0 * c * static_cast<double>(day));
        EXPECT_NEAR(trace.capacity_fraction[day], closed,
                    0.01 * trace.capacity_fraction[day])
            << "day " << day;
    }
}

TEST(SimulateLife, PenaltiesAccelerateFade) {
    FadeParams fade = plain_fade();
    PackSpec pack{1000.0, 500.0};
    RoadProfile flat;
    RoadProfile hill{0.01, 0.1};
    FadeParams stressed = fade;
    stressed.charge_rate_penalty = 0.15;
    stressed.grade_penalty = 21.0;

    auto eol = [&](const FadeParams& f, double c_rate, const RoadProfile& road) {
        LifeTrace t = simulate_life(540.0, 270.0, pack, f, c_rate, road, 2e6);
        auto m = miles_to_eol(t, 0.80);
        return m ? *m : 2.1e6;
    };
    double base = eol(fade, 1.0, flat);
    EXPECT_LT(eol(stressed, 2.0, flat), base);
    EXPECT_LT(eol(stressed, 3.0, flat), eol(stressed, 2.0, flat));
    EXPECT_LT(eol(stressed, 1.0, hill), base);
    // no penalty at or below 1C
    EXPECT_DOUBLE_EQ(eol(stressed, 0.5, flat), eol(stressed, 1.0, flat));
}

TEST(SimulateLife, ZeroFadeRunsToHorizonAtFullCapacity) {
    FadeParams none;
    none.base_loss_per_fec = 0;
    none.charge_rate_penalty = 0;
    none.grade_penalty = 0;
    none.calendar_loss_per_day = 0;
    none.depth_stress_exponent = 0;
    PackSpec pack{1000.0, 500.0};
    RoadProfile flat;
    LifeTrace trace = simulate_life(540.0, 270.0, pack, none, 3.0, flat, 1e5);
    EXPECT_GE(trace.miles.back(), 1e5);
    for (double cf : trace.capacity_fraction) {
        EXPECT_DOUBLE_EQ(cf, 1.0);
    }
    EXPECT_FALSE(miles_to_eol(trace, 0.80).has_value());
}

TEST(SimulateLife, CapacityStrictlyDecreasesUnderLoad) {
    FadeParams fade;  // stock settings
    PackSpec pack{984.0, 500.0};
    RoadProfile flat;
    LifeTrace trace = simulate_life(531.0, 270.0, pack, fade, 1.0, flat, 1.2e6);
    for (std::size_t i = 1; i < trace.capacity_fraction.size(); ++i) {
        EXPECT_LT(trace.capacity_fraction[i], trace.capacity_fraction[i - 1]);
    }
}

TEST(SimulateLife, ImplausibleDailyLossIsRejected) {
    FadeParams fade;
    PackSpec tiny{20.0, 10.0};  // 27 equivalent full cycles a day
    RoadProfile flat;
    EXPECT_THROW(simulate_life(540.0, 270.0, tiny, fade, 1.0, flat, 1e6),
                 ConfigError);
}

TEST(MilesToEol, FindsFirstCrossing) {
    LifeTrace t;
    t.miles = {0, 100, 200, 300};
    t.capacity_fraction = {1.0, 0.9, 0.79, 0.5};
    auto m = miles_to_eol(t, 0.80);
    ASSERT_TRUE(m.has_value());
    EXPECT_DOUBLE_EQ(*m, 200.0);
    EXPECT_FALSE(miles_to_eol(t, 0.4).has_value());
}

TEST(ReferenceCases, FrozenHeadlineNumbers) {
    VehicleParams truck;
    FadeParams fade;
    auto cases = run_reference_cases(truck, fade);
    ASSERT_EQ(cases.size(), 6u);

    // calibrated duty intensities, kWh/mi on the stitched day
    EXPECT_NEAR(cases[0].energy_per_mile, 1.968, 2e-3);  // A composite platoon
    EXPECT_NEAR(cases[1].energy_per_mile, 1.958, 2e-3);  // B cruise
    EXPECT_NEAR(cases[2].energy_per_mile, 2.325, 2e-3);  // C mountain
    EXPECT_NEAR(cases[3].energy_per_mile, 1.966, 2e-3);  // D composite 400
    EXPECT_NEAR(cases[4].energy_per_mile, 1.956, 2e-3);  // E cruise 400
    EXPECT_NEAR(cases[5].energy_per_mile, 2.323, 2e-3);  // F mountain 400

    // 500 mi packs sized off those intensities
    EXPECT_NEAR(cases[0].pack.capacity_kwh, 984.0, 1.5);
    EXPECT_NEAR(cases[2].pack.capacity_kwh, 1162.0, 1.5);

    // end of life: the easy duties outlive the trace, the hard ones do not
    EXPECT_FALSE(cases[0].eol_miles.has_value());
    ASSERT_TRUE(cases[1].eol_miles.has_value());
    EXPECT_NEAR(*cases[1].eol_miles, 1071098.0, 1500.0);
    ASSERT_TRUE(cases[2].eol_miles.has_value());
    EXPECT_NEAR(*cases[2].eol_miles, 329416.0, 700.0);
    ASSERT_TRUE(cases[3].eol_miles.has_value());
    EXPECT_NEAR(*cases[3].eol_miles, 873232.0, 1200.0);
    ASSERT_TRUE(cases[4].eol_miles.has_value());
    EXPECT_NEAR(*cases[4].eol_miles, 764814.0, 1200.0);
    ASSERT_TRUE(cases[5].eol_miles.has_value());
    EXPECT_NEAR(*cases[5].eol_miles, 226405.0, 700.0);

    for (const CaseResult& c : cases) {
        EXPECT_DOUBLE_EQ(c.pack.capacity_kwh, 500.0 * c.energy_per_mile);
        EXPECT_GT(c.daily_energy_kwh, 0.0);
    }
}

TEST(LifeCsv, DecimatesAndKeepsFinalRow) {
    LifeTrace t;
    t.rated_range_mi = 500.0;
    for (int i = 0; i <= 6000; ++i) {
        t.miles.push_back(i * 270.0);
        t.capacity_fraction.push_back(1.0 - i * 1e-5);
    }
    std::ostringstream out;
    write_life_csv(out, t, 2000);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "miles,capacity_fraction,available_range_mi");
    std::size_t rows = 0;
    std::string last;
    while (std::getline(in, line)) {
        ++rows;
        last = line;
    }
    EXPECT_LE(rows, 2001u);
    EXPECT_EQ(last.substr(0, last.find(',')), "1620000");
}
