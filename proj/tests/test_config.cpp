#include "haulsim/config.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "haulsim/errors.hpp"

using namespace haulsim;

TEST(Config, DefaultsAreTheBaselineStudy) {
    RunConfig cfg = default_config();
    EXPECT_DOUBLE_EQ(cfg.vehicle.cd, 0.40);
    EXPECT_DOUBLE_EQ(cfg.vehicle.mass_kg, 36360.0);
    EXPECT_DOUBLE_EQ(cfg.fade.base_loss_per_fec, 1.1e-4);
    EXPECT_DOUBLE_EQ(cfg.ranges.diesel_price.lo, 2.21);
    EXPECT_DOUBLE_EQ(cfg.ranges.diesel_price.hi, 4.19);
    EXPECT_DOUBLE_EQ(cfg.ranges.e_initial_price, 200000.0);
    EXPECT_DOUBLE_EQ(cfg.pack_range_mi, 500.0);
    EXPECT_EQ(cfg.seed, 42u);
    EXPECT_EQ(cfg.samples, 50000u);
    EXPECT_EQ(cfg.grid_points, 11);
    EXPECT_EQ(cfg.threads, 1);
    EXPECT_DOUBLE_EQ(cfg.replacement_miles_override, 0.0);
    EXPECT_NO_THROW(validate_config(cfg));
}

TEST(Config, ParsesKeysCommentsAndBlanks) {
    std::istringstream in(
        "# tuned-down run\n"
        "vehicle.cd = 0.55\n"
        "\n"
        "road.grade = 0.02   # trailing note\n"
        "fade.grade_penalty = 10\n"
        "ranges.diesel_price_min = 2.50\n"
        "ranges.replacement_fraction = 0.5\n"
        "replacement.miles = 280000\n"
        "run.seed = 7\n"
        "run.samples = 1000\n"
        "run.grid_points = 5\n"
        "run.threads = 2\n");
    RunConfig cfg = parse_config(in, "test.cfg");
    EXPECT_DOUBLE_EQ(cfg.vehicle.cd, 0.55);
    EXPECT_DOUBLE_EQ(cfg.road.grade, 0.02);
    EXPECT_DOUBLE_EQ(cfg.fade.grade_penalty, 10.0);
    EXPECT_DOUBLE_EQ(cfg.ranges.diesel_price.lo, 2.50);
    EXPECT_DOUBLE_EQ(cfg.ranges.replacement_fraction, 0.5);
    EXPECT_DOUBLE_EQ(cfg.replacement_miles_override, 280000.0);
    EXPECT_EQ(cfg.seed, 7u);
    EXPECT_EQ(cfg.samples, 1000u);
    EXPECT_EQ(cfg.grid_points, 5);
    EXPECT_EQ(cfg.threads, 2);
    // untouched keys keep their defaults
    EXPECT_DOUBLE_EQ(cfg.ranges.diesel_price.hi, 4.19);
}

TEST(Config, UnknownKeyNamesTheLine) {
    std::istringstream in("vehicle.cd = 0.4\nvehicle.colour = red\n");
    try {
        parse_config(in, "bad.cfg");
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("bad.cfg:2"), std::string::npos) << msg;
        EXPECT_NE(msg.find("vehicle.colour"), std::string::npos) << msg;
    }
}

TEST(Config, BadSyntaxIsRejectedWithLineNumbers) {
    {
        std::istringstream in("vehicle.cd 0.4\n");
        EXPECT_THROW(parse_config(in, "x.cfg"), ParseError);
    }
    {
        std::istringstream in("vehicle.cd = fast\n");
        EXPECT_THROW(parse_config(in, "x.cfg"), ParseError);
    }
    {
        std::istringstream in("vehicle.cd = 0.4 extra\n");
        EXPECT_THROW(parse_config(in, "x.cfg"), ParseError);
    }
    {
        std::istringstream in("run.samples = 10.5\n");
        EXPECT_THROW(parse_config(in, "x.cfg"), ParseError);
    }
    {
        std::istringstream in("run.seed = -3\n");
        EXPECT_THROW(parse_config(in, "x.cfg"), ParseError);
    }
    {
        std::istringstream in(" = 0.4\n");
        EXPECT_THROW(parse_config(in, "x.cfg"), ParseError);
    }
}

TEST(Config, ValidationCatchesNonsense) {
    {
        std::istringstream in("ranges.diesel_price_min = 9.0\n");  // above max
        EXPECT_THROW(parse_config(in, "x.cfg"), ConfigError);
    }
    {
        std::istringstream in("run.grid_points = 0\n");
        EXPECT_THROW(parse_config(in, "x.cfg"), ConfigError);
    }
    {
        std::istringstream in("run.samples = 0\n");
        EXPECT_THROW(parse_config(in, "x.cfg"), ConfigError);
    }
    {
        std::istringstream in("pack.range_mi = -5\n");
        EXPECT_THROW(parse_config(in, "x.cfg"), ConfigError);
    }
    {
        std::istringstream in("replacement.miles = -1\n");
        EXPECT_THROW(parse_config(in, "x.cfg"), ConfigError);
    }
}

TEST(Config, MissingFileIsAnArgumentError) {
    EXPECT_THROW(load_config("/nonexistent/nowhere.cfg"), ArgumentError);
}

TEST(ResolveRanges, OverrideWinsWithoutSimulation) {
    RunConfig cfg = default_config();
    cfg.replacement_miles_override = 280000.0;
    ParameterRanges r = resolve_ranges(cfg);
    EXPECT_DOUBLE_EQ(r.replacement_miles, 280000.0);
    EXPECT_DOUBLE_EQ(r.pack_range_mi, cfg.pack_range_mi);
}

TEST(ResolveRanges, AutoDerivesFromMountainCase) {
    RunConfig cfg = default_config();
    ParameterRanges r = resolve_ranges(cfg);
    // the 270 mi/day mountain duty reaches 80% capacity near 330k miles
    EXPECT_NEAR(r.replacement_miles, 329416.0, 700.0);
}

TEST(ResolveRanges, ComplainsWhenNothingWearsOut) {
    RunConfig cfg = default_config();
    cfg.fade.base_loss_per_fec = 0.0;
    cfg.fade.calendar_loss_per_day = 0.0;
    EXPECT_THROW(resolve_ranges(cfg), ConfigError);
}
