#include <doctest.h>

#include "ctxlab/errors.hpp"
#include "ctxlab/model.hpp"
#include "ctxlab/rational.hpp"
#include "ctxlab/weight.hpp"

using namespace ctxlab;

namespace {

MeasurementScenario bell_scenario() {
    MeasurementScenario sc;
    sc.measurements = {"a", "b", "a'", "b'"};
    sc.outcomes = {"+", "-"};
    sc.cover = {{0, 1}, {0, 3}, {2, 1}, {2, 3}};
    sc.party = {0, 1, 0, 1};
    return sc;
}

Row rational_row(const std::vector<std::string>& weights) {
    Row row;
    const std::vector<Section> secs = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (std::size_t i = 0; i < weights.size(); ++i) {
        row[secs[i]] = Weight::exact(rational_from_string(weights[i]));
    }
    return row;
}

EmpiricalModel bell_pi6_model() {
    EmpiricalModel m;
    m.scenario = bell_scenario();
    m.semiring = Semiring::Probability;
    m.rows = {
        rational_row({"1/2", "0", "0", "1/2"}),
        rational_row({"3/8", "1/8", "1/8", "3/8"}),
        rational_row({"3/8", "1/8", "1/8", "3/8"}),
        rational_row({"1/8", "3/8", "3/8", "1/8"}),
    };
    return m;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(rational_to_string(rational_from_string("3/8")) == "3/8");
    CHECK(rational_to_string(rational_from_string("2/4")) == "1/2");
    CHECK(rational_to_string(rational_from_string("7")) == "7");
    CHECK(rational_from_string("0") == Rational(0));
    CHECK_THROWS_AS(rational_from_string("1/0"), input_error);
    CHECK_THROWS_AS(rational_from_string("abc"), input_error);
    CHECK(rational_to_double(rational_from_string("3/8")) ==
          doctest::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("snapping doubles to small fractions") {
    auto half = snap_to_rational(0.5);
    REQUIRE(half.has_value());
    CHECK(*half == Rational(1) / 2);

    auto third = snap_to_rational(1.0 / 3.0);
    REQUIRE(third.has_value());
    CHECK(*third == Rational(1) / 3);

    auto eighth = snap_to_rational(0.37500000002);
    REQUIRE(eighth.has_value());
    CHECK(*eighth == Rational(3) / 8);

    CHECK_FALSE(snap_to_rational(0.1234567).has_value());
    CHECK_FALSE(snap_to_rational(1.0 / 101.0).has_value());
}

TEST_CASE("weights stay exact only when both operands are") {
    const Weight e = Weight::exact(Rational(1) / 4);
    const Weight f = Weight::approx(0.25);
    CHECK((e + e).is_exact());
    CHECK((e + e).rational() == Rational(1) / 2);
    CHECK_FALSE((e + f).is_exact());
    CHECK((e + f).value() == doctest::Approx(0.5));
    CHECK(Weight().is_zero());
    CHECK_THROWS_AS(f.rational(), std::logic_error);
}

TEST_CASE("scenario validation") {
    MeasurementScenario sc = bell_scenario();
    CHECK_NOTHROW(sc.validate());

    SUBCASE("duplicate labels rejected") {
        sc.measurements[2] = "a";
        CHECK_THROWS_AS(sc.validate(), input_error);
    }
    SUBCASE("cover must exhaust the measurements") {
        sc.cover = {{0, 1}, {2, 1}};  // b' never appears
        CHECK_THROWS_AS(sc.validate(), input_error);
    }
    SUBCASE("cover must be an anti-chain") {
        sc.party.clear();
        sc.cover.push_back({0});
        CHECK_THROWS_AS(sc.validate(), input_error);
    }
    SUBCASE("party map forces one measurement per party") {
        sc.cover[0] = {0, 2};  // both party 0
        CHECK_THROWS_AS(sc.validate(), input_error);
    }
}

TEST_CASE("section and global enumeration orders") {
    const MeasurementScenario sc = bell_scenario();
    const auto secs = sc.enumerate_sections(0);
    REQUIRE(secs.size() == 4);
    CHECK(secs[0] == Section{0, 0});
    CHECK(secs[1] == Section{0, 1});
    CHECK(secs[2] == Section{1, 0});
    CHECK(secs[3] == Section{1, 1});

    const auto globals = sc.enumerate_global();
    REQUIRE(globals.size() == 16);
    CHECK(globals[0] == GlobalAssignment{0, 0, 0, 0});
    CHECK(globals[1] == GlobalAssignment{0, 0, 0, 1});  // last varies fastest
    CHECK(globals[8] == GlobalAssignment{1, 0, 0, 0});

    CHECK(sc.restrict_global({1, 0, 1, 0}, 3) == Section{1, 0});
}

TEST_CASE("global count respects the cap") {
    MeasurementScenario sc;
    sc.outcomes = {"0", "1"};
    for (int i = 0; i < 40; ++i) sc.measurements.push_back("m" + std::to_string(i));
    CHECK_THROWS_AS(sc.global_count(), capacity_error);
    CHECK(sc.global_count(std::uint64_t(1) << 41) ==
          std::uint64_t(1) << 40);
}

TEST_CASE("section labels round-trip") {
    const MeasurementScenario sc = bell_scenario();
    CHECK(sc.section_label(0, {0, 1}) == "+-");
    CHECK(sc.section_from_label(0, "+-") == Section{0, 1});
    CHECK_THROWS_AS(sc.section_from_label(0, "+?"), input_error);
    CHECK_THROWS_AS(sc.section_from_label(0, "+"), input_error);
    CHECK(sc.context_key(1) == "a,b'");
    CHECK(sc.context_index_by_key("a',b") == 2);
    CHECK(sc.context_index_by_key("nope") == -1);
}

TEST_CASE("model validation") {
    EmpiricalModel m = bell_pi6_model();
    CHECK_NOTHROW(m.validate());
    CHECK(m.all_exact());

    SUBCASE("negative weights rejected") {
        m.rows[0][{0, 1}] = Weight::exact(Rational(-1) / 8);
        CHECK_THROWS_AS(m.validate(), input_error);
    }
    SUBCASE("unnormalized probability rows rejected") {
        m.rows[0][{0, 0}] = Weight::exact(Rational(3) / 4);
        CHECK_THROWS_AS(m.validate(), input_error);
    }
    SUBCASE("row count must match the cover") {
        m.rows.pop_back();
        CHECK_THROWS_AS(m.validate(), input_error);
    }
    SUBCASE("boolean rows need a possible section") {
        m.semiring = Semiring::Boolean;
        m.rows[1].clear();
        CHECK_THROWS_AS(m.validate(), input_error);
    }
}

TEST_CASE("marginalization sums extensions") {
    const EmpiricalModel m = bell_pi6_model();
    const Row marg =
        marginalize(m.rows[1], m.scenario.cover[1], {0}, Semiring::Probability);
    REQUIRE(marg.size() == 2);
    CHECK(marg.at({0}).rational() == Rational(1) / 2);
    CHECK(marg.at({1}).rational() == Rational(1) / 2);

    CHECK_THROWS_AS(
        marginalize(m.rows[0], m.scenario.cover[0], {5}, Semiring::Probability),
        input_error);

    Row boolean_row;
    boolean_row[{0, 0}] = Weight::exact(1);
    boolean_row[{1, 0}] = Weight::exact(1);
    const Row joined = marginalize(boolean_row, {0, 1}, {1}, Semiring::Boolean);
    CHECK(joined.at({0}).rational() == Rational(1));
    CHECK(joined.find(Section{1}) == joined.end());
}

TEST_CASE("no-signalling check") {
    EmpiricalModel m = bell_pi6_model();
    CHECK(check_no_signalling(m).empty());

    // Skew the (a,b) row so the marginal on a disagrees with the (a,b') row.
    m.rows[0] = rational_row({"3/5", "0", "0", "2/5"});
    const auto violations = check_no_signalling(m);
    REQUIRE_FALSE(violations.empty());
    double worst = 0.0;
    for (const auto& v : violations) worst = std::max(worst, v.difference);
    CHECK(worst == doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("support drops impossible sections") {
    const EmpiricalModel m = bell_pi6_model();
    const EmpiricalModel s = support(m);
    CHECK(s.semiring == Semiring::Boolean);
    CHECK(s.rows[0].size() == 2);
    CHECK(s.rows[1].size() == 4);
    CHECK(s.rows[0].count({0, 0}) == 1);
    CHECK(s.rows[0].count({0, 1}) == 0);
    CHECK(s.all_exact());
}
