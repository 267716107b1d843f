#include <catch_amalgamated.hpp>

#include "qlap/verify.hpp"

#include <set>

using namespace qlap;

namespace {

// Small options: every checker still runs (so every claim id is emitted) but
// the sweeps stay tiny.
VerifyOptions small_options(int jobs) {
    VerifyOptions o;
    o.jobs = jobs;
    o.clamp_to(4);
    o.cross_count = 24;
    return o;
}

}  // namespace

TEST_CASE("decimal literals parse to exact rationals") {
    CHECK(rational_from_decimal("0.1") == mpq_class(1, 10));
    CHECK(rational_from_decimal("-1.5") == mpq_class(-3, 2));
    CHECK(rational_from_decimal("10") == 10);
    CHECK(rational_from_decimal("+0.25") == mpq_class(1, 4));
    CHECK_THROWS_AS(rational_from_decimal("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_decimal("q"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_decimal(""), std::invalid_argument);
}

TEST_CASE("default grids cover both regimes and exclude zero") {
    for (const QGridPoint& g : default_q_grid()) {
        CHECK(g.exact != 0);
        CHECK(g.value == Catch::Approx(g.exact.get_d()));
    }
    bool inside = false, unit = false, outside = false;
    for (const QGridPoint& g : default_q_grid()) {
        int c = cmp(abs(g.exact), 1);
        inside = inside || c < 0;
        unit = unit || c == 0;
        outside = outside || c > 0;
    }
    CHECK((inside && unit && outside));
    for (const QtGridPoint& g : default_qt_grid()) {
        CHECK(g.exact_t.re == g.exact_q.re);
        CHECK(g.exact_t.im == -g.exact_q.im);
    }
}

TEST_CASE("every registered claim is emitted exactly once, in order") {
    std::vector<CheckReport> reports = run_all_checks(small_options(2));
    std::vector<std::string> emitted;
    for (const CheckReport& r : reports) emitted.push_back(r.claim);
    CHECK(emitted == claim_registry());
    for (const CheckReport& r : reports) {
        INFO(r.claim);
        CHECK(r.ok());
        CHECK(r.instances > 0);
    }
}

TEST_CASE("reports are deterministic and independent of the worker count") {
    std::vector<CheckReport> serial = run_all_checks(small_options(1));
    std::vector<CheckReport> parallel = run_all_checks(small_options(4));
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(report_to_json(serial[i], false).dump() ==
              report_to_json(parallel[i], false).dump());
    }
}

TEST_CASE("report JSON carries timing only on request") {
    CheckReport r;
    r.claim = "sample";
    r.elapsed_ms = 7;
    CHECK_FALSE(report_to_json(r, false).contains("elapsed_ms"));
    CHECK(report_to_json(r, true)["elapsed_ms"] == 7);
}

TEST_CASE("selector runs a single group or a single claim") {
    VerifyOptions o = small_options(2);
    std::vector<CheckReport> star = run_checks_for(o, "star");
    REQUIRE(star.size() == 1);
    CHECK(star[0].claim == claims::kStarSpectrumClosedForm);
    CHECK(star[0].ok());

    std::vector<CheckReport> one = run_checks_for(o, claims::kCoverMonotoneMin);
    REQUIRE(one.size() == 1);
    CHECK(one[0].claim == claims::kCoverMonotoneMin);

    CHECK_THROWS_AS(run_checks_for(o, "no-such-claim"), std::invalid_argument);
}

TEST_CASE("injected fake cover is caught by the monotonicity checks") {
    VerifyOptions o = small_options(2);
    o.inject_fake_cover = true;
    std::vector<CheckReport> reports = run_checks_for(o, "monotonicity");
    CHECK_FALSE(all_ok(reports));
    std::set<std::string> failing;
    for (const CheckReport& r : reports)
        if (!r.ok()) failing.insert(r.claim);
    // The reversed relation breaks all three asserted directions.
    CHECK(failing.count(claims::kCoverMonotoneMax) == 1);
    CHECK(failing.count(claims::kCoverMonotoneMin) == 1);
    CHECK(failing.count(claims::kCoverMonotoneSecond) == 1);
}

TEST_CASE("reference table recovery is unique and frozen") {
    Table1Result t1 = locate_table1(small_options(2));
    CHECK(t1.report.ok());
    REQUIRE(t1.lower_index >= 0);
    CHECK(t1.lower.to_string() == "0,1,2,2,1,2");
    CHECK(t1.upper.to_string() == "0,1,2,2,1,1");
    // Spot values against the frozen targets (one per column family).
    CHECK(t1.values[1][0] == Catch::Approx(2.2566).margin(5e-4));
    CHECK(t1.values[1][1] == Catch::Approx(2.3660).margin(5e-4));
    CHECK(t1.values[4][3] == Catch::Approx(-0.0469).margin(5e-4));
    CHECK(t1.values[2][4] == Catch::Approx(0.3249).margin(5e-4));
}

TEST_CASE("poset JSON round-trips") {
    HasseDiagram h = build_hasse(6);
    HasseDiagram back = hasse_from_json(hasse_to_json(h));
    CHECK(back.n == h.n);
    CHECK(back.nodes == h.nodes);
    CHECK(back.covers == h.covers);
}

TEST_CASE("clamping never raises a size cap") {
    VerifyOptions o;
    o.clamp_to(20);
    VerifyOptions d;
    CHECK(o.mono_n_hi == d.mono_n_hi);
    CHECK(o.star_n_hi == d.star_n_hi);
    o.clamp_to(3);
    CHECK(o.mono_n_hi == 3);
    CHECK(o.mono_n_lo <= o.mono_n_hi);
    CHECK(o.star_n_lo <= o.star_n_hi);
}

TEST_CASE("second-order assertion regime matches the frozen threshold") {
    CHECK(vdetail::second_order_asserted(mpq_class(81, 100)));
    CHECK(vdetail::second_order_asserted(mpq_class(1)));
    CHECK(vdetail::second_order_asserted(mpq_class(100)));
    CHECK_FALSE(vdetail::second_order_asserted(mpq_class(1, 4)));
    CHECK_FALSE(vdetail::second_order_asserted(mpq_class(80, 100)));
}
