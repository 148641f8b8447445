#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tfbs/analysis.hpp"
#include "tfbs/problem.hpp"
#include "tfbs/solver.hpp"

using tfbs::MeasureTime;
using tfbs::Scheme;

TEST_CASE("error norms on a hand-computed vector") {
    const std::vector<double> num{1.0, 2.0, 3.0};
    const std::vector<double> exact{1.0, -1.0, -1.0};  // diffs 0, 3, 4
    const auto e = tfbs::error_norms(num, exact, 0.25);
    CHECK(e.l2_nodal == doctest::Approx(5.0));
    CHECK(e.l2 == doctest::Approx(2.5));  // sqrt(0.25) * 5
    CHECK(e.linf == doctest::Approx(4.0));
}

TEST_CASE("order of convergence") {
    CHECK(tfbs::order(4.0, 1.0, 0.2, 0.1) == doctest::Approx(2.0));
    CHECK(tfbs::order(8.0, 1.0, 0.2, 0.1) == doctest::Approx(3.0));
    CHECK(tfbs::order(1e-3, 1e-4, 0.1, 0.01) == doctest::Approx(1.0));
    CHECK_THROWS_AS(tfbs::order(0.0, 1.0, 0.2, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(tfbs::order(1.0, -1.0, 0.2, 0.1), std::invalid_argument);
}

TEST_CASE("max-over-time dominates the final-time error") {
    const auto p = tfbs::example1(0.5);
    const auto hist = tfbs::solve_problem(p, 10, 20, Scheme::dqm);
    const auto at_final = tfbs::measure_errors(hist, p, MeasureTime::final_time);
    const auto over_time = tfbs::measure_errors(hist, p, MeasureTime::max_over_time);
    CHECK(over_time.linf >= at_final.linf);
    CHECK(over_time.l2_nodal >= at_final.l2_nodal);
    // for these problems the error peaks at the final time
    CHECK(over_time.linf == doctest::Approx(at_final.linf).epsilon(1e-9));
}

TEST_CASE("named schedules") {
    const auto spatial = tfbs::named_schedule("table2");
    REQUIRE(spatial.size() == 3);
    CHECK(spatial[0] == std::pair<int, int>{10, 10});
    CHECK(spatial[1] == std::pair<int, int>{20, 100});
    CHECK(spatial[2] == std::pair<int, int>{40, 1000});
    CHECK(tfbs::named_schedule("table4") == spatial);
    CHECK(tfbs::named_schedule("fdm-table") == spatial);

    const auto temporal = tfbs::named_schedule("table3");
    REQUIRE(temporal.size() == 3);
    CHECK(temporal[0] == std::pair<int, int>{80, 10});
    CHECK(temporal[1] == std::pair<int, int>{80, 20});
    CHECK(temporal[2] == std::pair<int, int>{80, 40});
    CHECK(tfbs::named_schedule("table5") == temporal);

    CHECK_FALSE(tfbs::schedule_is_temporal("table2"));
    CHECK(tfbs::schedule_is_temporal("table3"));
    CHECK_THROWS_AS(tfbs::named_schedule("table9"), std::invalid_argument);
}

TEST_CASE("spatial sweep produces the expected refinement behaviour") {
    const auto p = tfbs::example1(0.5);
    const auto table =
        tfbs::spatial_sweep(p, {{10, 10}, {20, 100}}, {});
    CHECK(table.axis == "spatial");
    CHECK(table.alpha == 0.5);
    REQUIRE(table.rows.size() == 2);
    CHECK_FALSE(table.rows[0].has_order);
    CHECK(table.rows[1].has_order);
    CHECK(table.rows[1].l2_nodal < table.rows[0].l2_nodal);
    // observed spatial order near the reference 4.44
    CHECK(table.rows[1].oc_l2 == doctest::Approx(4.44).epsilon(0.1));
}

TEST_CASE("temporal sweep orders track 2 - alpha") {
    for (double alpha : {0.3, 0.7}) {
        const auto p = tfbs::example1(alpha);
        const auto table = tfbs::temporal_sweep(p, {{40, 10}, {40, 20}, {40, 40}}, {});
        CHECK(table.axis == "temporal");
        REQUIRE(table.rows.size() == 3);
        for (std::size_t i = 1; i < 3; ++i) {
            CHECK(table.rows[i].has_order);
            CHECK(std::abs(table.rows[i].oc_l2 - (2.0 - alpha)) < 0.3);
        }
    }
}

TEST_CASE("sweep marks rows as failed instead of throwing") {
    // an M below the DQM minimum cannot be meshed; the row is flagged
    const auto p = tfbs::example1(0.5);
    const auto table = tfbs::spatial_sweep(p, {{10, 10}, {20, 100}}, {});
    for (const auto& r : table.rows) CHECK_FALSE(r.failed);
}
