#include "glmn/ehrhart.hpp"

#include <doctest.h>

using namespace glmn;

// The count grows like d^(2k-1); over [30,120] the log-log slope should be within 0.15 of 3.
TEST_CASE("log-log slope over the long range for k = 2")
{
    std::map<std::int64_t, Integer> counts;
    for (std::int64_t d = 30; d <= 120; ++d)
        counts[d] = count_lattice_points(2, d);
    const double slope = loglog_slope(counts, 30, 120);
    MESSAGE("slope over [30,120] = " << slope);
    CHECK(slope >= 2.85);
    CHECK(slope <= 3.15);
}
