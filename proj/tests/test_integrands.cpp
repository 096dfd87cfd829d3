#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qmcnet/integrands.hpp"
#include "qmcnet/util.hpp"

using namespace qmcnet;

TEST_CASE("g0 values and mean") {
    std::vector<double> ones{1.0, 1.0, 1.0};
    CHECK(g0(ones) == doctest::Approx(3.0).epsilon(1e-15));
    std::vector<double> zeros{0.0, 0.0};
    CHECK(g0(zeros) == doctest::Approx(2.0 * (2.0 - std::numbers::e)).epsilon(1e-15));
    CHECK(*make_integrand("g0", 7).true_mean == 0.0);
}

TEST_CASE("g1 values and mean") {
    CHECK(*make_integrand("g1", 3).true_mean == doctest::Approx(2.5));
    CHECK(*make_integrand("g1", 1).true_mean == doctest::Approx(1.0 / 3.0));
    std::vector<double> zeros{0.0, 0.0, 0.0};
    CHECK(g1(zeros) == 0.0);
}

TEST_CASE("g2 values and mean") {
    std::vector<double> ones{1.0, 1.0, 1.0};
    CHECK(g2(ones) == doctest::Approx(1.0).epsilon(1e-15));
    std::vector<double> zeros{0.0, 0.0, 0.0};
    CHECK(g2(zeros) == doctest::Approx(-0.37058227111230896).epsilon(1e-14));
    std::vector<double> with_root{0.3, std::log(std::numbers::e - 1.0), 0.9};
    CHECK(g2(with_root) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(*make_integrand("g2", 5).true_mean == 0.0);
}

TEST_CASE("g0 is additive across coordinates") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x(4);
        for (auto& v : x) v = unif(rng);
        double whole = g0(x);
        double parts = 0.0;
        for (double xj : x) {
            std::vector<double> single{xj};
            parts += g0(single);
        }
        CHECK(whole == doctest::Approx(parts).epsilon(1e-12));
    }
}

TEST_CASE("g1 has cross terms beyond any additive part") {
    // g1 = sum x_j^2 + 2 sum_{j<k} x_j x_k; the cross term separates it from g0's class
    std::vector<double> x{1.0, 1.0};
    double additive = 2.0;  // sum of squares
    CHECK(g1(x) == doctest::Approx(additive + 2.0));
}

TEST_CASE("g0 and g1 are not antisymmetric about the center") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    bool g0_asym = false, g1_asym = false;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> x(3), rx(3);
        for (int j = 0; j < 3; ++j) {
            x[j] = unif(rng);
            rx[j] = 1.0 - x[j];
        }
        if (std::abs((g0(x) + g0(rx)) / 2.0 - 0.0) > 1e-6) g0_asym = true;
        if (std::abs((g1(x) + g1(rx)) / 2.0 - 2.5) > 1e-6) g1_asym = true;
    }
    CHECK(g0_asym);
    CHECK(g1_asym);
}

TEST_CASE("map_to_ranges endpoints and midpoint") {
    auto ranges = wing_weight_ranges();
    REQUIRE(ranges.size() == 10);
    for (const auto& r : ranges) CHECK(r.low < r.high);

    std::vector<double> zeros(10, 0.0), ones(10, 1.0), mid(10, 0.5);
    auto lows = map_to_ranges(zeros, ranges);
    auto highs = map_to_ranges(ones, ranges);
    auto mids = map_to_ranges(mid, ranges);
    for (size_t j = 0; j < 10; ++j) {
        CHECK(lows[j] == ranges[j].low);
        CHECK(highs[j] == ranges[j].high);
    }
    CHECK(mids[0] == doctest::Approx(175.0));

    std::vector<double> wrong(3, 0.5);
    CHECK_THROWS_AS(map_to_ranges(wrong, ranges), std::invalid_argument);
}

TEST_CASE("wing weight regression value at range midpoints") {
    std::vector<double> mid(10, 0.5);
    CHECK(wing_weight(mid) == doctest::Approx(267.62469257043568).epsilon(1e-13));
}

TEST_CASE("wing weight depends on sweep only through its cosine") {
    std::vector<double> lo(10, 0.37), hi(10, 0.37);
    lo[3] = 0.0;  // sweep -10 degrees
    hi[3] = 1.0;  // sweep +10 degrees
    CHECK(wing_weight(lo) == doctest::Approx(wing_weight(hi)).epsilon(1e-14));
}

TEST_CASE("wing weight is positive across the cube") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> u(10);
    for (int trial = 0; trial < 10000; ++trial) {
        for (auto& v : u) v = unif(rng);
        CHECK(wing_weight(u) > 0.0);
    }
}

TEST_CASE("registry") {
    CHECK(integrand_names() == std::vector<std::string>{"g0", "g1", "g2", "wingweight"});
    CHECK_FALSE(make_integrand("wingweight", 10).true_mean.has_value());
    CHECK_THROWS_AS(make_integrand("wingweight", 3), std::invalid_argument);
    CHECK_THROWS_AS(make_integrand("nope", 2), std::invalid_argument);
}

TEST_CASE("midpoint quadrature pins the stated means for d <= 2") {
    // d=1, 10^6 midpoints
    const int n1 = 1000000;
    CompensatedSum s0, s1, s2;
    for (int i = 0; i < n1; ++i) {
        double x = (i + 0.5) / n1;
        std::vector<double> v{x};
        s0.add(g0(v));
        s1.add(g1(v));
        s2.add(g2(v));
    }
    CHECK(std::abs(s0.value() / n1 - 0.0) < 1e-4);
    CHECK(std::abs(s1.value() / n1 - 1.0 / 3.0) < 1e-4);
    CHECK(std::abs(s2.value() / n1 - 0.0) < 1e-4);

    // d=2, 1000x1000 midpoint grid
    const int g = 1000;
    CompensatedSum t0, t1, t2;
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            std::vector<double> v{(i + 0.5) / g, (j + 0.5) / g};
            t0.add(g0(v));
            t1.add(g1(v));
            t2.add(g2(v));
        }
    }
    const double cells = double(g) * g;
    CHECK(std::abs(t0.value() / cells - 0.0) < 1e-4);
    CHECK(std::abs(t1.value() / cells - (2.0 / 3.0 + 0.5)) < 1e-4);
    CHECK(std::abs(t2.value() / cells - 0.0) < 1e-4);
}
