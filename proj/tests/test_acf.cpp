// SPDX-License-Identifier: Apache-2.0
#include "amoc/acf.hpp"
#include "amoc/error.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <Eigen/Core>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

namespace {

Eigen::ArrayXd toArray(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::ArrayXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

amoc::DailySeries makeSeries(const std::vector<double>& counts) {
    amoc::DailySeries s;
    s.label = "test";
    s.start = amoc::parseDate("2020-01-01");
    s.counts = toArray(counts);
    return s;
}

} // namespace

TEST_CASE("an alternating series has r_1 = -(T-1)/T") {
    // x = +1,-1,+1,... with mean 0: numerator at lag k is (T-k)(-1)^k and
    // the denominator is T.
    std::vector<double> x(16);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = (i % 2 == 0) ? 1.0 : -1.0;
    }
    auto r = amoc::autocorrelations(toArray(x), 3);
    REQUIRE(r.size() == 4);
    CHECK(r[0] == 1.0);
    CHECK(r[1] == doctest::Approx(-15.0 / 16.0).epsilon(1e-12));
    CHECK(r[2] == doctest::Approx(14.0 / 16.0).epsilon(1e-12));
    CHECK(r[3] == doctest::Approx(-13.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("autocorrelations match the plain-loop oracle") {
    std::mt19937_64 gen{123};
    std::normal_distribution<double> noise{20.0, 6.0};
    for (int rep = 0; rep < 25; ++rep) {
        std::uniform_int_distribution<int> len(5, 200);
        const int n = len(gen);
        std::vector<double> x(n);
        for (double& v : x) {
            v = std::round(std::max(0.0, noise(gen)));
        }
        if (toArray(x).minCoeff() == toArray(x).maxCoeff()) {
            continue;
        }
        const int max_lag = std::min(20, n - 1);
        auto r = amoc::autocorrelations(toArray(x), max_lag);
        for (int k = 0; k <= max_lag; ++k) {
            double expected = oracle::autocorrelation(x, static_cast<std::size_t>(k));
            CHECK(r[k] == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("correlations stay inside the unit interval") {
    std::mt19937_64 gen{9000};
    std::uniform_int_distribution<int> count(0, 30);
    for (int rep = 0; rep < 50; ++rep) {
        std::uniform_int_distribution<int> len(3, 120);
        const int n = len(gen);
        std::vector<double> x(n);
        for (double& v : x) {
            v = count(gen);
        }
        if (toArray(x).minCoeff() == toArray(x).maxCoeff()) {
            continue;
        }
        auto r = amoc::autocorrelations(toArray(x), n - 1);
        CHECK(r[0] == 1.0);
        for (Eigen::Index k = 0; k < r.size(); ++k) {
            CHECK(std::abs(r[k]) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("acf reports the white-noise band half-width") {
    std::vector<double> x(159);
    std::mt19937_64 gen{5};
    std::uniform_int_distribution<int> count(0, 9);
    for (double& v : x) {
        v = count(gen);
    }
    auto result = amoc::acf(makeSeries(x), 30);
    CHECK(result.series_length == 159);
    CHECK(result.correlations.size() == 31);
    CHECK(result.band_halfwidth == 1.96 / std::sqrt(159.0));
    CHECK(result.band_halfwidth == doctest::Approx(0.15544).epsilon(1e-4));
    CHECK(result.label == "test");
}

TEST_CASE("acf validates its inputs") {
    CHECK_THROWS_AS(amoc::autocorrelations(toArray({1, 2, 3}), 0), amoc::ConfigError);
    CHECK_THROWS_AS(amoc::autocorrelations(toArray({1, 2, 3}), 3), amoc::ConfigError);
    CHECK_NOTHROW(amoc::autocorrelations(toArray({1, 2, 3}), 2));
    CHECK_THROWS_AS(amoc::autocorrelations(toArray({1}), 1), amoc::DataError);
    CHECK_THROWS_AS(amoc::autocorrelations(toArray({5, 5, 5, 5}), 2), amoc::DataError);
    CHECK_THROWS_AS(amoc::acf(makeSeries({5, 5, 5, 5}), 2), amoc::DataError);
}

TEST_CASE("writeAcfCsv emits lag,r rows") {
    auto result = amoc::acf(makeSeries({1, 5, 2, 8, 3, 9}), 2);
    std::ostringstream out;
    amoc::writeAcfCsv(out, result);
    std::istringstream lines{out.str()};
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "lag,r");
    REQUIRE(std::getline(lines, line));
    CHECK(line.rfind("0,1", 0) == 0);
    int rows = 1;
    while (std::getline(lines, line)) {
        ++rows;
    }
    CHECK(rows == 3);
}
