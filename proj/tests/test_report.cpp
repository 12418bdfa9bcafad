// SPDX-License-Identifier: Apache-2.0
#include "amoc/changepoint.hpp"
#include "amoc/report.hpp"

#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

amoc::DailySeries makeSeries(const std::vector<double>& counts) {
    amoc::DailySeries s;
    s.label = "test";
    s.start = amoc::parseDate("2020-01-01");
    s.counts = Eigen::Map<const Eigen::ArrayXd>(counts.data(),
                                                static_cast<Eigen::Index>(counts.size()));
    return s;
}

std::vector<std::string> splitLines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in{text};
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

} // namespace

TEST_CASE("ordinalDayMonth renders English ordinals") {
    CHECK(amoc::ordinalDayMonth(amoc::parseDate("2020-03-29")) == "29th March");
    CHECK(amoc::ordinalDayMonth(amoc::parseDate("2020-05-02")) == "2nd May");
    CHECK(amoc::ordinalDayMonth(amoc::parseDate("2020-03-31")) == "31st March");
    CHECK(amoc::ordinalDayMonth(amoc::parseDate("2020-04-27")) == "27th April");
    CHECK(amoc::ordinalDayMonth(amoc::parseDate("2020-02-11")) == "11th February");
    CHECK(amoc::ordinalDayMonth(amoc::parseDate("2020-06-12")) == "12th June");
    CHECK(amoc::ordinalDayMonth(amoc::parseDate("2020-07-13")) == "13th July");
    CHECK(amoc::ordinalDayMonth(amoc::parseDate("2020-08-01")) == "1st August");
    CHECK(amoc::ordinalDayMonth(amoc::parseDate("2020-09-23")) == "23rd September");
    CHECK(amoc::ordinalDayMonth(amoc::parseDate("2020-10-21")) == "21st October");
}

TEST_CASE("withThousands groups digits") {
    CHECK(amoc::withThousands(0) == "0");
    CHECK(amoc::withThousands(999) == "999");
    CHECK(amoc::withThousands(1000) == "1,000");
    CHECK(amoc::withThousands(235542) == "235,542");
    CHECK(amoc::withThousands(1234567) == "1,234,567");
    CHECK(amoc::withThousands(-98765) == "-98,765");
}

TEST_CASE("renderTable aligns columns and renders outcomes") {
    std::vector<amoc::TableRow> rows;
    rows.push_back({"CY", 235542, amoc::parseDate("2020-03-29"), true, 0.005, ""});
    rows.push_back({"ON", 96629, std::nullopt, false, 0.41, ""});
    rows.push_back({"TW", std::nullopt, std::nullopt, false, std::nullopt, "series too short"});

    std::string table = amoc::renderTable(rows);
    auto lines = splitLines(table);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0].find("name") != std::string::npos);
    CHECK(lines[0].find("#tweets") != std::string::npos);
    CHECK(lines[0].find("changepoint") != std::string::npos);
    CHECK(lines[1].find('+') != std::string::npos);
    CHECK(lines[2].find("235,542") != std::string::npos);
    CHECK(lines[2].find("2020-03-29 (29th March)") != std::string::npos);
    CHECK(lines[3].find("none (p = 0.410)") != std::string::npos);
    CHECK(lines[4].find("error: series too short") != std::string::npos);

    // Separator and header agree on the two padded column widths.
    auto bar1 = lines[0].find('|');
    auto plus1 = lines[1].find('+');
    CHECK(bar1 == plus1);
    CHECK(lines[0].find('|', bar1 + 1) == lines[1].find('+', plus1 + 1));
}

TEST_CASE("renderReport summarizes detection results") {
    amoc::SignificanceConfig config;
    config.permutations = 199;
    auto result = amoc::detectAmoc(makeSeries({0, 0, 0, 0, 0, 0, 9, 9, 9, 9, 9, 9}), config);
    std::string table = amoc::renderReport({{"steps", 54, result}});
    CHECK(table.find("steps") != std::string::npos);
    CHECK(table.find("2020-01-06 (6th January)") != std::string::npos);
}

TEST_CASE("result JSON round-trips into a table row") {
    amoc::SignificanceConfig config;
    config.permutations = 199;
    auto result = amoc::detectAmoc(makeSeries({2, 2, 2, 2, 12, 12, 12, 12}), config);

    nlohmann::json row = amoc::resultToJson("CY", 56, result);
    CHECK(row["label"] == "CY");
    CHECK(row["T"] == 8);
    CHECK(row["total"] == 56);
    CHECK(row["tau_hat"] == 4);
    CHECK(row["tau_date"] == "2020-01-04");
    CHECK(row["pre_mean"] == 2.0);
    CHECK(row["post_mean"] == 12.0);
    CHECK(row["delta_hat"] == 10.0);
    CHECK(row.contains("p_value"));

    amoc::TableRow back = amoc::tableRowFromJson(row);
    CHECK(back.label == "CY");
    REQUIRE(back.total.has_value());
    CHECK(*back.total == 56);
    CHECK(back.significant == result.significant);
    REQUIRE(back.tau_date.has_value());
    CHECK(*back.tau_date == result.tau_date);
    REQUIRE(back.p_value.has_value());
    CHECK(*back.p_value == *result.p_value);
    CHECK(back.error.empty());
}

TEST_CASE("error rows serialize and parse") {
    nlohmann::json row = amoc::errorRowToJson("bad", 3, "too short");
    amoc::TableRow back = amoc::tableRowFromJson(row);
    CHECK(back.label == "bad");
    CHECK(back.error == "too short");
    REQUIRE(back.total.has_value());
    CHECK(*back.total == 3);

    CHECK_THROWS_AS(amoc::tableRowFromJson(nlohmann::json::array()), amoc::DataError);
    CHECK_THROWS_AS(amoc::tableRowFromJson(nlohmann::json{{"no_label", 1}}), amoc::DataError);
}

TEST_CASE("acf JSON carries one row per lag") {
    auto result = amoc::acf(makeSeries({1, 4, 2, 8, 5, 7}), 3);
    nlohmann::json doc = amoc::acfToJson(result);
    CHECK(doc["label"] == "test");
    CHECK(doc["T"] == 6);
    REQUIRE(doc["rows"].is_array());
    CHECK(doc["rows"].size() == 4);
    CHECK(doc["rows"][0]["lag"] == 0);
    CHECK(doc["rows"][0]["r"] == 1.0);
    CHECK(doc["band_halfwidth"] == result.band_halfwidth);
}

TEST_CASE("summary JSON includes the spec and significance settings") {
    amoc::SyntheticSpec spec;
    spec.length = 30;
    spec.tau = 12;
    spec.mu = 20.0;
    spec.delta = 6.0;
    spec.sigma = 2.0;
    spec.seed = 3;

    amoc::SignificanceConfig config;
    config.permutations = 99;

    auto summary = amoc::evaluate(spec, 5, config);
    nlohmann::json doc = amoc::summaryToJson(summary);
    CHECK(doc["trials"] == 5);
    CHECK(doc["spec"]["length"] == 30);
    CHECK(doc["spec"]["tau"] == 12);
    CHECK(doc["spec"]["noise"] == "gaussian");
    CHECK(doc["spec"]["sigma"] == 2.0);
    CHECK(doc["significance"]["method"] == "permutation");
    CHECK(doc["significance"]["permutations"] == 99);
    CHECK_FALSE(doc.contains("false_positive_rate"));

    // Serialization itself is deterministic.
    CHECK(doc.dump() == amoc::summaryToJson(summary).dump());
}
