#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "frob/emit.hpp"
#include "frob/montecarlo.hpp"

using namespace frob;

namespace {

std::vector<ComparisonRecord> sample_records(std::int64_t n,
                                             bool with_frobenius = false) {
    SimulationConfig cfg;
    cfg.seed = 2024;
    cfg.iterations = n;
    cfg.max_entry = with_frobenius ? 200 : 1000;
    cfg.compute_exact = with_frobenius;
    return run_simulation(cfg);
}

} // namespace

TEST_CASE("csv header and shape") {
    const auto recs = sample_records(2);
    std::ostringstream out;
    write_csv(out, recs);
    std::istringstream in(out.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "a1,a2,a3,ub1,ub2,gap,sum,prod12,prod123,frobenius");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty())
            ++rows;
    CHECK(rows == 2);
    // frobenius not computed: trailing field blank
    CHECK(out.str().find(",\n") != std::string::npos);
}

TEST_CASE("csv round trip reproduces records textually") {
    for (bool exact : {false, true}) {
        const auto recs = sample_records(50, exact);
        std::ostringstream first;
        write_csv(first, recs);
        std::istringstream in(first.str());
        const auto parsed = read_csv(in);
        REQUIRE(parsed.size() == recs.size());
        std::ostringstream second;
        write_csv(second, parsed);
        CHECK(first.str() == second.str());
    }
}

TEST_CASE("json keys match the csv header") {
    const auto recs = sample_records(2);
    std::ostringstream out;
    write_json(out, recs);
    const auto doc = nlohmann::json::parse(out.str());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    for (const auto& obj : doc) {
        for (const char* key : {"a1", "a2", "a3", "ub1", "ub2", "gap", "sum",
                                "prod12", "prod123", "frobenius"})
            CHECK(obj.contains(key));
        CHECK(obj["frobenius"].is_null()); // not computed here
    }
    CHECK(doc[0]["gap"].get<double>() ==
          doctest::Approx(std::stod(format_real(recs[0].gap))));
}

TEST_CASE("aggregate rows serialize to csv and json") {
    const auto recs = sample_records(100);
    const auto rows = aggregate(recs, Axis::Sum, 500);
    std::ostringstream csv;
    write_csv(csv, rows);
    std::istringstream in(csv.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "axis,bucket,count,min_gap,max_gap,mean_gap");

    std::ostringstream json;
    write_json(json, rows);
    const auto doc = nlohmann::json::parse(json.str());
    REQUIRE(doc.is_array());
    CHECK(doc.size() == rows.size());
    CHECK(doc[0]["axis"] == "sum");
}

TEST_CASE("svg scatter is structurally sound") {
    const auto recs = sample_records(200);
    std::ostringstream out;
    SvgOptions opts;
    opts.axis = Axis::A3;
    write_svg_scatter(out, recs, opts);
    const std::string svg = out.str();
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("width=\"800\"") != std::string::npos);
    CHECK(svg.find("height=\"600\"") != std::string::npos);
    CHECK(svg.find(">a3</text>") != std::string::npos);
    std::size_t points = 0;
    for (std::size_t pos = svg.find("<circle"); pos != std::string::npos;
         pos = svg.find("<circle", pos + 1))
        ++points;
    CHECK(points == recs.size());
    CHECK(svg.find("downsampled") == std::string::npos);

    // forced downsampling is declared in metadata
    std::ostringstream down;
    opts.max_points = 50;
    write_svg_scatter(down, recs, opts);
    CHECK(down.str().find("downsampled=1-in-4") != std::string::npos);

    std::ostringstream logx;
    opts.max_points = 0;
    opts.axis = Axis::Prod123;
    opts.log_x = true;
    write_svg_scatter(logx, recs, opts);
    CHECK(logx.str().find("log10(prod123)") != std::string::npos);
}

TEST_CASE("format_real pins six decimals") {
    CHECK(format_real(34.9285192909) == "34.928519");
    CHECK(format_real(6.0) == "6.000000");
    CHECK(format_real(-0.5) == "-0.500000");
}
