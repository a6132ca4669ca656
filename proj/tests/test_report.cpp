#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "percell/report.hpp"
#include "test_util.hpp"

using namespace percell;
using testutil::error_code;

TEST_CASE("format_double emits shortest round-trip form") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(4000.0) == "4000");
    CHECK(format_double(-104.0) == "-104");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1e-7) == "1e-07");
    CHECK(format_double(2.5e-7) == "2.5e-07");
    CHECK(format_double(0.8825424006106064) == "0.8825424006106064");

    // round-trips exactly
    for (double v : {1e-7, 0.1, 1.0 / 3.0, 825.2590539722141, 2.73e-7}) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("fnv1a64 reference vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("a") != fnv1a64("b"));
    CHECK(fnv1a64("sweep|x=1") == fnv1a64("sweep|x=1"));
}

TEST_CASE("csv writer layout") {
    CsvWriter w;
    w.set_comment(0xff, 7);
    w.set_header({"h1", "h2"});
    w.add_row({"1", "2"});
    CHECK(w.str() == "# config_hash=00000000000000ff seed=7\nh1,h2\n1,2\n");

    CHECK(error_code([&] { w.add_row({"only-one"}); }) ==
          ErrorCode::InvalidConfig);
}

TEST_CASE("svg line chart") {
    SvgSeries s1{"none", {{1e-7, 0.0}, {2e-7, 0.4}, {4e-7, 0.9}}};
    SvgSeries s2{"active", {{1e-7, 0.3}, {2e-7, 0.8}, {4e-7, 1.0}}};
    const std::string svg =
        svg_line_chart({s1, s2}, "lambda_a [m^-2]", "percolation probability");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("none") != std::string::npos);
    CHECK(svg.find("active") != std::string::npos);
    CHECK(svg.find("lambda_a [m^-2]") != std::string::npos);
    CHECK(svg.find("percolation probability") != std::string::npos);

    // deterministic
    CHECK(svg_line_chart({s1, s2}, "lambda_a [m^-2]",
                         "percolation probability") == svg);
    // degenerate inputs still produce a document
    CHECK(svg_line_chart({}, "x", "y").find("</svg>") != std::string::npos);
    SvgSeries flat{"p", {{1.0, 0.5}}};
    CHECK(svg_line_chart({flat}, "x", "y").find("</svg>") !=
          std::string::npos);
}

TEST_CASE("pgm encoding") {
    CoverageGrid g;
    g.nx = 3;
    g.ny = 2;
    g.covered = {1, 0, 0,   // iy = 0 (bottom)
                 0, 1, 1};  // iy = 1 (top)
    const std::string bytes = pgm_bytes(g);
    const std::string expect = std::string("P5\n3 2\n255\n") +
                               '\x00' + '\xff' + '\xff' +  // top row first
                               '\xff' + '\x00' + '\x00';
    CHECK(bytes == expect);
}
