#include <doctest.h>

#include "symtri/io.hpp"

#include <nlohmann/json.hpp>

#include <regex>
#include <sstream>

using namespace symtri;

namespace {

std::string stream_of(int d, bool symmetric, const Region& region) {
    std::ostringstream os;
    write_stream_header(os, {region, Mode::Unimodular, symmetric});
    EnumerationConfig cfg;
    cfg.d = d;
    cfg.symmetric = symmetric;
    const Visitor v = [&](const Triangulation& t) { write_stream_line(os, t); };
    if (symmetric) {
        enumerate_symmetric(cfg, v);
    } else {
        enumerate_region(region, cfg, v);
    }
    return os.str();
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("stream header") {
    const auto h = stream_header_line({Region::full(1), Mode::Unimodular, true});
    CHECK(h == R"({"format":"symtri-stream/1","d":1,"region":"full","mode":"unimodular","symmetric":true,)"
               R"("points":[[0,0],[1,0],[0,1]]})");
}

TEST_CASE("stream lines") {
    const auto c = lattice_points(Region::full(2));
    Triangulation t{Region::full(2), {Simplex::make(1, 2, 4), Simplex::make(0, 1, 3)}};
    CHECK(stream_line(t) == "0,1,3 1,2,4");
    const auto text = stream_of(3, true, Region::full(3));
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    const std::regex pattern(R"(\d+,\d+,\d+( \d+,\d+,\d+)*)");
    int lines = 0;
    while (std::getline(is, line)) {
        CHECK(std::regex_match(line, pattern));
        ++lines;
    }
    CHECK(lines == 7);
}

TEST_CASE("stream round trip") {
    for (int d = 1; d <= 4; ++d) {
        for (bool symmetric : {true, false}) {
            const Region region = symmetric ? Region::full(d) : Region::half(d);
            const auto text = stream_of(d, symmetric, region);
            std::istringstream is(text);
            const auto data = read_stream(is);
            CHECK(data.header.region == region);
            CHECK(data.header.symmetric == symmetric);
            std::ostringstream again;
            write_stream_header(again, data.header);
            const auto config = lattice_points(region);
            for (const auto& t : data.triangulations) {
                const auto v = validate(config, t);
                CHECK(v.proper);
                CHECK(v.covers);
                write_stream_line(again, t);
            }
            CHECK(again.str() == text);
        }
    }
}

TEST_CASE("single-worker streams are byte-identical") {
    CHECK(stream_of(5, true, Region::full(5)) == stream_of(5, true, Region::full(5)));
    CHECK(stream_of(5, false, Region::half(5)) == stream_of(5, false, Region::half(5)));
}

TEST_CASE("malformed streams") {
    auto parse = [](const std::string& s) {
        std::istringstream is(s);
        return read_stream(is);
    };
    const std::string header = stream_header_line({Region::full(1), Mode::Unimodular, true});
    CHECK_NOTHROW(parse(header + "\n0,1,2\n"));
    CHECK_THROWS_AS(parse(""), StreamParseError);
    CHECK_THROWS_AS(parse("not json\n"), StreamParseError);
    CHECK_THROWS_AS(parse(R"({"format":"other"})" "\n"), StreamParseError);
    CHECK_THROWS_AS(parse(header + "\n0,1\n"), StreamParseError);
    CHECK_THROWS_AS(parse(header + "\n0,1,3\n"), StreamParseError);
    CHECK_THROWS_AS(parse(header + "\n1,0,2\n"), StreamParseError);
    CHECK_THROWS_AS(parse(header + "\n0,1,2x\n"), StreamParseError);
    CHECK_THROWS_AS(parse(header + "\n-0,1,2\n"), StreamParseError);
    CHECK_THROWS_AS(parse(header + "\n\n"), StreamParseError);
    auto bad_points = nlohmann::json::parse(header);
    bad_points["points"][0] = {5, 5};
    CHECK_THROWS_AS(parse(bad_points.dump() + "\n"), StreamParseError);
    try {
        parse(header + "\n0,1,2\n0,1,9\n");
        FAIL("expected a parse error");
    } catch (const StreamParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("svg rendering") {
    const auto c1 = lattice_points(Region::full(1));
    const Triangulation t1{Region::full(1), {Simplex::make(0, 1, 2)}};
    const auto svg = render_svg(c1, t1);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(count(svg, "class=\"point\"") == 3);
    CHECK(count(svg, "class=\"edge\"") == 3);
    CHECK(count(svg, "class=\"axis\"") == 0);
    CHECK(svg.find("stroke-width=\"1\"") != std::string::npos);
    CHECK(svg.find("href") == std::string::npos);
    // 40 px per unit, y flipped: (0,0) at the bottom left, (0,1) above it
    CHECK(svg.find("cx=\"20\" cy=\"60\"") != std::string::npos);
    CHECK(svg.find("cx=\"20\" cy=\"20\"") != std::string::npos);
    CHECK(svg.find("cx=\"60\" cy=\"60\"") != std::string::npos);

    std::vector<Triangulation> two;
    EnumerationConfig cfg;
    cfg.d = 2;
    enumerate_symmetric(cfg, [&](const Triangulation& t) { two.push_back(t); });
    REQUIRE(two.size() == 2);
    CHECK(two[1].simplices.size() == 4);
    const auto svg2 = render_svg(lattice_points(Region::full(2)), two[1], {40, true});
    CHECK(count(svg2, "class=\"edge\"") == 9);
    CHECK(count(svg2, "class=\"point\"") == 6);
    CHECK(count(svg2, "class=\"axis\"") == 1);
    CHECK(svg2.find("stroke-dasharray") != std::string::npos);
}
