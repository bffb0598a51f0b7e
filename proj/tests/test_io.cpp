#include "doctest.h"
#include "nfc/io.hpp"

using namespace nfc;

TEST_CASE("svg tiling of the hexagon") {
    auto svg = voronoi_svg(pqr_datum(1, 1, 1), Level{1, false});
    CHECK(svg.find("<svg") == 0);
    for (const char* c : {"class=\"c0\"", "class=\"c1\"", "class=\"c2\""}) CHECK(svg.find(c) != std::string::npos);
    CHECK(svg.find("class=\"c3\"") == std::string::npos);
    CHECK(svg == voronoi_svg(pqr_datum(1, 1, 1), Level{1, false}));
    CHECK_THROWS_AS(voronoi_svg(tate_datum(), Level{1, false}), Error);
}

TEST_CASE("quotient classes") {
    auto d = pqr_datum(1, 1, 1);
    CHECK(quotient_class(d, IVec{0, 0}) == quotient_class(d, beta(d, IVec{1, 0})));
    CHECK(quotient_class(d, IVec{1, 0}) != quotient_class(d, IVec{0, 0}));
}

TEST_CASE("serializers carry the schema and rationals as strings") {
    auto d = pqr_datum(1, 1, 1);
    Level lev{1, true};
    auto sj = strata_json(stratification(d, lev));
    CHECK(sj["schema"] == kSchema);
    CHECK(sj["components"].size() == 3);
    auto cj = complex_json(vor_complex(d, Level{1, false}));
    CHECK(cj["counts_quotient"] == Json::array({6, 9, 3}));
    CHECK(cj["faces"][0]["vertices"][0][0].is_string());
    auto ch = chart_ring(d, lev, {QVec{Q(1), Q(0)}}, IVec{0, 0});
    auto chj = chart_json(ch);
    CHECK(chj["hilbert_basis"].size() == 3);
    CHECK(chj["unimodular"] == true);
    CHECK(group_json(component_group(d))["name"] == "Z/3");
}
