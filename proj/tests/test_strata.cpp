#include "doctest.h"
#include "nfc/strata.hpp"

using namespace nfc;

TEST_CASE("component groups") {
    CHECK(component_group(pqr_datum(1, 1, 1)).factors == IVec{1, 3});
    CHECK(component_group(pqr_datum(1, 1, 1)).name() == "Z/3");
    CHECK(component_group(e8_datum()).name() == "0");
    CHECK(component_group(e8_datum()).order == 1);
    CHECK(component_group(tate_datum()).name() == "Z/2");
    CHECK(component_group(validate_datum(2, identity_i(2), QMat{{Q(2), Q(0)}, {Q(0), Q(4)}})).name() ==
          "Z/2 x Z/4");
}

TEST_CASE("Tate stratification") {
    auto r = stratification(tate_datum(), Level{1, false});
    CHECK(r.components.size() == 2);
    CHECK(r.orbit_counts == std::vector<Int>{2, 2});
    CHECK(r.euler == 0);
    CHECK(r.max_complement_dim == 0);
}

TEST_CASE("half-level hexagon: three hexagonal components") {
    auto r = stratification(pqr_datum(1, 1, 1), Level{1, true});
    CHECK(r.components.size() == 3);
    for (const auto& c : r.components) {
        CHECK(c.face_counts == std::vector<Int>{6, 6, 1});
    }
    CHECK(r.orbit_counts == std::vector<Int>{6, 9, 3});
    CHECK(r.euler == 0);
    for (const auto& p : component_polygon_report(r)) CHECK(p.vertices == 6);
}

TEST_CASE("Delaunay side: two triangles") {
    auto r = delaunay_stratification(pqr_datum(1, 1, 1));
    CHECK(r.components.size() == 2);
    for (const auto& c : r.components) CHECK(c.cell.vertices.size() == 3);
    CHECK(r.euler == 0);
    for (const auto& p : component_polygon_report(r)) CHECK(p.vertices == 3);
    CHECK_THROWS_AS(component_polygon_report(stratification(tate_datum(), Level{1, false})), Error);
}
