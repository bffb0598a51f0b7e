#include "doctest.h"
#include "nfc/voronoi.hpp"

#include <set>

using namespace nfc;

namespace {

std::set<QVec> vset(const std::vector<QVec>& v) { return {v.begin(), v.end()}; }

std::set<QVec> pts(std::initializer_list<IVec> l) {
    std::set<QVec> s;
    for (const auto& v : l) s.insert(to_q(v));
    return s;
}

FCDatum g1() { return tate_datum(); }

}  // namespace

TEST_CASE("relevant vectors of the hexagon") {
    auto d = pqr_datum(1, 1, 1);
    auto r = relevant_vectors(d, Level{1, false});
    std::set<IVec> got(r.begin(), r.end());
    std::set<IVec> want{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
    CHECK(got == want);
    CHECK(relevant_vectors(g1(), Level{3, false}) == std::vector<IVec>{{-1}, {1}});
}

TEST_CASE("relevant vectors agree with the brute-force facet test") {
    for (auto d : {pqr_datum(1, 1, 1), pqr_datum(1, 2, 1), pqr_datum(3, 1, 2), pqr_datum(2, 2, 0)}) {
        CHECK(relevant_vectors(d, Level{1, false}) == relevant_vectors_bruteforce(d, 3));
    }
}

TEST_CASE("voronoi polytope fixtures") {
    auto p = voronoi_polytope(pqr_datum(1, 1, 1), Level{1, false});
    CHECK(vset(p.vertices) == pts({{2, 2}, {-2, -2}, {2, 0}, {-2, 0}, {0, 2}, {0, -2}}));
    auto q = voronoi_polytope(pqr_datum(1, 2, 1), Level{1, false});
    CHECK(vset(q.vertices) == pts({{3, 2}, {-3, -2}, {3, 0}, {-3, 0}, {-1, 2}, {1, -2}}));
    auto s = voronoi_polytope(g1(), Level{2, false});
    CHECK(vset(s.vertices) == pts({{2}, {-2}}));
    CHECK(sigma_points(pqr_datum(1, 1, 1), Level{1, false}).size() == 19);
    CHECK(sigma_points(g1(), Level{1, false}) == std::vector<IVec>{{-1}, {0}, {1}});
}

TEST_CASE("integrality and minimal level") {
    CHECK(is_integral(pqr_datum(1, 1, 1), Level{1, false}).integral);
    CHECK(is_integral(g1(), Level{1, false}).integral);
    CHECK(minimal_level(pqr_datum(1, 1, 1), 10).ell0 == 1);
    CHECK(minimal_level(g1(), 10).ell0 == 1);
    CHECK(is_integral(pqr_datum(1, 1, 1), Level{1, true}).integral);
}

TEST_CASE("closest vector decomposition") {
    auto d = pqr_datum(1, 1, 1);
    Level lev{1, false};
    for (Int a = -7; a <= 7; ++a)
        for (Int b = -7; b <= 7; ++b) {
            IVec x{a, b};
            auto dec = cvp_decompose(d, lev, x);
            IVec back = add(dec.gamma, scale(phi(d, dec.z), lev.t()));
            CHECK(back == x);
            Int dv = d_value(d, lev, x);
            CHECK(dv >= 0);
            CHECK(Q(static_cast<long>(dv)) <= c_value(d, lev, to_q(x)));
        }
    CHECK(d_value(d, lev, IVec{2, 2}) == 0);
}

TEST_CASE("face complexes") {
    auto fc = vor_complex(pqr_datum(1, 1, 1), Level{1, false});
    CHECK(fc.counts_quotient == std::vector<Int>{6, 9, 3});
    CHECK(fc.euler() == 0);
    auto f1 = vor_complex(g1(), Level{1, false});
    CHECK(f1.counts_quotient == std::vector<Int>{2, 2});
    auto del = delaunay_complex(pqr_datum(1, 1, 1));
    CHECK(del.counts_mod_translation[2] == 2);
    for (const auto& c : del.classes)
        if (c.dim == 2) CHECK(c.vertices.size() == 3);
    auto d1 = delaunay_complex(g1());
    CHECK(d1.counts_mod_translation == std::vector<Int>{1, 1});
}
