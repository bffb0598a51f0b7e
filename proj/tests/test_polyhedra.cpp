#include "doctest.h"
#include "nfc/polyhedra.hpp"
#include "nfc/rng.hpp"

using namespace nfc;

namespace {

QVec tv(std::initializer_list<long> l) {
    QVec v;
    for (long x : l) v.push_back(Q(x));
    return v;
}

}  // namespace

TEST_CASE("hexagon") {
    auto p = hull(std::vector<QVec>{tv({2, 2}), tv({-2, -2}), tv({2, 0}), tv({-2, 0}), tv({0, 2}), tv({0, -2}),
                                    tv({0, 0}), tv({1, 1})});
    CHECK(p.dim == 2);
    CHECK(p.vertices.size() == 6);
    std::vector<Ineq> want{{tv({1, 0}), Q(2)},  {tv({-1, 0}), Q(2)}, {tv({0, 1}), Q(2)},
                           {tv({0, -1}), Q(2)}, {tv({1, -1}), Q(2)}, {tv({-1, 1}), Q(2)}};
    std::sort(want.begin(), want.end());
    CHECK(p.facets == want);
    CHECK(p.contains(tv({2, 1})));
    CHECK_FALSE(p.contains(tv({2, -1})));
    CHECK(p.interior_contains(tv({1, 0})));
    CHECK_FALSE(p.interior_contains(tv({2, 1})));
    int edges = 0;
    for (const auto& f : faces(p)) edges += f.dim == 1;
    CHECK(edges == 6);
    CHECK(lattice_points(p).size() == 19);
}

TEST_CASE("degenerate and small cases") {
    auto pt = hull(std::vector<QVec>{tv({0, 0})});
    CHECK(pt.dim == 0);
    for (const auto& f : faces(pt)) CHECK(f.dim == 0);
    auto seg = hull(std::vector<QVec>{tv({-1}), tv({1})});
    CHECK(minkowski(seg, seg) == hull(std::vector<QVec>{tv({-2}), tv({2})}));
    CHECK_THROWS_AS(hull(std::vector<QVec>{}), Error);
    auto line = hull(std::vector<QVec>{tv({0, 0, 0}), tv({1, 1, 1})});
    CHECK(line.dim == 1);
    CHECK(line.equations.size() == 2);
    CHECK_THROWS_AS(from_inequalities(1, {{tv({1}), Q(0)}}), Error);  // unbounded
}

TEST_CASE("round trips and scaling on random point sets") {
    Rng rng(3);
    for (int i = 0; i < 40; ++i) {
        int n = 1 + i % 4;
        std::vector<QVec> pts;
        for (int k = 0; k < n + 3; ++k) pts.push_back(to_q(rng.vec(n, -3, 3)));
        auto p = hull(pts);
        CHECK(from_inequalities(n, p.facets, p.equations) == p);
        CHECK(hull(p.vertices) == p);
        for (const auto& v : p.vertices)
            for (const auto& f : p.facets) CHECK(dot(f.normal, v) + f.offset >= 0);
        // nP = P + ... + P for P containing the origin
        auto z = pts;
        z.push_back(QVec(n, Q(0)));
        auto p0 = hull(z);
        CHECK(minkowski(minkowski(p0, p0), p0) == scale(p0, Q(3)));
        CHECK(translate(translate(p0, pts[1]), scale(pts[1], Q(-1))) == p0);
    }
}

TEST_CASE("cones") {
    Rng rng(9);
    for (int i = 0; i < 40; ++i) {
        int n = 2 + i % 3;
        std::vector<QVec> gens;
        for (int k = 0; k < n + 1; ++k) {
            IVec g = rng.vec(n, -3, 3);
            g[0] = rng.uniform(1, 3);
            gens.push_back(to_q(g));
        }
        auto c = cone_from_generators(n, gens);
        CHECK(c.pointed());
        CHECK(cone_dual(cone_dual(c)) == c);
        CHECK(cone_from_inequalities(n, c.facets, c.equations) == c);
        for (const auto& g : gens) CHECK(c.contains(g));
    }
    auto half = cone_from_generators(2, {tv({1, 0})}, {tv({0, 1})});
    CHECK_FALSE(half.pointed());
    CHECK(cone_dual(half) == cone_from_generators(2, {tv({1, 0})}));
    auto a = cone_from_generators(2, {tv({1, 0}), tv({0, 1})});
    auto b = cone_from_generators(2, {tv({1, 1}), tv({-1, 1})});
    CHECK(cone_intersect(a, b) == cone_from_generators(2, {tv({1, 1}), tv({0, 1})}));
}

TEST_CASE("intersection") {
    auto sq = hull(std::vector<QVec>{tv({0, 0}), tv({2, 0}), tv({0, 2}), tv({2, 2})});
    auto sh = translate(sq, tv({1, 1}));
    CHECK(intersect(sq, sh) == hull(std::vector<QVec>{tv({1, 1}), tv({2, 1}), tv({1, 2}), tv({2, 2})}));
    CHECK(affine_dim({tv({0, 0}), tv({1, 1}), tv({2, 2})}) == 1);
}
