#include "doctest.h"
#include "nfc/fan.hpp"

#include <set>

using namespace nfc;

namespace {

QVec tv(std::initializer_list<long> l) {
    QVec v;
    for (long x : l) v.push_back(Q(x));
    return v;
}

RationalCone gen_cone(int n, std::vector<QVec> gens) { return cone_from_generators(n, gens); }

}  // namespace

TEST_CASE("tau cones of the Tate fixture") {
    auto d = tate_datum();
    Level lev{1, false};
    auto cell = tau_cone(d, lev, {tv({-1}), tv({1})});
    CHECK(cell == gen_cone(2, {tv({1, 0})}));
    auto vert = tau_cone(d, lev, {tv({1})});
    CHECK(vert == gen_cone(2, {tv({1, 0}), tv({1, -1})}));
    auto ct = cut(vert);
    CHECK(ct.vertices == std::vector<QVec>{tv({-1}), tv({0})});
    CHECK_THROWS_AS(tau_cone(d, lev, {tv({0})}), Error);
}

TEST_CASE("tau cone at a hexagon vertex") {
    auto d = pqr_datum(1, 1, 1);
    Level lev{1, false};
    auto c = tau_cone(d, lev, {tv({2, 2})});
    CHECK(c.dim() == 3);
    auto ct = cut(c);
    std::set<QVec> got(ct.vertices.begin(), ct.vertices.end());
    CHECK(got == std::set<QVec>{tv({0, 0}), tv({-1, 0}), tv({0, -1})});
}

TEST_CASE("chart-side cones") {
    auto d = tate_datum();
    Level lev{1, false};
    auto cc = chart_cone(d, lev, IVec{1}, IVec{0});
    CHECK(cc.cone == gen_cone(2, {tv({1, 0}), tv({0, -1}), tv({1, 1})}));
    CHECK(tau_cone_from_charts(d, lev, IVec{1}, IVec{0}) == tau_cone(d, lev, {tv({1})}));
    auto h = pqr_datum(1, 1, 1);
    CHECK(tau_cone_from_charts(h, lev, IVec{0, 0}, IVec{0, 0}) == gen_cone(3, {tv({1, 0, 0})}));
    CHECK(tau_cone_from_charts(h, lev, IVec{0, 0}, IVec{1, 0}) == gen_cone(3, {tv({1, -1, 0})}));
    CHECK(cut(gen_cone(3, {tv({1, -1, 0})})).vertices == std::vector<QVec>{tv({-1, 0})});
}

TEST_CASE("fans over S") {
    auto d = tate_datum();
    auto f = build_fan(d, Level{1, false});
    CHECK(f.maximal().size() == 2);
    for (auto* c : f.maximal()) CHECK(c->cone.dim() == 2);
    CHECK(check_fan_over_S(f).ok());
    auto h = build_fan(pqr_datum(1, 1, 1), Level{1, false});
    CHECK(h.maximal().size() == 6);
    auto rep = check_fan_over_S(h);
    CHECK(rep.ok());
    auto bad = check_cones_over_S({gen_cone(3, {tv({0, 1, 0})})});
    CHECK_FALSE(bad.trivial_on_xdual);
    CHECK_FALSE(bad.generates);
    CHECK(bad.cone_criterion);
    CHECK(check_cones_over_S({gen_cone(3, {tv({1, -2, 1})})}).ok());
}

TEST_CASE("Cut bijection") {
    auto r1 = cut_bijection_report(tate_datum(), Level{1, false});
    CHECK(r1.ok());
    std::set<std::pair<int, int>> p1(r1.dim_pairs.begin(), r1.dim_pairs.end());
    CHECK(p1 == std::set<std::pair<int, int>>{{0, 1}, {1, 0}});
    auto r2 = cut_bijection_report(pqr_datum(1, 1, 1), Level{1, false});
    for (const auto& f : r2.failures) MESSAGE(f);
    CHECK(r2.ok());
    std::set<std::pair<int, int>> p2(r2.dim_pairs.begin(), r2.dim_pairs.end());
    CHECK(p2 == std::set<std::pair<int, int>>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("sigma star and separation") {
    auto s1 = sigma_star(tate_datum(), Level{1, false});
    CHECK(s1.vertices == std::vector<QVec>{tv({-1}), tv({1})});
    auto s2 = sigma_star(pqr_datum(1, 1, 1), Level{1, false});
    std::set<QVec> got(s2.vertices.begin(), s2.vertices.end());
    CHECK(got == std::set<QVec>{tv({1, 0}), tv({-1, 0}), tv({0, 1}), tv({0, -1}), tv({1, -1}),
                                tv({-1, 1})});
    CHECK(s2.interior_contains(tv({0, 0})));
    CHECK_FALSE(separation_membership(tate_datum(), Level{1, false}, tv({7}), 6));
    CHECK(separation_membership(tate_datum(), Level{1, false}, tv({6}), 6));
    CHECK(separation_membership(pqr_datum(1, 1, 1), Level{1, false}, tv({0, 0}), 1));
}

TEST_CASE("Mumford fan") {
    auto a2 = mumford_fan(pqr_datum(1, 1, 1));
    CHECK(a2.components == 2);
    CHECK(a2.cut0.vertices.size() == 6);
    CHECK(a2.report.ok());
    auto t = mumford_fan(tate_datum());
    CHECK(t.components == 1);
    CHECK(t.cut0.vertices == std::vector<QVec>{tv({-1}), tv({1})});
    for (const auto& c : a2.fan.cones)
        for (const auto& r : c.cone.rays) CHECK(r[0] >= 0);
}
