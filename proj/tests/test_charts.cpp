#include "doctest.h"
#include "nfc/charts.hpp"

#include <set>

using namespace nfc;

namespace {

QVec tv(std::initializer_list<long> l) {
    QVec v;
    for (long x : l) v.push_back(Q(x));
    return v;
}

std::set<QVec> as_set(const std::vector<QVec>& v) { return {v.begin(), v.end()}; }

// Irreducible lattice points of a pointed cone up to a degree, by pairwise sums.
std::set<QVec> brute_irreducibles(const RationalCone& c, const QVec& psi, Int maxdeg, Int box) {
    int n = c.ambient;
    std::vector<QVec> pts;
    IVec x(n, -box);
    while (true) {
        QVec q = to_q(x);
        if (!is_zero(x) && c.contains(q) && dot(psi, q) <= Q(static_cast<long>(maxdeg))) pts.push_back(q);
        int i = 0;
        while (i < n && ++x[i] > box) x[i++] = -box;
        if (i == n) break;
    }
    std::set<QVec> all(pts.begin(), pts.end()), sums;
    for (const auto& a : pts)
        for (const auto& b : pts) sums.insert(add(a, b));
    std::set<QVec> out;
    for (const auto& p : pts)
        if (!sums.count(p)) out.insert(p);
    return out;
}

}  // namespace

TEST_CASE("Hilbert basis fixtures") {
    auto c = cone_from_generators(2, {tv({1, 0}), tv({1, 2})});
    auto hb = hilbert_basis(c);
    CHECK(as_set(hb.elements) == std::set<QVec>{tv({1, 0}), tv({1, 1}), tv({1, 2})});
    auto u = cone_from_generators(3, {tv({1, 0, 0}), tv({0, 1, 0}), tv({1, 1, 1})});
    CHECK(as_set(hilbert_basis(u).elements) == as_set(u.rays));
    auto half = cone_from_generators(2, {tv({1, 0})}, {tv({0, 1})});
    auto hh = hilbert_basis(half);
    CHECK(hh.lineality.size() == 1);
    CHECK(hh.elements.size() == 1);
}

TEST_CASE("Hilbert basis agrees with brute force") {
    std::vector<RationalCone> cones{
        cone_from_generators(3, {tv({1, 0, 0}), tv({1, 3, 0}), tv({1, 0, 2})}),
        cone_from_generators(3, {tv({2, 1, 0}), tv({1, 0, 3}), tv({1, 2, 1}), tv({1, 1, 1})}),
        cone_from_generators(2, {tv({3, -1}), tv({1, 4})}),
    };
    for (const auto& c : cones) {
        auto hb = hilbert_basis(c);
        Int maxdeg = 0;
        for (const auto& r : c.rays) maxdeg += dot(hb.grading, r).get_num().get_si();
        CHECK(as_set(hb.elements) == brute_irreducibles(c, hb.grading, maxdeg, 8));
    }
}

TEST_CASE("Tate charts") {
    auto d = tate_datum();
    Level lev{1, false};
    auto cg = chart_generators(d, lev, IVec{1}, IVec{0});
    auto gc = cone_from_generators(2, cg.weights);
    CHECK(gc == cone_dual(tau_cone(d, lev, {tv({1})})));
    CHECK(gc.contains(tv({1, 0})));
    auto ch = chart_ring(d, lev, {tv({1})}, IVec{0});
    CHECK(as_set(ch.basis.elements) == std::set<QVec>{tv({0, -1}), tv({1, 1})});
    CHECK(ch.basis.lineality.empty());
    CHECK(ch.unimodular);
    CHECK(ch.vanishing.empty());
    int zero = 0;
    for (const auto& r : ch.relations)
        if (!r.survives) {
            ++zero;
            CHECK(r.i != r.j);
        }
    CHECK(zero == 1);
    CHECK(in_semigroup(ch.basis, ch.dual, tv({1, 0})));
    auto torus = chart_ring(d, lev, {tv({-1}), tv({1})}, IVec{0});
    CHECK(torus.torus);
    CHECK(torus.basis.lineality == std::vector<QVec>{tv({0, 1})});
    CHECK(torus.basis.elements == std::vector<QVec>{tv({1, 0})});
    CHECK(torus.vanishing == std::vector<int>{0});
    for (const auto& r : torus.relations) CHECK(r.survives);
    auto c0 = chart_generators(d, lev, IVec{0}, IVec{0});
    auto cone0 = cone_from_generators(2, c0.weights);
    CHECK(cone0.lineality.size() == 1);
    CHECK_THROWS_AS(chart_generators(d, lev, IVec{2}, IVec{0}), Error);
}

TEST_CASE("half-level hexagon charts are regular") {
    auto d = pqr_datum(1, 1, 1);
    Level lev{1, true};
    auto p = voronoi_polytope(d, lev);
    CHECK(p.vertices.size() == 6);
    for (const auto& v : p.vertices) {
        auto ch = chart_ring(d, lev, {v}, IVec{0, 0});
        CHECK(ch.basis.elements.size() == 3);
        CHECK(ch.unimodular);
    }
    auto ch = chart_ring(d, lev, {tv({1, 0})}, IVec{0, 0});
    CHECK(as_set(ch.basis.elements) == std::set<QVec>{tv({1, 1, 0}), tv({0, 0, 1}), tv({0, -1, -1})});
    auto center = chart_ring(d, lev, p.vertices, IVec{0, 0});
    CHECK(center.torus);
    CHECK(center.basis.lineality.size() == 2);
}

TEST_CASE("I-adic bound") {
    auto d = tate_datum();
    Level lev{1, false};
    auto b = iadic_bound(d, lev, IVec{0}, IVec{0}, IVec{0});
    CHECK(b.m == Q(9, 4));
    CHECK(b.m_star == 36);
    CHECK(b.t == 0);
    CHECK(iadic_bound(d, lev, IVec{0}, IVec{0}, IVec{16}).t == 0);
    CHECK(iadic_bound(d, lev, IVec{0}, IVec{0}, IVec{17}).t == 1);
    Int prev = 0;
    for (Int k = 1; k < 10; ++k) {
        Int t = iadic_bound(d, lev, IVec{0}, IVec{0}, IVec{5 * k}).t;
        CHECK(t >= prev);
        prev = t;
    }
}

TEST_CASE("scaling") {
    CHECK(scaling_check(tate_datum(), Level{1, false}, 3, 10).ok());
    CHECK(scaling_check(tate_datum(), Level{1, false}, 1, 10).ok());
    CHECK(scaling_check(pqr_datum(1, 1, 1), Level{1, false}, 2, 12).ok());
}
