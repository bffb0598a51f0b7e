#include "doctest.h"
#include "nfc/io.hpp"
#include "nfc/rng.hpp"

#include <functional>

using namespace nfc;

namespace {

std::string kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

QMat qm(std::initializer_list<std::initializer_list<long>> rows) {
    QMat m;
    for (auto r : rows) {
        QVec v;
        for (long x : r) v.push_back(Q(x));
        m.push_back(v);
    }
    return m;
}

}  // namespace

TEST_CASE("rationals") {
    CHECK(parse_rational("6/4") == Q(3, 2));
    CHECK(parse_rational("-7") == Q(-7));
    Q h(3, -6);
    h.canonicalize();
    CHECK(to_string(h) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(floor_q(Q(-1, 2)) == -1);
    CHECK(ceil_q(Q(-1, 2)) == 0);
    CHECK(round_q(Q(1, 2)) == 1);
    CHECK(round_q(Q(-1, 2)) == 0);
}

TEST_CASE("validate_datum") {
    auto d = validate_datum(2, identity_i(2), qm({{2, -1}, {-1, 2}}));
    CHECK(d.n == 3);
    CHECK(d.principal());
    CHECK(kind_of([] { validate_datum(1, identity_i(1), qm({{0}})); }) == "NotPositiveDefinite");
    CHECK(kind_of([] { validate_datum(2, identity_i(2), qm({{2, -1}, {-1, -2}})); }) == "NotPositiveDefinite");
    CHECK(kind_of([] { validate_datum(2, identity_i(2), qm({{2, 1}, {0, 2}})); }) == "NonSymmetric");
    CHECK(kind_of([] { validate_datum(2, IMat{{1, 1}, {1, 1}}, qm({{2, 0}, {0, 2}})); }) == "SingularYBasis");
    CHECK(kind_of([] { validate_datum(1, identity_i(1), QMat{{Q(1, 2)}}); }) == "NonIntegralOnYxX");
    // B rational on X but integral on Y x X
    CHECK(validate_datum(1, IMat{{2}}, QMat{{Q(1, 2)}}).n == 1);
}

TEST_CASE("beta, N, phi, E, C") {
    auto d = pqr_datum(1, 1, 1);
    CHECK(beta(d, IVec{1, 0}) == IVec{2, -1});
    CHECK(beta(d, IVec{0, 0}) == IVec{0, 0});
    CHECK(beta(tate_datum(), IVec{1}) == IVec{2});
    CHECK(n_index(d) == 3);
    CHECK(n_index(e8_datum()) == 1);
    CHECK(n_index(tate_datum()) == 2);
    CHECK(phi(d, IVec{1, 0}) == IVec{2, 1});
    CHECK(phi(tate_datum(), IVec{1}) == IVec{1});
    CHECK(e_level(d, 1, IVec{1, 0}) == 2);
    CHECK(e_level(tate_datum(), 3, IVec{2}) == 12);
    CHECK(e_level(d, 1, IVec{0, 0}) == 0);
    CHECK(c_value(d, 1, IVec{3, 0}) == Q(3, 2));
    CHECK(c_value(tate_datum(), 1, IVec{2}) == 1);
    CHECK(c_value(d, 1, IVec{0, 0}) == 0);
    auto y3 = validate_datum(2, IMat{{1, 0}, {0, 3}}, QMat{{Q(2), Q(0)}, {Q(0), Q(2, 3)}});
    CHECK_THROWS_AS(beta(y3, IVec{0, 1}), Error);
    CHECK(beta(y3, IVec{0, 3}) == IVec{0, 2});
}

TEST_CASE("smith normal form") {
    CHECK(smith(IMat{{2, -1}, {-1, 2}}).factors == IVec{1, 3});
    CHECK(smith(identity_i(2)).factors == IVec{1, 1});
    CHECK(smith(IMat{{2, 0}, {0, 2}}).factors == IVec{2, 2});
    Rng rng(11);
    for (int i = 0; i < 30; ++i) {
        IMat m(3, IVec(3));
        for (auto& r : m) r = rng.vec(3, -5, 5);
        auto s = smith(m);
        CHECK(mat_mul(mat_mul(s.left, m), s.right) == s.diag);
        CHECK(abs(determinant(to_q(s.left))) == 1);
        CHECK(abs(determinant(to_q(s.right))) == 1);
        Q prod = 1;
        for (size_t k = 0; k < s.factors.size(); ++k) {
            prod *= qi(s.factors[k]);
            if (k + 1 < s.factors.size()) CHECK(s.factors[k + 1] % s.factors[k] == 0);
        }
        if (s.factors.size() == 3) CHECK(prod == abs(determinant(to_q(m))));
    }
}

TEST_CASE("datum invariants on random forms") {
    Rng rng(5);
    for (const auto& d : {pqr_datum(1, 1, 1), pqr_datum(3, 1, 2), tate_datum(), e8_datum()}) {
        for (int i = 0; i < 20; ++i) {
            IVec u = rng.vec(d.g, -5, 5), v = rng.vec(d.g, -5, 5), x = rng.vec(d.g, -5, 5);
            CHECK(beta(d, phi(d, u)) == scale(u, d.n));
            CHECK(pair(u, phi(d, v)) == pair(v, phi(d, u)));
            if (!is_zero(u)) CHECK(pair(u, phi(d, u)) > 0);
            CHECK(qi(d.n * pair(u, x)) == b_form(d, to_q(phi(d, u)), to_q(x)));
            CHECK(e_level(d, 2, add(u, v)) == e_level(d, 2, u) + e_level(d, 2, v) + 4 * pair(u, phi(d, v)));
            IVec y = rng.vec(d.g, -3, 3);
            CHECK(qi(e_level(d, 1, beta(d, y))) == qi(2 * d.n) * a_value(d, y));
        }
    }
}

TEST_CASE("datum JSON") {
    auto d = parse_datum(R"({"rank": 2, "y_basis": [[1,0],[0,1]], "b": [["2","-1"],[-1,"4/2"]]})");
    CHECK(d.n == 3);
    auto round = parse_datum(datum_json(d).dump());
    CHECK(round.b == d.b);
    CHECK(kind_of([] { parse_datum("{"); }) == "BadInput");
    CHECK(kind_of([] { parse_datum(R"({"b": [[2]]})"); }) == "BadInput");
    CHECK(kind_of([] { parse_datum(R"({"rank": 1, "b": [[0]]})"); }) == "BadInput");
    try {
        parse_datum(R"({"rank": 2, "b": [[2, 1], [1]]})");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("b[1]") != std::string::npos);
    }
}
