#include "nfc/monomial.hpp"

#include "nfc/rng.hpp"
#include "nfc/voronoi.hpp"

#include <algorithm>

namespace nfc {

ValuedMonomial ValuedMonomial::operator*(const ValuedMonomial& o) const {
    return {val + o.val, add(exp, o.exp), theta_deg + o.theta_deg};
}

ValuedMonomial identity_monomial(int g) { return {0, IVec(g, 0), 0}; }

ValuedMonomial xi_raw(const FCDatum& d, const Level& lev, const IVec& alpha, const IVec& v) {
    return {e_level(d, lev, v) + pair(v, alpha), add(alpha, scale(phi(d, v), lev.t())), 1};
}

ValuedMonomial xi_monomial(const FCDatum& d, const Level& lev, const IVec& alpha, const IVec& v) {
    auto zs = closest_centers(d, lev, to_q(alpha));
    if (!std::binary_search(zs.begin(), zs.end(), IVec(d.g, 0)))
        throw Error("NotInSigma", to_string(alpha) + " is not in Sigma_l");
    return xi_raw(d, lev, alpha, v);
}

ValuedMonomial delta_action(const FCDatum& d, const Level& lev, const IVec& u, const ValuedMonomial& m) {
    ValuedMonomial r = m;
    r.val += m.theta_deg * e_level(d, lev, u) + pair(u, m.exp);
    r.exp = add(m.exp, scale(phi(d, u), m.theta_deg * lev.t()));
    return r;
}

ValuedMonomial s_action(const FCDatum& d, const Level& lev, const IVec& y, const ValuedMonomial& m) {
    return delta_action(d, lev, beta(d, y), m);
}

bool IdentityReport::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const IdentityRow& r) { return r.failures == 0; });
}

IdentityReport valuation_identities(const FCDatum& d, int sample_size, std::uint64_t seed) {
    Rng rng(seed);
    int g = d.g;
    IdentityRow e{"E(u) = l u(phi(u))"}, sym{"u(phi(v)) = v(phi(u)), u(phi(u)) > 0"},
        bp{"beta(phi(u)) = N u"}, nb{"N u(x) = B(phi(u), x)"}, add_row{"E(u+v) = E(u) + E(v) + 2l u(phi(v))"},
        eb{"E(beta(y)) = 2 N l A(y)"}, half{"E_l(u) = 2 l E_+(u)"};
    bool exact_a = !d.a_lin.has_value();
    bool half_ok = d.b_even() && d.phi_even();
    for (int k = 0; k < sample_size; ++k) {
        IVec u = rng.vec(g, -5, 5), v = rng.vec(g, -5, 5), x = rng.vec(g, -5, 5);
        Int ell = rng.uniform(1, 3);
        IVec pu = phi(d, u), pv = phi(d, v);
        ++e.cases;
        if (e_level(d, ell, u) != ell * pair(u, pu)) ++e.failures;
        ++sym.cases;
        if (pair(u, pv) != pair(v, pu) || (!is_zero(u) && pair(u, pu) <= 0)) ++sym.failures;
        ++bp.cases;
        if (beta(d, pu) != scale(u, d.n)) ++bp.failures;
        ++nb.cases;
        if (Q(static_cast<long>(d.n * pair(u, x))) != b_form(d, to_q(pu), to_q(x))) ++nb.failures;
        ++add_row.cases;
        if (e_level(d, ell, add(u, v)) != e_level(d, ell, u) + e_level(d, ell, v) + 2 * ell * pair(u, pv))
            ++add_row.failures;
        if (exact_a) {
            IVec y = mat_vec(d.y_basis, rng.vec(g, -3, 3));
            ++eb.cases;
            if (Q(static_cast<long>(e_level(d, ell, beta(d, y)))) != qi(2 * d.n * ell) * a_value(d, y)) ++eb.failures;
        }
        if (half_ok) {
            ++half.cases;
            if (e_level(d, Level{ell, false}, u) != 2 * ell * e_level(d, Level{1, true}, u)) ++half.failures;
        }
    }
    IdentityReport rep;
    rep.rows = {e, sym, bp, nb, add_row};
    if (exact_a) rep.rows.push_back(eb);
    if (half_ok) rep.rows.push_back(half);
    return rep;
}

Int fourier_rank(const FCDatum& d, Int m) {
    if (m < 1) throw Error("BadInput", "m must be positive");
    IMat my = d.y_basis;
    for (auto& row : my)
        for (auto& x : row) x *= m;
    auto sm = smith(my);
    Int r = 1;
    for (Int f : sm.factors) r *= f;
    return r;
}

Q fourier_exponent(const FCDatum& d, Int m, const IVec& y, const IVec& x) {
    return Q(static_cast<long>(m)) * a_value(d, y) + b_form(d, to_q(y), to_q(x));
}

IdentityReport power_law_check(const FCDatum& d, int samples, std::uint64_t seed) {
    Rng rng(seed);
    int g = d.g;
    IdentityRow co{"exponent(y1+y2, x) = exponent(y1, x+m y2) + exponent(y2, x)"},
        one{"m = 1: exponent = A(y) + B(y, x)"}, bm{"B_m(my, x) = B(y, x)"},
        rank{"|X/mY| = m^g |X/Y|"};
    for (int k = 0; k < samples; ++k) {
        Int m = rng.uniform(1, 4);
        IVec y1 = mat_vec(d.y_basis, rng.vec(g, -3, 3)), y2 = mat_vec(d.y_basis, rng.vec(g, -3, 3));
        IVec x = rng.vec(g, -5, 5);
        ++co.cases;
        if (fourier_exponent(d, m, add(y1, y2), x) !=
            fourier_exponent(d, m, y1, add(x, scale(y2, m))) + fourier_exponent(d, m, y2, x))
            ++co.failures;
        ++one.cases;
        if (fourier_exponent(d, 1, y1, x) != a_value(d, y1) + b_form(d, to_q(y1), to_q(x))) ++one.failures;
        ++bm.cases;
        // B_m(z, x) := B(z, x) / m
        if (b_form(d, to_q(scale(y1, m)), to_q(x)) / Q(static_cast<long>(m)) != b_form(d, to_q(y1), to_q(x)))
            ++bm.failures;
        ++rank.cases;
        Int p = 1;
        for (int i = 0; i < g; ++i) p *= m;
        if (fourier_rank(d, m) != p * fourier_rank(d, 1)) ++rank.failures;
    }
    IdentityReport rep;
    rep.rows = {co, one, bm, rank};
    return rep;
}

}  // namespace nfc
