#include "nfc/charts.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace nfc {

namespace {

bool in_sigma_points(const std::vector<IVec>& pts, const IVec& x) {
    return std::binary_search(pts.begin(), pts.end(), x);
}

Q max_c_over(const FCDatum& d, const Level& lev, const std::vector<IVec>& pts) {
    Q m = 0;
    for (const auto& p : pts) m = std::max(m, c_value(d, lev, to_q(p)));
    return m;
}

Level scaled(const Level& lev, Int k) { return Level{lev.ell * k, lev.half}; }

}  // namespace

ChartGenerators chart_generators(const FCDatum& d, const Level& lev, const IVec& alpha,
                                 const IVec& u, const PolyOptions& opt) {
    int g = d.g;
    auto sig = sigma_points(d, lev, opt);
    if (!in_sigma_points(sig, alpha)) throw Error("NotInSigma", to_string(alpha) + " is not in Sigma_l");
    ChartGenerators cg;
    cg.alpha = alpha;
    cg.u = u;
    cg.m = max_c_over(d, lev, sigma_points(d, scaled(lev, 3), opt));
    cg.sigma2 = sigma_points(d, scaled(lev, 2), opt);
    // Delta: 2C(x,lambda) <= C(lambda) + 2M for lambda in Sigma_{2l} - alpha
    Q tn = Q(static_cast<long>(lev.t() * d.n));
    std::vector<Ineq> ineqs;
    for (const auto& s : cg.sigma2) {
        QVec lam = to_q(sub(s, alpha));
        if (is_zero(lam)) continue;
        QVec nv = scale(mat_vec(d.b, lam), Q(-1) / tn);
        QVec prim = primitive(nv);
        size_t j = 0;
        while (nv[j] == 0) ++j;
        Q k = prim[j] / nv[j];
        ineqs.push_back({prim, (c_value(d, lev, lam) + 2 * cg.m) * k});
    }
    cg.delta = lattice_points(from_inequalities(g, ineqs, {}, opt));
    std::set<IVec> xs(cg.delta.begin(), cg.delta.end());
    xs.insert(cg.sigma2.begin(), cg.sigma2.end());
    for (const auto& x : xs) {
        IVec rel = sub(x, alpha);
        Int h = d_value(d, lev, x) + pair(u, rel);
        cg.weights.push_back(tilde(Q(static_cast<long>(h)), to_q(rel)));
    }
    return cg;
}

std::vector<QVec> HilbertBasis::all() const {
    std::vector<QVec> out;
    for (const auto& l : lineality) {
        out.push_back(l);
        out.push_back(scale(l, Q(-1)));
    }
    out.insert(out.end(), elements.begin(), elements.end());
    return out;
}

HilbertBasis hilbert_basis(const RationalCone& cone, const PolyOptions& opt) {
    int n = cone.ambient;
    if (n > 7 && !opt.allow_high_dim_vertices) throw Error("DimensionCap", "Hilbert basis above dimension 7");
    HilbertBasis hb;
    int k = static_cast<int>(cone.lineality.size());
    // unimodular coordinates c = R^T x whose first k entries carry the lineality lattice
    IMat rt = identity_i(n);
    if (k > 0) {
        QMat perp = nullspace(cone.lineality);
        IMat perp_i;
        for (const auto& row : perp) perp_i.push_back(to_int(primitive(row)));
        IMat kb = perp_i.empty() ? identity_i(n) : integer_kernel(perp_i);
        auto sm = smith(kb);
        rt = transpose(sm.right);
        for (const auto& row : kb) hb.lineality.push_back(to_q(row));
        std::sort(hb.lineality.begin(), hb.lineality.end());
    }
    QMat rt_q = to_q(rt);
    QMat rt_inv = *inverse(rt_q);
    auto project = [&](const QVec& x) {
        QVec c = mat_vec(rt_q, x);
        return QVec(c.begin() + k, c.end());
    };
    auto lift = [&](const QVec& cp) {
        QVec c(k, Q(0));
        c.insert(c.end(), cp.begin(), cp.end());
        return mat_vec(rt_inv, c);
    };
    int m = n - k;
    std::vector<QVec> prays;
    for (const auto& r : cone.rays) prays.push_back(project(r));
    hb.grading = QVec(n, Q(0));
    if (prays.empty()) return hb;
    RationalCone pc = cone_from_generators(m, prays, {}, opt);
    QVec psi(m, Q(0));
    for (const auto& f : pc.facets) psi = add(psi, f);
    if (pc.facets.empty()) psi = pc.rays.front();  // a single ray spanning a line's half
    Q total = 0;
    for (const auto& r : pc.rays) {
        Q v = dot(psi, r);
        if (v <= 0) throw Error("NotPointed", "no positive grading on the cone");
        total += v;
    }
    // lattice points with psi <= sum over rays
    std::vector<Ineq> ineqs, eqs;
    for (const auto& f : pc.facets) ineqs.push_back({f, Q(0)});
    for (const auto& e : pc.equations) eqs.push_back({e, Q(0)});
    QVec psi_p = primitive(psi);
    Q kpsi = psi_p[0] != 0 ? psi_p[0] / psi[0] : Q(0);
    for (int i = 0; kpsi == 0 && i < m; ++i)
        if (psi[i] != 0) kpsi = psi_p[i] / psi[i];
    ineqs.push_back({scale(psi_p, Q(-1)), total * kpsi});
    PolyOptions big = opt;
    big.allow_high_dim_vertices = true;
    auto pts = lattice_points(from_inequalities(m, ineqs, eqs, big));
    std::vector<std::pair<Q, QVec>> cand;
    for (const auto& p : pts) {
        if (is_zero(p)) continue;
        QVec q = to_q(p);
        cand.push_back({dot(psi_p, q), q});
    }
    std::sort(cand.begin(), cand.end());
    std::vector<QVec> kept;
    for (const auto& [deg, x] : cand) {
        bool reducible = std::any_of(kept.begin(), kept.end(),
                                     [&](const QVec& h) { return pc.contains(sub(x, h)); });
        if (!reducible) kept.push_back(x);
    }
    for (const auto& x : kept) hb.elements.push_back(lift(x));
    // grading in X coordinates: psi_p . (R^T x)_{k..}
    QVec full(n, Q(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) full[j] += psi_p[i] * rt_q[k + i][j];
    hb.grading = full;
    std::stable_sort(hb.elements.begin(), hb.elements.end(), [&](const QVec& a, const QVec& b) {
        Q da = dot(full, a), db = dot(full, b);
        return da != db ? da < db : a < b;
    });
    return hb;
}

bool in_semigroup(const HilbertBasis& hb, const RationalCone& cone, const QVec& x) {
    std::map<QVec, bool> memo;
    std::function<bool(const QVec&)> rec = [&](const QVec& y) -> bool {
        if (!cone.contains(y)) return false;
        if (dot(hb.grading, y) == 0) return true;  // integral point of the lineality space
        auto it = memo.find(y);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const auto& h : hb.elements)
            if (rec(sub(y, h))) {
                ok = true;
                break;
            }
        memo[y] = ok;
        return ok;
    };
    return rec(x);
}

MonomialChart chart_ring(const FCDatum& d, const Level& lev, const std::vector<QVec>& face,
                         const IVec& u, const PolyOptions& opt) {
    MonomialChart ch;
    ch.face = face;
    ch.face_dim = affine_dim(face);
    ch.u = u;
    ch.torus = ch.face_dim == d.g;
    ch.tau = translate_cone(tau_cone(d, lev, face, opt), u);
    ch.dual = cone_dual(ch.tau, opt);
    ch.basis = hilbert_basis(ch.dual, opt);
    auto all = ch.basis.lineality;
    all.insert(all.end(), ch.basis.elements.begin(), ch.basis.elements.end());
    if (static_cast<int>(all.size()) == d.g + 1) {
        IMat m;
        for (const auto& v : all) m.push_back(to_int(v));
        auto sm = smith(m);
        ch.unimodular = static_cast<int>(sm.factors.size()) == d.g + 1 &&
                        std::all_of(sm.factors.begin(), sm.factors.end(), [](Int f) { return f == 1; });
    }
    fiber_presentation(ch);
    return ch;
}

void fiber_presentation(MonomialChart& ch) {
    ch.vanishing.clear();
    ch.relations.clear();
    const auto& el = ch.basis.elements;
    auto zero_on = [&](const QVec& x) {
        std::set<int> s;
        for (size_t r = 0; r < ch.tau.rays.size(); ++r)
            if (dot(ch.tau.rays[r], x) == 0) s.insert(static_cast<int>(r));
        return s;
    };
    std::vector<std::set<int>> z;
    std::vector<int> alive;
    for (size_t i = 0; i < el.size(); ++i) {
        z.push_back(zero_on(el[i]));
        if (z.back().empty() && !ch.tau.rays.empty())
            ch.vanishing.push_back(static_cast<int>(i));
        else
            alive.push_back(static_cast<int>(i));
    }
    for (size_t a = 0; a < alive.size(); ++a)
        for (size_t b = a; b < alive.size(); ++b) {
            int i = alive[a], j = alive[b];
            bool common = std::any_of(z[i].begin(), z[i].end(), [&](int r) { return z[j].count(r) > 0; });
            ch.relations.push_back({i, j, common});
        }
}

std::string fiber_relations_string(const MonomialChart& ch) {
    std::ostringstream os;
    bool first = true;
    for (int i : ch.vanishing) {
        os << (first ? "" : ", ") << "h" << i << " = 0";
        first = false;
    }
    for (const auto& r : ch.relations)
        if (!r.survives) {
            os << (first ? "" : ", ") << "h" << r.i << "*h" << r.j << " = 0";
            first = false;
        }
    return first ? "none" : os.str();
}

IAdicBound iadic_bound(const FCDatum& d, const Level& lev, const IVec& alpha, const IVec& u,
                       const IVec& x, const PolyOptions& opt) {
    auto cg = chart_generators(d, lev, alpha, u, opt);
    IAdicBound b;
    b.m = cg.m;
    Q worst = 0;
    for (const auto& p : cg.delta) worst = std::max(worst, c_value(d, lev, to_q(p)));
    for (const auto& p : sigma_points(d, scaled(lev, 3), opt)) worst = std::max(worst, c_value(d, lev, to_q(p)));
    b.multiplier = 16;
    while (Q(static_cast<long>(b.multiplier)) * b.m < worst) b.multiplier *= 2;
    b.m_star = b.m * Q(static_cast<long>(b.multiplier));
    Q cx = c_value(d, lev, to_q(x));
    Q bound = b.m_star * 2;
    while (b.m_star > 0 && cx >= bound) {
        ++b.t;
        bound *= 2;
    }
    return b;
}

ScalingReport scaling_check(const FCDatum& d, const Level& lev, Int ell_prime, int samples,
                            const PolyOptions& opt) {
    ScalingReport rep;
    Level big = scaled(lev, ell_prime);
    auto sig = sigma_points(d, lev, opt);
    int g = d.g;
    std::vector<IVec> us{IVec(g, 0)};
    for (int i = 0; i < g; ++i) {
        IVec e(g, 0);
        e[i] = 1;
        us.push_back(e);
    }
    for (const auto& a : sig)
        for (const auto& u : us) {
            if (rep.samples >= samples) break;
            ++rep.samples;
            auto c1 = tau_cone_from_charts(d, lev, a, u, opt);
            auto c2 = tau_cone_from_charts(d, big, scale(a, ell_prime), u, opt);
            if (!(c1 == c2)) {
                rep.cones_equal = false;
                rep.failures.push_back("chart cones differ at alpha=" + to_string(a) + " u=" + to_string(u));
            }
        }
    auto p1 = voronoi_polytope(d, lev, opt);
    auto p2 = voronoi_polytope(d, big, opt);
    if (!(scale(p1, Q(static_cast<long>(ell_prime))) == p2)) {
        rep.complexes_equal = false;
        rep.failures.push_back("Voronoi polytope does not scale");
    }
    if (is_integral(d, lev, opt).integral) {
        auto f1 = vor_complex(d, lev, opt), f2 = vor_complex(d, big, opt);
        if (f1.counts_quotient != f2.counts_quotient) {
            rep.complexes_equal = false;
            rep.failures.push_back("face counts differ after scaling");
        }
        std::set<std::vector<QVec>> s2;
        for (const auto& c : f2.classes) s2.insert(c.vertices);
        for (const auto& c : f1.classes) {
            std::vector<QVec> vs;
            for (const auto& v : c.vertices) vs.push_back(scale(v, Q(static_cast<long>(ell_prime))));
            std::sort(vs.begin(), vs.end());
            // scaled representative must be a face of Vor at the larger level
            bool found = false;
            for (const auto& f : faces(p2)) {
                std::vector<QVec> w;
                for (int i : f.vertices) w.push_back(p2.vertices[i]);
                std::sort(w.begin(), w.end());
                if (w == vs) found = true;
            }
            if (!found) {
                rep.complexes_equal = false;
                rep.failures.push_back("scaled face " + std::to_string(c.dim) + " is not a face");
            }
        }
    }
    return rep;
}

}  // namespace nfc
