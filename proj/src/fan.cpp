#include "nfc/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nfc {

QVec TildeVector::vec() const { return tilde(x0, x); }

TildeVector TildeVector::from_vec(const QVec& v) {
    return {v[0], QVec(v.begin() + 1, v.end())};
}

Q tilde_pair(const TildeVector& a, const TildeVector& b) { return a.x0 * b.x0 + dot(a.x, b.x); }

QVec tilde(const Q& x0, const QVec& x) {
    QVec v{x0};
    v.insert(v.end(), x.begin(), x.end());
    return v;
}

std::vector<const FanCone*> SFan::maximal() const {
    std::vector<const FanCone*> out;
    for (const auto& c : cones)
        if (c.cone.dim() == g + 1) out.push_back(&c);
    return out;
}

namespace {

QVec shear(const QVec& r, const IVec& w) {
    // (u0, u) -> (u0, u - u0 w)
    QVec out = r;
    for (size_t i = 0; i < w.size(); ++i) out[i + 1] -= r[0] * Q(static_cast<long>(w[i]));
    return out;
}

std::vector<IVec> lattice_window(const IMat& cols, int window) {
    int g = static_cast<int>(cols.size());
    std::vector<IVec> out;
    IVec k(g, -window);
    while (true) {
        out.push_back(mat_vec(cols, k));
        int i = 0;
        while (i < g && ++k[i] > window) k[i++] = -window;
        if (i == g) break;
    }
    return out;
}

}  // namespace

RationalCone translate_cone(const RationalCone& c, const IVec& w) {
    std::vector<QVec> rays, lin;
    for (const auto& r : c.rays) rays.push_back(shear(r, w));
    for (const auto& l : c.lineality) lin.push_back(shear(l, w));
    return cone_from_generators(c.ambient, rays, lin);
}

std::vector<IVec> face_centers(const FCDatum& d, const Level& lev, const std::vector<QVec>& face) {
    std::set<IVec> acc;
    bool first = true;
    for (const auto& p : face) {
        std::set<IVec> here;
        for (const auto& z : closest_centers(d, lev, p)) here.insert(neg(z));
        if (first) {
            acc = here;
            first = false;
        } else {
            std::set<IVec> keep;
            std::set_intersection(acc.begin(), acc.end(), here.begin(), here.end(),
                                  std::inserter(keep, keep.begin()));
            acc = keep;
        }
    }
    return {acc.begin(), acc.end()};
}

RationalCone tau_cone(const FCDatum& d, const Level& lev, const std::vector<QVec>& face,
                      const PolyOptions& opt) {
    if (face.empty()) throw Error("NotAFace", "empty face");
    auto centers = face_centers(d, lev, face);
    if (centers.empty()) throw Error("NotAFace", "face lies in no Voronoi cell");
    std::vector<QVec> gens;
    for (const auto& v : centers) gens.push_back(tilde(1, to_q(v)));
    RationalCone c = cone_from_generators(d.g + 1, gens, {}, opt);
    if (c.dim() != d.g + 1 - affine_dim(face))
        throw Error("NotAFace", "point set is not a face of the Voronoi decomposition");
    return c;
}

ChartCone chart_cone(const FCDatum& d, const Level& lev, const IVec& a, const IVec& u,
                     const PolyOptions& opt) {
    int g = d.g;
    ChartCone cc;
    auto dec = cvp_decompose(d, lev, a);
    cc.alpha = dec.gamma;
    cc.w = dec.z;
    cc.u = add(u, dec.z);
    RationalPolytope cell = voronoi_polytope(d, lev, opt);
    std::vector<QVec> all{tilde(1, QVec(g, Q(0)))};
    for (const auto& v : closest_centers(d, lev, to_q(cc.alpha))) {
        ChartPiece piece;
        piece.v = v;
        piece.beta = sub(cc.alpha, scale(phi(d, v), lev.t()));
        IVec shift = add(v, cc.u);
        std::vector<QVec> gens;
        for (const auto& p : cell.vertices) {
            QVec x = sub(p, to_q(piece.beta));
            if (is_zero(x)) continue;
            gens.push_back(tilde(dot(to_q(shift), x), x));
        }
        piece.local = cone_from_generators(g + 1, gens, {}, opt);
        all.insert(all.end(), gens.begin(), gens.end());
        cc.pieces.push_back(std::move(piece));
    }
    cc.cone = cone_from_generators(g + 1, all, {}, opt);
    return cc;
}

RationalCone tau_cone_from_charts(const FCDatum& d, const Level& lev, const IVec& a, const IVec& u,
                                  const PolyOptions& opt) {
    return cone_dual(chart_cone(d, lev, a, u, opt).cone, opt);
}

SFan build_fan(const FCDatum& d, const Level& lev, const PolyOptions& opt) {
    FaceComplex fc = vor_complex(d, lev, opt);
    SFan fan;
    fan.g = d.g;
    fan.lev = lev;
    fan.translations = d.beta_y;
    auto reps = dual_quotient_reps(d);
    for (const auto& cls : fc.classes) {
        RationalCone base = tau_cone(d, lev, cls.vertices, opt);
        auto centers = face_centers(d, lev, cls.vertices);
        for (const auto& w : reps) {
            // face + t phi(w) has centers shifted by -w
            FanCone c;
            QVec shift = to_q(scale(phi(d, w), lev.t()));
            for (const auto& v : cls.vertices) c.face.push_back(add(v, shift));
            c.face_dim = cls.dim;
            for (const auto& v : centers) c.centers.push_back(sub(v, w));
            c.cone = is_zero(w) ? base : translate_cone(base, w);
            fan.cones.push_back(std::move(c));
        }
    }
    return fan;
}

bool is_face_of(const RationalCone& f, const RationalCone& c, const PolyOptions& opt) {
    std::vector<QVec> gens = f.rays;
    gens.insert(gens.end(), f.lineality.begin(), f.lineality.end());
    for (const auto& l : f.lineality) gens.push_back(scale(l, Q(-1)));
    for (const auto& x : gens)
        if (!c.contains(x)) return false;
    std::vector<QVec> eqs = c.equations;
    for (const auto& n : c.facets) {
        bool tight = std::all_of(gens.begin(), gens.end(), [&](const QVec& x) { return dot(n, x) == 0; });
        if (tight) eqs.push_back(n);
    }
    return cone_from_inequalities(c.ambient, c.facets, eqs, opt) == f;
}

namespace {

// Some integer a with a*m0 + s*m_i in the dual of c, if any.
std::optional<Int> lift_coefficient(const RationalCone& c, int i, int s) {
    std::optional<Q> lo, hi;
    auto lower = [&](const Q& q) { if (!lo || q > *lo) lo = q; };
    auto upper = [&](const Q& q) { if (!hi || q < *hi) hi = q; };
    // a r0 + s r_i >= 0 for every ray, == 0 on the lineality
    auto constrain = [&](const QVec& r, bool equality) {
        Q ri = r[i + 1] * s;
        if (r[0] == 0) return equality ? ri == 0 : ri >= 0;
        Q bound = -ri / r[0];
        if (equality || r[0] > 0) lower(bound);
        if (equality || r[0] < 0) upper(bound);
        return true;
    };
    for (const auto& l : c.lineality)
        if (!constrain(l, true)) return std::nullopt;
    for (const auto& r : c.rays)
        if (!constrain(r, false)) return std::nullopt;
    Int a = lo ? ceil_q(*lo) : (hi ? floor_q(*hi) : 0);
    if (hi && Q(static_cast<long>(a)) > *hi) return std::nullopt;
    return a;
}

}  // namespace

FanReport check_cones_over_S(const std::vector<RationalCone>& cones) {
    FanReport rep;
    for (size_t k = 0; k < cones.size(); ++k) {
        const auto& c = cones[k];
        int n = c.ambient;
        std::string tag = "cone " + std::to_string(k);
        bool i_ok = std::all_of(c.rays.begin(), c.rays.end(), [](const QVec& r) { return r[0] >= 0; }) &&
                    std::all_of(c.lineality.begin(), c.lineality.end(),
                                [](const QVec& l) { return l[0] == 0; });
        if (!i_ok) {
            rep.m0_in_dual = false;
            rep.failures.push_back(tag + ": m0 not in dual");
        }
        QVec e0(n, Q(0));
        e0[0] = 1;
        std::vector<QVec> eqs = c.equations;
        eqs.push_back(e0);
        RationalCone slice = cone_from_inequalities(n, c.facets, eqs);
        bool ii = slice.rays.empty() && slice.lineality.empty();
        if (!ii) {
            rep.trivial_on_xdual = false;
            rep.failures.push_back(tag + ": meets X^vee");
        }
        bool iii = true;
        IMat gens{IVec(n, 0)};
        gens[0][0] = 1;
        for (int i = 0; i + 1 < n && iii; ++i)
            for (int s : {1, -1}) {
                auto a = lift_coefficient(c, i, s);
                if (!a) {
                    iii = false;
                    break;
                }
                IVec v(n, 0);
                v[0] = *a;
                v[i + 1] = s;
                gens.push_back(v);
            }
        if (iii) {
            auto sm = smith(gens);
            iii = static_cast<int>(sm.factors.size()) == n &&
                  std::all_of(sm.factors.begin(), sm.factors.end(), [](Int f) { return f == 1; });
        }
        if (!iii) {
            rep.generates = false;
            rep.failures.push_back(tag + ": Z m0 + dual semigroup is not X~");
        }
        if (ii != iii) {
            rep.cone_criterion = false;
            rep.failures.push_back(tag + ": clauses (ii) and (iii) disagree");
        }
    }
    return rep;
}

FanReport check_fan_over_S(const SFan& fan, int window, const PolyOptions& opt) {
    std::vector<RationalCone> cones;
    for (const auto& c : fan.cones) cones.push_back(c.cone);
    FanReport rep = check_cones_over_S(cones);
    if (window <= 0) return rep;
    auto maxi = fan.maximal();
    auto shifts = lattice_window(fan.translations, window);
    for (size_t i = 0; i < maxi.size(); ++i)
        for (size_t j = 0; j < maxi.size(); ++j)
            for (const auto& w : shifts) {
                if (i == j && is_zero(w)) continue;
                RationalCone other = translate_cone(maxi[j]->cone, w);
                RationalCone meet = cone_intersect(maxi[i]->cone, other, opt);
                if (!is_face_of(meet, maxi[i]->cone, opt) || !is_face_of(meet, other, opt)) {
                    rep.common_faces = false;
                    rep.failures.push_back("cones " + std::to_string(i) + "," + std::to_string(j) +
                                           " shift " + to_string(w) + " do not meet in a face");
                }
            }
    return rep;
}

RationalPolytope cut(const RationalCone& c, const PolyOptions& opt) {
    int g = c.ambient - 1;
    if (c.rays.empty() && c.lineality.empty()) {
        RationalPolytope e;
        e.ambient = g;
        return e;
    }
    if (!c.lineality.empty()) throw Error("Unbounded", "Cut of a cone with lineality");
    std::vector<QVec> pts;
    for (const auto& r : c.rays) {
        if (r[0] <= 0) throw Error("Unbounded", "ray with non-positive f0 coordinate");
        QVec p(r.begin() + 1, r.end());
        pts.push_back(scale(p, Q(1) / r[0]));
    }
    return hull(pts, opt);
}

namespace {

std::vector<QVec> cut_key(const RationalPolytope& p) {
    std::vector<QVec> k;
    for (const auto& v : p.vertices) k.push_back(sub(v, p.vertices.front()));
    return k;
}

}  // namespace

CutBijectionReport cut_bijection_report(const FCDatum& d, const Level& lev, const PolyOptions& opt) {
    CutBijectionReport rep;
    int g = d.g;
    FaceComplex fc = vor_complex(d, lev, opt);
    RationalPolytope cell = voronoi_polytope(d, lev, opt);
    auto cell_at = [&](const IVec& c) {
        return translate(cell, to_q(scale(phi(d, c), lev.t())));
    };
    std::set<std::vector<QVec>> keys;
    std::vector<RationalPolytope> cuts;
    for (size_t k = 0; k < fc.classes.size(); ++k) {
        const auto& cls = fc.classes[k];
        std::string tag = "class " + std::to_string(k);
        RationalCone tau = tau_cone(d, lev, cls.vertices, opt);
        RationalPolytope ct = cut(tau, opt);
        auto centers = face_centers(d, lev, cls.vertices);
        std::vector<QVec> cq;
        for (const auto& v : centers) cq.push_back(to_q(v));
        std::sort(cq.begin(), cq.end());
        if (ct.vertices != cq) {
            rep.vertices_are_centers = false;
            rep.failures.push_back(tag + ": Cut vertices differ from cell centers");
        }
        RationalPolytope back;
        bool started = false;
        for (const auto& v : ct.vertices) {
            RationalPolytope piece = cell_at(neg(to_int(v)));
            back = started ? intersect(back, piece, opt) : piece;
            started = true;
        }
        if (!(back == hull(cls.vertices, opt))) {
            rep.recovers_face = false;
            rep.failures.push_back(tag + ": intersection of cells is not the face");
        }
        rep.dim_pairs.push_back({ct.dim, cls.dim});
        if (ct.dim + cls.dim != g) {
            rep.dimensions = false;
            rep.failures.push_back(tag + ": dimensions do not add to g");
        }
        if (!keys.insert(cut_key(ct)).second) {
            rep.injective = false;
            rep.failures.push_back(tag + ": Cut class repeated");
        }
        cuts.push_back(ct);
    }
    for (size_t k = 0; k < cuts.size(); ++k) {
        if (cuts[k].dim != g) continue;
        for (const auto& f : faces(cuts[k])) {
            std::vector<QVec> vs;
            for (int i : f.vertices) vs.push_back(cuts[k].vertices[i]);
            if (!keys.count(cut_key(hull(vs, opt)))) {
                rep.surjective = false;
                rep.failures.push_back("face of Cut " + std::to_string(k) + " has no source");
            }
        }
    }
    // inclusion reversal on the faces of the central cell
    auto fl = faces(cell);
    std::vector<std::set<int>> fset;
    std::vector<std::set<IVec>> cset;
    for (const auto& f : fl) {
        fset.push_back({f.vertices.begin(), f.vertices.end()});
        std::vector<QVec> vs;
        for (int i : f.vertices) vs.push_back(cell.vertices[i]);
        auto cs = face_centers(d, lev, vs);
        cset.push_back({cs.begin(), cs.end()});
    }
    for (size_t i = 0; i < fl.size(); ++i)
        for (size_t j = 0; j < fl.size(); ++j) {
            bool sub_face = std::includes(fset[j].begin(), fset[j].end(), fset[i].begin(), fset[i].end());
            bool sup_cut = std::includes(cset[i].begin(), cset[i].end(), cset[j].begin(), cset[j].end());
            if (sub_face != sup_cut) {
                rep.inclusion_reversing = false;
                rep.failures.push_back("faces " + std::to_string(i) + "," + std::to_string(j) +
                                       " break inclusion reversal");
            }
        }
    // X^vee_R is covered by translates of the maximal Cuts: grid of step 1/2 in [-1,1]^g
    std::vector<const RationalPolytope*> maxcuts;
    for (const auto& c : cuts)
        if (c.dim == g) maxcuts.push_back(&c);
    IVec k(g, -2);
    while (true) {
        QVec q(g);
        for (int i = 0; i < g; ++i) q[i] = Q(static_cast<long>(k[i])) / 2;
        bool covered = false;
        for (const auto* c : maxcuts) {
            IVec lo(g), hi(g);
            for (int i = 0; i < g; ++i) {
                Q mn = c->vertices[0][i], mx = mn;
                for (const auto& v : c->vertices) {
                    mn = std::min(mn, v[i]);
                    mx = std::max(mx, v[i]);
                }
                lo[i] = floor_q(mn - q[i]);
                hi[i] = ceil_q(mx - q[i]);
            }
            IVec w = lo;
            while (!covered) {
                if (c->contains(add(q, to_q(w)))) covered = true;
                int i = 0;
                while (i < g && ++w[i] > hi[i]) {
                    w[i] = lo[i];
                    ++i;
                }
                if (i == g) break;
            }
            if (covered) break;
        }
        if (!covered) {
            rep.covers_xdual = false;
            rep.failures.push_back("point " + to_string(q) + " not covered by Cut cells");
        }
        int i = 0;
        while (i < g && ++k[i] > 2) k[i++] = -2;
        if (i == g) break;
    }
    return rep;
}

RationalPolytope sigma_star(const FCDatum& d, const Level& lev, const PolyOptions& opt) {
    auto integ = is_integral(d, lev, opt);
    if (!integ.integral) throw Error("NotIntegral", "Voronoi polytope is not integral");
    RationalPolytope cell = voronoi_polytope(d, lev, opt);
    std::set<IVec> centers;
    for (const auto& p : cell.vertices)
        for (const auto& z : closest_centers(d, lev, p)) centers.insert(z);
    return hull(std::vector<IVec>(centers.begin(), centers.end()), opt);
}

bool separation_membership(const FCDatum& d, const Level& lev, const QVec& point, Int n,
                           const PolyOptions& opt) {
    if (n < 1) throw Error("BadInput", "n must be positive");
    return scale(sigma_star(d, lev, opt), Q(static_cast<long>(n))).contains(point);
}

MumfordFan mumford_fan(const FCDatum& d, const PolyOptions& opt) {
    if (!d.principal()) throw Error("NotPrincipal", "Mumford fan needs Y = X");
    if (d.g > 3) throw Error("DimensionCap", "Mumford fan is limited to rank 3");
    int g = d.g;
    QVec c = d.a_lin ? *d.a_lin : QVec(g, Q(0));
    QVec zero(g, Q(0));
    MumfordFan mf;
    Q r = 2;
    while (true) {
        std::vector<Ineq> ineqs;
        enumerate_ellipsoid(d.b, zero, r, [&](const IVec& beta) {
            QVec bq = to_q(beta);
            if (is_zero(beta) || b_form(d, bq, bq) > r) return;
            Q a = b_form(d, bq, bq) / 2 + dot(c, bq);
            QVec n = primitive(bq);
            size_t j = 0;
            while (bq[j] == 0) ++j;
            ineqs.push_back({n, a * n[j] / bq[j]});
        });
        std::optional<RationalPolytope> p;
        try {
            p = from_inequalities(g, ineqs, {}, opt);
        } catch (const Error& e) {
            if (e.kind() != "Unbounded") throw;
        }
        if (p && !p->empty()) {
            Q worst = 0;
            for (const auto& x : p->vertices) {
                QVec y = add(x, c);
                worst = std::max(worst, dot(y, mat_vec(d.b_inv, y)));
            }
            if (4 * worst <= r) {
                mf.cut0 = *p;
                mf.enumeration_radius = r;
                break;
            }
        }
        r *= 2;
    }
    mf.fan.g = g;
    mf.fan.translations = d.beta_y;
    for (const auto& f : faces(mf.cut0)) {
        FanCone fcone;
        std::vector<QVec> gens;
        for (int i : f.vertices) {
            fcone.face.push_back(mf.cut0.vertices[i]);
            gens.push_back(tilde(1, mf.cut0.vertices[i]));
        }
        fcone.face_dim = f.dim;
        fcone.cone = cone_from_generators(g + 1, gens, {}, opt);
        mf.fan.cones.push_back(std::move(fcone));
    }
    // vertex classes mod beta(X)
    QMat kinv = *inverse(to_q(d.beta_y));
    std::set<QVec> cls;
    for (const auto& v : mf.cut0.vertices) {
        QVec z = mat_vec(kinv, v);
        for (auto& x : z) x -= Q(static_cast<long>(floor_q(x)));
        cls.insert(mat_vec(to_q(d.beta_y), z));
    }
    mf.vertex_classes.assign(cls.begin(), cls.end());
    mf.components = static_cast<Int>(cls.size());
    mf.report = check_fan_over_S(mf.fan, 1, opt);
    return mf;
}

}  // namespace nfc
