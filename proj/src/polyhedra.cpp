#include "nfc/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nfc {

namespace {

using Bits = std::vector<bool>;

void check_cap(int dim, const PolyOptions& opt) {
    if (dim > opt.dimension_cap)
        throw Error("DimensionCap", "dimension " + std::to_string(dim) + " exceeds cap " +
                                        std::to_string(opt.dimension_cap));
}

struct WorkRay {
    QVec v;
    Bits zero;  // processed rows on which v is tight
};

// Canonical representative of a vector modulo the span of an rref basis.
QVec reduce_mod(const QVec& v, const std::vector<QVec>& rref_rows, const std::vector<int>& piv) {
    QVec r = v;
    for (size_t i = 0; i < rref_rows.size(); ++i) {
        Q f = r[piv[i]];
        if (f == 0) continue;
        for (size_t j = 0; j < r.size(); ++j) r[j] -= f * rref_rows[i][j];
    }
    return r;
}

}  // namespace

DDResult dd_cone(const std::vector<QVec>& rows, int dim) {
    std::vector<QVec> lin;
    for (int i = 0; i < dim; ++i) {
        QVec e(dim, Q(0));
        e[i] = 1;
        lin.push_back(e);
    }
    std::vector<WorkRay> rays;
    size_t nrows = rows.size();
    for (size_t k = 0; k < nrows; ++k) {
        const QVec& a = rows[k];
        int pick = -1;
        for (size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) {
                pick = static_cast<int>(i);
                break;
            }
        if (pick >= 0) {
            QVec ls = lin[pick];
            Q al = dot(a, ls);
            if (al < 0) {
                ls = scale(ls, Q(-1));
                al = -al;
            }
            std::vector<QVec> nlin;
            for (size_t i = 0; i < lin.size(); ++i) {
                if (static_cast<int>(i) == pick) continue;
                Q f = dot(a, lin[i]) / al;
                nlin.push_back(f == 0 ? lin[i] : sub(lin[i], scale(ls, f)));
            }
            for (auto& r : rays) {
                Q f = dot(a, r.v) / al;
                if (f != 0) r.v = primitive(sub(r.v, scale(ls, f)));
                r.zero.push_back(true);
            }
            WorkRay nr{primitive(ls), Bits(k, true)};
            nr.zero.push_back(false);
            rays.push_back(nr);
            lin = nlin;
            continue;
        }
        std::vector<size_t> pos, neg, zer;
        std::vector<Q> val(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            if (val[i] > 0)
                pos.push_back(i);
            else if (val[i] < 0)
                neg.push_back(i);
            else
                zer.push_back(i);
        }
        std::vector<WorkRay> next;
        if (!neg.empty()) {
            int need = dim - static_cast<int>(lin.size()) - 2;
            for (size_t pi : pos)
                for (size_t ni : neg) {
                    const Bits& zp = rays[pi].zero;
                    const Bits& zn = rays[ni].zero;
                    Bits z(k);
                    int cnt = 0;
                    for (size_t j = 0; j < k; ++j) {
                        z[j] = zp[j] && zn[j];
                        cnt += z[j];
                    }
                    if (cnt < need) continue;
                    bool adj = true;
                    for (size_t o = 0; o < rays.size() && adj; ++o) {
                        if (o == pi || o == ni) continue;
                        const Bits& zo = rays[o].zero;
                        bool sup = true;
                        for (size_t j = 0; j < k; ++j)
                            if (z[j] && !zo[j]) {
                                sup = false;
                                break;
                            }
                        if (sup) adj = false;
                    }
                    if (!adj) continue;
                    QVec nv = sub(scale(rays[ni].v, val[pi]), scale(rays[pi].v, val[ni]));
                    z.push_back(true);
                    next.push_back({primitive(nv), z});
                }
        }
        for (size_t i : pos) {
            rays[i].zero.push_back(false);
            next.push_back(rays[i]);
        }
        for (size_t i : zer) {
            rays[i].zero.push_back(true);
            next.push_back(rays[i]);
        }
        rays = std::move(next);
    }
    DDResult res;
    std::vector<int> piv;
    if (!lin.empty()) {
        QMat m = lin;
        piv = rref(m);
        for (auto& r : m) res.lineality.push_back(primitive(r));
        // keep an exact rref copy for reduction
        std::vector<QVec> rr = m;
        std::set<QVec> seen;
        for (auto& r : rays) {
            QVec v = primitive(reduce_mod(r.v, rr, piv));
            if (!is_zero(v)) seen.insert(v);
        }
        res.rays.assign(seen.begin(), seen.end());
    } else {
        std::set<QVec> seen;
        for (auto& r : rays) seen.insert(r.v);
        res.rays.assign(seen.begin(), seen.end());
    }
    std::sort(res.lineality.begin(), res.lineality.end());
    return res;
}

int affine_dim(const std::vector<QVec>& pts) {
    if (pts.empty()) return -1;
    QMat m;
    for (size_t i = 1; i < pts.size(); ++i) m.push_back(sub(pts[i], pts[0]));
    return m.empty() ? 0 : rank(m);
}

// ---- polytopes ----

bool RationalPolytope::contains(const QVec& x) const {
    if (empty()) return false;
    for (const auto& e : equations)
        if (dot(e.normal, x) + e.offset != 0) return false;
    for (const auto& f : facets)
        if (dot(f.normal, x) + f.offset < 0) return false;
    return true;
}

bool RationalPolytope::interior_contains(const QVec& x) const {
    if (empty()) return false;
    for (const auto& e : equations)
        if (dot(e.normal, x) + e.offset != 0) return false;
    for (const auto& f : facets)
        if (dot(f.normal, x) + f.offset <= 0) return false;
    return true;
}

namespace {

Ineq make_ineq(const QVec& hom) {
    // hom = (c, n): scale so that n is primitive integer
    QVec n(hom.begin() + 1, hom.end());
    Ineq r;
    if (is_zero(n)) {
        r.normal = n;
        r.offset = hom[0];
        return r;
    }
    QVec pn = primitive(n);
    // ratio pn / n
    size_t j = 0;
    while (n[j] == 0) ++j;
    Q f = pn[j] / n[j];
    r.normal = pn;
    r.offset = hom[0] * f;
    return r;
}

}  // namespace

RationalPolytope hull(const std::vector<QVec>& points_in, const PolyOptions& opt) {
    if (points_in.empty()) throw Error("EmptyInput", "hull of no points");
    int d = static_cast<int>(points_in[0].size());
    check_cap(d, opt);
    std::set<QVec> uniq(points_in.begin(), points_in.end());
    std::vector<QVec> pts(uniq.begin(), uniq.end());
    std::vector<QVec> rows;
    for (const auto& p : pts) {
        QVec r{Q(1)};
        r.insert(r.end(), p.begin(), p.end());
        rows.push_back(r);
    }
    DDResult dd = dd_cone(rows, d + 1);
    RationalPolytope P;
    P.ambient = d;
    for (const auto& l : dd.lineality) {
        Ineq e = make_ineq(l);
        // orient equations canonically: first nonzero of normal positive
        size_t j = 0;
        while (j < e.normal.size() && e.normal[j] == 0) ++j;
        if (j < e.normal.size() && e.normal[j] < 0) {
            e.normal = scale(e.normal, Q(-1));
            e.offset = -e.offset;
        }
        if (!is_zero(e.normal)) P.equations.push_back(e);
    }
    for (const auto& r : dd.rays) {
        Ineq f = make_ineq(r);
        if (is_zero(f.normal)) continue;  // 1 >= 0
        P.facets.push_back(f);
    }
    std::sort(P.facets.begin(), P.facets.end());
    std::sort(P.equations.begin(), P.equations.end());
    P.dim = d - static_cast<int>(P.equations.size());
    // vertices: points whose tight constraints have full rank
    for (const auto& p : pts) {
        QMat tight;
        for (const auto& e : P.equations) tight.push_back(e.normal);
        for (const auto& f : P.facets)
            if (dot(f.normal, p) + f.offset == 0) tight.push_back(f.normal);
        if (rank(tight) == d) P.vertices.push_back(p);
    }
    return P;
}

RationalPolytope hull(const std::vector<IVec>& points, const PolyOptions& opt) {
    std::vector<QVec> q;
    for (const auto& p : points) q.push_back(to_q(p));
    return hull(q, opt);
}

RationalPolytope from_inequalities(int ambient, const std::vector<Ineq>& ineqs,
                                   const std::vector<Ineq>& eqs, const PolyOptions& opt) {
    check_cap(ambient, opt);
    if (ambient > 6 && !opt.allow_high_dim_vertices)
        throw Error("DimensionCap", "vertex enumeration above dimension 6 needs opt-in");
    std::vector<QVec> rows;
    auto push = [&](const Ineq& f, bool negate) {
        QVec r{negate ? Q(-f.offset) : f.offset};
        for (const auto& x : f.normal) r.push_back(negate ? Q(-x) : x);
        rows.push_back(r);
    };
    {
        QVec r(ambient + 1, Q(0));
        r[0] = 1;
        rows.push_back(r);
    }
    for (const auto& e : eqs) {
        push(e, false);
        push(e, true);
    }
    for (const auto& f : ineqs) push(f, false);
    DDResult dd = dd_cone(rows, ambient + 1);
    std::vector<QVec> verts;
    for (const auto& r : dd.rays) {
        if (r[0] == 0) throw Error("Unbounded", "inequalities do not define a bounded polytope");
        QVec v(r.begin() + 1, r.end());
        verts.push_back(scale(v, 1 / r[0]));
    }
    if (!dd.lineality.empty() && !verts.empty())
        throw Error("Unbounded", "inequalities contain a line");
    if (verts.empty()) {
        RationalPolytope P;
        P.ambient = ambient;
        return P;
    }
    return hull(verts, opt);
}

std::vector<Face> faces(const RationalPolytope& p) {
    std::vector<Face> out;
    if (p.empty()) return out;
    std::vector<int> all(p.vertices.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<std::vector<int>> fsets;
    for (const auto& f : p.facets) {
        std::vector<int> s;
        for (size_t i = 0; i < p.vertices.size(); ++i)
            if (dot(f.normal, p.vertices[i]) + f.offset == 0) s.push_back(static_cast<int>(i));
        fsets.push_back(s);
    }
    std::set<std::vector<int>> seen{all};
    std::vector<std::vector<int>> queue{all};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto cur = queue[qi];
        for (const auto& fs : fsets) {
            std::vector<int> x;
            std::set_intersection(cur.begin(), cur.end(), fs.begin(), fs.end(),
                                  std::back_inserter(x));
            if (x.empty() || x == cur) continue;
            if (seen.insert(x).second) queue.push_back(x);
        }
    }
    for (const auto& s : seen) {
        std::vector<QVec> pts;
        for (int i : s) pts.push_back(p.vertices[i]);
        out.push_back({s, affine_dim(pts)});
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
    });
    return out;
}

RationalPolytope minkowski(const RationalPolytope& p, const RationalPolytope& q,
                           const PolyOptions& opt) {
    std::vector<QVec> pts;
    for (const auto& a : p.vertices)
        for (const auto& b : q.vertices) pts.push_back(add(a, b));
    return hull(pts, opt);
}

RationalPolytope scale(const RationalPolytope& p, const Q& s) {
    if (s <= 0) throw Error("BadInput", "scale factor must be positive");
    RationalPolytope r = p;
    for (auto& v : r.vertices) v = scale(v, s);
    for (auto& f : r.facets) f.offset *= s;
    for (auto& e : r.equations) e.offset *= s;
    return r;
}

RationalPolytope translate(const RationalPolytope& p, const QVec& t) {
    RationalPolytope r = p;
    for (auto& v : r.vertices) v = add(v, t);
    std::sort(r.vertices.begin(), r.vertices.end());
    for (auto& f : r.facets) f.offset -= dot(f.normal, t);
    for (auto& e : r.equations) e.offset -= dot(e.normal, t);
    std::sort(r.facets.begin(), r.facets.end());
    std::sort(r.equations.begin(), r.equations.end());
    return r;
}

RationalPolytope intersect(const RationalPolytope& p, const RationalPolytope& q,
                           const PolyOptions& opt) {
    if (p.empty() || q.empty()) {
        RationalPolytope r;
        r.ambient = p.ambient;
        return r;
    }
    std::vector<Ineq> ineqs = p.facets, eqs = p.equations;
    ineqs.insert(ineqs.end(), q.facets.begin(), q.facets.end());
    eqs.insert(eqs.end(), q.equations.begin(), q.equations.end());
    return from_inequalities(p.ambient, ineqs, eqs, opt);
}

std::vector<IVec> lattice_points(const RationalPolytope& p) {
    std::vector<IVec> out;
    if (p.empty()) return out;
    int d = p.ambient;
    IVec lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        Q mn = p.vertices[0][i], mx = p.vertices[0][i];
        for (const auto& v : p.vertices) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        lo[i] = ceil_q(mn);
        hi[i] = floor_q(mx);
        if (lo[i] > hi[i]) return out;
    }
    IVec x = lo;
    while (true) {
        if (p.contains(to_q(x))) out.push_back(x);
        int i = 0;
        while (i < d) {
            if (++x[i] <= hi[i]) break;
            x[i] = lo[i];
            ++i;
        }
        if (i == d) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- cones ----

bool RationalCone::contains(const QVec& x) const {
    for (const auto& e : equations)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets)
        if (dot(f, x) < 0) return false;
    return true;
}

namespace {

RationalCone assemble(int ambient, const DDResult& vrep, const DDResult& hrep) {
    RationalCone c;
    c.ambient = ambient;
    c.rays = vrep.rays;
    c.lineality = vrep.lineality;
    c.facets = hrep.rays;
    c.equations = hrep.lineality;
    return c;
}

std::vector<QVec> with_negatives(const std::vector<QVec>& gens, const std::vector<QVec>& lin) {
    std::vector<QVec> rows = gens;
    for (const auto& l : lin) {
        rows.push_back(l);
        rows.push_back(scale(l, Q(-1)));
    }
    return rows;
}

}  // namespace

RationalCone cone_from_generators(int ambient, const std::vector<QVec>& gens,
                                  const std::vector<QVec>& lin, const PolyOptions& opt) {
    check_cap(ambient, opt);
    // H-rep: the dual cone {n : n.g >= 0} has extreme rays = facets, lineality = equations
    DDResult h = dd_cone(with_negatives(gens, lin), ambient);
    DDResult v = dd_cone(with_negatives(h.rays, h.lineality), ambient);
    return assemble(ambient, v, h);
}

RationalCone cone_from_inequalities(int ambient, const std::vector<QVec>& ineqs,
                                    const std::vector<QVec>& eqs, const PolyOptions& opt) {
    check_cap(ambient, opt);
    DDResult v = dd_cone(with_negatives(ineqs, eqs), ambient);
    DDResult h = dd_cone(with_negatives(v.rays, v.lineality), ambient);
    return assemble(ambient, v, h);
}

RationalCone cone_dual(const RationalCone& c, const PolyOptions& opt) {
    return cone_from_generators(c.ambient, c.facets, c.equations, opt);
}

RationalCone cone_intersect(const RationalCone& a, const RationalCone& b, const PolyOptions& opt) {
    std::vector<QVec> ineqs = a.facets, eqs = a.equations;
    ineqs.insert(ineqs.end(), b.facets.begin(), b.facets.end());
    eqs.insert(eqs.end(), b.equations.begin(), b.equations.end());
    return cone_from_inequalities(a.ambient, ineqs, eqs, opt);
}

}  // namespace nfc
