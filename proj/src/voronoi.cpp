#include "nfc/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace nfc {

namespace {

// The visitor returns the (possibly lowered) radius to use from then on.
void enumerate_shrinking(const QMat& gram, const QVec& center, const Q& r,
                         const std::function<Q(const IVec&)>& visit) {
    int n = static_cast<int>(gram.size());
    // G = U^T D U, U unit upper triangular
    QMat u(n, QVec(n, Q(0)));
    QVec dg(n);
    for (int i = 0; i < n; ++i) {
        Q s = gram[i][i];
        for (int k = 0; k < i; ++k) s -= dg[k] * u[k][i] * u[k][i];
        dg[i] = s;
        if (s <= 0) throw Error("NotPositiveDefinite", "enumeration form is not definite");
        u[i][i] = 1;
        for (int j = i + 1; j < n; ++j) {
            Q t = gram[i][j];
            for (int k = 0; k < i; ++k) t -= dg[k] * u[k][i] * u[k][j];
            u[i][j] = t / dg[i];
        }
    }
    std::vector<long double> D(n), C(n);
    std::vector<std::vector<long double>> U(n, std::vector<long double>(n));
    for (int i = 0; i < n; ++i) {
        D[i] = dg[i].get_d();
        C[i] = center[i].get_d();
        for (int j = 0; j < n; ++j) U[i][j] = u[i][j].get_d();
    }
    auto slack = [](long double v) { return v * (1 + 1e-9L) + 1e-9L; };
    long double R = slack(r.get_d());
    IVec z(n, 0);
    std::vector<long double> partial(n + 1, 0.0L);
    std::function<void(int)> rec = [&](int i) {
        if (i < 0) {
            R = std::min(R, slack(visit(z).get_d()));
            return;
        }
        long double s = 0;
        for (int j = i + 1; j < n; ++j) s += U[i][j] * (static_cast<long double>(z[j]) - C[j]);
        long double rem = R - partial[i + 1];
        if (rem < 0) return;
        long double w = std::sqrt(rem / D[i]) + 1e-9L;
        long double mid = C[i] - s;
        Int lo = static_cast<Int>(std::ceil(mid - w)), hi = static_cast<Int>(std::floor(mid + w));
        for (Int v = lo; v <= hi; ++v) {
            z[i] = v;
            long double y = static_cast<long double>(v) - C[i] + s;
            partial[i] = partial[i + 1] + D[i] * y * y;
            rec(i - 1);
        }
        z[i] = 0;
    };
    rec(n - 1);
}

}  // namespace

void enumerate_ellipsoid(const QMat& gram, const QVec& center, const Q& r,
                         const std::function<void(const IVec&)>& visit) {
    enumerate_shrinking(gram, center, r, [&](const IVec& z) {
        visit(z);
        return r;
    });
}

Int phi_norm(const FCDatum& d, const IVec& u) { return dot(u, phi(d, u)); }

namespace {

Q frac(Int a, Int b) {
    Q q(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b)));
    q.canonicalize();
    return q;
}

Int qform(const IMat& g, const IVec& u) { return dot(u, mat_vec(g, u)); }

// Relevant vectors of Z^g under an integral positive definite Gram matrix.
std::vector<IVec> coset_relevant(const IMat& gram) {
    int g = static_cast<int>(gram.size());
    QMat g4 = to_q(gram);
    for (auto& row : g4)
        for (auto& x : row) x *= 4;
    std::vector<IVec> out;
    for (Int mask = 1; mask < (Int(1) << g); ++mask) {
        IVec c(g);
        QVec cen(g);
        for (int i = 0; i < g; ++i) {
            c[i] = (mask >> i) & 1;
            cen[i] = frac(-c[i], 2);
        }
        Int r = 2;
        while (true) {
            std::vector<IVec> found;
            Int best = -1;
            // Q(c + 2w) = 4 (w + c/2)^T G (w + c/2)
            enumerate_ellipsoid(g4, cen, Q(static_cast<long>(r)), [&](const IVec& w) {
                IVec uu(g);
                for (int i = 0; i < g; ++i) uu[i] = c[i] + 2 * w[i];
                Int v = qform(gram, uu);
                if (v > r) return;
                if (best < 0 || v < best) {
                    best = v;
                    found.clear();
                }
                if (v == best) found.push_back(uu);
            });
            if (best < 0) {
                r *= 2;
                continue;
            }
            if (found.size() == 2) {
                for (auto& f : found) out.push_back(f);
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_sigma(const FCDatum& d, const Level& lev, const std::vector<IVec>& rel, const QVec& x) {
    for (const auto& u : rel)
        if (Q(static_cast<long>(e_level(d, lev, u))) + dot(to_q(u), x) < 0) return false;
    return true;
}

// Points of Sigma_l of small B-norm until they generate X (or the bound is reached).
bool sigma_contains_basis(const FCDatum& d, const Level& lev, const std::vector<IVec>& rel,
                          const Q& norm_bound) {
    int g = d.g;
    Q r = d.b[0][0];
    for (int i = 1; i < g; ++i) r = std::min(r, d.b[i][i]);
    QVec zero(g, Q(0));
    while (true) {
        IMat pts;
        enumerate_ellipsoid(d.b, zero, r, [&](const IVec& x) {
            QVec xq = to_q(x);
            if (b_form(d, xq, xq) > r || is_zero(x)) return;
            if (in_sigma(d, lev, rel, xq)) pts.push_back(x);
        });
        if (static_cast<int>(pts.size()) >= g) {
            auto s = smith(pts);
            if (static_cast<int>(s.factors.size()) == g &&
                std::all_of(s.factors.begin(), s.factors.end(), [](Int f) { return f == 1; }))
                return true;
        }
        if (r >= norm_bound) return false;
        r = std::min(norm_bound, Q(r * 2));
    }
}

Int lcm_den(const std::vector<QVec>& vs) {
    mpz_class l = 1;
    for (const auto& v : vs)
        for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    return l.get_si();
}

bool use_root_route(const FCDatum& d, const PolyOptions& opt) {
    return d.g > 6 && !opt.allow_high_dim_vertices;
}

}  // namespace

std::vector<IVec> relevant_vectors(const FCDatum& d, const Level& lev, const PolyOptions& opt) {
    d.check_level(lev);
    if (d.g > opt.dimension_cap)
        throw Error("DimensionCap", "rank " + std::to_string(d.g) + " exceeds cap");
    return coset_relevant(d.phi_mat);
}

std::vector<IVec> relevant_vectors_bruteforce(const FCDatum& d, int radius) {
    // u is relevant iff the half-space E(u)+u(x) >= 0 is a facet of the box intersection
    int g = d.g;
    Level lev{1, false};
    std::vector<IVec> us;
    IVec u(g, -radius);
    while (true) {
        if (!is_zero(u)) us.push_back(u);
        int i = 0;
        while (i < g && ++u[i] > radius) u[i++] = -radius;
        if (i == g) break;
    }
    std::vector<Ineq> ineqs;
    for (const auto& v : us) ineqs.push_back({to_q(v), Q(static_cast<long>(e_level(d, lev, v)))});
    RationalPolytope p = from_inequalities(g, ineqs);
    std::vector<IVec> out;
    for (const auto& f : p.facets) {
        // relevant vectors are primitive, so the facet normal is the vector itself when the
        // offset matches E(normal)
        IVec n = to_int(f.normal);
        if (Q(static_cast<long>(e_level(d, lev, n))) == f.offset) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Ineq> voronoi_inequalities(const FCDatum& d, const Level& lev,
                                       const std::vector<IVec>& relevant) {
    std::vector<Ineq> out;
    for (const auto& u : relevant) out.push_back({to_q(u), Q(static_cast<long>(e_level(d, lev, u)))});
    return out;
}

RationalPolytope voronoi_polytope(const FCDatum& d, const Level& lev, const PolyOptions& opt) {
    auto rel = relevant_vectors(d, lev, opt);
    return from_inequalities(d.g, voronoi_inequalities(d, lev, rel), {}, opt);
}

RootSystemData root_system_vertices(const FCDatum& d, const Level& lev,
                                    const std::vector<IVec>& relevant) {
    RootSystemData rs;
    int g = d.g;
    if (relevant.empty()) {
        rs.reason = "no relevant vectors";
        return rs;
    }
    Int q0 = phi_norm(d, relevant[0]);
    for (const auto& u : relevant)
        if (phi_norm(d, u) != q0) {
            rs.reason = "relevant vectors have different norms";
            return rs;
        }
    std::set<IVec> all(relevant.begin(), relevant.end());
    auto lex_pos = [](const IVec& v) {
        for (Int x : v)
            if (x != 0) return x > 0;
        return false;
    };
    std::vector<IVec> pos;
    for (const auto& u : relevant)
        if (lex_pos(u)) pos.push_back(u);
    std::set<IVec> posset(pos.begin(), pos.end());
    for (const auto& r : pos) {
        bool decomposable = false;
        for (const auto& p : pos)
            if (p != r && posset.count(sub(r, p))) {
                decomposable = true;
                break;
            }
        if (!decomposable) rs.simple_roots.push_back(r);
    }
    if (static_cast<int>(rs.simple_roots.size()) != g) {
        rs.reason = "simple system does not have rank many roots";
        return rs;
    }
    QMat s = to_q(rs.simple_roots);  // rows
    auto sinv_t = inverse(transpose(s));
    if (!sinv_t) {
        rs.reason = "simple roots are dependent";
        return rs;
    }
    // coefficients c with sum c_k s_k = r  <=>  S^T c = r
    IVec best;
    Int best_h = -1;
    int ties = 0;
    for (const auto& r : pos) {
        QVec c = mat_vec(*sinv_t, to_q(r));
        if (!is_integral(c)) {
            rs.reason = "root not an integral combination of simple roots";
            return rs;
        }
        IVec ci = to_int(c);
        Int h = std::accumulate(ci.begin(), ci.end(), Int(0));
        if (h > best_h) {
            best_h = h;
            best = ci;
            ties = 1;
        } else if (h == best_h) {
            ++ties;
        }
    }
    if (ties != 1) {
        rs.reason = "highest root is not unique (reducible system)";
        return rs;
    }
    rs.highest_root_coefficients = best;
    // weights: u_k(omega_i) = t q0 / 2 delta_ik
    auto sinv = inverse(s);
    Q half_tq = frac(lev.t() * q0, 2);
    auto rel_ineq = voronoi_inequalities(d, lev, relevant);
    for (int i = 0; i < g; ++i) {
        QVec e(g, Q(0));
        e[i] = half_tq / Q(static_cast<long>(best[i]));
        QVec x = mat_vec(*sinv, e);
        rs.candidates.push_back(x);
        bool feasible = true;
        QMat tight;
        for (const auto& f : rel_ineq) {
            Q v = dot(f.normal, x) + f.offset;
            if (v < 0) feasible = false;
            if (v == 0) tight.push_back(f.normal);
        }
        rs.is_vertex.push_back(feasible && rank(tight) == g);
    }
    rs.reflections_preserve_x = true;
    for (const auto& uk : rs.simple_roots) {
        IVec pk = phi(d, uk);
        for (int j = 0; j < g && rs.reflections_preserve_x; ++j) {
            Q coef = frac(2 * uk[j], q0);
            for (int i = 0; i < g; ++i)
                if (Q(coef * Q(static_cast<long>(pk[i]))).get_den() != 1) {
                    rs.reflections_preserve_x = false;
                    break;
                }
        }
    }
    if (!rs.reflections_preserve_x) {
        rs.reason = "reflections do not preserve X";
        return rs;
    }
    rs.applies = true;
    return rs;
}

namespace {

Q covering_norm(const FCDatum& d, const std::vector<QVec>& verts) {
    Q m = 0;
    for (const auto& v : verts) m = std::max(m, b_form(d, v, v));
    return m;
}

}  // namespace

std::vector<IVec> sigma_points(const FCDatum& d, const Level& lev, const PolyOptions& opt) {
    auto rel = relevant_vectors(d, lev, opt);
    if (!use_root_route(d, opt)) {
        RationalPolytope p = from_inequalities(d.g, voronoi_inequalities(d, lev, rel), {}, opt);
        return lattice_points(p);
    }
    auto rs = root_system_vertices(d, lev, rel);
    if (!rs.applies) throw Error("DimensionCap", "vertex enumeration above dimension 6 needs opt-in");
    std::vector<QVec> reps;
    for (size_t i = 0; i < rs.candidates.size(); ++i)
        if (rs.is_vertex[i]) reps.push_back(rs.candidates[i]);
    Q bound = covering_norm(d, reps);
    std::vector<IVec> out;
    enumerate_ellipsoid(d.b, QVec(d.g, Q(0)), bound, [&](const IVec& x) {
        QVec xq = to_q(x);
        if (b_form(d, xq, xq) <= bound && in_sigma(d, lev, rel, xq)) out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
}

IntegralityReport is_integral(const FCDatum& d, const Level& lev, const PolyOptions& opt) {
    IntegralityReport rep;
    auto rel = relevant_vectors(d, lev, opt);
    std::set<IVec> rs(rel.begin(), rel.end());
    for (const auto& u : rel)
        if (!rs.count(neg(u))) {
            rep.clause = "symmetry";
            return rep;
        }
    std::vector<QVec> verts;
    if (!use_root_route(d, opt)) {
        rep.method = "vertex-enumeration";
        RationalPolytope p = from_inequalities(d.g, voronoi_inequalities(d, lev, rel), {}, opt);
        verts = p.vertices;
        if (!p.interior_contains(QVec(d.g, Q(0)))) {
            rep.clause = "symmetry";
            return rep;
        }
    } else {
        rep.method = "root-system";
        auto root = root_system_vertices(d, lev, rel);
        if (!root.applies)
            throw Error("DimensionCap",
                        "vertex enumeration above dimension 6 needs opt-in (" + root.reason + ")");
        for (size_t i = 0; i < root.candidates.size(); ++i)
            if (root.is_vertex[i]) verts.push_back(root.candidates[i]);
        rep.vertex_representatives = verts;
    }
    for (const auto& v : verts)
        if (!is_integral(v)) {
            rep.clause = "vertex";
            rep.witness = v;
            return rep;
        }
    if (!sigma_contains_basis(d, lev, rel, covering_norm(d, verts))) {
        rep.clause = "basis";
        return rep;
    }
    rep.integral = true;
    return rep;
}

MinimalLevel minimal_level(const FCDatum& d, Int cap, bool half, const PolyOptions& opt) {
    if (cap < 1) throw Error("BadInput", "cap must be positive");
    Level unit{1, half};
    auto rel = relevant_vectors(d, unit, opt);
    MinimalLevel ml;
    std::vector<QVec> verts;
    if (!use_root_route(d, opt)) {
        ml.method = "vertex-enumeration";
        verts = from_inequalities(d.g, voronoi_inequalities(d, unit, rel), {}, opt).vertices;
    } else {
        ml.method = "root-system";
        auto root = root_system_vertices(d, unit, rel);
        if (!root.applies)
            throw Error("DimensionCap",
                        "vertex enumeration above dimension 6 needs opt-in (" + root.reason + ")");
        for (size_t i = 0; i < root.candidates.size(); ++i)
            if (root.is_vertex[i]) verts.push_back(root.candidates[i]);
    }
    ml.denominator_lcm = lcm_den(verts);
    for (Int ell = ml.denominator_lcm; ell <= cap; ell += ml.denominator_lcm) {
        if (is_integral(d, Level{ell, half}, opt).integral) {
            ml.ell0 = ell;
            return ml;
        }
    }
    throw Error("NotFoundBelowCap", "no integral level up to " + std::to_string(cap));
}

std::vector<IVec> closest_centers(const FCDatum& d, const Level& lev, const QVec& p) {
    int g = d.g;
    Int t = lev.t();
    QMat gram = to_q(d.phi_mat);
    Q f = Q(static_cast<long>(t * t * d.n));
    for (auto& row : gram)
        for (auto& x : row) x *= f;
    QVec c = scale(mat_vec(d.b, p), Q(1) / Q(static_cast<long>(t * d.n)));
    auto value = [&](const IVec& z) {
        QVec y = sub(to_q(z), c);
        return dot(y, mat_vec(gram, y));
    };
    IVec z0(g);
    for (int i = 0; i < g; ++i) z0[i] = round_q(c[i]);
    Q best = value(z0);
    std::vector<IVec> out;
    enumerate_shrinking(gram, c, best, [&](const IVec& z) {
        Q v = value(z);
        if (v < best) {
            best = v;
            out.clear();
        }
        if (v == best) out.push_back(z);
        return best;
    });
    std::sort(out.begin(), out.end());
    return out;
}

Decomposition cvp_decompose(const FCDatum& d, const Level& lev, const IVec& x) {
    auto zs = closest_centers(d, lev, to_q(x));
    Decomposition r;
    r.z = zs.front();
    r.gamma = sub(x, scale(phi(d, r.z), lev.t()));
    return r;
}

Int d_value(const FCDatum& d, const Level& lev, const IVec& x) {
    auto dec = cvp_decompose(d, lev, x);
    Int v = e_level(d, lev, dec.z) + pair(dec.z, dec.gamma);
    Q check = c_value(d, lev, to_q(x)) - c_value(d, lev, to_q(dec.gamma));
    if (check != Q(static_cast<long>(v)))
        throw Error("NonIntegralValuation", "D disagrees with C difference at " + to_string(x));
    return v;
}

Int FaceComplex::euler() const {
    Int e = 0;
    for (size_t k = 0; k < counts_quotient.size(); ++k) e += (k % 2 ? -1 : 1) * counts_quotient[k];
    return e;
}

namespace {

QVec barycenter(const std::vector<QVec>& vs) {
    QVec b(vs[0].size(), Q(0));
    for (const auto& v : vs) b = add(b, v);
    return scale(b, Q(1) / Q(static_cast<long>(vs.size())));
}

// Translate a vertex set by a lattice vector chosen from the barycenter; returns
// (canonical vertex list, shift applied).
std::pair<std::vector<QVec>, IVec> canonical_translate(const std::vector<QVec>& vs,
                                                       const QMat& to_coords,
                                                       const IMat& basis_cols) {
    QVec b = barycenter(vs);
    QVec z = mat_vec(to_coords, b);
    IVec zf(z.size());
    for (size_t i = 0; i < z.size(); ++i) zf[i] = floor_q(z[i]);
    IVec shift = mat_vec(basis_cols, zf);
    std::vector<QVec> out;
    for (const auto& v : vs) out.push_back(sub(v, to_q(shift)));
    std::sort(out.begin(), out.end());
    return {out, shift};
}

FaceComplex build_complex(const std::vector<std::vector<QVec>>& all_faces,
                          const std::vector<int>& dims, const IMat& basis_cols, int g,
                          Int multiplier) {
    FaceComplex fc;
    fc.g = g;
    fc.translation = basis_cols;
    fc.quotient_multiplier = multiplier;
    QMat to_coords = *inverse(to_q(basis_cols));
    std::map<std::vector<QVec>, int> index;
    std::vector<IVec> rep_shift;
    std::vector<int> face_class(all_faces.size());
    std::vector<IVec> face_shift(all_faces.size());
    for (size_t i = 0; i < all_faces.size(); ++i) {
        auto [key, shift] = canonical_translate(all_faces[i], to_coords, basis_cols);
        face_shift[i] = shift;
        auto it = index.find(key);
        if (it == index.end()) {
            int id = static_cast<int>(fc.classes.size());
            index[key] = id;
            fc.classes.push_back({all_faces[i], dims[i], {}});
            rep_shift.push_back(shift);
            face_class[i] = id;
        } else {
            face_class[i] = it->second;
        }
    }
    fc.counts_mod_translation.assign(g + 1, 0);
    for (const auto& c : fc.classes) fc.counts_mod_translation[c.dim]++;
    fc.counts_quotient = fc.counts_mod_translation;
    for (auto& x : fc.counts_quotient) x *= multiplier;
    // boundary relations among representatives
    fc.boundary.resize(fc.classes.size());
    for (size_t ci = 0; ci < fc.classes.size(); ++ci) {
        const auto& rep = fc.classes[ci];
        std::set<QVec> rv(rep.vertices.begin(), rep.vertices.end());
        for (size_t i = 0; i < all_faces.size(); ++i) {
            if (dims[i] != rep.dim - 1) continue;
            bool sub_face = std::all_of(all_faces[i].begin(), all_faces[i].end(),
                                        [&](const QVec& v) { return rv.count(v) > 0; });
            if (!sub_face) continue;
            // all_faces[i] = rep_j + (face_shift[i] - rep_shift[j])
            int j = face_class[i];
            fc.boundary[ci].push_back({j, sub(face_shift[i], rep_shift[j])});
        }
        std::sort(fc.boundary[ci].begin(), fc.boundary[ci].end());
        fc.boundary[ci].erase(std::unique(fc.boundary[ci].begin(), fc.boundary[ci].end()),
                              fc.boundary[ci].end());
    }
    return fc;
}

}  // namespace

FaceComplex vor_complex(const FCDatum& d, const Level& lev, const PolyOptions& opt) {
    auto integ = is_integral(d, lev, opt);
    if (!integ.integral) throw Error("NotIntegral", "Voronoi polytope is not integral (" + integ.clause + ")");
    RationalPolytope p = voronoi_polytope(d, lev, opt);
    auto fl = faces(p);
    std::vector<std::vector<QVec>> all;
    std::vector<int> dims;
    for (const auto& f : fl) {
        std::vector<QVec> vs;
        for (int i : f.vertices) vs.push_back(p.vertices[i]);
        all.push_back(vs);
        dims.push_back(f.dim);
    }
    IMat basis = d.phi_mat;
    for (auto& row : basis)
        for (auto& x : row) x *= lev.t();
    FaceComplex fc = build_complex(all, dims, basis, d.g, d.n);
    fc.quotient_name = "tNY";
    for (auto& c : fc.classes)
        if (c.dim == d.g) c.label = QVec(d.g, Q(0));
    return fc;
}

RationalPolytope lattice_voronoi_cell(const FCDatum& d, const PolyOptions& opt) {
    int g = d.g;
    if (g > opt.dimension_cap) throw Error("DimensionCap", "rank exceeds cap");
    mpz_class l = 1;
    for (const auto& row : d.b)
        for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    IMat gram(g, IVec(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) gram[i][j] = Q(d.b[i][j] * l).get_num().get_si();
    auto rel = coset_relevant(gram);
    std::vector<Ineq> ineqs;
    for (const auto& r : rel) {
        QVec rq = to_q(r);
        // B(r,r) - 2 B(r,x) >= 0
        QVec n = scale(mat_vec(d.b, rq), Q(-2));
        QVec hom{b_form(d, rq, rq)};
        hom.insert(hom.end(), n.begin(), n.end());
        QVec prim = primitive(n);
        size_t j = 0;
        while (n[j] == 0) ++j;
        Q f = prim[j] / n[j];
        ineqs.push_back({prim, hom[0] * f});
    }
    return from_inequalities(g, ineqs, {}, opt);
}

FaceComplex delaunay_complex(const FCDatum& d, const PolyOptions& opt) {
    int g = d.g;
    RationalPolytope v = lattice_voronoi_cell(d, opt);
    // holes mod X
    std::map<QVec, QVec> holes;
    for (const auto& p : v.vertices) {
        QVec fr(g);
        for (int i = 0; i < g; ++i) fr[i] = p[i] - Q(static_cast<long>(floor_q(p[i])));
        holes.emplace(fr, p);
    }
    std::vector<std::vector<QVec>> all;
    std::vector<int> dims;
    std::vector<QVec> hole_of_cell;
    for (const auto& [key, p] : holes) {
        Q r = b_form(d, p, p);
        std::vector<IVec> pts;
        enumerate_ellipsoid(d.b, p, r, [&](const IVec& x) {
            QVec y = sub(to_q(x), p);
            if (b_form(d, y, y) == r) pts.push_back(x);
        });
        RationalPolytope cell = hull(pts, opt);
        for (const auto& f : faces(cell)) {
            std::vector<QVec> vs;
            for (int i : f.vertices) vs.push_back(cell.vertices[i]);
            all.push_back(vs);
            dims.push_back(f.dim);
        }
        hole_of_cell.push_back(p);
    }
    FaceComplex fc = build_complex(all, dims, identity_i(g), g, 1);
    fc.quotient_name = "X";
    // attach hole labels to maximal cells
    for (auto& c : fc.classes) {
        if (c.dim != g) continue;
        for (const auto& p : hole_of_cell) {
            QVec y = sub(c.vertices[0], p);
            if (b_form(d, y, y) == b_form(d, p, p)) {
                bool all_eq = true;
                for (const auto& w : c.vertices) {
                    QVec yw = sub(w, p);
                    if (b_form(d, yw, yw) != b_form(d, p, p)) all_eq = false;
                }
                if (all_eq) {
                    c.label = p;
                    break;
                }
            }
        }
    }
    return fc;
}

}  // namespace nfc
