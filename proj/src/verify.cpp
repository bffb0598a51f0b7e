#include "nfc/verify.hpp"

#include "nfc/charts.hpp"
#include "nfc/monomial.hpp"
#include "nfc/rng.hpp"
#include "nfc/strata.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace nfc {

int VerifyReport::total_cases() const {
    int n = 0;
    for (const auto& s : suites) n += s.cases;
    return n;
}

int VerifyReport::total_failures() const {
    int n = 0;
    for (const auto& s : suites) n += s.failures;
    return n;
}

std::string VerifyReport::text() const {
    std::ostringstream os;
    os << "verify seed=" << seed << "\n";
    for (const auto& l : data) os << "datum " << l << "\n";
    for (const auto& s : suites) {
        os << (s.failures ? "FAIL " : "ok   ") << s.name << " cases=" << s.cases
           << " failures=" << s.failures << "\n";
        for (const auto& n : s.notes) os << "     " << n << "\n";
    }
    os << "total cases=" << total_cases() << " failures=" << total_failures() << "\n";
    return os.str();
}

std::vector<RandomDatum> random_data(std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<RandomDatum> out;
    int attempt = 0;
    while (static_cast<int>(out.size()) < count) {
        ++attempt;
        int g = 1 + static_cast<int>(out.size()) % 3;
        // B = L^T L + diag, L unit lower triangular with entries in {-1,0,1}
        IMat l = identity_i(g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < i; ++j) l[i][j] = rng.uniform(-1, 1);
        IMat b = mat_mul(transpose(l), l);
        for (int i = 0; i < g; ++i) b[i][i] += rng.uniform(0, 1);
        IMat y = identity_i(g);
        if (rng.uniform(0, 3) == 0) y[g - 1][g - 1] = 2;
        FCDatum d;
        try {
            d = validate_datum(g, y, to_q(b));
        } catch (const Error&) {
            continue;
        }
        if (d.n > 16) continue;
        try {
            auto ml = minimal_level(d, 4);
            std::ostringstream os;
            os << "g=" << g << " b=";
            for (const auto& r : b) os << to_string(r);
            os << " y=";
            for (const auto& r : y) os << to_string(r);
            os << " N=" << d.n << " l0=" << ml.ell0;
            Int ell = ml.ell0 * (1 + static_cast<Int>(out.size() / 3) % 2);
            os << " l=" << ell;
            out.push_back({d, Level{ell, false}, os.str()});
        } catch (const Error&) {
        }
        if (attempt > 1000) throw Error("Internal", "random datum generation stalled");
    }
    return out;
}

namespace {

using Check = std::function<std::string()>;  // empty string = pass

void run(SuiteResult& s, const Check& c) {
    ++s.cases;
    std::string err;
    try {
        err = c();
    } catch (const std::exception& e) {
        err = std::string("exception: ") + e.what();
    }
    if (!err.empty()) {
        ++s.failures;
        if (s.notes.size() < 5) s.notes.push_back(err);
    }
}

std::set<QVec> as_set(const std::vector<QVec>& v) { return {v.begin(), v.end()}; }

// Minimal face of the cell containing a point: vertices on every facet tight at p.
std::vector<QVec> carrier(const RationalPolytope& p, const QVec& x) {
    std::vector<QVec> out;
    for (const auto& v : p.vertices) {
        bool ok = true;
        for (const auto& f : p.facets)
            if (dot(f.normal, x) + f.offset == 0 && dot(f.normal, v) + f.offset != 0) ok = false;
        if (ok) out.push_back(v);
    }
    return out;
}

std::set<QVec> brute_irreducibles(const RationalCone& c, const QVec& psi, Int maxdeg, Int box) {
    int n = c.ambient;
    std::vector<QVec> pts;
    IVec x(n, -box);
    while (true) {
        QVec q = to_q(x);
        if (!is_zero(x) && c.contains(q) && dot(psi, q) <= qi(maxdeg)) pts.push_back(q);
        int i = 0;
        while (i < n && ++x[i] > box) x[i++] = -box;
        if (i == n) break;
    }
    std::set<QVec> sums;
    for (const auto& a : pts)
        for (const auto& b : pts) sums.insert(add(a, b));
    std::set<QVec> out;
    for (const auto& p : pts)
        if (!sums.count(p)) out.insert(p);
    return out;
}

std::string fmt(const std::string& tag, const std::string& what) { return tag + ": " + what; }

}  // namespace

VerifyReport run_verify(std::uint64_t seed) {
    VerifyReport rep;
    rep.seed = seed;
    auto data = random_data(seed, 12);
    for (const auto& r : data) rep.data.push_back(r.description);
    Rng rng(seed ^ 0x5eedULL);

    auto suite = [&](const std::string& name) -> SuiteResult& {
        rep.suites.push_back(SuiteResult{name, 0, 0, {}});
        return rep.suites.back();
    };

    {
        auto& s = suite("core: beta(phi(u)) = N u, symmetry, positivity");
        for (size_t k = 0; k < data.size(); ++k) {
            const auto& d = data[k].d;
            for (int i = 0; i < 6; ++i) {
                IVec u = rng.vec(d.g, -4, 4), v = rng.vec(d.g, -4, 4);
                run(s, [&]() -> std::string {
                    if (d.principal() && beta(d, phi(d, u)) != scale(u, d.n)) return fmt(std::to_string(k), "beta o phi");
                    if (pair(u, phi(d, v)) != pair(v, phi(d, u))) return fmt(std::to_string(k), "symmetry");
                    if (!is_zero(u) && pair(u, phi(d, u)) <= 0) return fmt(std::to_string(k), "positivity");
                    return "";
                });
            }
        }
    }
    {
        auto& s = suite("valuation identities (E, E(u+v), N u(x), E(beta(y)))");
        for (size_t k = 0; k < data.size(); ++k) {
            auto r = valuation_identities(data[k].d, 8, seed + k);
            for (const auto& row : r.rows) {
                s.cases += row.cases;
                s.failures += row.failures;
                if (row.failures && s.notes.size() < 5) s.notes.push_back(fmt(std::to_string(k), row.name));
            }
        }
    }
    {
        auto& s = suite("D >= 0 with zero set Sigma; covering by Sigma + t phi(X^vee)");
        for (size_t k = 0; k < data.size(); ++k) {
            const auto& [d, lev, desc] = data[k];
            auto cell = voronoi_polytope(d, lev);
            Int box = 3 * lev.t();
            for (int i = 0; i < 8; ++i) {
                IVec x = rng.vec(d.g, -box, box);
                run(s, [&]() -> std::string {
                    Int dv = d_value(d, lev, x);
                    if (dv < 0) return fmt(desc, "negative D at " + to_string(x));
                    if ((dv == 0) != cell.contains(to_q(x))) return fmt(desc, "zero set at " + to_string(x));
                    auto dec = cvp_decompose(d, lev, x);
                    if (add(dec.gamma, scale(phi(d, dec.z), lev.t())) != x) return fmt(desc, "decomposition");
                    if (!cell.contains(to_q(dec.gamma))) return fmt(desc, "gamma outside Sigma");
                    return "";
                });
            }
        }
    }
    {
        auto& s = suite("relevant vectors: coset method = brute-force facets");
        for (const auto& [d, lev, desc] : data)
            run(s, [&]() -> std::string {
                return relevant_vectors(d, lev) == relevant_vectors_bruteforce(d, 3) ? "" : desc;
            });
    }
    {
        auto& s = suite("polyhedra: V/H round trip and cone dual-dual");
        for (int i = 0; i < 12; ++i) {
            int n = 2 + i % 2;
            std::vector<QVec> pts;
            for (int k = 0; k < n + 3; ++k) pts.push_back(to_q(rng.vec(n, -3, 3)));
            run(s, [&]() -> std::string {
                auto p = hull(pts);
                if (from_inequalities(n, p.facets, p.equations) != p) return "polytope round trip";
                if (hull(p.vertices) != p) return "hull of vertices";
                auto c = cone_from_generators(n, pts);
                if (cone_dual(cone_dual(c)) != c) return "cone dual-dual";
                return "";
            });
        }
        for (const auto& [d, lev, desc] : data)
            run(s, [&]() -> std::string {
                auto p = voronoi_polytope(d, lev);
                return from_inequalities(d.g, p.facets, p.equations) == p ? "" : desc;
            });
    }
    {
        auto& s = suite("fan over S: clauses (i)-(iv) and the cone criterion equivalence");
        for (const auto& [d, lev, desc] : data)
            run(s, [&]() -> std::string {
                auto r = check_fan_over_S(build_fan(d, lev), d.g <= 2 ? 1 : 0);
                return r.ok() ? "" : fmt(desc, r.failures.empty() ? "clause" : r.failures[0]);
            });
    }
    {
        auto& s = suite("sigma = Cone(f0 + Cut(sigma))");
        for (const auto& [d, lev, desc] : data) {
            auto fan = build_fan(d, lev);
            for (const auto& c : fan.cones)
                run(s, [&]() -> std::string {
                    auto cu = cut(c.cone);
                    std::vector<QVec> gens;
                    for (const auto& v : cu.vertices) gens.push_back(tilde(1, v));
                    return cone_from_generators(d.g + 1, gens) == c.cone ? "" : desc;
                });
        }
    }
    {
        auto& s = suite("Cut bijection with faces and dimension complementarity");
        for (const auto& [d, lev, desc] : data)
            run(s, [&]() -> std::string {
                auto r = cut_bijection_report(d, lev);
                if (!r.ok()) return fmt(desc, r.failures.empty() ? "report" : r.failures[0]);
                for (auto [a, b] : r.dim_pairs)
                    if (a + b != d.g) return fmt(desc, "dimensions");
                return "";
            });
    }
    {
        auto& s = suite("tau_cone = tau_cone_from_charts; chart generators span tau dual");
        for (const auto& [d, lev, desc] : data) {
            auto cell = voronoi_polytope(d, lev);
            auto pts = sigma_points(d, lev);
            for (int i = 0; i < 3; ++i) {
                IVec a = pts[rng.uniform(0, static_cast<Int>(pts.size()) - 1)];
                IVec u = rng.vec(d.g, -2, 2);
                run(s, [&]() -> std::string {
                    auto face = carrier(cell, to_q(a));
                    auto tau = tau_cone(d, lev, face);
                    if (tau_cone_from_charts(d, lev, a, u) != translate_cone(tau, u)) return fmt(desc, "at " + to_string(a));
                    if (d.g <= 2) {
                        auto cg = chart_generators(d, lev, a, IVec(d.g, 0));
                        if (cone_from_generators(d.g + 1, cg.weights) != cone_dual(tau)) return fmt(desc, "generators at " + to_string(a));
                    }
                    return "";
                });
            }
        }
    }
    {
        auto& s = suite("local cones Cone(h(C_beta)) = facets of tau dual");
        for (const auto& [d, lev, desc] : data) {
            auto cell = voronoi_polytope(d, lev);
            for (const auto& v : cell.vertices) {
                if (!is_integral(v)) continue;
                run(s, [&]() -> std::string {
                    IVec a = to_int(v);
                    auto cc = chart_cone(d, lev, a, IVec(d.g, 0));
                    auto tau = tau_cone(d, lev, {v});
                    auto dual = cone_dual(tau);
                    if (cc.cone != dual) return fmt(desc, "chart cone");
                    std::set<std::vector<QVec>> want, got;
                    for (const auto& r : tau.rays) {
                        auto f = cone_from_inequalities(d.g + 1, dual.facets, [&] {
                            auto e = dual.equations;
                            e.push_back(r);
                            return e;
                        }());
                        want.insert(f.rays);
                    }
                    for (const auto& p : cc.pieces) got.insert(p.local.rays);
                    return want == got ? "" : fmt(desc, "at " + to_string(a));
                });
            }
        }
    }
    {
        auto& s = suite("scaling (l, l l'): cones and complexes");
        for (const auto& [d, lev, desc] : data) {
            if (d.g == 3) continue;
            run(s, [&]() -> std::string {
                auto r = scaling_check(d, lev, 2, 4);
                return r.ok() ? "" : fmt(desc, r.failures.empty() ? "report" : r.failures[0]);
            });
        }
    }
    {
        auto& s = suite("saturation idempotence and torus charts");
        for (const auto& [d, lev, desc] : data) {
            auto cell = voronoi_polytope(d, lev);
            run(s, [&]() -> std::string {
                auto t = chart_ring(d, lev, cell.vertices, IVec(d.g, 0));
                if (!t.torus || !t.unimodular) return fmt(desc, "torus chart");
                return "";
            });
            for (const auto& v : cell.vertices)
                run(s, [&]() -> std::string {
                    auto ch = chart_ring(d, lev, {v}, IVec(d.g, 0));
                    auto sat = cone_from_generators(d.g + 1, ch.basis.elements, ch.basis.lineality);
                    if (sat != ch.dual) return fmt(desc, "cone of basis");
                    auto again = hilbert_basis(sat);
                    if (as_set(again.elements) != as_set(ch.basis.elements)) return fmt(desc, "Sat(Sat)");
                    return "";
                });
        }
    }
    {
        auto& s = suite("Hilbert basis = brute-force irreducibles (dim <= 3)");
        for (int i = 0; i < 16; ++i) {
            int n = 2 + i % 2;
            std::vector<QVec> gens;
            for (int k = 0; k < n + 1; ++k) {
                IVec g = rng.vec(n, -2, 3);
                g[0] = rng.uniform(1, 3);  // keep the cone pointed
                gens.push_back(to_q(g));
            }
            run(s, [&]() -> std::string {
                auto c = cone_from_generators(n, gens);
                auto hb = hilbert_basis(c);
                Int maxdeg = 0;
                for (const auto& r : c.rays) maxdeg += dot(hb.grading, r).get_num().get_si();
                Int box = 0;
                for (const auto& r : c.rays)
                    for (const auto& x : r) box = std::max(box, Int(Q(abs(x)).get_num().get_si()));
                box *= static_cast<Int>(c.rays.size());
                return as_set(hb.elements) == brute_irreducibles(c, hb.grading, maxdeg, box) ? "" : "cone " + std::to_string(i);
            });
        }
    }
    {
        auto& s = suite("strata: components = |det beta|, Euler 0, complement dims < g");
        for (const auto& [d, lev, desc] : data)
            run(s, [&]() -> std::string {
                auto r = stratification(d, lev);
                if (static_cast<Int>(r.components.size()) != d.n || r.group.order != d.n) return fmt(desc, "components");
                if (r.euler != 0) return fmt(desc, "euler");
                if (r.max_complement_dim > d.g - 1) return fmt(desc, "complement");
                if (r.orbit_counts != vor_complex(d, lev).counts_quotient) return fmt(desc, "orbit counts");
                return "";
            });
    }
    {
        auto& s = suite("monomials: delta group law, unit equivalence, val = D");
        for (const auto& [d, lev, desc] : data) {
            auto pts = sigma_points(d, lev);
            for (int i = 0; i < 4; ++i) {
                IVec alpha = pts[rng.uniform(0, static_cast<Int>(pts.size()) - 1)];
                IVec u = rng.vec(d.g, -2, 2), v = rng.vec(d.g, -2, 2);
                run(s, [&]() -> std::string {
                    auto m = xi_monomial(d, lev, alpha, v);
                    if (delta_action(d, lev, u, delta_action(d, lev, v, identity_monomial(d.g) * m)) !=
                        delta_action(d, lev, add(u, v), m))
                        return fmt(desc, "group law");
                    if (delta_action(d, lev, u, m) != xi_monomial(d, lev, alpha, add(v, u))) return fmt(desc, "delta xi");
                    if (m.val != d_value(d, lev, m.exp)) return fmt(desc, "val = D");
                    return "";
                });
            }
        }
    }
    return rep;
}

}  // namespace nfc
