#include "nfc/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace nfc {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& msg) {
    throw Error("BadInput", "field '" + field + "': " + msg);
}

Q json_rational(const Json& v, const std::string& field) {
    if (v.is_number_integer()) return qi(v.get<Int>());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::exception& e) {
            bad(field, e.what());
        }
    }
    bad(field, "expected an integer or a \"p/q\" string");
}

Int json_int(const Json& v, const std::string& field) {
    Q q = json_rational(v, field);
    if (q.get_den() != 1) bad(field, "expected an integer");
    return q.get_num().get_si();
}

}  // namespace

FCDatum parse_datum(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error("BadInput", std::string("malformed JSON at byte ") + std::to_string(e.byte));
    }
    if (!j.is_object()) bad("<root>", "expected an object");
    if (!j.contains("rank")) bad("rank", "missing");
    if (!j["rank"].is_number_integer()) bad("rank", "expected an integer");
    int g = j["rank"].get<int>();
    if (g < 1) bad("rank", "must be positive");

    IMat y = identity_i(g);
    if (j.contains("y_basis")) {
        const Json& jy = j["y_basis"];
        if (!jy.is_array() || static_cast<int>(jy.size()) != g) bad("y_basis", "expected g rows");
        for (int r = 0; r < g; ++r) {
            if (!jy[r].is_array() || static_cast<int>(jy[r].size()) != g)
                bad("y_basis[" + std::to_string(r) + "]", "expected g entries");
            for (int c = 0; c < g; ++c)
                y[r][c] = json_int(jy[r][c], "y_basis[" + std::to_string(r) + "][" + std::to_string(c) + "]");
        }
    }
    if (!j.contains("b")) bad("b", "missing");
    const Json& jb = j["b"];
    if (!jb.is_array() || static_cast<int>(jb.size()) != g) bad("b", "expected g rows");
    QMat b(g, QVec(g));
    for (int r = 0; r < g; ++r) {
        if (!jb[r].is_array() || static_cast<int>(jb[r].size()) != g)
            bad("b[" + std::to_string(r) + "]", "expected g entries");
        for (int c = 0; c < g; ++c)
            b[r][c] = json_rational(jb[r][c], "b[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    std::optional<QVec> a;
    if (j.contains("a") && !j["a"].is_null()) {
        const Json& ja = j["a"];
        if (!ja.is_array() || static_cast<int>(ja.size()) != g) bad("a", "expected g entries");
        QVec av(g);
        for (int c = 0; c < g; ++c) av[c] = json_rational(ja[c], "a[" + std::to_string(c) + "]");
        a = av;
    }
    try {
        return validate_datum(g, y, b, a);
    } catch (const Error& e) {
        throw Error("BadInput", e.what());
    }
}

FCDatum load_datum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("BadInput", "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_datum(ss.str());
}

Json q_json(const Q& q) { return to_string(q); }

Json vec_json(const QVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

Json vec_json(const IVec& v) {
    Json a = Json::array();
    for (Int x : v) a.push_back(x);
    return a;
}

static Json rows_json(const std::vector<QVec>& rows) {
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(vec_json(r));
    return a;
}

Json datum_json(const FCDatum& d) {
    Json j;
    j["rank"] = d.g;
    Json y = Json::array();
    for (const auto& r : d.y_basis) y.push_back(vec_json(r));
    j["y_basis"] = y;
    j["b"] = rows_json(d.b);
    if (d.a_lin) j["a"] = vec_json(*d.a_lin);
    j["n"] = d.n;
    return j;
}

Json polytope_json(const RationalPolytope& p) {
    Json j;
    j["ambient"] = p.ambient;
    j["dim"] = p.dim;
    j["vertices"] = rows_json(p.vertices);
    Json f = Json::array();
    for (const auto& in : p.facets) f.push_back({{"normal", vec_json(in.normal)}, {"offset", q_json(in.offset)}});
    j["facets"] = f;
    Json e = Json::array();
    for (const auto& in : p.equations) e.push_back({{"normal", vec_json(in.normal)}, {"offset", q_json(in.offset)}});
    j["equations"] = e;
    return j;
}

Json cone_json(const RationalCone& c) {
    Json j;
    j["dim"] = c.dim();
    j["rays"] = rows_json(c.rays);
    j["lineality"] = rows_json(c.lineality);
    j["facets"] = rows_json(c.facets);
    j["equations"] = rows_json(c.equations);
    return j;
}

Json complex_json(const FaceComplex& fc) {
    Json j;
    j["schema"] = kSchema;
    j["g"] = fc.g;
    Json tr = Json::array();
    for (const auto& r : fc.translation) tr.push_back(vec_json(r));
    j["translation"] = tr;
    j["quotient"] = fc.quotient_name;
    j["quotient_multiplier"] = fc.quotient_multiplier;
    j["counts_mod_translation"] = fc.counts_mod_translation;
    j["counts_quotient"] = fc.counts_quotient;
    j["euler"] = fc.euler();
    Json cells = Json::array();
    for (size_t i = 0; i < fc.classes.size(); ++i) {
        const auto& c = fc.classes[i];
        Json cj;
        cj["dim"] = c.dim;
        cj["vertices"] = rows_json(c.vertices);
        if (!c.label.empty()) cj["label"] = vec_json(c.label);
        if (i < fc.boundary.size()) {
            Json bd = Json::array();
            for (const auto& [k, off] : fc.boundary[i]) bd.push_back({{"face", k}, {"offset", vec_json(off)}});
            cj["boundary"] = bd;
        }
        cells.push_back(cj);
    }
    j["faces"] = cells;
    return j;
}

Json integrality_json(const IntegralityReport& r) {
    Json j;
    j["integral"] = r.integral;
    j["method"] = r.method;
    if (!r.clause.empty()) j["failed_clause"] = r.clause;
    if (!r.witness.empty()) j["witness"] = vec_json(r.witness);
    if (!r.vertex_representatives.empty()) j["vertex_representatives"] = rows_json(r.vertex_representatives);
    return j;
}

Json fan_json(const SFan& f) {
    Json j;
    j["schema"] = kSchema;
    j["g"] = f.g;
    j["level"] = f.lev.ell;
    j["half"] = f.lev.half;
    Json tr = Json::array();
    for (const auto& r : f.translations) tr.push_back(vec_json(r));
    j["translations"] = tr;
    Json cs = Json::array();
    for (const auto& c : f.cones) {
        Json cj = cone_json(c.cone);
        cj["face"] = rows_json(c.face);
        cj["face_dim"] = c.face_dim;
        Json ce = Json::array();
        for (const auto& v : c.centers) ce.push_back(vec_json(v));
        cj["centers"] = ce;
        cs.push_back(cj);
    }
    j["cones"] = cs;
    j["maximal"] = f.maximal().size();
    return j;
}

Json chart_json(const MonomialChart& c) {
    Json j;
    j["face"] = rows_json(c.face);
    j["face_dim"] = c.face_dim;
    j["u"] = vec_json(c.u);
    j["torus"] = c.torus;
    j["unimodular"] = c.unimodular;
    j["tau"] = cone_json(c.tau);
    j["lineality"] = rows_json(c.basis.lineality);
    j["hilbert_basis"] = rows_json(c.basis.elements);
    j["grading"] = vec_json(c.basis.grading);
    j["vanishing"] = c.vanishing;
    Json rel = Json::array();
    for (const auto& r : c.relations)
        rel.push_back({{"i", r.i}, {"j", r.j}, {"product", r.survives ? "survives" : "zero"}});
    j["fiber_relations"] = rel;
    j["fiber_presentation"] = fiber_relations_string(c);
    return j;
}

Json group_json(const ComponentGroup& g) {
    Json j;
    j["factors"] = g.factors;
    j["order"] = g.order;
    j["name"] = g.name();
    return j;
}

Json strata_json(const StrataReport& r) {
    Json j;
    j["schema"] = kSchema;
    j["source"] = r.source;
    j["orbit_counts"] = r.orbit_counts;
    j["component_group"] = group_json(r.group);
    Json cs = Json::array();
    for (const auto& c : r.components) {
        Json cj;
        cj["label"] = vec_json(c.label);
        cj["face_counts"] = c.face_counts;
        cj["vertices"] = c.cell.vertices.size();
        cj["cell"] = polytope_json(c.cell);
        cs.push_back(cj);
    }
    j["components"] = cs;
    j["complement"] = {{"orbits", r.complement_orbits},
                       {"max_dim", r.max_complement_dim},
                       {"note", r.codimension_note}};
    j["euler"] = r.euler;
    return j;
}

int quotient_class(const FCDatum& d, const IVec& v) {
    auto reps = dual_quotient_reps(d);
    auto kinv = *inverse(to_q(d.beta_y));
    for (size_t i = 0; i < reps.size(); ++i)
        if (is_integral(mat_vec(kinv, to_q(sub(v, reps[i]))))) return static_cast<int>(i);
    throw Error("Internal", "no quotient class for " + to_string(v));
}

std::string voronoi_svg(const FCDatum& d, const Level& lev, int window, const PolyOptions& opt) {
    if (d.g != 2) throw Error("WrongRank", "SVG output needs g = 2");
    // Square completion B(x,x) = d1 (x1 + c x2)^2 + d2 x2^2 with rational d1, c, d2.
    Q d1 = d.b[0][0];
    Q c = d.b[0][1] / d1;
    Q d2 = d.b[1][1] - d.b[0][1] * d.b[0][1] / d1;
    double s1 = std::sqrt(d1.get_d()), s2 = std::sqrt(d2.get_d());
    auto embed = [&](const QVec& x) {
        return std::pair<double, double>{s1 * Q(x[0] + c * x[1]).get_d(), s2 * x[1].get_d()};
    };
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                    "#ffff33", "#a65628", "#f781bf", "#999999"};
    RationalPolytope cell = voronoi_polytope(d, lev, opt);
    // order the hexagon-like polygon by angle in the embedding
    std::vector<QVec> vs = cell.vertices;
    std::sort(vs.begin(), vs.end(), [&](const QVec& a, const QVec& b) {
        auto [ax, ay] = embed(a);
        auto [bx, by] = embed(b);
        return std::atan2(ay, ax) < std::atan2(by, bx);
    });
    double extent = 0;
    struct Poly { std::vector<std::pair<double, double>> pts; int cls; IVec v; };
    std::vector<Poly> polys;
    for (Int i = -window; i <= window; ++i)
        for (Int k = -window; k <= window; ++k) {
            IVec v{i, k};
            QVec shift = to_q(scale(phi(d, v), lev.t()));
            Poly p;
            p.v = v;
            p.cls = quotient_class(d, v);
            for (const auto& x : vs) {
                auto pt = embed(add(x, shift));
                extent = std::max({extent, std::fabs(pt.first), std::fabs(pt.second)});
                p.pts.push_back(pt);
            }
            polys.push_back(p);
        }
    double size = 600, sc = size / (2 * extent + 1e-9);
    std::ostringstream os;
    os << std::fixed << std::setprecision(3);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    os << "<!-- Voronoi tiling, level " << lev.ell << (lev.half ? " (half)" : "") << ", "
       << dual_quotient_reps(d).size() << " classes mod beta(Y) -->\n";
    for (const auto& p : polys) {
        os << "<polygon class=\"c" << p.cls << "\" fill=\"" << palette[p.cls % 9]
           << "\" fill-opacity=\"0.5\" stroke=\"black\" stroke-width=\"1\" points=\"";
        for (size_t i = 0; i < p.pts.size(); ++i)
            os << (i ? " " : "") << size / 2 + sc * p.pts[i].first << "," << size / 2 - sc * p.pts[i].second;
        os << "\"><title>center " << to_string(p.v) << "</title></polygon>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace nfc
