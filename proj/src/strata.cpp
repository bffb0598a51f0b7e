#include "nfc/strata.hpp"

#include <sstream>

namespace nfc {

std::string ComponentGroup::name() const {
    std::ostringstream os;
    bool first = true;
    for (Int f : factors) {
        if (f == 1) continue;
        os << (first ? "" : " x ") << "Z/" << f;
        first = false;
    }
    return first ? "0" : os.str();
}

ComponentGroup component_group(const FCDatum& d) {
    ComponentGroup cg;
    auto sm = smith(d.beta_y);
    cg.factors = sm.factors;
    for (Int f : cg.factors) cg.order *= f;
    return cg;
}

namespace {

std::vector<Int> face_counts(const RationalPolytope& p) {
    std::vector<Int> c(p.dim + 1, 0);
    for (const auto& f : faces(p)) c[f.dim]++;
    return c;
}

void fill_complement(StrataReport& rep, int g) {
    rep.complement_orbits = 0;
    rep.max_complement_dim = -1;
    for (int k = 0; k < g && k < static_cast<int>(rep.orbit_counts.size()); ++k)
        if (rep.orbit_counts[k] > 0) {
            rep.complement_orbits += rep.orbit_counts[k];
            rep.max_complement_dim = k;
        }
    rep.codimension_note = "all complement orbits have fiber-dimension <= " + std::to_string(g - 1) +
                           ", hence total codimension >= 2 (combinatorial shadow)";
    rep.euler = 0;
    for (size_t k = 0; k < rep.orbit_counts.size(); ++k)
        rep.euler += (k % 2 ? -1 : 1) * rep.orbit_counts[k];
}

}  // namespace

StrataReport stratification(const FCDatum& d, const Level& lev, const PolyOptions& opt) {
    FaceComplex fc = vor_complex(d, lev, opt);
    StrataReport rep;
    rep.source = "voronoi";
    rep.orbit_counts = fc.counts_quotient;
    rep.group = component_group(d);
    RationalPolytope cell = voronoi_polytope(d, lev, opt);
    auto counts = face_counts(cell);
    for (const auto& c : dual_quotient_reps(d)) {
        ComponentInfo ci;
        ci.label = to_q(c);
        ci.cell = translate(cell, to_q(scale(phi(d, c), lev.t())));
        ci.face_counts = counts;
        rep.components.push_back(std::move(ci));
    }
    fill_complement(rep, d.g);
    return rep;
}

StrataReport delaunay_stratification(const FCDatum& d, const PolyOptions& opt) {
    FaceComplex fc = delaunay_complex(d, opt);
    StrataReport rep;
    rep.source = "delaunay";
    rep.orbit_counts = fc.counts_quotient;
    rep.group = component_group(d);
    for (const auto& c : fc.classes) {
        if (c.dim != d.g) continue;
        ComponentInfo ci;
        ci.label = c.label;
        ci.cell = hull(c.vertices, opt);
        ci.face_counts = face_counts(ci.cell);
        rep.components.push_back(std::move(ci));
    }
    fill_complement(rep, d.g);
    return rep;
}

std::vector<PolygonInfo> component_polygon_report(const StrataReport& rep) {
    std::vector<PolygonInfo> out;
    for (const auto& c : rep.components) {
        if (c.cell.ambient != 2) throw Error("WrongRank", "polygon report needs g = 2");
        PolygonInfo p;
        p.label = c.label;
        p.vertices = static_cast<Int>(c.cell.vertices.size());
        p.annotation = "toric surface with " + std::to_string(p.vertices) + " boundary curves";
        out.push_back(p);
    }
    return out;
}

}  // namespace nfc
