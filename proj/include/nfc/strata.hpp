#pragma once

#include "nfc/voronoi.hpp"

#include <string>
#include <vector>

namespace nfc {

struct ComponentGroup {
    IVec factors;  // all invariant factors, 1s included
    Int order = 1;
    std::string name() const;  // "Z/3", "Z/2 x Z/4", "0"
};
ComponentGroup component_group(const FCDatum& d);

struct ComponentInfo {
    QVec label;               // center class c in X^vee (Voronoi) or hole (Delaunay)
    RationalPolytope cell;
    std::vector<Int> face_counts;  // by dimension, the cell itself included
};

struct StrataReport {
    std::string source;               // "voronoi" or "delaunay"
    std::vector<Int> orbit_counts;    // by dimension, modulo the quotient lattice
    ComponentGroup group;
    std::vector<ComponentInfo> components;
    Int complement_orbits = 0;        // orbits of dimension < g
    int max_complement_dim = -1;
    std::string codimension_note;
    Int euler = 0;
};

// Throws NotIntegral.
StrataReport stratification(const FCDatum& d, const Level& lev, const PolyOptions& opt = {});
// Mumford side: maximal Delaunay cells mod X.
StrataReport delaunay_stratification(const FCDatum& d, const PolyOptions& opt = {});

struct PolygonInfo {
    QVec label;
    Int vertices = 0;
    std::string annotation;
};
// g = 2 only (WrongRank otherwise).
std::vector<PolygonInfo> component_polygon_report(const StrataReport& rep);

}  // namespace nfc
