#pragma once

#include "nfc/voronoi.hpp"

#include <string>
#include <vector>

namespace nfc {

// x0 m0 + x in X~ (or u0 f0 + u in X~^vee). Stored as (x0, x_1..x_g).
struct TildeVector {
    Q x0;
    QVec x;

    QVec vec() const;
    static TildeVector from_vec(const QVec& v);
    bool operator==(const TildeVector& o) const { return x0 == o.x0 && x == o.x; }
};
Q tilde_pair(const TildeVector& a, const TildeVector& b);
QVec tilde(const Q& x0, const QVec& x);

struct FanCone {
    RationalCone cone;           // in X~^vee
    std::vector<QVec> face;      // vertices of the Voronoi face (or Cut vertices for Mumford)
    int face_dim = 0;
    std::vector<IVec> centers;   // {v : face in Sigma(-v)}
};

// Cones of Fan_l modulo the translations delta_{beta(y)}, one per face of Vor_l mod tNY.
// A face moved by t phi(w) has cone image under f0 -> f0 - w (see translate_cone).
struct SFan {
    int g = 0;
    Level lev;
    IMat translations;  // columns w: translate_cone(c, w) is again a cone of the fan
    std::vector<FanCone> cones;
    std::vector<const FanCone*> maximal() const;
};

RationalCone translate_cone(const RationalCone& c, const IVec& w);

// {v in X^vee : every vertex of the face lies in Sigma(-v)}
std::vector<IVec> face_centers(const FCDatum& d, const Level& lev, const std::vector<QVec>& face);

RationalCone tau_cone(const FCDatum& d, const Level& lev, const std::vector<QVec>& face,
                      const PolyOptions& opt = {});
RationalCone tau_cone_from_charts(const FCDatum& d, const Level& lev, const IVec& a, const IVec& u,
                                  const PolyOptions& opt = {});

// Pieces of the chart-side construction (exposed for the charts module and tests).
struct ChartPiece {
    IVec beta;          // point of Sigma_l^alpha
    IVec v;             // beta = alpha - t phi(v)
    RationalCone local; // Cone(h^beta(C^beta)) in X~
};
struct ChartCone {
    IVec alpha;  // a = alpha + t phi(w)
    IVec w;
    IVec u;      // effective shift u + w
    std::vector<ChartPiece> pieces;
    RationalCone cone;  // Cone(B) in X~
};
ChartCone chart_cone(const FCDatum& d, const Level& lev, const IVec& a, const IVec& u,
                     const PolyOptions& opt = {});

SFan build_fan(const FCDatum& d, const Level& lev, const PolyOptions& opt = {});

struct FanReport {
    bool m0_in_dual = true;        // (i)
    bool trivial_on_xdual = true;  // (ii)
    bool generates = true;         // (iii)
    bool common_faces = true;      // (iv), checked on a translation window
    bool cone_criterion = true;           // (ii) <=> (iii) per cone
    std::vector<std::string> failures;
    bool ok() const { return m0_in_dual && trivial_on_xdual && generates && common_faces && cone_criterion; }
};

// Clauses (i)-(iii) and the (ii) <=> (iii) cross-check for a list of cones.
FanReport check_cones_over_S(const std::vector<RationalCone>& cones);
// Adds clause (iv) on translates with coefficients in [-window, window]; window 0 skips it.
FanReport check_fan_over_S(const SFan& fan, int window = 1, const PolyOptions& opt = {});

bool is_face_of(const RationalCone& f, const RationalCone& c, const PolyOptions& opt = {});

// Cut(sigma) = -f0 + sigma cap (f0 + X^vee_R). Empty for the zero cone.
RationalPolytope cut(const RationalCone& c, const PolyOptions& opt = {});

struct CutBijectionReport {
    bool vertices_are_centers = true;
    bool recovers_face = true;
    bool dimensions = true;
    bool injective = true;
    bool surjective = true;
    bool inclusion_reversing = true;
    bool covers_xdual = true;
    std::vector<std::pair<int, int>> dim_pairs;  // (dim Cut, dim face) per class
    std::vector<std::string> failures;
    bool ok() const {
        return vertices_are_centers && recovers_face && dimensions && injective && surjective &&
               inclusion_reversing && covers_xdual;
    }
};
CutBijectionReport cut_bijection_report(const FCDatum& d, const Level& lev,
                                        const PolyOptions& opt = {});

RationalPolytope sigma_star(const FCDatum& d, const Level& lev, const PolyOptions& opt = {});
bool separation_membership(const FCDatum& d, const Level& lev, const QVec& point, Int n,
                           const PolyOptions& opt = {});

struct MumfordFan {
    SFan fan;                          // tau_0 and its faces; tau_alpha = translates
    RationalPolytope cut0;             // Cut(tau_0) in X^vee_R
    Q enumeration_radius;              // B(beta,beta) bound that certified completeness
    std::vector<QVec> vertex_classes;  // Cut vertices mod beta(X)
    Int components = 0;
    FanReport report;
};
// Requires Y = X and g <= 3.
MumfordFan mumford_fan(const FCDatum& d, const PolyOptions& opt = {});

}  // namespace nfc
