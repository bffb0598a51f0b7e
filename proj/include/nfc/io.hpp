#pragma once

#include "nfc/charts.hpp"
#include "nfc/strata.hpp"

#include <json.hpp>

#include <string>

namespace nfc {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "nfc/1";

// Throws Error("BadInput", ...) naming the offending field.
FCDatum parse_datum(const std::string& text);
FCDatum load_datum(const std::string& path);
Json datum_json(const FCDatum& d);

Json q_json(const Q& q);
Json vec_json(const QVec& v);
Json vec_json(const IVec& v);
Json polytope_json(const RationalPolytope& p);
Json cone_json(const RationalCone& c);
Json complex_json(const FaceComplex& fc);
Json integrality_json(const IntegralityReport& r);
Json fan_json(const SFan& f);
Json chart_json(const MonomialChart& c);
Json group_json(const ComponentGroup& g);
Json strata_json(const StrataReport& r);

// Voronoi tiling of X_R around the origin, g = 2 only (WrongRank otherwise).
// Cells are coloured by the class of their center modulo beta(Y).
std::string voronoi_svg(const FCDatum& d, const Level& lev, int window = 2,
                        const PolyOptions& opt = {});
// Class index of v in X^vee / beta(Y), by position in dual_quotient_reps.
int quotient_class(const FCDatum& d, const IVec& v);

}  // namespace nfc
