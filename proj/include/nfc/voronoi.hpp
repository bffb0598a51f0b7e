#pragma once

#include "nfc/core.hpp"
#include "nfc/polyhedra.hpp"

#include <functional>
#include <string>
#include <vector>

namespace nfc {

// Visit every integer z with (z-c)^T G (z-c) <= r. G positive definite.
void enumerate_ellipsoid(const QMat& gram, const QVec& center, const Q& r,
                         const std::function<void(const IVec&)>& visit);

// u(phi(u)) as a quadratic form on X^vee.
Int phi_norm(const FCDatum& d, const IVec& u);

std::vector<IVec> relevant_vectors(const FCDatum& d, const Level& lev, const PolyOptions& opt = {});

// Same set by the facet test against a brute-force box of half-spaces (oracle use).
std::vector<IVec> relevant_vectors_bruteforce(const FCDatum& d, int radius);

RationalPolytope voronoi_polytope(const FCDatum& d, const Level& lev, const PolyOptions& opt = {});
std::vector<Ineq> voronoi_inequalities(const FCDatum& d, const Level& lev,
                                       const std::vector<IVec>& relevant);
std::vector<IVec> sigma_points(const FCDatum& d, const Level& lev, const PolyOptions& opt = {});

struct IntegralityReport {
    bool integral = false;
    std::string clause;          // "", "vertex", "symmetry", "basis"
    QVec witness;                // a non-integral vertex when clause == "vertex"
    std::string method;          // "vertex-enumeration" or "root-system"
    std::vector<QVec> vertex_representatives;  // root-system route only
};

IntegralityReport is_integral(const FCDatum& d, const Level& lev, const PolyOptions& opt = {});

struct MinimalLevel {
    Int ell0 = 0;
    Int denominator_lcm = 0;  // lcm of vertex denominators of the unit-level polytope
    std::string method;
};
// Throws NotFoundBelowCap.
MinimalLevel minimal_level(const FCDatum& d, Int cap, bool half = false,
                           const PolyOptions& opt = {});

// Root-system description of the unit-level polytope, when it applies.
struct RootSystemData {
    bool applies = false;
    std::string reason;
    std::vector<IVec> simple_roots;     // in X^vee coordinates
    IVec highest_root_coefficients;
    std::vector<QVec> candidates;       // omega_i / lambda_i in X coordinates
    std::vector<bool> is_vertex;
    bool reflections_preserve_x = false;
};
RootSystemData root_system_vertices(const FCDatum& d, const Level& lev,
                                    const std::vector<IVec>& relevant);

struct Decomposition {
    IVec gamma;
    IVec z;
};
// All z minimizing B(p - t phi(z)); sorted.
std::vector<IVec> closest_centers(const FCDatum& d, const Level& lev, const QVec& p);
Decomposition cvp_decompose(const FCDatum& d, const Level& lev, const IVec& x);
Int d_value(const FCDatum& d, const Level& lev, const IVec& x);

struct ComplexFace {
    std::vector<QVec> vertices;  // sorted
    int dim = 0;
    QVec label;                  // cell center / Delaunay hole, when meaningful
};

struct FaceComplex {
    int g = 0;
    IMat translation;             // columns generate the translation lattice
    Int quotient_multiplier = 1;  // [translation lattice : quotient lattice]
    std::string quotient_name;
    std::vector<ComplexFace> classes;            // one per translation class
    std::vector<Int> counts_mod_translation;     // index by dimension
    std::vector<Int> counts_quotient;            // index by dimension
    // boundary[i]: (class index, offset) of each codimension-one face of class i
    std::vector<std::vector<std::pair<int, IVec>>> boundary;
    Int euler() const;
};

FaceComplex vor_complex(const FCDatum& d, const Level& lev, const PolyOptions& opt = {});
FaceComplex delaunay_complex(const FCDatum& d, const PolyOptions& opt = {});

// Voronoi cell of X itself under B (used by Delaunay and Mumford constructions).
RationalPolytope lattice_voronoi_cell(const FCDatum& d, const PolyOptions& opt = {});

}  // namespace nfc
