#pragma once

#include "nfc/core.hpp"

#include <vector>

namespace nfc {

struct PolyOptions {
    int dimension_cap = 8;
    bool allow_high_dim_vertices = false;  // vertex enumeration above dim 6
};

// Extreme rays and lineality of {y : A y >= 0}.
struct DDResult {
    std::vector<QVec> rays;       // primitive integer, reduced mod lineality, sorted
    std::vector<QVec> lineality;  // rref basis, rows primitive
};
DDResult dd_cone(const std::vector<QVec>& rows, int dim);

// n . x + c >= 0 (or == 0 for equations). Normal primitive integer.
struct Ineq {
    QVec normal;
    Q offset;
    bool operator==(const Ineq& o) const { return normal == o.normal && offset == o.offset; }
    bool operator<(const Ineq& o) const {
        return normal != o.normal ? normal < o.normal : offset < o.offset;
    }
};

struct Face {
    std::vector<int> vertices;  // indices into the polytope's vertex list, sorted
    int dim = 0;
};

class RationalPolytope {
public:
    int ambient = 0;
    std::vector<QVec> vertices;  // sorted lexicographically
    std::vector<Ineq> facets;    // irredundant relative to the affine hull, sorted
    std::vector<Ineq> equations; // affine hull
    int dim = -1;                // -1 for the empty polytope

    bool empty() const { return vertices.empty(); }
    bool contains(const QVec& x) const;
    bool interior_contains(const QVec& x) const;  // relative interior
    bool operator==(const RationalPolytope& o) const {
        return ambient == o.ambient && vertices == o.vertices && facets == o.facets &&
               equations == o.equations;
    }
};

RationalPolytope hull(const std::vector<QVec>& points, const PolyOptions& opt = {});
RationalPolytope hull(const std::vector<IVec>& points, const PolyOptions& opt = {});
RationalPolytope from_inequalities(int ambient, const std::vector<Ineq>& ineqs,
                                   const std::vector<Ineq>& eqs = {},
                                   const PolyOptions& opt = {});
std::vector<Face> faces(const RationalPolytope& p);
RationalPolytope minkowski(const RationalPolytope& p, const RationalPolytope& q,
                           const PolyOptions& opt = {});
RationalPolytope scale(const RationalPolytope& p, const Q& s);
RationalPolytope translate(const RationalPolytope& p, const QVec& v);
RationalPolytope intersect(const RationalPolytope& p, const RationalPolytope& q,
                           const PolyOptions& opt = {});
std::vector<IVec> lattice_points(const RationalPolytope& p);
int affine_dim(const std::vector<QVec>& pts);

class RationalCone {
public:
    int ambient = 0;
    std::vector<QVec> rays;       // primitive integer, mod lineality
    std::vector<QVec> lineality;  // basis of the maximal linear subspace
    std::vector<QVec> facets;     // inner normals n: n . x >= 0
    std::vector<QVec> equations;  // n . x == 0

    bool pointed() const { return lineality.empty(); }
    int dim() const { return ambient - static_cast<int>(equations.size()); }
    bool contains(const QVec& x) const;
    bool operator==(const RationalCone& o) const {
        return ambient == o.ambient && rays == o.rays && lineality == o.lineality &&
               facets == o.facets && equations == o.equations;
    }
};

RationalCone cone_from_generators(int ambient, const std::vector<QVec>& gens,
                                  const std::vector<QVec>& lin = {}, const PolyOptions& opt = {});
RationalCone cone_from_inequalities(int ambient, const std::vector<QVec>& ineqs,
                                    const std::vector<QVec>& eqs = {},
                                    const PolyOptions& opt = {});
RationalCone cone_dual(const RationalCone& c, const PolyOptions& opt = {});
RationalCone cone_intersect(const RationalCone& a, const RationalCone& b,
                            const PolyOptions& opt = {});

}  // namespace nfc
