#pragma once

#include "nfc/fan.hpp"

#include <string>
#include <vector>

namespace nfc {

struct ChartGenerators {
    IVec alpha;
    IVec u;
    Q m;                          // max C_l over Sigma_{3l}
    std::vector<IVec> delta;      // lattice points of the bounded region Delta
    std::vector<IVec> sigma2;     // Sigma_{2l}
    std::vector<QVec> weights;    // (D(x) + u(x - alpha)) m0 + (x - alpha), x in Delta u Sigma_{2l}
};
// Throws NotInSigma when alpha is not in Sigma_l.
ChartGenerators chart_generators(const FCDatum& d, const Level& lev, const IVec& alpha,
                                 const IVec& u, const PolyOptions& opt = {});

// Lattice points of a cone in Z^n: lineality lattice basis plus the Hilbert basis of the
// pointed quotient, lifted back.
struct HilbertBasis {
    std::vector<QVec> lineality;  // Z-basis of (lineality space) cap Z^n
    std::vector<QVec> elements;   // sorted by grading, then lexicographically
    QVec grading;                 // integral, zero on the lineality, positive on elements
    std::vector<QVec> all() const;
};
HilbertBasis hilbert_basis(const RationalCone& cone, const PolyOptions& opt = {});

// Whether x (integral) is a nonnegative integer combination of the basis (plus lineality).
bool in_semigroup(const HilbertBasis& hb, const RationalCone& cone, const QVec& x);

struct FiberRelation {
    int i = 0, j = 0;   // indices into MonomialChart::basis.elements
    bool survives = false;
};

struct MonomialChart {
    std::vector<QVec> face;
    int face_dim = 0;
    IVec u;
    bool torus = false;
    RationalCone tau;     // in X~^vee
    RationalCone dual;    // tau^vee in X~
    HilbertBasis basis;
    bool unimodular = false;
    std::vector<int> vanishing;             // basis elements that are 0 on the closed fiber
    std::vector<FiberRelation> relations;   // pairs among the non-vanishing elements
};

MonomialChart chart_ring(const FCDatum& d, const Level& lev, const std::vector<QVec>& face,
                         const IVec& u, const PolyOptions& opt = {});
// Fills vanishing/relations: a product survives iff both factors lie on a common facet
// tau^vee cap rho^perp (rho a ray of tau).
void fiber_presentation(MonomialChart& chart);
std::string fiber_relations_string(const MonomialChart& chart);

struct IAdicBound {
    Q m;
    Q m_star;
    Int multiplier = 16;  // m_star / m
    Int t = 0;
};
IAdicBound iadic_bound(const FCDatum& d, const Level& lev, const IVec& alpha, const IVec& u,
                       const IVec& x, const PolyOptions& opt = {});

struct ScalingReport {
    int samples = 0;
    bool cones_equal = true;
    bool complexes_equal = true;
    std::vector<std::string> failures;
    bool ok() const { return cones_equal && complexes_equal; }
};
ScalingReport scaling_check(const FCDatum& d, const Level& lev, Int ell_prime, int samples,
                            const PolyOptions& opt = {});

}  // namespace nfc
