#pragma once

#include "nfc/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nfc {

// s^val w^exp theta^theta_deg, units dropped.
struct ValuedMonomial {
    Int val = 0;
    IVec exp;
    Int theta_deg = 0;

    ValuedMonomial operator*(const ValuedMonomial& o) const;
    bool operator==(const ValuedMonomial& o) const {
        return val == o.val && exp == o.exp && theta_deg == o.theta_deg;
    }
};
ValuedMonomial identity_monomial(int g);

// Throws NotInSigma.
ValuedMonomial xi_monomial(const FCDatum& d, const Level& lev, const IVec& alpha, const IVec& v);
// Same valuation formula without the alpha-in-Sigma precondition.
ValuedMonomial xi_raw(const FCDatum& d, const Level& lev, const IVec& alpha, const IVec& v);
ValuedMonomial delta_action(const FCDatum& d, const Level& lev, const IVec& u, const ValuedMonomial& m);
// Throws NotInY.
ValuedMonomial s_action(const FCDatum& d, const Level& lev, const IVec& y, const ValuedMonomial& m);

struct IdentityRow {
    std::string name;
    int cases = 0;
    int failures = 0;
};
struct IdentityReport {
    std::vector<IdentityRow> rows;
    bool ok() const;
};
IdentityReport valuation_identities(const FCDatum& d, int sample_size, std::uint64_t seed = 1);

// |X / mY|
Int fourier_rank(const FCDatum& d, Int m);
// m A(y) + B(y, x)
Q fourier_exponent(const FCDatum& d, Int m, const IVec& y, const IVec& x);
IdentityReport power_law_check(const FCDatum& d, int samples, std::uint64_t seed = 1);

}  // namespace nfc
