#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfc {

using Int = long long;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;  // row-major
using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

// Base error; `kind` is a short machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

inline Q qi(Int v) { return Q(static_cast<long>(v)); }

// ---- small exact linear algebra ----

Q parse_rational(const std::string& s);
std::string to_string(const Q& q);
std::string to_string(const IVec& v);
std::string to_string(const QVec& v);

QVec to_q(const IVec& v);
IVec to_int(const QVec& v);  // throws if a coordinate is not integral
bool is_integral(const QVec& v);
QMat to_q(const IMat& m);

Q dot(const QVec& a, const QVec& b);
Int dot(const IVec& a, const IVec& b);
QVec mat_vec(const QMat& m, const QVec& v);
IVec mat_vec(const IMat& m, const IVec& v);
QMat mat_mul(const QMat& a, const QMat& b);
IMat mat_mul(const IMat& a, const IMat& b);
QMat transpose(const QMat& m);
IMat transpose(const IMat& m);
QMat identity_q(int n);
IMat identity_i(int n);
Q determinant(QMat m);
std::optional<QMat> inverse(const QMat& m);
int rank(QMat m);
// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(QMat& m);
// Basis of {x : m x = 0}.
QMat nullspace(const QMat& m);

QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Q& s);
IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const IVec& a, Int s);
IVec neg(const IVec& a);
bool is_zero(const QVec& v);
bool is_zero(const IVec& v);

// Scale a nonzero rational vector to the primitive integer vector on the same ray.
QVec primitive(const QVec& v);
Int gcd_all(const IVec& v);
Int floor_q(const Q& q);
Int ceil_q(const Q& q);
Int round_q(const Q& q);  // nearest, ties toward +inf

// ---- Smith normal form ----

struct SmithDecomposition {
    IMat left;    // unimodular L
    IMat right;   // unimodular R
    IMat diag;    // L*M*R
    IVec factors; // d1 | d2 | ... (nonzero diagonal entries, positive)
};

SmithDecomposition smith(const IMat& m);
// Integer kernel basis (rows) of an integer matrix.
IMat integer_kernel(const IMat& m);

// ---- the FC datum ----

struct Level {
    Int ell = 1;
    bool half = false;
    Int t() const { return half ? ell : 2 * ell; }  // translation multiplier
};

class FCDatum {
public:
    int g = 0;
    IMat y_basis;              // columns generate Y
    QMat b;                    // bilinear form on X x X
    std::optional<QVec> a_lin; // A(y) = B(y,y)/2 + a_lin . y when present

    // cached
    IMat beta_y;   // K = B*Y : column j is beta(y_j)
    Int n = 0;     // |det K|
    IMat phi_mat;  // P = N B^{-1}, phi(u) = P u (X coordinates)
    QMat b_inv;

    bool principal() const;  // Y = X
    bool b_even() const;     // B integral with even diagonal
    bool phi_even() const;   // u(phi(u)) even for all u
    bool in_y(const IVec& x) const;
    void check_level(const Level& lev) const;  // rejects invalid half levels
};

FCDatum validate_datum(int g, const IMat& y_basis, const QMat& b,
                       std::optional<QVec> a_lin = std::nullopt);

IVec beta(const FCDatum& d, const IVec& y);  // throws NotInY
// Representatives of X^vee / beta(Y), from the Smith form of the beta matrix.
std::vector<IVec> dual_quotient_reps(const FCDatum& d);
Int n_index(const FCDatum& d);
IVec phi(const FCDatum& d, const IVec& u);
Int e_level(const FCDatum& d, const Level& lev, const IVec& u);
Int e_level(const FCDatum& d, Int ell, const IVec& u);
Q c_value(const FCDatum& d, const Level& lev, const QVec& x);
Q c_value(const FCDatum& d, Int ell, const IVec& x);
Q c_bilinear(const FCDatum& d, const Level& lev, const QVec& x, const QVec& y);
Q b_form(const FCDatum& d, const QVec& x, const QVec& y);
Q a_value(const FCDatum& d, const IVec& y);
Int pair(const IVec& u, const IVec& x);  // u(x)

// Standard fixtures.
FCDatum pqr_datum(Int p, Int q, Int r);
FCDatum tate_datum();
FCDatum e8_datum();

}  // namespace nfc
