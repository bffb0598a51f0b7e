#include "nfc/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nfc {

Q parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t.push_back(c);
    if (t.empty()) throw Error("BadInput", "empty rational");
    auto slash = t.find('/');
    auto valid_int = [](const std::string& x) {
        if (x.empty()) return false;
        size_t i = (x[0] == '-' || x[0] == '+') ? 1 : 0;
        if (i >= x.size()) return false;
        for (; i < x.size(); ++i)
            if (x[i] < '0' || x[i] > '9') return false;
        return true;
    };
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw Error("BadInput", "not a rational: " + s);
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw Error("BadInput", "zero denominator: " + s);
    Q q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::string to_string(const IVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string to_string(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ")";
    return os.str();
}

QVec to_q(const IVec& v) {
    QVec r;
    r.reserve(v.size());
    for (Int x : v) r.emplace_back(static_cast<long>(x));
    return r;
}

bool is_integral(const QVec& v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

IVec to_int(const QVec& v) {
    IVec r;
    r.reserve(v.size());
    for (const auto& x : v) {
        if (x.get_den() != 1) throw Error("Internal", "non-integral coordinate " + x.get_str());
        if (!x.get_num().fits_slong_p()) throw Error("Internal", "integer overflow");
        r.push_back(x.get_num().get_si());
    }
    return r;
}

QMat to_q(const IMat& m) {
    QMat r;
    for (const auto& row : m) r.push_back(to_q(row));
    return r;
}

Q dot(const QVec& a, const QVec& b) {
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int pair(const IVec& u, const IVec& x) { return dot(u, x); }

QVec mat_vec(const QMat& m, const QVec& v) {
    QVec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

IVec mat_vec(const IMat& m, const IVec& v) {
    IVec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

QMat mat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r(n, QVec(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            Q s = 0;
            for (size_t l = 0; l < k; ++l) s += a[i][l] * b[l][j];
            r[i][j] = s;
        }
    return r;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IMat r(n, IVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < k; ++l) r[i][j] += a[i][l] * b[l][j];
    return r;
}

QMat transpose(const QMat& m) {
    if (m.empty()) return {};
    QMat r(m[0].size(), QVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
    return r;
}

IMat transpose(const IMat& m) {
    if (m.empty()) return {};
    IMat r(m[0].size(), IVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
    return r;
}

QMat identity_q(int n) {
    QMat r(n, QVec(n, Q(0)));
    for (int i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

IMat identity_i(int n) {
    IMat r(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

std::vector<int> rref(QMat& m) {
    std::vector<int> piv;
    if (m.empty()) return piv;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Q inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return piv;
}

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

QMat nullspace(const QMat& m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    QMat r = m;
    auto piv = rref(r);
    std::vector<bool> is_piv(cols, false);
    for (int p : piv) is_piv[p] = true;
    QMat basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        QVec v(cols, Q(0));
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
        basis.push_back(v);
    }
    return basis;
}

Q determinant(QMat m) {
    size_t n = m.size();
    Q det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Q f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<QMat> inverse(const QMat& m) {
    size_t n = m.size();
    QMat a(n, QVec(2 * n, Q(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    auto piv = rref(a);
    if (piv.size() < n || piv[n - 1] != static_cast<int>(n - 1)) return std::nullopt;
    QMat r(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i][j] = a[i][n + j];
    return r;
}

QVec add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
QVec sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
QVec scale(const QVec& a, const Q& s) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}
IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
IVec scale(const IVec& a, Int s) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}
IVec neg(const IVec& a) { return scale(a, -1); }

bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Q& x) { return x == 0; });
}
bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

QVec primitive(const QVec& v) {
    mpz_class l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        r[i] = v[i] * l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_num().get_mpz_t());
    }
    if (g == 0) return r;
    for (auto& x : r) x /= g;
    return r;
}

Int gcd_all(const IVec& v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x);
    return g;
}

Int floor_q(const Q& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r.get_si();
}

Int ceil_q(const Q& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r.get_si();
}

Int round_q(const Q& q) { return floor_q(q + Q(1, 2)); }

// ---- Smith normal form over mpz ----

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

void row_swap(ZMat& m, size_t a, size_t b) { std::swap(m[a], m[b]); }
void col_swap(ZMat& m, size_t a, size_t b) {
    for (auto& r : m) std::swap(r[a], r[b]);
}
// row a -= f * row b
void row_axpy(ZMat& m, size_t a, size_t b, const mpz_class& f) {
    for (size_t j = 0; j < m[a].size(); ++j) m[a][j] -= f * m[b][j];
}
void col_axpy(ZMat& m, size_t a, size_t b, const mpz_class& f) {
    for (auto& r : m) r[a] -= f * r[b];
}

ZMat to_z(const IMat& m) {
    ZMat r;
    for (const auto& row : m) {
        std::vector<mpz_class> z;
        for (Int x : row) z.emplace_back(static_cast<long>(x));
        r.push_back(z);
    }
    return r;
}

IMat from_z(const ZMat& m) {
    IMat r;
    for (const auto& row : m) {
        IVec v;
        for (const auto& x : row) {
            if (!x.fits_slong_p()) throw Error("Internal", "Smith form overflow");
            v.push_back(x.get_si());
        }
        r.push_back(v);
    }
    return r;
}

ZMat z_identity(size_t n) {
    ZMat r(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

}  // namespace

SmithDecomposition smith(const IMat& m_in) {
    size_t rows = m_in.size(), cols = rows ? m_in[0].size() : 0;
    ZMat m = to_z(m_in), L = z_identity(rows), R = z_identity(cols);
    size_t k = 0;
    while (k < rows && k < cols) {
        // pivot: smallest nonzero |entry| in the trailing block
        size_t pr = rows, pc = cols;
        for (size_t i = k; i < rows; ++i)
            for (size_t j = k; j < cols; ++j)
                if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        row_swap(m, k, pr);
        row_swap(L, k, pr);
        col_swap(m, k, pc);
        col_swap(R, k, pc);
        bool dirty = false;
        for (size_t i = k + 1; i < rows; ++i) {
            if (m[i][k] == 0) continue;
            mpz_class f;
            mpz_fdiv_q(f.get_mpz_t(), m[i][k].get_mpz_t(), m[k][k].get_mpz_t());
            row_axpy(m, i, k, f);
            row_axpy(L, i, k, f);
            if (m[i][k] != 0) dirty = true;
        }
        for (size_t j = k + 1; j < cols; ++j) {
            if (m[k][j] == 0) continue;
            mpz_class f;
            mpz_fdiv_q(f.get_mpz_t(), m[k][j].get_mpz_t(), m[k][k].get_mpz_t());
            col_axpy(m, j, k, f);
            col_axpy(R, j, k, f);
            if (m[k][j] != 0) dirty = true;
        }
        if (dirty) continue;
        // divisibility of the trailing block
        bool fixed = true;
        for (size_t i = k + 1; i < rows && fixed; ++i)
            for (size_t j = k + 1; j < cols; ++j)
                if (m[i][j] % m[k][k] != 0) {
                    // row k += row i
                    row_axpy(m, k, i, -1);
                    row_axpy(L, k, i, -1);
                    fixed = false;
                    break;
                }
        if (!fixed) continue;
        if (m[k][k] < 0) {
            for (auto& x : m[k]) x = -x;
            for (auto& x : L[k]) x = -x;
        }
        ++k;
    }
    SmithDecomposition s;
    s.left = from_z(L);
    s.right = from_z(R);
    s.diag = from_z(m);
    for (size_t i = 0; i < std::min(rows, cols); ++i)
        if (m[i][i] != 0) s.factors.push_back(m[i][i].get_si());
    return s;
}

IMat integer_kernel(const IMat& m) {
    if (m.empty()) return {};
    auto s = smith(m);
    size_t cols = m[0].size();
    IMat ker;
    for (size_t j = s.factors.size(); j < cols; ++j) {
        IVec v(cols);
        for (size_t i = 0; i < cols; ++i) v[i] = s.right[i][j];
        ker.push_back(v);
    }
    return ker;
}

// ---- FC datum ----

bool FCDatum::principal() const {
    Q det = determinant(to_q(y_basis));
    return det == 1 || det == -1;
}

bool FCDatum::b_even() const {
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j)
            if (b[i][j].get_den() != 1) return false;
        if (b[i][i].get_num() % 2 != 0) return false;
    }
    return true;
}

bool FCDatum::phi_even() const {
    for (int i = 0; i < g; ++i)
        if (phi_mat[i][i] % 2 != 0) return false;
    return true;
}

bool FCDatum::in_y(const IVec& x) const {
    auto inv = inverse(to_q(y_basis));
    return is_integral(mat_vec(*inv, to_q(x)));
}

void FCDatum::check_level(const Level& lev) const {
    if (lev.ell < 1) throw Error("BadInput", "level must be positive");
    if (lev.half && !(b_even() && phi_even()))
        throw Error("BadInput", "half level requires B even on X and u(phi(u)) even");
}

FCDatum validate_datum(int g, const IMat& y_basis, const QMat& b, std::optional<QVec> a_lin) {
    if (g < 1) throw Error("BadInput", "rank must be >= 1");
    if (static_cast<int>(y_basis.size()) != g || static_cast<int>(b.size()) != g)
        throw Error("BadInput", "matrix sizes do not match rank");
    for (int i = 0; i < g; ++i)
        if (static_cast<int>(y_basis[i].size()) != g || static_cast<int>(b[i].size()) != g)
            throw Error("BadInput", "matrix rows do not match rank");
    if (a_lin && static_cast<int>(a_lin->size()) != g)
        throw Error("BadInput", "a must have rank entries");
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (b[i][j] != b[j][i])
                throw Error("NonSymmetric", "b[" + std::to_string(i) + "][" + std::to_string(j) +
                                                "] != b[" + std::to_string(j) + "][" +
                                                std::to_string(i) + "]");
    for (int k = 1; k <= g; ++k) {
        QMat minor(k, QVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = b[i][j];
        Q d = determinant(minor);
        if (d <= 0)
            throw Error("NotPositiveDefinite",
                        "leading minor " + std::to_string(k) + " is " + d.get_str());
    }
    if (determinant(to_q(y_basis)) == 0) throw Error("SingularYBasis", "y_basis has determinant 0");
    FCDatum d;
    d.g = g;
    d.y_basis = y_basis;
    d.b = b;
    d.a_lin = std::move(a_lin);
    QMat k = mat_mul(b, to_q(y_basis));
    d.beta_y = IMat(g, IVec(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            if (k[i][j].get_den() != 1)
                throw Error("NonIntegralOnYxX", "B(y_" + std::to_string(j) + ", e_" +
                                                    std::to_string(i) + ") = " + k[i][j].get_str());
            d.beta_y[i][j] = k[i][j].get_num().get_si();
        }
    Q det = determinant(to_q(d.beta_y));
    d.n = mpz_class(abs(det.get_num())).get_si();
    d.b_inv = *inverse(b);
    d.phi_mat = IMat(g, IVec(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            Q v = d.b_inv[i][j] * Q(static_cast<long>(d.n));
            if (v.get_den() != 1) throw Error("Internal", "phi is not integral");
            d.phi_mat[i][j] = v.get_num().get_si();
        }
    // phi(u) must land in Y
    for (int j = 0; j < g; ++j) {
        IVec col(g);
        for (int i = 0; i < g; ++i) col[i] = d.phi_mat[i][j];
        if (!d.in_y(col)) throw Error("Internal", "phi(f_" + std::to_string(j) + ") not in Y");
    }
    return d;
}

IVec beta(const FCDatum& d, const IVec& y) {
    if (!d.in_y(y)) throw Error("NotInY", to_string(y) + " is not in Y");
    QVec r = mat_vec(d.b, to_q(y));
    return to_int(r);
}

std::vector<IVec> dual_quotient_reps(const FCDatum& d) {
    // L K R = D, so u -> L u identifies X^vee / K Z^g with Z^g / D Z^g
    auto sm = smith(d.beta_y);
    QMat linv = *inverse(to_q(sm.left));
    int g = d.g;
    IVec k(g, 0), dg(g);
    for (int i = 0; i < g; ++i) dg[i] = std::llabs(sm.diag[i][i]);
    std::vector<IVec> out;
    while (true) {
        out.push_back(to_int(mat_vec(linv, to_q(k))));
        int i = 0;
        while (i < g && ++k[i] >= dg[i]) k[i++] = 0;
        if (i == g) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int n_index(const FCDatum& d) { return d.n; }

IVec phi(const FCDatum& d, const IVec& u) { return mat_vec(d.phi_mat, u); }

Int e_level(const FCDatum& d, const Level& lev, const IVec& u) {
    Int q = dot(u, phi(d, u));
    Int v = lev.t() * q;
    if (v % 2 != 0) throw Error("NonIntegralValuation", "E is not integral at " + to_string(u));
    return v / 2;
}

Int e_level(const FCDatum& d, Int ell, const IVec& u) { return e_level(d, Level{ell, false}, u); }

Q b_form(const FCDatum& d, const QVec& x, const QVec& y) { return dot(x, mat_vec(d.b, y)); }

Q c_bilinear(const FCDatum& d, const Level& lev, const QVec& x, const QVec& y) {
    return b_form(d, x, y) / Q(static_cast<long>(2 * lev.t() * d.n));
}

Q c_value(const FCDatum& d, const Level& lev, const QVec& x) { return c_bilinear(d, lev, x, x); }

Q c_value(const FCDatum& d, Int ell, const IVec& x) { return c_value(d, Level{ell, false}, to_q(x)); }

Q a_value(const FCDatum& d, const IVec& y) {
    QVec yq = to_q(y);
    Q a = b_form(d, yq, yq) / 2;
    if (d.a_lin) a += dot(*d.a_lin, yq);
    return a;
}

FCDatum pqr_datum(Int p, Int q, Int r) {
    QMat b = {{Q(static_cast<long>(p + r)), Q(static_cast<long>(-r))},
              {Q(static_cast<long>(-r)), Q(static_cast<long>(q + r))}};
    return validate_datum(2, identity_i(2), b);
}

FCDatum tate_datum() { return validate_datum(1, identity_i(1), QMat{{Q(2)}}); }

FCDatum e8_datum() {
    // Cartan matrix, Bourbaki numbering: chain 1-3-4-5-6-7-8, node 2 on node 4.
    const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    QMat b(8, QVec(8, Q(0)));
    for (int i = 0; i < 8; ++i) b[i][i] = 2;
    for (auto& e : edges) {
        b[e[0] - 1][e[1] - 1] = -1;
        b[e[1] - 1][e[0] - 1] = -1;
    }
    return validate_datum(8, identity_i(8), b);
}

}  // namespace nfc
