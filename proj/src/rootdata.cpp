#include "qsheaf/rootdata.hpp"

#include <numeric>
#include <stdexcept>

namespace qs {

namespace {

using QMat = std::vector<std::vector<mpq_class>>;

QMat inverse(QMat a) {
    int n = static_cast<int>(a.size());
    QMat inv(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw ParameterError("singular dot matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        mpq_class s = 1 / a[c][c];
        for (int j = 0; j < n; ++j) a[c][j] *= s, inv[c][j] *= s;
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpq_class f = a[r][c];
            for (int j = 0; j < n; ++j) a[r][j] -= f * a[c][j], inv[r][j] -= f * inv[c][j];
        }
    }
    return inv;
}

bool positive_definite(const std::vector<std::vector<int>>& m) {
    // Sylvester: leading principal minors
    int n = static_cast<int>(m.size());
    for (int k = 1; k <= n; ++k) {
        QMat a(k, std::vector<mpq_class>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) a[i][j] = m[i][j];
        mpq_class det = 1;
        for (int c = 0; c < k; ++c) {
            int p = c;
            while (p < k && a[p][c] == 0) ++p;
            if (p == k) return false;
            if (p != c) std::swap(a[p], a[c]), det = -det;
            det *= a[c][c];
            for (int r = c + 1; r < k; ++r) {
                mpq_class f = a[r][c] / a[c][c];
                for (int j = c; j < k; ++j) a[r][j] -= f * a[c][j];
            }
        }
        if (det <= 0) return false;
    }
    return true;
}

long det_int(std::vector<std::vector<long>> a) {
    int n = static_cast<int>(a.size());
    QMat q(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[i][j] = a[i][j];
    mpq_class det = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && q[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) std::swap(q[p], q[c]), det = -det;
        det *= q[c][c];
        for (int r = c + 1; r < n; ++r) {
            mpq_class f = q[r][c] / q[c][c];
            for (int j = c; j < n; ++j) q[r][j] -= f * q[c][j];
        }
    }
    return det.get_num().get_si();
}

}  // namespace

CartanDatum::CartanDatum(std::vector<std::vector<int>> dot, std::string name)
    : name_(std::move(name)), dot_(std::move(dot)) {
    int n = rank();
    if (n == 0) throw ParameterError("empty Cartan datum");
    for (auto& row : dot_)
        if (static_cast<int>(row.size()) != n) throw ParameterError("dot matrix not square");
    for (int i = 0; i < n; ++i) {
        if (dot_[i][i] <= 0 || dot_[i][i] % 2) throw ParameterError("i.i must be even and positive");
        for (int j = 0; j < n; ++j) {
            if (dot_[i][j] != dot_[j][i]) throw ParameterError("dot matrix not symmetric");
            if (i == j) continue;
            if ((2 * dot_[i][j]) % dot_[i][i]) throw ParameterError("2 i.j / i.i not integral");
            int a = 2 * dot_[i][j] / dot_[i][i];
            if (a > 0 || a < -3) throw ParameterError("2 i.j / i.i outside {0,-1,-2,-3}");
        }
    }
    if (!positive_definite(dot_)) throw ParameterError("dot matrix not positive definite");
    QMat g(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = dot_[i][j];
    QMat gi = inverse(g);
    dgd_.assign(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dgd_[i][j] = gi[i][j] * d(i) * d(j);
    gamma0_.assign(n, 1);
    beta0_.assign(n, 1);
}

CartanDatum CartanDatum::preset(const std::string& name) {
    if (name == "A1") return CartanDatum({{2}}, name);
    if (name == "A2") return CartanDatum({{2, -1}, {-1, 2}}, name);
    if (name == "A3") return CartanDatum({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, name);
    if (name == "B2") {
        // color 0 long, color 1 short
        CartanDatum c({{4, -2}, {-2, 2}}, name);
        c.gamma0_ = {2, 1};
        c.beta0_ = {1, 1};
        return c;
    }
    if (name == "G2") {
        // color 0 short, color 1 long
        CartanDatum c({{2, -3}, {-3, 6}}, name);
        c.gamma0_ = {2, 3};
        c.beta0_ = {1, 2};
        return c;
    }
    throw ParameterError("unknown Cartan preset: " + name);
}

int CartanDatum::dmax() const {
    int m = 1;
    for (int i = 0; i < rank(); ++i) m = std::max(m, d(i));
    return m;
}

int CartanDatum::varpi() const {
    int n = rank();
    std::vector<std::vector<long>> a(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = cartan(i, j);
    return static_cast<int>(std::labs(det_int(a)));
}

bool CartanDatum::simply_laced() const {
    for (int i = 0; i < rank(); ++i)
        if (d(i) != 1) return false;
    return true;
}

mpq_class CartanDatum::dot_weight(const Weight& a, const Weight& b) const {
    mpq_class s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) s += a[i] * dgd_[i][j] * b[j];
    return s;
}

Weight CartanDatum::alpha_prime(const RootVec& nu) const {
    Weight w(rank(), 0);
    for (int j = 0; j < rank(); ++j)
        for (int i = 0; i < rank(); ++i) w[j] += nu[i] * cartan(j, i);
    return w;
}

mpq_class CartanDatum::pair(const Weight& lam, const RootVec& nu) const {
    mpq_class s = 0;
    for (int a = 0; a < rank(); ++a) s += lam[a] * nu[a] * d(a);
    return s;
}

int CartanDatum::dot_root(const RootVec& a, const RootVec& b) const {
    int s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) s += a[i] * b[j] * dot_[i][j];
    return s;
}

int depth(const RootVec& nu) { return std::accumulate(nu.begin(), nu.end(), 0); }

bool is_integral(const Weight& w) {
    for (auto& c : w)
        if (c.get_den() != 1) return false;
    return true;
}

namespace {

// residues c mod m (m = ell * den) with D G^-1 D c in ell Z^n, plus m e_i
std::vector<std::vector<long>> y_ell_generators(const CartanDatum& C, int ell, long& index) {
    int n = C.rank();
    long den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Weight a(n, 0), b(n, 0);
            a[i] = 1;
            b[j] = 1;
            mpq_class h = C.dot_weight(a, b);
            den = std::lcm(den, h.get_den().get_si());
        }
    long m = ell * den;
    std::vector<std::vector<long>> gens;
    std::vector<long> c(n, 0);
    long count = 0;
    while (true) {
        Weight w(n);
        for (int i = 0; i < n; ++i) w[i] = c[i];
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            Weight e(n, 0);
            e[j] = 1;
            mpq_class v = C.dot_weight(w, e) / ell;
            if (v.get_den() != 1) ok = false;
        }
        if (ok) {
            ++count;
            gens.push_back(c);
        }
        int p = 0;
        while (p < n && ++c[p] == m) c[p++] = 0;
        if (p == n) break;
    }
    long total = 1;
    for (int i = 0; i < n; ++i) total *= m;
    index = total / count;
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = m;
        gens.push_back(e);
    }
    return gens;
}

}  // namespace

EllData make_ell_data(const CartanDatum& C, int l) {
    if (l <= 1) throw ParameterError("l must exceed 1");
    EllData E;
    E.l = l;
    E.ell = (l % 2) ? l : l / 2;
    int n = C.rank();
    E.rho = C.rho();
    E.rho_ell.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        E.ell_i.push_back(E.ell / std::gcd(E.ell, C.d(i)));
        E.rho_ell[i] = E.ell_i[i] - 1;
        if (E.ell_i[i] <= 1) E.warnings.push_back("ell_" + std::to_string(i) + " <= 1");
        for (int j = 0; j < n; ++j)
            if (i != j && E.ell_i[i] <= -C.cartan(i, j) + 1)
                E.warnings.push_back("ell_" + std::to_string(i) + " <= -<i,j'>+1 for j=" + std::to_string(j));
    }
    long index = 0;
    y_ell_generators(C, E.ell, index);
    // |X_ell/Y_ell| = det((1/ell) . on Y_ell) = [X:Y_ell]^2 det(X-gram) / ell^n
    Weight e(n, 0);
    QMat h(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Weight a(n, 0), b(n, 0);
            a[i] = 1;
            b[j] = 1;
            h[i][j] = C.dot_weight(a, b);
        }
    mpq_class det = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (h[p][c] == 0) ++p;
        if (p != c) std::swap(h[p], h[c]), det = -det;
        det *= h[c][c];
        for (int r = c + 1; r < n; ++r) {
            mpq_class f = h[r][c] / h[c][c];
            for (int j = c; j < n; ++j) h[r][j] -= f * h[c][j];
        }
    }
    mpq_class dd = det * index * index;
    for (int i = 0; i < n; ++i) dd /= E.ell;
    E.dd_ell = static_cast<int>(dd.get_num().get_si() / dd.get_den().get_si());
    return E;
}

bool in_X_ell(const CartanDatum& C, const EllData& E, const Weight& w) {
    int n = C.rank();
    for (int i = 0; i < n; ++i)
        if (mpq_class(w[i] * C.d(i)).get_den() != 1) return false;
    long index = 0;
    for (auto& g : y_ell_generators(C, E.ell, index)) {
        Weight y(n);
        for (int i = 0; i < n; ++i) y[i] = g[i];
        mpq_class v = C.dot_weight(w, y) / E.ell;
        if (v.get_den() != 1) return false;
    }
    return true;
}

bool in_first_alcove(const CartanDatum& C, const EllData& E, const Weight& lam) {
    int n = C.rank();
    if (!is_integral(lam)) return false;
    for (int i = 0; i < n; ++i)
        if (lam[i] + 1 <= 0) return false;
    bool uniform = true;
    for (int i = 0; i < n; ++i)
        if (E.ell_i[i] != E.ell) uniform = false;
    const auto& co = uniform ? C.gamma0() : C.beta0();
    mpq_class s = 0;
    for (int i = 0; i < n; ++i) s += co[i] * (lam[i] + 1);
    long bound = uniform ? E.ell : E.ell / C.dmax();
    return s < bound;
}

mpq_class balance_n(const CartanDatum& C, const Weight& mu, const Weight& nu0) {
    return C.dot_weight(mu, mu) / 2 + C.dot_weight(mu, nu0);
}

const CycField* field_for(const CartanDatum& C, int l, int k) { return CycField::get(l, k, C.varpi()); }

}  // namespace qs
