#include "qsheaf/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace qs {

ConfigArrangement ConfigArrangement::make(const CartanDatum& D, const CycField* F, const std::vector<int>& pi,
                                          const Weight& Lambda, ArrFlavor flavor) {
    ConfigArrangement A;
    A.colors = Colors::of(D, F);
    for (int i : pi)
        if (i < 0 || i >= D.rank()) throw ParameterError("unfolding uses an unknown color");
    A.pi = pi;
    A.flavor = flavor;
    A.lam.assign(D.rank(), 0);
    if (flavor == ArrFlavor::principal) {
        if (static_cast<int>(Lambda.size()) != D.rank()) throw ParameterError("weight has wrong rank");
        for (int i = 0; i < D.rank(); ++i) {
            mpq_class v = Lambda[i] * D.d(i);
            if (v.get_den() != 1) throw ParameterError("d_i <i,Lambda> must be integral");
            A.lam[i] = v.get_num().get_si();
        }
    }
    return A;
}

RootVec ConfigArrangement::nu() const {
    RootVec v(colors.size(), 0);
    for (int i : pi) ++v[i];
    return v;
}

std::vector<PosFacet> facets(int N, int r) {
    if (r < 0 || r > N) throw ParameterError("facet dimension out of range");
    std::vector<PosFacet> out;
    std::vector<int> rho(N, 0);
    while (true) {
        std::vector<bool> hit(r + 1, false);
        for (int v : rho) hit[v] = true;
        bool onto = true;
        for (int a = 1; a <= r; ++a) onto = onto && hit[a];
        if (onto) out.push_back({rho, r});
        int p = N - 1;
        while (p >= 0 && rho[p] == r) rho[p--] = 0;
        if (p < 0) break;
        ++rho[p];
    }
    return out;
}

std::string blocks_str(const Blocks& b) {
    int n = static_cast<int>(b.size());
    int top = *std::max_element(b.begin(), b.end());
    std::ostringstream os;
    for (int k = 0; k <= top; ++k) {
        if (k) os << '|';
        bool first = true;
        for (int j = 0; j < n; ++j)
            if (b[j] == k) {
                if (!first) os << ',';
                first = false;
                if (j == n - 1)
                    os << 'o';
                else
                    os << j;
            }
    }
    return os.str();
}

int ArrComplex::index(int degree, const Cell& c) const {
    const auto& v = cells[degree - cx.lo];
    auto less = [](const Cell& a, const Cell& b) {
        return std::tie(a.facet, a.chamber) < std::tie(b.facet, b.chamber);
    };
    auto it = std::lower_bound(v.begin(), v.end(), c, less);
    if (it == v.end() || it->facet != c.facet || it->chamber != c.chamber) return -1;
    return static_cast<int>(it - v.begin());
}

namespace {

int nblocks(const Blocks& b) { return *std::max_element(b.begin(), b.end()) + 1; }

// all ordered set partitions of n points
std::vector<Blocks> ordered_partitions(int n) {
    std::vector<Blocks> out;
    Blocks b(n, 0);
    while (true) {
        int top = *std::max_element(b.begin(), b.end());
        std::vector<bool> hit(top + 1, false);
        for (int v : b) hit[v] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool x) { return x; })) out.push_back(b);
        int p = n - 1;
        while (p >= 0 && b[p] == n - 1) b[p--] = 0;
        if (p < 0) break;
        ++b[p];
    }
    return out;
}

// total orders refining F
std::vector<Blocks> chambers_of(const Blocks& F) {
    int n = static_cast<int>(F.size()), k = nblocks(F);
    std::vector<std::vector<int>> blocks(k);
    for (int j = 0; j < n; ++j) blocks[F[j]].push_back(j);
    std::vector<Blocks> out;
    Blocks C(n);
    std::function<void(int, int)> rec = [&](int b, int base) {
        if (b == k) {
            out.push_back(C);
            return;
        }
        auto els = blocks[b];
        do {
            for (size_t t = 0; t < els.size(); ++t) C[els[t]] = base + static_cast<int>(t);
            rec(b + 1, base + static_cast<int>(els.size()));
        } while (std::next_permutation(els.begin(), els.end()));
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Blocks merge(const Blocks& F, int k) {
    Blocks E = F;
    for (int& v : E)
        if (v > k) --v;
    return E;
}

// chamber of Ch(F) containing C' in Ch(E), E < F
Blocks project(const Blocks& F, const Blocks& Cp) {
    int n = static_cast<int>(F.size());
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return std::tie(F[a], Cp[a]) < std::tie(F[b], Cp[b]); });
    Blocks C(n);
    for (int t = 0; t < n; ++t) C[ord[t]] = t;
    return C;
}

int det_sign(std::vector<std::vector<mpq_class>> m) {
    int n = static_cast<int>(m.size());
    int s = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            s = -s;
        }
        if (m[c][c] < 0) s = -s;
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return s;
}

using Vec = std::vector<mpq_class>;

struct FacetFrame {
    std::vector<Vec> l, b;  // span of the facet, greedy complement
    Vec w;
    int s = 1;
};

int rank_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    auto m = rows;
    int n = static_cast<int>(m[0].size()), r = 0;
    for (int c = 0; c < n && r < static_cast<int>(m.size()); ++c) {
        int p = r;
        while (p < static_cast<int>(m.size()) && m[p][c] == 0) ++p;
        if (p == static_cast<int>(m.size())) continue;
        std::swap(m[p], m[r]);
        for (size_t q = 0; q < m.size(); ++q)
            if (static_cast<int>(q) != r && m[q][c] != 0) {
                mpq_class f = m[q][c] / m[r][c];
                for (int k = 0; k < n; ++k) m[q][k] -= f * m[r][k];
            }
        ++r;
    }
    return r;
}

std::vector<Vec> cat(std::vector<Vec> a, const std::vector<Vec>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

FacetFrame frame(const Blocks& F) {
    int N = static_cast<int>(F.size()) - 1, k = nblocks(F), o = F[N];
    FacetFrame fr;
    fr.w.assign(N, 0);
    for (int j = 0; j < N; ++j) fr.w[j] = F[j] - o;
    for (int b = 0; b < k; ++b) {
        if (b == o) continue;
        Vec v(N, 0);
        for (int j = 0; j < N; ++j)
            if (F[j] == b) v[j] = 1;
        fr.l.push_back(v);
    }
    std::vector<Vec> cur = fr.l;
    for (int j = 0; j < N && static_cast<int>(cur.size()) < N; ++j) {
        Vec e(N, 0);
        e[j] = 1;
        cur.push_back(e);
        if (rank_rows(cur) == static_cast<int>(cur.size()))
            fr.b.push_back(e);
        else
            cur.pop_back();
    }
    fr.s = N == 0 ? 1 : det_sign(cat(fr.b, fr.l));
    return fr;
}

// compatibility of the coorientations of S < B, dim S = dim B - 1
int incidence_sign(const FacetFrame& S, const FacetFrame& B) {
    int N = static_cast<int>(S.w.size());
    Vec v(N);
    for (int j = 0; j < N; ++j) v[j] = B.w[j] - S.w[j];
    std::vector<Vec> rows = B.b;
    rows.push_back(v);
    rows = cat(rows, S.l);
    return B.s * det_sign(rows);
}

struct FullData {
    std::vector<std::vector<Blocks>> facets;  // by dimension
    std::map<Blocks, std::vector<Blocks>> chambers;
    std::map<Blocks, FacetFrame> frames;
};

FullData full_data(int N, bool positive) {
    FullData D;
    D.facets.resize(N + 1);
    for (auto& F : ordered_partitions(N + 1)) {
        if (positive && F[N] != 0) continue;
        auto ch = chambers_of(F);
        if (positive) {
            std::vector<Blocks> keep;
            for (auto& C : ch)
                if (C[N] == 0) keep.push_back(C);
            ch = keep;
        }
        D.facets[nblocks(F) - 1].push_back(F);
        D.chambers[F] = ch;
        if (!positive) D.frames[F] = frame(F);
    }
    for (auto& v : D.facets) std::sort(v.begin(), v.end());
    return D;
}

ArrComplex skeleton(const FullData& D, const CycField* F, int N) {
    ArrComplex X;
    X.cx.F = F;
    X.cx.lo = -N;
    for (int p = N; p >= 0; --p) {
        std::vector<Cell> cs;
        for (auto& f : D.facets[p])
            for (auto& c : D.chambers.at(f)) cs.push_back({f, c});
        std::vector<std::string> names;
        for (auto& c : cs) names.push_back(blocks_str(c.facet) + "<" + blocks_str(c.chamber));
        X.cx.dims.push_back(static_cast<int>(cs.size()));
        X.cx.labels.push_back(std::move(names));
        X.cells.push_back(std::move(cs));
    }
    return X;
}

void require_principal(const ConfigArrangement& A) {
    if (A.flavor != ArrFlavor::principal) throw ParameterError("operation needs the principal arrangement");
}

}  // namespace

CycNum q_separating(const Blocks& C, const Blocks& Cp, const ConfigArrangement& A) {
    int n = static_cast<int>(C.size());
    bool origin = A.flavor == ArrFlavor::principal;
    int N = A.N();
    if (n != (origin ? N + 1 : N) || static_cast<int>(Cp.size()) != n)
        throw ParameterError("chamber has the wrong number of coordinates");
    long e = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if ((C[a] < C[b]) == (Cp[a] < Cp[b])) continue;
            if (b == N && origin)
                e -= A.lam[A.pi[a]];
            else
                e += A.colors.dot[A.pi[a]][A.pi[b]];
        }
    return A.colors.z(e);
}

ArrComplex complex_shriek(const ConfigArrangement& A) {
    require_principal(A);
    int N = A.N();
    const CycField* F = A.field();
    FullData D = full_data(N, true);
    ArrComplex X = skeleton(D, F, N);
    for (int r = N; r >= 1; --r) {
        const auto& src = X.cells[N - r];
        Matrix M(F, X.cx.dim(-r + 1), X.cx.dim(-r));
        for (size_t c = 0; c < src.size(); ++c) {
            const Blocks& rho = src[c].facet;
            std::vector<int> card(r + 1, 0);
            for (int j = 0; j < N; ++j) ++card[rho[j]];
            for (int i = 0; i < r; ++i) {
                long ex = 0;
                for (int j = i + 1; j <= r; ++j) ex += card[j] - 1;
                Cell t{merge(rho, i), src[c].chamber};
                int row = X.index(-r + 1, t);
                if (row < 0) throw ContractViolation("positive complex: face outside the basis");
                M(row, static_cast<int>(c)) += F->integer(ex % 2 ? -1 : 1);
            }
        }
        X.cx.d.push_back(std::move(M));
    }
    X.cx.check();
    return X;
}

ArrComplex full_complex(const ConfigArrangement& A, Extension ext) {
    require_principal(A);
    if (ext == Extension::ic) throw ParameterError("the ic complex is an image complex; use ic_complex");
    int N = A.N();
    const CycField* F = A.field();
    FullData D = full_data(N, false);
    ArrComplex X = skeleton(D, F, N);
    for (int p = N; p >= 1; --p) {
        const auto& src = X.cells[N - p];
        Matrix M(F, X.cx.dim(-p + 1), X.cx.dim(-p));
        for (size_t c = 0; c < src.size(); ++c) {
            const Blocks& B = src[c].facet;
            for (int k = 0; k < p; ++k) {
                Blocks E = merge(B, k);
                int sg = incidence_sign(D.frames.at(E), D.frames.at(B));
                if (sg == 0) throw ContractViolation("degenerate incidence sign");
                if (ext == Extension::shriek) {
                    int row = X.index(-p + 1, {E, src[c].chamber});
                    M(row, static_cast<int>(c)) += F->integer(sg);
                    continue;
                }
                for (auto& Cp : D.chambers.at(E)) {
                    if (project(B, Cp) != src[c].chamber) continue;
                    int row = X.index(-p + 1, {E, Cp});
                    M(row, static_cast<int>(c)) += q_separating(src[c].chamber, Cp, A) * F->integer(sg);
                }
            }
        }
        X.cx.d.push_back(std::move(M));
    }
    X.cx.check();
    return X;
}

ArrComplex complex_star(const ConfigArrangement& A) { return full_complex(A, Extension::star); }

ChainMap m_map(const ConfigArrangement& A, const ArrComplex& S, const ArrComplex& T) {
    ChainMap m;
    const CycField* F = A.field();
    for (size_t k = 0; k < S.cells.size(); ++k) {
        const auto& cs = S.cells[k];
        Matrix M(F, static_cast<int>(T.cells[k].size()), static_cast<int>(cs.size()));
        int lo = S.cx.lo + static_cast<int>(k);
        for (size_t c = 0; c < cs.size(); ++c)
            for (auto& Cp : chambers_of(cs[c].facet)) {
                int row = T.index(lo, {cs[c].facet, Cp});
                if (row < 0) continue;
                M(row, static_cast<int>(c)) = q_separating(cs[c].chamber, Cp, A);
            }
        m.f.push_back(std::move(M));
    }
    return m;
}

ChainComplex ic_complex(const ConfigArrangement& A) {
    ArrComplex S = full_complex(A, Extension::shriek), T = full_complex(A, Extension::star);
    return image_complex(S.cx, T.cx, m_map(A, S, T));
}

std::vector<int> ic_cohomology(const ConfigArrangement& A) { return cohomology_dims(ic_complex(A)); }

std::vector<std::vector<int>> sigma_pi(const std::vector<int>& pi) {
    int N = static_cast<int>(pi.size());
    std::vector<int> s(N);
    std::iota(s.begin(), s.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int j = 0; j < N && ok; ++j) ok = pi[s[j]] == pi[j];
        if (ok) out.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

namespace {

int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) s = -s;
    return s;
}

Blocks act(const std::vector<int>& sigma, const Blocks& b) {
    Blocks out = b;
    for (size_t j = 0; j < sigma.size(); ++j) out[sigma[j]] = b[j];
    return out;
}

// orientation sign of sigma : D_F -> D_{sigma F}
int orientation_sign(const std::vector<int>& sigma, const Blocks& F) {
    FacetFrame a = frame(F), b = frame(act(sigma, F));
    std::vector<Vec> rows;
    for (auto& v : a.b) {
        Vec w(v.size());
        for (size_t j = 0; j < v.size(); ++j) w[sigma[j]] = v[j];
        rows.push_back(w);
    }
    rows = cat(rows, b.l);
    return a.s * det_sign(rows);
}

}  // namespace

Matrix sigma_action(const ConfigArrangement& A, const ArrComplex& X, int degree, const std::vector<int>& sigma,
                    bool positive) {
    (void)A;
    const auto& cs = X.cells[degree - X.cx.lo];
    Matrix M(X.cx.F, static_cast<int>(cs.size()), static_cast<int>(cs.size()));
    std::map<Blocks, int> memo;
    for (size_t c = 0; c < cs.size(); ++c) {
        Cell t{act(sigma, cs[c].facet), act(sigma, cs[c].chamber)};
        int row = X.index(degree, t);
        if (row < 0) throw ContractViolation("sigma does not preserve the cells");
        int s = 1;
        if (!positive) {
            auto it = memo.find(cs[c].facet);
            if (it == memo.end()) it = memo.emplace(cs[c].facet, orientation_sign(sigma, cs[c].facet)).first;
            s = it->second;
        }
        M(row, static_cast<int>(c)) = X.cx.F->integer(s);
    }
    return M;
}

ChainComplex skew_symmetrize(const ConfigArrangement& A, const ArrComplex& X, bool positive) {
    return skew_part(A, X, positive).cx;
}

SkewPart skew_part(const ConfigArrangement& A, const ArrComplex& X, bool positive) {
    auto group = sigma_pi(A.pi);
    std::vector<int> sg;
    for (auto& s : group) sg.push_back(perm_sign(s));
    const CycField* F = X.cx.F;
    int n = static_cast<int>(X.cells.size());
    // orbit sums: disjoint supports, one representative row each
    std::vector<std::vector<std::map<int, long>>> basis(n);
    std::vector<std::vector<int>> rep(n);
    for (int k = 0; k < n; ++k) {
        int deg = X.cx.lo + k;
        int dim = X.cx.dims[k];
        std::vector<Matrix> acts;
        for (auto& s : group) acts.push_back(sigma_action(A, X, deg, s, positive));
        std::vector<bool> seen(dim, false);
        for (int c = 0; c < dim; ++c) {
            if (seen[c]) continue;
            std::map<int, long> v;
            for (size_t g = 0; g < group.size(); ++g)
                for (int r = 0; r < dim; ++r) {
                    const CycNum& a = acts[g](r, c);
                    if (a.is_zero()) continue;
                    seen[r] = true;
                    v[r] += sg[g] * (a.is_one() ? 1 : -1);
                }
            for (auto it = v.begin(); it != v.end();)
                it = it->second == 0 ? v.erase(it) : std::next(it);
            if (v.empty()) continue;
            rep[k].push_back(v.begin()->first);
            basis[k].push_back(std::move(v));
        }
    }
    SkewPart sp;
    ChainComplex& out = sp.cx;
    out.F = F;
    out.lo = X.cx.lo;
    for (int k = 0; k < n; ++k) {
        Matrix B(F, X.cx.dims[k], static_cast<int>(basis[k].size()));
        for (size_t c = 0; c < basis[k].size(); ++c)
            for (auto& [r, v] : basis[k][c]) B(r, static_cast<int>(c)) = F->integer(v);
        sp.basis.push_back(std::move(B));
        out.dims.push_back(static_cast<int>(basis[k].size()));
        std::vector<std::string> names;
        for (int r : rep[k]) names.push_back("skew " + X.cx.labels[k][r]);
        out.labels.push_back(std::move(names));
    }
    for (int k = 0; k + 1 < n; ++k) {
        const Matrix& d = X.cx.d[k];
        Matrix M(F, out.dims[k + 1], out.dims[k]);
        std::map<int, int> where;
        for (size_t b = 0; b < basis[k + 1].size(); ++b)
            for (auto& [r, v] : basis[k + 1][b]) where[r] = static_cast<int>(b);
        for (size_t c = 0; c < basis[k].size(); ++c) {
            std::vector<CycNum> y(d.rows(), F->zero());
            for (auto& [col, v] : basis[k][c])
                for (int r = 0; r < d.rows(); ++r)
                    if (!d(r, col).is_zero()) y[r] += d(r, col) * F->integer(v);
            for (size_t b = 0; b < basis[k + 1].size(); ++b) {
                int r = rep[k + 1][b];
                M(static_cast<int>(b), static_cast<int>(c)) = y[r] * F->integer(basis[k + 1][b].at(r)).inv();
            }
            for (int r = 0; r < d.rows(); ++r) {
                CycNum e = y[r];
                auto w = where.find(r);
                if (w != where.end())
                    e -= M(w->second, static_cast<int>(c)) * F->integer(basis[k + 1][w->second].at(r));
                if (!e.is_zero()) throw ContractViolation("skew part is not a subcomplex");
            }
        }
        out.d.push_back(std::move(M));
    }
    out.check();
    return sp;
}

ChainComplex skew_ic_complex(const ConfigArrangement& A) {
    ArrComplex S = full_complex(A, Extension::shriek), T = full_complex(A, Extension::star);
    ChainMap m = m_map(A, S, T);
    SkewPart a = skew_part(A, S, false), b = skew_part(A, T, false);
    ChainMap ms;
    for (size_t k = 0; k < m.f.size(); ++k) ms.f.push_back(solve(b.basis[k], m.f[k] * a.basis[k]));
    return image_complex(a.cx, b.cx, ms);
}

ChainComplex arrangement_complex(const ConfigArrangement& A, Extension ext, bool skew) {
    if (ext == Extension::ic) return skew ? skew_ic_complex(A) : ic_complex(A);
    ArrComplex X = ext == Extension::shriek ? complex_shriek(A) : complex_star(A);
    return skew ? skew_symmetrize(A, X, ext == Extension::shriek) : X.cx;
}

int sign_tau_eta(const Blocks& tau, const std::vector<int>& eta) {
    int N = static_cast<int>(eta.size());
    std::vector<int> inv(N + 1, -1), p(N);
    for (int j = 0; j < N; ++j) inv[eta[j]] = j;
    for (int k = 1; k <= N; ++k) {
        if (inv[k] < 0) throw ParameterError("eta is not a bijection onto [1, N]");
        p[k - 1] = tau[inv[k]];
    }
    return perm_sign(p);
}

int sign_rho(const std::vector<int>& rho, int r, RhoSign conv) {
    std::vector<long> card(r + 1, 0);
    for (size_t j = 0; j < rho.size(); ++j) ++card[rho[j]];
    long e = 0;
    for (int i = 1; i <= r; ++i) e += (conv == RhoSign::literal ? r - i + 1 : i) * (card[i] - 1);
    return e % 2 ? -1 : 1;
}

HochData hoch_data(const ConfigArrangement& A) {
    HochData H;
    H.C = A.colors;
    H.lams = {A.lam};
    H.nu = A.nu();
    return H;
}

ChainMap phi_iso(const ConfigArrangement& A, const ArrComplex& S, const HochComplex& X,
                 const std::vector<int>& eta, RhoSign conv) {
    int N = A.N();
    if (static_cast<int>(eta.size()) != N) throw ParameterError("eta must order J");
    const CycField* F = A.field();
    ChainMap phi;
    for (int r = N; r >= 0; --r) {
        const auto& cs = S.cells[N - r];
        Matrix M(F, X.cx.dim(-r), static_cast<int>(cs.size()));
        for (size_t c = 0; c < cs.size(); ++c) {
            const Blocks& rho = cs[c].facet;
            const Blocks& tau = cs[c].chamber;
            HochLabel t;
            for (int a = r; a >= 0; --a) {
                Word w;
                for (int j = 0; j < N; ++j)
                    if (rho[j] == a) w.push_back(j);
                std::sort(w.begin(), w.end(), [&](int x, int y) { return tau[x] > tau[y]; });
                t.push_back(w);
            }
            int row = X.index(-r, t);
            if (row < 0) throw ContractViolation("phi: monomial outside the Hochschild basis");
            std::vector<int> rj(rho.begin(), rho.begin() + N);
            M(row, static_cast<int>(c)) = F->integer(sign_tau_eta(tau, eta) * sign_rho(rj, r, conv));
        }
        phi.f.push_back(std::move(M));
    }
    return phi;
}

DiagonalData diagonal_m_matrix(const ConfigArrangement& A) {
    if (A.flavor != ArrFlavor::diagonal) throw ParameterError("diagonal_m_matrix needs the diagonal arrangement");
    int N = A.N();
    DiagonalData out;
    Word w(N);
    std::iota(w.begin(), w.end(), 0);
    std::vector<Blocks> taus;
    do {
        out.sequences.push_back(w);
        Blocks tau(N);
        for (int k = 0; k < N; ++k) tau[w[k]] = N - k;
        taus.push_back(tau);
    } while (std::next_permutation(w.begin(), w.end()));
    int n = static_cast<int>(taus.size());
    const CycField* F = A.field();
    out.m = Matrix(F, n, n);
    out.m_oriented = Matrix(F, n, n);
    std::vector<int> sg;
    for (auto& t : taus) sg.push_back(perm_sign(t));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            out.m(a, b) = q_separating(taus[a], taus[b], A);
            out.m_oriented(a, b) = out.m(a, b) * F->integer(sg[a] * sg[b]);
        }
    return out;
}

OnePoint one_point(const CycField* F, const Colors& C, int color, long lam) {
    auto build = [&](long l) {
        ConfigArrangement A;
        A.colors = C;
        A.pi = {color};
        A.lam.assign(C.size(), 0);
        A.lam[color] = l;
        return A;
    };
    ConfigArrangement A = build(lam), Ainv = build(-lam);
    ArrComplex S = full_complex(A, Extension::shriek), T = full_complex(A, Extension::star);
    ArrComplex Tinv = full_complex(Ainv, Extension::star);
    // chamber + : origin before the point; ray facets coincide with their chambers
    const Blocks plus{1, 0}, minus{0, 1}, origin{0, 0};
    auto at0 = [&](const ArrComplex& X, const Blocks& c) { return X.index(0, {origin, c}); };
    auto at1 = [&](const ArrComplex& X, const Blocks& c) { return X.index(-1, {c, c}); };
    auto u_of = [&](const ArrComplex& X) {
        // u* is the transpose of d : degree -1 -> 0
        Matrix U(F, 2, 2);
        const Matrix& d = X.cx.diff(-1);
        const Blocks ch[2] = {plus, minus};
        for (int e = 0; e < 2; ++e)
            for (int f = 0; f < 2; ++f) U(e, f) = d(at0(X, ch[f]), at1(X, ch[e]));
        return U;
    };
    OnePoint P;
    P.q = F->zeta_pow(-lam);
    ChainMap m = m_map(A, S, T);
    P.m = Matrix(F, 2, 2);
    const Blocks ch[2] = {plus, minus};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) P.m(a, b) = m.f[1](at0(T, ch[a]), at0(S, ch[b]));
    P.u_shriek = u_of(S);
    P.u_star = u_of(T);
    P.v_shriek = u_of(Tinv).transpose();
    Matrix Q(F, 2, 2);
    Q(0, 1) = P.q.inv();
    Q(1, 0) = P.q.inv();
    P.v_star = Q * P.u_shriek.transpose();
    return P;
}

}  // namespace qs
