// Acceptance run: one PASS/FAIL line per criterion. Oracles below are written
// independently of the library (complex floating point, plain fusion rules).
#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "qsheaf/verify.hpp"

using namespace qs;
using cd = std::complex<double>;

namespace {

// --- oracles -------------------------------------------------------------

// value of x under Q[x]/Phi_N -> C, x -> exp(2 pi i / N)
cd embed(const CycNum& x, const CycField* F) {
    if (x.is_zero()) return 0;
    cd s = 0;
    auto c = x.coeffs();
    for (size_t j = 0; j < c.size(); ++j) s += c[j].get_d() * std::polar(1.0, 2 * M_PI * j / F->N());
    return s;
}

struct ZetaC {
    int l, k;
    // zeta = exp(2 pi i k / l) under the embedding above
    cd pow(long e) const { return std::polar(1.0, 2 * M_PI * double(k) * double(e) / l); }
    cd bracket(long v) const { return 1.0 - pow(-2 * v); }
};

bool near(cd a, cd b) { return std::abs(a - b) < 1e-7 * (1 + std::abs(a) + std::abs(b)); }

using Dot = std::vector<std::vector<int>>;

// closed formula for S_Lambda on simply-laced colors: sum over letter-matching
// permutations of the twist times brackets of the shifted weights
cd closed_formula(const ZetaC& z, const Dot& dot, const std::vector<long>& lam, const Word& K, const Word& Kp) {
    int n = static_cast<int>(K.size());
    if (n != static_cast<int>(Kp.size())) return 0;
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 0);
    cd s = 0;
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = Kp[t[a]] == K[a];
        if (!ok) continue;
        long tw = 0;
        cd prod = 1;
        for (int a = 0; a < n; ++a) {
            long v = lam[K[a]];
            for (int b = a + 1; b < n; ++b) {
                if (t[a] > t[b]) tw += dot[K[a]][K[b]];
                if (t[b] > t[a]) v -= dot[K[b]][K[a]];
            }
            prod *= z.bracket(v);
        }
        s += z.pow(tw) * prod;
    } while (std::next_permutation(t.begin(), t.end()));
    return s;
}

// S on the free algebra by the permutation sum
cd perm_sum(const ZetaC& z, const Dot& dot, const Word& K, const Word& Kp) {
    int n = static_cast<int>(K.size());
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 0);
    cd s = 0;
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = Kp[t[a]] == K[a];
        if (!ok) continue;
        long tw = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (t[a] > t[b]) tw += dot[K[a]][K[b]];
        s += z.pow(tw);
    } while (std::next_permutation(t.begin(), t.end()));
    return s;
}

// sl2 fusion: N_{ab}^c at level K
int fusion(int a, int b, int c, int K) {
    if ((a + b + c) % 2) return 0;
    if (c < std::abs(a - b) || c > a + b) return 0;
    return a + b + c <= 2 * K ? 1 : 0;
}

long verlinde(const std::vector<int>& as, int K) {
    std::vector<long> v(K + 1, 0);
    v[0] = 1;
    for (int a : as) {
        std::vector<long> w(K + 1, 0);
        for (int p = 0; p <= K; ++p)
            for (int c = 0; c <= K; ++c) w[c] += v[p] * fusion(p, a, c, K);
        v = w;
    }
    return v[0];
}

// second evaluator of the coaction through the t_i operators
Tensor coaction_t(const Verma& V, const Word& I) {
    const Colors& C = V.colors();
    int N = static_cast<int>(I.size());
    Tensor out;
    out[{Word{}, I}] = C.F->one();
    auto add = [](Tensor& t, const std::vector<Word>& k, const CycNum& c) {
        auto it = t.find(k);
        if (it == t.end())
            t.emplace(k, c);
        else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    };
    for (int j = 1; j <= N; ++j) {
        long v = V.lam()[I[N - j]];
        for (int k = 1; k < j; ++k) v -= C.dot[I[N - k]][I[N - j]];
        CycNum b = C.F->q_bracket(v);
        if (b.is_zero()) continue;
        Tensor t;
        t[{Word{I[N - j]}, Word(I.begin() + (N - j + 1), I.end())}] = b;
        for (int m = j + 1; m <= N; ++m) {
            int i = I[N - m];
            Tensor nt;
            for (auto& [k, c] : t) {
                const Word &x = k[0], &y = k[1];
                long inu = 0, lamy = V.lam()[i];
                for (int a : x) inu += C.dot[a][i];
                for (int a : y) lamy -= C.dot[a][i];
                Word a{i};
                a.insert(a.end(), x.begin(), x.end());
                add(nt, {a, y}, c);
                Word bb = x;
                bb.push_back(i);
                add(nt, {bb, y}, -(c * C.z(inu - 2 * lamy)));
                Word yy{i};
                yy.insert(yy.end(), y.begin(), y.end());
                add(nt, {x, yy}, c * C.z(inu));
            }
            t = nt;
        }
        for (auto& [k, c] : t) add(out, k, c);
    }
    return out;
}

// --- helpers ---------------------------------------------------------------

std::vector<Word> words(int n, int len) {
    std::vector<Word> out{{}};
    for (int d = 0; d < len; ++d) {
        std::vector<Word> nx;
        for (auto& w : out)
            for (int c = 0; c < n; ++c) {
                auto v = w;
                v.push_back(c);
                nx.push_back(v);
            }
        out = nx;
    }
    return out;
}

Word cat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<int> unfolding(const RootVec& nu) {
    std::vector<int> pi;
    for (size_t i = 0; i < nu.size(); ++i) pi.insert(pi.end(), nu[i], static_cast<int>(i));
    return pi;
}

std::vector<int> iota1(int N) {
    std::vector<int> e(N);
    std::iota(e.begin(), e.end(), 1);
    return e;
}

std::vector<Weight> random_weights(int rank, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-3, 12);
    std::vector<Weight> out;
    for (int c = 0; c < count; ++c) {
        Weight w;
        for (int i = 0; i < rank; ++i) w.push_back(d(rng));
        out.push_back(w);
    }
    return out;
}

std::vector<long> lam_of(const CartanDatum& D, const Weight& W) {
    std::vector<long> l;
    for (int i = 0; i < D.rank(); ++i) l.push_back(mpq_class(W[i] * D.d(i)).get_num().get_si());
    return l;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream o;
    for (size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
    return o.str();
}

struct Report {
    int failed = 0;
    void line(int id, bool ok, const std::string& what, const std::string& detail, double secs) {
        if (!ok) ++failed;
        std::printf("criterion %2d: %s  %s  [%s] (%.1fs)\n", id, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str(), secs);
        std::fflush(stdout);
    }
    void info(const std::string& s) {
        std::printf("info: %s\n", s.c_str());
        std::fflush(stdout);
    }
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

// --- criteria --------------------------------------------------------------

// sl2 divided-power Gram entries and the drop at a = l
struct SL2Dims {
    bool ok = true;
    std::vector<int> dims;  // concatenated over l
    std::string detail;
};
SL2Dims crit1(int k) {
    SL2Dims r;
    auto D = CartanDatum::preset("A1");
    for (int l : {3, 5, 7}) {
        const CycField* F = field_for(D, l, k);
        FreeAlgebra A(Colors::of(D, F));
        CycNum prod = F->one();
        CycNum den = (F->one() - F->zeta_pow(2)).inv();
        for (int a = 1; a <= l; ++a) {
            prod *= (F->one() - F->zeta_pow(2 * a)) * den;
            int dim = A.dim_f({a});
            r.dims.push_back(dim);
            bool good = dim == (a < l ? 1 : 0) && A.gram_S({a})(0, 0) == prod;
            if (!good && r.ok) r.detail = "l=" + std::to_string(l) + " a=" + std::to_string(a);
            r.ok = r.ok && good;
        }
    }
    if (r.ok) r.detail = "l=3,5,7, a<=l";
    return r;
}

SL2Dims crit2(int k) {
    SL2Dims r;
    auto D = CartanDatum::preset("A1");
    const int l = 5;
    const CycField* F = field_for(D, l, k);
    Verma V = Verma::of(D, F, {4});
    FreeAlgebra A(Colors::of(D, F));
    ZetaC z{l, k};
    Dot dot{{2}};
    int total = 0;
    for (int a = 0; a <= 6; ++a) {
        Word w(a, 0);
        int dL = V.dim_L({a});
        int oracleL = std::abs(closed_formula(z, dot, {4}, w, w)) > 1e-7 ? 1 : 0;
        int oracleF = std::abs(perm_sum(z, dot, w, w)) > 1e-7 ? 1 : 0;
        total += dL;
        r.dims.push_back(dL);
        bool good = dL == A.dim_f({a}) && dL == oracleL && A.dim_f({a}) == oracleF;
        if (!good && r.ok) r.detail = "a=" + std::to_string(a);
        r.ok = r.ok && good;
    }
    r.ok = r.ok && total == 5;
    r.dims.push_back(total);
    r.detail += (r.detail.empty() ? "" : " ") + std::string("dims ") + join(r.dims);
    return r;
}

bool crit3(std::string& detail) {
    struct Case {
        const char* name;
        int depth;
    };
    long checked = 0;
    unsigned seed = 11;
    for (Case cs : {Case{"A1", 5}, Case{"A2", 4}, Case{"B2", 4}}) {
        auto D = CartanDatum::preset(cs.name);
        const CycField* F = field_for(D, 5, 1);
        Colors C = Colors::of(D, F);
        FreeAlgebra A(C);
        int n = D.rank();
        for (auto& W : random_weights(n, 10, seed++)) {
            Verma V(C, lam_of(D, W));
            for (int N = 0; N <= cs.depth; ++N)
                for (auto& z : words(n, N)) {
                    Tensor t = coaction(V, z);
                    if (!(t == coaction_t(V, z))) {
                        detail = std::string(cs.name) + " coaction evaluators differ";
                        return false;
                    }
                    for (int a = 0; a <= N; ++a)
                        for (auto& x : words(n, a))
                            for (auto& y : words(n, N - a)) {
                                if (C.weight(cat(x, y)) != C.weight(z)) continue;
                                ++checked;
                                if (!(V.form(cat(x, y), z) == pair_coaction(A, V, x, y, t))) {
                                    detail = std::string(cs.name) + " adjunction";
                                    return false;
                                }
                            }
                    Tensor L, R;
                    auto add = [](Tensor& T, const std::vector<Word>& k, const CycNum& c) {
                        auto it = T.find(k);
                        if (it == T.end())
                            T.emplace(k, c);
                        else {
                            it->second += c;
                            if (it->second.is_zero()) T.erase(it);
                        }
                    };
                    for (auto& [k, c] : t) {
                        for (auto& [k2, c2] : coaction(V, k[1])) add(L, {k[0], k2[0], k2[1]}, c * c2);
                        for (auto& [k2, c2] : comult(C, k[0], 2)) add(R, {k2[0], k2[1], k[1]}, c * c2);
                    }
                    ++checked;
                    if (!(L == R)) {
                        detail = std::string(cs.name) + " coassociativity";
                        return false;
                    }
                }
        }
    }
    detail = std::to_string(checked) + " identities, 10 Lambdas per type";
    return true;
}

bool crit4(std::string& detail) {
    long checked = 0;
    for (const char* name : {"A1", "A2", "A3"}) {
        auto D = CartanDatum::preset(name);
        const CycField* F = field_for(D, 5, 1);
        Colors C = Colors::of(D, F);
        ZetaC z{5, 1};
        for (auto& W : random_weights(D.rank(), 2, 7)) {
            auto lam = lam_of(D, W);
            Verma V(C, lam);
            int dmax = D.rank() >= 3 ? 4 : 5;
            for (auto& nu : weights_up_to(D.rank(), dmax))
                for (auto& x : words_of_weight(nu))
                    for (auto& y : words_of_weight(nu)) {
                        ++checked;
                        if (!near(embed(V.form(x, y), F), closed_formula(z, C.dot, lam, x, y))) {
                            detail = std::string(name) + " nu=" + join(nu);
                            return false;
                        }
                    }
        }
    }
    detail = std::to_string(checked) + " pairs (A1, A2 depth<=5; A3 depth<=4)";
    return true;
}

bool crit5(std::string& detail) {
    auto D = CartanDatum::preset("A1");
    const CycField* F = field_for(D, 5, 1);
    Colors C = Colors::of(D, F);
    for (long lam : {0L, 1L, 2L, 3L, 7L}) {
        OnePoint P = one_point(F, C, 0, lam);
        CycNum q = F->zeta_pow(-lam), qi = q.inv(), one = F->one(), zero = F->zero();
        // columns are images of the basis vectors, as the printed formulas list them
        auto M = [&](CycNum a00, CycNum a10, CycNum a01, CycNum a11) {
            Matrix X(F, 2, 2);
            X(0, 0) = a00;
            X(1, 0) = a10;
            X(0, 1) = a01;
            X(1, 1) = a11;
            return X;
        };
        // m(c+*) = c+ + q c-, m(c-*) = q c+ + c-
        bool ok = P.q == q && P.m == M(one, q, q, one);
        // u(c+) = c_w+, u(c-) = -c_w-
        ok = ok && P.u_shriek == M(one, zero, zero, -one);
        // u(c+*) = c_w+* - q c_w-*, u(c-*) = q c_w+* - c_w-*
        ok = ok && P.u_star == M(one, -q, q, -one);
        // v(c_w+) = c+ + q^-1 c-, v(c_w-) = -q^-1 c+ - c-
        ok = ok && P.v_shriek == M(one, qi, -qi, -one);
        // v(c_w+*) = q^-1 c-*, v(c_w-*) = -q^-1 c+*
        ok = ok && P.v_star == M(zero, qi, -qi, zero);
        if (!ok) {
            detail = "Lambda=" + std::to_string(lam);
            return false;
        }
    }
    detail = "Lambda in {0,1,2,3,7}, l=5";
    return true;
}

struct CompDims {
    bool ok = true;
    std::vector<int> dims;
    std::string detail;
    long literal_failures = 0, literal_cases = 0, literal_small_failures = 0;
};
CompDims crit6(int k) {
    CompDims r;
    struct Case {
        const char* name;
        int depth;
    };
    long cases = 0;
    for (Case cs : {Case{"A1", 4}, Case{"A2", 3}}) {
        auto D = CartanDatum::preset(cs.name);
        const CycField* F = field_for(D, 5, k);
        for (auto& W : random_weights(D.rank(), 5, 3)) {
            for (auto& nu : weights_up_to(D.rank(), cs.depth)) {
                auto pi = unfolding(nu);
                auto A = ConfigArrangement::make(D, F, pi, W);
                HochData H = hoch_data(A);
                ArrComplex P = complex_shriek(A);
                HochComplex X = build_complex(unfold(H, pi));
                ChainMap f = phi_iso(A, P, X, iota1(A.N()));
                bool iso = is_chain_map(P.cx, X.cx, f);
                for (auto& M : f.f) iso = iso && M.rows() == M.cols() && rank(M) == M.rows();
                auto sk = cohomology_dims(skew_symmetrize(A, P, true));
                auto tor = tor_dims(H);
                r.dims.insert(r.dims.end(), tor.begin(), tor.end());
                r.dims.insert(r.dims.end(), sk.begin(), sk.end());
                ++cases;
                if ((!iso || sk != tor) && r.ok)
                    r.detail = std::string(cs.name) + " nu=" + join(nu) + (iso ? " cohomology" : " chain map");
                r.ok = r.ok && iso && sk == tor;
                ChainMap g = phi_iso(A, P, X, iota1(A.N()), RhoSign::literal);
                ++r.literal_cases;
                if (!is_chain_map(P.cx, X.cx, g)) {
                    ++r.literal_failures;
                    if (A.N() <= 2) ++r.literal_small_failures;
                }
            }
        }
    }
    if (r.ok) r.detail = std::to_string(cases) + " (nu, Lambda) pairs";
    return r;
}

bool crit7(std::string& detail) {
    long checked = 0;
    for (const char* name : {"A1", "A2"}) {
        auto D = CartanDatum::preset(name);
        const CycField* F = field_for(D, 5, 1);
        ZetaC z{5, 1};
        for (auto& nu : weights_up_to(D.rank(), 4)) {
            auto pi = unfolding(nu);
            int N = static_cast<int>(pi.size());
            auto A = ConfigArrangement::make(D, F, pi, {}, ArrFlavor::diagonal);
            DiagonalData dd = diagonal_m_matrix(A);
            Dot dotJ(N, std::vector<int>(N));
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) dotJ[a][b] = D.dot(pi[a], pi[b]);
            auto eta = iota1(N);
            auto tau_of = [](const Word& w) {
                Blocks t(w.size());
                for (size_t q = 0; q < w.size(); ++q) t[w[q]] = static_cast<int>(w.size() - q);
                return t;
            };
            int m = static_cast<int>(dd.sequences.size());
            std::vector<int> sg(m);
            for (int a = 0; a < m; ++a) sg[a] = sign_tau_eta(tau_of(dd.sequences[a]), eta);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    ++checked;
                    cd lhs = double(sg[a] * sg[b]) * embed(dd.m_oriented(a, b), F);
                    if (!near(lhs, perm_sum(z, dotJ, dd.sequences[a], dd.sequences[b])) || !dd.m.is_symmetric()) {
                        detail = std::string(name) + " nu=" + join(nu);
                        return false;
                    }
                }
            // folded to the colors: skew vectors over the lifts of each word
            FreeAlgebra AI(Colors::of(D, F));
            auto sig = sigma_pi(pi);
            std::map<Word, int> row;
            for (int a = 0; a < m; ++a) row[dd.sequences[a]] = a;
            for (auto& K : words_of_weight(nu))
                for (auto& Kp : words_of_weight(nu)) {
                    auto lifts = [&](const Word& w) {
                        std::vector<std::pair<int, int>> v;
                        for (int a = 0; a < m; ++a) {
                            Word c;
                            for (int j : dd.sequences[a]) c.push_back(pi[j]);
                            if (c == w) v.push_back({a, sg[a]});
                        }
                        return v;
                    };
                    CycNum s = F->zero();
                    for (auto [a, sa] : lifts(K))
                        for (auto [b, sb] : lifts(Kp)) s += dd.m_oriented(a, b) * F->integer(sa * sb);
                    ++checked;
                    if (!(s == AI.form_S(K, Kp) * F->integer(static_cast<long>(sig.size())))) {
                        detail = std::string(name) + " folded nu=" + join(nu);
                        return false;
                    }
                }
        }
    }
    detail = std::to_string(checked) + " entries, |J|<=4";
    return true;
}

struct BlockDims {
    bool ok = true;
    std::vector<int> dims;
    std::string detail;
};
BlockDims crit8(int k) {
    BlockDims r;
    auto D = CartanDatum::preset("A1");
    const CycField* F = field_for(D, 10, k);
    EllData E = make_ell_data(D, 10);
    int K = E.ell - 2;
    std::vector<std::vector<int>> tuples;
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> t(n, 0);
        std::function<void(int)> rec = [&](int p) {
            if (p == n) {
                tuples.push_back(t);
                return;
            }
            for (int a = 0; a <= K; ++a) {
                t[p] = a;
                rec(p + 1);
            }
        };
        rec(0);
    }
    tuples.push_back({2, 2, 3, 3});
    for (auto& t : tuples) {
        std::vector<Weight> ws;
        for (int a : t) ws.push_back({a});
        int got = conformal_blocks(D, F, E, ws);
        r.dims.push_back(got);
        if (got != verlinde(t, K) && r.ok) r.detail = "tuple " + join(t);
        r.ok = r.ok && got == verlinde(t, K);
    }
    if (r.ok) r.detail = std::to_string(tuples.size()) + " tuples, level " + std::to_string(K);
    return r;
}

bool crit9(std::string& detail) {
    long complexes = 0, modules = 0, mmaps = 0;
    auto fail = [&](const std::string& s) {
        detail = s;
        return false;
    };
    for (const char* name : {"A1", "A2", "B2"}) {
        auto D = CartanDatum::preset(name);
        const CycField* F = field_for(D, 5, 1);
        Colors C = Colors::of(D, F);
        auto Ws = random_weights(D.rank(), 2, 5);
        int dh = D.rank() == 1 ? 5 : 3, da = D.rank() == 1 ? 4 : 3;
        for (auto& nu : weights_up_to(D.rank(), dh)) {
            for (int n = 1; n <= 2; ++n) {
                if (n == 2 && depth(nu) > dh - 1) continue;
                HochData H{C, {}, nu};
                for (int j = 0; j < n; ++j) H.lams.push_back(lam_of(D, Ws[j]));
                complexes += 3;
                if (!build_complex(H).cx.d_squared_zero() || !build_dual_complex(H).cx.d_squared_zero() ||
                    !build_complex_f(H).d_squared_zero())
                    return fail(std::string(name) + " Hochschild nu=" + join(nu));
            }
            if (depth(nu) > da) continue;
            auto pi = unfolding(nu);
            auto A = ConfigArrangement::make(D, F, pi, Ws[0]);
            ArrComplex P = complex_shriek(A), S = full_complex(A, Extension::shriek), T = full_complex(A, Extension::star);
            ChainMap m = m_map(A, S, T);
            complexes += 7;
            if (!P.cx.d_squared_zero() || !S.cx.d_squared_zero() || !T.cx.d_squared_zero() ||
                !image_complex(S.cx, T.cx, m).d_squared_zero() || !skew_symmetrize(A, P, true).d_squared_zero() ||
                !skew_symmetrize(A, T, false).d_squared_zero() || !skew_ic_complex(A).d_squared_zero())
                return fail(std::string(name) + " arrangement nu=" + join(nu));
            for (auto& M : m.f) {
                ++mmaps;
                if (!M.is_symmetric()) return fail(std::string(name) + " m not symmetric nu=" + join(nu));
            }
            auto Ad = ConfigArrangement::make(D, F, pi, {}, ArrFlavor::diagonal);
            ++mmaps;
            if (!diagonal_m_matrix(Ad).m.is_symmetric()) return fail(std::string(name) + " diagonal m");
        }
        int l = D.rank() == 1 ? 10 : 5;
        const CycField* Fl = field_for(D, l, 1);
        EllData E = make_ell_data(D, l);
        std::vector<CModule> Ls;
        for (auto& w : alcove_weights(D, E)) Ls.push_back(irreducible_module(D, Fl, w));
        std::vector<CModule> all = Ls;
        for (auto& L : Ls)
            for (auto fl : {DualFlavor::vee, DualFlavor::star}) all.push_back(dual(L, fl));
        for (size_t a = 0; a < std::min<size_t>(Ls.size(), 3); ++a)
            for (size_t b = 0; b < std::min<size_t>(Ls.size(), 3); ++b) all.push_back(tensor(Ls[a], Ls[b]));
        for (auto& M : all) {
            ++modules;
            if (!check_relations(M, 6).ok()) return fail(std::string(name) + " module relations");
        }
    }
    detail = std::to_string(complexes) + " complexes, " + std::to_string(mmaps) + " m matrices, " +
             std::to_string(modules) + " modules";
    return true;
}

}  // namespace

int main() {
    Report rep;
    const int k2 = 2;  // coprime to 3, 5, 7; l = 10 uses k = 3
    {
        Timer t;
        auto r = crit1(1);
        rep.line(1, r.ok, "sl2 divided powers: dim f_{a i} and Gram entries", r.detail, t.secs());
    }
    {
        Timer t;
        auto r = crit2(1);
        rep.line(2, r.ok, "Steinberg weight, sl2 l=5: dim L_a = dim f_{a i}, total 5", r.detail, t.secs());
    }
    {
        Timer t;
        std::string d;
        bool ok = crit3(d);
        rep.line(3, ok, "coaction adjunction and coassociativity", d, t.secs());
    }
    {
        Timer t;
        std::string d;
        bool ok = crit4(d);
        rep.line(4, ok, "recursive S_Lambda equals the closed formula", d, t.secs());
    }
    {
        Timer t;
        std::string d;
        bool ok = crit5(d);
        rep.line(5, ok, "one-point arrangement matrices", d, t.secs());
    }
    CompDims c6;
    {
        Timer t;
        c6 = crit6(1);
        rep.line(6, c6.ok, "phi is a chain isomorphism; skew !-cohomology equals Tor", c6.detail, t.secs());
        rep.info("sign of rho with exponent sum (r-a+1)(|rho^-1(a)|-1): chain map fails in " +
                 std::to_string(c6.literal_failures) + " of " + std::to_string(c6.literal_cases) +
                 " cases, " + std::to_string(c6.literal_small_failures) +
                 " of them with |J| <= 2; exponent sum a(|rho^-1(a)|-1) is used above");
    }
    {
        Timer t;
        std::string d;
        bool ok = crit7(d);
        rep.line(7, ok, "diagonal m matrix equals the S Gram matrix up to eta signs", d, t.secs());
    }
    BlockDims c8;
    {
        Timer t;
        c8 = crit8(1);
        rep.line(8, c8.ok, "sl2 l=10 conformal blocks match the Verlinde fusion count", c8.detail, t.secs());
    }
    {
        Timer t;
        std::string d;
        bool ok = crit9(d);
        rep.line(9, ok, "d^2 = 0, m symmetric, module relations", d, t.secs());
    }
    {
        Timer t;
        auto a1 = crit1(1), b1 = crit1(k2);
        auto a2 = crit2(1), b2 = crit2(k2);
        auto b6 = crit6(k2);
        auto b8 = crit8(3);
        bool ok = b1.ok && b2.ok && b6.ok && b8.ok && a1.dims == b1.dims && a2.dims == b2.dims &&
                  c6.dims == b6.dims && c8.dims == b8.dims;
        std::string d = "k=2 (l=3,5,7), k=3 (l=10)";
        if (!ok) d += a1.dims == b1.dims ? "" : " crit1-dims", d += a2.dims == b2.dims ? "" : " crit2-dims",
                 d += c6.dims == b6.dims ? "" : " crit6-dims", d += c8.dims == b8.dims ? "" : " crit8-dims";
        rep.line(10, ok, "criteria 1, 2, 6, 8 independent of k", d, t.secs());
    }
    std::printf("%d criteria failed\n", rep.failed);
    return rep.failed ? 1 : 0;
}
