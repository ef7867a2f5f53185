#include "qsheaf/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace qs {

namespace {

struct Tally {
    CheckResult r;
    Tally(std::string suite, std::string tag) {
        r.suite = std::move(suite);
        r.tag = std::move(tag);
    }
    void check(bool ok, const std::string& what) {
        ++r.cases;
        if (!ok && r.pass) {
            r.pass = false;
            r.detail = "first failure: " + what;
        }
    }
};

std::string wstr(const Word& w) {
    std::string s;
    for (int c : w) s += std::to_string(c);
    return s.empty() ? "1" : s;
}

std::string vstr(const std::vector<int>& v) {
    std::ostringstream o;
    for (size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
    return o.str();
}

std::string weight_str(const Weight& w) {
    std::ostringstream o;
    for (size_t i = 0; i < w.size(); ++i) o << (i ? "," : "") << w[i].get_str();
    return o.str();
}

std::vector<Word> all_words(int n, int len) {
    std::vector<Word> out{{}};
    for (int d = 0; d < len; ++d) {
        std::vector<Word> nx;
        for (auto& w : out)
            for (int c = 0; c < n; ++c) {
                auto v = w;
                v.push_back(c);
                nx.push_back(std::move(v));
            }
        out = std::move(nx);
    }
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

std::vector<int> sorted_unfolding(const RootVec& nu) {
    std::vector<int> pi;
    for (size_t i = 0; i < nu.size(); ++i) pi.insert(pi.end(), nu[i], static_cast<int>(i));
    return pi;
}

std::vector<long> lam_of(const CartanDatum& D, const Weight& W) {
    std::vector<long> lam;
    for (int i = 0; i < D.rank(); ++i) {
        mpq_class v = W[i] * D.d(i);
        if (v.get_den() != 1) throw ParameterError("d_i <i,Lambda> must be integral");
        lam.push_back(v.get_num().get_si());
    }
    return lam;
}

std::vector<int> identity_eta(int N) {
    std::vector<int> eta(N);
    std::iota(eta.begin(), eta.end(), 1);
    return eta;
}

bool invertible_map(const ChainMap& f) {
    for (auto& M : f.f)
        if (M.rows() != M.cols() || rank(M) != M.rows()) return false;
    return true;
}

void add_tensor(Tensor& t, const std::vector<Word>& k, const CycNum& c) {
    auto it = t.find(k);
    if (it == t.end())
        t.emplace(k, c);
    else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

struct Ctx {
    const VerifyConfig& cfg;
    const CartanDatum& D;
    const CycField* F;
    Colors C;
    int n;
    std::vector<Weight> Ws;
    int depth;
};

// sl2 fusion at level K, iterated to the trivial representation
long verlinde_sl2(const std::vector<int>& a, int K) {
    std::vector<long> v(K + 1, 0);
    v[0] = 1;
    for (int x : a) {
        std::vector<long> nv(K + 1, 0);
        for (int p = 0; p <= K; ++p) {
            if (!v[p]) continue;
            for (int c = 0; c <= K; ++c)
                if ((p + x + c) % 2 == 0 && c >= std::abs(p - x) && c <= p + x && p + x + c <= 2 * K) nv[c] += v[p];
        }
        v = std::move(nv);
    }
    return v[0];
}

std::vector<CheckResult> suite_forms(const Ctx& c) {
    FreeAlgebra A(c.C);
    int d5 = std::min(c.depth, 5), d4 = std::min(c.depth, 4);
    auto nus = weights_up_to(c.n, d5);
    Tally sym("forms", "S.symmetric"), contra("forms", "S.contravariance"), hopf("forms", "S.hopf"),
        perm("forms", "S.permutation_sum"), serre("forms", "S.serre_in_kernel"), degen("forms", "S.sl2_degeneration"),
        symL("forms", "S_Lambda.symmetric"), oracle("forms", "S_Lambda.closed_formula");
    for (auto& nu : nus) sym.check(A.gram_S(nu).is_symmetric(), "nu=" + vstr(nu));
    for (int len = 0; len < d4; ++len)
        for (auto& x : all_words(c.n, len))
            for (int i = 0; i < c.n; ++i) {
                RootVec wt = c.C.weight(x);
                wt[i] += 1;
                for (auto& y : words_of_weight(wt)) {
                    Elem ty = delta_i(c.C, i, Elem{{y, c.F->one()}});
                    contra.check(A.form_S(concat({i}, x), y) == A.form_S(Elem{{x, c.F->one()}}, ty),
                                 "x=" + wstr(x) + " y=" + wstr(y));
                }
            }
    for (int len = 0; len <= d4; ++len)
        for (auto& x : all_words(c.n, len)) {
            Tensor dx = comult(c.C, x);
            for (int a = 0; a <= len; ++a)
                for (auto& y : all_words(c.n, a))
                    for (auto& yp : all_words(c.n, len - a)) {
                        if (c.C.weight(concat(y, yp)) != c.C.weight(x)) continue;
                        Tensor t{{{y, yp}, c.F->one()}};
                        hopf.check(A.form_S(x, concat(y, yp)) == pair_tensor(A, dx, t),
                                   "x=" + wstr(x) + " y=" + wstr(y) + "|" + wstr(yp));
                    }
        }
    for (int len = 0; len <= std::min(c.depth, 4); ++len)
        for (auto& x : all_words(c.n, len))
            for (auto& y : words_of_weight(c.C.weight(x)))
                perm.check(form_S_perm(c.C, x, y) == A.form_S(x, y), "x=" + wstr(x) + " y=" + wstr(y));
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            if (i == j) continue;
            Elem e = serre_element(c.C, c.D, i, j);
            RootVec wt = c.C.weight(e.begin()->first);
            for (auto& w : words_of_weight(wt))
                serre.check(A.form_S(e, Elem{{w, c.F->one()}}).is_zero(),
                            "i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
    if (c.n == 1) {
        int drop = c.cfg.l % 2 ? c.cfg.l : c.cfg.l / 2;
        for (int a = 1; a <= std::max(drop, c.depth); ++a)
            degen.check(A.dim_f({a}) == (a < drop ? 1 : 0), "a=" + std::to_string(a));
    }
    for (auto& W : c.Ws) {
        Verma V(c.C, lam_of(c.D, W));
        for (auto& nu : weights_up_to(c.n, d4)) symL.check(V.gram(nu).is_symmetric(), "nu=" + vstr(nu) + " Lambda=" + weight_str(W));
        if (!c.D.simply_laced()) continue;
        for (auto& nu : nus)
            for (auto& x : words_of_weight(nu))
                for (auto& y : words_of_weight(nu))
                    oracle.check(V.form(x, y) == V.form_oracle(x, y),
                                 "x=" + wstr(x) + " y=" + wstr(y) + " Lambda=" + weight_str(W));
    }
    std::vector<CheckResult> out{sym.r, contra.r, hopf.r, perm.r};
    if (c.n > 1) out.push_back(serre.r);
    if (c.n == 1) out.push_back(degen.r);
    out.push_back(symL.r);
    if (c.D.simply_laced()) out.push_back(oracle.r);
    return out;
}

std::vector<CheckResult> suite_coaction(const Ctx& c) {
    FreeAlgebra A(c.C);
    int dadj = std::min(c.depth, c.n == 1 ? 5 : 4), dco = std::min(c.depth, 4);
    Tally adj("coaction", "coaction.adjunction"), coas("coaction", "coaction.coassociativity");
    for (auto& W : c.Ws) {
        Verma V(c.C, lam_of(c.D, W));
        for (int N = 0; N <= dadj; ++N)
            for (auto& z : all_words(c.n, N)) {
                Tensor t = coaction(V, z);
                for (int a = 0; a <= N; ++a)
                    for (auto& x : all_words(c.n, a))
                        for (auto& y : all_words(c.n, N - a)) {
                            if (c.C.weight(concat(x, y)) != c.C.weight(z)) continue;
                            adj.check(V.form(concat(x, y), z) == pair_coaction(A, V, x, y, t),
                                      "x=" + wstr(x) + " y=" + wstr(y) + " z=" + wstr(z) + " Lambda=" + weight_str(W));
                        }
            }
        for (int N = 0; N <= dco; ++N)
            for (auto& z : all_words(c.n, N)) {
                Tensor t = coaction(V, z), L, R;
                for (auto& [k, v] : t) {
                    for (auto& [k2, v2] : coaction(V, k[1])) add_tensor(L, {k[0], k2[0], k2[1]}, v * v2);
                    for (auto& [k2, v2] : comult(c.C, k[0], 2)) add_tensor(R, {k2[0], k2[1], k[1]}, v * v2);
                }
                coas.check(L == R, "z=" + wstr(z) + " Lambda=" + weight_str(W));
            }
    }
    return {adj.r, coas.r};
}

std::vector<CheckResult> suite_hochschild(const Ctx& c) {
    Tally d2("hochschild", "hochschild.d_squared"), smap("hochschild", "hochschild.S_chain_map"),
        avg("hochschild", "hochschild.average_chain_map"), inter("hochschild", "hochschild.average_intertwines_S");
    std::vector<std::vector<std::vector<long>>> lamsets;
    for (auto& W : c.Ws) lamsets.push_back({lam_of(c.D, W)});
    if (c.Ws.size() >= 2) lamsets.push_back({lam_of(c.D, c.Ws[0]), lam_of(c.D, c.Ws[1])});
    for (auto& lams : lamsets) {
        int dmax = std::min(c.depth, lams.size() == 1 ? 4 : 3);
        for (auto& nu : weights_up_to(c.n, dmax)) {
            HochData H{c.C, lams, nu};
            std::string tag = "nu=" + vstr(nu) + " n=" + std::to_string(lams.size());
            HochComplex X = build_complex(H), Y = build_dual_complex(H);
            d2.check(X.cx.d_squared_zero() && Y.cx.d_squared_zero(), tag);
            ChainMap S = shapovalov_map(H, X);
            smap.check(is_chain_map(X.cx, Y.cx, S), tag);
            if (depth(nu) < 2 || depth(nu) > 3) continue;
            auto pi = sorted_unfolding(nu);
            HochData HJ = unfold(H, pi);
            HochComplex XJ = build_complex(HJ);
            ChainMap Av = average_map(H, X, HJ, XJ, pi);
            avg.check(is_chain_map(X.cx, XJ.cx, Av), tag);
            ChainMap SJ = shapovalov_map(HJ, XJ);
            bool ok = true;
            for (size_t k = 0; k < Av.f.size(); ++k) ok = ok && SJ.f[k] * Av.f[k] == Av.f[k] * S.f[k];
            inter.check(ok, tag);
        }
    }
    return {d2.r, smap.r, avg.r, inter.r};
}

std::vector<Blocks> all_chambers(int N) {
    std::vector<int> p(N + 1);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Blocks> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// separating hyperplanes of two chambers: pairs of coordinates in J u {o} ordered differently
bool separates(const Blocks& a, const Blocks& b, int x, int y) { return (a[x] < a[y]) != (b[x] < b[y]); }

std::vector<CheckResult> suite_arrangement(const Ctx& c) {
    Tally d2("arrangement", "arrangement.d_squared"), mchain("arrangement", "arrangement.m_chain_map"),
        msym("arrangement", "arrangement.m_symmetric"), euler("arrangement", "arrangement.euler_lambda_independent"),
        qmul("arrangement", "arrangement.q_multiplicative"), one("arrangement", "arrangement.one_point");
    int dA = std::min(c.depth, c.n == 1 ? 4 : 3);
    for (auto& nu : weights_up_to(c.n, dA)) {
        auto pi = sorted_unfolding(nu);
        std::vector<int> chis;
        for (auto& W : c.Ws) {
            auto A = ConfigArrangement::make(c.D, c.F, pi, W);
            std::string tag = "nu=" + vstr(nu) + " Lambda=" + weight_str(W);
            ArrComplex P = complex_shriek(A), S = full_complex(A, Extension::shriek), T = full_complex(A, Extension::star);
            ChainComplex I = ic_complex(A);
            d2.check(P.cx.d_squared_zero() && S.cx.d_squared_zero() && T.cx.d_squared_zero() && I.d_squared_zero(), tag);
            ChainMap m = m_map(A, S, T);
            mchain.check(is_chain_map(S.cx, T.cx, m), tag);
            bool sym = true;
            for (auto& M : m.f) sym = sym && M.is_symmetric();
            msym.check(sym, tag);
            chis.push_back(euler_characteristic(cohomology_dims(P.cx), P.cx.lo));
        }
        euler.check(std::adjacent_find(chis.begin(), chis.end(), std::not_equal_to<>()) == chis.end(),
                    "nu=" + vstr(nu));
        if (depth(nu) > 3) continue;
        auto A = ConfigArrangement::make(c.D, c.F, pi, c.Ws.front());
        int N = A.N();
        auto ch = all_chambers(N);
        for (auto& a : ch)
            for (auto& b : ch)
                for (auto& e : ch) {
                    bool between = true;
                    for (int x = 0; x <= N && between; ++x)
                        for (int y = x + 1; y <= N && between; ++y)
                            between = separates(a, e, x, y) == (separates(a, b, x, y) != separates(b, e, x, y)) &&
                                      !(separates(a, b, x, y) && separates(b, e, x, y));
                    if (!between) continue;
                    qmul.check(q_separating(a, b, A) * q_separating(b, e, A) == q_separating(a, e, A),
                               "nu=" + vstr(nu) + " " + blocks_str(a) + " " + blocks_str(b) + " " + blocks_str(e));
                }
    }
    for (auto& W : c.Ws) {
        auto lam = lam_of(c.D, W);
        for (int i = 0; i < c.n; ++i) {
            OnePoint P = one_point(c.F, c.C, i, lam[i]);
            const CycNum& q = P.q;
            CycNum o = c.F->one(), z = c.F->zero(), qi = q.inv();
            auto mk = [&](CycNum a, CycNum b, CycNum d, CycNum e) {
                Matrix M(c.F, 2, 2);
                M(0, 0) = a;
                M(0, 1) = b;
                M(1, 0) = d;
                M(1, 1) = e;
                return M;
            };
            bool ok = q == c.F->zeta_pow(-lam[i]) && P.m == mk(o, q, q, o) && P.u_shriek == mk(o, z, z, -o) &&
                      P.u_star == mk(o, q, -q, -o) && P.v_shriek == mk(o, -qi, qi, -o) && P.v_star == mk(z, -qi, qi, z);
            one.check(ok, "color=" + std::to_string(i) + " Lambda=" + weight_str(W));
        }
    }
    return {d2.r, mchain.r, msym.r, euler.r, qmul.r, one.r};
}

std::vector<CheckResult> suite_comparison(const Ctx& c) {
    Tally phi("comparison", "comparison.phi_chain_isomorphism"), tor("comparison", "comparison.skew_shriek_vs_tor"),
        star("comparison", "comparison.skew_star_vs_dual"), ic("comparison", "comparison.skew_ic_vs_image_of_S"),
        diag("comparison", "comparison.diagonal_m_vs_S");
    int dA = std::min(c.depth, 4);
    for (auto& nu : weights_up_to(c.n, dA)) {
        auto pi = sorted_unfolding(nu);
        for (auto& W : c.Ws) {
            auto A = ConfigArrangement::make(c.D, c.F, pi, W);
            std::string tag = "nu=" + vstr(nu) + " Lambda=" + weight_str(W);
            HochData H = hoch_data(A);
            ArrComplex P = complex_shriek(A);
            HochComplex X = build_complex(unfold(H, pi));
            ChainMap f = phi_iso(A, P, X, identity_eta(A.N()));
            phi.check(is_chain_map(P.cx, X.cx, f) && invertible_map(f), tag);
            tor.check(cohomology_dims(skew_symmetrize(A, P, true)) == tor_dims(H), tag);
            star.check(cohomology_dims(arrangement_complex(A, Extension::star, true)) ==
                           cohomology_dims(build_dual_complex(H).cx),
                       tag);
            ic.check(cohomology_dims(skew_ic_complex(A)) == cohomology_dims(build_complex_f(H)), tag);
        }
        auto A = ConfigArrangement::make(c.D, c.F, pi, {}, ArrFlavor::diagonal);
        DiagonalData dd = diagonal_m_matrix(A);
        FreeAlgebra FJ(A.colors.unfold(pi));
        auto eta = identity_eta(A.N());
        auto tau_of = [](const Word& w) {
            Blocks t(w.size());
            for (size_t k = 0; k < w.size(); ++k) t[w[k]] = static_cast<int>(w.size() - k);
            return t;
        };
        int m = static_cast<int>(dd.sequences.size());
        bool ok = true;
        for (int a = 0; a < m && ok; ++a)
            for (int b = 0; b < m && ok; ++b) {
                int s = sign_tau_eta(tau_of(dd.sequences[a]), eta) * sign_tau_eta(tau_of(dd.sequences[b]), eta);
                ok = dd.m_oriented(a, b) * c.F->integer(s) == FJ.form_S(dd.sequences[a], dd.sequences[b]);
            }
        diag.check(ok, "nu=" + vstr(nu));
    }
    return {phi.r, tor.r, star.r, ic.r, diag.r};
}

std::vector<CheckResult> suite_blocks(const Ctx& c) {
    EllData E = make_ell_data(c.D, c.cfg.l);
    auto alc = alcove_weights(c.D, E);
    Tally rel("blocks", "blocks.module_relations"), inv("blocks", "blocks.dual_involution"),
        pair("blocks", "blocks.pairing_with_dual"), sym("blocks", "blocks.permutation_symmetric"),
        ver("blocks", "blocks.verlinde_sl2");
    std::vector<CModule> Ls;
    for (auto& l : alc) Ls.push_back(irreducible_module(c.D, c.F, l));
    for (size_t a = 0; a < alc.size(); ++a) {
        std::string tag = "lambda=" + weight_str(alc[a]);
        rel.check(check_relations(Ls[a], 6).ok(), tag);
        for (auto fl : {DualFlavor::vee, DualFlavor::star}) {
            CModule Dl = dual(Ls[a], fl);
            rel.check(check_relations(Dl, 6).ok(), tag + " dual");
            inv.check(dual(Dl, fl).dims == Ls[a].dims, tag);
        }
    }
    size_t small = std::min<size_t>(alc.size(), 3);
    for (size_t a = 0; a < small; ++a)
        for (size_t b = 0; b < small; ++b)
            rel.check(check_relations(tensor(Ls[a], Ls[b]), 0).ok(),
                      "lambda=" + weight_str(alc[a]) + " (x) " + weight_str(alc[b]));
    for (auto& a : alc)
        for (auto& b : alc)
            pair.check(conformal_blocks(c.D, c.F, E, {a, b}) == (b == dual_weight(c.D, a) ? 1 : 0),
                       weight_str(a) + " " + weight_str(b));
    size_t t = std::min<size_t>(alc.size(), 4);
    for (size_t a = 0; a < t; ++a)
        for (size_t b = a; b < t; ++b)
            for (size_t d = b; d < t; ++d) {
                std::vector<size_t> idx{a, b, d};
                int ref = -1;
                do {
                    int v = conformal_blocks(c.D, c.F, E, {alc[idx[0]], alc[idx[1]], alc[idx[2]]});
                    if (ref < 0) ref = v;
                    sym.check(v == ref, weight_str(alc[a]) + " " + weight_str(alc[b]) + " " + weight_str(alc[d]));
                } while (std::next_permutation(idx.begin(), idx.end()));
            }
    std::vector<CheckResult> out{rel.r, inv.r, pair.r, sym.r};
    if (c.n == 1) {
        int K = E.ell - 2;
        std::vector<int> as;
        for (auto& w : alc) as.push_back(static_cast<int>(w[0].get_num().get_si()));
        for (int n = 1; n <= 3; ++n) {
            std::vector<size_t> idx(n, 0);
            while (true) {
                std::vector<int> a;
                std::vector<Weight> ws;
                for (size_t i : idx) {
                    a.push_back(as[i]);
                    ws.push_back(alc[i]);
                }
                ver.check(conformal_blocks(c.D, c.F, E, ws) == verlinde_sl2(a, K), "weights " + vstr(a));
                int p = n - 1;
                while (p >= 0 && ++idx[p] == as.size()) idx[p--] = 0;
                if (p < 0) break;
            }
        }
        out.push_back(ver.r);
    }
    return out;
}

}  // namespace

std::vector<RootVec> weights_up_to(int rank, int max_depth) {
    std::vector<RootVec> out;
    for (int d = 1; d <= max_depth; ++d) {
        RootVec v(rank, 0);
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == rank - 1) {
                v[i] = left;
                out.push_back(v);
                return;
            }
            for (int a = left; a >= 0; --a) {
                v[i] = a;
                rec(i + 1, left - a);
            }
        };
        rec(0, d);
    }
    return out;
}

std::vector<Weight> alcove_weights(const CartanDatum& D, const EllData& E) {
    int n = D.rank();
    std::vector<Weight> out;
    Weight w(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            if (in_first_alcove(D, E, w)) out.push_back(w);
            return;
        }
        for (int a = 0; a <= E.ell; ++a) {
            w[i] = a;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

Weight dual_weight(const CartanDatum& D, const Weight& lambda) {
    int n = D.rank();
    Weight mu = D.rho(), x = lambda;
    auto reflect = [&](Weight& w, int i) {
        mpq_class c = w[i];
        for (int j = 0; j < n; ++j) w[j] -= c * D.cartan(i, j);
    };
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i < n; ++i)
            if (mu[i] > 0) {
                reflect(mu, i);
                reflect(x, i);
                moved = true;
            }
    }
    for (auto& v : x) v = -v;
    return x;
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> s{"forms", "coaction", "hochschild", "arrangement", "comparison", "blocks"};
    return s;
}

std::vector<CheckResult> run_verify(const VerifyConfig& cfg, const std::string& suite) {
    const auto& names = verify_suites();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw ParameterError("unknown suite: " + suite);
    const CycField* F = field_for(cfg.D, cfg.l, cfg.k);
    Ctx c{cfg, cfg.D, F, Colors::of(cfg.D, F), cfg.D.rank(), cfg.weights, cfg.max_depth};
    if (c.depth < 0) c.depth = c.n == 1 ? 4 : 3;
    if (c.Ws.empty()) {
        std::mt19937 rng(cfg.seed);
        std::uniform_int_distribution<int> dist(-2, 2 * cfg.l);
        for (int s = 0; s < 3; ++s) {
            Weight W;
            for (int i = 0; i < c.n; ++i) W.push_back(dist(rng));
            c.Ws.push_back(W);
        }
    }
    std::vector<CheckResult> out;
    auto add = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    if (want("forms")) add(suite_forms(c));
    if (want("coaction")) add(suite_coaction(c));
    if (want("hochschild")) add(suite_hochschild(c));
    if (want("arrangement")) add(suite_arrangement(c));
    if (want("comparison")) add(suite_comparison(c));
    if (want("blocks")) add(suite_blocks(c));
    return out;
}

}  // namespace qs
