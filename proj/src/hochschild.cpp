#include "qsheaf/hochschild.hpp"

#include <algorithm>
#include <functional>

namespace qs {

int HochComplex::index(int degree, const HochLabel& l) const {
    const auto& L = labels[degree - cx.lo];
    auto it = std::lower_bound(L.begin(), L.end(), l);
    if (it == L.end() || *it != l) return -1;
    return static_cast<int>(it - L.begin());
}

namespace {

void add_tensor(Tensor& t, const std::vector<Word>& k, const CycNum& c) {
    if (c.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
        t.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

// lambda_j . i' for x_j of weight wt in V(Lambda_j)
long pair_of(const Colors& C, const std::vector<long>& lam, const Word& x, int i) {
    long p = lam[i];
    for (int a : x) p -= C.dot[a][i];
    return p;
}

// exponent of the sign rule: -sum_{j<i} <lambda_j, nu_i>
long sign_rule(const Colors& C, const std::vector<std::vector<long>>& lams, const std::vector<Word>& x,
               const std::vector<Word>& u) {
    long e = 0;
    for (size_t i = 0; i < u.size(); ++i)
        for (int a : u[i])
            for (size_t j = 0; j < i; ++j) e -= pair_of(C, lams[j], x[j], a);
    return e;
}

std::vector<RootVec> sub_weights(const RootVec& nu) {
    std::vector<RootVec> out;
    RootVec cur(nu.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == nu.size()) {
            out.push_back(cur);
            return;
        }
        for (int a = 0; a <= nu[i]; ++a) {
            cur[i] = a;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

RootVec minus(const RootVec& a, const RootVec& b) {
    RootVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

}  // namespace

Tensor tensor_action(const Colors& C, const std::vector<std::vector<long>>& lams, const Word& u,
                     const std::vector<Word>& x) {
    int n = static_cast<int>(x.size());
    Tensor out;
    for (auto& [parts, c] : comult(C, u, n)) {
        std::vector<Word> y(n);
        for (int j = 0; j < n; ++j) {
            y[j] = parts[j];
            y[j].insert(y[j].end(), x[j].begin(), x[j].end());
        }
        add_tensor(out, y, c * C.z(sign_rule(C, lams, x, parts)));
    }
    return out;
}

std::vector<std::vector<HochLabel>> hoch_labels(const HochData& H) {
    int N = depth(H.nu);
    int n = H.n();
    std::vector<std::vector<HochLabel>> out(N + 1);
    for (int r = 0; r <= N; ++r) {
        std::vector<RootVec> slots;
        std::vector<HochLabel>& L = out[N - r];
        std::function<void(const RootVec&)> rec = [&](const RootVec& rest) {
            int k = static_cast<int>(slots.size());
            if (k == r + n - 1) {
                slots.push_back(rest);
                // expand to words
                std::vector<std::vector<Word>> choices;
                for (auto& s : slots) choices.push_back(words_of_weight(s));
                HochLabel cur;
                std::function<void(size_t)> fill = [&](size_t a) {
                    if (a == choices.size()) {
                        L.push_back(cur);
                        return;
                    }
                    for (auto& w : choices[a]) {
                        cur.push_back(w);
                        fill(a + 1);
                        cur.pop_back();
                    }
                };
                fill(0);
                slots.pop_back();
                return;
            }
            for (auto& s : sub_weights(rest)) {
                if (k < r && depth(s) == 0) continue;
                slots.push_back(s);
                rec(minus(rest, s));
                slots.pop_back();
            }
        };
        if (n < 1) continue;
        rec(H.nu);
        std::sort(L.begin(), L.end());
    }
    return out;
}

namespace {

HochComplex skeleton(const HochData& H) {
    if (H.n() < 1) throw ParameterError("hochschild: need at least one module");
    HochComplex X;
    X.labels = hoch_labels(H);
    int N = depth(H.nu);
    X.cx.F = H.C.F;
    X.cx.lo = -N;
    for (auto& L : X.labels) X.cx.dims.push_back(static_cast<int>(L.size()));
    return X;
}

}  // namespace

HochComplex build_complex(const HochData& H) {
    HochComplex X = skeleton(H);
    const Colors& C = H.C;
    int N = depth(H.nu);
    for (int r = N; r >= 1; --r) {
        const auto& src = X.labels[N - r];
        Matrix D(C.F, X.cx.dim(-r + 1), X.cx.dim(-r));
        for (size_t c = 0; c < src.size(); ++c) {
            const HochLabel& l = src[c];
            auto put = [&](const HochLabel& t, const CycNum& v) {
                int row = X.index(-r + 1, t);
                if (row < 0) throw ContractViolation("hochschild: face lands outside the basis");
                D(row, static_cast<int>(c)) += v;
            };
            // slot k < r holds a_{r-k}
            for (int p = 1; p <= r - 1; ++p) {
                HochLabel t;
                for (int k = 0; k < r; ++k) {
                    if (k == r - p) continue;
                    if (k == r - p - 1) {
                        Word w = l[k];
                        w.insert(w.end(), l[k + 1].begin(), l[k + 1].end());
                        t.push_back(w);
                    } else {
                        t.push_back(l[k]);
                    }
                }
                t.insert(t.end(), l.begin() + r, l.end());
                put(t, p % 2 ? -C.F->one() : C.F->one());
            }
            std::vector<Word> mods(l.begin() + r, l.end());
            for (auto& [y, v] : tensor_action(C, H.lams, l[r - 1], mods)) {
                HochLabel t(l.begin(), l.begin() + (r - 1));
                t.insert(t.end(), y.begin(), y.end());
                put(t, v);
            }
        }
        X.cx.d.push_back(std::move(D));
    }
    X.cx.check();
    return X;
}

namespace {

// x* . y* in 'f*: sum over shuffles z of x and y of the coefficient of x (x) y in Delta(z)
std::vector<std::pair<Word, CycNum>> dual_product(const Colors& C, const Word& x, const Word& y) {
    std::vector<std::pair<Word, CycNum>> out;
    int a = static_cast<int>(x.size()), b = static_cast<int>(y.size()), n = a + b;
    std::vector<int> g(n, 1);
    std::fill(g.begin(), g.begin() + a, 0);
    std::map<Word, CycNum> acc;
    do {
        Word z(n);
        int ia = 0, ib = 0;
        for (int p = 0; p < n; ++p) z[p] = g[p] == 0 ? x[ia++] : y[ib++];
        long e = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                if (g[p] > g[q]) e += C.dot[z[p]][z[q]];
        auto it = acc.find(z);
        if (it == acc.end())
            acc.emplace(z, C.z(e));
        else
            it->second += C.z(e);
    } while (std::next_permutation(g.begin(), g.end()));
    for (auto& [z, c] : acc)
        if (!c.is_zero()) out.emplace_back(z, c);
    return out;
}

// u* . y* in V(Lambda)*: coefficient of u (x) y in Delta_Lambda(z)
class DualAction {
public:
    DualAction(const Colors& C, std::vector<long> lam) : V_(C, std::move(lam)) {}
    const std::vector<std::pair<Word, CycNum>>& act(const Word& u, const Word& y) {
        Word key = u;
        key.push_back(-1);
        key.insert(key.end(), y.begin(), y.end());
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        RootVec wt = V_.colors().weight(u);
        RootVec wy = V_.colors().weight(y);
        for (size_t i = 0; i < wt.size(); ++i) wt[i] += wy[i];
        auto& tab = table(wt);
        std::vector<std::pair<Word, CycNum>> out;
        auto f = tab.find({u, y});
        if (f != tab.end()) out = f->second;
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    Verma V_;
    std::map<RootVec, std::map<std::vector<Word>, std::vector<std::pair<Word, CycNum>>>> tables_;
    std::map<Word, std::vector<std::pair<Word, CycNum>>> memo_;
    std::map<std::vector<Word>, std::vector<std::pair<Word, CycNum>>>& table(const RootVec& wt) {
        auto it = tables_.find(wt);
        if (it != tables_.end()) return it->second;
        auto& tab = tables_[wt];
        for (auto& z : words_of_weight(wt))
            for (auto& [k, c] : coaction(V_, z)) tab[k].emplace_back(z, c);
        return tab;
    }
};

}  // namespace

HochComplex build_dual_complex(const HochData& H) {
    HochComplex X = skeleton(H);
    const Colors& C = H.C;
    int N = depth(H.nu);
    int n = H.n();
    std::vector<DualAction> acts;
    for (auto& l : H.lams) acts.emplace_back(C, l);
    for (int r = N; r >= 1; --r) {
        const auto& src = X.labels[N - r];
        Matrix D(C.F, X.cx.dim(-r + 1), X.cx.dim(-r));
        for (size_t c = 0; c < src.size(); ++c) {
            const HochLabel& l = src[c];
            auto put = [&](const HochLabel& t, const CycNum& v) {
                int row = X.index(-r + 1, t);
                if (row < 0) throw ContractViolation("hochschild: dual face lands outside the basis");
                D(row, static_cast<int>(c)) += v;
            };
            for (int p = 1; p <= r - 1; ++p) {
                int k0 = r - p - 1;
                for (auto& [z, v] : dual_product(C, l[k0], l[k0 + 1])) {
                    HochLabel t(l.begin(), l.begin() + k0);
                    t.push_back(z);
                    t.insert(t.end(), l.begin() + k0 + 2, l.end());
                    put(t, p % 2 ? -v : v);
                }
            }
            // last face: split a_1* by the transpose of concatenation, sign rule, then coaction transposes
            const Word& a = l[r - 1];
            std::vector<Word> mods(l.begin() + r, l.end());
            std::vector<int> cut(n + 1, 0);
            cut[n] = static_cast<int>(a.size());
            auto emit = [&]() {
                std::vector<Word> parts(n);
                for (int q = 0; q < n; ++q) parts[q] = Word(a.begin() + cut[q], a.begin() + cut[q + 1]);
                CycNum s = C.z(sign_rule(C, H.lams, mods, parts));
                // distribute over the modules
                std::vector<std::pair<std::vector<Word>, CycNum>> acc{{{}, s}};
                for (int q = 0; q < n; ++q) {
                    std::vector<std::pair<std::vector<Word>, CycNum>> nx;
                    for (auto& [ys, cv] : acc)
                        for (auto& [z, v] : acts[q].act(parts[q], mods[q])) {
                            auto y2 = ys;
                            y2.push_back(z);
                            nx.emplace_back(std::move(y2), cv * v);
                        }
                    acc = std::move(nx);
                }
                for (auto& [ys, cv] : acc) {
                    HochLabel t(l.begin(), l.begin() + (r - 1));
                    t.insert(t.end(), ys.begin(), ys.end());
                    put(t, cv);
                }
            };
            // cut[0] = 0, cut[1..n-1] nondecreasing, cut[n] = |a|
            std::function<void(int, int)> choose = [&](int j, int lo) {
                if (j == n) {
                    emit();
                    return;
                }
                for (int c2 = lo; c2 <= static_cast<int>(a.size()); ++c2) {
                    cut[j] = c2;
                    choose(j + 1, c2);
                }
            };
            choose(1, 0);
        }
        X.cx.d.push_back(std::move(D));
    }
    X.cx.check();
    return X;
}

ChainMap shapovalov_map(const HochData& H, const HochComplex& X) {
    FreeAlgebra A(H.C);
    std::vector<Verma> Vs;
    for (auto& l : H.lams) Vs.emplace_back(H.C, l);
    int N = depth(H.nu);
    ChainMap S;
    for (int r = N; r >= 0; --r) {
        const auto& L = X.labels[N - r];
        int m = static_cast<int>(L.size());
        Matrix M(H.C.F, m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                CycNum v = H.C.F->one();
                for (size_t k = 0; k < L[a].size() && !v.is_zero(); ++k) {
                    if (H.C.weight(L[a][k]) != H.C.weight(L[b][k])) {
                        v = H.C.F->zero();
                        break;
                    }
                    if (static_cast<int>(k) < r)
                        v *= A.form_S(L[a][k], L[b][k]);
                    else
                        v *= Vs[k - r].form(L[a][k], L[b][k]);
                }
                M(b, a) = v;
            }
        S.f.push_back(std::move(M));
    }
    return S;
}

std::vector<int> tor_dims(const HochData& H) { return cohomology_dims(build_complex(H).cx); }

ChainComplex build_complex_f(const HochData& H) {
    HochComplex X = build_complex(H);
    HochComplex Y = build_dual_complex(H);
    ChainMap S = shapovalov_map(H, X);
    if (!is_chain_map(X.cx, Y.cx, S)) throw ContractViolation("build_complex_f: S is not a chain map");
    return image_complex(X.cx, Y.cx, S);
}

Elem symmetrize_average(const std::vector<int>& pi, const Elem& x) {
    Elem out;
    for (auto& [w, c] : x) {
        std::vector<int> count(1, 0);
        for (int i : w) {
            if (i >= static_cast<int>(count.size())) count.resize(i + 1, 0);
            ++count[i];
        }
        std::vector<int> have(count.size(), 0);
        for (int i : pi) {
            if (i >= static_cast<int>(have.size())) throw ParameterError("symmetrize_average: pi is not an unfolding");
            ++have[i];
        }
        if (have != count) throw ParameterError("symmetrize_average: pi is not an unfolding of the weight");
        Word cur;
        std::vector<bool> used(pi.size(), false);
        std::function<void(size_t)> rec = [&](size_t p) {
            if (p == w.size()) {
                add_to(out, cur, c);
                return;
            }
            for (size_t j = 0; j < pi.size(); ++j) {
                if (used[j] || pi[j] != w[p]) continue;
                used[j] = true;
                cur.push_back(static_cast<int>(j));
                rec(p + 1);
                cur.pop_back();
                used[j] = false;
            }
        };
        rec(0);
    }
    return out;
}

HochData unfold(const HochData& H, const std::vector<int>& pi) {
    RootVec cnt(H.nu.size(), 0);
    for (int i : pi) {
        if (i < 0 || i >= static_cast<int>(cnt.size())) throw ParameterError("unfold: bad color");
        ++cnt[i];
    }
    if (cnt != H.nu) throw ParameterError("unfold: pi is not an unfolding of nu");
    HochData J;
    J.C = H.C.unfold(pi);
    for (auto& l : H.lams) {
        std::vector<long> lj;
        for (int i : pi) lj.push_back(l[i]);
        J.lams.push_back(std::move(lj));
    }
    J.nu = RootVec(pi.size(), 1);
    return J;
}

ChainMap average_map(const HochData& H, const HochComplex& X, const HochData& HJ, const HochComplex& XJ,
                     const std::vector<int>& pi) {
    (void)HJ;
    int N = depth(H.nu);
    ChainMap A;
    for (int r = N; r >= 0; --r) {
        const auto& L = X.labels[N - r];
        Matrix M(H.C.F, XJ.cx.dim(-r), X.cx.dim(-r));
        for (size_t c = 0; c < L.size(); ++c) {
            Word flat;
            std::vector<size_t> len;
            for (auto& w : L[c]) {
                flat.insert(flat.end(), w.begin(), w.end());
                len.push_back(w.size());
            }
            for (auto& [lift, v] : symmetrize_average(pi, Elem{{flat, H.C.F->one()}})) {
                HochLabel t;
                size_t pos = 0;
                for (size_t k : len) {
                    t.emplace_back(lift.begin() + pos, lift.begin() + pos + k);
                    pos += k;
                }
                int row = XJ.index(-r, t);
                if (row < 0) throw ContractViolation("average_map: lift outside the basis");
                M(row, static_cast<int>(c)) += v;
            }
        }
        A.f.push_back(std::move(M));
    }
    return A;
}

Matrix permutation_action(const HochComplex& X, int degree, const std::vector<int>& sigma) {
    const auto& L = X.labels[degree - X.cx.lo];
    Matrix M(X.cx.F, static_cast<int>(L.size()), static_cast<int>(L.size()));
    for (size_t c = 0; c < L.size(); ++c) {
        HochLabel t = L[c];
        for (auto& w : t)
            for (auto& a : w) a = sigma[a];
        int row = X.index(degree, t);
        if (row < 0) throw ContractViolation("permutation_action: sigma does not preserve the basis");
        M(row, static_cast<int>(c)) = X.cx.F->one();
    }
    return M;
}

}  // namespace qs
