#include "qsheaf/freealg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qs {

Colors Colors::of(const CartanDatum& D, const CycField* F) {
    Colors c;
    c.F = F;
    c.dot = D.dot_matrix();
    return c;
}

Colors Colors::unfold(const std::vector<int>& pi) const {
    Colors c;
    c.F = F;
    int n = static_cast<int>(pi.size());
    c.dot.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) c.dot[a][b] = dot[pi[a]][pi[b]];
    return c;
}

int Colors::dot_words(const Word& a, const Word& b) const {
    int s = 0;
    for (int x : a)
        for (int y : b) s += dot[x][y];
    return s;
}

int Colors::dot_letter(const RootVec& nu, int i) const {
    int s = 0;
    for (int j = 0; j < size(); ++j) s += nu[j] * dot[j][i];
    return s;
}

RootVec Colors::weight(const Word& w) const {
    RootVec nu(size(), 0);
    for (int x : w) ++nu[x];
    return nu;
}

bool Colors::simply_laced() const {
    for (int i = 0; i < size(); ++i)
        if (dot[i][i] != 2) return false;
    return true;
}

std::vector<Word> words_of_weight(const RootVec& nu) {
    std::vector<Word> out;
    Word cur;
    RootVec rem = nu;
    int total = depth(nu);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == total) {
            out.push_back(cur);
            return;
        }
        for (size_t i = 0; i < rem.size(); ++i) {
            if (rem[i] == 0) continue;
            --rem[i];
            cur.push_back(static_cast<int>(i));
            rec();
            cur.pop_back();
            ++rem[i];
        }
    };
    rec();
    return out;
}

void add_to(Elem& e, const Word& w, const CycNum& c) {
    if (c.is_zero()) return;
    auto it = e.find(w);
    if (it == e.end()) {
        e.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
}

void add_to(Elem& e, const Elem& o, const CycNum& c) {
    for (auto& [w, v] : o) add_to(e, w, v * c);
}

Elem mul(const Colors& C, const Elem& a, const Elem& b) {
    (void)C;
    Elem r;
    for (auto& [x, u] : a)
        for (auto& [y, v] : b) {
            Word w = x;
            w.insert(w.end(), y.begin(), y.end());
            add_to(r, w, u * v);
        }
    return r;
}

Elem letter(const Colors& C, int i) { return Elem{{Word{i}, C.F->one()}}; }
Elem unit(const Colors& C) { return Elem{{Word{}, C.F->one()}}; }

CycNum twist_number(const Colors& C, const Word& K, const std::vector<int>& tau) {
    long e = 0;
    int n = static_cast<int>(K.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (tau[a] > tau[b]) e += C.dot[K[a]][K[b]];
    return C.z(e);
}

CycNum form_S_perm(const Colors& C, const Word& K, const Word& Kp) {
    CycNum s = C.F->zero();
    if (K.size() != Kp.size()) return s;
    int n = static_cast<int>(K.size());
    std::vector<int> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = Kp[tau[a]] == K[a];
        if (ok) s += twist_number(C, K, tau);
    } while (std::next_permutation(tau.begin(), tau.end()));
    return s;
}

Elem delta_i(const Colors& C, int i, const Elem& x) {
    Elem r;
    for (auto& [w, c] : x) {
        long pre = 0;
        for (size_t p = 0; p < w.size(); ++p) {
            if (w[p] == i) {
                Word rest = w;
                rest.erase(rest.begin() + static_cast<long>(p));
                add_to(r, rest, c * C.z(pre));
            }
            pre += C.dot[w[p]][i];
        }
    }
    return r;
}

FormCache::FormCache(const Colors& C, Lower lower) : C_(C), lower_(std::move(lower)) {}

const std::vector<Word>& FormCache::basis(const RootVec& nu) {
    std::lock_guard<std::mutex> lock(mu_);
    return basis_locked(nu);
}

const std::vector<Word>& FormCache::basis_locked(const RootVec& nu) {
    auto it = basis_.find(nu);
    if (it != basis_.end()) return it->second;
    auto ws = words_of_weight(nu);
    auto& idx = index_[nu];
    for (size_t i = 0; i < ws.size(); ++i) idx[ws[i]] = static_cast<int>(i);
    return basis_.emplace(nu, std::move(ws)).first->second;
}

const Matrix& FormCache::gram(const RootVec& nu) {
    std::lock_guard<std::mutex> lock(mu_);
    return gram_locked(nu);
}

const Matrix& FormCache::gram_locked(const RootVec& nu) {
    auto it = gram_.find(nu);
    if (it != gram_.end()) return it->second;
    const auto& B = basis_locked(nu);
    int n = static_cast<int>(B.size());
    Matrix G(C_.F, n, n);
    if (depth(nu) == 0) {
        G(0, 0) = C_.F->one();
    } else {
        for (int i = 0; i < C_.size(); ++i) {
            if (nu[i] == 0) continue;
            RootVec sub = nu;
            --sub[i];
            const Matrix& Gs = gram_locked(sub);
            const auto& idx = index_[sub];
            // images of basis vectors under the lowering operator
            std::vector<Elem> low(n);
            for (int c = 0; c < n; ++c) low[c] = lower_(i, B[c]);
            for (int r = 0; r < n; ++r) {
                if (B[r][0] != i) continue;
                Word rest(B[r].begin() + 1, B[r].end());
                int rr = idx.at(rest);
                for (int c = 0; c < n; ++c) {
                    CycNum s = C_.F->zero();
                    for (auto& [w, v] : low[c]) {
                        const CycNum& g = Gs(rr, idx.at(w));
                        if (!g.is_zero()) s += g * v;
                    }
                    G(r, c) = s;
                }
            }
        }
    }
    return gram_.emplace(nu, std::move(G)).first->second;
}

CycNum FormCache::form(const Elem& x, const Elem& y) {
    CycNum s = C_.F->zero();
    std::lock_guard<std::mutex> lock(mu_);
    for (auto& [a, u] : x)
        for (auto& [b, v] : y) {
            if (a.size() != b.size()) continue;
            RootVec wa = C_.weight(a);
            if (wa != C_.weight(b)) continue;
            const Matrix& G = gram_locked(wa);
            const auto& idx = index_[wa];
            const CycNum& g = G(idx.at(a), idx.at(b));
            if (!g.is_zero()) s += u * v * g;
        }
    return s;
}

FreeAlgebra::FreeAlgebra(Colors C) : C_(std::move(C)) {
    Colors c = C_;
    cache_ = std::make_shared<FormCache>(c, [c](int i, const Word& w) {
        return delta_i(c, i, Elem{{w, c.F->one()}});
    });
}

CycNum FreeAlgebra::form_S(const Word& x, const Word& y) {
    return cache_->form(Elem{{x, C_.F->one()}}, Elem{{y, C_.F->one()}});
}

CycNum FreeAlgebra::form_S(const Elem& x, const Elem& y) { return cache_->form(x, y); }
const Matrix& FreeAlgebra::gram_S(const RootVec& nu) { return cache_->gram(nu); }
const std::vector<Word>& FreeAlgebra::basis(const RootVec& nu) { return cache_->basis(nu); }
int FreeAlgebra::dim_f(const RootVec& nu) { return rank(gram_S(nu)); }

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

}  // namespace

Tensor comult(const Colors& C, const Word& K, int n) {
    Tensor t;
    int N = static_cast<int>(K.size());
    std::vector<int> g(N, 0);
    while (true) {
        long e = 0;
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
                if (g[a] > g[b]) e += C.dot[K[a]][K[b]];
        std::vector<Word> parts(n);
        for (int a = 0; a < N; ++a) parts[g[a]].push_back(K[a]);
        add_tensor(t, parts, C.z(e));
        int p = 0;
        while (p < N && ++g[p] == n) g[p++] = 0;
        if (p == N) break;
    }
    return t;
}

Tensor comult(const Colors& C, const Elem& x, int n) {
    Tensor t;
    for (auto& [w, c] : x)
        for (auto& [k, v] : comult(C, w, n)) add_tensor(t, k, v * c);
    return t;
}

Tensor iterated_comult_plus(const Colors& C, const Word& K) {
    Tensor t;
    int N = static_cast<int>(K.size());
    for (auto& [k, v] : comult(C, K, N)) {
        bool plus = true;
        for (auto& w : k)
            if (w.empty()) plus = false;
        if (plus) add_tensor(t, k, v);
    }
    return t;
}

Tensor tensor_mul(const Colors& C, const Tensor& a, const Tensor& b) {
    Tensor t;
    for (auto& [x, u] : a)
        for (auto& [y, v] : b) {
            size_t n = x.size();
            long e = 0;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < i; ++j) e += C.dot_words(x[i], y[j]);
            std::vector<Word> k(n);
            for (size_t i = 0; i < n; ++i) {
                k[i] = x[i];
                k[i].insert(k[i].end(), y[i].begin(), y[i].end());
            }
            add_tensor(t, k, u * v * C.z(e));
        }
    return t;
}

CycNum pair_tensor(FreeAlgebra& A, const Tensor& a, const Tensor& b) {
    const Colors& C = A.colors();
    CycNum s = C.F->zero();
    for (auto& [x, u] : a)
        for (auto& [y, v] : b) {
            CycNum p = u * v;
            for (size_t i = 0; i < x.size() && !p.is_zero(); ++i) p *= A.form_S(x[i], y[i]);
            s += p;
        }
    return s;
}

CycNum quantum_factorial(const CycField* F, int p, int d) {
    // prod_{s=1}^p (zeta_i^s - zeta_i^-s)/(zeta_i - zeta_i^-1)
    CycNum r = F->one();
    CycNum den = (F->zeta_pow(d) - F->zeta_pow(-d)).inv();
    for (int s = 1; s <= p; ++s) r *= (F->zeta_pow(s * d) - F->zeta_pow(-s * d)) * den;
    return r;
}

Elem serre_element(const Colors& C, const CartanDatum& D, int i, int j) {
    if (i == j) throw ParameterError("serre_element needs distinct colors");
    int m = 1 - D.cartan(i, j);
    int d = D.d(i);
    const CycField* F = C.F;
    CycNum top = quantum_factorial(F, m, d);
    Elem r;
    for (int p = 0; p <= m; ++p) {
        CycNum c = top * (quantum_factorial(F, p, d) * quantum_factorial(F, m - p, d)).inv();
        if (p % 2) c = -c;
        Word w(p, i);
        w.push_back(j);
        w.insert(w.end(), m - p, i);
        add_to(r, w, c);
    }
    return r;
}

}  // namespace qs
