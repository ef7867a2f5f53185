#include "qsheaf/verma.hpp"

#include <algorithm>
#include <numeric>

namespace qs {

Verma::Verma(Colors C, std::vector<long> lam) : C_(std::move(C)), lam_(std::move(lam)) {
    if (static_cast<int>(lam_.size()) != C_.size()) throw ParameterError("weight has wrong rank");
    Colors c = C_;
    std::vector<long> l = lam_;
    cache_ = std::make_shared<FormCache>(c, [c, l](int i, const Word& w) { return epsilon_word(c, l, i, w); });
}

Verma Verma::of(const CartanDatum& D, const CycField* F, const Weight& Lambda) {
    std::vector<long> lam(D.rank());
    for (int i = 0; i < D.rank(); ++i) {
        mpq_class v = Lambda[i] * D.d(i);
        if (v.get_den() != 1) throw ParameterError("d_i <i,Lambda> must be integral");
        lam[i] = v.get_num().get_si();
    }
    return Verma(Colors::of(D, F), lam);
}

long Verma::pair_after(const RootVec& mu, int i) const { return lam_[i] - C_.dot_letter(mu, i); }

CycNum Verma::bracket_after(const RootVec& mu, int i) const { return C_.F->q_bracket(pair_after(mu, i)); }

Elem Verma::epsilon_i(int i, const Word& w) const { return epsilon_word(C_, lam_, i, w); }

Elem epsilon_word(const Colors& C_, const std::vector<long>& lam, int i, const Word& w) {
    // remove the letter at position p; prefix weight gives the zeta power,
    // suffix weight gives the bracket
    Elem r;
    RootVec suffix(C_.size(), 0);
    for (int x : w) ++suffix[x];
    long pre = 0;
    for (size_t p = 0; p < w.size(); ++p) {
        --suffix[w[p]];
        if (w[p] == i) {
            CycNum b = C_.F->q_bracket(lam[i] - C_.dot_letter(suffix, i));
            if (!b.is_zero()) {
                Word rest = w;
                rest.erase(rest.begin() + static_cast<long>(p));
                add_to(r, rest, b * C_.z(pre));
            }
        }
        pre += C_.dot[w[p]][i];
    }
    return r;
}

Elem Verma::epsilon_i(int i, const Elem& x) const {
    Elem r;
    for (auto& [w, c] : x) add_to(r, epsilon_i(i, w), c);
    return r;
}

CycNum Verma::form(const Word& x, const Word& y) {
    return cache_->form(Elem{{x, C_.F->one()}}, Elem{{y, C_.F->one()}});
}
CycNum Verma::form(const Elem& x, const Elem& y) { return cache_->form(x, y); }
const Matrix& Verma::gram(const RootVec& nu) { return cache_->gram(nu); }
const std::vector<Word>& Verma::basis(const RootVec& nu) { return cache_->basis(nu); }
int Verma::dim_L(const RootVec& nu) { return rank(gram(nu)); }

CycNum Verma::form_oracle(const Word& K, const Word& Kp) const {
    if (!C_.simply_laced()) throw ParameterError("closed formula oracle requires simply-laced colors");
    CycNum s = C_.F->zero();
    if (K.size() != Kp.size()) return s;
    int n = static_cast<int>(K.size());
    std::vector<int> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = Kp[tau[a]] == K[a];
        if (!ok) continue;
        CycNum A = C_.F->one();
        for (int a = 0; a < n && !A.is_zero(); ++a) {
            long v = lam_[K[a]];
            // letters to the right act first
            for (int b = a + 1; b < n; ++b)
                if (tau[b] > tau[a]) v -= C_.dot[K[b]][K[a]];
            A *= C_.F->q_bracket(v);
        }
        s += twist_number(C_, K, tau) * A;
    } while (std::next_permutation(tau.begin(), tau.end()));
    return s;
}

Elem ad_theta(const Colors& C, int i, long lam_i, const Elem& x) {
    Elem r;
    for (auto& [w, c] : x) {
        int inu = 0;
        for (int k : w) inu += C.dot[k][i];
        Word a{i};
        a.insert(a.end(), w.begin(), w.end());
        Word b = w;
        b.push_back(i);
        add_to(r, a, c);
        add_to(r, b, -(c * C.z(inu - 2 * lam_i)));
    }
    return r;
}

Elem quantum_commutator(const Verma& V, const Word& I, const std::vector<int>& Q0) {
    const Colors& C = V.colors();
    if (Q0.empty()) throw ParameterError("quantum commutator needs a nonempty subset");
    int N = static_cast<int>(I.size());
    auto col = [&](int j) { return I[N - j]; };
    std::vector<int> Q = Q0;
    std::sort(Q.begin(), Q.end());
    std::vector<bool> inQ(N + 1, false);
    for (int j : Q) inQ[j] = true;
    long e = 0;
    for (int p : Q)
        for (int q = p + 1; q <= N; ++q)
            if (!inQ[q]) e += C.dot[col(p)][col(q)];
    if (Q.size() == 1) return Elem{{Word{col(Q[0])}, C.z(e)}};
    Elem x = letter(C, col(Q[0]));
    for (size_t a = 1; a < Q.size(); ++a) {
        int ja = Q[a];
        int c = col(ja);
        long lam = V.lam()[c];
        for (int k = 1; k < ja; ++k) {
            bool skip = false;
            for (size_t b = 0; b < a; ++b)
                if (Q[b] == k) skip = true;
            if (!skip) lam -= C.dot[col(k)][c];
        }
        x = ad_theta(C, c, lam, x);
    }
    Elem r;
    add_to(r, x, C.z(e));
    return r;
}

Tensor coaction(const Verma& V, const Word& I) {
    const Colors& C = V.colors();
    int N = static_cast<int>(I.size());
    auto col = [&](int j) { return I[N - j]; };
    Tensor t;
    t[{Word{}, I}] = C.F->one();
    for (unsigned mask = 1; mask < (1u << N); ++mask) {
        std::vector<int> Q;
        for (int j = 1; j <= N; ++j)
            if (mask & (1u << (j - 1))) Q.push_back(j);
        int jq = Q[0];
        long v = V.lam()[col(jq)];
        for (int k = 1; k < jq; ++k) v -= C.dot[col(k)][col(jq)];
        CycNum b = C.F->q_bracket(v);
        if (b.is_zero()) continue;
        Word rest;
        for (int p = 0; p < N; ++p) {
            int j = N - p;
            if (!(mask & (1u << (j - 1)))) rest.push_back(I[p]);
        }
        for (auto& [w, c] : quantum_commutator(V, I, Q)) {
            std::vector<Word> key{w, rest};
            CycNum val = b * c;
            auto it = t.find(key);
            if (it == t.end())
                t.emplace(key, val);
            else {
                it->second += val;
                if (it->second.is_zero()) t.erase(it);
            }
        }
    }
    return t;
}

Tensor coaction(const Verma& V, const Elem& x) {
    Tensor t;
    for (auto& [w, c] : x)
        for (auto& [k, v] : coaction(V, w)) {
            auto it = t.find(k);
            CycNum val = v * c;
            if (it == t.end())
                t.emplace(k, val);
            else {
                it->second += val;
                if (it->second.is_zero()) t.erase(it);
            }
        }
    return t;
}

CycNum pair_coaction(FreeAlgebra& A, Verma& V, const Word& x, const Word& y, const Tensor& t) {
    CycNum s = A.colors().F->zero();
    for (auto& [k, c] : t) {
        if (k[0].size() != x.size() || k[1].size() != y.size()) continue;
        CycNum a = A.form_S(x, k[0]);
        if (a.is_zero()) continue;
        s += c * a * V.form(y, k[1]);
    }
    return s;
}

}  // namespace qs
