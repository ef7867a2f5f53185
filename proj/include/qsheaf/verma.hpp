#pragma once

#include <memory>

#include "qsheaf/freealg.hpp"

namespace qs {

Elem epsilon_word(const Colors& C, const std::vector<long>& lam, int i, const Word& w);

// V(Lambda) over a set of colors; lam[i] = Lambda . i'
class Verma {
public:
    Verma(Colors C, std::vector<long> lam);
    static Verma of(const CartanDatum& D, const CycField* F, const Weight& Lambda);

    const Colors& colors() const { return C_; }
    const std::vector<long>& lam() const { return lam_; }
    // (Lambda - mu') . i'
    long pair_after(const RootVec& mu, int i) const;
    CycNum bracket_after(const RootVec& mu, int i) const;

    Elem epsilon_i(int i, const Elem& x) const;
    Elem epsilon_i(int i, const Word& w) const;
    CycNum form(const Word& x, const Word& y);
    CycNum form(const Elem& x, const Elem& y);
    const Matrix& gram(const RootVec& nu);
    const std::vector<Word>& basis(const RootVec& nu);
    int dim_L(const RootVec& nu);
    // closed formula, simply-laced colors only
    CycNum form_oracle(const Word& K, const Word& Kp) const;

private:
    Colors C_;
    std::vector<long> lam_;
    std::shared_ptr<FormCache> cache_;
};

Elem ad_theta(const Colors& C, int i, long lam_i, const Elem& x);

// Words are written leftmost first; position j (1-based, as in the sequence
// (i_N, ..., i_1)) refers to letter word[N - j].
Elem quantum_commutator(const Verma& V, const Word& I, const std::vector<int>& Q);
// Delta_Lambda(theta_I v) as a 2-part tensor (f-part, Verma part)
Tensor coaction(const Verma& V, const Word& I);
Tensor coaction(const Verma& V, const Elem& x);
// S_{1;Lambda}(x (x) y, t)
CycNum pair_coaction(FreeAlgebra& A, Verma& V, const Word& x, const Word& y, const Tensor& t);

}  // namespace qs
