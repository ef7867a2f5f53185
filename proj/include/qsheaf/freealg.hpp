#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qsheaf/linalg.hpp"
#include "qsheaf/rootdata.hpp"

namespace qs {

// theta_{k1} theta_{k2} ... theta_{kN}, leftmost letter first
using Word = std::vector<int>;
using Elem = std::map<Word, CycNum>;
// element of 'f^{(x) n}
using Tensor = std::map<std::vector<Word>, CycNum>;

// Colors with a symmetric pairing; either the colors of a Cartan datum or an
// unfolding of them.
struct Colors {
    const CycField* F = nullptr;
    std::vector<std::vector<int>> dot;

    static Colors of(const CartanDatum& C, const CycField* F);
    Colors unfold(const std::vector<int>& pi) const;
    int size() const { return static_cast<int>(dot.size()); }
    CycNum z(long e) const { return F->zeta_pow(e); }
    int dot_words(const Word& a, const Word& b) const;
    int dot_letter(const RootVec& nu, int i) const;
    RootVec weight(const Word& w) const;
    bool simply_laced() const;
};

std::vector<Word> words_of_weight(const RootVec& nu);
void add_to(Elem& e, const Word& w, const CycNum& c);
void add_to(Elem& e, const Elem& o, const CycNum& c);
Elem mul(const Colors& C, const Elem& a, const Elem& b);
Elem letter(const Colors& C, int i);
Elem unit(const Colors& C);

CycNum twist_number(const Colors& C, const Word& K, const std::vector<int>& tau);
// permutation sum of S(theta_K, theta_K'), usable for small depth
CycNum form_S_perm(const Colors& C, const Word& K, const Word& Kp);
Elem delta_i(const Colors& C, int i, const Elem& x);

// Gram matrices of contravariant forms built from a lowering operator.
class FormCache {
public:
    // lower(i, word) returns the image in the weight space of weight - i
    using Lower = std::function<Elem(int, const Word&)>;
    FormCache(const Colors& C, Lower lower);
    const Matrix& gram(const RootVec& nu);
    const std::vector<Word>& basis(const RootVec& nu);
    CycNum form(const Elem& x, const Elem& y);

private:
    Colors C_;
    Lower lower_;
    std::mutex mu_;
    std::map<RootVec, Matrix> gram_;
    std::map<RootVec, std::vector<Word>> basis_;
    std::map<RootVec, std::map<Word, int>> index_;
    const Matrix& gram_locked(const RootVec& nu);
    const std::vector<Word>& basis_locked(const RootVec& nu);
};

class FreeAlgebra {
public:
    explicit FreeAlgebra(Colors C);
    const Colors& colors() const { return C_; }
    CycNum form_S(const Word& x, const Word& y);
    CycNum form_S(const Elem& x, const Elem& y);
    const Matrix& gram_S(const RootVec& nu);
    const std::vector<Word>& basis(const RootVec& nu);
    int dim_f(const RootVec& nu);

private:
    Colors C_;
    std::shared_ptr<FormCache> cache_;
};

// Delta(theta_K) as a sum of theta_{K_A} (x) theta_{K_A'}
Tensor comult(const Colors& C, const Word& K, int n = 2);
Tensor comult(const Colors& C, const Elem& x, int n = 2);
Tensor iterated_comult_plus(const Colors& C, const Word& K);
// product in 'f^{(x) n} with the twisted sign rule
Tensor tensor_mul(const Colors& C, const Tensor& a, const Tensor& b);
// pairing S^{(x) n}
CycNum pair_tensor(FreeAlgebra& A, const Tensor& a, const Tensor& b);
Elem serre_element(const Colors& C, const CartanDatum& D, int i, int j);
CycNum quantum_factorial(const CycField* F, int p, int d);

}  // namespace qs
