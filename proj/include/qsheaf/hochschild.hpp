#pragma once

#include "qsheaf/verma.hpp"

namespace qs {

// a_r | ... | a_1 | m_0 | ... | m_{n-1}, all stored as words
using HochLabel = std::vector<Word>;

struct HochData {
    Colors C;
    std::vector<std::vector<long>> lams;  // lams[j][i] = Lambda_j . i'
    RootVec nu;
    int n() const { return static_cast<int>(lams.size()); }
};

struct HochComplex {
    ChainComplex cx;
    // labels[p - lo], p the degree (-r)
    std::vector<std::vector<HochLabel>> labels;
    int index(int degree, const HochLabel& l) const;
};

// action of u on x_0 (x) ... (x) x_{n-1} through Delta^(n) and the sign rule
Tensor tensor_action(const Colors& C, const std::vector<std::vector<long>>& lams, const Word& u,
                     const std::vector<Word>& x);

std::vector<std::vector<HochLabel>> hoch_labels(const HochData& H);
HochComplex build_complex(const HochData& H);
// complex over 'f* on the dual spaces, written in the basis dual to the labels
HochComplex build_dual_complex(const HochData& H);
// degreewise product of the forms S and S_Lambda_j
ChainMap shapovalov_map(const HochData& H, const HochComplex& X);
std::vector<int> tor_dims(const HochData& H);
ChainComplex build_complex_f(const HochData& H);

// the averaging map on words: lifts along pi : J -> I
Elem symmetrize_average(const std::vector<int>& pi, const Elem& x);
HochData unfold(const HochData& H, const std::vector<int>& pi);
// matrices of the averaging map from the weight nu_pi complex to the unfolded one
ChainMap average_map(const HochData& H, const HochComplex& X, const HochData& HJ, const HochComplex& XJ,
                     const std::vector<int>& pi);
// relabelling of letters by sigma : J -> J, acting on labels
Matrix permutation_action(const HochComplex& X, int degree, const std::vector<int>& sigma);

}  // namespace qs
