#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qsheaf/cyclotomic.hpp"

namespace qs {

using Weight = std::vector<mpq_class>;  // coords[i] = <i, lambda>
using RootVec = std::vector<int>;      // nu = sum nu_i i

class CartanDatum {
public:
    CartanDatum() = default;
    explicit CartanDatum(std::vector<std::vector<int>> dot, std::string name = "");
    static CartanDatum preset(const std::string& name);

    int rank() const { return static_cast<int>(dot_.size()); }
    const std::string& name() const { return name_; }
    int dot(int i, int j) const { return dot_[i][j]; }
    const std::vector<std::vector<int>>& dot_matrix() const { return dot_; }
    int d(int i) const { return dot_[i][i] / 2; }
    int dmax() const;
    // <i, j'> = 2 i.j / i.i
    int cartan(int i, int j) const { return 2 * dot_[i][j] / dot_[i][i]; }
    int varpi() const;
    bool simply_laced() const;

    // coefficients of the highest coroot and of the coroot dual to the highest root
    const std::vector<int>& gamma0() const { return gamma0_; }
    const std::vector<int>& beta0() const { return beta0_; }

    mpq_class dot_weight(const Weight& a, const Weight& b) const;
    Weight alpha_prime(const RootVec& nu) const;
    // lambda . nu' = sum_a nu_a d_a <a, lambda>
    mpq_class pair(const Weight& lam, const RootVec& nu) const;
    int dot_root(const RootVec& a, const RootVec& b) const;
    Weight zero_weight() const { return Weight(rank(), 0); }
    Weight rho() const { return Weight(rank(), 1); }

private:
    std::string name_;
    std::vector<std::vector<int>> dot_;
    std::vector<std::vector<mpq_class>> dgd_;  // D G^{-1} D
    std::vector<int> gamma0_, beta0_;
};

struct EllData {
    int l = 0, ell = 0;
    std::vector<int> ell_i;
    Weight rho, rho_ell;
    int dd_ell = 0;  // |X_ell / Y_ell|
    std::vector<std::string> warnings;
};

EllData make_ell_data(const CartanDatum& C, int l);
bool is_integral(const Weight& w);
bool in_X_ell(const CartanDatum& C, const EllData& E, const Weight& w);
bool in_first_alcove(const CartanDatum& C, const EllData& E, const Weight& lam);
mpq_class balance_n(const CartanDatum& C, const Weight& mu, const Weight& nu0);
int depth(const RootVec& nu);

// field attached to a datum: N = 2 varpi l
const CycField* field_for(const CartanDatum& C, int l, int k);

}  // namespace qs
