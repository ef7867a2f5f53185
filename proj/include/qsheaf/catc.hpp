#pragma once

#include <map>

#include "qsheaf/verma.hpp"

namespace qs {

// Weight of a module vector recorded as p_i = lambda . i' = d_i <i, lambda>.
using PWeight = std::vector<long>;

// Finite-dimensional graded module with operators theta_i, eps_i.
struct CModule {
    const CycField* F = nullptr;
    CartanDatum D;
    std::map<PWeight, int> dims;
    // theta[i][lambda]: M_lambda -> M_{lambda - i'}; eps[i][lambda]: M_lambda -> M_{lambda + i'}
    std::vector<std::map<PWeight, Matrix>> theta, eps;

    int dim(const PWeight& w) const;
    int total_dim() const;
    PWeight shift(const PWeight& w, int i, int sign) const;
    Weight to_weight(const PWeight& w) const;
    // zero matrices when the target weight is absent
    Matrix theta_at(int i, const PWeight& w) const;
    Matrix eps_at(int i, const PWeight& w) const;
};

struct RelationReport {
    bool commutation = true;
    bool serre = true;
    bool ok() const { return commutation && serre; }
};

CModule trivial_module(const CartanDatum& D, const CycField* F);
CModule irreducible_module(const CartanDatum& D, const CycField* F, const Weight& lambda, int max_depth = -1);
CModule tensor(const CModule& M, const CModule& N);
enum class DualFlavor { vee, star };
CModule dual(const CModule& M, DualFlavor flavor);
RelationReport check_relations(const CModule& M, int radical_depth = 0);

Matrix invariants(const CModule& M);
int coinvariants_dim(const CModule& M);
int bracket_dim(const CModule& M);
int conformal_blocks(const CartanDatum& D, const CycField* F, const EllData& E, const std::vector<Weight>& lambdas);

}  // namespace qs
