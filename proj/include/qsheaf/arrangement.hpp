#pragma once

#include "qsheaf/hochschild.hpp"

namespace qs {

enum class ArrFlavor { diagonal, principal };
enum class Extension { shriek, star, ic };

struct ConfigArrangement {
    Colors colors;              // colors of I
    std::vector<int> pi;        // J -> I
    std::vector<long> lam;      // lam[i] = Lambda . i'; unused for the diagonal flavor
    ArrFlavor flavor = ArrFlavor::principal;

    static ConfigArrangement make(const CartanDatum& D, const CycField* F, const std::vector<int>& pi,
                                  const Weight& Lambda, ArrFlavor flavor = ArrFlavor::principal);
    int N() const { return static_cast<int>(pi.size()); }
    const CycField* field() const { return colors.F; }
    RootVec nu() const;
};

// rho : J -> [0, r] onto [1, r]
struct PosFacet {
    std::vector<int> rho;
    int r = 0;
};
std::vector<PosFacet> facets(int N, int r);

// A facet of the full real arrangement as an ordered set partition of
// J u {o}: blk[j] for j < N, blk[N] the block of the origin coordinate.
// Chambers are the facets with N + 1 singleton blocks. A positive chamber
// tau is stored the same way, blk[j] = tau(j) and blk[N] = 0.
using Blocks = std::vector<int>;

struct Cell {
    Blocks facet, chamber;
};

struct ArrComplex {
    ChainComplex cx;
    std::vector<std::vector<Cell>> cells;  // cells[p - lo]
    int index(int degree, const Cell& c) const;
};

CycNum q_separating(const Blocks& C, const Blocks& Cp, const ConfigArrangement& A);

// complex of positive cochains of the !-extension
ArrComplex complex_shriek(const ConfigArrangement& A);
// cochain complexes over all facets of the real arrangement
ArrComplex full_complex(const ConfigArrangement& A, Extension ext);
ArrComplex complex_star(const ConfigArrangement& A);
ChainMap m_map(const ConfigArrangement& A, const ArrComplex& shriek_full, const ArrComplex& star_full);
ChainComplex ic_complex(const ConfigArrangement& A);
std::vector<int> ic_cohomology(const ConfigArrangement& A);

// Sigma_pi action on the cells; signed when facets carry coorientations
Matrix sigma_action(const ConfigArrangement& A, const ArrComplex& X, int degree, const std::vector<int>& sigma,
                    bool positive);
std::vector<std::vector<int>> sigma_pi(const std::vector<int>& pi);
ChainComplex skew_symmetrize(const ConfigArrangement& A, const ArrComplex& X, bool positive);
struct SkewPart {
    ChainComplex cx;
    std::vector<Matrix> basis;  // columns: skew vectors in the cell basis
};
SkewPart skew_part(const ConfigArrangement& A, const ArrComplex& X, bool positive);
ChainComplex skew_ic_complex(const ConfigArrangement& A);
// shriek: positive cochains; star and ic: full facet complexes
ChainComplex arrangement_complex(const ConfigArrangement& A, Extension ext, bool skew);

int sign_tau_eta(const Blocks& tau, const std::vector<int>& eta);
// literal: exponent sum (r - a + 1)(|rho^{-1}(a)| - 1), which is a chain map
// only for |J| <= 2 against the Hochschild signs (-1)^p; graded: exponent
// sum a (|rho^{-1}(a)| - 1)
enum class RhoSign { graded, literal };
int sign_rho(const std::vector<int>& rho, int r, RhoSign conv = RhoSign::graded);
HochData hoch_data(const ConfigArrangement& A);
// chain map from complex_shriek to build_complex of the unfolded data
ChainMap phi_iso(const ConfigArrangement& A, const ArrComplex& shriek, const HochComplex& X,
                 const std::vector<int>& eta, RhoSign conv = RhoSign::graded);

// q(C_tau, C_tau') over the chambers of the diagonal arrangement, tau listed
// in lexicographic order of the sequences J_tau
struct DiagonalData {
    std::vector<Word> sequences;  // J_tau, leftmost = tau^{-1}(N)
    Matrix m;                     // coorientation basis
    Matrix m_oriented;            // chambers oriented through tau, as in the diagonal bases
};
DiagonalData diagonal_m_matrix(const ConfigArrangement& A);

struct OnePoint {
    CycNum q;
    Matrix m, u_shriek, u_star, v_shriek, v_star;
};
// rank one arrangement; bases (c_+, c_-) at the origin, (c_{w+}, c_{w-}) on the rays
OnePoint one_point(const CycField* F, const Colors& C, int color, long lam);

std::string blocks_str(const Blocks& b);

}  // namespace qs
