#pragma once

#include <string>
#include <vector>

#include "qsheaf/cyclotomic.hpp"

namespace qs {

class Matrix {
public:
    Matrix() = default;
    Matrix(const CycField* f, int rows, int cols);
    static Matrix identity(const CycField* f, int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    const CycField* field() const { return F_; }
    CycNum& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const CycNum& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool is_symmetric() const;
    Matrix scaled(const CycNum& s) const;
    Matrix select_cols(const std::vector<int>& idx) const;

private:
    const CycField* F_ = nullptr;
    int r_ = 0, c_ = 0;
    std::vector<CycNum> a_;
};

struct RowEchelon {
    Matrix R;                 // reduced row echelon form
    std::vector<int> pivots;  // pivot column per nonzero row
};

RowEchelon rref(Matrix m);
int rank(const Matrix& m);
std::vector<std::vector<CycNum>> kernel_basis(const Matrix& m);
// solve A X = B assuming the columns of B lie in the column space of A and A
// has full column rank; throws ContractViolation otherwise
Matrix solve(const Matrix& A, const Matrix& B);
CycNum determinant(const Matrix& m);

// Cochain complex in degrees lo..0; d[p - lo] maps degree p to p + 1 and has
// shape dim(p+1) x dim(p).
struct ChainComplex {
    const CycField* F = nullptr;
    int lo = 0;
    std::vector<int> dims;
    std::vector<std::vector<std::string>> labels;
    std::vector<Matrix> d;

    int dim(int p) const;
    const Matrix& diff(int p) const { return d[p - lo]; }
    int top() const { return lo + static_cast<int>(dims.size()) - 1; }
    bool d_squared_zero() const;
    void check() const;
};

// chain map f: C -> D with f[p - lo] of shape dim_D(p) x dim_C(p)
struct ChainMap {
    std::vector<Matrix> f;
};

std::vector<int> cohomology_dims(const ChainComplex& C);
int euler_characteristic(const std::vector<int>& v, int lo);
bool is_chain_map(const ChainComplex& C, const ChainComplex& D, const ChainMap& f);
ChainComplex image_complex(const ChainComplex& C, const ChainComplex& D, const ChainMap& f);
// C / K where K_p = ker(f_p) is required to be a subcomplex
ChainComplex quotient_by_kernel(const ChainComplex& C, const std::vector<Matrix>& f);
// restriction of C to the image of idempotent-like projectors P_p commuting with d
ChainComplex sub_complex(const ChainComplex& C, const std::vector<Matrix>& projectors);

}  // namespace qs
