#include "qsheaf/linalg.hpp"

#include <stdexcept>

namespace qs {

Matrix::Matrix(const CycField* f, int rows, int cols)
    : F_(f), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, CycNum(f)) {}

Matrix Matrix::identity(const CycField* f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = f->one();
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw ContractViolation("matrix shape mismatch in product");
    Matrix m(F_ ? F_ : o.F_, r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const CycNum& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const CycNum& b = o(k, j);
                if (!b.is_zero()) m(i, j) += a * b;
            }
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw ContractViolation("matrix shape mismatch in sum");
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw ContractViolation("matrix shape mismatch in difference");
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(F_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool Matrix::is_zero() const {
    for (auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

bool Matrix::is_symmetric() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = i + 1; j < c_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Matrix Matrix::scaled(const CycNum& s) const {
    Matrix m = *this;
    for (auto& x : m.a_)
        if (!x.is_zero()) x = x * s;
    return m;
}

Matrix Matrix::select_cols(const std::vector<int>& idx) const {
    Matrix m(F_, r_, static_cast<int>(idx.size()));
    for (int i = 0; i < r_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) m(i, static_cast<int>(j)) = (*this)(i, idx[j]);
    return m;
}

RowEchelon rref(Matrix m) {
    RowEchelon out;
    int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        CycNum inv = m(r, c).inv();
        for (int j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            CycNum f = m(i, c);
            for (int j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.R = std::move(m);
    return out;
}

int rank(const Matrix& m0) {
    // forward elimination only
    Matrix m = m0;
    int rows = m.rows(), cols = m.cols();
    if (rows > cols) m = m.transpose(), std::swap(rows, cols);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (int j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
        CycNum inv = m(r, c).inv();
        for (int i = r + 1; i < rows; ++i) {
            if (m(i, c).is_zero()) continue;
            CycNum f = m(i, c) * inv;
            for (int j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

CycNum determinant(const Matrix& m0) {
    if (m0.rows() != m0.cols()) throw ContractViolation("determinant of a non-square matrix");
    Matrix m = m0;
    int n = m.rows();
    const CycField* F = m.field();
    CycNum det = F->one();
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return F->zero();
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        CycNum inv = m(c, c).inv();
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            CycNum f = m(i, c) * inv;
            for (int j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::vector<std::vector<CycNum>> kernel_basis(const Matrix& m) {
    RowEchelon e = rref(m);
    const CycField* F = m.field();
    int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<CycNum>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<CycNum> v(cols, F->zero());
        v[f] = F->one();
        for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.R(static_cast<int>(r), f);
        out.push_back(std::move(v));
    }
    return out;
}

Matrix solve(const Matrix& A, const Matrix& B) {
    int n = A.rows(), k = A.cols(), m = B.cols();
    Matrix aug(A.field(), n, k + m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) aug(i, j) = A(i, j);
        for (int j = 0; j < m; ++j) aug(i, k + j) = B(i, j);
    }
    RowEchelon e = rref(aug);
    if (static_cast<int>(e.pivots.size()) < k) throw ContractViolation("solve: A lacks full column rank");
    for (int r = 0; r < k; ++r)
        if (e.pivots[r] != r) throw ContractViolation("solve: A lacks full column rank");
    if (static_cast<int>(e.pivots.size()) > k) throw ContractViolation("solve: right side outside column space");
    Matrix X(A.field(), k, m);
    for (int r = 0; r < k; ++r)
        for (int j = 0; j < m; ++j) X(r, j) = e.R(r, k + j);
    return X;
}

int ChainComplex::dim(int p) const {
    if (p < lo || p > top()) return 0;
    return dims[p - lo];
}

bool ChainComplex::d_squared_zero() const {
    for (size_t i = 0; i + 1 < d.size(); ++i)
        if (!(d[i + 1] * d[i]).is_zero()) return false;
    return true;
}

void ChainComplex::check() const {
    if (d.size() + 1 != dims.size() && !(dims.empty() && d.empty()))
        throw ContractViolation("complex: wrong number of differentials");
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i].rows() != dims[i + 1] || d[i].cols() != dims[i])
            throw ContractViolation("complex: differential shape mismatch");
    if (!d_squared_zero()) throw ContractViolation("complex: d o d != 0");
}

std::vector<int> cohomology_dims(const ChainComplex& C) {
    C.check();
    size_t n = C.dims.size();
    std::vector<int> rk(C.d.size());
    for (size_t i = 0; i < C.d.size(); ++i) rk[i] = rank(C.d[i]);
    std::vector<int> h(n);
    for (size_t p = 0; p < n; ++p) {
        int out = p < C.d.size() ? rk[p] : 0;
        int in = p > 0 ? rk[p - 1] : 0;
        h[p] = C.dims[p] - out - in;
    }
    if (euler_characteristic(h, C.lo) != euler_characteristic(C.dims, C.lo))
        throw ContractViolation("Euler characteristic mismatch");
    return h;
}

int euler_characteristic(const std::vector<int>& v, int lo) {
    int s = 0;
    for (size_t i = 0; i < v.size(); ++i) s += ((lo + static_cast<int>(i)) % 2 == 0 ? 1 : -1) * v[i];
    return s;
}

bool is_chain_map(const ChainComplex& C, const ChainComplex& D, const ChainMap& f) {
    if (C.dims.size() != D.dims.size() || C.lo != D.lo || f.f.size() != C.dims.size()) return false;
    for (size_t i = 0; i < C.d.size(); ++i)
        if (!(D.d[i] * f.f[i] == f.f[i + 1] * C.d[i])) return false;
    return true;
}

ChainComplex image_complex(const ChainComplex& C, const ChainComplex& D, const ChainMap& f) {
    if (!is_chain_map(C, D, f)) throw ContractViolation("image_complex: not a chain map");
    ChainComplex out;
    out.F = D.F;
    out.lo = D.lo;
    std::vector<Matrix> B;
    for (size_t i = 0; i < f.f.size(); ++i) {
        RowEchelon e = rref(f.f[i]);
        B.push_back(f.f[i].select_cols(e.pivots));
        out.dims.push_back(static_cast<int>(e.pivots.size()));
    }
    for (size_t i = 0; i + 1 < B.size(); ++i) out.d.push_back(solve(B[i + 1], D.d[i] * B[i]));
    out.check();
    return out;
}

ChainComplex quotient_by_kernel(const ChainComplex& C, const std::vector<Matrix>& f) {
    ChainComplex out;
    out.F = C.F;
    out.lo = C.lo;
    std::vector<std::vector<int>> S;
    for (size_t i = 0; i < f.size(); ++i) {
        RowEchelon e = rref(f[i]);
        S.push_back(e.pivots);
        out.dims.push_back(static_cast<int>(e.pivots.size()));
        if (i > 0) {
            for (auto& k : kernel_basis(f[i - 1])) {
                Matrix v(C.F, static_cast<int>(k.size()), 1);
                for (size_t j = 0; j < k.size(); ++j) v(static_cast<int>(j), 0) = k[j];
                if (!(f[i] * C.d[i - 1] * v).is_zero())
                    throw ContractViolation("quotient_by_kernel: kernel is not a subcomplex");
            }
        }
    }
    for (size_t i = 0; i + 1 < f.size(); ++i) {
        Matrix img = f[i + 1] * C.d[i].select_cols(S[i]);
        out.d.push_back(solve(f[i + 1].select_cols(S[i + 1]), img));
    }
    out.check();
    return out;
}

ChainComplex sub_complex(const ChainComplex& C, const std::vector<Matrix>& P) {
    ChainComplex out;
    out.F = C.F;
    out.lo = C.lo;
    std::vector<Matrix> B;
    for (auto& p : P) {
        RowEchelon e = rref(p);
        B.push_back(p.select_cols(e.pivots));
        out.dims.push_back(static_cast<int>(e.pivots.size()));
    }
    for (size_t i = 0; i + 1 < B.size(); ++i) out.d.push_back(solve(B[i + 1], C.d[i] * B[i]));
    out.check();
    return out;
}

}  // namespace qs
