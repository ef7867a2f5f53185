#include "qsheaf/catc.hpp"

#include <stdexcept>

namespace qs {

int CModule::dim(const PWeight& w) const {
    auto it = dims.find(w);
    return it == dims.end() ? 0 : it->second;
}

int CModule::total_dim() const {
    int s = 0;
    for (auto& [w, d] : dims) s += d;
    return s;
}

PWeight CModule::shift(const PWeight& w, int i, int sign) const {
    PWeight r = w;
    for (int k = 0; k < D.rank(); ++k) r[k] += sign * D.dot(i, k);
    return r;
}

Weight CModule::to_weight(const PWeight& w) const {
    Weight r(D.rank());
    for (int k = 0; k < D.rank(); ++k) r[k] = mpq_class(w[k], D.d(k));
    return r;
}

Matrix CModule::theta_at(int i, const PWeight& w) const {
    auto it = theta[i].find(w);
    if (it != theta[i].end()) return it->second;
    return Matrix(F, dim(shift(w, i, -1)), dim(w));
}

Matrix CModule::eps_at(int i, const PWeight& w) const {
    auto it = eps[i].find(w);
    if (it != eps[i].end()) return it->second;
    return Matrix(F, dim(shift(w, i, 1)), dim(w));
}

namespace {

CModule empty_module(const CartanDatum& D, const CycField* F) {
    CModule M;
    M.F = F;
    M.D = D;
    M.theta.resize(D.rank());
    M.eps.resize(D.rank());
    return M;
}

void store(std::map<PWeight, Matrix>& ops, const PWeight& w, Matrix m) {
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return;
    ops.emplace(w, std::move(m));
}

std::vector<RootVec> roots_of_depth(int rank, int d) {
    std::vector<RootVec> out;
    RootVec cur(rank, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rank - 1) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int a = left; a >= 0; --a) {
            cur[i] = a;
            rec(i + 1, left - a);
        }
    };
    if (rank > 0) rec(0, d);
    return out;
}

// operator of a word on M, evaluated on weight w; the rightmost letter acts first
Matrix word_operator(const CModule& M, const Word& word, bool raise, PWeight w) {
    Matrix acc = Matrix::identity(M.F, M.dim(w));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        Matrix op = raise ? M.eps_at(*it, w) : M.theta_at(*it, w);
        acc = op * acc;
        w = M.shift(w, *it, raise ? 1 : -1);
    }
    return acc;
}

}  // namespace

CModule trivial_module(const CartanDatum& D, const CycField* F) {
    CModule M = empty_module(D, F);
    M.dims[PWeight(D.rank(), 0)] = 1;
    return M;
}

CModule irreducible_module(const CartanDatum& D, const CycField* F, const Weight& lambda, int max_depth) {
    CModule M = empty_module(D, F);
    Verma V = Verma::of(D, F, lambda);
    int n = D.rank();
    if (max_depth < 0) max_depth = 4 * F->l() * n * n;
    auto pw = [&](const RootVec& nu) {
        PWeight p(n);
        for (int i = 0; i < n; ++i) p[i] = V.pair_after(nu, i);
        return p;
    };
    struct Piece {
        std::vector<int> piv;
        Matrix GP;  // Gram restricted to pivot columns
    };
    std::map<RootVec, Piece> pieces;
    auto piece = [&](const RootVec& nu) -> const Piece* {
        auto it = pieces.find(nu);
        if (it != pieces.end()) return it->second.piv.empty() ? nullptr : &it->second;
        const Matrix& G = V.gram(nu);
        Piece p{rref(G).pivots, Matrix()};
        p.GP = G.select_cols(p.piv);
        auto& ref = pieces.emplace(nu, std::move(p)).first->second;
        return ref.piv.empty() ? nullptr : &ref;
    };
    // coordinates in L_nu of a vector of V_nu given by its basis coefficients
    auto classes = [&](const RootVec& nu, const Piece& P, const std::vector<std::vector<CycNum>>& cols) {
        const Matrix& G = V.gram(nu);
        Matrix B(F, G.rows(), static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c)
            for (int r = 0; r < G.rows(); ++r) {
                CycNum s = F->zero();
                for (int k = 0; k < G.cols(); ++k)
                    if (!cols[c][k].is_zero() && !G(r, k).is_zero()) s += G(r, k) * cols[c][k];
                B(r, static_cast<int>(c)) = s;
            }
        return solve(P.GP, B);
    };
    std::vector<RootVec> live{RootVec(n, 0)};
    piece(live[0]);
    for (int d = 1; !live.empty(); ++d) {
        if (d > max_depth) throw ContractViolation("irreducible_module: depth cutoff exceeded");
        std::vector<RootVec> next;
        for (auto& nu : roots_of_depth(n, d))
            if (piece(nu)) next.push_back(nu);
        live = std::move(next);
    }
    for (auto& [nu, P] : pieces) {
        if (P.piv.empty()) continue;
        M.dims[pw(nu)] = static_cast<int>(P.piv.size());
    }
    for (auto& [nu, P] : pieces) {
        if (P.piv.empty()) continue;
        const auto& B = V.basis(nu);
        for (int i = 0; i < n; ++i) {
            RootVec up = nu;
            ++up[i];
            auto itu = pieces.find(up);
            if (itu != pieces.end() && !itu->second.piv.empty()) {
                const auto& Bu = V.basis(up);
                std::vector<std::vector<CycNum>> cols;
                for (int p : P.piv) {
                    Word w{i};
                    w.insert(w.end(), B[p].begin(), B[p].end());
                    std::vector<CycNum> v(Bu.size(), F->zero());
                    for (size_t k = 0; k < Bu.size(); ++k)
                        if (Bu[k] == w) v[k] = F->one();
                    cols.push_back(std::move(v));
                }
                store(M.theta[i], pw(nu), classes(up, itu->second, cols));
            }
            if (nu[i] == 0) continue;
            RootVec dn = nu;
            --dn[i];
            auto itd = pieces.find(dn);
            if (itd == pieces.end() || itd->second.piv.empty()) continue;
            const auto& Bd = V.basis(dn);
            std::vector<std::vector<CycNum>> cols;
            for (int p : P.piv) {
                Elem e = V.epsilon_i(i, B[p]);
                std::vector<CycNum> v(Bd.size(), F->zero());
                for (size_t k = 0; k < Bd.size(); ++k) {
                    auto f = e.find(Bd[k]);
                    if (f != e.end()) v[k] = f->second;
                }
                cols.push_back(std::move(v));
            }
            store(M.eps[i], pw(nu), classes(dn, itd->second, cols));
        }
    }
    return M;
}

namespace {

Matrix kron(const Matrix& A, const Matrix& B) {
    Matrix K(A.field() ? A.field() : B.field(), A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            if (A(i, j).is_zero()) continue;
            for (int k = 0; k < B.rows(); ++k)
                for (int l = 0; l < B.cols(); ++l)
                    if (!B(k, l).is_zero()) K(i * B.rows() + k, j * B.cols() + l) = A(i, j) * B(k, l);
        }
    return K;
}

PWeight add(const PWeight& a, const PWeight& b) {
    PWeight r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

}  // namespace

CModule tensor(const CModule& M, const CModule& N) {
    if (M.F != N.F || M.D.dot_matrix() != N.D.dot_matrix()) throw ParameterError("tensor: incompatible modules");
    CModule T = empty_module(M.D, M.F);
    const CycField* F = M.F;
    int n = M.D.rank();
    // blocks of T_w: (lambda, mu) pairs with offsets, in map order
    std::map<PWeight, std::vector<std::pair<std::pair<PWeight, PWeight>, int>>> blocks;
    for (auto& [a, da] : M.dims)
        for (auto& [b, db] : N.dims) {
            PWeight w = add(a, b);
            int off = T.dims[w];
            blocks[w].push_back({{a, b}, off});
            T.dims[w] += da * db;
        }
    auto offset = [&](const PWeight& w, const PWeight& a, const PWeight& b) {
        for (auto& [ab, off] : blocks.at(w))
            if (ab.first == a && ab.second == b) return off;
        throw ContractViolation("tensor: missing block");
    };
    for (int i = 0; i < n; ++i)
        for (int sign : {-1, 1}) {
            auto& ops = sign < 0 ? T.theta[i] : T.eps[i];
            for (auto& [w, bl] : blocks) {
                PWeight w2 = T.shift(w, i, sign);
                if (T.dim(w2) == 0) continue;
                Matrix R(F, T.dim(w2), T.dim(w));
                for (auto& [ab, off] : bl) {
                    auto& [a, b] = ab;
                    int da = M.dim(a), db = N.dim(b);
                    PWeight a2 = M.shift(a, i, sign);
                    if (M.dim(a2) > 0) {
                        Matrix A = sign < 0 ? M.theta_at(i, a) : M.eps_at(i, a);
                        Matrix K = kron(A, Matrix::identity(F, db));
                        int o2 = offset(w2, a2, b);
                        for (int r = 0; r < K.rows(); ++r)
                            for (int c = 0; c < K.cols(); ++c)
                                if (!K(r, c).is_zero()) R(o2 + r, off + c) += K(r, c);
                    }
                    PWeight b2 = N.shift(b, i, sign);
                    if (N.dim(b2) > 0) {
                        Matrix B = sign < 0 ? N.theta_at(i, b) : N.eps_at(i, b);
                        Matrix K = kron(Matrix::identity(F, da), B).scaled(F->zeta_pow(-a[i]));
                        int o2 = offset(w2, a, b2);
                        for (int r = 0; r < K.rows(); ++r)
                            for (int c = 0; c < K.cols(); ++c)
                                if (!K(r, c).is_zero()) R(o2 + r, off + c) += K(r, c);
                    }
                }
                store(ops, w, std::move(R));
            }
        }
    return T;
}

CModule dual(const CModule& M, DualFlavor flavor) {
    CModule R = empty_module(M.D, M.F);
    const CycField* F = M.F;
    auto neg = [](PWeight w) {
        for (auto& x : w) x = -x;
        return w;
    };
    for (auto& [w, d] : M.dims) R.dims[neg(w)] = d;
    for (int i = 0; i < M.D.rank(); ++i) {
        long di = M.D.d(i);
        for (auto& [w, d] : R.dims) {
            (void)d;
            long p = w[i];
            // theta on R_w is the transpose of theta: M_{-w+i'} -> M_{-w}
            PWeight src = R.shift(neg(w), i, 1);
            if (M.dim(src) > 0) {
                long e = flavor == DualFlavor::vee ? -p : 2 * di - p;
                store(R.theta[i], w, M.theta_at(i, src).transpose().scaled(-F->zeta_pow(e)));
            }
            PWeight src2 = R.shift(neg(w), i, -1);
            if (M.dim(src2) > 0) {
                long e = flavor == DualFlavor::vee ? -p : -p - 2 * di;
                store(R.eps[i], w, M.eps_at(i, src2).transpose().scaled(-F->zeta_pow(e)));
            }
        }
    }
    return R;
}

RelationReport check_relations(const CModule& M, int radical_depth) {
    RelationReport rep;
    const CycField* F = M.F;
    int n = M.D.rank();
    for (auto& [w, d] : M.dims) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                PWeight wj = M.shift(w, j, -1), wi = M.shift(w, i, 1);
                Matrix lhs = M.eps_at(i, wj) * M.theta_at(j, w);
                Matrix rhs = (M.theta_at(j, wi) * M.eps_at(i, w)).scaled(F->zeta_pow(M.D.dot(i, j)));
                Matrix diff = lhs - rhs;
                if (i == j) diff = diff - Matrix::identity(F, d).scaled(F->q_bracket(w[i]));
                if (!diff.is_zero()) rep.commutation = false;
            }
    }
    // elements of the radical of S must act by zero, through theta and through eps
    Colors C = Colors::of(M.D, F);
    std::vector<Elem> rad;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) rad.push_back(serre_element(C, M.D, i, j));
    if (radical_depth > 0) {
        FreeAlgebra A(C);
        for (int d = 1; d <= radical_depth; ++d)
            for (auto& nu : roots_of_depth(n, d)) {
                const auto& B = A.basis(nu);
                for (auto& k : kernel_basis(A.gram_S(nu))) {
                    Elem e;
                    for (size_t t = 0; t < B.size(); ++t) add_to(e, B[t], k[t]);
                    rad.push_back(std::move(e));
                }
            }
    }
    for (auto& f : rad)
        for (bool raise : {false, true})
            for (auto& [w, d] : M.dims) {
                Matrix acc;
                bool first = true;
                for (auto& [word, c] : f) {
                    Matrix m = word_operator(M, word, raise, w).scaled(c);
                    acc = first ? m : acc + m;
                    first = false;
                }
                if (!first && !acc.is_zero()) rep.serre = false;
            }
    return rep;
}

namespace {

PWeight root_pw(const CartanDatum& D, int i) {
    PWeight p(D.rank());
    for (int k = 0; k < D.rank(); ++k) p[k] = D.dot(i, k);
    return p;
}

// span of theta_i M_{i'} + eps_i M_{-i'} inside M_0
Matrix boundary_span(const CModule& M, const PWeight& zero) {
    int d0 = M.dim(zero);
    std::vector<Matrix> parts;
    for (int i = 0; i < M.D.rank(); ++i) {
        PWeight up = root_pw(M.D, i), dn = up;
        for (auto& x : dn) x = -x;
        if (M.dim(up) > 0) parts.push_back(M.theta_at(i, up));
        if (M.dim(dn) > 0) parts.push_back(M.eps_at(i, dn));
    }
    int cols = 0;
    for (auto& p : parts) cols += p.cols();
    Matrix W(M.F, d0, cols);
    int c0 = 0;
    for (auto& p : parts) {
        for (int r = 0; r < d0; ++r)
            for (int c = 0; c < p.cols(); ++c) W(r, c0 + c) = p(r, c);
        c0 += p.cols();
    }
    return W;
}

}  // namespace

Matrix invariants(const CModule& M) {
    PWeight zero(M.D.rank(), 0);
    int d0 = M.dim(zero);
    std::vector<Matrix> ops;
    int rows = 0;
    for (int i = 0; i < M.D.rank(); ++i) {
        ops.push_back(M.theta_at(i, zero));
        ops.push_back(M.eps_at(i, zero));
        rows += ops[ops.size() - 2].rows() + ops.back().rows();
    }
    Matrix S(M.F, rows, d0);
    int r0 = 0;
    for (auto& o : ops) {
        for (int r = 0; r < o.rows(); ++r)
            for (int c = 0; c < d0; ++c) S(r0 + r, c) = o(r, c);
        r0 += o.rows();
    }
    auto ker = kernel_basis(S);
    Matrix K(M.F, d0, static_cast<int>(ker.size()));
    for (size_t j = 0; j < ker.size(); ++j)
        for (int r = 0; r < d0; ++r) K(r, static_cast<int>(j)) = ker[j][r];
    return K;
}

int coinvariants_dim(const CModule& M) {
    PWeight zero(M.D.rank(), 0);
    return M.dim(zero) - rank(boundary_span(M, zero));
}

int bracket_dim(const CModule& M) {
    PWeight zero(M.D.rank(), 0);
    Matrix W = boundary_span(M, zero);
    Matrix K = invariants(M);
    Matrix WK(M.F, W.rows(), W.cols() + K.cols());
    for (int r = 0; r < W.rows(); ++r) {
        for (int c = 0; c < W.cols(); ++c) WK(r, c) = W(r, c);
        for (int c = 0; c < K.cols(); ++c) WK(r, W.cols() + c) = K(r, c);
    }
    return rank(WK) - rank(W);
}

int conformal_blocks(const CartanDatum& D, const CycField* F, const EllData& E, const std::vector<Weight>& lambdas) {
    for (auto& l : lambdas)
        if (!in_first_alcove(D, E, l)) throw std::domain_error("conformal_blocks: weight outside the first alcove");
    CModule T = trivial_module(D, F);
    for (auto& l : lambdas) T = tensor(T, irreducible_module(D, F, l));
    return bracket_dim(T);
}

}  // namespace qs
