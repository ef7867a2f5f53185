#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsheaf/verify.hpp"

using namespace qs;

namespace {
std::vector<int> eta_of(int N) {
    std::vector<int> e(N);
    for (int j = 0; j < N; ++j) e[j] = j + 1;
    return e;
}
}  // namespace

TEST_CASE("Hochschild complex of a Verma module") {
    auto A1 = CartanDatum::preset("A1");
    const CycField* F = field_for(A1, 5, 1);
    Colors C = Colors::of(A1, F);
    HochData H{C, {{2}}, {2}};
    HochComplex X = build_complex(H);
    CHECK(X.cx.dims == std::vector<int>{1, 2, 1});
    CHECK(X.cx.d_squared_zero());
    CHECK(tor_dims(H) == std::vector<int>{0, 0, 0});

    // [Lambda] = 0 at nu = i: the pair shows up on the dual side
    HochData Z{C, {{5}}, {1}};
    CHECK(tor_dims(Z) == std::vector<int>{0, 0});
    CHECK(cohomology_dims(build_dual_complex(Z).cx) == std::vector<int>{1, 1});
    CHECK(cohomology_dims(build_complex_f(Z)) == std::vector<int>{1, 0});

    HochData H2{C, {{1}, {3}}, {2}};
    HochComplex X2 = build_complex(H2), Y2 = build_dual_complex(H2);
    CHECK(is_chain_map(X2.cx, Y2.cx, shapovalov_map(H2, X2)));
}

TEST_CASE("averaging over an unfolding") {
    auto A1 = CartanDatum::preset("A1");
    const CycField* F = field_for(A1, 5, 1);
    Elem a = symmetrize_average({0, 0}, Elem{{Word{0, 0}, F->one()}});
    CHECK(a.size() == 2);
    CHECK(a.at(Word{0, 1}).is_one());
    CHECK(a.at(Word{1, 0}).is_one());
    HochData H{Colors::of(A1, F), {{3}}, {2}};
    auto pi = std::vector<int>{0, 0};
    HochData HJ = unfold(H, pi);
    HochComplex X = build_complex(H), XJ = build_complex(HJ);
    CHECK(is_chain_map(X.cx, XJ.cx, average_map(H, X, HJ, XJ, pi)));
    CHECK_THROWS_AS(unfold(H, {0}), ParameterError);
}

TEST_CASE("positive arrangement complex") {
    auto A1 = CartanDatum::preset("A1");
    const CycField* F = field_for(A1, 5, 1);
    auto A = ConfigArrangement::make(A1, F, {0, 0}, {2});
    ArrComplex P = complex_shriek(A);
    CHECK(P.cx.dims == std::vector<int>{2, 4, 2});
    CHECK(P.cx.d_squared_zero());
    CHECK(sign_rho({0, 0, 0}, 0) == 1);
    CHECK(facets(3, 1).size() == 7);
    for (int N = 1; N <= 3; ++N) {
        std::vector<int> pi(N, 0);
        auto B = ConfigArrangement::make(A1, F, pi, {2});
        ArrComplex S = complex_shriek(B);
        HochData H = hoch_data(B);
        HochComplex X = build_complex(unfold(H, pi));
        CHECK(is_chain_map(S.cx, X.cx, phi_iso(B, S, X, eta_of(N))));
        CHECK(cohomology_dims(skew_symmetrize(B, S, true)) == tor_dims(H));
    }
}

TEST_CASE("full arrangement complexes and m") {
    auto A1 = CartanDatum::preset("A1");
    const CycField* F = field_for(A1, 5, 1);
    auto A = ConfigArrangement::make(A1, F, {0, 0, 0}, {2});
    ArrComplex S = full_complex(A, Extension::shriek), T = full_complex(A, Extension::star);
    CHECK(S.cx.dims == std::vector<int>{24, 72, 72, 24});
    ChainMap m = m_map(A, S, T);
    CHECK(is_chain_map(S.cx, T.cx, m));
    for (auto& M : m.f) CHECK(M.is_symmetric());
    CHECK(cohomology_dims(arrangement_complex(A, Extension::star, true)) == std::vector<int>{0, 0, 1, 1});
    CHECK(cohomology_dims(arrangement_complex(A, Extension::ic, true)) == std::vector<int>{0, 0, 1, 0});
    CHECK(sigma_pi({0, 0, 0}).size() == 6);
    CHECK(sigma_pi({0, 1, 0}).size() == 2);
}

TEST_CASE("one-point arrangement") {
    auto A1 = CartanDatum::preset("A1");
    const CycField* F = field_for(A1, 5, 1);
    OnePoint P = one_point(F, Colors::of(A1, F), 0, 2);
    CycNum q = F->zeta_pow(-2);
    CHECK(P.q == q);
    CHECK(P.m(0, 1) == q);
    CHECK(P.m(1, 0) == q);
    CHECK(P.m(0, 0).is_one());
    CHECK(P.u_shriek(1, 1) == -F->one());
    CHECK(P.u_star(1, 0) == -q);
    CHECK(P.v_star(0, 0).is_zero());
    // q^2 = 1 makes m degenerate
    OnePoint Z = one_point(F, Colors::of(A1, F), 0, 5);
    CHECK(rank(Z.m) == 1);
}

TEST_CASE("diagonal arrangement against S") {
    auto A2 = CartanDatum::preset("A2");
    const CycField* F = field_for(A2, 5, 1);
    auto A = ConfigArrangement::make(A2, F, {0, 1}, {}, ArrFlavor::diagonal);
    DiagonalData d = diagonal_m_matrix(A);
    CHECK(d.sequences.size() == 2);
    FreeAlgebra FJ(A.colors.unfold({0, 1}));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(d.m(a, b) == FJ.form_S(d.sequences[a], d.sequences[b]));
    CHECK_THROWS(diagonal_m_matrix(ConfigArrangement::make(A2, F, {0, 1}, {1, 1})));
}

TEST_CASE("modules in C and conformal blocks") {
    auto A1 = CartanDatum::preset("A1");
    const CycField* F = field_for(A1, 10, 1);
    EllData E = make_ell_data(A1, 10);
    CHECK(irreducible_module(A1, F, {0}).total_dim() == 1);
    CModule L2 = irreducible_module(A1, F, {2});
    CHECK(L2.total_dim() == 3);
    CHECK(check_relations(L2, 6).ok());
    for (auto fl : {DualFlavor::vee, DualFlavor::star}) {
        CHECK(check_relations(dual(L2, fl), 6).ok());
        CHECK(dual(dual(L2, fl), fl).dims == L2.dims);
    }
    CModule T = tensor(irreducible_module(A1, F, {1}), irreducible_module(A1, F, {1}));
    CHECK(check_relations(T, 0).ok());
    CHECK(invariants(T).cols() == 1);
    CHECK(conformal_blocks(A1, F, E, {{1}, {1}}) == 1);
    CHECK(conformal_blocks(A1, F, E, {{3}, {3}, {3}}) == 0);
    CHECK(conformal_blocks(A1, F, E, {{2}, {2}, {2}}) == 1);
    CHECK(conformal_blocks(A1, F, E, {{0}}) == 1);
    CHECK(conformal_blocks(A1, F, E, {{1}, {2}, {3}}) == conformal_blocks(A1, F, E, {{3}, {1}, {2}}));
    CHECK_THROWS_AS(conformal_blocks(A1, F, E, {{4}}), std::domain_error);
}
