#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsheaf/verify.hpp"

using namespace qs;

TEST_CASE("field arithmetic") {
    const CycField* F = CycField::get(5, 1, 1);
    CHECK(F->N() == 10);
    CHECK(F->phi() == 4);
    CycNum h = F->zeta_pow(1, 2);
    CHECK(h * h == F->zeta_pow(1));
    CycNum x = F->integer(3) + F->zeta_pow(2) * F->integer(-2);
    CHECK((x * x.inv()).is_one());
    CHECK(CycNum::from_coeffs(F, x.coeffs()) == x);
    CHECK(F->q_bracket(5).is_zero());
    CHECK_FALSE(F->q_bracket(2).is_zero());
    CHECK_THROWS_AS(CycField::get(6, 3, 1), ParameterError);
    CHECK_THROWS_AS(CycField::get(1, 1, 1), ParameterError);
}

TEST_CASE("cartan data and ell data") {
    CHECK(CartanDatum::preset("A1").varpi() == 2);
    auto B2 = CartanDatum::preset("B2");
    CHECK_FALSE(B2.simply_laced());
    CHECK_THROWS_AS(CartanDatum::preset("Q7"), ParameterError);
    CHECK_THROWS_AS(CartanDatum({{2, 1}, {1, 2}}), ParameterError);
    auto A1 = CartanDatum::preset("A1");
    EllData E = make_ell_data(A1, 10);
    CHECK(E.ell == 5);
    CHECK(alcove_weights(A1, E).size() == 4);
    auto A2 = CartanDatum::preset("A2");
    CHECK(dual_weight(A2, {1, 0}) == Weight{0, 1});
    CHECK(dual_weight(B2, {1, 0}) == Weight{1, 0});
    CHECK(weights_up_to(2, 2).size() == 5);
}

TEST_CASE("linear algebra over the field") {
    const CycField* F = CycField::get(5, 1, 2);
    Matrix M(F, 2, 3);
    M(0, 0) = F->one();
    M(0, 1) = F->zeta_pow(1);
    M(1, 0) = F->zeta_pow(1);
    M(1, 1) = F->zeta_pow(2);
    M(1, 2) = F->one();
    CHECK(rank(M) == 2);
    CHECK(kernel_basis(M).size() == 1);
    Matrix S(F, 2, 2);
    S(0, 0) = F->one();
    S(0, 1) = F->zeta_pow(1);
    S(1, 0) = F->zeta_pow(1);
    S(1, 1) = F->zeta_pow(2);
    CHECK(determinant(S).is_zero());

    ChainComplex C;
    C.F = F;
    C.lo = -1;
    C.dims = {1, 1};
    Matrix one(F, 1, 1);
    one(0, 0) = F->one();
    C.d = {one};
    CHECK(cohomology_dims(C) == std::vector<int>{0, 0});
    C.d = {Matrix(F, 1, 1)};
    CHECK(cohomology_dims(C) == std::vector<int>{1, 1});
    CHECK(euler_characteristic({1, 1}, -1) == 0);
}

TEST_CASE("free algebra operations") {
    auto A2 = CartanDatum::preset("A2");
    const CycField* F = field_for(A2, 5, 1);
    Colors C = Colors::of(A2, F);
    Tensor d1 = comult(C, Word{0});
    CHECK(d1.size() == 2);
    CHECK(d1.at({Word{0}, Word{}}).is_one());
    CHECK(d1.at({Word{}, Word{0}}).is_one());
    CHECK(comult(C, Word{}).size() == 1);
    CHECK(comult(C, Word{0, 1}).size() == 4);

    auto A1 = CartanDatum::preset("A1");
    const CycField* F1 = field_for(A1, 5, 1);
    Colors C1 = Colors::of(A1, F1);
    Elem d = delta_i(C1, 0, Elem{{Word{0, 0}, F1->one()}});
    CHECK(d.size() == 1);
    CHECK(d.at(Word{0}) == F1->one() + F1->zeta_pow(2));
    Tensor it = iterated_comult_plus(C1, Word{0, 0});
    CHECK(it.size() == 1);
    CHECK(it.begin()->second == F1->one() + F1->zeta_pow(2));

    Elem s = serre_element(C, A2, 0, 1);
    CHECK(s.size() == 3);
    CHECK(s.at(Word{0, 0, 1}).is_one());
    CHECK(s.at(Word{0, 1, 0}) == -(F->zeta_pow(1) + F->zeta_pow(-1)));
    CHECK_THROWS_AS(serre_element(C, A2, 0, 0), ParameterError);
    FreeAlgebra A(C);
    for (auto& w : words_of_weight({2, 1})) CHECK(A.form_S(s, Elem{{w, F->one()}}).is_zero());
}

TEST_CASE("Verma modules") {
    auto A1 = CartanDatum::preset("A1");
    const CycField* F = field_for(A1, 5, 1);
    Verma V = Verma::of(A1, F, {4});
    int total = 0;
    for (int a = 0; a <= 6; ++a) total += V.dim_L({a});
    CHECK(total == 5);
    CHECK(V.dim_L({5}) == 0);

    auto A2 = CartanDatum::preset("A2");
    const CycField* F2 = field_for(A2, 5, 1);
    Verma W = Verma::of(A2, F2, {2, 3});
    FreeAlgebra A(W.colors());
    for (auto& z : words_of_weight({1, 1})) {
        Tensor t = coaction(W, z);
        for (auto& x : words_of_weight({1, 0}))
            for (auto& y : words_of_weight({0, 1}))
                CHECK(W.form(Word{x[0], y[0]}, z) == pair_coaction(A, W, x, y, t));
    }
    auto B2 = CartanDatum::preset("B2");
    Verma U = Verma::of(B2, field_for(B2, 5, 1), {1, 1});
    CHECK_THROWS_AS(U.form_oracle(Word{0}, Word{0}), ParameterError);
}

TEST_CASE("verify suites") {
    VerifyConfig cfg;
    cfg.D = CartanDatum::preset("A1");
    cfg.max_depth = 3;
    for (auto& r : run_verify(cfg, "forms")) CHECK_MESSAGE(r.pass, r.tag);
    for (auto& r : run_verify(cfg, "coaction")) CHECK_MESSAGE(r.pass, r.tag);
    CHECK_THROWS_AS(run_verify(cfg, "nope"), ParameterError);
}
