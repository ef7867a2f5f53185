#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsheaf/verma.hpp"

using namespace qs;

TEST_CASE("cyclotomic polynomial degree") {
    CHECK(CycField::cyclotomic(20).size() == 9);
    CHECK(CycField::cyclotomic(7).size() == 7);
    const CycField* F = CycField::get(5, 1, 2);
    CHECK(F->N() == 20);
    CHECK(F->zeta_pow(5).is_one());
    CHECK((F->zeta_pow(3) * F->zeta_pow(-3)).is_one());
    CycNum a = F->one() + F->zeta_pow(1);
    CHECK((a * a.inv()).is_one());
}

TEST_CASE("A1 free algebra") {
    auto D = CartanDatum::preset("A1");
    const CycField* F = field_for(D, 5, 1);
    FreeAlgebra A(Colors::of(D, F));
    CHECK(A.form_S(Word{0, 0}, Word{0, 0}) == F->one() + F->zeta_pow(2));
    for (int a = 1; a < 5; ++a) CHECK(A.dim_f(RootVec{a}) == 1);
    CHECK(A.dim_f(RootVec{5}) == 0);
    CHECK(form_S_perm(A.colors(), Word{0, 0, 0}, Word{0, 0, 0}) == A.form_S(Word{0, 0, 0}, Word{0, 0, 0}));
}

TEST_CASE("Verma oracle A2") {
    auto D = CartanDatum::preset("A2");
    const CycField* F = field_for(D, 5, 1);
    Verma V(Colors::of(D, F), {2, 3});
    for (auto& x : words_of_weight({2, 1}))
        for (auto& y : words_of_weight({2, 1})) CHECK(V.form(x, y) == V.form_oracle(x, y));
}
