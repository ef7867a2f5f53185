from fractions import Fraction

import pytest

import qsheaf


def test_field_header():
    f = qsheaf.field("A1", 5)
    assert f["N"] == 20
    assert f["phi_N"] == [1, 0, -1, 0, 1, 0, -1, 0, 1]


def test_sl2_dims_drop_at_l():
    assert [qsheaf.dim_f("A1", 5, [a]) for a in range(7)] == [1, 1, 1, 1, 1, 0, 0]
    assert sum(qsheaf.dim_L("A1", 5, [4], [a]) for a in range(7)) == 5


def test_gram_entry():
    g = qsheaf.gram("A1", 5, [2])
    one_plus_zeta2 = qsheaf.to_fractions(g["matrix"][0][0])
    # 1 + zeta^2 = 1 + x^8 = x^2 - x^4 + x^6 modulo Phi_20
    assert one_plus_zeta2 == [Fraction(c) for c in (0, 0, 1, 0, -1, 0, 1, 0)]
    assert g["basis"] == [[0, 0]]


def test_comparison_dims():
    assert qsheaf.tor_dims("A1", 5, [[2]], [3]) == [0, 0, 0, 0]
    assert qsheaf.arrangement_cohomology("A1", 5, [3], [2], "star", True) == [0, 0, 1, 1]
    assert qsheaf.arrangement_cohomology("A1", 5, [3], [2], "ic", True) == [0, 0, 1, 0]


def test_blocks():
    assert qsheaf.conformal_blocks("A1", 10, [[1], [1]]) == 1
    assert qsheaf.conformal_blocks("A1", 10, [[3], [3], [3]]) == 0
    assert qsheaf.conformal_blocks("A1", 10, [[2], [2], [3], [3]]) == 1


def test_verify_and_errors():
    assert all(r["pass"] for r in qsheaf.verify("A1", 5, "forms", 3))
    with pytest.raises(ValueError):
        qsheaf.verify("A1", 5, "nope")
    with pytest.raises(ValueError):
        qsheaf.field("A1", 6, 3)
