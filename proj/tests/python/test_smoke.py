import pytest

import pivotlab as pl


def test_clique_counts():
    k3 = pl.BooleanFunction.parse("n=3; x0*x1+x0*x2+x1*x2")
    assert pl.count_flat(k3, "IH")["count"] == 4
    assert pl.count_flat_quadratic(pl.Graph.complete(12))["count"] == 2**11


def test_cubic_witness():
    p = pl.BooleanFunction.parse(
        "n=6; x0*x1*x2+x0*x1*x3+x0*x1*x5+x0*x2*x4+x0*x2*x5+x0*x3*x4+x0*x3*x5+x0*x4*x5+"
        "x1*x2*x3+x1*x2*x4+x1*x2*x5+x1*x3*x4+x1*x4*x5+x2*x3*x4+x2*x3*x5+x3*x4*x5"
    )
    result = pl.count_flat(p, "IH", witnesses=4)
    assert result["witnesses"] == ["IIIIII", "HHHHHH"]
    assert pl.flat_h_sets(p) == [0, 63]


def test_pivot_and_orbit():
    star = pl.Graph.from_hex("3:6,1,1")
    assert pl.pivot(star, 0, 1).hex() == "3:2,5,2"
    assert pl.orbit(pl.Graph.star(4))["labelled_size"] == 4
    assert str(pl.pivot_anf(pl.BooleanFunction.parse("n=3; x0*x1+x1*x2"), 0, 1)) == "n=3; x0*x1+x0*x2"
    with pytest.raises(pl.NotAnEdgeError):
        pl.pivot(star, 1, 2)


def test_classification():
    assert pl.classify(7)["count"] == 134
    assert pl.classify(4, mode="labelled")["count"] == 11
    codes = pl.classify_codes(6)
    assert (codes["indecomposable"], codes["isodual"]) == (13, 3)
    with pytest.raises(pl.BudgetError):
        pl.classify(9)


def test_codes():
    hamming = pl.LinearCode.parse("7 4\n1000110\n0100101\n0010011\n0001111\n")
    assert hamming.information_sets() == hamming.information_sets_brute() == 28
    assert hamming.dual().k == 3
    rep = pl.LinearCode.parse("3 1\n111\n")
    assert not pl.equivalent(rep, rep.dual())


def test_table_and_errors():
    t = pl.table(3, 6)
    assert t["ok"]
    assert t["rows"][5]["i_P"] == "35"
    with pytest.raises(pl.ParseError):
        pl.BooleanFunction.parse("n=2; x0*x0")
