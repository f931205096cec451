import pytest

import crystal_betti as cb


def test_lattice_info():
    info = cb.lattice_info([2, 1])
    assert info["labels"] == ["s", "x1_1", "x1_2", "x2_1", "t"]
    assert not info["distributive"] and not info["modular"]
    assert info["incomparable_pairs"] == 2


def test_groebner_initial_ideal():
    g = cb.groebner([2, 1])
    assert g["initial_ideal"] == ["x1_1*x2_1", "x1_2*x2_1", "s*x1_2*t"]
    assert g["basis"][0] == "x1_1*x2_1 - s*t"


def test_betti_crystal():
    t = cb.betti([5, 1])
    assert t[(0, 0)] == 1
    assert cb.total_betti(t, 1) == 9
    assert cb.total_betti(t, 2) == 20
    assert cb.betti([5, 1], route="taylor") == t
    truncated = cb.betti([3, 2], max_index=2)
    assert truncated[(2, 3)] == 9 and truncated[(2, 4)] == 8


def test_betti_of_monomials():
    # (x*y, y*z) has one linear syzygy
    t = cb.betti_of_monomials([[1, 1, 0], [0, 1, 1]], 3)
    assert t == {(0, 0): 1, (1, 2): 2, (2, 3): 1}


def test_render_betti_csv():
    assert cb.render_betti([2, 1], "csv") == "i,j,value\n0,0,1\n1,2,2\n1,3,1\n2,3,1\n2,4,1\n"


def test_verify_and_tables():
    rows = cb.verify(1, 4)
    assert rows and all(r["pass"] for r in rows)
    table = cb.table1()
    assert table[0] == (2, 3, 6)
    assert all(n1 != 13 for n1, _, _ in table)
    fig = cb.figure_data(1, 5)
    assert fig[-1] == (5, 20, 20)


def test_lattice_check():
    r = cb.lattice_check("0 a\na b\nb 1\n0 c\nc 1\n")
    assert r["valid"] and not r["modular"]
    bad = cb.lattice_check("0 a\n0 b\n")
    assert not bad["valid"] and "NotALattice" in bad["error"]


def test_syzygy_report():
    rep = cb.syzygy_report(3, 1)
    assert rep["pass"] is True
    assert rep["betti_row2"]["3"] == 3


def test_errors_raise():
    with pytest.raises(cb.CrystalError):
        cb.betti([2, 0])
    with pytest.raises(ValueError):
        cb.groebner([2, 1], order="lex")
    with pytest.raises(cb.CrystalError):
        cb.betti([2, 1], characteristic=6)
