import os
from fractions import Fraction

import pytest

import padic_lattice as pl

DATA = os.environ.get("PADIC_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def order(*ks):
    return [pl.NormValue.from_order(k) for k in ks]


def test_cyclotomic_example():
    ex = pl.cyclotomic_example()
    lat, norm = ex.lattice, ex.norm
    assert norm.certified
    assert pl.successive_maxima(lat, norm) == order(0, 1, 4)
    d = pl.dual(lat)
    assert d.basis[2] == ["0", "0", "1/32", "1/32"]
    assert pl.successive_maxima(d, norm) == order(-5, -1, 0)
    assert pl.determinant(lat).order == Fraction(11, 2)
    assert pl.determinant(lat).format(2) == "2^-11/2"
    vec, value = pl.lvp(lat, norm)
    assert value == pl.NormValue.from_order(0)
    report = pl.verify(lat, norm)
    assert report["passed"]
    assert all(report["invariants"].values())


def test_cvp_matches_enumeration():
    q2 = pl.Field.qp(2)
    lat = pl.Lattice(q2, [["1", "0"]])
    fast = pl.cvp(lat, pl.Norm.sup(), ["0", "1/2"])
    slow = pl.cvp_bruteforce(lat, pl.Norm.sup(), ["0", "1/2"], 3)
    assert fast["distance"] == slow["distance"] == pl.NormValue.from_order(-1)
    assert fast["closest"] == ["0", "0"]


def test_constants_and_orthogonality():
    q2 = pl.Field.qp(2)
    c = pl.equiv_constants(pl.Norm.weighted(["1", "2^-1"], 2), q2, 2)
    assert (c["c1"], c["c2"]) == (pl.NormValue.from_order(0), pl.NormValue.from_order(-1))
    assert not pl.is_orthogonal(q2, [["1", "1"], ["1", "-1"]], pl.Norm.sup())
    o = pl.orthogonalize(pl.Lattice(q2, [["1", "1"], ["1", "-1"]]), pl.Norm.sup())
    assert o["certified"] and o["maxima"] == order(0, 1)


def test_function_field_file():
    f = pl.load_lattice_file(os.path.join(DATA, "sup_f2t.lat"))
    assert f.field.kind == pl.FieldKind.FpT
    assert f.target is not None
    r = pl.cvp(f.lattice, f.norm, f.target)
    assert r["closest"] in f.lattice
    assert pl.parse_lattice_file(f.format()).lattice.basis == f.lattice.basis


def test_errors():
    q2 = pl.Field.qp(2)
    with pytest.raises(pl.MathError):
        pl.Lattice(q2, [["1", "2"], ["2", "4"]])
    with pytest.raises(pl.ParseError):
        pl.Lattice(q2, [["3/0"]])
    with pytest.raises(pl.ParseError):
        pl.parse_lattice_file("[basis]\n1\n")
