import pytest

from linkinv.diagram import sublink, switch_crossing, smooth_oriented
from linkinv.families import (
    FAMILIES,
    braid_closure,
    gen,
    marked_site,
    markers,
    parse_spec,
)
from linkinv.jones import jones_value
from linkinv.poly import DELTA


@pytest.mark.parametrize(
    "spec, comps",
    [
        ("unlink:m=3", 3),
        ("hopf", 2),
        ("trefoil:hand=left", 1),
        ("whitehead", 2),
        ("B3", 3),
        ("brunnian(m=5)", 5),
        ("Wn(B3):n=2,sign=-", 3),
        ("Wn(hopf):n=1,i=0", 2),
        ("L(m=4)", 5),
        ("A", 3),
        ("Lp3", 5),
        ("Lk3:k=2", 4),
        ("Wkn13:k=2,n=2", 3),
    ],
)
def test_component_counts(spec, comps):
    assert gen(spec).n_components == comps


def test_spec_roundtrip():
    s = parse_spec("Wn(B3):n=2,sign=-")
    assert s.family == "W_double" and s.base.family == "brunnian"
    assert s.params == {"n": 2, "sign": "-"}
    assert gen(str(s)).crossings == gen("Wn(B3):n=2,sign=-").crossings


@pytest.mark.parametrize("bad", ["", "Foo", "B3(hopf)", "hopf:colour=red", "L(m=2)", "Wn(B3):n=-1", "unlink:m=0"])
def test_bad_specs(bad):
    with pytest.raises(ValueError):
        gen(bad)


def test_every_family_generates():
    for f in FAMILIES:
        assert gen(f).n_crossings >= 0


@pytest.mark.parametrize("m", [3, 4, 5])
def test_brunnian_sublinks_trivial(m):
    b = gen(f"B{m}")
    assert jones_value(b) != DELTA ** (m - 1)
    for drop in range(m):
        sub = sublink(b, [j for j in range(m) if j != drop])
        assert jones_value(sub) == DELTA ** (m - 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_double_has_zero_framing(n):
    w = gen(f"Wn(B3):n={n}")
    assert all(w.linking_number(i, j) == 0 for i in range(3) for j in range(i))


def test_double_of_trefoil_pattern_lk_zero():
    w = gen("Wn(trefoil):n=2,i=0")
    assert w.n_components == 1
    assert "clasp" in markers(w)


def test_W0_is_unlink():
    assert jones_value(gen("Wn(B3):n=0")) == DELTA**2


def test_markers():
    L3 = gen("L3")
    assert set(markers(L3)) >= {"A", "B"}
    with pytest.raises(KeyError):
        marked_site(L3, "nope")


def test_W2_clasp_switch_unlinks():
    w = gen("Wn(B3):n=2")
    assert jones_value(switch_crossing(w, marked_site(w, "clasp"))) == DELTA**2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_clasp_switch_lowers_twists(n):
    w = gen(f"Wn(B3):n={n}")
    got = jones_value(switch_crossing(w, marked_site(w, "clasp")))
    assert got == jones_value(gen(f"Wn(B3):n={n - 2}"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_clasp_smoothing_gives_L3(n):
    w = gen(f"Wn(B3):n={n}")
    assert jones_value(smooth_oriented(w, marked_site(w, "clasp"))) == jones_value(gen("L3"))


def test_braid_closure_components():
    assert braid_closure([1, 1, 1]).n_components == 1
    assert braid_closure([1, -2, 1, -2, 1, -2]).n_components == 3
    assert braid_closure([1], 3).n_components == 2
    with pytest.raises(ValueError):
        braid_closure([0])
