import random

import pytest
from hypothesis import given

from linkinv.diagram import (
    DiagramError,
    canonical_code,
    disjoint_union,
    format_pd,
    from_pd_tuples,
    mirror,
    parse_pd,
    simplify,
    smooth_oriented,
    split_parts,
    sublink,
    switch_crossing,
    unknot,
    unlink,
    validate,
)
from linkinv.families import borromean, gen, hopf, trefoil
from linkinv.jones import jones_value

from strategies import diagrams

HOPF_PD = """\
link hopf components 2
comp 1: 1 2
comp 2: 3 4
X(1,3,2,4)
X(3,2,4,1)
"""


def test_parse_pd_basic():
    d = parse_pd(HOPF_PD)
    assert d.n_crossings == 2 and d.n_components == 2
    assert validate(d) == []


@given(diagrams())
def test_format_parse_roundtrip(d):
    e = parse_pd(format_pd(d))
    assert e.crossings == d.crossings and e.signs == d.signs


def test_parse_error_carries_line_number():
    bad = "link k components 1\ncomp 1: 1 2\nX(1,2,2\n"
    with pytest.raises(DiagramError, match="line 3"):
        parse_pd(bad)


def test_parse_component_count_mismatch():
    with pytest.raises(DiagramError):
        parse_pd("link k components 2\ncomp 1: 1\n")


def test_structural_error():
    with pytest.raises(DiagramError):
        from_pd_tuples([(1, 2, 3, 4)], [(1, 2, 3, 4)])


def _relabel(d, seed):
    labels = sorted({e for c in d.components for e in c})
    perm = labels[:]
    random.Random(seed).shuffle(perm)
    m = dict(zip(labels, perm))
    xs = [tuple(m[v] for v in x) for x in d.crossings]
    comps = [tuple(m[v] for v in c) for c in d.components]
    return from_pd_tuples(xs, comps, d.signs)


@given(diagrams())
def test_canonical_code_ignores_labels(d):
    assert canonical_code(_relabel(d, 1)) == canonical_code(d)


def test_canonical_code_tells_trefoils_apart():
    assert canonical_code(trefoil("right")) != canonical_code(trefoil("left"))


@given(diagrams())
def test_mirror_flips_signs(d):
    assert sorted(mirror(d).signs) == sorted(-s for s in d.signs)
    assert canonical_code(mirror(mirror(d))) == canonical_code(d)


def test_switch_and_smooth():
    h = hopf(1)
    s = switch_crossing(h, 0)
    assert s.signs[0] == -1
    k = smooth_oriented(h, 0)
    assert k.n_crossings == 1 and k.n_components == 1


def test_sublink_and_split_parts():
    b = borromean()
    for i in range(3):
        sub = sublink(b, [j for j in range(3) if j != i])
        assert sub.n_components == 2
        assert jones_value(sub) == jones_value(unlink(2))
    u = disjoint_union(trefoil(), unknot())
    assert len(split_parts(u)) == 2


@given(diagrams())
def test_simplify_keeps_jones(d):
    assert jones_value(simplify(d), memo=False) == jones_value(d, memo=False, method="statesum")


def test_linking_numbers():
    assert hopf(1).linking_number(0, 1) == 1
    assert hopf(-1).linking_number(0, 1) == -1
    assert gen("whitehead").linking_number(0, 1) == 0
