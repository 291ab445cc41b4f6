"""Generators for the link families used throughout the package.

Every generator returns a :class:`LinkDiagram`.  Crossings of interest
(twist sites, skein sites) are remembered per diagram and can be looked up
with :func:`marked_site`.

Family mini-language::

    unlink(m=3)   hopf(sign=-)   trefoil(hand=left)   whitehead
    borromean     B4             brunnian(m=5)
    Wn(B3):n=2,sign=-            Wn(hopf):n=1,i=0
    L(m=4)   L3   A   Lp(m=3)   Lk3:k=2   Wkn13(B3):k=2,n=2
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .diagram import (
    LinkDiagram,
    _finish,
    _work,
    apply_moves,
    from_pd_tuples,
    mirror,
    unlink as _unlink,
)
from .satellite import Site, band_satellite

__all__ = [
    "FamilySpec",
    "FAMILIES",
    "parse_spec",
    "gen",
    "marked_site",
    "markers",
    "whitehead_double",
    "connected_sum",
    "hopf",
    "trefoil",
    "whitehead_link",
    "borromean",
    "brunnian",
    "W_double",
    "L_aux",
    "A_aux",
    "L_prime",
    "L_k3",
    "W_double_double",
    "braid_closure",
]

_SITES: dict[tuple, dict[str, int]] = {}


def _key(d: LinkDiagram):
    return (d.crossings, d.signs, d.components)


def _mark(d: LinkDiagram, sites: dict[str, int]) -> LinkDiagram:
    _SITES[_key(d)] = dict(sites)
    return d


def markers(d: LinkDiagram) -> dict[str, int]:
    """All named crossings known for ``d`` (empty if none)."""
    return dict(_SITES.get(_key(d), {}))


def marked_site(d: LinkDiagram, marker: str) -> int:
    """Crossing id of a named site (``clasp``, ``twist_j``, ``A``, ``B``)."""
    sites = _SITES.get(_key(d), {})
    if marker not in sites:
        known = ", ".join(sorted(sites)) or "none"
        raise KeyError(f"marker {marker!r} not defined for {d.name or 'this diagram'} (known: {known})")
    return sites[marker]


# ---------------------------------------------------------------------------
# small links


def hopf(sign: int = 1) -> LinkDiagram:
    d = from_pd_tuples([(3, 2, 4, 1), (1, 4, 2, 3)], [(1, 2), (3, 4)])
    d = mirror(d) if sign > 0 else d
    return d.relabel(name=f"hopf{'+' if sign > 0 else '-'}")


def trefoil(hand: str = "right") -> LinkDiagram:
    d = from_pd_tuples([(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)], [(1, 2, 3, 4, 5, 6)])
    if hand == "left":
        d = mirror(d)
    elif hand != "right":
        raise ValueError(f"hand must be right or left, got {hand!r}")
    return d.relabel(name=f"trefoil-{hand}")


def whitehead_link() -> LinkDiagram:
    # five-crossing diagram; the crossings are flipped so that the Jones
    # value carries the t^{-3/2} normalisation rather than its mirror
    d = from_pd_tuples(
        [(5, 1, 6, 4), (1, 5, 2, 10), (7, 2, 8, 3), (3, 8, 4, 9), (9, 6, 10, 7)],
        [(1, 2, 3, 4), (5, 6, 7, 8, 9, 10)],
    )
    return mirror(d).relabel(name="whitehead")


def borromean() -> LinkDiagram:
    d = from_pd_tuples(
        [(5, 1, 6, 4), (1, 9, 2, 12), (7, 2, 8, 3), (3, 10, 4, 11), (9, 5, 10, 8), (11, 6, 12, 7)],
        [(1, 2, 3, 4), (5, 6, 7, 8), (9, 10, 11, 12)],
    )
    return d.relabel(name="B3")


def brunnian(m: int) -> LinkDiagram:
    """Brunnian chain with ``m`` components.

    ``m = 2`` is the Hopf link and ``m = 3`` the Borromean rings; larger
    members replace the last component by its Bing double, which keeps every
    proper sublink trivial.
    """
    if m < 2:
        raise ValueError("brunnian needs m >= 2")
    if m == 2:
        return hopf(1).relabel(name="B2")
    d = borromean()
    for k in range(4, m + 1):
        d, _ = band_satellite(d, k - 2, [Site("caps", 2, 1), Site("caps", 2, -1)])
    return d.relabel(name=f"B{m}")


def connected_sum(d1: LinkDiagram, i1: int, d2: LinkDiagram, i2: int, name: str = "") -> LinkDiagram:
    """Band component ``i1`` of ``d1`` to component ``i2`` of ``d2``.

    Both components need at least one crossing.  The band runs through the
    faces next to the first arc of each component.
    """
    d1._check_component(i1)
    d2._check_component(i2)
    xs1, ends1, free1 = _work(d1)
    xs2, ends2, free2 = _work(d2)
    e, f0 = d1.components[i1][0], d2.components[i2][0]
    if e not in ends1 or f0 not in ends2:
        raise ValueError("connected sum needs components with crossings")
    off_l, off_x = d1.n_arcs, d1.n_crossings
    xs = dict(xs1)
    for x, row in xs2.items():
        xs[x + off_x] = [l + off_l for l in row]
    ends = dict(ends1)
    for l, (t, h) in ends2.items():
        ends[l + off_l] = [(t[0] + off_x, t[1]), (h[0] + off_x, h[1])]
    free = list(free1) + [l + off_l for l in free2]
    f = f0 + off_l
    (te, he), (tf, hf) = ends[e], ends[f]
    ends[e], ends[f] = [te, hf], [tf, he]
    xs[hf[0]][hf[1]] = e
    xs[he[0]][he[1]] = f
    return _finish(xs, ends, free, name)


def braid_closure(word, strands: int | None = None, name: str = "") -> LinkDiagram:
    """Closure of a braid word; ``k`` is ``sigma_k``, ``-k`` its inverse (1-based).

    Strands that no generator touches close up into split unknots.
    """
    word = [int(g) for g in word]
    if any(g == 0 for g in word):
        raise ValueError("braid generators are nonzero integers")
    n = max([abs(g) + 1 for g in word] + [strands or 1])
    cur = list(range(1, n + 1))
    nxt = n + 1
    xs = []
    for g in word:
        i = abs(g) - 1
        left, right = cur[i], cur[i + 1]
        up_left, up_right = nxt, nxt + 1
        nxt += 2
        if g < 0:
            # under strand goes left to right
            xs.append([left, right, up_right, up_left])
        else:
            xs.append([right, up_right, up_left, left])
        cur[i], cur[i + 1] = up_left, up_right
    close = {cur[j]: j + 1 for j in range(n)}
    xs = [[close.get(v, v) for v in x] for x in xs]
    succ = {}
    for x in xs:
        succ[x[0]] = x[2]
    for g, x in zip(word, xs):
        if g < 0:
            succ[x[1]] = x[3]
        else:
            succ[x[3]] = x[1]
    comps, seen = [], set()
    for e in range(1, nxt):
        e = close.get(e, e)
        if e in seen:
            continue
        comp = [e]
        seen.add(e)
        while succ.get(comp[-1], e) != e:
            comp.append(succ[comp[-1]])
            seen.add(comp[-1])
        comps.append(comp)
    signs = [1 if g > 0 else -1 for g in word]
    return from_pd_tuples(xs, comps, signs, name=name or "braid" + "".join(f"{g:+d}" for g in word))


# ---------------------------------------------------------------------------
# Whitehead doubles


def whitehead_double(
    d: LinkDiagram, i: int, n: int, sign: str = "-", name: str = ""
) -> LinkDiagram:
    """Replace component ``i`` by its Whitehead double with ``n`` twists.

    The band follows the zero-linking parallel (blackboard parallel plus
    ``-self_writhe`` full twists).  The band is cut and the two caps are
    twisted ``n`` times around each other; ``sign`` is the sign of those
    crossings.  ``n = 0`` leaves a split unknot.  For odd ``n`` the double
    is oriented coherently with the band edge it starts on, which makes it
    wind twice around the companion.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    d._check_component(i)
    w = d.self_writhe(i)
    sites = []
    if w:
        sites.append(Site("twist", 2 * abs(w), 1 if w > 0 else -1))
    sites.append(Site("caps", n, 1 if sign == "-" else -1))
    out, ids = band_satellite(d, i, sites, name=name or f"W{n}{sign}({d.name or 'L'};{i})")
    twist = ids[-1]
    marks = {f"twist_{j + 1}": c for j, c in enumerate(twist)}
    if twist:
        marks["clasp"] = twist[0]
        marks["A"] = twist[0]
    return _mark(out, marks)


def W_double(n: int, m: int = 3, sign: str = "-", i: int | None = None, base: LinkDiagram | None = None):
    base = base if base is not None else brunnian(m)
    i = base.n_components - 1 if i is None else i
    return whitehead_double(base, i, n, sign, name=f"W{n}{sign}({base.name})")


def L_aux(m: int) -> LinkDiagram:
    """Oriented smoothing of ``W_1(B_m)`` at its twist crossing.

    Marks ``A`` and ``B``: the positive and the negative crossing between
    the first component and the smoothed double that sit at the twist
    region's neighbours in the chain of moves reducing ``L_3``.
    """
    w = W_double(1, m)
    out, idx = apply_moves(w, smooth=[marked_site(w, "clasp")])
    out = out.relabel(name=f"L{m}")
    return _mark(out, _chain_sites(out))


def _chain_sites(d: LinkDiagram) -> dict[str, int]:
    last = d.n_components - 1
    between = [c for c in range(d.n_crossings) if set(d.strand_components(c)) == {0, last}]
    pos = [c for c in between if d.signs[c] > 0]
    neg = [c for c in between if d.signs[c] < 0]
    marks = {}
    if pos:
        marks["A"] = pos[0]
    if neg:
        marks["B"] = neg[0]
    return marks


def A_aux() -> LinkDiagram:
    """Chain of three unknots: a positive clasp followed by a negative one."""
    return connected_sum(hopf(1), 1, hopf(-1), 0, name="A")


def W_double_double(k: int, n: int, sign: str = "-") -> LinkDiagram:
    """``B_3`` with its first component doubled (``k`` twists) and its last (``n``)."""
    b = brunnian(3)
    w1 = whitehead_double(b, 0, k, sign)
    b_site = marked_site(w1, "clasp") if k else None
    w2 = whitehead_double(w1, 2, n, sign, name=f"W{k},{n}(B3)")
    marks = {}
    if n:
        marks["A"] = marked_site(w2, "clasp")
    if k:
        # the first double's crossings keep their relative order, and the
        # second doubling sorts the new crossings after
        marks["B"] = _follow_first_site(w1, b_site, w2)
    return _mark(w2, marks)


def _follow_first_site(before: LinkDiagram, c: int, after: LinkDiagram) -> int:
    # the site is a self-crossing of component 0 in both diagrams and the
    # second doubling never touches it; identify it by its arcs on comp 0
    selfs = [x for x in range(before.n_crossings) if before.strand_components(x) == (0, 0)]
    rank = selfs.index(c)
    selfs_after = [x for x in range(after.n_crossings) if after.strand_components(x) == (0, 0)]
    return selfs_after[rank]


def L_k3(k: int, n: int = 1, sign: str = "-") -> LinkDiagram:
    """``W_{k,n}`` smoothed at the last component's twist crossing (``A``)."""
    w = W_double_double(k, n, sign)
    out, idx = apply_moves(w, smooth=[marked_site(w, "A")])
    out = out.relabel(name=f"L{k},3")
    marks = {"B": idx[marked_site(w, "B")]} if k else {}
    return _mark(out, marks)


def L_prime(m: int) -> LinkDiagram:
    """``B_m`` with its first and last components doubled once and both
    twist crossings smoothed."""
    b = brunnian(m)
    w1 = whitehead_double(b, 0, 1)
    s1 = marked_site(w1, "clasp")
    w2 = whitehead_double(w1, m - 1, 1)
    s1 = _follow_first_site(w1, s1, w2)
    out, _ = apply_moves(w2, smooth=[s1, marked_site(w2, "clasp")])
    return out.relabel(name=f"L'{m}")


# ---------------------------------------------------------------------------
# mini-language


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict, hash=False)
    base: "FamilySpec | None" = None

    def __str__(self):
        head = self.family + (f"({self.base})" if self.base else "")
        if self.params:
            head += ":" + ",".join(f"{k}={v}" for k, v in self.params.items())
        return head


FAMILIES = (
    "unlink",
    "hopf",
    "trefoil",
    "whitehead",
    "borromean",
    "brunnian",
    "W_double",
    "L_aux",
    "A_aux",
    "L_prime",
    "L_k3",
    "W_double_double",
)

_ALIASES = {
    "Wn": "W_double",
    "W": "W_double",
    "L": "L_aux",
    "A": "A_aux",
    "Lp": "L_prime",
    "Lk3": "L_k3",
    "Wkn13": "W_double_double",
    "B": "brunnian",
}

_INT = {"m", "n", "k", "i"}


def parse_spec(text: str) -> FamilySpec:
    """Parse a family expression such as ``Wn(B3):n=2,sign=-``."""
    text = text.strip()
    if not text:
        raise ValueError("empty family spec")
    base = None
    head, _, tail = _split_params(text)
    params: dict = {}
    if "(" in head:
        if not head.endswith(")"):
            raise ValueError(f"unbalanced parentheses in {text!r}")
        name, inner = head[: head.index("(")], head[head.index("(") + 1 : -1]
        if "=" in inner and ":" not in inner and "(" not in inner:
            params.update(_parse_kv(inner))
        else:
            base = parse_spec(inner)
    else:
        name = head
    params.update(_parse_kv(tail))
    mm = re.fullmatch(r"(B|L|Lp)(\d+)", name)
    if mm:
        name = mm.group(1)
        params.setdefault("m", int(mm.group(2)))
    family = _ALIASES.get(name, name)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {name!r}")
    if base is not None and family not in ("W_double",):
        raise ValueError(f"family {family} takes no base link")
    return FamilySpec(family, params, base)


def _split_params(text):
    depth = 0
    for pos, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if ch == ":" and depth == 0:
            return text[:pos], ":", text[pos + 1 :]
    return text, "", ""


def _parse_kv(text):
    out = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        if "=" not in part:
            raise ValueError(f"expected key=value, got {part!r}")
        k, v = (s.strip() for s in part.split("=", 1))
        out[k] = int(v) if k in _INT else v
    return out


def gen(spec: "FamilySpec | str") -> LinkDiagram:
    """Build the diagram named by ``spec``."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    p = dict(spec.params)
    f = spec.family
    allowed = {
        "unlink": {"m"},
        "hopf": {"sign"},
        "trefoil": {"hand"},
        "whitehead": set(),
        "borromean": set(),
        "brunnian": {"m"},
        "W_double": {"n", "m", "sign", "i"},
        "L_aux": {"m"},
        "A_aux": set(),
        "L_prime": {"m"},
        "L_k3": {"k", "n", "sign"},
        "W_double_double": {"k", "n", "sign"},
    }[f]
    extra = set(p) - allowed
    if extra:
        raise ValueError(f"unexpected parameters for {f}: {sorted(extra)}")
    if f == "unlink":
        m = p.get("m", 1)
        if m < 1:
            raise ValueError("unlink needs m >= 1")
        return _unlink(m)
    if f == "hopf":
        return hopf(-1 if p.get("sign", "+") == "-" else 1)
    if f == "trefoil":
        return trefoil(p.get("hand", "right"))
    if f == "whitehead":
        return whitehead_link()
    if f == "borromean":
        return borromean()
    if f == "brunnian":
        return brunnian(p.get("m", 3))
    if f == "W_double":
        base = gen(spec.base) if spec.base is not None else None
        if base is not None and "m" in p:
            raise ValueError("give either a base link or m, not both")
        if base is None:
            m = p.get("m", 3)
            if m < 2:
                raise ValueError("W_double needs m >= 2")
            base = brunnian(m)
        i = p.get("i", base.n_components - 1)
        if not 0 <= i < base.n_components:
            raise ValueError(f"component index {i} out of range")
        return W_double(p.get("n", 1), sign=p.get("sign", "-"), i=i, base=base)
    if f == "L_aux":
        m = p.get("m", 3)
        if m < 3:
            raise ValueError("L needs m >= 3")
        return L_aux(m)
    if f == "A_aux":
        return A_aux()
    if f == "L_prime":
        m = p.get("m", 3)
        if m < 3:
            raise ValueError("Lp needs m >= 3")
        return L_prime(m)
    if f == "L_k3":
        return L_k3(p.get("k", 1), p.get("n", 1), p.get("sign", "-"))
    return W_double_double(p.get("k", 1), p.get("n", 1), p.get("sign", "-"))
