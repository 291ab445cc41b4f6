"""Oriented planar link diagrams in PD form.

Arcs are the edges of the diagram graph (one arc per strand segment
between consecutive crossing passes), numbered ``1..N`` consecutively
along components.  A crossing is the 4-tuple of arcs met counterclockwise
starting from the incoming under-strand; its sign is stored alongside so
that two-arc components never leave the over-strand direction ambiguous.

Every constructor funnels through :func:`_finish`, which re-traverses the
diagram and renumbers it, so all diagrams in circulation are in the same
normal form.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "LinkDiagram",
    "DiagramError",
    "parse_pd",
    "format_pd",
    "from_json",
    "validate",
    "unknot",
    "unlink",
    "disjoint_union",
    "mirror",
    "switch_crossing",
    "smooth_oriented",
    "smooth_A",
    "smooth_B",
    "apply_moves",
    "sublink",
    "reverse_component",
    "reorder_components",
    "from_pd_tuples",
    "canonical_code",
    "overarcs",
    "faces",
    "split_parts",
    "simplify",
]


class DiagramError(ValueError):
    """Malformed or inconsistent diagram data."""

    def __init__(self, issues):
        if isinstance(issues, str):
            issues = [issues]
        self.issues = list(issues)
        super().__init__("; ".join(self.issues))


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)
    note: str = field(default="", compare=False)

    # -- basic shape --------------------------------------------------
    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def n_arcs(self) -> int:
        return sum(len(c) for c in self.components)

    def component_of(self) -> dict[int, int]:
        """Map arc -> component index."""
        return {a: i for i, comp in enumerate(self.components) for a in comp}

    def strand_components(self, c: int) -> tuple[int, int]:
        """``(under component, over component)`` at crossing ``c``."""
        comp = self.component_of()
        a, b, _, _ = self.crossings[c]
        return comp[a], comp[b]

    def over_arcs(self, c: int) -> tuple[int, int]:
        """``(incoming, outgoing)`` arcs of the over-strand at crossing ``c``."""
        _, b, _, d = self.crossings[c]
        return (d, b) if self.signs[c] > 0 else (b, d)

    # -- signed counts ------------------------------------------------
    def crossing_sign(self, c: int) -> int:
        if not 0 <= c < len(self.crossings):
            raise IndexError(f"unknown crossing {c}")
        return self.signs[c]

    def writhe(self) -> int:
        return sum(self.signs)

    def self_writhe(self, i: int) -> int:
        self._check_component(i)
        return sum(
            s for c, s in enumerate(self.signs) if self.strand_components(c) == (i, i)
        )

    def linking_number(self, i: int, j: int) -> int:
        self._check_component(i)
        self._check_component(j)
        if i == j:
            raise ValueError("linking number needs two distinct components")
        total = 0
        for c, s in enumerate(self.signs):
            if set(self.strand_components(c)) == {i, j}:
                total += s
        if total % 2:
            raise DiagramError("odd signed crossing count between components")
        return total // 2

    def linking_matrix(self) -> list[list[int]]:
        m = self.n_components
        return [[0 if i == j else self.linking_number(i, j) for j in range(m)] for i in range(m)]

    def _check_component(self, i):
        if not 0 <= i < len(self.components):
            raise IndexError(f"unknown component {i}")

    # -- text ---------------------------------------------------------
    def to_pd(self) -> str:
        return format_pd(self)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "note": self.note,
            "components": [list(c) for c in self.components],
            "crossings": [list(x) for x in self.crossings],
            "signs": list(self.signs),
        }

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<LinkDiagram{label}: {self.n_components} comp, {self.n_crossings} cross>"

    # -- surgery shortcuts ----------------------------------------------
    def relabel(self, name: str | None = None, note: str | None = None) -> "LinkDiagram":
        return LinkDiagram(
            self.crossings,
            self.signs,
            self.components,
            self.name if name is None else name,
            self.note if note is None else note,
        )


# ---------------------------------------------------------------------------
# working form
#
# xs:   crossing id -> [l0, l1, l2, l3]; labels counterclockwise, slots 0/2 are
#       the under-strand.
# ends: label -> [tail_slot, head_slot]; slot = (crossing id, position).
# free: labels of crossingless loops.
# The orientation stored in ``ends`` is only a preference; _finish orients each
# component from its smallest label and propagates.


def _work(d: LinkDiagram):
    xs = {i: list(x) for i, x in enumerate(d.crossings)}
    heads, tails = {}, {}
    for i, (a, b, c, dd) in enumerate(d.crossings):
        heads[a] = (i, 0)
        tails[c] = (i, 2)
        if d.signs[i] > 0:
            heads[dd], tails[b] = (i, 3), (i, 1)
        else:
            heads[b], tails[dd] = (i, 1), (i, 3)
    ends = {l: [tails[l], heads[l]] for l in heads}
    free = [comp[0] for comp in d.components if comp[0] not in heads]
    # component order keys survive renumbering via label magnitude
    return xs, ends, free


def _join(xs, ends, free, x, p, q):
    """Connect slots ``p`` and ``q`` of crossing ``x`` (crossing about to go)."""
    slot_label = {}
    for l, (t, h) in ends.items():
        slot_label[t] = l
        slot_label[h] = l
    lp, lq = slot_label[(x, p)], slot_label[(x, q)]
    if lp == lq:
        del ends[lp]
        free.append(lp)
        return
    tp, hp = ends.pop(lp)
    tq, hq = ends.pop(lq)
    u = tp if hp == (x, p) else hp
    v = tq if hq == (x, q) else hq
    keep, gone = min(lp, lq), max(lp, lq)
    for y, yi in (u, v):
        if y != x and xs[y][yi] == gone:
            xs[y][yi] = keep
    if hp == (x, p):  # lp flows into the join: u -> v
        ends[keep] = [u, v]
    else:
        ends[keep] = [v, u]


def _remove_crossing(xs, ends, free, x, pairs):
    for p, q in pairs:
        _join(xs, ends, free, x, p, q)
    del xs[x]


def _finish(xs, ends, free, name="", note="", order=None, index_map=None) -> LinkDiagram:
    slot_label = {}
    for l, (t, h) in ends.items():
        slot_label[t] = l
        slot_label[h] = l
    for x, ls in xs.items():
        for i in range(4):
            if (x, i) not in slot_label:
                raise DiagramError(f"dangling crossing endpoint at crossing {x} slot {i}")
    seen: set[int] = set()
    comps: list[list[tuple[int, tuple, tuple]]] = []
    keyed = sorted(set(ends) | set(free), key=(order or (lambda l: l)))
    free_set = set(free)
    for l0 in keyed:
        if l0 in seen:
            continue
        if l0 in free_set:
            seen.add(l0)
            comps.append([(l0, None, None)])
            continue
        tail, head = ends[l0]
        seq = []
        l, t, h = l0, tail, head
        while True:
            if l in seen:
                raise DiagramError("inconsistent strand structure")
            seen.add(l)
            seq.append((l, t, h))
            x, i = h
            nxt = (x, (i + 2) % 4)
            nl = slot_label[nxt]
            a, b = ends[nl]
            other = b if a == nxt else a
            if nl == l0:
                break
            l, t, h = nl, nxt, other
        comps.append(seq)

    new = {}
    components = []
    head_slots = set()
    k = 1
    for seq in comps:
        comp = []
        for l, t, h in seq:
            new[l] = k
            comp.append(k)
            if h is not None:
                head_slots.add(h)
            k += 1
        components.append(tuple(comp))

    rows = []
    for x, ls in xs.items():
        r = 0 if (x, 0) in head_slots else 2
        if (x, r) not in head_slots:
            raise DiagramError(f"under-strand at crossing {x} has no incoming arc")
        tup = tuple(new[ls[(r + j) % 4]] for j in range(4))
        sign = -1 if (x, (r + 1) % 4) in head_slots else 1
        rows.append((tup, sign, x))
    rows.sort(key=lambda row: row[0][0])
    if index_map is not None:
        # old crossing key -> position in the returned diagram
        index_map.update({row[2]: k for k, row in enumerate(rows)})
    return LinkDiagram(
        tuple(r[0] for r in rows),
        tuple(r[1] for r in rows),
        tuple(components),
        name,
        note,
    )


def _rebuild(d: LinkDiagram, name=None, note=None) -> LinkDiagram:
    xs, ends, free = _work(d)
    return _finish(xs, ends, free, d.name if name is None else name, d.note if note is None else note)


# ---------------------------------------------------------------------------
# construction / parsing


def from_pd_tuples(
    crossings: Sequence[Sequence[int]],
    components: Sequence[Sequence[int]],
    signs: Sequence[int] | None = None,
    name: str = "",
    note: str = "",
) -> LinkDiagram:
    """Build and validate a diagram; signs are derived when omitted."""
    issues = _structural_issues(crossings, components)
    if issues:
        raise DiagramError(issues)
    if signs is None:
        signs = _derive_signs(crossings, components)
    d = LinkDiagram(
        tuple(tuple(int(v) for v in x) for x in crossings),
        tuple(int(s) for s in signs),
        tuple(tuple(int(v) for v in c) for c in components),
        name,
        note,
    )
    issues = validate(d)
    if issues:
        raise DiagramError(issues)
    return _rebuild(d)


def _structural_issues(crossings, components) -> list[str]:
    issues = []
    count: dict[int, int] = {}
    for x in crossings:
        if len(x) != 4:
            issues.append(f"crossing {tuple(x)} does not have four endpoints")
            continue
        for a in x:
            count[a] = count.get(a, 0) + 1
    listed: dict[int, int] = {}
    for i, comp in enumerate(components):
        if not comp:
            issues.append(f"component {i + 1} is empty")
        for a in comp:
            if a in listed:
                issues.append(f"arc {a} listed in components {listed[a] + 1} and {i + 1}")
            listed[a] = i
    for a, k in sorted(count.items()):
        if k != 2:
            issues.append(f"arc {a} appears {k} times (expected 2)")
        if a not in listed:
            issues.append(f"dangling crossing endpoint: arc {a} belongs to no component")
    for i, comp in enumerate(components):
        for a in comp:
            if a not in count and len(comp) > 1:
                issues.append(f"arc {a} of component {i + 1} meets no crossing")
    return issues


def _successors(components):
    succ = {}
    for comp in components:
        for i, a in enumerate(comp):
            succ[a] = comp[(i + 1) % len(comp)]
    return succ


def _derive_signs(crossings, components) -> list[int]:
    succ = _successors(components)
    heads: dict[int, int] = {}
    signs: list[int | None] = [None] * len(crossings)
    for i, (a, b, c, d) in enumerate(crossings):
        if succ.get(a) != c:
            raise DiagramError(f"component arcs not consecutive at crossing {i}: {a} -> {c}")
        heads[a] = i
    pending = []
    for i, (a, b, c, d) in enumerate(crossings):
        fwd, back = succ.get(b) == d, succ.get(d) == b
        if fwd and not back:
            signs[i] = -1
        elif back and not fwd:
            signs[i] = 1
        elif fwd and back:
            pending.append(i)
        else:
            raise DiagramError(f"component arcs not consecutive at over-strand of crossing {i}")
    # two-arc components: an arc is the head of exactly one crossing pass
    changed = True
    while pending and changed:
        changed = False
        for i in list(pending):
            a, b, c, d = crossings[i]
            if heads.get(b, i) != i:
                signs[i] = 1
            elif heads.get(d, i) != i:
                signs[i] = -1
            else:
                continue
            heads[d if signs[i] > 0 else b] = i
            pending.remove(i)
            changed = True
    if pending:
        raise DiagramError(
            f"ambiguous over-strand orientation at crossings {pending}; add an explicit sign"
        )
    return signs  # type: ignore[return-value]


_X = re.compile(r"X\s*[\[(]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\])]\s*([+-])?")


def parse_pd(text: str) -> LinkDiagram:
    """Parse the line-based PD format.

    ::

        link hopf components 2
        comp 1: 1 2
        comp 2: 3 4
        X(1,3,2,4)
        X(3,2,4,1)

    Lines starting with ``#`` are comments.  A crossing line may carry a
    trailing ``+``/``-`` to pin its sign.
    """
    name = ""
    declared = None
    comps: list[list[int]] = []
    xs: list[tuple[int, ...]] = []
    explicit: list[int | None] = []
    issues = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("link"):
            m = re.match(r"link\s+(\S+)(?:\s+components\s+(\d+))?\s*$", line)
            if not m:
                issues.append(f"line {lineno}: malformed header")
                continue
            name = m.group(1)
            declared = int(m.group(2)) if m.group(2) else None
        elif line.startswith("comp"):
            m = re.match(r"comp\s+(\d+)\s*:\s*((?:-?\d+\s*)*)$", line)
            if not m:
                issues.append(f"line {lineno}: malformed component line")
                continue
            comps.append([int(v) for v in m.group(2).split()])
        elif line.startswith("X"):
            m = _X.fullmatch(line)
            if not m:
                issues.append(f"line {lineno}: malformed crossing")
                continue
            xs.append(tuple(int(m.group(k)) for k in range(1, 5)))
            explicit.append({"+": 1, "-": -1}.get(m.group(5)))
        else:
            issues.append(f"line {lineno}: unrecognised line {line!r}")
    if declared is not None and declared != len(comps):
        issues.append(f"header declares {declared} components, found {len(comps)}")
    if issues:
        raise DiagramError(issues)
    structural = _structural_issues(xs, comps)
    if structural:
        raise DiagramError(structural)
    if any(s is not None for s in explicit):
        derived = _derive_signs_partial(xs, comps, explicit)
    else:
        derived = _derive_signs(xs, comps)
    return from_pd_tuples(xs, comps, derived, name=name)


def _derive_signs_partial(xs, comps, explicit):
    succ = _successors(comps)
    out = []
    for i, (a, b, c, d) in enumerate(xs):
        if explicit[i] is not None:
            out.append(explicit[i])
        elif succ.get(b) == d and succ.get(d) != b:
            out.append(-1)
        elif succ.get(d) == b and succ.get(b) != d:
            out.append(1)
        else:
            raise DiagramError(f"ambiguous over-strand orientation at crossing {i}")
    return out


def format_pd(d: LinkDiagram) -> str:
    ambiguous = set()
    succ = _successors(d.components)
    for i, (a, b, c, dd) in enumerate(d.crossings):
        if succ.get(b) == dd and succ.get(dd) == b:
            ambiguous.add(i)
    lines = [f"link {d.name or 'L'} components {d.n_components}"]
    if d.note:
        lines.insert(0, f"# {d.note}")
    for i, comp in enumerate(d.components, 1):
        lines.append(f"comp {i}: " + " ".join(str(a) for a in comp))
    for i, x in enumerate(d.crossings):
        tail = ("+" if d.signs[i] > 0 else "-") if i in ambiguous else ""
        lines.append("X({},{},{},{})".format(*x) + tail)
    return "\n".join(lines) + "\n"


def from_json(data) -> LinkDiagram:
    if isinstance(data, str):
        data = json.loads(data)
    return from_pd_tuples(
        data["crossings"],
        data["components"],
        data.get("signs"),
        name=data.get("name", ""),
        note=data.get("note", ""),
    )


def validate(d: LinkDiagram) -> list[str]:
    """Itemised invariant violations (empty list when the diagram is sound)."""
    issues = _structural_issues(d.crossings, d.components)
    if issues:
        return issues
    if len(d.signs) != len(d.crossings) or any(s not in (1, -1) for s in d.signs):
        return ["every crossing needs a sign of +1 or -1"]
    succ = _successors(d.components)
    for i, (a, b, c, dd) in enumerate(d.crossings):
        if succ[a] != c:
            issues.append(f"component arcs not consecutive at crossing {i}: {a} -> {c}")
        o_in, o_out = (dd, b) if d.signs[i] > 0 else (b, dd)
        if succ[o_in] != o_out:
            issues.append(f"sign of crossing {i} disagrees with component orientation")
    heads: dict[int, int] = {}
    for i, x in enumerate(d.crossings):
        for a in (x[0], d.over_arcs(i)[0]):
            if a in heads:
                issues.append(f"arc {a} enters two crossings")
            heads[a] = i
    return issues


# ---------------------------------------------------------------------------
# elementary diagrams and surgeries


def unknot(name="unknot") -> LinkDiagram:
    return LinkDiagram((), (), ((1,),), name)


def unlink(m: int, name=None) -> LinkDiagram:
    if m < 1:
        raise ValueError("unlink needs at least one component")
    return LinkDiagram((), (), tuple((i + 1,) for i in range(m)), name or f"unlink{m}")


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram, name: str | None = None) -> LinkDiagram:
    """Split union; arcs of ``d2`` are shifted past those of ``d1``."""
    off = d1.n_arcs
    xs = d1.crossings + tuple(tuple(a + off for a in x) for x in d2.crossings)
    comps = d1.components + tuple(tuple(a + off for a in c) for c in d2.components)
    nm = name if name is not None else (f"{d1.name}+{d2.name}" if d1.name or d2.name else "")
    return _rebuild(LinkDiagram(xs, d1.signs + d2.signs, comps), name=nm, note="")


def switch_crossing(d: LinkDiagram, c: int) -> LinkDiagram:
    """Exchange over and under strands at crossing ``c``."""
    if not 0 <= c < d.n_crossings:
        raise IndexError(f"unknown crossing {c}")
    xs, ends, free = _work(d)
    xs[c] = xs[c][1:] + xs[c][:1]
    for l, (t, h) in ends.items():
        ends[l] = [_shift_slot(t, c), _shift_slot(h, c)]
    return _finish(xs, ends, free, d.name, d.note)


def _shift_slot(s, c):
    x, i = s
    return (x, (i - 1) % 4) if x == c else s


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Switch every crossing."""
    xs, ends, free = _work(d)
    for x in xs:
        xs[x] = xs[x][1:] + xs[x][:1]
    ends = {l: [(t[0], (t[1] - 1) % 4), (h[0], (h[1] - 1) % 4)] for l, (t, h) in ends.items()}
    return _finish(xs, ends, free, d.name and f"mirror({d.name})", d.note)


def smooth_oriented(d: LinkDiagram, c: int) -> LinkDiagram:
    """Orientation-respecting smoothing at ``c`` (the ``L_0`` of a skein triple)."""
    if not 0 <= c < d.n_crossings:
        raise IndexError(f"unknown crossing {c}")
    xs, ends, free = _work(d)
    # incoming under (slot 0) continues along the outgoing over-slot
    pairs = [(0, 1), (3, 2)] if d.signs[c] > 0 else [(0, 3), (1, 2)]
    _remove_crossing(xs, ends, free, c, pairs)
    return _finish(xs, ends, free, d.name, d.note)


def apply_moves(
    d: LinkDiagram, switch: Iterable[int] = (), smooth: Iterable[int] = ()
) -> tuple[LinkDiagram, dict[int, int]]:
    """Switch and oriented-smooth several crossings at once.

    Returns the new diagram and a map from surviving old crossing ids to new
    ids, so marked crossings can be followed through a chain of moves.
    """
    switch, smooth = set(switch), set(smooth)
    if switch & smooth:
        raise ValueError("a crossing cannot be both switched and smoothed")
    for c in switch | smooth:
        if not 0 <= c < d.n_crossings:
            raise IndexError(f"unknown crossing {c}")
    xs, ends, free = _work(d)
    for c in switch:
        xs[c] = xs[c][1:] + xs[c][:1]
        ends = {l: [_shift_slot(t, c), _shift_slot(h, c)] for l, (t, h) in ends.items()}
    for c in sorted(smooth):
        pairs = [(0, 1), (3, 2)] if d.signs[c] > 0 else [(0, 3), (1, 2)]
        _remove_crossing(xs, ends, free, c, pairs)
    index_map: dict = {}
    out = _finish(xs, ends, free, d.name, d.note, index_map=index_map)
    return out, index_map


def smooth_A(d: LinkDiagram, c: int) -> LinkDiagram:
    """Kauffman A-smoothing at ``c``: joins arcs (a,b) and (c,d)."""
    return _smooth_unoriented(d, c, [(0, 1), (2, 3)])


def smooth_B(d: LinkDiagram, c: int) -> LinkDiagram:
    """Kauffman B-smoothing at ``c``: joins arcs (a,d) and (b,c)."""
    return _smooth_unoriented(d, c, [(0, 3), (1, 2)])


def _smooth_unoriented(d, c, pairs):
    if not 0 <= c < d.n_crossings:
        raise IndexError(f"unknown crossing {c}")
    xs, ends, free = _work(d)
    _remove_crossing(xs, ends, free, c, pairs)
    return _finish(xs, ends, free, d.name, d.note)


def dissolve(d: LinkDiagram, crossings: Iterable[int]) -> LinkDiagram:
    """Delete crossings letting both strands pass straight through.

    Only isotopy-preserving for Reidemeister I/II configurations or when the
    strands are removed afterwards; used by :func:`simplify` and
    :func:`sublink`.
    """
    xs, ends, free = _work(d)
    for c in sorted(set(crossings), reverse=True):
        _remove_crossing(xs, ends, free, c, [(0, 2), (1, 3)])
    return _finish(xs, ends, free, d.name, d.note)


def sublink(d: LinkDiagram, keep: Iterable[int], name: str | None = None) -> LinkDiagram:
    """Diagram of the components with indices in ``keep`` (order preserved)."""
    keep = sorted(set(keep))
    for i in keep:
        d._check_component(i)
    comp = d.component_of()
    drop = {i for i in range(d.n_components) if i not in keep}
    touching = [c for c, x in enumerate(d.crossings) if comp[x[0]] in drop or comp[x[1]] in drop]
    xs, ends, free = _work(d)
    for c in sorted(touching, reverse=True):
        _remove_crossing(xs, ends, free, c, [(0, 2), (1, 3)])
    dropped_labels = {a for i in drop for a in d.components[i]}
    # after dissolving, surviving labels keep the minimum of their constituents;
    # a merged label belongs to a dropped component iff any constituent does
    ends = {l: e for l, e in ends.items() if l not in dropped_labels}
    free = [l for l in free if l not in dropped_labels]
    return _finish(xs, ends, free, name if name is not None else d.name, d.note)


def reverse_component(d: LinkDiagram, i: int) -> LinkDiagram:
    d._check_component(i)
    xs, ends, free = _work(d)
    labels = set(d.components[i])
    ends = {l: ([h, t] if l in labels else [t, h]) for l, (t, h) in ends.items()}
    return _finish(xs, ends, free, d.name, d.note)


def reorder_components(d: LinkDiagram, order: Sequence[int]) -> LinkDiagram:
    """Renumber so that old component ``order[k]`` becomes component ``k``."""
    if sorted(order) != list(range(d.n_components)):
        raise ValueError("order must be a permutation of component indices")
    rank = {a: (k, pos) for k, i in enumerate(order) for pos, a in enumerate(d.components[i])}
    xs, ends, free = _work(d)
    return _finish(xs, ends, free, d.name, d.note, order=lambda l: rank[l])


# ---------------------------------------------------------------------------
# faces (planar structure)


def faces(d: LinkDiagram) -> list[list[tuple[int, int]]]:
    """Faces as cycles of corners ``(crossing, slot)``.

    Leaving crossing ``x`` through slot ``i`` along its arc, the walk arrives
    at ``(y, j)`` and turns to slot ``j + 1`` (counterclockwise neighbour);
    corner ``(y, j)`` is recorded for the face between slots ``j`` and ``j+1``.
    """
    where: dict[int, list[tuple[int, int]]] = {}
    for x, row in enumerate(d.crossings):
        for i, a in enumerate(row):
            where.setdefault(a, []).append((x, i))

    def across(x, i):
        a = d.crossings[x][i]
        s1, s2 = where[a]
        if s1 == (x, i):
            return s2
        return s1

    seen = set()
    out = []
    for x in range(d.n_crossings):
        for i in range(4):
            if (x, i) in seen:
                continue
            face = []
            cur = (x, i)
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                y, j = across(*cur)
                cur = (y, (j + 1) % 4)
            out.append(face)
    return out


def overarcs(d: LinkDiagram) -> tuple[list[list[int]], dict[int, int]]:
    """Maximal over-passing strands ("arcs" in the Wirtinger/Fox sense).

    Returns the strands as lists of diagram edges in traversal order,
    ordered by their first edge, and the edge -> strand index map.  A
    component without undercrossings is a single strand.
    """
    starts = {x[2] for x in d.crossings}  # an under-strand leaves here
    strands = []
    for comp in d.components:
        if not any(a in starts for a in comp):
            strands.append(list(comp))
            continue
        k = next(p for p, a in enumerate(comp) if a in starts)
        cur: list[int] = []
        for a in comp[k:] + comp[:k]:
            if a in starts and cur:
                strands.append(cur)
                cur = []
            cur.append(a)
        strands.append(cur)
    strands.sort(key=lambda s: s[0])
    return strands, {a: i for i, s in enumerate(strands) for a in s}


def split_parts(d: LinkDiagram) -> list[list[int]]:
    """Component indices grouped by connectivity of the diagram graph."""
    parent = list(range(d.n_components))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for c in range(d.n_crossings):
        u, o = d.strand_components(c)
        parent[find(u)] = find(o)
    groups: dict[int, list[int]] = {}
    for i in range(d.n_components):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def is_planar(d: LinkDiagram) -> bool:
    """Euler-characteristic check ``V - E + F = 2`` on each connected part."""
    parts = split_parts(d)
    fs = faces(d)
    for part in parts:
        cs = [c for c in range(d.n_crossings) if d.strand_components(c)[0] in part]
        if not cs:
            continue
        cset = set(cs)
        f = sum(1 for face in fs if face[0][0] in cset)
        if len(cs) - 2 * len(cs) + f != 2:
            return False
    return True


# ---------------------------------------------------------------------------
# canonical code


def canonical_code(d: LinkDiagram) -> str:
    """Relabeling-invariant code of the stored combinatorics.

    The minimum over every choice of starting arc of a breadth-first
    relabeling; split pieces are coded separately and sorted.  Not an
    isotopy invariant.
    """
    pieces = []
    comp_of = d.component_of()
    n_free = 0
    for part in split_parts(d):
        if len(part) == 1 and len(d.components[part[0]]) == 1 and not any(
            comp_of[x[0]] == part[0] for x in d.crossings
        ):
            n_free += 1
            continue
        pieces.append(_piece_code(d, part))
    pieces.sort()
    return "|".join(pieces) + f"|O{n_free}"


def _piece_code(d: LinkDiagram, part: list[int]) -> str:
    comp_of = d.component_of()
    xs = [c for c in range(d.n_crossings) if comp_of[d.crossings[c][0]] in part]
    # crossings met by each arc, head end first: independent of labels
    _, ends, _ = _work(d)
    at = {a: [ends[a][1][0], ends[a][0][0]] for a in ends}
    pos = {a: (i, k) for i, comp in enumerate(d.components) for k, a in enumerate(comp)}
    best = None
    for i in part:
        for start in d.components[i]:
            code = _code_from(d, xs, at, pos, i, start)
            if best is None or code < best:
                best = code
    return best


def _code_from(d, xs, at, pos, i0, start):
    new: dict[int, int] = {}
    order: list[int] = []
    lengths = []

    def label_component(ci, first):
        comp = d.components[ci]
        k0 = comp.index(first)
        n = len(comp)
        for k in range(n):
            a = comp[(k0 + k) % n]
            new[a] = len(order) + 1
            order.append(a)
        lengths.append(n)

    label_component(i0, start)
    k = 0
    while k < len(order):
        for c in at.get(order[k], ()):
            for b in d.crossings[c]:
                if b not in new:
                    label_component(pos[b][0], b)
        k += 1
    rows = sorted(tuple(new[a] for a in d.crossings[c]) + (d.signs[c],) for c in xs)
    return "L" + ",".join(map(str, lengths)) + ";" + ";".join(
        "{},{},{},{}{}".format(r[0], r[1], r[2], r[3], "+" if r[4] > 0 else "-") for r in rows
    )


# ---------------------------------------------------------------------------
# simplification


def simplify(d: LinkDiagram) -> LinkDiagram:
    """Reidemeister I and II reductions until none apply.

    Never increases the crossing count; the result represents the same
    oriented link.
    """
    while True:
        c = _find_r1(d)
        if c is not None:
            d = dissolve(d, [c])
            continue
        pair = _find_r2(d)
        if pair is not None:
            d = dissolve(d, pair)
            continue
        return d


def _find_r1(d):
    for c, row in enumerate(d.crossings):
        for i in range(4):
            if row[i] == row[(i + 1) % 4]:
                return c
    return None


def _find_r2(d):
    for face in faces(d):
        if len(face) != 2:
            continue
        (x, i), (y, j) = face
        if x == y:
            continue
        # arc leaving x at slot i reaches y at slot j-1; the other arc joins
        # y slot j to x slot i-1.  Same parity at both ends = same layer.
        if i % 2 == (j - 1) % 2:
            return (x, y)
    return None
