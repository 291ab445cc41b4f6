"""Band satellites: replace one component by the boundary of a thin band.

The band follows the component in the blackboard framing.  Along the
first arc of the component the band is cut and small tangles are spliced
in, read from the tail of that arc towards its head:

* ``("twist", k, kind)`` - ``k`` crossings between the two band edges
  (full twists of the band when ``k`` is even);
* ``("caps", n, kind)`` - the band is cut and the two ends are capped off,
  the caps twisted around each other with ``n`` crossings.  ``n = 0`` is a
  plain cut.

``kind`` picks the handedness (+1: the strand from lower-left to
upper-right passes under).

Crossing slots are laid out with the under-strand running south to north,
so the counterclockwise order is south, east, north, west.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LinkDiagram, _finish, _work

__all__ = ["Site", "band_satellite"]


@dataclass(frozen=True)
class Site:
    tangle: str  # "twist" or "caps"
    count: int
    kind: int = 1


class _Labels:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x):
        self.parent.setdefault(x, x)
        return x

    def find(self, x):
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _crossing(sw, se, ne, nw, kind):
    # kind +1: the sw-ne strand is under
    return [sw, se, ne, nw] if kind > 0 else [se, ne, nw, sw]


def band_satellite(
    d: LinkDiagram, i: int, sites: list[Site], name: str = "", note: str = ""
) -> tuple[LinkDiagram, list[list[int]]]:
    """Satellite of component ``i``; also returns the crossing ids of each site."""
    d._check_component(i)
    xs0, ends0, free0 = _work(d)
    comp_of = d.component_of()
    s = d.components[i][0]
    K = len(sites)
    labels = _Labels()
    rows: dict[tuple, list] = {}
    hint: dict = {}  # label -> (key, slot) of its tail

    def arc_copy(a, side, slot):
        if side is None:
            return ("o", a)
        if a == s:
            return ("st", side, 0 if slot == ends0[s][0] else K)
        return ("cp", a, side)

    def note_tail(label, a, side, orig_slot, new_slot):
        if side in (None, "L") and ends0[a][0] == orig_slot:
            hint[label] = new_slot

    for x, (l0, l1, l2, l3) in enumerate(d.crossings):
        sg = d.signs[x]
        cu, co = comp_of[l0], comp_of[l1]
        cols = ["L", "R"] if cu == i else [None]
        # over-strand heading east (sign +1) has its left copy on the north
        if co == i:
            levels = ["R", "L"] if sg > 0 else ["L", "R"]
        else:
            levels = [None]
        nc, nr = len(cols), len(levels)
        useg = []
        for c, side in enumerate(cols):
            south = arc_copy(l0, side, (x, 0))
            north = arc_copy(l2, side, (x, 2))
            useg.append([south] + [("mu", x, c, r) for r in range(nr - 1)] + [north])
            note_tail(south, l0, side, (x, 0), (("x", x, 0, c), 0))
            note_tail(north, l2, side, (x, 2), (("x", x, nr - 1, c), 2))
        oseg = []
        for r, side in enumerate(levels):
            east = arc_copy(l1, side, (x, 1))
            west = arc_copy(l3, side, (x, 3))
            oseg.append([east] + [("mo", x, r, c) for c in range(nc - 1)] + [west])
            note_tail(east, l1, side, (x, 1), (("x", x, r, nc - 1), 1))
            note_tail(west, l3, side, (x, 3), (("x", x, r, 0), 3))
        for r in range(nr):
            for c in range(nc):
                rows[("x", x, r, c)] = [
                    useg[c][r],
                    oseg[r][nc - 1 - c],
                    useg[c][r + 1],
                    oseg[r][nc - c],
                ]

    site_keys: list[list[tuple]] = []
    for j, site in enumerate(sites):
        bl, br = ("st", "L", j), ("st", "R", j)
        tl, tr = ("st", "L", j + 1), ("st", "R", j + 1)
        keys = []
        k = site.count
        if site.tangle == "twist":
            left = [bl] + [("t", j, "l", m) for m in range(1, k)] + [tl]
            right = [br] + [("t", j, "r", m) for m in range(1, k)] + [tr]
            if k == 0:
                labels.union(bl, tl)
                labels.union(br, tr)
            for m in range(1, k + 1):
                key = ("s", j, m)
                rows[key] = _crossing(left[m - 1], right[m - 1], right[m], left[m], site.kind)
                keys.append(key)
        elif site.tangle == "caps":
            bot = [bl] + [("t", j, "b", m) for m in range(1, k)] + [br]
            top = [tl] + [("t", j, "u", m) for m in range(1, k)] + [tr]
            if k == 0:
                labels.union(bl, br)
                labels.union(tl, tr)
            for m in range(1, k + 1):
                key = ("s", j, m)
                rows[key] = _crossing(bot[m - 1], bot[m], top[m], top[m - 1], site.kind)
                keys.append(key)
        else:
            raise ValueError(f"unknown tangle {site.tangle!r}")
        site_keys.append(keys)

    created = {("st", side, k) for side in "LR" for k in range(K + 1)}
    if s not in ends0:
        # crossingless component: the band closes on itself
        for side in "LR":
            labels.union(("st", side, 0), ("st", side, K))
    for lab in created:
        labels.add(lab)
    for row in rows.values():
        for lab in row:
            labels.add(lab)

    # component order survives through the integer labels
    pos = {a: k for comp in d.components for k, a in enumerate(comp)}

    def sort_key(lab):
        tag = lab[0]
        if tag == "o":
            return (comp_of[lab[1]], 0, pos[lab[1]], 0)
        if tag == "mu":
            owner = comp_of[d.crossings[lab[1]][0]]
            return (owner, 3, lab[1], lab[2] * 4 + lab[3])
        if tag == "mo":
            owner = comp_of[d.crossings[lab[1]][1]]
            return (owner, 3, lab[1], lab[2] * 4 + lab[3])
        if tag == "st":
            return (i, 0 if lab[1] == "L" else 2, -1, lab[2])
        if tag == "cp":
            return (i, 0 if lab[2] == "L" else 2, pos[lab[1]], 0)
        return (i, 4, 0, _tkey(lab))

    groups: dict = {}
    for lab in list(labels.parent):
        groups.setdefault(labels.find(lab), []).append(lab)
    free_reps = []
    for f in free0:
        if comp_of[f] != i:
            groups.setdefault(("o", f), [("o", f)])
    reps = sorted(groups, key=lambda r: min(sort_key(m) for m in groups[r]))
    number = {r: k + 1 for k, r in enumerate(reps)}

    slots: dict[int, list] = {}
    xs = {}
    for key, row in rows.items():
        ints = [number[labels.find(lab)] for lab in row]
        xs[key] = ints
        for p, v in enumerate(ints):
            slots.setdefault(v, []).append((key, p))
    ends = {}
    for r, v in number.items():
        where = slots.get(v, [])
        if not where:
            free_reps.append(v)
            continue
        if len(where) != 2:
            raise AssertionError(f"label {r} used {len(where)} times")
        tail = next((hint[m] for m in groups[r] if m in hint and hint[m] in where), where[0])
        head = where[1] if tail == where[0] else where[0]
        ends[v] = [tail, head]
    index_map: dict = {}
    out = _finish(xs, ends, free_reps, name, note, index_map=index_map)
    return out, [[index_map[k] for k in keys] for keys in site_keys]


def _tkey(lab):
    # tangle-internal labels: ("t", site, which, index)
    return lab[1] * 1000 + "lrbu".index(lab[2]) * 100 + lab[3]
