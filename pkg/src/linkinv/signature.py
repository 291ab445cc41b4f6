"""Signatures of symmetric integer matrices and of links.

Link signatures come from a checkerboard coloring of the diagram: the
Goeritz form of the white regions, corrected by the Gordon-Litherland
term over crossings where the white surface is not orientation
compatible.  Sign convention: the right-handed trefoil has signature -2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .colorings import bareiss_det
from .diagram import DiagramError, LinkDiagram, faces, split_parts, sublink

__all__ = [
    "matrix_signature",
    "border",
    "StabilizationReport",
    "stabilization",
    "checkerboard",
    "goeritz",
    "GoeritzData",
    "link_signature",
    "goeritz_determinant",
]


def _check_symmetric(a):
    n = len(a)
    for r in a:
        if len(r) != n:
            raise ValueError("matrix must be square")
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix must be symmetric")


def matrix_signature(a: list[list[int]]) -> int:
    """``#positive - #negative`` eigenvalues, by exact congruence."""
    _check_symmetric(a)
    m = [[Fraction(x) for x in r] for r in a]
    sig = 0
    while m:
        n = len(m)
        if m[0][0] == 0:
            k = next((i for i in range(1, n) if m[i][i] != 0), None)
            if k is not None:
                m[0], m[k] = m[k], m[0]
                for r in m:
                    r[0], r[k] = r[k], r[0]
            else:
                k = next((j for j in range(1, n) if m[0][j] != 0), None)
                if k is None:
                    # zero row and column: a null direction
                    m = [r[1:] for r in m[1:]]
                    continue
                # e0 -> e0 + ek makes the pivot 2 m[0][k]
                for j in range(n):
                    m[0][j] += m[k][j]
                for i in range(n):
                    m[i][0] += m[i][k]
        p = m[0][0]
        sig += 1 if p > 0 else -1
        m = [[m[i][j] - m[i][0] * m[0][j] / p for j in range(1, n)] for i in range(1, n)]
    return sig


def border(a: list[list[int]], n: int, sign: str = "-") -> list[list[int]]:
    """Append the twist row and column of a doubled link to ``a``.

    The new column is ``(0, ..., 0, -1, 1, -2, n - 4)`` for negative twists;
    positive twists flip the sign of the corner entry.
    """
    _check_symmetric(a)
    k = len(a)
    if k < 3:
        raise ValueError("matrix must be at least 3x3")
    if n < 4 or n % 2:
        raise ValueError("n must be even and >= 4")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    col = [0] * (k - 3) + [-1, 1, -2]
    corner = n - 4 if sign == "-" else 4 - n
    out = [list(r) + [c] for r, c in zip(a, col)]
    out.append(col + [corner])
    return out


@dataclass
class StabilizationReport:
    base_signature: int
    singular: bool
    table: list[tuple[int, int]] = field(default_factory=list)  # (n, sigma(A_n))
    threshold: int | None = None  # first n from which sigma(A_n) = target holds
    target: int | None = None

    @property
    def status(self) -> str:
        if self.singular:
            return "inconclusive"
        return "stable" if self.threshold is not None else "not reached"

    def to_json(self) -> dict:
        return {
            "base_signature": self.base_signature,
            "singular": self.singular,
            "status": self.status,
            "target": self.target,
            "threshold": self.threshold,
            "table": [list(r) for r in self.table],
        }


def stabilization(a: list[list[int]], sign: str = "-", n_max: int = 64) -> StabilizationReport:
    """Track ``sigma(border(a, n, sign))`` for even ``4 <= n <= n_max``.

    For nonsingular ``a`` the bordered signature settles at
    ``sigma(a) + 1`` (negative twists) or ``sigma(a) - 1`` (positive).  A
    singular ``a`` gives no such guarantee and is reported inconclusive.
    """
    base = matrix_signature(a)
    singular = bareiss_det(a) == 0
    rep = StabilizationReport(base, singular)
    for n in range(4, n_max + 1, 2):
        rep.table.append((n, matrix_signature(border(a, n, sign))))
    if singular:
        return rep
    rep.target = base + (1 if sign == "-" else -1)
    for k, (n, s) in enumerate(rep.table):
        if all(t == rep.target for _, t in rep.table[k:]):
            rep.threshold = n
            break
    return rep


# ---------------------------------------------------------------------------
# checkerboard forms

# sectors at a crossing, named by the slot they follow counterclockwise:
# sector k lies between slots k-1 and k (slot 0 = incoming under-strand)


def checkerboard(d: LinkDiagram) -> tuple[list[list[tuple[int, int]]], list[int]]:
    """Faces of a connected diagram and a proper 2-coloring of them."""
    fs = faces(d)
    at = {corner: f for f, face in enumerate(fs) for corner in face}
    adj: dict[int, list[tuple[int, int]]] = {f: [] for f in range(len(fs))}
    for x in range(d.n_crossings):
        for k in range(4):
            f, g = at[(x, k)], at[(x, (k + 1) % 4)]
            adj[f].append((g, 1))
            f2 = at[(x, (k + 2) % 4)]
            adj[f].append((f2, 0))
    color = [-1] * len(fs)
    for s in range(len(fs)):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            f = stack.pop()
            for g, diff in adj[f]:
                want = color[f] ^ diff
                if color[g] < 0:
                    color[g] = want
                    stack.append(g)
                elif color[g] != want:
                    raise DiagramError("diagram faces admit no checkerboard coloring")
    return fs, color


@dataclass
class GoeritzData:
    matrix: list[list[int]]
    correction: int

    @property
    def signature(self) -> int:
        return matrix_signature(self.matrix) - self.correction


def goeritz(d: LinkDiagram, white: int = 0) -> GoeritzData:
    """Reduced Goeritz matrix of a connected diagram and its correction term.

    ``white`` picks which color class of faces spans the form.
    """
    if d.n_crossings == 0:
        return GoeritzData([], 0)
    fs, color = checkerboard(d)
    at = {corner: f for f, face in enumerate(fs) for corner in face}
    regions = [f for f in range(len(fs)) if color[f] == white]
    index = {f: i for i, f in enumerate(regions)}
    n = len(regions)
    g = [[0] * n for _ in range(n)]
    mu = 0
    for x in range(d.n_crossings):
        # white sectors are either {0, 2} or {1, 3}
        w = 0 if color[at[(x, 0)]] == white else 1
        eta = 1 if w == 1 else -1
        i, j = index[at[(x, w)]], index[at[(x, w + 2)]]
        if i != j:
            g[i][j] -= eta
            g[j][i] -= eta
            g[i][i] += eta
            g[j][j] += eta
        # the oriented smoothing joins sectors {0, 2} at a positive crossing
        # and {1, 3} at a negative one; when it joins the shaded sectors the
        # white surface is not orientation compatible there
        joined = 0 if d.signs[x] > 0 else 1
        if joined != w:
            mu += eta
    reduced = [r[1:] for r in g[1:]]
    return GoeritzData(reduced, mu)


def link_signature(d: LinkDiagram) -> int:
    """Signature of the link, summed over split pieces."""
    parts = split_parts(d)
    if len(parts) > 1:
        return sum(link_signature(sublink(d, p)) for p in parts)
    return goeritz(d).signature


def goeritz_determinant(d: LinkDiagram) -> int:
    parts = split_parts(d)
    if len(parts) > 1:
        return 0
    gd = goeritz(d)
    return abs(bareiss_det(gd.matrix))
