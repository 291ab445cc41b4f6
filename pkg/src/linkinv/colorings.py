"""Fox colorings and the link determinant.

Columns of the coloring matrix are over-strands (see
:func:`linkinv.diagram.overarcs`); row ``c`` encodes
``2 col(over) - col(under_in) - col(under_out) = 0`` at crossing ``c``.
Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagram import LinkDiagram, overarcs

__all__ = [
    "ColoringMatrix",
    "coloring_matrix",
    "bareiss_det",
    "diagonalize",
    "determinant",
    "colorable_mod",
    "integer_coloring",
    "check_coloring",
]


@dataclass(frozen=True)
class ColoringMatrix:
    rows: tuple[tuple[int, ...], ...]
    strands: tuple[tuple[int, ...], ...]  # column -> diagram edges

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.strands)

    def to_json(self) -> dict:
        return {"matrix": [list(r) for r in self.rows], "strands": [list(s) for s in self.strands]}


def coloring_matrix(d: LinkDiagram) -> ColoringMatrix:
    strands, col = overarcs(d)
    rows = []
    for a, b, c, dd in d.crossings:
        row = [0] * len(strands)
        row[col[b]] += 2
        row[col[a]] -= 1
        row[col[c]] -= 1
        rows.append(tuple(row))
    return ColoringMatrix(tuple(rows), tuple(tuple(s) for s in strands))


def bareiss_det(m: list[list[int]]) -> int:
    """Determinant by fraction-free elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def diagonalize(m: list[list[int]]) -> tuple[list[int], list[list[int]]]:
    """Integer row/column reduction to diagonal form.

    Returns ``(diag, V)`` with ``U m V = diag`` for some unimodular ``U``;
    ``diag`` has one entry per column (zeros past the rank).
    """
    a = [list(r) for r in m]
    nr = len(a)
    nc = len(a[0]) if a else 0
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def col_op(dst, src, f):  # column dst -= f * column src
        for row in a:
            row[dst] -= f * row[src]
        for row in v:
            row[dst] -= f * row[src]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        a[t], a[best[0]] = a[best[0]], a[t]
        col_swap(t, best[1])
        while True:
            done = True
            for i in range(t + 1, nr):
                f = a[i][t] // a[t][t]
                if f:
                    a[i] = [x - f * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, nc):
                f = a[t][j] // a[t][t]
                if f:
                    col_op(j, t, f)
                if a[t][j]:
                    done = False
            if done:
                break
            # a remainder is smaller than the pivot: move it there
            i, j = min(
                ((i, t) for i in range(t + 1, nr) if a[i][t]),
                default=None,
                key=lambda p: abs(a[p[0]][p[1]]),
            ) or min(
                ((t, j) for j in range(t + 1, nc) if a[t][j]),
                key=lambda p: abs(a[p[0]][p[1]]),
            )
            if j == t:
                a[t], a[i] = a[i], a[t]
            else:
                col_swap(t, j)
        t += 1
    diag = [a[i][i] if i < nr else 0 for i in range(nc)]
    return diag, v


def determinant(d: LinkDiagram, row: int | None = None, col: int | None = None) -> int:
    """Link determinant from the coloring matrix.

    By default this is the order of the torsion of the coloring module, or
    0 when it has free rank above one; for a square coloring matrix that is
    ``|det|`` of any first minor.  Passing ``row``/``col`` evaluates that
    particular minor instead (square matrices only).
    """
    if d.n_crossings == 0:
        return 1 if d.n_components == 1 else 0
    rows = [list(r) for r in coloring_matrix(d).rows]
    if row is not None or col is not None:
        row = 0 if row is None else row
        col = 0 if col is None else col
        if len(rows) != len(rows[0]):
            raise ValueError("minor needs a square coloring matrix")
        if not (0 <= row < len(rows) and 0 <= col < len(rows[0])):
            raise IndexError(f"no row {row} / column {col} to delete")
        minor = [[x for j, x in enumerate(r) if j != col] for i, r in enumerate(rows) if i != row]
        return abs(bareiss_det(minor))
    diag, _ = diagonalize(rows)
    nonzero = [x for x in diag if x]
    if len(diag) - len(nonzero) > 1:
        return 0
    out = 1
    for x in nonzero:
        out *= abs(x)
    return out


def check_coloring(d: LinkDiagram, colors: list[int], n: int | None = None) -> bool:
    for r in coloring_matrix(d).rows:
        s = sum(a * b for a, b in zip(r, colors))
        if (s % n if n else s) != 0:
            return False
    return True


def _normalise(x: list[int], n: int | None) -> list[int]:
    x = [v - x[0] for v in x]
    if n:
        return [v % n for v in x]
    g = 0
    for v in x:
        g = gcd(g, v)
    x = [v // g for v in x] if g else x
    first = next((v for v in x if v), 0)
    return [-v for v in x] if first < 0 else x


def _kernel_generators(d: LinkDiagram, n: int | None):
    cm = coloring_matrix(d)
    ncols = cm.shape[1]
    if not cm.rows:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    diag, v = diagonalize([list(r) for r in cm.rows])
    gens = []
    for i, di in enumerate(diag):
        if di == 0:
            y = 1
        elif n and gcd(di, n) > 1:
            y = n // gcd(di, n)
        else:
            continue
        gens.append([row[i] * y for row in v])
    return gens


def colorable_mod(d: LinkDiagram, n: int) -> list[int] | None:
    """A nonconstant coloring mod ``n`` (first strand colored 0), or None."""
    if n < 2:
        raise ValueError("n must be >= 2")
    for x in _kernel_generators(d, n):
        x = [v % n for v in x]
        if len(set(x)) > 1:
            return _normalise(x, n)
    return None


def integer_coloring(d: LinkDiagram) -> list[int] | None:
    """A nonconstant integer coloring, normalised, or None."""
    for x in _kernel_generators(d, None):
        if len(set(x)) > 1:
            return _normalise(x, None)
    return None
