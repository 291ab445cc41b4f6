"""Milnor invariants from a diagram.

Pipeline: Wirtinger presentation (one generator per over-strand) ->
longitudes as words in strand generators -> iterated rewriting of every
strand generator as a conjugate of its component's base meridian ->
Magnus expansion ``alpha_j = 1 + k_j`` -> coefficients ``mu``, their gcd
indeterminacy ``Delta`` and the residues ``mu_bar``.

Words are tuples of nonzero ints: ``+g`` / ``-g`` is the generator with
1-based index ``g`` or its inverse.  After reduction the generators are the
component meridians ``1..m``.  A Magnus series keeps the terms of degree
``< q``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, gcd

from .diagram import LinkDiagram, _work, overarcs

__all__ = [
    "WirtingerPresentation",
    "wirtinger",
    "reduce_longitudes",
    "free_reduce",
    "MagnusSeries",
    "magnus_expand",
    "longitude_series",
    "MilnorTable",
    "mu",
    "delta",
    "mu_bar",
    "mu_bar_table",
    "TruncationError",
]


class TruncationError(ValueError):
    """A multi-index longer than the truncation length was requested."""


def free_reduce(word) -> tuple[int, ...]:
    out: list[int] = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def _inv(word):
    return tuple(-g for g in reversed(word))


@dataclass(frozen=True)
class Step:
    """Passing under ``over`` at a crossing of sign ``sign``, from strand
    ``before`` to strand ``after``."""

    before: int
    over: int
    sign: int
    after: int


@dataclass
class WirtingerPresentation:
    n_generators: int
    relations: list[tuple[int, int, int, int]]  # (out, over, sign, in)
    component_of: list[int]  # generator -> component
    base: list[int]  # component -> base generator
    walks: list[list[Step]]  # per component, from the base strand around
    framing: list[int]  # exponent of the base meridian closing each longitude

    def longitude(self, i: int) -> tuple[int, ...]:
        """``l_i`` over strand generators (1-based), zero framed."""
        word = []
        for s in reversed(self.walks[i]):
            word.append((s.over + 1) * s.sign)
        b = self.base[i] + 1
        word += [b if self.framing[i] > 0 else -b] * abs(self.framing[i])
        return free_reduce(word)


def wirtinger(d: LinkDiagram, start: dict[int, int] | None = None) -> WirtingerPresentation:
    """Wirtinger presentation with longitudes.

    ``start`` optionally maps a component to the diagram edge its walk (and
    so its base meridian) starts from; the default is the component's first
    edge.  Relation at a crossing of sign ``e``: ``x_out = x_over^e x_in
    x_over^-e``.
    """
    strands, col = overarcs(d)
    _, ends, _ = _work(d)
    comp_of_edge = d.component_of()
    gen_comp = [comp_of_edge[s[0]] for s in strands]
    relations = []
    for x, (a, b, c, _) in enumerate(d.crossings):
        relations.append((col[c], col[b], d.signs[x], col[a]))
    base, walks, framing = [], [], []
    for i, comp in enumerate(d.components):
        e0 = (start or {}).get(i, comp[0])
        if e0 not in comp:
            raise ValueError(f"edge {e0} is not on component {i}")
        k = comp.index(e0)
        order = comp[k:] + comp[:k]
        base.append(col[e0])
        walk = []
        for e in order:
            if e not in ends:
                continue
            x, slot = ends[e][1]
            if slot == 0:
                a, b, c, _ = d.crossings[x]
                walk.append(Step(col[a], col[b], d.signs[x], col[c]))
        walks.append(walk)
        framing.append(-d.self_writhe(i))
    return WirtingerPresentation(len(strands), relations, gen_comp, base, walks, framing)


def _conjugators(p: WirtingerPresentation, passes: int):
    """Words ``W_s`` with ``x_s = W_s alpha W_s^-1`` after ``passes`` rounds."""
    m = len(p.base)
    conj = [() for _ in range(p.n_generators)]

    def as_meridians(g, table):
        c = p.component_of[g] + 1
        w = table[g]
        return w + (c,) + _inv(w)

    for _ in range(passes):
        new = list(conj)
        for i in range(m):
            w: tuple[int, ...] = ()
            new[p.base[i]] = ()
            for s in p.walks[i][:-1] if p.walks[i] else []:
                o = as_meridians(s.over, conj)
                o = o if s.sign > 0 else _inv(o)
                w = free_reduce(o + w)
                new[s.after] = w
        conj = new
    return conj


def reduce_longitudes(p: WirtingerPresentation, q: int) -> list[tuple[int, ...]]:
    """Longitudes as words in the meridians ``1..m``, valid modulo ``F_q``."""
    if q < 2:
        raise ValueError("q must be >= 2")
    conj = _conjugators(p, q - 1)
    out = []
    for i in range(len(p.base)):
        word: tuple[int, ...] = ()
        for g in p.longitude(i):
            s = abs(g) - 1
            c = p.component_of[s] + 1
            x = conj[s] + (c,) + _inv(conj[s])
            word = free_reduce(word + (x if g > 0 else _inv(x)))
        out.append(word)
    return out


# ---------------------------------------------------------------------------
# Magnus expansion


class MagnusSeries:
    """Truncated power series in noncommuting ``k_1 .. k_m``.

    Terms are stored as ``{word: coeff}`` with ``word`` a tuple of 1-based
    symbol indices, keeping only words shorter than ``q``.
    """

    __slots__ = ("q", "terms")

    def __init__(self, q: int, terms: dict | None = None):
        self.q = q
        self.terms = {w: c for w, c in (terms or {}).items() if c and len(w) < q}

    @classmethod
    def one(cls, q):
        return cls(q, {(): 1})

    @classmethod
    def generator(cls, j: int, q: int, power: int = 1):
        """Expansion of ``alpha_j^power``."""
        if power >= 0:
            # (1 + k)^p = sum binom(p, r) k^r
            return cls(q, {(j,) * r: comb(power, r) for r in range(min(power, q - 1) + 1)})
        p = -power
        # (1 + k)^-p = sum (-1)^r binom(p + r - 1, r) k^r
        return cls(q, {(j,) * r: (-1) ** r * comb(p + r - 1, r) for r in range(q)})

    def __mul__(self, other: "MagnusSeries") -> "MagnusSeries":
        q = min(self.q, other.q)
        out: dict = {}
        by_len: dict[int, list] = {}
        for w, c in other.terms.items():
            by_len.setdefault(len(w), []).append((w, c))
        for w1, c1 in self.terms.items():
            room = q - 1 - len(w1)
            for ln, items in by_len.items():
                if ln > room:
                    continue
                for w2, c2 in items:
                    key = w1 + w2
                    out[key] = out.get(key, 0) + c1 * c2
        return MagnusSeries(q, out)

    def inverse(self) -> "MagnusSeries":
        """Inverse of a series with constant term 1."""
        if self.terms.get((), 0) != 1:
            raise ValueError("only series with constant term 1 are inverted here")
        n = MagnusSeries(self.q, {w: -c for w, c in self.terms.items() if w})
        out = MagnusSeries.one(self.q)
        power = MagnusSeries.one(self.q)
        for _ in range(1, self.q):
            power = power * n
            if not power.terms:
                break
            for w, c in power.terms.items():
                out.terms[w] = out.terms.get(w, 0) + c
        return MagnusSeries(self.q, out.terms)

    def coeff(self, word) -> int:
        return self.terms.get(tuple(word), 0)

    def __eq__(self, other):
        return isinstance(other, MagnusSeries) and self.q == other.q and self.terms == other.terms

    def __repr__(self):
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])):
            mono = "".join(f"k{j}" for j in w) or "1"
            parts.append(f"{c:+d}*{mono}" if w else f"{c:+d}")
        return f"MagnusSeries(q={self.q}: {' '.join(parts)})"


def magnus_expand(word, q: int) -> MagnusSeries:
    """Expansion of a word in the meridians, truncated below degree ``q``."""
    out = MagnusSeries.one(q)
    for g, run in itertools.groupby(word):
        n = len(list(run))
        j = abs(g)
        out = out * MagnusSeries.generator(j, q, n if g > 0 else -n)
    return out


def longitude_series(p: WirtingerPresentation, q: int) -> list[MagnusSeries]:
    """Magnus expansions of the reduced longitudes, computed on series.

    Same result as expanding :func:`reduce_longitudes` word by word, without
    ever forming the (exponentially long) words.
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    m = len(p.base)
    one = MagnusSeries.one(q)
    merid = [MagnusSeries.generator(c + 1, q) for c in range(m)]
    merid_inv = [MagnusSeries.generator(c + 1, q, -1) for c in range(m)]
    # conjugator series W_s and W_s^-1
    conj = [(one, one) for _ in range(p.n_generators)]

    def elem(g, table, sign):
        w, wi = table[g]
        c = p.component_of[g]
        return w * (merid[c] if sign > 0 else merid_inv[c]) * wi

    for _ in range(q - 1):
        new = list(conj)
        for i in range(m):
            w, wi = one, one
            new[p.base[i]] = (one, one)
            for s in p.walks[i][:-1] if p.walks[i] else []:
                w = elem(s.over, conj, s.sign) * w
                wi = wi * elem(s.over, conj, -s.sign)
                new[s.after] = (w, wi)
        conj = new
    out = []
    for i in range(m):
        acc = one
        for g in p.longitude(i):
            acc = acc * elem(abs(g) - 1, conj, 1 if g > 0 else -1)
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# mu, Delta, mu-bar


@dataclass
class MilnorTable:
    q: int
    n_components: int
    entries: dict[tuple[int, ...], tuple[int, int, int]] = field(default_factory=dict)
    name: str = ""

    def mu_bar(self, index) -> int:
        return self.entries[tuple(index)][2]

    def nonzero(self) -> dict:
        return {k: v for k, v in self.entries.items() if v[2] != 0}

    def to_json(self) -> list[dict]:
        return [
            {"index": list(k), "mu": v[0], "delta": v[1], "mu_bar": v[2]}
            for k, v in sorted(self.entries.items(), key=lambda t: (len(t[0]), t[0]))
        ]


class _Mu:
    def __init__(self, d: LinkDiagram, q: int, start=None):
        self.q = q
        self.m = d.n_components
        self.series = longitude_series(wirtinger(d, start), q)

    def mu(self, index) -> int:
        index = tuple(index)
        if len(index) < 2:
            raise ValueError("mu needs at least two indices")
        if len(index) > self.q:
            raise TruncationError(f"index length {len(index)} exceeds truncation q={self.q}")
        for i in index:
            if not 1 <= i <= self.m:
                raise ValueError(f"index {i} out of range 1..{self.m}")
        return self.series[index[-1] - 1].coeff(index[:-1])

    def delta(self, index) -> int:
        index = tuple(index)
        g = 0
        seen = set()
        r = len(index)
        for keep in range(2, r):
            for pos in itertools.combinations(range(r), keep):
                sub = tuple(index[p] for p in pos)
                for k in range(keep):
                    cyc = sub[k:] + sub[:k]
                    if cyc not in seen:
                        seen.add(cyc)
                        g = gcd(g, self.mu(cyc))
        return g

    def mu_bar(self, index) -> tuple[int, int, int]:
        v, dl = self.mu(index), self.delta(index)
        return v, dl, (v % dl if dl else v)


def mu(d: LinkDiagram, index, q: int = 5) -> int:
    """Magnus coefficient ``mu(j_1 .. j_s i)`` (1-based component indices)."""
    return _Mu(d, q).mu(index)


def delta(d: LinkDiagram, index, q: int = 5) -> int:
    return _Mu(d, q).delta(index)


def mu_bar(d: LinkDiagram, index, q: int = 5) -> int:
    return _Mu(d, q).mu_bar(index)[2]


def mu_bar_table(d: LinkDiagram, q: int = 5, start=None, max_len: int | None = None) -> MilnorTable:
    """``(mu, Delta, mu_bar)`` for every index of length ``2 .. q``."""
    calc = _Mu(d, q, start)
    top = q if max_len is None else min(q, max_len)
    table = MilnorTable(q, d.n_components, name=d.name)
    for r in range(2, top + 1):
        for index in itertools.product(range(1, d.n_components + 1), repeat=r):
            table.entries[index] = calc.mu_bar(index)
    return table
