"""Kauffman bracket evaluation.

Two independent evaluators:

* :func:`bracket_contract` - crossings are absorbed one at a time while the
  open strand ends are tracked as a perfect matching (the "frontier").
  States with equal matchings are merged, so the cost is governed by the
  frontier width rather than ``2^n``.
* :func:`bracket_statesum` - plain enumeration of all ``2^n`` states using
  the compiled histogram kernel.

Bracket values are Laurent polynomials in ``A`` (stored as LaurentPoly with
the exponent meaning a power of ``A``), normalised so the crossingless
unknot has bracket 1.
"""

from __future__ import annotations

from .diagram import LinkDiagram
from .poly import LaurentPoly
from . import _kernels

__all__ = ["BudgetExceeded", "bracket_contract", "bracket_statesum", "crossing_order"]


class BudgetExceeded(RuntimeError):
    """Raised when an evaluation would exceed its node budget."""


def _add_into(dst: dict, key, poly: dict, shift: int, mul_delta: int):
    # dst[key] += poly * A^shift * delta^mul_delta, delta = -A^2 - A^-2
    p = {e + shift: v for e, v in poly.items()}
    for _ in range(mul_delta):
        q: dict[int, int] = {}
        for e, v in p.items():
            q[e + 2] = q.get(e + 2, 0) - v
            q[e - 2] = q.get(e - 2, 0) - v
        p = q
    acc = dst.get(key)
    if acc is None:
        dst[key] = {e: v for e, v in p.items() if v}
        return
    for e, v in p.items():
        s = acc.get(e, 0) + v
        if s:
            acc[e] = s
        else:
            acc.pop(e, None)


def crossing_order(d: LinkDiagram) -> list[int]:
    """Greedy order keeping the set of open arcs small.

    Each step takes the crossing sharing the most arcs with those already
    open; ties go to the lowest crossing index.
    """
    n = d.n_crossings
    if n == 0:
        return []
    arcs_of = [set(x) for x in d.crossings]
    touching: dict[int, list[int]] = {}
    for c, x in enumerate(d.crossings):
        for a in set(x):
            touching.setdefault(a, []).append(c)
    done = [False] * n
    seen_count: dict[int, int] = {}
    order = []
    score = [0] * n
    for _ in range(n):
        best, best_key = -1, None
        for c in range(n):
            if done[c]:
                continue
            # arcs closed by c minus arcs opened by c
            closes = sum(1 for a in arcs_of[c] if seen_count.get(a, 0) == 1 or d.crossings[c].count(a) == 2)
            key = (score[c] > 0, 2 * closes - len(arcs_of[c]), -c)
            if best_key is None or key > best_key:
                best, best_key = c, key
        c = best
        done[c] = True
        order.append(c)
        for a in d.crossings[c]:
            seen_count[a] = seen_count.get(a, 0) + 1
        for a in arcs_of[c]:
            for c2 in touching[a]:
                score[c2] += 1
    return order


def bracket_contract(d: LinkDiagram, budget: int | None = None, stats: dict | None = None) -> LaurentPoly:
    """Bracket by frontier contraction.

    ``budget`` bounds the total number of frontier states created; exceeding
    it raises :class:`BudgetExceeded`.  ``stats`` (if given) receives
    ``nodes`` and ``max_frontier``.
    """
    order = crossing_order(d)
    # state: tuple of sorted (open_arc, partner) pairs -> {A-exponent: coeff}
    states: dict[tuple, dict[int, int]] = {(): {0: 1}}
    nodes = 0
    max_width = 0
    for c in order:
        a, b, cc, dd = d.crossings[c]
        new_states: dict[tuple, dict[int, int]] = {}
        for key, poly in states.items():
            for pairs, shift in (((a, b), (cc, dd)), 1), (((a, dd), (b, cc)), -1):
                partner = dict(key)
                loops = 0
                for p, q in pairs:
                    loops += _connect(partner, p, q)
                nk = tuple(sorted(partner.items()))
                _add_into(new_states, nk, poly, shift, loops)
        states = {k: v for k, v in new_states.items() if v}
        nodes += len(states)
        if states:
            max_width = max(max_width, max(len(k) for k in states))
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"bracket contraction exceeded budget of {budget} states")
    if stats is not None:
        stats["nodes"] = nodes
        stats["max_frontier"] = max_width
    total = states.get((), {})
    # crossingless components are extra loops
    comp_with_crossing = {x[0] for x in d.crossings} | {x[1] for x in d.crossings}
    comp_of = d.component_of()
    touched = {comp_of[a] for a in comp_with_crossing}
    free = d.n_components - len(touched)
    # every closed loop was counted as a delta factor; unknot normalisation
    # divides by one delta, i.e. free loops contribute delta^free * delta^-1
    result: dict[int, int] = {}
    _add_into(result, 0, total, 0, free)
    res = LaurentPoly(result[0]) if 0 in result else LaurentPoly()
    return _divide_delta(res)


def _connect(partner: dict, p, q) -> int:
    """Join an end of arc p to an end of arc q; return closed loops created."""
    if p == q:
        if p in partner:
            # both ends of p meet here but p was already open: impossible
            raise ValueError("arc joined to itself twice")
        return 1
    pp = partner.pop(p, None)
    qq = partner.pop(q, None)
    if pp is None and qq is None:
        partner[p] = q
        partner[q] = p
        return 0
    if pp is not None and qq is not None:
        if pp == q:
            return 1
        partner[pp] = qq
        partner[qq] = pp
        return 0
    if pp is not None:
        # p was open with far end pp; q is new, its far end now pp
        partner[q] = pp
        partner[pp] = q
        return 0
    partner[p] = qq
    partner[qq] = p
    return 0


def _divide_delta(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return p
    return p.divide_exact(LaurentPoly({-2: -1, 2: -1}))


def bracket_statesum(d: LinkDiagram, backend: str | None = None) -> LaurentPoly:
    """Bracket from the full ``2^n`` state enumeration."""
    n = d.n_crossings
    comp_of = d.component_of()
    touched = {comp_of[x[0]] for x in d.crossings} | {comp_of[x[1]] for x in d.crossings}
    free = d.n_components - len(touched)
    if n == 0:
        return LaurentPoly({0: 1}) * LaurentPoly({-2: -1, 2: -1}) ** (free - 1)
    arcs = sorted({a for x in d.crossings for a in x})
    idx = {a: i for i, a in enumerate(arcs)}
    pd = [[idx[a] for a in x] for x in d.crossings]
    hist = _kernels.state_histogram(pd, len(arcs), backend=backend)
    delta = LaurentPoly({-2: -1, 2: -1})
    total = LaurentPoly()
    for k in range(hist.shape[0]):
        for loops in range(hist.shape[1]):
            cnt = int(hist[k, loops])
            if cnt:
                total = total + LaurentPoly({k - (n - k): cnt}) * delta ** (loops + free - 1)
    return total
