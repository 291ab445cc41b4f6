"""Named verification suites run by ``linkinv verify``.

Every suite returns a list of :class:`~linkinv.jones.CheckReport`; a suite
passes when every check in every report holds exactly.
"""

from __future__ import annotations

from .diagram import disjoint_union, unknot, unlink
from .families import gen
from .jones import (
    CheckReport,
    deg_lo_formula_check,
    doubled_chain_check,
    jones_value,
    l3_derivation,
    phi,
    recurrence_check,
    verify_skein,
)
from .milnor import mu, mu_bar_table
from .poly import DELTA, ONE, parse_t

__all__ = ["KNOWN", "SUITES", "run_suite"]

# closed forms the engine is held to
KNOWN = {
    "whitehead": "t^{-3/2}(-1 + t - 2t^2 + t^3 - 2t^4 + t^5)",
    "B3": "-t^3 + 3t^2 - 2t + 4 - 2t^{-1} + 3t^{-2} - t^{-3}",
    "A": "t^2 + 2 + t^{-2}",
    "L3": "t^{9/2} - 2t^{7/2} + t^{5/2} - 2t^{3/2} - 2t^{1/2} - 2t^{-1/2} - 2t^{-3/2}"
    " + t^{-5/2} - 2t^{-7/2} + t^{-9/2}",
    "Wn(B3):n=1": "-t^4 + 2t^3 - t^2 + 2t + 1 + t^{-2} - t^{-3} + 2t^{-4} - t^{-5}",
    "Lp3": "-t^6 + t^5 + t^3 + 2t^2 + 2t + 6 + 2t^{-1} + 2t^{-2} + t^{-3} + t^{-5} - t^{-6}",
}

SKEIN_SPECS = ("trefoil", "hopf", "whitehead", "B3", "A", "L3", "Wn(B3):n=2", "Lp3")


def _known_value(key: str):
    text = KNOWN[key]
    if key == "whitehead":
        inner = text[text.index("(", 8) + 1 : -1]
        return parse_t("t^{-3/2}") * parse_t(inner)
    return parse_t(text)


def values() -> CheckReport:
    rep = CheckReport("closed-form values")
    rep.add("V(unknot) = 1", jones_value(unknot()) == ONE)
    for m in range(2, 6):
        rep.add(f"V(unlink {m}) = delta^{m - 1}", jones_value(unlink(m)) == DELTA ** (m - 1))
    for key in KNOWN:
        got = jones_value(gen(key))
        want = _known_value(key)
        rep.add(f"V({key})", got == want, "" if got == want else f"engine {got.render_t()}")
    return rep


def skein(specs=SKEIN_SPECS) -> CheckReport:
    rep = CheckReport("skein residuals")
    for spec in specs:
        d = gen(spec)
        bad = [c for c in range(d.n_crossings) if not verify_skein(d, c).passed]
        rep.add(f"{spec}: {d.n_crossings} crossings", not bad, f"nonzero at {bad}" if bad else "")
    return rep


def degrees() -> CheckReport:
    rep = CheckReport("degree tables")
    lows = {}
    for n in range(1, 5):
        sub = deg_lo_formula_check(3, n)
        for label, ok, det in sub.items:
            rep.add(f"W{n}(B3) {label}", ok, det)
    for n in range(0, 6):
        lows[n] = jones_value(gen(f"Wn(B3):n={n}"))
    distinct = len(set(lows.values())) == len(lows)
    rep.add("V(W_n(B3)) pairwise distinct, n = 0..5", distinct)
    for n in (2, 3, 4):
        ok = lows[n] == phi(lows[n - 2])
        rep.add(f"V(W{n}(B3)) = phi(V(W{n - 2}(B3)))", ok)
    for m in (3, 4):
        hi = jones_value(gen(f"L{m}")).deg_hi()
        rep.add(f"deg_hi_z V(L{m}) = 5(m-3)+9", hi == 5 * (m - 3) + 9, f"engine {hi}")
    return rep


def milnor(q: int = 4) -> list[CheckReport]:
    lk = CheckReport("mu(ij) = linking number")
    for spec in ("hopf:sign=+", "hopf:sign=-", "whitehead", "B3", "A", "L3", "Wn(B3):n=2"):
        d = gen(spec)
        m = d.n_components
        for i in range(m):
            for j in range(m):
                if i != j:
                    got = mu(d, (i + 1, j + 1), q=2)
                    want = d.linking_number(i, j)
                    lk.add(f"{spec} mu({i + 1}{j + 1})", got == want, f"{got} vs {want}")
    triv = CheckReport("unlink tables vanish")
    for m in (2, 3):
        t = mu_bar_table(unlink(m), q=5 if m == 2 else q)
        triv.add(f"unlink {m}, q = {t.q}", not t.nonzero())
    bor = CheckReport("Borromean triple")
    b = gen("B3")
    bor.add("|mu_bar(123)| = 1", abs(mu_bar_table(b, q=3).mu_bar((1, 2, 3))) == 1)
    ww = CheckReport("W_{1,1} double-double")
    t = mu_bar_table(gen("Wkn13:k=1,n=1"), q=q)
    nz = t.nonzero()
    ww.add(f"all mu_bar of length <= {q} vanish", not nz, _brief(nz))
    return [lk, triv, bor, ww]


def _brief(nz: dict) -> str:
    items = sorted(nz.items(), key=lambda kv: (len(kv[0]), kv[0]))[:4]
    return ", ".join("mu_bar(" + "".join(map(str, k)) + f") = {v[2]}" for k, v in items)


def recurrences() -> list[CheckReport]:
    return [
        recurrence_check("L", 4),
        recurrence_check("L", 5),
        recurrence_check("Lprime", 4, "quoted"),
        recurrence_check("Lprime", 4, "engine"),
    ]


def chain() -> list[CheckReport]:
    return [l3_derivation(), doubled_chain_check(2, 2)]


def unions() -> CheckReport:
    rep = CheckReport("split unions")
    for spec in ("trefoil", "whitehead", "B3"):
        d = gen(spec)
        got = jones_value(disjoint_union(d, unknot()))
        rep.add(f"V({spec} + unknot) = delta V({spec})", got == DELTA * jones_value(d))
    return rep


SUITES = {
    "values": lambda: [values(), unions()],
    "skein": lambda: [skein()],
    "chain": chain,
    "recurrences": recurrences,
    "degrees": lambda: [degrees()],
    "milnor": milnor,
}


def run_suite(name: str) -> list[CheckReport]:
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(SUITES[key]())
        return out
    try:
        return SUITES[name]()
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}") from None
