"""Command-line front end.

Exit codes: 0 success, 1 a verified equality failed, 2 bad input or
resource limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .bracket import BudgetExceeded
from .colorings import colorable_mod, determinant, integer_coloring
from .diagram import DiagramError, canonical_code, format_pd, parse_pd
from .families import FAMILIES, gen, marked_site, markers, parse_spec, whitehead_double
from .jones import DEFAULT_BUDGET, jones
from .milnor import TruncationError, mu_bar_table
from .poly import LaurentPoly
from .signature import link_signature
from .store import ENGINE_VERSION, Store, cache_key
from .verify import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2

INVARIANTS = ("jones", "det", "colorings", "signature", "milnor")

log = logging.getLogger("linkinv")


class InputError(Exception):
    pass


def _load(args):
    if args.family and args.pd:
        raise InputError("give --family or --pd, not both")
    if args.family:
        try:
            return gen(args.family)
        except (ValueError, KeyError) as e:
            raise InputError(f"family {args.family!r}: {e}") from None
    if args.pd:
        try:
            text = sys.stdin.read() if args.pd == "-" else open(args.pd, encoding="utf-8").read()
        except OSError as e:
            raise InputError(f"cannot read {args.pd}: {e.strerror}") from None
        try:
            return parse_pd(text)
        except DiagramError as e:
            raise InputError(f"{args.pd}: {e}") from None
    raise InputError("need --family SPEC or --pd FILE")


def _compute(d, args) -> dict:
    inv = args.invariant
    if inv == "jones":
        res = jones(d, budget=args.budget)
        out = res.to_json()
        out["latex"] = res.value.render_latex()
        return out
    if inv == "det":
        det = determinant(d)
        out = {"det": det}
        if det == 0:
            w = integer_coloring(d)
            out["witness"] = w
        return out
    if inv == "colorings":
        n = args.mod
        if n is None:
            return {"det": determinant(d), "integer_coloring": integer_coloring(d)}
        return {"n": n, "coloring": colorable_mod(d, n)}
    if inv == "signature":
        return {"signature": link_signature(d)}
    if inv == "milnor":
        t = mu_bar_table(d, q=args.q)
        return {"q": t.q, "components": t.n_components, "entries": t.to_json()}
    raise InputError(f"unknown invariant {inv!r}")


def _params(args) -> dict:
    p = {"v": ENGINE_VERSION}
    if args.invariant == "milnor":
        p["q"] = args.q
    if args.invariant == "colorings":
        p["mod"] = args.mod
    return p


def _render(inv, d, value, fmt) -> str:
    if fmt == "json":
        return json.dumps({"link": d.name, "invariant": inv, "result": value}, sort_keys=True, indent=2)
    if inv == "jones":
        p = LaurentPoly.from_json(value["value"])
        return p.render_latex() if fmt == "latex" else p.render_t()
    if inv == "det":
        s = str(value["det"])
        if value.get("witness"):
            s += "\ncoloring " + " ".join(map(str, value["witness"]))
        return s
    if inv == "colorings":
        if "n" in value:
            c = value["coloring"]
            return f"not {value['n']}-colorable" if c is None else " ".join(map(str, c))
        c = value["integer_coloring"]
        return f"det {value['det']}\n" + ("no integer coloring" if c is None else " ".join(map(str, c)))
    if inv == "signature":
        return str(value["signature"])
    lines = []
    for e in value["entries"]:
        if e["mu"] or e["mu_bar"]:
            idx = "".join(map(str, e["index"]))
            lines.append(f"mu({idx}) = {e['mu']}  Delta = {e['delta']}  mu_bar = {e['mu_bar']}")
    return "\n".join(lines) or f"all mu_bar vanish up to length {value['q']}"


def cmd_invariant(args) -> int:
    d = _load(args)
    if args.invariant == "milnor" and args.q < 2:
        raise InputError("--q must be >= 2")
    if args.invariant == "colorings" and args.mod is not None and args.mod < 2:
        raise InputError("--mod must be >= 2")
    # component order matters for Milnor invariants, so key on the diagram itself
    code = format_pd(d) if args.invariant == "milnor" else canonical_code(d)
    key = cache_key(code, args.invariant, _params(args))
    if args.no_cache:
        value = _compute(d, args)
    else:
        value = Store(args.cache).fetch(key, lambda: _compute(d, args), spot_check=args.spot_check)
    print(_render(args.invariant, d, value, args.format))
    return EXIT_OK


def cmd_family(args) -> int:
    if args.action == "list":
        print("\n".join(FAMILIES))
        return EXIT_OK
    if not args.spec:
        raise InputError("family gen needs a SPEC")
    try:
        d = gen(parse_spec(args.spec))
    except (ValueError, KeyError) as e:
        raise InputError(str(e)) from None
    if args.format == "json":
        out = d.to_json()
        out["markers"] = markers(d)
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        print(format_pd(d), end="")
    return EXIT_OK


def cmd_double(args) -> int:
    d = _load(args)
    i = d.n_components - 1 if args.component is None else args.component
    try:
        out = whitehead_double(d, i, args.n, args.sign)
    except (ValueError, IndexError) as e:
        raise InputError(str(e)) from None
    if args.format == "json":
        data = out.to_json()
        data["markers"] = markers(out)
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(format_pd(out), end="")
        if args.n:
            print(f"# clasp crossing {marked_site(out, 'clasp')}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        reports = run_suite(args.suite)
    except ValueError as e:
        raise InputError(str(e)) from None
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps({"suite": args.suite, "passed": ok, "reports": [r.to_json() for r in reports]}, indent=2))
    else:
        for r in reports:
            print(r)
        n_fail = sum(not r.passed for r in reports)
        print(f"{args.suite}: {'PASS' if ok else 'FAIL'} ({len(reports) - n_fail}/{len(reports)} reports)")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_cache(args) -> int:
    store = Store(args.cache)
    if args.action == "clear":
        store.clear()
        print(f"cleared {store.path}")
    elif args.action == "path":
        print(store.path)
    else:
        st = store.stats()
        if args.format == "json":
            print(json.dumps(st, sort_keys=True))
        else:
            print("\n".join(f"{k}: {v}" for k, v in st.items()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linkinv", description="Link invariants from PD codes and families.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--cache", metavar="PATH", help="cache file (default: $LINKINV_CACHE)")
    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("--family", metavar="SPEC", help='family expression, e.g. "Wn(B3):n=2,sign=-"')
    src.add_argument("--pd", metavar="FILE", help="PD file ('-' for stdin)")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("invariant", parents=[common, src], help="compute one invariant")
    q.add_argument("invariant", choices=INVARIANTS)
    q.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="frontier-state budget for jones")
    q.add_argument("--no-cache", action="store_true")
    q.add_argument("--q", type=int, default=4, help="Magnus truncation for milnor")
    q.add_argument("--mod", type=int, help="modulus for colorings")
    q.add_argument("--spot-check", type=float, default=0.05, help="fraction of cache hits recomputed")
    q.set_defaults(func=cmd_invariant)

    f = sub.add_parser("family", parents=[common], help="generate family diagrams")
    f.add_argument("action", choices=("gen", "list"))
    f.add_argument("spec", nargs="?")
    f.set_defaults(func=cmd_family)

    w = sub.add_parser("double", parents=[common, src], help="Whitehead-double one component")
    w.add_argument("--component", type=int, help="0-based component (default: last)")
    w.add_argument("--n", type=int, default=1, help="number of twists")
    w.add_argument("--sign", choices=("+", "-"), default="-")
    w.set_defaults(func=cmd_double)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("cache", parents=[common], help="inspect or clear the result cache")
    c.add_argument("action", choices=("stats", "clear", "path"))
    c.set_defaults(func=cmd_cache)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except BudgetExceeded as e:
        print(f"error: budget exceeded: {e}", file=sys.stderr)
        return EXIT_ERROR
    except TruncationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
