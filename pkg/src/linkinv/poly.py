"""Exact Laurent polynomials in one variable ``z`` with integer coefficients.

Jones polynomials are stored in ``z = t^{1/2}`` so every exponent is an
integer; the ``t`` form only exists at the text boundary (:meth:`render_t`,
:func:`parse_t`).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "parse_t", "Z", "ONE", "ZERO", "DELTA"]


class LaurentPoly:
    """Immutable integer Laurent polynomial ``sum c_e z^e``.

    Zero coefficients are never stored, so two equal polynomials always
    have identical term dictionaries.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            e = int(e)
            c[e] = c.get(e, 0) + int(v)
        self._c = {e: v for e, v in sorted(c.items()) if v}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def _raw(cls, c: dict[int, int]) -> "LaurentPoly":
        # trusted constructor: c already canonical (no zeros)
        p = object.__new__(cls)
        p._c = dict(sorted(c.items()))
        p._hash = None
        return p

    # -- access -------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def terms(self) -> list[tuple[int, int]]:
        """``(exponent, coefficient)`` pairs, ascending by exponent."""
        return list(self._c.items())

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    # -- ring operations ---------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) == 1:
                (e, v), = self._c.items()
                if v in (1, -1):
                    return LaurentPoly({-e * (-k): v ** (-k)})
            raise ValueError("negative power of a non-unit Laurent polynomial")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``z^k``."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def invert_variable(self) -> "LaurentPoly":
        """Substitute ``z -> 1/z`` (mirror image for Jones values)."""
        return LaurentPoly._raw({-e: v for e, v in self._c.items()})

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ``ValueError`` if there is a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._c)
        lo_d = other.deg_lo()
        lead = other._c[lo_d]
        q: dict[int, int] = {}
        # every quotient exponent lies in [lo(self) - lo(d), hi(self) - hi(d)]
        top = (self.deg_hi() - other.deg_hi()) if self._c else 0
        while rem:
            lo = min(rem)
            if lo - lo_d > top:
                raise ValueError("inexact polynomial division")
            v = rem[lo]
            if v % lead:
                raise ValueError("inexact polynomial division")
            f = v // lead
            s = lo - lo_d
            q[s] = f
            for e, c in other._c.items():
                x = rem.get(e + s, 0) - f * c
                if x:
                    rem[e + s] = x
                else:
                    rem.pop(e + s, None)
        return LaurentPoly(q)

    # -- degrees -----------------------------------------------------
    def deg_hi(self) -> int:
        if not self._c:
            raise ValueError("degree of zero undefined")
        return max(self._c)

    def deg_lo(self) -> int:
        if not self._c:
            raise ValueError("degree of zero undefined")
        return min(self._c)

    def deg_hi_t(self) -> Fraction:
        return Fraction(self.deg_hi(), 2)

    def deg_lo_t(self) -> Fraction:
        return Fraction(self.deg_lo(), 2)

    # -- comparison, hashing ------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __call__(self, z):
        return sum(v * z ** e for e, v in self._c.items())

    # -- text ---------------------------------------------------------
    def render_z(self) -> str:
        return _render(self, "z", lambda e: str(e))

    def render_t(self) -> str:
        """Terms by descending power of ``t``, half-integers as ``t^{k/2}``."""

        def fmt(e):
            return str(e // 2) if e % 2 == 0 else f"{e}/2"

        return _render(self, "t", fmt)

    def render_latex(self) -> str:
        """LaTeX with half-integer powers written as ``t^{\\frac{k}{2}}``."""

        def fmt(e):
            if e % 2 == 0:
                return str(e // 2)
            return f"-\\frac{{{-e}}}{{2}}" if e < 0 else f"\\frac{{{e}}}{{2}}"

        return _render(self, "t", fmt)

    def to_json(self) -> list[list[int]]:
        return [[e, v] for e, v in self._c.items()]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls((int(e), int(v)) for e, v in data)

    def __repr__(self):
        return f"LaurentPoly({self.render_z()!r})"

    def __str__(self):
        return self.render_t()


def _render(p: LaurentPoly, var: str, fmt) -> str:
    if not p._c:
        return "0"
    out = []
    for e, v in sorted(p._c.items(), reverse=True):
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if e == 0:
            body = str(a)
        else:
            power = var if fmt(e) == "1" else f"{var}^{{{fmt(e)}}}"
            body = power if a == 1 else f"{a}{power}"
        if not out:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TERM = re.compile(
    r"""\s*([+-])?\s*(\d+)?\s*\*?\s*      # sign, coefficient
        (?:(t|z)(?:\s*\^\s*(?:\{\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\}|([+-]?\d+)))?)?""",
    re.VERBOSE,
)


def parse_t(text: str, var: str = "t") -> LaurentPoly:
    """Parse ``render_t`` / ``render_z`` output and the usual hand-written variants.

    Exponents may be written ``t^3``, ``t^{3}``, ``t^{-5/2}``.  With
    ``var="t"`` the result is returned in ``z = t^{1/2}``.
    """
    s = text.strip()
    if s == "0":
        return ZERO
    pos = 0
    c: dict[int, int] = {}
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, coef, v, num, den, plain = m.groups()
        if coef is None and v is None:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        if v is not None and v != var:
            raise ValueError(f"unexpected variable {v!r}")
        k = int(coef) if coef is not None else 1
        if sign == "-":
            k = -k
        if v is None:
            exp = Fraction(0)
        elif num is not None:
            exp = Fraction(int(num), int(den) if den else 1)
        elif plain is not None:
            exp = Fraction(int(plain))
        else:
            exp = Fraction(1)
        if var == "t":
            exp *= 2
        if exp.denominator != 1:
            raise ValueError(f"exponent {exp} is not representable")
        e = int(exp)
        c[e] = c.get(e, 0) + k
        pos = m.end()
    return LaurentPoly(c)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Z = LaurentPoly({1: 1})
#: value of a split unknotted circle: ``-t^{1/2} - t^{-1/2}``
DELTA = LaurentPoly({-1: -1, 1: -1})
