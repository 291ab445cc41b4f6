"""Jones polynomials, colorings, signatures and Milnor invariants of links."""

__version__ = "0.1.0"

from .diagram import LinkDiagram, DiagramError, parse_pd, format_pd
from .poly import LaurentPoly, parse_t
from .families import gen, parse_spec
from .jones import jones, jones_value
from .colorings import determinant
from .signature import link_signature
from .milnor import mu_bar_table

__all__ = [
    "LinkDiagram",
    "DiagramError",
    "LaurentPoly",
    "parse_pd",
    "format_pd",
    "parse_t",
    "gen",
    "parse_spec",
    "jones",
    "jones_value",
    "determinant",
    "link_signature",
    "mu_bar_table",
    "__version__",
]
