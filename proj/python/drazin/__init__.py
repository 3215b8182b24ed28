"""Exact Drazin and group inverses, restricted matrix equations and
polynomial solutions of singular linear ODE systems.

Matrices are nested lists. Entries may be ints, fractions.Fraction, strings
such as "1/2-3*i", or (re, im) pairs; results come back as canonical strings.
"""

from fractions import Fraction

from ._core import (
    IndexTooLarge,
    ParseError,
    RepresentationMismatch,
    drazin,
    group,
    index,
    ode_left,
    ode_right,
    solve_ax,
    solve_axb,
    solve_xa,
    verify,
)

__all__ = [
    "IndexTooLarge",
    "ParseError",
    "RepresentationMismatch",
    "drazin",
    "group",
    "index",
    "ode_left",
    "ode_right",
    "parse_scalar",
    "solve_ax",
    "solve_axb",
    "solve_xa",
    "verify",
]


def parse_scalar(text):
    """Split a canonical scalar string into (re, im) Fractions."""
    text = text.replace(" ", "")
    re = im = Fraction(0)
    term = ""
    for pos, ch in enumerate(text):
        if ch in "+-" and pos > 0 and term:
            re, im = _add_term(term, re, im)
            term = ""
        term += ch
    return _add_term(term, re, im)


def _add_term(term, re, im):
    if not term.endswith("i"):
        return re + Fraction(term), im
    coeff = term[:-1].rstrip("*")
    if coeff in ("", "+"):
        coeff = "1"
    elif coeff == "-":
        coeff = "-1"
    return re, im + Fraction(coeff)
