"""JSON encoding of polynomials and rationals.

Big integers are written as decimal strings so that no consumer loses
precision.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .polyring import Frame, HomogeneousPoly


def fraction_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fraction_from_str(s: str | int) -> Fraction:
    return Fraction(s)


def poly_to_json(f: HomogeneousPoly) -> dict[str, Any]:
    return {
        "l": f.degree,
        "frame": f.frame.value,
        "terms": [{"exp": list(t), "num": str(c.numerator), "den": str(c.denominator)} for t, c in f.items()],
    }


def poly_from_json(obj: dict[str, Any]) -> HomogeneousPoly:
    frame = Frame(obj.get("frame", "x"))
    terms = {}
    for term in obj["terms"]:
        terms[tuple(int(e) for e in term["exp"])] = Fraction(int(term["num"]), int(term.get("den", "1")))
    return HomogeneousPoly(int(obj["l"]), terms, frame)
