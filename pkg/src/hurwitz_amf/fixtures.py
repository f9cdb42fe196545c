"""Loading and verifying the transcribed reference tables shipped with the package.

``appendix_a.json`` lists X-frame bases of the plus and minus spaces for
``l <= 12``; ``appendix_b.json`` lists kernels of the e-coordinate operators
together with the scale relations tying them to the X-frame bases.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .ecoord import F3_Y, F6M_Y, delta_eps_apply, e_to_y, ebasis, weighted_monomials
from .exact_linalg import row_space_rref
from .harmonic_basis import basis, in_span, verify_membership
from .polyring import HomogeneousPoly, change_frame_xy, mul, power, primitive_normalize
from .serialize import poly_from_json

FIXTURE_NAMES = ("appendix_a", "appendix_b")


class FixtureError(ValueError):
    """A fixture file is missing or malformed."""


def load_fixture(name_or_path: str | Path) -> dict[str, Any]:
    """Load a shipped fixture by bare name (``appendix_a``) or any JSON file by path."""
    p = Path(name_or_path)
    try:
        if p.exists():
            text = p.read_text(encoding="utf-8")
        else:
            stem = p.name[:-5] if p.name.endswith(".json") else p.name
            if stem not in FIXTURE_NAMES:
                raise FixtureError(f"no such fixture: {name_or_path}")
            text = resources.files("hurwitz_amf").joinpath("fixtures", f"{stem}.json").read_text(encoding="utf-8")
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"cannot parse {name_or_path}: {exc}") from exc
    if not isinstance(data, dict) or not ("entries" in data or "relations" in data):
        raise FixtureError(f"{name_or_path} is not a basis table or a relation table")
    return data


def appendix_a_polys(data: dict[str, Any] | None = None) -> dict[str, HomogeneousPoly]:
    data = load_fixture("appendix_a") if data is None else data
    return {e["name"]: poly_from_json(e["poly"]) for e in data["entries"]}


def appendix_b_kernels(data: dict[str, Any] | None = None) -> dict[str, HomogeneousPoly]:
    data = load_fixture("appendix_b") if data is None else data
    return {k["name"]: poly_from_json(k["poly"]) for k in data["kernels"]}


@dataclass(frozen=True)
class CheckItem:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


# ---------------------------------------------------------------------------
# basis table
# ---------------------------------------------------------------------------


def verify_basis_table(data: dict[str, Any]) -> list[CheckItem]:
    items: list[CheckItem] = []
    for row in data.get("dims", []):
        l = row["l"]
        got = (len(basis(l, "plus")), len(basis(l, "minus")))
        want = (row["plus"], row["minus"])
        items.append(CheckItem(f"dims l={l}", got == want, f"computed {got}, listed {want}"))
    groups: dict[tuple[int, str], list[HomogeneousPoly]] = {}
    for e in data["entries"]:
        f = poly_from_json(e["poly"])
        rep = verify_membership(f, e["variant"])
        res = basis(e["l"], e["variant"])
        member = in_span(res, f)
        items.append(
            CheckItem(
                e["name"],
                rep.ok and member,
                f"harmonic={rep.harmonic} invariant={rep.invariant} t2={rep.t2_eigen} in_span={member}",
            )
        )
        groups.setdefault((e["l"], e["variant"]), []).append(f)
    for (l, variant), polys in sorted(groups.items()):
        listed = {primitive_normalize(f)[0] for f in polys}
        computed = set(basis(l, variant).basis)
        items.append(CheckItem(f"primitive set l={l} {variant}", listed == computed, f"{len(listed)} listed, {len(computed)} computed"))
    return items


# ---------------------------------------------------------------------------
# relation table
# ---------------------------------------------------------------------------


def _kernel_key(name: str) -> tuple[int, int, int]:
    m, eps = name.split("_")[1:3]
    return int(m), int(eps[0]), int(eps[1])


def _resolve_kernel(name: str, printed: dict[str, HomogeneousPoly]) -> tuple[HomogeneousPoly, str]:
    if name in printed:
        return printed[name], "listed"
    m, e1, e2 = _kernel_key(name)
    computed = ebasis(m, e1, e2)
    if len(computed) != 1:
        raise FixtureError(f"kernel {name} is not listed and its space is not one-dimensional")
    return computed[0], "computed"


def relation_poly(rel: dict[str, Any], printed: dict[str, HomogeneousPoly]) -> tuple[HomogeneousPoly, bool]:
    """X-frame polynomial on the right side of a relation, and whether every kernel was listed."""
    F = None
    listed = True
    for name, coeff in rel["combination"]:
        k, src = _resolve_kernel(name, printed)
        listed &= src == "listed"
        term = k * Fraction(coeff)
        F = term if F is None else F + term
    y = mul(mul(power(F3_Y, rel["f3_power"]), power(F6M_Y, rel["f6m_power"])), e_to_y(F))
    return change_frame_xy(y), listed


def verify_relation_table(data: dict[str, Any], targets: dict[str, HomogeneousPoly] | None = None) -> list[CheckItem]:
    targets = appendix_a_polys() if targets is None else targets
    printed = appendix_b_kernels(data)
    items: list[CheckItem] = []
    by_space: dict[tuple[int, int, int], list[HomogeneousPoly]] = {}
    for k in data["kernels"]:
        F = printed[k["name"]]
        m, e1, e2 = k["m"], *k["eps"]
        killed = delta_eps_apply(e1, e2, F).is_zero()
        items.append(CheckItem(k["name"], killed, "in the operator kernel" if killed else "not killed by the operator"))
        by_space.setdefault((m, e1, e2), []).append(F)
    for (m, e1, e2), polys in sorted(by_space.items()):
        mons = weighted_monomials(m)
        listed = row_space_rref([[p.coeff(t) for t in mons] for p in polys])
        computed = row_space_rref([[p.coeff(t) for t in mons] for p in ebasis(m, e1, e2)])
        items.append(CheckItem(f"kernel span m={m} eps=({e1},{e2})", listed == computed, f"dim {len(computed)}"))
    for rel in data["relations"]:
        rhs, listed = relation_poly(rel, printed)
        variant = "minus" if rel["eps"][1] else "plus"
        name = f"relation {rel['target']}"
        if rel["target"] in targets:
            ok = rhs == targets[rel["target"]]
            items.append(CheckItem(name, ok, "equal to the listed polynomial" if ok else "differs from the listed polynomial"))
        else:
            ok = rhs.degree == rel["l"] and in_span(basis(rel["l"], variant), rhs)
            kind = "listed kernels" if listed else "computed kernel"
            items.append(CheckItem(name, ok, f"member of the l={rel['l']} {variant} space ({kind}); scale not checkable"))
    return items


def verify_fixture(name_or_path: str | Path) -> list[CheckItem]:
    data = load_fixture(name_or_path)
    if "entries" in data:
        return verify_basis_table(data)
    return verify_relation_table(data)


__all__ = [
    "CheckItem",
    "FIXTURE_NAMES",
    "FixtureError",
    "appendix_a_polys",
    "appendix_b_kernels",
    "load_fixture",
    "relation_poly",
    "verify_basis_table",
    "verify_fixture",
    "verify_relation_table",
]
