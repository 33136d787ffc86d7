"""Bound formulas with applicability gating, and witness/bound certification.

Every bound the library knows is evaluated into a BoundEntry with an
``applicable`` flag; inapplicable entries carry the violated precondition in
``reason``.  Conjectured bounds are reported but quarantined from
certification.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .domination import Mode, max_domatic_partition
from .errors import CertificationError, InadmissibleModeError, NotConnectedError
from .graph import Graph, degree_stats, is_connected


class Kind(str, Enum):
    LOWER = "Lower"
    UPPER = "Upper"
    CONJECTURED_UPPER = "ConjecturedUpper"
    EXACT_RULE = "ExactRule"


@dataclass(frozen=True)
class BoundEntry:
    name: str
    kind: Kind
    value: Optional[int]
    applicable: bool
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind.value,
            "value": self.value,
            "applicable": self.applicable,
            "reason": self.reason,
        }


def conjectured_tc2(delta: int, Delta: int) -> int:
    """floor(delta/2)*(Delta - 2*floor(delta/2) + 1) + ceil(delta/2)."""
    if not Delta >= delta >= 2:
        raise ValueError("need Delta >= delta >= 2")
    h = delta // 2
    return h * (Delta - 2 * h + 1) + (delta - h)


def double_upper_formula(delta: int, Delta: int) -> int:
    """ceil(delta/2)*(Delta - 2*ceil(delta/2) + 2) + 1 + floor(delta/2)."""
    h = (delta + 1) // 2
    return h * (Delta - 2 * h + 2) + 1 + delta // 2


def bound_report_tc(g: Graph, k: int, include_domatic: bool = False) -> list[BoundEntry]:
    """All known bounds on the total k-coalition number of g."""
    if not is_connected(g):
        raise NotConnectedError("bound report requires a connected graph")
    delta, Delta, _ = degree_stats(g)
    if delta < k:
        raise InadmissibleModeError(f"total {k}-coalitions need minimum degree >= {k}")
    n = g.n

    entries = [
        BoundEntry("min_degree_lower", Kind.LOWER, delta - k + 2, True),
        BoundEntry("order_upper", Kind.UPPER, n - k + 1, True),
    ]

    if include_domatic:
        d = len(max_domatic_partition(g, Mode(k)))
        entries.append(BoundEntry("domatic_lower", Kind.LOWER, 2 * d, True))

    if k == 2:
        h = delta // 2
        mix = max(Delta, h * (Delta - 4) + delta)
        entries.append(BoundEntry("degree_mix_upper", Kind.UPPER, mix, True))

        gated = conjectured_tc2(delta, Delta)
        if Delta >= 4 * h - 2:
            entries.append(BoundEntry("half_delta_upper", Kind.UPPER, gated, True))
        else:
            entries.append(
                BoundEntry(
                    "half_delta_upper",
                    Kind.UPPER,
                    gated,
                    False,
                    reason=f"needs Delta >= {4 * h - 2}, graph has {Delta}",
                )
            )
        entries.append(
            BoundEntry("conjectured_upper", Kind.CONJECTURED_UPPER, gated, True)
        )

    if delta == Delta == 3:
        if k == 2:
            entries.append(BoundEntry("cubic_exact", Kind.EXACT_RULE, 3, True))
        elif k == 3:
            entries.append(BoundEntry("cubic_exact", Kind.EXACT_RULE, 2, True))
    if delta == Delta == 4 and k == 2:
        entries.append(BoundEntry("four_regular_exact", Kind.EXACT_RULE, 4, True))

    return entries


def bound_report_dc(g: Graph) -> list[BoundEntry]:
    """All known bounds on the double coalition number of g."""
    if not is_connected(g):
        raise NotConnectedError("bound report requires a connected graph")
    delta, Delta, _ = degree_stats(g)
    if delta < 1:
        raise InadmissibleModeError("double coalitions need minimum degree >= 1")

    entries = [
        BoundEntry("trivial_lower", Kind.LOWER, 2, True),
        BoundEntry("order_upper", Kind.UPPER, g.n, True),
    ]
    h = (delta + 1) // 2
    value = double_upper_formula(delta, Delta)
    if Delta >= 4 * h - 3:
        entries.append(BoundEntry("double_half_delta_upper", Kind.UPPER, value, True))
    else:
        entries.append(
            BoundEntry(
                "double_half_delta_upper",
                Kind.UPPER,
                value,
                False,
                reason=f"needs Delta >= {4 * h - 3}, graph has {Delta}",
            )
        )
    return entries


@dataclass(frozen=True)
class Certificate:
    lower: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def status(self) -> str:
        return f"Exact({self.lower})" if self.exact else f"Interval({self.lower},{self.upper})"

    def to_json(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "status": self.status}


def certify(witness_size: Optional[int], report: list[BoundEntry]) -> Certificate:
    """Sandwich a verified witness between the proven bounds.

    Conjectured entries never feed the certificate.  ExactRule entries feed
    the upper side only; a matching witness closes the interval.
    """
    lower = 0 if witness_size is None else witness_size
    upper = None
    for entry in report:
        if not entry.applicable or entry.value is None:
            continue
        if entry.kind is Kind.LOWER:
            lower = max(lower, entry.value)
        elif entry.kind in (Kind.UPPER, Kind.EXACT_RULE):
            upper = entry.value if upper is None else min(upper, entry.value)
    if upper is None:
        raise CertificationError("no applicable upper bound to certify against")
    if lower > upper:
        raise CertificationError(
            f"witness/lower bound {lower} exceeds proven upper bound {upper}; "
            "this refutes a theorem or reveals a bug"
        )
    return Certificate(lower, upper)
