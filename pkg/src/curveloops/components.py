"""Component-set bookkeeping: the covering-action quotient and the census.

The covering action multiplies pole orders, so its quotient forgets the
order and remembers only the puncture; the census of quotient classes is
1 (arcs) + one per puncture, except for the affine line whose loop space
is a single component.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .curves import (
    A1_CONNECTED,
    AFFINE_LINE,
    ARC,
    POLE,
    ComponentClass,
    Curve,
    Loop,
    check_on_curve,
    classify_loop,
)
from .errors import LoopSpaceError
from .ring import POLY
from .series import LaurentSeries


@dataclass(frozen=True)
class QuotientClass:
    kind: str  # "arc" | "puncture"
    puncture: str | None = None

    @staticmethod
    def arc() -> "QuotientClass":
        return QuotientClass("arc")

    @staticmethod
    def at_puncture(label: str) -> "QuotientClass":
        return QuotientClass("puncture", label)

    def __str__(self):
        return "arc" if self.kind == "arc" else f"puncture {self.puncture}"


def quotient_class(c: ComponentClass) -> QuotientClass:
    """Collapse a component class along the covering action."""
    if c.kind == A1_CONNECTED:
        raise ValueError("the affine line has a single class; use the census")
    if c.kind == ARC:
        return QuotientClass.arc()
    return QuotientClass.at_puncture(c.puncture)


def pi0_census(curve: Curve) -> int:
    """Number of loop-space components up to coverings: 1 + #punctures."""
    if curve.kind == AFFINE_LINE:
        return 1
    return 1 + len(curve.punctures)


@dataclass(frozen=True)
class FiberResult:
    t: Fraction
    component: ComponentClass | None
    error: str | None = None


@dataclass(frozen=True)
class FamilyClassification:
    fibers: tuple[FiberResult, ...]
    generic: ComponentClass | None
    jumps: tuple[Fraction, ...]


def _specialize_loop(loop: Loop, t0: Fraction) -> Loop:
    y = None if loop.y is None else loop.y.specialize(t0)
    return Loop(loop.curve, loop.x.specialize(t0), y)


def classify_family(loop: Loop, t_values: Iterable[Fraction]) -> FamilyClassification:
    """Classify every fiber of a one-parameter family of loops.

    The generic class is the most common one among the sampled fibers;
    fibers with a different class (or a per-fiber error) are reported as
    jumps rather than rejected, since for the affine line jumps are real.
    """
    if loop.ring != POLY:
        raise ValueError("classify_family needs a loop over Q[t]")
    fibers = []
    for t0 in t_values:
        t0 = Fraction(t0)
        try:
            fiber = _specialize_loop(loop, t0)
            if not check_on_curve(fiber):
                fibers.append(FiberResult(t0, None, "fiber leaves the curve"))
                continue
            fibers.append(FiberResult(t0, classify_loop(fiber)))
        except LoopSpaceError as exc:
            fibers.append(FiberResult(t0, None, str(exc)))
    counts = Counter(f.component for f in fibers if f.component is not None)
    generic = counts.most_common(1)[0][0] if counts else None
    jumps = tuple(f.t for f in fibers if f.component != generic)
    return FamilyClassification(tuple(fibers), generic, jumps)
