"""Curve catalog, puncture charts, loops, and their component classification.

Supported curves: the affine line, the punctured line (multiplicative
group), and hyperelliptic curves y^2 = h(x) with h monic, squarefree, of
degree >= 3.  Each curve carries explicit Laurent expansions of its
coordinates around every puncture of the proper model; loops are coordinate
series satisfying the defining equation, and classification reads the
component invariant (arc, or puncture plus pole order) off valuations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import series as _series
from .errors import (
    DegreeTooSmall,
    InconsistentPoleData,
    InsufficientPrecision,
    NotMonic,
    NotSquarefree,
    RingMismatch,
    ZeroSeries,
)
from .ring import RATIONAL, Coeff, Ring
from .series import DEFAULT_PREC, LaurentSeries

AFFINE_LINE = "a1"
MULTIPLICATIVE = "gm"
HYPERELLIPTIC = "hyp"

ARC = "arc"
POLE = "pole"
A1_CONNECTED = "a1"


@dataclass(frozen=True)
class PunctureChart:
    """Coordinate expansions in the local parameter at a puncture.

    ``x_pole_order`` is the ramification constant: the pole order of the
    affine coordinate x along an order-1 loop through this puncture.
    """

    label: str
    x: LaurentSeries
    y: LaurentSeries | None
    x_pole_order: int


@dataclass(frozen=True)
class Curve:
    kind: str
    h: tuple[Fraction, ...]  # hyperelliptic coefficients, ascending; () otherwise
    genus: int
    punctures: tuple[PunctureChart, ...]

    def puncture(self, label: str) -> PunctureChart:
        for chart in self.punctures:
            if chart.label == label:
                return chart
        raise KeyError(f"no puncture {label!r} on this curve")

    @property
    def degree(self) -> int:
        return len(self.h) - 1

    def __str__(self):
        if self.kind == HYPERELLIPTIC:
            from .ring import _format_monomials

            return f"hyp:h={_format_monomials(enumerate(self.h), 'x')}"
        return self.kind


@dataclass(frozen=True)
class Loop:
    """A loop into the curve: coordinate series over one ring."""

    curve: Curve
    x: LaurentSeries
    y: LaurentSeries | None = None

    @property
    def ring(self) -> Ring:
        return self.x.ring


@dataclass(frozen=True)
class ComponentClass:
    """The component invariant of a loop.

    ``kind`` is "arc", "pole" (with puncture label and order), or "a1"
    (the affine line has a connected loop space; ``has_pole`` is purely
    informational there).
    """

    kind: str
    puncture: str | None = None
    pole_order: int | None = None
    has_pole: bool | None = None

    @staticmethod
    def arc() -> "ComponentClass":
        return ComponentClass(ARC)

    @staticmethod
    def pole(puncture: str, order: int) -> "ComponentClass":
        if order < 1:
            raise ValueError("pole order must be positive")
        return ComponentClass(POLE, puncture=puncture, pole_order=order)

    @staticmethod
    def a1(has_pole: bool) -> "ComponentClass":
        return ComponentClass(A1_CONNECTED, has_pole=has_pole)

    def __str__(self):
        if self.kind == ARC:
            return "class=Arc"
        if self.kind == POLE:
            return f"class=Pole punct={self.puncture} order={self.pole_order}"
        return f"class=A1 connected has_pole={'true' if self.has_pole else 'false'}"


@dataclass(frozen=True)
class CentralValue:
    """Where the extension of the loop lands at the disc center."""

    kind: str  # "point" | "puncture"
    point: tuple[Fraction, ...] | None = None
    puncture: str | None = None


# -- polynomial helpers (coefficients ascending, over Q) ---------------------


def poly_derivative(h: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(h[i] * i for i in range(1, len(h)))


def poly_gcd_degree(a: Sequence[Fraction], b: Sequence[Fraction]) -> int:
    """Degree of gcd(a, b) over Q (Euclid with exact fractions)."""

    def trim(p):
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = trim(a), trim(b)
    while b:
        # a mod b
        r = a[:]
        while len(r) >= len(b) and trim(r):
            q = r[-1] / b[-1]
            shift = len(r) - len(b)
            for i in range(len(b)):
                r[shift + i] -= q * b[i]
            r = trim(r)
        a, b = b, r
    return len(a) - 1


def eval_poly_at_series(h: Sequence[Fraction], x: LaurentSeries) -> LaurentSeries:
    """h(x(z)) by Horner's rule in the series ring."""
    acc = LaurentSeries.zero(x.ring)
    for c in reversed(h):
        acc = acc * x + LaurentSeries.constant(x.ring, Coeff.const(x.ring, c))
    return acc


# -- curve construction -------------------------------------------------------


def make_curve(
    kind: str,
    h: Iterable[Fraction | int] | None = None,
    prec: int = DEFAULT_PREC,
) -> Curve:
    """Build a catalog curve with verified puncture charts."""
    if kind == AFFINE_LINE:
        chart = PunctureChart("infinity", LaurentSeries.monomial(RATIONAL, -1), None, 1)
        return Curve(kind, (), 0, (chart,))
    if kind == MULTIPLICATIVE:
        charts = (
            PunctureChart("0", LaurentSeries.monomial(RATIONAL, 1), None, 1),
            PunctureChart("infinity", LaurentSeries.monomial(RATIONAL, -1), None, 1),
        )
        return Curve(kind, (), 0, charts)
    if kind != HYPERELLIPTIC:
        raise ValueError(f"unknown curve kind {kind!r}")

    if h is None:
        raise ValueError("hyperelliptic curves need the polynomial h")
    hh = tuple(Fraction(c) for c in h)
    while hh and hh[-1] == 0:
        hh = hh[:-1]
    d = len(hh) - 1
    if d < 3:
        raise DegreeTooSmall("deg h must be at least 3")
    if hh[-1] != 1:
        raise NotMonic("h must be monic")
    if poly_gcd_degree(hh, poly_derivative(hh)) > 0:
        raise NotSquarefree("h must be squarefree")
    genus = (d - 1) // 2

    charts = []
    if d % 2 == 1:
        # one point at infinity: x = u^-2, y = u^-d * s(u),
        # s(u)^2 = u^(2d) h(u^-2) = 1 + a_{d-1} u^2 + ... + a_0 u^(2d)
        w = LaurentSeries.build(
            RATIONAL, {2 * (d - i): hh[i] for i in range(d)} | {0: 1}
        )
        s = _series.sqrt(w, prec=prec)
        x = LaurentSeries.monomial(RATIONAL, -2)
        y = s.shift(-d)
        charts.append(PunctureChart("infinity", x, y, 2))
    else:
        # two points at infinity: x = u^-1, y = +/- u^(-d/2) * s(u)
        w = LaurentSeries.build(RATIONAL, {d - i: hh[i] for i in range(d)} | {0: 1})
        s = _series.sqrt(w, prec=prec)
        x = LaurentSeries.monomial(RATIONAL, -1)
        charts.append(PunctureChart("infinity+", x, s.shift(-d // 2), 1))
        charts.append(PunctureChart("infinity-", x, (-s).shift(-d // 2), 1))
    curve = Curve(HYPERELLIPTIC, hh, genus, tuple(charts))
    for chart in charts:
        if not check_on_curve(Loop(curve, chart.x, chart.y)):
            raise AssertionError("puncture chart fails the curve equation")
    return curve


# -- loops ---------------------------------------------------------------------


def check_on_curve(loop: Loop) -> bool:
    """True iff the coordinates satisfy the curve up to the common precision."""
    curve = loop.curve
    if curve.kind == AFFINE_LINE:
        return True
    if curve.kind == MULTIPLICATIVE:
        try:
            v = loop.x.valuation()
        except ZeroSeries:
            return False
        return loop.x.coeff(v).is_unit()
    if loop.y is None:
        return False
    r = loop.y * loop.y - eval_poly_at_series(curve.h, loop.x)
    if not r.zero_to_prec():
        return False
    if r.prec is not None and r.prec <= 0:
        raise InsufficientPrecision("curve equation not certifiable at this precision")
    return True


def _no_negative_part(s: LaurentSeries) -> bool:
    """Certified absence of poles: negative coefficients all known zero."""
    if any(e < 0 for e, _ in s.terms):
        return False
    if s.prec is not None and s.prec < 0:
        raise InsufficientPrecision("negative coefficients are not certified")
    return True


def classify_loop(loop: Loop) -> ComponentClass:
    """Component invariant of a single loop over the rationals."""
    if loop.ring != RATIONAL:
        raise RingMismatch("classification needs rational coefficients")
    curve = loop.curve
    if curve.kind == AFFINE_LINE:
        return ComponentClass.a1(has_pole=not _no_negative_part(loop.x))
    if curve.kind == MULTIPLICATIVE:
        v = loop.x.valuation()
        if v == 0:
            return ComponentClass.arc()
        if v > 0:
            return ComponentClass.pole("0", v)
        return ComponentClass.pole("infinity", -v)

    d = curve.degree
    x, y = loop.x, loop.y
    if _no_negative_part(x) and _no_negative_part(y):
        return ComponentClass.arc()
    try:
        vx = x.valuation()
        vy = y.valuation()
    except ZeroSeries:
        raise InconsistentPoleData("a coordinate with a pole vanished identically")
    if vx >= 0:
        raise InconsistentPoleData("y has a pole while x does not")
    if d % 2 == 1:
        if vx % 2 != 0:
            raise InconsistentPoleData("odd pole order of x at the unique puncture")
        n = -vx // 2
        if vy != -n * d:
            raise InconsistentPoleData(
                f"pole orders disagree: v(x)={vx}, v(y)={vy}, deg h={d}"
            )
        return ComponentClass.pole("infinity", n)
    n = -vx
    if vy != -n * d // 2:
        raise InconsistentPoleData(
            f"pole orders disagree: v(x)={vx}, v(y)={vy}, deg h={d}"
        )
    w = y * (x ** (d // 2)).invert()
    lead = w.coeff(0).as_fraction()
    if lead == 1:
        return ComponentClass.pole("infinity+", n)
    if lead == -1:
        return ComponentClass.pole("infinity-", n)
    raise InconsistentPoleData(f"branch value {lead} at infinity is not +-1")


def central_value(loop: Loop) -> CentralValue:
    """The point of the proper model hit by the extended loop at z = 0."""
    cls = classify_loop(loop)
    if cls.kind == POLE:
        return CentralValue("puncture", puncture=cls.puncture)
    if cls.kind == A1_CONNECTED and cls.has_pole:
        return CentralValue("puncture", puncture="infinity")
    coords = [loop.x] if loop.y is None else [loop.x, loop.y]
    values = []
    for s in coords:
        if s.prec is not None and s.prec < 1:
            raise InsufficientPrecision("constant term is not certified")
        values.append(s.coeff(0).as_fraction())
    return CentralValue("point", point=tuple(values))


def cover_loop(loop: Loop, n: int) -> Loop:
    """Precompose the loop with the degree-n cover of the punctured disc."""
    y = None if loop.y is None else loop.y.covering(n)
    return Loop(loop.curve, loop.x.covering(n), y)


def lift_x(curve: Curve, x: LaurentSeries, branch: int = 1, prec: int | None = None) -> Loop:
    """Solve y^2 = h(x) by series square root; ``branch`` picks the sign."""
    if curve.kind != HYPERELLIPTIC:
        raise ValueError("lift_x only applies to hyperelliptic curves")
    hx = eval_poly_at_series(curve.h, x)
    y = _series.sqrt(hx, prec=prec, branch=branch)
    return Loop(curve, x, y)


def puncture_loop(curve: Curve, label: str) -> Loop:
    """The order-1 local loop through a puncture (its chart expansions)."""
    chart = curve.puncture(label)
    return Loop(curve, chart.x, chart.y)


def point_loop(curve: Curve, point: tuple[Fraction, ...], prec: int = DEFAULT_PREC) -> Loop:
    """An order-1 local loop x = a + z through a rational affine point."""
    a = Fraction(point[0])
    x = LaurentSeries.build(RATIONAL, {0: a, 1: 1})
    if curve.kind != HYPERELLIPTIC:
        return Loop(curve, x)
    b = Fraction(point[1])
    loop = lift_x(curve, x, branch=1, prec=prec)
    if loop.y.coeff(0).as_fraction() == b:
        return loop
    loop = lift_x(curve, x, branch=-1, prec=prec)
    if loop.y.coeff(0).as_fraction() == b:
        return loop
    raise ValueError(f"point ({a}, {b}) does not lie on the curve")
