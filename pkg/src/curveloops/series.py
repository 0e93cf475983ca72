"""Truncated formal Laurent series A((z)) with explicit precision tracking.

A series stores finitely many terms plus a precision bound ``prec``:
coefficients are known (and stored when nonzero) for every exponent
``e < prec``; exponents ``>= prec`` are unknown.  ``prec is None`` means the
series is an exact Laurent polynomial (all higher coefficients are zero).

The distinction between "known to be zero" and "unknown" is load-bearing:
valuations and residues are only reported when the stored precision
certifies them, otherwise ``InsufficientPrecision`` is raised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Mapping, Union

from .errors import (
    InsufficientPrecision,
    NoRationalSquareRoot,
    NotInvertible,
    OddValuation,
    RingMismatch,
    SubstituteDiverges,
    ZeroSeries,
)
from .ring import Coeff, Ring, Scalar

#: Default number of terms kept past the lowest exponent when an exact
#: input forces an infinite expansion (inverses, square roots, ...).
DEFAULT_PREC = 24

CoeffLike = Union[Coeff, int, Fraction]


def _min_prec(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass(frozen=True)
class LaurentSeries:
    """Element of A((z)); immutable, canonical (no stored zero terms)."""

    ring: Ring
    terms: tuple[tuple[int, Coeff], ...]  # ascending exponents, nonzero coeffs
    prec: int | None = None  # None: exact Laurent polynomial

    # -- construction ---------------------------------------------------

    @staticmethod
    def build(
        ring: Ring,
        terms: Mapping[int, CoeffLike],
        prec: int | None = None,
    ) -> "LaurentSeries":
        out = {}
        for e, c in terms.items():
            if not isinstance(c, Coeff):
                c = Coeff.const(ring, c)
            elif c.ring != ring:
                raise RingMismatch("term coefficient from a different ring")
            if c.is_zero():
                continue
            if prec is not None and e >= prec:
                continue
            out[e] = c
        return LaurentSeries(ring, tuple(sorted(out.items())), prec)

    @staticmethod
    def zero(ring: Ring) -> "LaurentSeries":
        return LaurentSeries(ring, ())

    @staticmethod
    def one(ring: Ring) -> "LaurentSeries":
        return LaurentSeries.monomial(ring, 0)

    @staticmethod
    def monomial(ring: Ring, exp: int, coeff: CoeffLike = 1) -> "LaurentSeries":
        return LaurentSeries.build(ring, {exp: coeff})

    @staticmethod
    def constant(ring: Ring, coeff: CoeffLike) -> "LaurentSeries":
        return LaurentSeries.monomial(ring, 0, coeff)

    # -- basic queries ----------------------------------------------------

    @property
    def exact(self) -> bool:
        return self.prec is None

    def is_zero(self) -> bool:
        """Exactly the zero series (not merely zero up to precision)."""
        return self.exact and not self.terms

    def zero_to_prec(self) -> bool:
        return not self.terms

    def coeff(self, exp: int) -> Coeff:
        """Stored coefficient at ``exp`` (zero when absent; no prec check)."""
        for e, c in self.terms:
            if e == exp:
                return c
        return Coeff.zero(self.ring)

    def ord_min(self) -> int | None:
        return self.terms[0][0] if self.terms else None

    def as_dict(self) -> dict[int, Coeff]:
        return dict(self.terms)

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "LaurentSeries") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check(other)
        out = self.as_dict()
        for e, c in other.terms:
            if e in out:
                out[e] = out[e] + c
            else:
                out[e] = c
        return LaurentSeries.build(self.ring, out, _min_prec(self.prec, other.prec))

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.ring, tuple((e, -c) for e, c in self.terms), self.prec)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(self.ring)
        # Unknown tail of f (exponents >= f.prec) meets g no lower than
        # f.prec + ord_min(g); symmetrically for g.  An inexact series with
        # no stored terms contributes its own precision as the lowest
        # conceivable exponent.
        prec = None
        for a, b in ((self, other), (other, self)):
            if a.prec is None:
                continue
            om = b.ord_min()
            if om is None:
                om = b.prec if b.prec is not None else 0
            prec = _min_prec(prec, a.prec + om)
        out: dict[int, Coeff] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                if prec is not None and e >= prec:
                    continue
                p = c1 * c2
                if e in out:
                    out[e] = out[e] + p
                else:
                    out[e] = p
        return LaurentSeries.build(self.ring, out, prec)

    def scale(self, c: CoeffLike) -> "LaurentSeries":
        if not isinstance(c, Coeff):
            c = Coeff.const(self.ring, c)
        return LaurentSeries.build(
            self.ring, {e: v * c for e, v in self.terms}, self.prec
        )

    def shift(self, n: int) -> "LaurentSeries":
        """Multiply by z^n."""
        return LaurentSeries(
            self.ring,
            tuple((e + n, c) for e, c in self.terms),
            None if self.prec is None else self.prec + n,
        )

    def truncate(self, prec: int | None) -> "LaurentSeries":
        if prec is None:
            return self
        p = _min_prec(self.prec, prec)
        return LaurentSeries(self.ring, tuple((e, c) for e, c in self.terms if e < p), p)

    def __pow__(self, n: int) -> "LaurentSeries":
        if n < 0:
            return self.invert() ** (-n)
        result = LaurentSeries.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- valuation, inversion, calculus -----------------------------------

    def valuation(self) -> int:
        """Smallest exponent with nonzero coefficient mod the nilradical.

        Raises ``ZeroSeries`` when the reduction is exactly zero and
        ``InsufficientPrecision`` when no nonzero coefficient is certified.
        """
        for e, c in self.terms:
            if not c.reduce_mod_nilradical().is_zero():
                return e
        if self.exact:
            raise ZeroSeries("valuation of the zero series (mod nilradical)")
        raise InsufficientPrecision(
            f"no nonzero coefficient certified below O(z^{self.prec})"
        )

    def invert(self, prec: int | None = None) -> "LaurentSeries":
        """Multiplicative inverse.

        Requires the coefficient at the lowest stored exponent to be a unit
        of the coefficient ring (series with nilpotent lower terms must be
        routed through the normal-form factorization instead).  For an
        inexact input with valuation v and precision N the result is known
        below N - 2v, the standard reciprocal window.  ``prec`` sets the
        number of computed terms past the lowest output exponent when the
        input is exact but the inverse is an infinite series (default
        ``DEFAULT_PREC``).
        """
        if not self.terms:
            if self.exact:
                raise NotInvertible("zero series")
            raise InsufficientPrecision("all stored coefficients vanish")
        v, lead = self.terms[0]
        if not lead.is_unit():
            raise NotInvertible(
                "lowest coefficient is not a unit; use the normal form"
            )
        if self.exact and len(self.terms) == 1:
            return LaurentSeries.monomial(self.ring, -v, lead.invert())
        rel = (self.prec - v) if self.prec is not None else (prec or DEFAULT_PREC)
        g = [self.coeff(v + i) for i in range(rel)]
        b0 = lead.invert()
        out = [b0]
        zero = Coeff.zero(self.ring)
        for n in range(1, rel):
            acc = zero
            for i in range(1, n + 1):
                if not g[i].is_zero():
                    acc = acc + g[i] * out[n - i]
            out.append(-(b0 * acc))
        return LaurentSeries.build(
            self.ring, {-v + i: c for i, c in enumerate(out)}, -v + rel
        )

    def derivative(self) -> "LaurentSeries":
        out = {e - 1: c.scale(e) for e, c in self.terms if e != 0}
        return LaurentSeries.build(
            self.ring, out, None if self.prec is None else self.prec - 1
        )

    def dlog(self, prec: int | None = None) -> "LaurentSeries":
        """The coefficient series of f'/f dz."""
        return self.derivative() * self.invert(prec)

    def residue(self) -> Coeff:
        """Coefficient at z^-1; requires it to be certified (prec >= 0)."""
        if self.prec is not None and self.prec < 0:
            raise InsufficientPrecision("coefficient at z^-1 is not certified")
        return self.coeff(-1)

    # -- loop-space operations ----------------------------------------------

    def covering(self, n: int) -> "LaurentSeries":
        """Precompose with the degree-n cover z -> z^n (exponents scale by n).

        Exponents below n*prec that are not multiples of n are known to be
        zero, so the precision scales exactly to n*prec.
        """
        if n < 1:
            raise ValueError("covering degree must be a positive integer")
        return LaurentSeries(
            self.ring,
            tuple((e * n, c) for e, c in self.terms),
            None if self.prec is None else self.prec * n,
        )

    def substitute(self, g: "LaurentSeries") -> "LaurentSeries":
        """Composition f(g(z)).

        Requires valuation(g) >= 1 unless f is an exact Laurent polynomial;
        negative exponents of f additionally need g invertible.
        """
        self._check(g)
        gv = g.valuation()
        if not self.exact and gv < 1:
            raise SubstituteDiverges(
                "composition with a non-positive-valuation series"
            )
        result = LaurentSeries.zero(self.ring)
        g_inv = None
        for e, c in self.terms:
            if e == 0:
                power = LaurentSeries.one(self.ring)
            elif e > 0:
                power = g ** e
            else:
                if g_inv is None:
                    g_inv = g.invert()
                power = g_inv ** (-e)
            result = result + power.scale(c)
        cap = None if self.exact else self.prec * gv
        return result.truncate(_min_prec(result.prec, cap))

    def specialize(self, t0: Scalar) -> "LaurentSeries":
        """Evaluate Q[t]-coefficients at t = t0, landing over the rationals."""
        from .ring import POLY, RATIONAL

        if self.ring != POLY:
            raise RingMismatch("specialize needs a series over Q[t]")
        return LaurentSeries.build(
            RATIONAL, {e: c.specialize(t0) for e, c in self.terms}, self.prec
        )


def _fraction_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def sqrt(f: LaurentSeries, prec: int | None = None, branch: int = 1) -> LaurentSeries:
    """Series square root of f.

    Needs an even lowest exponent and a leading coefficient that is (a unit
    times) the square of a rational.  ``branch`` (+1/-1) picks the sign of
    the leading coefficient of the result.  An exact perfect square is
    returned exactly; otherwise the expansion carries ``prec`` relative
    terms (default ``DEFAULT_PREC``).
    """
    if not f.terms:
        if f.exact:
            return LaurentSeries.zero(f.ring)
        raise InsufficientPrecision("square root of a series with no certified terms")
    v, lead = f.terms[0]
    if v % 2 != 0:
        raise OddValuation(f"lowest exponent {v} is odd")
    try:
        lead_q = lead.as_fraction()
    except RingMismatch:
        raise NoRationalSquareRoot("leading coefficient is not a plain rational")
    root = _fraction_sqrt(lead_q)
    if root is None or root == 0:
        raise NoRationalSquareRoot(f"{lead_q} is not a nonzero rational square")
    rel = (f.prec - v) if f.prec is not None else (prec or DEFAULT_PREC)
    # normalize to 1 + w and take the square root by coefficient recursion
    g = [f.coeff(v + i) * lead.invert() for i in range(rel)]
    half = Fraction(1, 2)
    out = [Coeff.one(f.ring)]
    for n in range(1, rel):
        acc = g[n]
        for i in range(1, n):
            acc = acc - out[i] * out[n - i]
        out.append(acc.scale(half))
    sign = root if branch >= 0 else -root
    result = LaurentSeries.build(
        f.ring,
        {v // 2 + i: c.scale(sign) for i, c in enumerate(out)},
        v // 2 + rel,
    )
    if f.exact:
        candidate = LaurentSeries(f.ring, result.terms, None)
        if candidate * candidate == f:
            return candidate
    return result
