"""Unique factorization of invertible Laurent series.

An invertible element of A((z)) factors uniquely as

    alpha = u * z^v * prod_i (1 - a_i z^-i) * prod_j (1 - b_j z^j)

with u a unit of A, the finitely many a_i nilpotent, and the b_j arbitrary.
Over a field the negative product is empty and v is the valuation.

``factor`` computes the data, ``reconstruct`` expands it back, ``order_of``
reads off v.  The peeling order (valuation first, then negative factors
from the most negative exponent up, then unit and positive factors in
increasing degree) terminates because each negative correction lands in a
strictly higher power of the nilradical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInvertible
from .ring import Coeff, Ring
from .series import DEFAULT_PREC, LaurentSeries, _min_prec

_MAX_PEEL_ROUNDS = 200


@dataclass(frozen=True)
class NormalForm:
    """Factorization data (unit, order, negative part, positive part).

    ``prec`` is the absolute precision up to which ``reconstruct`` is
    guaranteed to reproduce the factored series (None: the form is exact).
    The positive part is stored for degrees j with order + j < prec.
    """

    ring: Ring
    unit: Coeff
    order: int
    neg: tuple[tuple[int, Coeff], ...]
    pos: tuple[tuple[int, Coeff], ...]
    prec: int | None = None

    def neg_dict(self) -> dict[int, Coeff]:
        return dict(self.neg)

    def pos_dict(self) -> dict[int, Coeff]:
        return dict(self.pos)


def _neg_factor_inverse(ring: Ring, i: int, a: Coeff) -> LaurentSeries:
    """(1 - a z^-i)^-1 = sum_m a^m z^-im, finite since a is nilpotent."""
    terms = {0: Coeff.one(ring)}
    power = a
    m = 1
    while not power.is_zero():
        terms[-i * m] = power
        power = power * a
        m += 1
    return LaurentSeries.build(ring, terms)


def _divide_one_minus(p: LaurentSeries, j: int, b: Coeff, window: int) -> LaurentSeries:
    """Divide a valuation-0 series by (1 - b z^j).

    Quotient coefficients satisfy q_m = p_m + b q_{m-j}.  When ``p`` is an
    exact polynomial and the quotient shows j consecutive zero coefficients
    past deg(p), the recurrence forces all later ones to vanish, so the
    quotient is certified exact.
    """
    ring = p.ring
    if p.exact:
        deg = max((e for e, _ in p.terms), default=0)
        limit = max(deg, window) + j
    else:
        limit = p.prec
    q: list[Coeff] = []
    for m in range(limit):
        val = p.coeff(m)
        if m >= j:
            val = val + b * q[m - j]
        q.append(val)
    if p.exact:
        deg = max((e for e, _ in p.terms), default=0)
        tail = q[max(deg, limit - j):]
        if len(tail) >= j and all(c.is_zero() for c in tail[-j:]):
            return LaurentSeries.build(ring, dict(enumerate(q)))
        return LaurentSeries.build(ring, dict(enumerate(q[:window])), window)
    return LaurentSeries.build(ring, dict(enumerate(q)), limit)


def factor(alpha: LaurentSeries, prec: int | None = None) -> NormalForm:
    """Factor an invertible series into its normal form.

    ``prec`` bounds the number of positive-part degrees computed when
    ``alpha`` is exact but does not factor finitely (default
    ``DEFAULT_PREC``).  Raises ``NotInvertible`` when the reduction mod the
    nilradical has a non-unit leading coefficient, and propagates
    ``InsufficientPrecision``/``ZeroSeries`` from the valuation.
    """
    ring = alpha.ring
    v = alpha.valuation()
    lead = alpha.coeff(v)
    if not lead.is_unit():
        raise NotInvertible("leading coefficient (mod nilradical) is not a unit")
    for e, c in alpha.terms:
        if e < v and not c.is_nilpotent():
            raise NotInvertible("non-nilpotent coefficient below the order")
    beta = alpha.shift(-v)

    # negative part: correct the most negative exponent until none remain
    neg: dict[int, Coeff] = {}
    r = beta
    for _ in range(_MAX_PEEL_ROUNDS):
        negterms = [(e, c) for e, c in r.terms if e < 0]
        if not negterms:
            break
        e, c = negterms[0]
        if not c.is_nilpotent():
            raise NotInvertible("non-nilpotent negative coefficient")
        delta = -(c * r.coeff(0).invert())
        i = -e
        neg[i] = neg.get(i, Coeff.zero(ring)) + delta
        if neg[i].is_zero():
            del neg[i]
        r = beta
        for i2, a in sorted(neg.items()):
            r = r * _neg_factor_inverse(ring, i2, a)
    else:  # pragma: no cover - guarded by nilpotency
        raise NotInvertible("negative-part peeling did not terminate")

    unit = r.coeff(0)
    p = r.scale(unit.invert())

    # positive part: read off degrees in increasing order
    window = prec or DEFAULT_PREC
    pos: dict[int, Coeff] = {}
    exact = False
    j = 1
    while True:
        if p.exact and p == LaurentSeries.one(ring):
            exact = True
            break
        limit = window if p.exact else p.prec
        if j >= limit:
            break
        b = -p.coeff(j)
        if not b.is_zero():
            pos[j] = b
            p = _divide_one_minus(p, j, b, window)
        j += 1

    if exact:
        nf_prec = None
    else:
        # Positive-part degrees >= j are missing; through the negative
        # factors they can disturb exponents as low as v + j - sum(i).
        span = sum(neg)
        nf_prec = _min_prec(alpha.prec, v + j - span)
    return NormalForm(
        ring, unit, v, tuple(sorted(neg.items())), tuple(sorted(pos.items())), nf_prec
    )


def reconstruct(nf: NormalForm, prec: int | None = None) -> LaurentSeries:
    """Expand the factorization back into a series.

    The result is truncated at ``prec`` when given, else at ``nf.prec``
    (exact forms reconstruct exactly).
    """
    ring = nf.ring
    out = LaurentSeries.monomial(ring, nf.order, nf.unit)
    for i, a in nf.neg:
        out = out * LaurentSeries.build(ring, {0: Coeff.one(ring), -i: -a})
    for j, b in nf.pos:
        out = out * LaurentSeries.build(ring, {0: Coeff.one(ring), j: -b})
    return out.truncate(prec if prec is not None else nf.prec)


def order_of(alpha: LaurentSeries) -> int:
    """The order v of the factorization; the valuation mod the nilradical."""
    v = alpha.valuation()
    if not alpha.coeff(v).is_unit():
        raise NotInvertible("leading coefficient (mod nilradical) is not a unit")
    for e, c in alpha.terms:
        if e < v and not c.is_nilpotent():
            raise NotInvertible("non-nilpotent coefficient below the order")
    return v
