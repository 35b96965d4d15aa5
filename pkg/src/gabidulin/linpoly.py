"""Linearized (q-)polynomials over F_{q^s}.

A linearized polynomial sum(c_i * x**(q**i)) is stored as its q-coefficient
vector (c_0, ..., c_d) with c_d != 0; the zero polynomial stores the empty
tuple and has q-degree -inf.  These polynomials form a ring with no zero
divisors under addition and composition; q-degrees add under composition.

:func:`subspace_poly` builds the monic annihilator of the span of a
generator list, prod (x - beta) over the span, optionally twisted by
x**(q**t).  Dependent or zero generators are accepted: each one raises the
root multiplicity by one q-power instead of enlarging the span, so a list
with r redundant entries yields the same polynomial as the independent list
with t increased by r.

Right division and the right-Euclidean gcd (gcrd) operate at q-degree
scale; for subspace polynomials the gcrd equals the subspace polynomial of
the intersection span with the smaller twist.  For twists t > 0 the
agreement with the ordinary-polynomial gcd (which sees root multiplicities
q^t) is validated empirically by the test suite rather than proven here.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import BothZero, DivisorZero, MixedFields
from .fields import FieldCtx

__all__ = [
    "LinPoly",
    "lin_add",
    "lin_sub",
    "lin_scale",
    "compose",
    "evaluate",
    "twist",
    "subspace_poly",
    "right_divide",
    "gcrd",
]

NEG_INF = float("-inf")


class LinPoly:
    """Immutable linearized polynomial bound to a field context."""

    __slots__ = ("ctx", "qcoeffs")

    def __init__(self, ctx: FieldCtx, qcoeffs: Iterable[int] = ()):
        coeffs = list(qcoeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.ctx = ctx
        self.qcoeffs = tuple(coeffs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "LinPoly":
        return cls(ctx)

    @classmethod
    def x(cls, ctx: FieldCtx) -> "LinPoly":
        """The identity x = x**(q**0)."""
        return cls(ctx, (1,))

    @classmethod
    def monomial(cls, ctx: FieldCtx, t: int, coeff: int = 1) -> "LinPoly":
        """coeff * x**(q**t)."""
        if t < 0:
            raise ValueError("q-power must be nonnegative")
        return cls(ctx, (0,) * t + (coeff,))

    @classmethod
    def from_pairs(cls, ctx: FieldCtx, pairs: Iterable[tuple[int, int]]) -> "LinPoly":
        """Build from (q-power, coefficient) pairs (the textual wire form)."""
        pairs = list(pairs)
        if not pairs:
            return cls(ctx)
        coeffs = [0] * (max(i for i, _ in pairs) + 1)
        for i, c in pairs:
            coeffs[i] = c
        return cls(ctx, coeffs)

    def to_pairs(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.qcoeffs) if c]

    # -- basic views --------------------------------------------------------

    @property
    def q_degree(self):
        """Index of the highest nonzero q-coefficient; -inf for zero."""
        return len(self.qcoeffs) - 1 if self.qcoeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.qcoeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.qcoeffs) and self.qcoeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.qcoeffs[i] if 0 <= i < len(self.qcoeffs) else 0

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, LinPoly)
                and self.ctx == other.ctx and self.qcoeffs == other.qcoeffs)

    def __hash__(self) -> int:
        return hash((self.ctx, self.qcoeffs))

    def __repr__(self) -> str:
        return f"LinPoly({self.to_pairs()!r})"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "LinPoly") -> "LinPoly":
        return lin_add(self, other)

    def __sub__(self, other: "LinPoly") -> "LinPoly":
        return lin_sub(self, other)

    def scale(self, c: int) -> "LinPoly":
        return lin_scale(c, self)

    def compose(self, other: "LinPoly") -> "LinPoly":
        return compose(self, other)

    def twist(self, t: int) -> "LinPoly":
        return twist(self, t)

    def evaluate(self, v: int) -> int:
        return evaluate(self, v)

    __call__ = evaluate

    def monic(self) -> "LinPoly":
        """Divide by the leading q-coefficient; zero stays zero."""
        if self.is_zero or self.is_monic:
            return self
        inv = self.ctx.inv(self.qcoeffs[-1])
        return LinPoly(self.ctx, [self.ctx.mul(inv, c) for c in self.qcoeffs])


def _require_same(f: LinPoly, g: LinPoly) -> FieldCtx:
    if f.ctx != g.ctx:
        raise MixedFields("operands belong to different field contexts")
    return f.ctx


def lin_add(f: LinPoly, g: LinPoly) -> LinPoly:
    ctx = _require_same(f, g)
    a, b = f.qcoeffs, g.qcoeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = ctx.add(out[i], c)
    return LinPoly(ctx, out)


def lin_sub(f: LinPoly, g: LinPoly) -> LinPoly:
    ctx = _require_same(f, g)
    m = max(len(f.qcoeffs), len(g.qcoeffs))
    return LinPoly(ctx, [ctx.sub(f.coeff(i), g.coeff(i)) for i in range(m)])


def lin_scale(c: int, f: LinPoly) -> LinPoly:
    return LinPoly(f.ctx, [f.ctx.mul(c, x) for x in f.qcoeffs])


def compose(f: LinPoly, g: LinPoly) -> LinPoly:
    """f(g(x)).  Coefficient of x**(q**m) is sum over i+j=m of f_j * g_i**(q**j)."""
    ctx = _require_same(f, g)
    if f.is_zero or g.is_zero:
        return LinPoly.zero(ctx)
    out = [0] * (len(f.qcoeffs) + len(g.qcoeffs) - 1)
    for j, fj in enumerate(f.qcoeffs):
        if fj == 0:
            continue
        for i, gi in enumerate(g.qcoeffs):
            if gi == 0:
                continue
            out[i + j] = ctx.add(out[i + j], ctx.mul(fj, ctx.frobenius(gi, j)))
    return LinPoly(ctx, out)


def evaluate(f: LinPoly, v: int) -> int:
    ctx = f.ctx
    acc = 0
    w = v
    for c in f.qcoeffs:
        if c:
            acc = ctx.add(acc, ctx.mul(c, w))
        w = ctx.pow(w, ctx.p)
    return acc


def twist(f: LinPoly, t: int) -> LinPoly:
    """x**(q**t) composed with f: coefficients Frobenius-raised and shifted up."""
    if t < 0:
        raise ValueError("twist power must be nonnegative")
    if t == 0 or f.is_zero:
        return f
    ctx = f.ctx
    return LinPoly(ctx, (0,) * t + tuple(ctx.frobenius(c, t) for c in f.qcoeffs))


def subspace_poly(ctx: FieldCtx, generators: Iterable[int], t: int = 0) -> LinPoly:
    """Monic annihilator of span(generators), twisted by x**(q**t).

    Iteratively: starting from f = x, each generator a maps f to
    f**q - f(a)**(q-1) * f; when f(a) = 0 (a already in the accumulated
    span) the step degenerates to f -> f**q, bumping the multiplicity.
    The q-degree is always t + len(generators).
    """
    if t < 0:
        raise ValueError("twist power must be nonnegative")
    f = LinPoly.x(ctx)
    for a in generators:
        e = evaluate(f, a)
        fq = twist(f, 1)
        if e == 0:
            f = fq
        else:
            f = lin_sub(fq, lin_scale(ctx.pow(e, ctx.p - 1), f))
    return twist(f, t)


def right_divide(f: LinPoly, g: LinPoly) -> tuple[LinPoly, LinPoly]:
    """Quotient and remainder with f = compose(quotient, g) + remainder.

    The remainder's q-degree is strictly below g's.  Each step clears the
    leading term with c = lc(f) / lc(g)**(q**delta) at degree gap delta.
    """
    ctx = _require_same(f, g)
    if g.is_zero:
        raise DivisorZero("right division by the zero polynomial")
    quotient = LinPoly.zero(ctx)
    rem = f
    dg = len(g.qcoeffs) - 1
    lg = g.qcoeffs[-1]
    while not rem.is_zero and len(rem.qcoeffs) - 1 >= dg:
        delta = len(rem.qcoeffs) - 1 - dg
        c = ctx.div(rem.qcoeffs[-1], ctx.frobenius(lg, delta))
        term = LinPoly.monomial(ctx, delta, c)
        quotient = lin_add(quotient, term)
        rem = lin_sub(rem, compose(term, g))
    return quotient, rem


def gcrd(f: LinPoly, g: LinPoly) -> LinPoly:
    """Monic greatest common right divisor under composition."""
    if f.is_zero and g.is_zero:
        raise BothZero("gcrd(0, 0) is undefined")
    _require_same(f, g)
    while not g.is_zero:
        f, g = g, right_divide(f, g)[1]
    return f.monic()
