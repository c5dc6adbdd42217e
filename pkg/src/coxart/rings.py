"""Exact real algebraic scalars for reflection representations.

The geometric representation of a Coxeter group with off-diagonal entries
in {2,3,4,5,6,oo} has Gram-matrix entries 2*cos(pi/m) lying in the ring
generated over the integers by sqrt(2), sqrt(3) and the golden ratio.
Every scalar we ever need is therefore a rational combination of sqrt(r)
for squarefree r dividing 30.  Elements are stored in that normal form, so
equality is coefficient-wise; the sign of a nonzero element is decided by
refining rational interval bounds for the radicals, which terminates
because the sqrt(r) are linearly independent over the rationals.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

__all__ = ["AlgReal", "two_cos_pi_over"]

_RADICANDS = (1, 2, 3, 5, 6, 10, 15, 30)


def _reduce_radicand(n: int) -> tuple[int, int]:
    """Largest k with k*k | n; returns (k, n // k**2)."""
    k = 1
    for p in (2, 3, 5):
        while n % (p * p) == 0:
            n //= p * p
            k *= p
    return k, n


# sqrt(a)*sqrt(b) = c*sqrt(r) for squarefree a, b dividing 30
_PRODUCT = {
    (a, b): _reduce_radicand(a * b) for a in _RADICANDS for b in _RADICANDS
}


class AlgReal:
    """An element of Q[sqrt2, sqrt3, sqrt5] in radical normal form."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=0):
        if isinstance(coeffs, AlgReal):
            self._c = coeffs._c
        elif isinstance(coeffs, dict):
            self._c = {r: Fraction(v) for r, v in coeffs.items() if v}
        else:
            v = Fraction(coeffs)
            self._c = {1: v} if v else {}

    # -- constructors ------------------------------------------------
    @staticmethod
    def sqrt_of(r: int) -> "AlgReal":
        k, r = _reduce_radicand(r)
        if r not in _RADICANDS:
            raise ValueError(f"sqrt({r}) is outside the supported ring")
        return AlgReal({r: Fraction(k)})

    # -- ring structure ----------------------------------------------
    def __add__(self, other):
        other = other if isinstance(other, AlgReal) else AlgReal(other)
        c = dict(self._c)
        for r, v in other._c.items():
            w = c.get(r, 0) + v
            if w:
                c[r] = w
            else:
                c.pop(r, None)
        out = AlgReal.__new__(AlgReal)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = AlgReal.__new__(AlgReal)
        out._c = {r: -v for r, v in self._c.items()}
        return out

    def __sub__(self, other):
        other = other if isinstance(other, AlgReal) else AlgReal(other)
        return self + (-other)

    def __rsub__(self, other):
        return AlgReal(other) + (-self)

    def __mul__(self, other):
        other = other if isinstance(other, AlgReal) else AlgReal(other)
        c: dict[int, Fraction] = {}
        for r1, v1 in self._c.items():
            for r2, v2 in other._c.items():
                k, r = _PRODUCT[(r1, r2)]
                w = c.get(r, 0) + v1 * v2 * k
                if w:
                    c[r] = w
                else:
                    c.pop(r, None)
        out = AlgReal.__new__(AlgReal)
        out._c = c
        return out

    __rmul__ = __mul__

    # -- predicates ---------------------------------------------------
    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        other = other if isinstance(other, AlgReal) else AlgReal(other)
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}."""
        if not self._c:
            return 0
        signs = {1 if v > 0 else -1 for v in self._c.values()}
        if len(signs) == 1 and all(r == 1 for r in self._c) is False:
            # all terms have the same sign and every sqrt(r) is positive
            return signs.pop()
        if set(self._c) == {1}:
            return 1 if self._c[1] > 0 else -1
        prec = 16
        while True:
            lo = hi = Fraction(0)
            scale = 1 << prec
            for r, v in self._c.items():
                s = isqrt(r * scale * scale)
                rlo, rhi = Fraction(s, scale), Fraction(s + 1, scale)
                if v > 0:
                    lo += v * rlo
                    hi += v * rhi
                else:
                    lo += v * rhi
                    hi += v * rlo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2

    def is_nonneg(self) -> bool:
        return self.sign() >= 0

    def __repr__(self):
        if not self._c:
            return "AlgReal(0)"
        parts = []
        for r in _RADICANDS:
            if r in self._c:
                v = self._c[r]
                parts.append(str(v) if r == 1 else f"{v}*sqrt{r}")
        return "AlgReal(" + " + ".join(parts) + ")"


_TWO_COS = {
    2: AlgReal(0),
    3: AlgReal(1),
    4: AlgReal.sqrt_of(2),
    5: AlgReal({1: Fraction(1, 2), 5: Fraction(1, 2)}),
    6: AlgReal.sqrt_of(3),
}


def two_cos_pi_over(m) -> AlgReal:
    """2*cos(pi/m) for m in {2,3,4,5,6} or infinity (giving 2)."""
    if m in _TWO_COS:
        return _TWO_COS[m]
    if m == float("inf"):
        return AlgReal(2)
    raise ValueError(f"entry {m!r} is outside the supported set {{2,..,6,oo}}")
