"""Exact Schubert calculus for lines in projective n-space.

Cohomology classes of the Grassmannian of lines G(1, n) are integer
combinations of two-row classes sigma_(a, b) with n-1 >= a >= b >= 0; the
special class sigma_c = sigma_(c, 0) collects the lines meeting a fixed
subspace of codimension c + 1.  Products of special classes are expanded
with the Pieri rule, and every top-degree evaluation can be cross-checked
against an independent bialternant computation in Z[x, y].

All arithmetic is exact (Python integers); intersection numbers grow like
Catalan numbers, so fixed-width arithmetic would overflow silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


class DimensionMismatchError(ValueError):
    """Total codimension differs from dim G(1, n) = 2n - 2."""


@dataclass(frozen=True, order=True)
class SchubertClass:
    """The cycle sigma_(a, b); its codimension in G(1, n) is a + b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not 0 <= self.b <= self.a:
            raise ValueError(f"need a >= b >= 0, got ({self.a}, {self.b})")

    @property
    def codim(self) -> int:
        return self.a + self.b

    def fits(self, n: int) -> bool:
        """Whether the class lives in the 2 x (n-1) box of G(1, n)."""
        return self.a <= n - 1


@dataclass(frozen=True)
class CycleSum:
    """Finite integer combination of pure-codimension classes in one G(1, n)."""

    n: int
    terms: dict

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("ambient projective dimension must be >= 2")
        codims = set()
        for cls, coeff in self.terms.items():
            if not cls.fits(self.n):
                raise ValueError(f"{cls} does not fit inside G(1, {self.n})")
            if coeff == 0:
                raise ValueError("zero coefficients must be dropped")
            codims.add(cls.codim)
        if len(codims) > 1:
            raise ValueError("sums must have pure codimension")

    @classmethod
    def unit(cls, n: int) -> "CycleSum":
        """The empty product sigma_(0, 0)."""
        return cls(n, {SchubertClass(0, 0): 1})

    @property
    def codim(self) -> int | None:
        for cls in self.terms:
            return cls.codim
        return None

    def coefficient(self, a: int, b: int) -> int:
        return self.terms.get(SchubertClass(a, b), 0)

    def is_zero(self) -> bool:
        return not self.terms


def pieri_multiply(s: CycleSum, c: int) -> CycleSum:
    """Multiply by the special class sigma_c.

    Each sigma_(a, b) spreads over the horizontal-strip extensions
    sigma_(a', b') with a' + b' = a + b + c, a' >= a >= b' >= b and
    a' <= n - 1.  The sum is empty when no extension fits the box.
    """
    if not 0 <= c <= s.n - 1:
        raise ValueError(f"special class index {c} outside [0, {s.n - 1}]")
    out: dict[SchubertClass, int] = {}
    for cls, coeff in s.terms.items():
        a, b = cls.a, cls.b
        for a2 in range(max(a, b + c), min(s.n - 1, a + c) + 1):
            b2 = a + b + c - a2
            key = SchubertClass(a2, b2)
            out[key] = out.get(key, 0) + coeff
    return CycleSum(s.n, out)


def _check_codims(n: int, codims: Sequence[int]) -> None:
    if n < 2:
        raise ValueError("ambient projective dimension must be >= 2")
    for c in codims:
        if not 0 <= c <= n - 1:
            raise ValueError(f"codimension {c} outside [0, {n - 1}]")
    total = sum(codims)
    if total != 2 * n - 2:
        raise DimensionMismatchError(
            f"codimensions sum to {total}, need dim G(1, {n}) = {2 * n - 2}"
        )


def intersection_number(n: int, codims: Sequence[int]) -> int:
    """Evaluate the product of special classes sigma_c against the point class.

    Requires sum(codims) == 2n - 2; the result is the coefficient of
    sigma_(n-1, n-1) and is independent of factor order.
    """
    return _intersection_number(n, tuple(sorted(codims, reverse=True)))


@lru_cache(maxsize=None)
def _intersection_number(n: int, codims: tuple[int, ...]) -> int:
    _check_codims(n, codims)
    s = CycleSum.unit(n)
    for c in codims:
        if c == 0:
            continue
        s = pieri_multiply(s, c)
        if s.is_zero():
            return 0
    return s.coefficient(n - 1, n - 1)


def _convolve(p: list, q: list) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def oracle_intersection_number(n: int, codims: Sequence[int]) -> int:
    """Independent evaluation of the same product via bivariate polynomials.

    The complete homogeneous polynomial h_c(x, y) = x^c + x^(c-1) y + ... + y^c
    represents sigma_c; the product of the h_c is expanded exactly and the
    coefficient of x^n y^(n-1) in (x - y) * prod h_c is the intersection
    number.  Shares no code with the Pieri path.
    """
    codims = tuple(codims)
    _check_codims(n, codims)
    # poly[i] = coefficient of x^i y^(deg - i); every factor is homogeneous
    poly = [1]
    for c in codims:
        poly = _convolve(poly, [1] * (c + 1))
    return poly[n - 1] - poly[n]


@dataclass(frozen=True)
class GrassmannContext:
    """The Grassmannian G(l, n) of l-planes in P^n."""

    l: int
    n: int

    def __post_init__(self) -> None:
        if not 0 <= self.l < self.n:
            raise ValueError(f"need 0 <= l < n, got G({self.l}, {self.n})")

    @property
    def dimension(self) -> int:
        return (self.l + 1) * (self.n - self.l)


def expected_dimension(ctx: GrassmannContext, dims: Sequence[int]) -> int:
    """Dimension of the locus of l-planes meeting general subspaces of the
    given dimensions; negative values mean the locus is empty in general
    position."""
    for d in dims:
        if not 0 <= d <= ctx.n - 1:
            raise ValueError(f"subspace dimension {d} outside [0, {ctx.n - 1}]")
    return ctx.dimension - sum(ctx.n - d - 1 for d in dims)
