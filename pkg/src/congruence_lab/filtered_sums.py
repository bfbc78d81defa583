"""Residue-class filtered weighted sums, evaluated directly over the integers.

Every sum here restricts its index k to one residue class and attaches an
exact integer weight.  No roots-of-unity arithmetic is involved anywhere: the
classical unity-filter representation is an identity about these sums, not an
implementation requirement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import kernels, triangles
from .errors import ParameterError
from .exactmath import IntPolynomial, check_prime
from .triangles import Family

__all__ = [
    "ResidueClass",
    "Variant",
    "binom_power_sum",
    "eulerian_power_sum",
    "eulerian_wan_sum",
    "fleck_sum",
    "stirling_poly_sum",
    "stirling_product_sum",
]


@dataclass(frozen=True)
class ResidueClass:
    """The integers congruent to ``residue`` modulo ``modulus``.

    The stored residue is canonical (0 <= residue < modulus), so two classes
    are equal iff they contain the same integers.
    """

    modulus: int
    residue: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ParameterError(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def contains(self, k: int) -> bool:
        return (k - self.residue) % self.modulus == 0

    def members(self, upper: int) -> range:
        """Members in [0, upper], ascending (empty when residue > upper)."""
        return range(self.residue, upper + 1, self.modulus)


class Variant(Enum):
    """Quotient rule inside the binomial weight of :func:`fleck_sum`."""

    EXACT = "exact"
    FLOOR = "floor"


def _check_positive(name: str, value: int, minimum: int = 1) -> int:
    if value < minimum:
        raise ParameterError(f"{name} must be >= {minimum}, got {value}")
    return value


def _alternating_weights(cls: ResidueClass, quotients, l: int) -> list:
    """Weights (-1)**k * C(q_j, l) along the members of ``cls``."""
    sign = -1 if cls.residue % 2 else 1
    if cls.modulus % 2 == 0:
        return [sign * math.comb(q, l) for q in quotients]
    out = []
    for q in quotients:
        out.append(sign * math.comb(q, l))
        sign = -sign
    return out


def fleck_sum(
    n: int,
    p: int,
    alpha: int,
    cls: ResidueClass,
    l: int = 0,
    variant: Variant = Variant.EXACT,
    beta: int | None = None,
) -> int:
    """Alternating filtered binomial sum with a binomial-of-quotient weight.

    EXACT variant (class modulus p**alpha):
        sum over k = r (mod p**alpha), 0 <= k <= n, of
        C(n, k) (-1)**k C((k - r) / p**alpha, l).
    FLOOR variant (class modulus p**beta, alpha >= beta >= 0):
        same, with weight C(floor((k - r) / p**alpha), l).

    With l = 0 and EXACT this is the plain alternating filtered sum.
    """
    check_prime(p)
    _check_positive("n", n)
    _check_positive("alpha", alpha)
    if l < 0:
        raise ParameterError(f"l must be >= 0, got {l}")
    p_alpha = p**alpha
    if variant is Variant.EXACT:
        # beta is ignored here: the class modulus already is p**alpha
        if cls.modulus != p_alpha:
            raise ParameterError(
                f"exact variant needs class modulus p**alpha = {p_alpha}, got {cls.modulus}"
            )
    elif variant is Variant.FLOOR:
        if beta is None:
            raise ParameterError("floor variant needs beta")
        if not 0 <= beta <= alpha:
            raise ParameterError(f"need alpha >= beta >= 0, got alpha={alpha}, beta={beta}")
        if cls.modulus != p**beta:
            raise ParameterError(
                f"floor variant needs class modulus p**beta = {p**beta}, got {cls.modulus}"
            )
    else:
        raise ParameterError(f"unknown variant {variant!r}")
    ks = cls.members(n)
    values = [math.comb(n, k) for k in ks]
    if variant is Variant.EXACT:
        # k = r + j * p**alpha, so the exact quotient is the stride index j
        assert (len(values) == 0) or (ks[0] - cls.residue) % p_alpha == 0
        quotients: list | range = range(len(values))
    else:
        quotients = [(k - cls.residue) // p_alpha for k in ks]
    weights = _alternating_weights(cls, quotients, l)
    return kernels.dot2(values, weights)


def binom_power_sum(n: int, p: int, alpha: int, cls: ResidueClass, a: int) -> int:
    """Filtered binomial power sum:
    sum over k = r (mod p**alpha), 0 <= k <= n, of C(n, k) (-a)**k.

    At a = 1 this specializes to the l = 0 exact :func:`fleck_sum`.
    """
    check_prime(p)
    _check_positive("n", n, minimum=0)
    _check_positive("alpha", alpha)
    if cls.modulus != p**alpha:
        raise ParameterError(
            f"class modulus must be p**alpha = {p**alpha}, got {cls.modulus}"
        )
    ks = cls.members(n)
    values = [math.comb(n, k) for k in ks]
    weights = kernels.power_steps(-a, cls.residue, cls.modulus, len(values))
    return kernels.dot2(values, weights)


def eulerian_wan_sum(n: int, p: int, alpha: int, cls: ResidueClass, l: int) -> int:
    """Filtered Eulerian sum with a binomial-of-quotient weight:
    sum over k = r (mod p**alpha), 0 <= k <= n-1, of A(n, k) C((k - r) / p**alpha, l).
    """
    check_prime(p)
    _check_positive("n", n)
    _check_positive("alpha", alpha)
    if l < 0:
        raise ParameterError(f"l must be >= 0, got {l}")
    if cls.modulus != p**alpha:
        raise ParameterError(
            f"class modulus must be p**alpha = {p**alpha}, got {cls.modulus}"
        )
    row = triangles.eulerian_row(n)
    ks = cls.members(n - 1)
    values = [row[k] for k in ks]
    weights = [math.comb(j, l) for j in range(len(values))]
    return kernels.dot2(values, weights)


def eulerian_power_sum(n: int, p: int, alpha: int, cls: ResidueClass, a: int) -> int:
    """Filtered Eulerian power sum:
    sum over k = r (mod p**alpha), 0 <= k <= n-1, of A(n, k) a**k  (0**0 = 1).
    """
    check_prime(p)
    _check_positive("n", n)
    _check_positive("alpha", alpha)
    if cls.modulus != p**alpha:
        raise ParameterError(
            f"class modulus must be p**alpha = {p**alpha}, got {cls.modulus}"
        )
    row = triangles.eulerian_row(n)
    ks = cls.members(n - 1)
    values = [row[k] for k in ks]
    weights = kernels.power_steps(a, cls.residue, cls.modulus, len(values))
    return kernels.dot2(values, weights)


def stirling_product_sum(n: int, m: int, cls: ResidueClass, a: int) -> int:
    """Filtered mixed Stirling sum:
    sum over k = r (mod d), 0 <= k <= n, of s(n, k) S(k, m) a**k.

    The class modulus d is arbitrary; m > n gives 0 because S(k, m) vanishes.
    """
    _check_positive("n", n)
    _check_positive("m", m)
    srow = triangles.stirling1_row(n)
    tri2 = triangles.ensure_rows(Family.STIRLING2, n)
    ks = cls.members(n)
    xs = [srow[k] for k in ks]
    ys = [tri2.value(k, m) for k in ks]
    weights = kernels.power_steps(a, cls.residue, cls.modulus, len(xs))
    return kernels.dot3(xs, ys, weights)


def stirling_poly_sum(n: int, f: IntPolynomial, cls: ResidueClass, a: int) -> int:
    """Filtered polynomial-weighted Stirling sum:
    sum over k = r (mod d), 0 <= k <= n, of s(n, k) f(k) a**k.
    """
    _check_positive("n", n)
    srow = triangles.stirling1_row(n)
    ks = cls.members(n)
    xs = [srow[k] for k in ks]
    ys = [f(k) for k in ks]
    weights = kernels.power_steps(a, cls.residue, cls.modulus, len(xs))
    return kernels.dot3(xs, ys, weights)
