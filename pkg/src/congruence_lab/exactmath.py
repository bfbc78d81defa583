"""Exact integer primitives: p-adic valuations, generalized binomial
coefficients, rising factorials and integer polynomials.

Everything operates on Python's built-in arbitrary-precision integers, so all
results are exact regardless of magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import ParameterError

__all__ = [
    "INFINITY",
    "IntPolynomial",
    "PAdicOrder",
    "binom",
    "check_prime",
    "is_prime",
    "ord_p",
    "ord_p_factorial",
    "poly_eval",
    "rising_factorial",
]


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    """Trial-division primality test; meant for the small moduli used here."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    """Return ``p`` unchanged if it is prime, else raise :class:`ParameterError`."""
    if not isinstance(p, int) or not is_prime(p):
        raise ParameterError(f"p must be a prime >= 2, got {p!r}")
    return p


@dataclass(frozen=True)
class PAdicOrder:
    """A p-adic valuation: either a natural number or the infinite order.

    The infinite order (valuation of zero) compares greater than every finite
    order; finite orders compare numerically.  Comparisons against plain ints
    are supported, including negative ints (lower bounds may be negative).
    """

    _finite: int | None

    def __post_init__(self) -> None:
        if self._finite is not None and self._finite < 0:
            raise ValueError("a finite p-adic order must be >= 0")

    @property
    def is_infinite(self) -> bool:
        return self._finite is None

    @property
    def value(self) -> int:
        """The finite order; raises for the order of zero."""
        if self._finite is None:
            raise ValueError("the order of zero has no finite value")
        return self._finite

    def _key(self) -> tuple[int, int]:
        return (1, 0) if self._finite is None else (0, self._finite)

    @staticmethod
    def _other_key(other: object) -> tuple[int, int] | None:
        if isinstance(other, PAdicOrder):
            return other._key()
        if isinstance(other, int):
            return (0, other)
        return None

    def __eq__(self, other: object) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() == key

    def __lt__(self, other: object) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() < key

    def __le__(self, other: object) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() <= key

    def __gt__(self, other: object) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() > key

    def __ge__(self, other: object) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() >= key

    def __hash__(self) -> int:
        # finite orders hash like their int value so mixed containers behave
        return hash(self._finite) if self._finite is not None else hash("padic-infinity")

    def __str__(self) -> str:
        return "inf" if self._finite is None else str(self._finite)

    def __repr__(self) -> str:
        return f"PAdicOrder({self._finite!r})"


#: The order of zero.
INFINITY = PAdicOrder(None)


def ord_p(x: int, p: int) -> PAdicOrder:
    """Largest e with p**e dividing x; :data:`INFINITY` for x == 0.

    >>> ord_p(12, 2)
    PAdicOrder(2)
    >>> ord_p(0, 5) is INFINITY or ord_p(0, 5).is_infinite
    True
    """
    check_prime(p)
    if x == 0:
        return INFINITY
    x = abs(x)
    if p == 2:
        return PAdicOrder((x & -x).bit_length() - 1)
    e = 0
    while True:
        q, r = divmod(x, p)
        if r:
            return PAdicOrder(e)
        x = q
        e += 1


def ord_p_factorial(n: int, p: int) -> int:
    """Legendre's count sum(floor(n / p**j), j >= 1), the p-order of n!."""
    check_prime(p)
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def binom(x: int, k: int) -> int:
    """Generalized binomial coefficient C(x, k) for integer x and integer k.

    Conventions: C(x, k) = 0 for k < 0; C(x, 0) = 1; for k > 0 the product
    x(x-1)...(x-k+1)/k!, which is an integer for every integer x (negative x
    goes through the reflection C(x, k) = (-1)**k C(k - x - 1, k)).
    """
    if k < 0:
        return 0
    if x >= 0:
        return math.comb(x, k)
    c = math.comb(k - x - 1, k)
    return -c if k % 2 else c


def rising_factorial(x: int, n: int) -> int:
    """Product x(x+1)...(x+n-1); the empty product (n = 0) is 1."""
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if x <= 0 <= x + n - 1:
        return 0
    return math.prod(range(x, x + n))


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial; ``coeffs[i]`` multiplies x**i.

    Trailing zero coefficients are stripped, so the zero polynomial is the
    empty tuple.  By convention its degree is 0 (never needed with a nonzero
    weight, and it keeps ``degree`` total).
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = tuple(int(v) for v in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, values: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(values))

    @classmethod
    def from_coeff_string(cls, text: str) -> "IntPolynomial":
        """Parse a comma-separated low-to-high coefficient list, e.g. "0,0,1"."""
        parts = [t.strip() for t in text.split(",")]
        try:
            return cls(tuple(int(t) for t in parts))
        except ValueError as exc:
            raise ParameterError(f"bad polynomial coefficient list {text!r}") from exc

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def coeff_string(self) -> str:
        return ",".join(str(c) for c in (self.coeffs or (0,)))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                body = xpow if abs(c) == 1 else f"{abs(c)}*{xpow}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_eval(f: IntPolynomial, x: int) -> int:
    """Exact value of f(x)."""
    return f(x)
