"""Integer predicates and algorithms underneath the residue arithmetic.

Everything here works on Python ints, so results are exact at any size.
"""
from __future__ import annotations

import operator

from .errors import NotPrimeError, ResidueError


class Modulus(int):
    """A positive integer modulus.

    Any nonzero integer is accepted and taken without sign; zero is
    rejected because congruence modulo 0 would just be equality.
    """

    def __new__(cls, m) -> "Modulus":
        if isinstance(m, Modulus):
            return m
        try:
            m = operator.index(m)
        except TypeError:
            raise TypeError(f"modulus must be an integer, got {m!r}") from None
        if m == 0:
            raise ResidueError("modulus must be nonzero")
        return super().__new__(cls, abs(m))

    def __repr__(self) -> str:
        return f"Modulus({int(self)})"

    __str__ = int.__repr__


def divide_with_remainder(a: int, k) -> tuple[int, int]:
    """Return ``(s, r)`` with ``a == s*k + r`` and ``0 <= r < k``.

    The quotient is floored, so ``divide_with_remainder(-13, 5) == (-3, 2)``.
    """
    k = Modulus(k)
    s, r = divmod(a, int(k))
    return s, r


def congruent(b: int, c: int, m) -> bool:
    """True iff ``m`` divides ``b - c``."""
    m = Modulus(m)
    return divide_with_remainder(b - c, m)[1] == 0


def gcd(a: int, b: int) -> int:
    """Greatest nonnegative common divisor by Euclid's algorithm.

    ``gcd(0, 0)`` is 0 by convention.
    """
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n >= 1`` by trial division, as ``(p, e)`` pairs."""
    if n < 1:
        raise ResidueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def smallest_factor(n: int) -> int | None:
    """Smallest prime factor of ``n >= 2`` if ``n`` is composite, else None."""
    if n % 2 == 0:
        return 2 if n > 2 else None
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return None


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    return n >= 2 and smallest_factor(n) is None


def require_prime(p: int) -> int:
    if p < 2:
        raise NotPrimeError(p)
    f = smallest_factor(p)
    if f is not None:
        raise NotPrimeError(p, f)
    return p


def totient(k) -> int:
    """Euler's totient via the product formula over the prime factorization."""
    k = int(Modulus(k))
    phi = k
    for p, _ in factorize(k):
        phi = phi // p * (p - 1)
    return phi


def totient_by_count(k) -> int:
    """Euler's totient straight from its definition: count ``n`` in ``1..k`` coprime to ``k``."""
    k = int(Modulus(k))
    return sum(1 for n in range(1, k + 1) if gcd(n, k) == 1)


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n >= 1`` in increasing order."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]
