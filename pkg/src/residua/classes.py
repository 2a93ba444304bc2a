"""Residue classes and the congruence calculus on them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ModulusMismatchError, ResidueError
from .integers import Modulus, divide_with_remainder, gcd


@dataclass(frozen=True, order=True)
class ResidueClass:
    """The class ``{rep + k*modulus}`` stored by its least nonnegative member.

    Build instances with :func:`classify`; the constructor only accepts a
    representative that is already canonical.
    """

    rep: int
    modulus: Modulus

    def __post_init__(self):
        m = Modulus(self.modulus)
        object.__setattr__(self, "modulus", m)
        if not 0 <= self.rep < m:
            raise ResidueError(f"representative {self.rep} not in 0..{m - 1}")

    def __str__(self) -> str:
        return f"{self.rep} mod {self.modulus}"

    def contains(self, a: int) -> bool:
        return divide_with_remainder(a, self.modulus)[1] == self.rep

    def lift(self, k: int = 0) -> int:
        """The member ``rep + k*modulus``."""
        return self.rep + k * self.modulus

    def to_json(self) -> dict:
        return {"rep": self.rep, "mod": int(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "ResidueClass":
        return classify(data["rep"], data["mod"])

    def _coerce(self, other) -> "ResidueClass":
        if isinstance(other, ResidueClass):
            return other
        if isinstance(other, int):
            return classify(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else sub(other, self)

    def __mul__(self, other):
        if isinstance(other, ResidueClass):
            return mul(self, other)
        if isinstance(other, int):
            return scalar_mul(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return scalar_mul(-1, self)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return power(self, k)


@dataclass(frozen=True)
class LeastResidues:
    least_positive: int
    least_negative: int
    absolutely_least: int

    def to_json(self) -> dict:
        return {
            "least_positive": self.least_positive,
            "least_negative": self.least_negative,
            "absolutely_least": self.absolutely_least,
        }


def classify(a: int, m) -> ResidueClass:
    """The residue class of ``a`` modulo ``m``."""
    m = Modulus(m)
    return ResidueClass(divide_with_remainder(a, m)[1], m)


def least_residues(a: int, m) -> LeastResidues:
    """Least positive, least negative and absolutely least residues of ``a``.

    When both candidates have magnitude ``m/2`` the positive one is taken
    as absolutely least.
    """
    m = Modulus(m)
    pos = divide_with_remainder(a, m)[1]
    neg = pos - m if pos else 0
    absolute = pos if 2 * pos <= m else neg
    return LeastResidues(pos, neg, absolute)


def _same_modulus(x: ResidueClass, y: ResidueClass) -> Modulus:
    if x.modulus != y.modulus:
        raise ModulusMismatchError(
            f"cannot combine classes mod {x.modulus} and mod {y.modulus}; project first"
        )
    return x.modulus


def project(r: ResidueClass, d) -> ResidueClass:
    """Reduce a class to a divisor ``d`` of its modulus."""
    d = Modulus(d)
    if r.modulus % d:
        raise ResidueError(f"{d} does not divide the modulus {r.modulus}")
    return classify(r.rep, d)


def add(x: ResidueClass, y: ResidueClass) -> ResidueClass:
    return classify(x.rep + y.rep, _same_modulus(x, y))


def sub(x: ResidueClass, y: ResidueClass) -> ResidueClass:
    return classify(x.rep - y.rep, _same_modulus(x, y))


def scalar_mul(k: int, x: ResidueClass) -> ResidueClass:
    return classify(k * x.rep, x.modulus)


def mul(x: ResidueClass, y: ResidueClass) -> ResidueClass:
    return classify(x.rep * y.rep, _same_modulus(x, y))


def power(x: ResidueClass, k: int) -> ResidueClass:
    """``x**k`` by left-to-right square and multiply.

    Intermediate values stay below ``modulus**2``, so exponents of any size
    are fine. Negative exponents are rejected (no inverses here).
    """
    if k < 0:
        raise ResidueError(f"negative exponent {k}")
    m = int(x.modulus)
    base = x.rep
    acc = 1 % m
    for bit in bin(k)[2:] if k else "":
        acc = acc * acc % m
        if bit == "1":
            acc = acc * base % m
    return ResidueClass(acc, x.modulus)


def eval_poly(coeffs: Iterable[tuple[int, int]], x: ResidueClass) -> ResidueClass:
    """Evaluate ``sum(A * x**e for A, e in coeffs)`` in the class ring of ``x``."""
    total = classify(0, x.modulus)
    for A, e in coeffs:
        if e < 0:
            raise ResidueError(f"negative exponent {e} in polynomial term")
        total = add(total, scalar_mul(A, power(x, e)))
    return total


def is_unit(x: ResidueClass) -> bool:
    return gcd(x.rep, x.modulus) == 1
