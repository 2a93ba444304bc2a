"""Residues of powers: periodicity, multiplicative order, and Fermat's
theorem checked along independent routes."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import NamedTuple

from .classes import ResidueClass, classify, mul, power
from .errors import HypothesisError, ProofError, ResidueError
from .integers import Modulus, divisors, gcd, require_prime, totient


@dataclass(frozen=True)
class PeriodStructure:
    """Shape of ``1, a, a**2, ...`` modulo m: a tail followed by a repeating cycle."""

    preperiod: int
    period: int
    cycle: tuple[ResidueClass, ...]
    tail: tuple[ResidueClass, ...] = ()

    def term(self, i: int) -> ResidueClass:
        """Class of ``a**i`` read off the structure."""
        if i < self.preperiod:
            return self.tail[i]
        return self.cycle[(i - self.preperiod) % self.period]

    def to_json(self) -> dict:
        return {
            "preperiod": self.preperiod,
            "period": self.period,
            "tail": [c.rep for c in self.tail],
            "cycle": [c.rep for c in self.cycle],
        }


@dataclass(frozen=True)
class OrderResult:
    t: int

    def __int__(self) -> int:
        return self.t


class OrderDivides(NamedTuple):
    t: int
    divides: bool


@dataclass(frozen=True)
class ProofStep:
    """``p`` divides ``value`` with ``value == witness * p``.

    For an induction step ``value`` is ``a**p - a``; for a lemma step it
    is ``(a+1)**p - a**p - 1``.
    """

    p: int
    a: int
    value: int
    witness: int
    kind: str = "induction"

    def check(self) -> bool:
        return self.witness * self.p == self.value

    def to_json(self) -> dict:
        return {"p": self.p, "a": self.a, "value": str(self.value), "witness": str(self.witness)}


@dataclass(frozen=True)
class ProofTrace:
    """Auditable chain showing ``p | a**p - a`` for ``a = 1..a_max``."""

    p: int
    steps: tuple[ProofStep, ...]
    lemmas: tuple[ProofStep, ...] = field(default=())

    def check(self) -> bool:
        """Re-verify every witness and the induction links between steps."""
        p = self.p
        for i, s in enumerate(self.steps):
            if s.a != i + 1 or s.value != s.a**p - s.a or not s.check():
                return False
        for i, lem in enumerate(self.lemmas):
            a = lem.a
            if lem.value != (a + 1) ** p - a**p - 1 or not lem.check():
                return False
            nxt = self.steps[i + 1]
            if nxt.witness != self.steps[i].witness + lem.witness:
                return False
        return len(self.lemmas) == max(len(self.steps) - 1, 0)

    def to_jsonl(self) -> str:
        return "".join(json.dumps(s.to_json()) + "\n" for s in self.steps)


def power_sequence(a: int, m, n: int) -> list[ResidueClass]:
    """Classes of ``a**0, ..., a**(n-1)`` by repeated multiplication."""
    if n < 1:
        raise ResidueError("need at least one term")
    m = Modulus(m)
    step = classify(a, m)
    seq = [classify(1, m)]
    while len(seq) < n:
        seq.append(mul(seq[-1], step))
    return seq


def period_structure(a: int, m) -> PeriodStructure:
    """Preperiod, period, tail and cycle of ``1, a, a**2, ...`` modulo ``m``.

    Uses Brent's cycle finder on ``x -> a*x``, so no table of seen
    classes is kept.
    """
    m = Modulus(m)
    step = classify(a, m)
    start = classify(1, m)

    def f(x):
        return mul(x, step)

    power_, lam = 1, 1
    tortoise, hare = start, f(start)
    while tortoise != hare:
        if power_ == lam:
            tortoise = hare
            power_ *= 2
            lam = 0
        hare = f(hare)
        lam += 1

    tortoise = hare = start
    for _ in range(lam):
        hare = f(hare)
    mu = 0
    while tortoise != hare:
        tortoise, hare = f(tortoise), f(hare)
        mu += 1

    seq = power_sequence(a, m, mu + lam)
    return PeriodStructure(mu, lam, tuple(seq[mu:]), tuple(seq[:mu]))


def multiplicative_order(a: int, m) -> OrderResult:
    """Least ``t >= 1`` with ``a**t = 1 (mod m)``.

    Only divisors of the totient are tried, in increasing order.
    """
    m = Modulus(m)
    if m == 1:
        raise ResidueError("order is undefined modulo 1")
    if gcd(a, m) != 1:
        raise HypothesisError(f"{a} is not coprime to {m}; no power is 1")
    x = classify(a, m)
    one = classify(1, m)
    for d in divisors(totient(m)):
        if power(x, d) == one:
            return OrderResult(d)
    raise AssertionError("unreachable: a**phi(m) is 1")  # pragma: no cover


def check_order_divides(p, a: int) -> OrderDivides:
    """Order ``t`` of ``a`` modulo the prime ``p`` and whether ``t | p - 1``."""
    p = require_prime(int(Modulus(p)))
    if a % p == 0:
        raise HypothesisError(f"{p} divides {a}")
    t = multiplicative_order(a, p).t
    return OrderDivides(t, (p - 1) % t == 0)


def fermat_euler_check(a: int, k) -> ResidueClass:
    """Class of ``a**phi(k)`` modulo ``k``; the theorem says it is 1."""
    k = Modulus(k)
    if k < 2:
        raise ResidueError("modulus must be at least 2")
    if gcd(a, k) != 1:
        raise HypothesisError(f"gcd({a}, {k}) != 1")
    return power(classify(a, k), totient(k))


def _lemma_witness(a: int, p: int) -> int:
    # (a+1)**p - a**p - 1 = sum_{0<i<p} C(p,i) a**i and p | C(p,i) for prime p
    total = 0
    for i in range(1, p):
        c = comb(p, i)
        if c % p:
            raise ProofError(f"binomial coefficient C({p},{i}) = {c} is not divisible by {p}")
        total += c // p * a**i
    return total


def binomial_proof_trace(p, a_max: int) -> ProofTrace:
    """Build the induction chain ``p | a**p - a`` for ``a = 1..a_max``.

    Base case ``1**p - 1 = 0``. Each step adds the lemma
    ``p | (a+1)**p - a**p - 1`` (from the binomial expansion) to the
    previous witness, and the result is checked against ``(a+1)**p - (a+1)``
    computed directly.
    """
    p = require_prime(int(Modulus(p)))
    if a_max < 1:
        raise ResidueError("a_max must be at least 1")
    steps = [ProofStep(p, 1, 0, 0)]
    lemmas = []
    for a in range(1, a_max):
        lv = (a + 1) ** p - a**p - 1
        lw = _lemma_witness(a, p)
        if lw * p != lv:
            raise ProofError(f"lemma witness wrong at a={a}")
        lemmas.append(ProofStep(p, a, lv, lw, kind="lemma"))
        value = (a + 1) ** p - (a + 1)
        witness = steps[-1].witness + lw
        if witness * p != value:
            raise ProofError(f"{p} does not divide {a + 1}**{p} - {a + 1}")
        steps.append(ProofStep(p, a + 1, value, witness))
    return ProofTrace(p, tuple(steps), tuple(lemmas))


def corollary_ap_minus_1(p, a: int) -> ResidueClass:
    """Class of ``a**(p-1)`` modulo the prime ``p``, for ``p`` not dividing ``a``."""
    p = require_prime(int(Modulus(p)))
    if a % p == 0:
        raise HypothesisError(f"{p} divides {a}")
    return power(classify(a, p), p - 1)
