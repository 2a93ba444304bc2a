"""Exhaustive theorem sweeps used by ``residua suite``."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .classes import classify
from .integers import gcd, totient
from .powers import fermat_euler_check, multiplicative_order, period_structure, power_sequence
from .systems import affine_map, canonical_complete_system, is_complete_system

MAX_BOUND = 5000


@dataclass
class SuiteResult:
    name: str
    bound: int
    cases: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "bound": self.bound,
            "cases": self.cases,
            "counterexamples": len(self.counterexamples),
            "examples": self.counterexamples[:10],
        }


def _fermat(bound: int) -> Iterator[dict]:
    for k in range(2, bound + 1):
        for a in range(1, k + 1):
            if gcd(a, k) == 1:
                r = fermat_euler_check(a, k)
                yield {"k": k, "a": a, "result": r.rep, "ok": r.rep == 1 % k}


def _order(bound: int) -> Iterator[dict]:
    for m in range(2, bound + 1):
        phi = totient(m)
        for a in range(1, m):
            if gcd(a, m) == 1:
                t = multiplicative_order(a, m).t
                yield {"m": m, "a": a, "order": t, "ok": phi % t == 0}


def _affine(bound: int) -> Iterator[dict]:
    for m in range(1, bound + 1):
        base = canonical_complete_system(m).members
        for a in range(m):
            coprime = gcd(a, m) == 1
            for b in range(m):
                complete = is_complete_system(affine_map(a, b, base), m)
                yield {"m": m, "a": a, "b": b, "complete": complete, "ok": complete == coprime}


def _period(bound: int) -> Iterator[dict]:
    for m in range(2, bound + 1):
        one = classify(1, m)
        for a in range(m):
            ps = period_structure(a, m)
            if gcd(a, m) == 1:
                seq = power_sequence(a, m, 3 * ps.period)
                ok = ps.preperiod == 0 and ps.cycle[0] == one and seq == list(ps.cycle) * 3
            else:
                ok = one not in power_sequence(a, m, 2 * m)[1:]
            yield {"m": m, "a": a, "preperiod": ps.preperiod, "period": ps.period, "ok": ok}


SUITES: dict[str, Callable[[int], Iterator[dict]]] = {
    "fermat": _fermat,
    "order": _order,
    "affine": _affine,
    "period": _period,
}


def run_suite(name: str, bound: int, keep_rows: bool = False) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    if not 1 <= bound <= MAX_BOUND:
        raise ValueError(f"bound must be in 1..{MAX_BOUND}")
    result = SuiteResult(name, bound)
    for row in SUITES[name](bound):
        result.cases += 1
        if keep_rows:
            result.rows.append(row)
        if not row["ok"]:
            result.counterexamples.append(row)
    return result
