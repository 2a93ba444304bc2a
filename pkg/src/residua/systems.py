"""Complete and reduced residue systems, the affine permutation theorem,
and order-independence of iterated products."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import HypothesisError, ResidueError, ScheduleError
from .integers import Modulus, divide_with_remainder, gcd, totient

COMPLETE = "complete"
REDUCED = "reduced"


@dataclass(frozen=True)
class ResidueSystem:
    """An ordered list of integers, pairwise incongruent modulo ``modulus``.

    A complete system hits every class exactly once; a reduced system hits
    every class coprime to the modulus exactly once.
    """

    members: tuple[int, ...]
    modulus: Modulus
    kind: str = COMPLETE

    def __post_init__(self):
        m = Modulus(self.modulus)
        object.__setattr__(self, "modulus", m)
        object.__setattr__(self, "members", tuple(self.members))
        if self.kind == COMPLETE:
            ok = is_complete_system(self.members, m)
        elif self.kind == REDUCED:
            ok = is_reduced_system(self.members, m)
        else:
            raise ResidueError(f"unknown system kind {self.kind!r}")
        if not ok:
            raise ResidueError(f"members do not form a {self.kind} system mod {m}")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def classes(self) -> list[int]:
        """Least nonnegative residue of each member, in member order."""
        return [divide_with_remainder(x, self.modulus)[1] for x in self.members]

    def to_json(self) -> dict:
        return {"mod": int(self.modulus), "kind": self.kind, "members": list(self.members)}

    @classmethod
    def from_json(cls, data: dict) -> "ResidueSystem":
        return cls(tuple(data["members"]), data["mod"], data["kind"])


@dataclass(frozen=True)
class NumberSystem:
    """A nonempty multiset of positive integers (order kept for indexing)."""

    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if not self.members:
            raise ResidueError("a number system needs at least one member")
        if any(x < 1 for x in self.members):
            raise ResidueError("number system members must be positive")

    def __len__(self) -> int:
        return len(self.members)


def _distinct_classes(values: Sequence[int], m: Modulus) -> bool:
    seen = set()
    for v in values:
        r = divide_with_remainder(v, m)[1]
        if r in seen:
            return False
        seen.add(r)
    return True


def is_complete_system(candidate: Iterable[int], m) -> bool:
    """True iff ``candidate`` has ``m`` members, one from every class."""
    m = Modulus(m)
    values = list(candidate)
    return len(values) == m and _distinct_classes(values, m)


def is_reduced_system(candidate: Iterable[int], m) -> bool:
    m = Modulus(m)
    values = list(candidate)
    return (
        len(values) == totient(m)
        and all(gcd(v, m) == 1 for v in values)
        and _distinct_classes(values, m)
    )


def canonical_complete_system(m) -> ResidueSystem:
    """The system ``0, 1, ..., m-1``."""
    m = Modulus(m)
    return ResidueSystem(tuple(range(m)), m, COMPLETE)


def reduced_system(m) -> ResidueSystem:
    """The numbers in ``1..m`` coprime to ``m``."""
    m = Modulus(m)
    return ResidueSystem(tuple(n for n in range(1, m + 1) if gcd(n, m) == 1), m, REDUCED)


def affine_map(a: int, b: int, values: Iterable[int]) -> list[int]:
    """Raw values ``a*x + b``; no hypothesis is checked."""
    return [a * x + b for x in values]


def affine_image(a: int, b: int, sys: ResidueSystem) -> ResidueSystem:
    """Image of a complete system under ``x -> a*x + b`` for ``a`` coprime to the modulus.

    Members are the raw values ``a*x + b`` in the order of ``sys``.
    """
    if sys.kind != COMPLETE:
        raise ResidueError("affine_image needs a complete system")
    if gcd(a, sys.modulus) != 1:
        raise HypothesisError(f"gcd({a}, {sys.modulus}) != 1")
    return ResidueSystem(tuple(affine_map(a, b, sys.members)), sys.modulus, COMPLETE)


def window_representative(a: int, m, A: int) -> int:
    """The unique member of ``a, a+1, ..., a+m-1`` congruent to ``A``."""
    m = Modulus(m)
    return a + divide_with_remainder(A - a, m)[1]


def fold_product(sys: NumberSystem | Sequence[int], order: Sequence[tuple[int, int]]) -> int:
    """Multiply a number system down to one number following ``order``.

    Elements are addressed by position in an append-only list: the
    original members take ids ``0..n-1`` and the product made at step
    ``j`` gets id ``n + j``. Each step names two live ids, which are
    consumed. A full schedule has ``n - 1`` steps.
    """
    if not isinstance(sys, NumberSystem):
        sys = NumberSystem(tuple(sys))
    values = list(sys.members)
    live = [True] * len(values)
    if len(order) != len(values) - 1:
        raise ScheduleError(f"expected {len(values) - 1} steps, got {len(order)}")
    for step, (i, j) in enumerate(order):
        for idx in (i, j):
            if not 0 <= idx < len(values):
                raise ScheduleError(f"step {step}: index {idx} out of range")
            if not live[idx]:
                raise ScheduleError(f"step {step}: element {idx} already consumed")
        if i == j:
            raise ScheduleError(f"step {step}: element {i} paired with itself")
        live[i] = live[j] = False
        values.append(values[i] * values[j])
        live.append(True)
    return values[-1]


def reduction_schedules(n: int) -> Iterator[list[tuple[int, int]]]:
    """Every schedule for ``n`` elements, choosing unordered pairs at each step."""

    def walk(live: list[int], next_id: int, prefix: list[tuple[int, int]]):
        if len(live) == 1:
            yield list(prefix)
            return
        for x in range(len(live)):
            for y in range(x + 1, len(live)):
                i, j = live[x], live[y]
                rest = [v for v in live if v != i and v != j] + [next_id]
                prefix.append((i, j))
                yield from walk(rest, next_id + 1, prefix)
                prefix.pop()

    if n < 1:
        raise ScheduleError("need at least one element")
    yield from walk(list(range(n)), n, [])
