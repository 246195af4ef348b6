"""Minimum Ordering with Independent Delays.

Order a set ``Z`` along a path so that every constraint ``(Z_i, h_i)`` finishes
early: the weight of an ordering is ``max(|Z|, max_i(max position in Z_i + h_i))``.
The minimum is found by scanning thresholds ``M`` upward and testing each with a
bipartite perfect matching between elements and positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class MoidInstance:
    z: tuple[int, ...]
    constraints: tuple[tuple[frozenset[int], int], ...]

    def __post_init__(self):
        if len(set(self.z)) != len(self.z):
            raise ValueError("elements of z must be distinct")
        universe = set(self.z)
        for subset, h in self.constraints:
            if not subset:
                raise ValueError("constraint sets must be nonempty")
            if not subset <= universe:
                raise ValueError(f"constraint set {sorted(subset)} is not a subset of z")
            if h < 1:
                raise ValueError("constraint delays must be positive")

    @classmethod
    def build(cls, z: Iterable[int], constraints: Iterable[tuple[Iterable[int], int]]) -> MoidInstance:
        return cls(tuple(z), tuple((frozenset(s), int(h)) for s, h in constraints))

    def delay(self) -> dict[int, int]:
        """Largest delay of any constraint containing each element (0 if none)."""
        d = dict.fromkeys(self.z, 0)
        for subset, h in self.constraints:
            for w in subset:
                if h > d[w]:
                    d[w] = h
        return d


@dataclass(frozen=True)
class MoidSolution:
    sigma: Mapping[int, int]
    mu: int

    @property
    def order(self) -> list[int]:
        """Elements of Z by position (the inverse of sigma)."""
        return sorted(self.sigma, key=self.sigma.__getitem__)


def mu(inst: MoidInstance, sigma: Mapping[int, int]) -> int:
    if sorted(sigma) != sorted(inst.z) or sorted(sigma.values()) != list(range(1, len(inst.z) + 1)):
        raise ValueError("sigma is not a bijection from z onto 1..|z|")
    value = len(inst.z)
    for subset, h in inst.constraints:
        value = max(value, max(sigma[w] for w in subset) + h)
    return value


def solve(inst: MoidInstance) -> MoidSolution:
    k = len(inst.z)
    delay = inst.delay()
    # element index -> largest admissible position under the current threshold
    delays = [delay[w] for w in inst.z]
    match_of_pos: list[int] = [-1] * k
    match_of_elem: list[int] = [-1] * k
    matched = 0
    top = k + max(delays, default=0)
    for threshold in range(k, top + 1):
        limit = [min(k, threshold - d) for d in delays]
        for e in range(k):
            if match_of_elem[e] == -1 and _augment(e, limit, match_of_pos, match_of_elem, [False] * k):
                matched += 1
        if matched == k:
            sigma = {inst.z[e]: match_of_elem[e] + 1 for e in range(k)}
            return MoidSolution(sigma, threshold)
    # unreachable: at threshold k + max delay every position is admissible
    raise AssertionError("no feasible threshold found")


def _augment(e: int, limit: list[int], match_of_pos: list[int], match_of_elem: list[int], seen: list[bool]) -> bool:
    # a free admissible position first keeps unconstrained elements in input order
    for j in range(limit[e]):
        if match_of_pos[j] == -1:
            seen[j] = True
            match_of_pos[j] = e
            match_of_elem[e] = j
            return True
    for j in range(limit[e]):
        if seen[j]:
            continue
        seen[j] = True
        other = match_of_pos[j]
        if other == -1 or _augment(other, limit, match_of_pos, match_of_elem, seen):
            match_of_pos[j] = e
            match_of_elem[e] = j
            return True
    return False


def extract_attachment_positions(inst: MoidInstance, sol: MoidSolution) -> list[int]:
    """Per constraint, the last position used by its set: where its tree hangs."""
    return [max(sol.sigma[w] for w in subset) for subset, _ in inst.constraints]

