"""Finite closed-set topologies and their co-Heyting operations.

A topology is stored by its closed sets.  On finite carriers the closed
family is required to contain the empty set and the carrier and to be
closed under pairwise union and intersection, which makes closure and
interior exact intersections/unions over the family.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterable, Iterator


def _fset(items: Iterable) -> frozenset:
    return frozenset(items)


@dataclass(frozen=True)
class ClosedTopology:
    carrier: frozenset
    closed: frozenset

    @staticmethod
    def make(carrier: Iterable, closed: Iterable[Iterable]) -> "ClosedTopology":
        return ClosedTopology(_fset(carrier), _fset(_fset(c) for c in closed))


def discrete(carrier: Iterable) -> ClosedTopology:
    """Topology in which every subset is closed."""
    points = sorted(carrier)
    sets = []
    for mask in range(1 << len(points)):
        sets.append(frozenset(p for i, p in enumerate(points) if mask >> i & 1))
    return ClosedTopology.make(points, sets)


def validate(t: ClosedTopology) -> list[str]:
    """Return the list of axiom violations (empty means the family is a topology)."""
    problems = []
    if frozenset() not in t.closed:
        problems.append("missing empty set")
    if t.carrier not in t.closed:
        problems.append("missing carrier")
    for c in t.closed:
        if not c <= t.carrier:
            problems.append(f"set {sorted(c)} is not a subset of the carrier")
    for c1, c2 in iproduct(sorted(t.closed, key=sorted), repeat=2):
        if c1 | c2 not in t.closed:
            problems.append(f"union of {sorted(c1)} and {sorted(c2)} is not closed")
        if c1 & c2 not in t.closed:
            problems.append(f"intersection of {sorted(c1)} and {sorted(c2)} is not closed")
    return problems


def closure(t: ClosedTopology, s: Iterable) -> frozenset:
    """Smallest closed superset of s."""
    s = _fset(s)
    result = t.carrier
    for c in t.closed:
        if s <= c:
            result &= c
    return result


def interior(t: ClosedTopology, s: Iterable) -> frozenset:
    """Largest open subset of s (opens are complements of closed sets)."""
    s = _fset(s)
    return t.carrier - closure(t, t.carrier - s)


def boundary(t: ClosedTopology, s: Iterable) -> frozenset:
    s = _fset(s)
    return closure(t, s) - interior(t, s)


def pneg(t: ClosedTopology, s: Iterable) -> frozenset:
    """Paraconsistent negation: closure of the complement."""
    s = _fset(s)
    return closure(t, t.carrier - s)


def ineg(t: ClosedTopology, s: Iterable) -> frozenset:
    """Intuitionistic negation: interior of the complement."""
    s = _fset(s)
    return interior(t, t.carrier - s)


def _require_closed(t: ClosedTopology, s: frozenset, role: str) -> None:
    if s not in t.closed:
        raise ValueError(f"{role} {sorted(s)} is not closed in this topology")


def subtraction(t: ClosedTopology, a: Iterable, b: Iterable) -> frozenset:
    """Co-Heyting subtraction: the smallest closed x with a <= x | b."""
    a, b = _fset(a), _fset(b)
    _require_closed(t, a, "minuend")
    _require_closed(t, b, "subtrahend")
    return closure(t, a - b)


def exponent(t: ClosedTopology, c1: Iterable, c2: Iterable) -> frozenset:
    """Exponent object of the closed-set category: Clo(complement(c1) & c2)."""
    c1, c2 = _fset(c1), _fset(c2)
    _require_closed(t, c1, "base")
    _require_closed(t, c2, "exponent")
    return closure(t, (t.carrier - c1) & c2)


def product(ta: ClosedTopology, tb: ClosedTopology) -> ClosedTopology:
    """Product topology: closed sets are all unions of closed rectangles."""
    carrier = frozenset(iproduct(ta.carrier, tb.carrier))
    rectangles = {frozenset(iproduct(c, d)) for c in ta.closed for d in tb.closed}
    family = set(rectangles)
    frontier = set(rectangles)
    while frontier:
        fresh = set()
        for u in frontier:
            for r in rectangles:
                joined = u | r
                if joined not in family:
                    family.add(joined)
                    fresh.add(joined)
        frontier = fresh
    return ClosedTopology(carrier, frozenset(family))


def enumerate_topologies(carrier: Iterable) -> Iterator[ClosedTopology]:
    """All closed-set topologies on the carrier, in a deterministic order.

    Feasible only for small carriers: there are 2^(2^n - 2) candidate
    families on n points.
    """
    points = sorted(carrier)
    if len(points) > 4:
        raise ValueError("carrier too large for exhaustive topology enumeration")
    full = frozenset(points)
    subsets = [frozenset(p for i, p in enumerate(points) if mask >> i & 1)
               for mask in range(1 << len(points))]
    optional = [s for s in subsets if s not in (frozenset(), full)]
    for mask in range(1 << len(optional)):
        family = {frozenset(), full}
        family.update(s for i, s in enumerate(optional) if mask >> i & 1)
        t = ClosedTopology(full, frozenset(family))
        if not validate(t):
            yield t
