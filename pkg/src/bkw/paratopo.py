"""Paraconsistent topological belief models.

Two disjoint carriers, each with a closed-set topology, linked by
relations whose image sets must be closed in the opposite topology.
Belief holds at a state when its image is contained in the extension;
assumption when the image equals the extension inside the opposite
carrier.  Paraconsistent negation acts per carrier as closure of the
complement, so a formula and its negation overlap on boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product as iproduct
from typing import Iterable, Mapping

from . import formula as fm
from . import topology as tp


class ParaTopoModel:
    def __init__(self, tau_a: tp.ClosedTopology, tau_b: tp.ClosedTopology,
                 t_a: Iterable[tuple[str, str]], t_b: Iterable[tuple[str, str]],
                 val: Mapping[str, Iterable[str]] | None = None):
        self.tau_a = tau_a
        self.tau_b = tau_b
        self.a = tau_a.carrier
        self.b = tau_b.carrier
        self.t_a = frozenset((str(x), str(y)) for x, y in t_a)
        self.t_b = frozenset((str(y), str(x)) for y, x in t_b)
        self.val = {name: frozenset(sts) for name, sts in (val or {}).items()}
        self.image_a = {x: frozenset(y for (w, y) in self.t_a if w == x) for x in self.a}
        self.image_b = {y: frozenset(x for (w, x) in self.t_b if w == y) for y in self.b}
        self._validate()

    def _validate(self) -> None:
        if self.a & self.b:
            raise ValueError(f"carriers overlap on {sorted(self.a & self.b)}")
        for x, y in self.t_a:
            if x not in self.a or y not in self.b:
                raise ValueError(f"tA pair ({x}, {y}) is outside A x B")
        for y, x in self.t_b:
            if y not in self.b or x not in self.a:
                raise ValueError(f"tB pair ({y}, {x}) is outside B x A")
        for x in sorted(self.a):
            if self.image_a[x] not in self.tau_b.closed:
                raise ValueError(f"image tA({x}) = {sorted(self.image_a[x])} "
                                 "is not closed in the B topology")
        for y in sorted(self.b):
            if self.image_b[y] not in self.tau_a.closed:
                raise ValueError(f"image tB({y}) = {sorted(self.image_b[y])} "
                                 "is not closed in the A topology")
        universe = self.a | self.b
        for name, sts in self.val.items():
            if not sts <= universe:
                raise ValueError(f"valuation of {name!r} uses unknown states")

    @property
    def universe(self) -> frozenset:
        return self.a | self.b

    def __repr__(self) -> str:
        return f"ParaTopoModel(A={sorted(self.a)}, B={sorted(self.b)})"


def with_discrete_topologies(m: ParaTopoModel) -> ParaTopoModel:
    """Same carriers, relations and valuation under discrete topologies."""
    return ParaTopoModel(tp.discrete(m.a), tp.discrete(m.b), m.t_a,
                         [(y, x) for (y, x) in m.t_b], m.val)


def diagonal(m: ParaTopoModel) -> frozenset:
    """States of A whose believed-possible states all negate the return belief.

    The return belief tB(y) is negated paraconsistently, i.e. x must lie
    in the closure of the complement of tB(y).
    """
    result = set()
    for x in sorted(m.a):
        ok = True
        for y in m.image_a[x]:
            if x not in tp.pneg(m.tau_a, m.image_b[y]):
                ok = False
                break
        if ok:
            result.add(x)
    return frozenset(result)


def evaluate(m: ParaTopoModel, f: fm.Formula) -> frozenset:
    """Extension of a topological-language formula over both carriers."""
    memo: dict[fm.Formula, frozenset] = {}
    universe = m.universe

    def ext(f: fm.Formula) -> frozenset:
        if f in memo:
            return memo[f]
        result = _ext(f)
        memo[f] = result
        return result

    def _ext(f: fm.Formula) -> frozenset:
        if isinstance(f, fm.Atom):
            return m.val.get(f.name, frozenset())
        if isinstance(f, fm.Top):
            return universe
        if isinstance(f, fm.Bot):
            return frozenset()
        if isinstance(f, fm.Ua):
            return m.a
        if isinstance(f, fm.Ub):
            return m.b
        if isinstance(f, fm.Dtopo):
            return diagonal(m)
        if isinstance(f, fm.Not):
            return universe - ext(f.body)
        if isinstance(f, fm.Pneg):
            body = ext(f.body)
            return tp.pneg(m.tau_a, body & m.a) | tp.pneg(m.tau_b, body & m.b)
        if isinstance(f, fm.And):
            return ext(f.left) & ext(f.right)
        if isinstance(f, fm.Or):
            return ext(f.left) | ext(f.right)
        if isinstance(f, fm.Imp):
            return (universe - ext(f.left)) | ext(f.right)
        if isinstance(f, fm.Iff):
            le, re = ext(f.left), ext(f.right)
            return (le & re) | (universe - le - re)
        if isinstance(f, (fm.TBel, fm.TAsm, fm.TDia)):
            body = ext(f.body)
            if f.agent == "a":
                carrier, image, opposite = m.a, m.image_a, m.b
            else:
                carrier, image, opposite = m.b, m.image_b, m.a
            if isinstance(f, fm.TBel):
                return frozenset(x for x in carrier if image[x] <= body)
            if isinstance(f, fm.TAsm):
                return frozenset(x for x in carrier if image[x] == body & opposite)
            return frozenset(x for x in carrier if image[x] & body)
        raise fm.LanguageError(
            f"connective {type(f).__name__} is not part of the topological language")

    return ext(f)


_BK_SENTENCE = fm.parse("Ba Xb Dt & Ea true")


def bk_witnesses(m: ParaTopoModel) -> frozenset:
    """States of A satisfying the self-referential belief sentence.

    The witness believes that the other player assumes the diagonal, and
    has at least one believed-possible state.
    """
    return evaluate(m, _BK_SENTENCE)


def horizontally_closed(m: ParaTopoModel, s: Iterable[tuple[str, str]]) -> bool:
    """Every point of s extends to a closed A-slice inside s."""
    s = frozenset(s)
    for (x, y) in s:
        if not any(x in c and all((x2, y) in s for x2 in c) for c in m.tau_a.closed):
            return False
    return True


def vertically_closed(m: ParaTopoModel, s: Iterable[tuple[str, str]]) -> bool:
    """Every point of s extends to a closed B-slice inside s."""
    s = frozenset(s)
    for (x, y) in s:
        if not any(y in c and all((x, y2) in s for y2 in c) for c in m.tau_b.closed):
            return False
    return True


def _nonempty_subsets(points: Iterable) -> list[frozenset]:
    points = sorted(points)
    out = []
    for size in range(1, len(points) + 1):
        for combo in combinations(points, size):
            out.append(frozenset(combo))
    return out


@dataclass(frozen=True)
class AssumptionReport:
    complete: bool
    missing_subsets_of_b: tuple
    missing_subsets_of_a: tuple


def is_assumption_complete(m: ParaTopoModel) -> AssumptionReport:
    """Is every nonempty subset of each carrier assumed by some opposite state?"""
    if len(m.a) > 16 or len(m.b) > 16:
        raise ValueError("carriers too large for subset enumeration")
    assumed_by_a = {m.image_a[x] for x in m.a}
    assumed_by_b = {m.image_b[y] for y in m.b}
    missing_b = tuple(tuple(sorted(s)) for s in _nonempty_subsets(m.b)
                      if s not in assumed_by_a)
    missing_a = tuple(tuple(sorted(s)) for s in _nonempty_subsets(m.a)
                      if s not in assumed_by_b)
    return AssumptionReport(
        complete=not missing_b and not missing_a,
        missing_subsets_of_b=missing_b,
        missing_subsets_of_a=missing_a)


@dataclass(frozen=True)
class WeakAssumptionReport:
    holds: bool
    failing_set: tuple | None
    subsets_checked: int


def is_weak_assumption_complete(m: ParaTopoModel) -> WeakAssumptionReport:
    """Exhaustively test whether every product subset is horizontally and
    vertically closed; that premise forces weak assumption-completeness."""
    cells = sorted(iproduct(sorted(m.a), sorted(m.b)))
    if len(cells) > 12:
        raise ValueError("product carrier too large for exhaustive subset check")
    checked = 0
    for mask in range(1 << len(cells)):
        s = frozenset(c for i, c in enumerate(cells) if mask >> i & 1)
        checked += 1
        if not (horizontally_closed(m, s) and vertically_closed(m, s)):
            return WeakAssumptionReport(holds=False, failing_set=tuple(sorted(s)),
                                        subsets_checked=checked)
    return WeakAssumptionReport(holds=True, failing_set=None, subsets_checked=checked)
