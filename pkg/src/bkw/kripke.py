"""Interactive belief frames: two type spaces over one state set, a cross
relation, the belief/assumption modalities, the diagonal set, and the
hole scan.

The assumption modality has two readings that differ on finite frames:
the *frame* reading compares the successor set against the whole
extension, the *local* reading compares it only inside the opposite type
space.  Every evaluation entry point takes a ``heart`` flag; "frame" is
the default.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from . import formula as fm

HEART_SEMANTICS = ("frame", "local")

# The seven slots of the hole scan, in report order.
_SLOT_LABELS = (
    "hole at Ua",
    "hole at Ub",
    "big hole at Hba Ua",
    "big hole at [ab] Hba Ua",
    "big hole at [ba] [ab] Hba Ua",
    "hole at Ua & D",
    "big hole at Hba (Ua & D)",
)


class KripkeModel:
    """Finite interactive belief frame.

    States are partitioned into the two type spaces; in strict mode the
    relation may only cross between them.
    """

    def __init__(self, states: Iterable[str], rel: Iterable[tuple[str, str]],
                 ua: Iterable[str], ub: Iterable[str],
                 val: Mapping[str, Iterable[str]] | None = None,
                 strict: bool = True):
        self.states = frozenset(states)
        self.rel = frozenset((str(x), str(y)) for x, y in rel)
        self.ua = frozenset(ua)
        self.ub = frozenset(ub)
        self.val = {name: frozenset(sts) for name, sts in (val or {}).items()}
        self.strict = strict
        self._succ: dict[str, frozenset] = {}
        for x in self.states:
            self._succ[x] = frozenset(y for (w, y) in self.rel if w == x)
        self._validate()

    def _validate(self) -> None:
        if self.ua & self.ub:
            raise ValueError(f"type spaces overlap on {sorted(self.ua & self.ub)}")
        if self.ua | self.ub != self.states:
            raise ValueError("type spaces must cover all states")
        for x, y in self.rel:
            if x not in self.states or y not in self.states:
                raise ValueError(f"relation pair ({x}, {y}) uses unknown states")
        if self.strict:
            for x, y in self.rel:
                cross = (x in self.ua and y in self.ub) or (x in self.ub and y in self.ua)
                if not cross:
                    raise ValueError(f"strict mode forbids same-type edge ({x}, {y})")
        for name, sts in self.val.items():
            if not sts <= self.states:
                raise ValueError(f"valuation of {name!r} uses unknown states")

    def successors(self, x: str) -> frozenset:
        return self._succ[x]

    def _encode(self):
        return (tuple(sorted(self.states)), tuple(sorted(self.rel)),
                tuple(sorted(self.ua)),
                tuple(sorted((k, tuple(sorted(v))) for k, v in self.val.items())))

    def __eq__(self, other) -> bool:
        return isinstance(other, KripkeModel) and self._encode() == other._encode()

    def __hash__(self) -> int:
        return hash(self._encode())

    def __repr__(self) -> str:
        return (f"KripkeModel(states={sorted(self.states)}, rel={sorted(self.rel)}, "
                f"ua={sorted(self.ua)}, ub={sorted(self.ub)})")


def diagonal_D(m: KripkeModel) -> frozenset:
    """States none of whose successors point back at them."""
    return frozenset(
        w for w in m.states
        if all((z, w) not in m.rel for z in m.successors(w))
    )


def extension(m: KripkeModel, f: fm.Formula, heart: str = "frame") -> frozenset:
    """Exact satisfaction set of a relational-language formula."""
    if heart not in HEART_SEMANTICS:
        raise ValueError(f"unknown heart semantics {heart!r}")
    memo: dict[fm.Formula, frozenset] = {}

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
            return m.states
        if isinstance(f, fm.Bot):
            return frozenset()
        if isinstance(f, fm.Ua):
            return m.ua
        if isinstance(f, fm.Ub):
            return m.ub
        if isinstance(f, fm.Dclass):
            return diagonal_D(m)
        if isinstance(f, fm.Not):
            return m.states - ext(f.body)
        if isinstance(f, fm.And):
            return ext(f.left) & ext(f.right)
        if isinstance(f, fm.Or):
            return ext(f.left) | ext(f.right)
        if isinstance(f, fm.Imp):
            return (m.states - ext(f.left)) | ext(f.right)
        if isinstance(f, fm.Iff):
            le, re = ext(f.left), ext(f.right)
            return (le & re) | (m.states - le - re)
        if isinstance(f, (fm.Box, fm.Heart, fm.Diamond)):
            src, tgt = (m.ua, m.ub) if f.direction == "ab" else (m.ub, m.ua)
            body = ext(f.body)
            if isinstance(f, fm.Box):
                return frozenset(x for x in src if m.successors(x) & tgt <= body)
            if isinstance(f, fm.Diamond):
                return frozenset(x for x in src if m.successors(x) & tgt & body)
            if heart == "frame":
                return frozenset(x for x in src if m.successors(x) & tgt == body)
            return frozenset(x for x in src if m.successors(x) & tgt == body & tgt)
        raise fm.LanguageError(
            f"connective {type(f).__name__} is not part of the relational language")

    return ext(f)


def is_satisfiable(m: KripkeModel, f: fm.Formula, heart: str = "frame") -> bool:
    return bool(extension(m, f, heart))


def is_valid(m: KripkeModel, f: fm.Formula, heart: str = "frame") -> bool:
    return extension(m, f, heart) == m.states


@dataclass(frozen=True)
class SlotResult:
    """One slot of the hole scan, with the witnessing evidence."""

    label: str
    formula: str
    is_hole: bool
    #: states satisfying Ub & phi / Ua & phi
    content_b: tuple
    content_a: tuple
    #: states witnessing Hab phi (resp. [ab] phi) / Hba phi (resp. [ba] phi)
    witness_ab: tuple
    witness_ba: tuple


@dataclass(frozen=True)
class HoleReport:
    slots: tuple[SlotResult, ...]

    @property
    def any_hole(self) -> bool:
        return any(s.is_hole for s in self.slots)

    def slot(self, label: str) -> SlotResult:
        for s in self.slots:
            if s.label == label:
                return s
        raise KeyError(label)


def hole_slots(diagonal_atom: fm.Formula) -> tuple[tuple[str, fm.Formula, bool], ...]:
    """The seven scanned slots as (label, formula, big-hole?) triples."""
    ua_and_d = fm.And(fm.Ua(), diagonal_atom)
    heart_ba_ua = fm.Heart("ba", fm.Ua())
    box_heart = fm.Box("ab", heart_ba_ua)
    box_box_heart = fm.Box("ba", box_heart)
    slot_formulas = (fm.Ua(), fm.Ub(), heart_ba_ua, box_heart, box_box_heart,
                     ua_and_d, fm.Heart("ba", ua_and_d))
    big = (False, False, True, True, True, False, True)
    return tuple(zip(_SLOT_LABELS, slot_formulas, big))


def scan_holes(ext, diagonal_atom: fm.Formula) -> HoleReport:
    """Run the seven-slot hole scan against an extension function.

    A hole at phi: one type space can satisfy phi but no state of the
    other assumes it; a big hole uses belief instead of assumption.  The
    scan takes phi's satisfiability inside this model literally: slots
    whose formula is unsatisfiable report no hole.
    """
    slots = []
    for label, phi, use_box in hole_slots(diagonal_atom):
        mod = fm.Box if use_box else fm.Heart
        content_b = ext(fm.And(fm.Ub(), phi))
        content_a = ext(fm.And(fm.Ua(), phi))
        witness_ab = ext(mod("ab", phi))
        witness_ba = ext(mod("ba", phi))
        is_hole = (bool(content_b) and not witness_ab) or (bool(content_a) and not witness_ba)
        slots.append(SlotResult(
            label=label, formula=fm.to_text(phi), is_hole=is_hole,
            content_b=tuple(sorted(content_b)), content_a=tuple(sorted(content_a)),
            witness_ab=tuple(sorted(witness_ab)), witness_ba=tuple(sorted(witness_ba))))
    return HoleReport(tuple(slots))


def find_holes(m: KripkeModel, heart: str = "frame") -> HoleReport:
    return scan_holes(lambda f: extension(m, f, heart), fm.Dclass())


@dataclass(frozen=True)
class Lemma1Record:
    """Verdicts for the two chained-belief claims; reports, never asserts."""

    premise_holds: bool
    part1_valid: bool
    part2_valid: bool
    part1_counterwitnesses: tuple
    part2_counterwitnesses: tuple


_PREMISE = fm.parse("Hab Ub")
_PART1 = fm.parse("[ab] [ba] [ab] Hba Ua -> D")
_PART1_ANTE = fm.parse("[ab] [ba] [ab] Hba Ua")
_PART2_BODY = fm.parse("[ab] Hba (Ua & D)")


def check_lemma_1(m: KripkeModel, heart: str = "frame") -> Lemma1Record:
    premise = is_satisfiable(m, _PREMISE, heart)
    part1_fails = m.states - extension(m, _PART1, heart)
    part2_holds_at = extension(m, _PART2_BODY, heart)
    return Lemma1Record(
        premise_holds=premise,
        part1_valid=not part1_fails,
        part2_valid=not part2_holds_at,
        part1_counterwitnesses=tuple(sorted(part1_fails)),
        part2_counterwitnesses=tuple(sorted(part2_holds_at)),
    )
