"""Belief models over finite membership graphs.

States are nodes; an edge w -> v in the model file (and in the ``mem``
pairs here) means v is a member of w.  Nodes are either sets or
urelements; urelements carry no members and are never identified with
the empty set or with each other.

The assumption modality checks its biconditional over a state's members
together with the state itself.  That domain is forced by the worked
facts this module reproduces: a Quine state assumes exactly the formulas
it falsifies, and assumption of a true formula at a Quine state pins the
state into both type spaces.  Quantifying over all nodes instead breaks
the first fact; quantifying over members only breaks it for urelements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from . import formula as fm


class HypersetModel:
    def __init__(self, nodes: Iterable[str], mem: Iterable[tuple[str, str]],
                 ua: Iterable[str], ub: Iterable[str],
                 urelements: Iterable[str] = (),
                 val: Mapping[str, Iterable[str]] | None = None,
                 disjoint_types: bool = True):
        self.nodes = frozenset(nodes)
        self.mem = frozenset((str(w), str(v)) for w, v in mem)
        self.ua = frozenset(ua)
        self.ub = frozenset(ub)
        self.urelements = frozenset(urelements)
        self.val = {name: frozenset(sts) for name, sts in (val or {}).items()}
        self.disjoint_types = disjoint_types
        self._members: dict[str, frozenset] = {
            w: frozenset(v for (x, v) in self.mem if x == w) for w in self.nodes
        }
        self._validate()

    def _validate(self) -> None:
        for w, v in self.mem:
            if w not in self.nodes or v not in self.nodes:
                raise ValueError(f"membership pair ({w}, {v}) uses unknown nodes")
        for u in self.urelements:
            if u not in self.nodes:
                raise ValueError(f"unknown urelement {u!r}")
            if self._members[u]:
                raise ValueError(f"urelement {u!r} has members")
        if self.ua | self.ub != self.nodes:
            raise ValueError("type spaces must cover all nodes")
        if self.disjoint_types and self.ua & self.ub:
            raise ValueError(f"type spaces overlap on {sorted(self.ua & self.ub)}")
        for name, sts in self.val.items():
            if not sts <= self.nodes:
                raise ValueError(f"valuation of {name!r} uses unknown nodes")

    def members(self, w: str) -> frozenset:
        return self._members[w]

    def kind(self, w: str) -> str:
        return "urelement" if w in self.urelements else "set"

    def _encode(self):
        return (tuple(sorted(self.nodes)), tuple(sorted(self.mem)),
                tuple(sorted(self.ua)), tuple(sorted(self.ub)),
                tuple(sorted(self.urelements)),
                tuple(sorted((k, tuple(sorted(v))) for k, v in self.val.items())),
                self.disjoint_types)

    def __eq__(self, other) -> bool:
        return isinstance(other, HypersetModel) and self._encode() == other._encode()

    def __hash__(self) -> int:
        return hash(self._encode())

    def __repr__(self) -> str:
        parts = ", ".join(f"{w}={{{' '.join(sorted(self.members(w)))}}}"
                          for w in sorted(self.nodes))
        return f"HypersetModel({parts})"


@dataclass(frozen=True)
class StateClass:
    is_quine: bool
    is_urelement: bool
    is_transitive: bool


def classify_state(m: HypersetModel, w: str) -> StateClass:
    """Quine (sole member is itself), urelement, and transitivity flags."""
    if w not in m.nodes:
        raise ValueError(f"unknown node {w!r}")
    quine = w not in m.urelements and m.members(w) == frozenset([w])
    transitive = all(b in m.members(w) for a in m.members(w) for b in m.members(a))
    return StateClass(is_quine=quine, is_urelement=w in m.urelements,
                      is_transitive=transitive)


def diagonal_Dplus(m: HypersetModel) -> frozenset:
    """Nodes none of whose members contain them back."""
    return frozenset(
        w for w in m.nodes
        if all(w not in m.members(v) for v in m.members(w))
    )


def nwf_extension(m: HypersetModel, f: fm.Formula) -> frozenset:
    """Satisfaction set of a relational-language formula under membership semantics."""
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
            return m.nodes
        if isinstance(f, fm.Bot):
            return frozenset()
        if isinstance(f, fm.Ua):
            return m.ua
        if isinstance(f, fm.Ub):
            return m.ub
        if isinstance(f, fm.Dplus):
            return diagonal_Dplus(m)
        if isinstance(f, fm.Not):
            return m.nodes - ext(f.body)
        if isinstance(f, fm.And):
            return ext(f.left) & ext(f.right)
        if isinstance(f, fm.Or):
            return ext(f.left) | ext(f.right)
        if isinstance(f, fm.Imp):
            return (m.nodes - ext(f.left)) | ext(f.right)
        if isinstance(f, fm.Iff):
            le, re = ext(f.left), ext(f.right)
            return (le & re) | (m.nodes - le - re)
        if isinstance(f, (fm.Box, fm.Heart, fm.Diamond)):
            src, tgt = (m.ua, m.ub) if f.direction == "ab" else (m.ub, m.ua)
            body = ext(f.body)
            if isinstance(f, fm.Box):
                return frozenset(w for w in src if m.members(w) & tgt <= body)
            if isinstance(f, fm.Diamond):
                return frozenset(w for w in src if m.members(w) & tgt & body)
            # Assumption: over members(w) | {w}, membership-and-type must
            # match the body exactly.
            result = set()
            for w in src:
                need = m.members(w) & tgt
                domain = m.members(w) | {w}
                if body & domain == need:
                    result.add(w)
            return frozenset(result)
        raise fm.LanguageError(
            f"connective {type(f).__name__} is not part of the membership language")

    return ext(f)


def nwf_satisfiable(m: HypersetModel, f: fm.Formula) -> bool:
    return bool(nwf_extension(m, f))


def nwf_valid(m: HypersetModel, f: fm.Formula) -> bool:
    return nwf_extension(m, f) == m.nodes


def nwf_find_holes(m: HypersetModel):
    from .kripke import scan_holes
    return scan_holes(lambda f: nwf_extension(m, f), fm.Dplus())


# ---------------------------------------------------------------------------
# Bisimulation and canonical forms


def _labels(m: HypersetModel, w: str):
    return (m.kind(w), w in m.ua, w in m.ub,
            frozenset(name for name, sts in m.val.items() if w in sts))


def canonicalize(m: HypersetModel) -> tuple[HypersetModel, dict[str, str]]:
    """Quotient by the coarsest label-respecting bisimulation.

    Partition refinement: nodes start grouped by label (each urelement
    alone in its block), and blocks split until every block's members hit
    the same set of blocks.  The returned map sends each node to the
    representative of its block; representatives are the least node names,
    so the operation is idempotent.
    """
    nodes = sorted(m.nodes)
    block: dict[str, object] = {}
    for w in nodes:
        # Urelements are atoms: identical labels never merge them.
        block[w] = ("ure", w) if w in m.urelements else _labels(m, w)
    while True:
        fresh = {
            w: (block[w], frozenset(block[v] for v in m.members(w)))
            for w in nodes
        }
        stable = len(set(fresh.values())) == len(set(block.values()))
        block = fresh
        if stable:
            break

    classes: dict[object, list[str]] = {}
    for w in nodes:
        classes.setdefault(block[w], []).append(w)
    rep = {w: min(classes[block[w]]) for w in nodes}

    new_nodes = sorted(set(rep.values()))
    new_mem = sorted({(rep[w], rep[v]) for (w, v) in m.mem})
    quotient = HypersetModel(
        nodes=new_nodes,
        mem=new_mem,
        ua=sorted({rep[w] for w in m.ua}),
        ub=sorted({rep[w] for w in m.ub}),
        urelements=sorted({rep[w] for w in m.urelements}),
        val={name: sorted({rep[w] for w in sts}) for name, sts in m.val.items()},
        disjoint_types=m.disjoint_types,
    )
    return quotient, rep


def bisimilar(m1: HypersetModel, n1: str, m2: HypersetModel, n2: str) -> bool:
    """Labeled bisimilarity between nodes of two models.

    Within one model distinct urelements are distinct atoms; across
    models urelements match when their labels do.
    """
    if n1 not in m1.nodes or n2 not in m2.nodes:
        raise ValueError("unknown node")
    same_model = m1 is m2
    pairs = set()
    for a in m1.nodes:
        for b in m2.nodes:
            if _labels(m1, a) != _labels(m2, b):
                continue
            if same_model and a in m1.urelements and b in m2.urelements and a != b:
                continue
            pairs.add((a, b))

    def transfer(a: str, b: str) -> bool:
        return (all(any((x, y) in pairs for y in m2.members(b)) for x in m1.members(a))
                and all(any((x, y) in pairs for x in m1.members(a)) for y in m2.members(b)))

    changed = True
    while changed:
        changed = False
        for a, b in sorted(pairs):
            if not transfer(a, b):
                pairs.discard((a, b))
                changed = True
    return (n1, n2) in pairs


# ---------------------------------------------------------------------------
# Named finite checks


def bounded_formula_family(max_modal_depth: int = 2, atom: str = "p") -> tuple[fm.Formula, ...]:
    """Deterministic family of formulas with bounded modal nesting.

    Base layer: the type atoms, one propositional atom, the constants,
    their negations, and the pairwise conjunctions/disjunctions; each
    further layer applies all six directed modalities to the previous
    layer.
    """
    p = fm.Atom(atom)
    literals = [fm.Ua(), fm.Ub(), p]
    base: list[fm.Formula] = [*literals, fm.Top(), fm.Bot()]
    base += [fm.Not(l) for l in literals]
    for i, left in enumerate(literals):
        for right in literals[i + 1:]:
            base.append(fm.And(left, right))
            base.append(fm.Or(left, right))
    family = list(base)
    layer = base
    for _ in range(max_modal_depth):
        layer = [ctor(d, f)
                 for ctor in (fm.Box, fm.Heart, fm.Diamond)
                 for d in ("ab", "ba")
                 for f in layer]
        family += layer
    return tuple(family)


@dataclass(frozen=True)
class TheoremViolation:
    state: str
    formula: str
    detail: str


def check_theorem_2_2(m: HypersetModel,
                      formulas: Iterable[fm.Formula] | None = None) -> list[TheoremViolation]:
    """Quine/urelement states assume exactly what they falsify and believe everything.

    Requires disjoint type spaces.  Returns the violations found over the
    formula family (expected empty).
    """
    if not m.disjoint_types or (m.ua & m.ub):
        raise ValueError("the assumption-of-falsehoods check requires "
                         "disjoint type spaces")
    if formulas is None:
        formulas = bounded_formula_family()
    special = [w for w in sorted(m.nodes)
               if classify_state(m, w).is_quine or w in m.urelements]
    violations = []
    for w in special:
        direction = "ab" if w in m.ua else "ba"
        for f in formulas:
            holds = w in nwf_extension(m, f)
            assumes = w in nwf_extension(m, fm.Heart(direction, f))
            believes = w in nwf_extension(m, fm.Box(direction, f))
            if assumes != (not holds):
                violations.append(TheoremViolation(
                    state=w, formula=fm.to_text(f),
                    detail=f"assumes={assumes} but holds={holds}"))
            if not believes:
                violations.append(TheoremViolation(
                    state=w, formula=fm.to_text(f), detail="belief fails"))
    return violations


def check_theorem_2_3(m: HypersetModel) -> list[TheoremViolation]:
    """Quine states with a true assumption must sit in both type spaces."""
    violations = []
    for w in sorted(m.nodes):
        if not classify_state(m, w).is_quine:
            continue
        for direction in ("ab", "ba"):
            if w in nwf_extension(m, fm.Heart(direction, fm.Top())):
                if not (w in m.ua and w in m.ub):
                    violations.append(TheoremViolation(
                        state=w, formula=f"H{direction} true",
                        detail="true assumption outside Ua & Ub"))
    return violations


CLAIMED_VALID = ("[ab] Ub <-> Ua", "[ba] Ua <-> Ub",
                 "[ab] Ua <-> false", "[ba] Ub <-> false")
CLAIMED_INVALID = ("[ab] Ub -> Ub", "[ab] Ub -> [ba] [ab] Ub",
                   "[ab] Ub -> [ab] [ab] Ub")


@dataclass(frozen=True)
class ValidityVerdict:
    formula: str
    claimed_valid: bool
    holds: bool
    failing_states: tuple


def check_validity_lists(m: HypersetModel) -> tuple[ValidityVerdict, ...]:
    """Evaluate the claimed-valid and claimed-invalid formulas on one model."""
    verdicts = []
    for text, claimed in ([(t, True) for t in CLAIMED_VALID]
                          + [(t, False) for t in CLAIMED_INVALID]):
        ext = nwf_extension(m, fm.parse(text))
        failing = tuple(sorted(m.nodes - ext))
        verdicts.append(ValidityVerdict(
            formula=text, claimed_valid=claimed,
            holds=not failing, failing_states=failing))
    return tuple(verdicts)


def graph_to_structure(nodes: Iterable[str], edges: Iterable[tuple[str, str]],
                       root: str, types: Mapping[str, str],
                       leaf_kind: str = "urelement") -> HypersetModel:
    """Read a rooted connected digraph as a belief structure.

    Each edge parent -> child makes the child a member of the parent.
    Sink nodes become urelements (game end states) unless ``leaf_kind``
    is "empty_set".
    """
    nodes = sorted(set(nodes))
    edges = sorted({(str(a), str(b)) for a, b in edges})
    if leaf_kind not in ("urelement", "empty_set"):
        raise ValueError(f"unknown leaf kind {leaf_kind!r}")
    out: dict[str, set] = {n: set() for n in nodes}
    for a, b in edges:
        if a not in out or b not in out:
            raise ValueError(f"edge ({a}, {b}) uses unknown nodes")
        out[a].add(b)
    seen = {root}
    stack = [root]
    while stack:
        for child in out[stack.pop()]:
            if child not in seen:
                seen.add(child)
                stack.append(child)
    if seen != set(nodes):
        raise ValueError(f"graph is not connected from {root!r}: "
                         f"unreachable {sorted(set(nodes) - seen)}")
    urelements = [n for n in nodes if not out[n]] if leaf_kind == "urelement" else []
    return HypersetModel(
        nodes=nodes, mem=edges,
        ua=[n for n in nodes if types[n] == "a"],
        ub=[n for n in nodes if types[n] == "b"],
        urelements=urelements,
    )
