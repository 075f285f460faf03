"""Model enumeration, claim-verification campaigns, fixtures, and reports.

Campaigns sweep an exhaustively enumerated model space and record how a
named claim fares on every model.  They report; they do not assert.  The
relational sweeps run on a vectorized engine (one numpy lane per
candidate relation), the membership sweeps on a bitmask evaluator; both
engines are cross-checked against the reference evaluators in the test
suite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations, product as iproduct
from typing import Iterator

import numpy as np

from . import formula as fm
from . import hyperset as hs
from . import kripke as kr
from . import lawvere as lv
from . import paratopo as pt
from . import topology as tp
from .modelio import dump_kripke, dump_nwf

TARGETS = ("lemma1", "theorem12", "theorem22", "theorem23",
           "validity_lists", "adjunction", "boundary_law", "lawvere_scan")

_FAIL_DUMP_CAP = 5
_CHUNK = 1 << 20


# ---------------------------------------------------------------------------
# Public enumerators


def _state_names(k: int, prefix: str) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(k))


def _mask_set(names: tuple[str, ...], mask: int) -> list[str]:
    return [n for i, n in enumerate(names) if mask >> i & 1]


def enumerate_kripke(max_states: int, *, strict: bool = True, serial: bool = False,
                     dedup_iso: bool = False) -> Iterator[kr.KripkeModel]:
    """All belief frames with up to ``max_states`` states.

    Sweeps every type-space assignment and every relation (cross-type
    edges only in strict mode).  ``serial`` keeps only models where every
    state has a successor; ``dedup_iso`` drops isomorphic duplicates.
    """
    if not 1 <= max_states <= 5:
        raise ValueError("state bound must be between 1 and 5")
    for k in range(1, max_states + 1):
        names = _state_names(k, "s")
        seen: set = set()
        for ua_mask in range(1 << k):
            if strict:
                pairs = [(x, y) for x in range(k) for y in range(k)
                         if (ua_mask >> x & 1) != (ua_mask >> y & 1)]
            else:
                pairs = [(x, y) for x in range(k) for y in range(k)]
            for rel_mask in range(1 << len(pairs)):
                rel_idx = [pairs[j] for j in range(len(pairs)) if rel_mask >> j & 1]
                if serial:
                    with_succ = {x for x, _ in rel_idx}
                    if len(with_succ) < k:
                        continue
                if dedup_iso:
                    sig = _kripke_iso_signature(k, ua_mask, rel_idx)
                    if sig in seen:
                        continue
                    seen.add(sig)
                yield kr.KripkeModel(
                    states=names,
                    rel=[(names[x], names[y]) for x, y in rel_idx],
                    ua=_mask_set(names, ua_mask),
                    ub=_mask_set(names, (1 << k) - 1 - ua_mask),
                    strict=strict,
                )


def _kripke_iso_signature(k: int, ua_mask: int, rel_idx: list[tuple[int, int]]):
    best = None
    for perm in permutations(range(k)):
        ua = frozenset(perm[i] for i in range(k) if ua_mask >> i & 1)
        rel = frozenset((perm[x], perm[y]) for x, y in rel_idx)
        key = (tuple(sorted(ua)), tuple(sorted(rel)))
        if best is None or key < best:
            best = key
    return best


def enumerate_hypersets(max_nodes: int, *, allow_overlap: bool = False,
                        dedup: bool = False, atom: str | None = None
                        ) -> Iterator[hs.HypersetModel]:
    """All membership graphs with up to ``max_nodes`` nodes.

    Every node is either an urelement or a set with any member row; type
    assignments cover the nodes, overlapping only when ``allow_overlap``.
    With ``atom`` set, every valuation of that one atom is swept too.
    """
    if not 1 <= max_nodes <= 4:
        raise ValueError("node bound must be between 1 and 4")
    type_options = ("a", "b", "ab") if allow_overlap else ("a", "b")
    seen: set = set()  # canonical forms shrink, so dedup spans all sizes
    for k in range(1, max_nodes + 1):
        names = _state_names(k, "n")
        node_options: list = [None] + list(range(1 << k))  # None = urelement
        for rows in iproduct(node_options, repeat=k):
            mem = [(names[w], names[v]) for w in range(k)
                   if rows[w] is not None for v in range(k) if rows[w] >> v & 1]
            urelements = [names[w] for w in range(k) if rows[w] is None]
            for types in iproduct(type_options, repeat=k):
                ua = [names[w] for w in range(k) if "a" in types[w]]
                ub = [names[w] for w in range(k) if "b" in types[w]]
                val_masks = range(1 << k) if atom else (0,)
                for vmask in val_masks:
                    val = {atom: _mask_set(names, vmask)} if atom else None
                    m = hs.HypersetModel(
                        nodes=names, mem=mem, ua=ua, ub=ub,
                        urelements=urelements, val=val,
                        disjoint_types=not allow_overlap)
                    if dedup:
                        sig = _hyperset_iso_signature(hs.canonicalize(m)[0])
                        if sig in seen:
                            continue
                        seen.add(sig)
                    yield m


def _hyperset_iso_signature(m: hs.HypersetModel):
    nodes = sorted(m.nodes)
    best = None
    for perm in permutations(range(len(nodes))):
        relabel = {nodes[i]: perm[i] for i in range(len(nodes))}
        key = (
            tuple(sorted((relabel[w], relabel[v]) for w, v in m.mem)),
            tuple(sorted(relabel[w] for w in m.ua)),
            tuple(sorted(relabel[w] for w in m.ub)),
            tuple(sorted(relabel[w] for w in m.urelements)),
            tuple(sorted((name, tuple(sorted(relabel[w] for w in sts)))
                         for name, sts in m.val.items())),
        )
        if best is None or key < best:
            best = key
    return best


# ---------------------------------------------------------------------------
# Vectorized relational engine: one numpy lane per candidate relation.


class _VecSpace:
    def __init__(self, k: int, ua_mask: int, bits: dict, ids: np.ndarray, heart: str):
        self.k = k
        self.ua = ua_mask
        self.ub = (1 << k) - 1 - ua_mask
        self.all = (1 << k) - 1
        self.bits = bits
        self.ids = ids
        self.heart = heart
        self.succ = []
        for x in range(k):
            row = np.zeros_like(ids)
            for y in range(k):
                if (x, y) in bits:
                    row |= bits[(x, y)] << y
            self.succ.append(row)
        self.cache: dict = {}

    def diagonal(self) -> np.ndarray:
        d = np.full_like(self.ids, self.all)
        for w in range(self.k):
            returned = np.zeros_like(self.ids)
            for z in range(self.k):
                if (w, z) in self.bits and (z, w) in self.bits:
                    returned |= self.bits[(w, z)] & self.bits[(z, w)]
            d &= ~(returned << w)
        return d & self.all


def _vec_ext(f: fm.Formula, sp: _VecSpace):
    if f in sp.cache:
        return sp.cache[f]
    result = _vec_ext_raw(f, sp)
    sp.cache[f] = result
    return result


def _vec_ext_raw(f: fm.Formula, sp: _VecSpace):
    if isinstance(f, fm.Top):
        return sp.all
    if isinstance(f, fm.Bot):
        return 0
    if isinstance(f, fm.Ua):
        return sp.ua
    if isinstance(f, fm.Ub):
        return sp.ub
    if isinstance(f, fm.Dclass):
        return sp.diagonal()
    if isinstance(f, fm.Atom):
        return 0
    if isinstance(f, fm.Not):
        return _vec_ext(f.body, sp) ^ sp.all
    if isinstance(f, fm.And):
        return _vec_ext(f.left, sp) & _vec_ext(f.right, sp)
    if isinstance(f, fm.Or):
        return _vec_ext(f.left, sp) | _vec_ext(f.right, sp)
    if isinstance(f, fm.Imp):
        return (_vec_ext(f.left, sp) ^ sp.all) | _vec_ext(f.right, sp)
    if isinstance(f, fm.Iff):
        le, re = _vec_ext(f.left, sp), _vec_ext(f.right, sp)
        return (le ^ re) ^ sp.all
    if isinstance(f, (fm.Box, fm.Heart, fm.Diamond)):
        src, tgt = (sp.ua, sp.ub) if f.direction == "ab" else (sp.ub, sp.ua)
        body = _vec_ext(f.body, sp)
        out = np.zeros_like(sp.ids)
        for x in range(sp.k):
            if not src >> x & 1:
                continue
            image = sp.succ[x] & tgt
            if isinstance(f, fm.Box):
                ok = (image & ~body & sp.all) == 0
            elif isinstance(f, fm.Diamond):
                ok = (image & body) != 0
            elif sp.heart == "frame":
                ok = image == body
            else:
                ok = image == (body & tgt)
            out |= ok.astype(np.int64) << x
        return out
    raise fm.LanguageError(f"connective {type(f).__name__} is not vectorizable")


def _vec_blocks(k: int, ua_mask: int, strict: bool):
    if strict:
        pairs = [(x, y) for x in range(k) for y in range(k)
                 if (ua_mask >> x & 1) != (ua_mask >> y & 1)]
    else:
        pairs = [(x, y) for x in range(k) for y in range(k)]
    total = 1 << len(pairs)
    for start in range(0, total, _CHUNK):
        ids = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        bits = {pair: (ids >> j) & 1 for j, pair in enumerate(pairs)}
        yield pairs, bits, ids


def _rebuild_kripke(k: int, ua_mask: int, pairs, rel_id: int, strict: bool) -> kr.KripkeModel:
    names = _state_names(k, "s")
    rel = [(names[x], names[y]) for j, (x, y) in enumerate(pairs) if rel_id >> j & 1]
    return kr.KripkeModel(states=names, rel=rel,
                          ua=_mask_set(names, ua_mask),
                          ub=_mask_set(names, (1 << k) - 1 - ua_mask),
                          strict=strict)


def two_cycle() -> kr.KripkeModel:
    """The landmark two-state frame whose states watch each other."""
    return kr.KripkeModel(states=["x", "y"], rel=[("x", "y"), ("y", "x")],
                          ua=["x"], ub=["y"])


# ---------------------------------------------------------------------------
# Bitmask membership engine
#
# Campaign sweeps evaluate the same formula family on hundreds of
# thousands of models, so the family is compiled once into a flat
# instruction list (with shared subformulas evaluated once) and run per
# model over integer bitmasks.

_OP_TOP, _OP_BOT, _OP_UA, _OP_UB, _OP_ATOM, _OP_DPLUS = range(6)
_OP_NOT, _OP_AND, _OP_OR, _OP_IMP, _OP_IFF = range(6, 11)
_OP_BOX, _OP_HEART, _OP_DIA = range(11, 14)


def _compile_program(formulas) -> tuple[list[tuple], dict]:
    """Flatten formulas into instructions; returns (ops, formula -> slot)."""
    ops: list[tuple] = []
    index: dict[fm.Formula, int] = {}

    def emit(f: fm.Formula) -> int:
        if f in index:
            return index[f]
        if isinstance(f, fm.Top):
            op = (_OP_TOP,)
        elif isinstance(f, fm.Bot):
            op = (_OP_BOT,)
        elif isinstance(f, fm.Ua):
            op = (_OP_UA,)
        elif isinstance(f, fm.Ub):
            op = (_OP_UB,)
        elif isinstance(f, fm.Atom):
            op = (_OP_ATOM, f.name)
        elif isinstance(f, fm.Dplus):
            op = (_OP_DPLUS,)
        elif isinstance(f, fm.Not):
            op = (_OP_NOT, emit(f.body))
        elif isinstance(f, fm.And):
            op = (_OP_AND, emit(f.left), emit(f.right))
        elif isinstance(f, fm.Or):
            op = (_OP_OR, emit(f.left), emit(f.right))
        elif isinstance(f, fm.Imp):
            op = (_OP_IMP, emit(f.left), emit(f.right))
        elif isinstance(f, fm.Iff):
            op = (_OP_IFF, emit(f.left), emit(f.right))
        elif isinstance(f, (fm.Box, fm.Heart, fm.Diamond)):
            code = (_OP_BOX if isinstance(f, fm.Box)
                    else _OP_HEART if isinstance(f, fm.Heart) else _OP_DIA)
            op = (code, 0 if f.direction == "ab" else 1, emit(f.body))
        else:
            raise fm.LanguageError(
                f"connective {type(f).__name__} has no mask semantics")
        ops.append(op)
        index[f] = len(ops) - 1
        return index[f]

    for f in formulas:
        emit(f)
    return ops, index


def _run_program(ops: list[tuple], rec) -> list[int]:
    """Evaluate compiled instructions on a compact model; one mask per op."""
    k, members, ure, ua, ub, pval = rec
    full = (1 << k) - 1
    rng = range(k)
    vals: list[int] = []
    append = vals.append
    for op in ops:
        code = op[0]
        if code >= _OP_BOX:
            src, tgt = (ua, ub) if op[1] == 0 else (ub, ua)
            body = vals[op[2]]
            r = 0
            if code == _OP_BOX:
                for w in rng:
                    if src >> w & 1 and members[w] & tgt & ~body == 0:
                        r |= 1 << w
            elif code == _OP_HEART:
                for w in rng:
                    if (src >> w & 1
                            and body & (members[w] | 1 << w) == members[w] & tgt):
                        r |= 1 << w
            else:
                for w in rng:
                    if src >> w & 1 and members[w] & tgt & body:
                        r |= 1 << w
            append(r)
        elif code == _OP_AND:
            append(vals[op[1]] & vals[op[2]])
        elif code == _OP_OR:
            append(vals[op[1]] | vals[op[2]])
        elif code == _OP_NOT:
            append(vals[op[1]] ^ full)
        elif code == _OP_IMP:
            append((vals[op[1]] ^ full) | vals[op[2]])
        elif code == _OP_IFF:
            append((vals[op[1]] ^ vals[op[2]]) ^ full)
        elif code == _OP_UA:
            append(ua)
        elif code == _OP_UB:
            append(ub)
        elif code == _OP_TOP:
            append(full)
        elif code == _OP_BOT:
            append(0)
        elif code == _OP_ATOM:
            append(pval if op[1] == "p" else 0)
        else:
            d = 0
            for w in rng:
                if all(not members[v] >> w & 1
                       for v in rng if members[w] >> v & 1):
                    d |= 1 << w
            append(d)
    return vals


def _compact_from_model(m: hs.HypersetModel) -> tuple:
    """Compact record for a concrete model; atom masks cover only 'p'."""
    nodes = sorted(m.nodes)
    pos = {n: i for i, n in enumerate(nodes)}
    members = tuple(sum(1 << pos[v] for v in m.members(n)) for n in nodes)
    return (len(nodes), members,
            sum(1 << pos[n] for n in m.urelements),
            sum(1 << pos[n] for n in m.ua),
            sum(1 << pos[n] for n in m.ub),
            sum(1 << pos[n] for n in m.val.get("p", frozenset())))


def _compact_hypersets(max_nodes: int, overlap: bool, with_atom: bool):
    """Compact (k, members, ure, ua, ub, pval) sweep mirroring enumerate_hypersets."""
    type_options = ("a", "b", "ab") if overlap else ("a", "b")
    for k in range(1, max_nodes + 1):
        node_options: list = [None] + list(range(1 << k))
        for rows in iproduct(node_options, repeat=k):
            members = tuple(r if r is not None else 0 for r in rows)
            ure = sum(1 << w for w in range(k) if rows[w] is None)
            for types in iproduct(type_options, repeat=k):
                ua = sum(1 << w for w in range(k) if "a" in types[w])
                ub = sum(1 << w for w in range(k) if "b" in types[w])
                for pval in (range(1 << k) if with_atom else (0,)):
                    yield (k, members, ure, ua, ub, pval)


def _rebuild_hyperset(rec) -> hs.HypersetModel:
    k, members, ure, ua, ub, pval = rec
    names = _state_names(k, "n")
    mem = [(names[w], names[v]) for w in range(k)
           for v in range(k) if members[w] >> v & 1]
    val = {"p": _mask_set(names, pval)} if pval else None
    return hs.HypersetModel(
        nodes=names, mem=mem, ua=_mask_set(names, ua), ub=_mask_set(names, ub),
        urelements=_mask_set(names, ure), val=val,
        disjoint_types=not (ua & ub))


# ---------------------------------------------------------------------------
# Campaigns


@dataclass(frozen=True)
class Campaign:
    target: str
    max_size: int = 3
    strict: bool = True
    heart: str = "frame"
    serial: bool = False
    seed: int = 0

    def __post_init__(self) -> None:
        if self.target not in TARGETS:
            raise ValueError(f"unknown campaign target {self.target!r}")
        if self.heart not in kr.HEART_SEMANTICS:
            raise ValueError(f"unknown heart semantics {self.heart!r}")


@dataclass(frozen=True)
class CampaignReport:
    lines: tuple[str, ...]
    summary: dict

    @property
    def text(self) -> str:
        return "\n".join(self.lines) + "\nSUMMARY " + json.dumps(
            self.summary, sort_keys=True) + "\n"


def run_campaign(c: Campaign) -> CampaignReport:
    runner = {
        "lemma1": _run_kripke_campaign,
        "theorem12": _run_kripke_campaign,
        "theorem22": _run_theorem22,
        "theorem23": _run_theorem23,
        "validity_lists": _run_validity_lists,
        "adjunction": _run_lattice_laws,
        "boundary_law": _run_lattice_laws,
        "lawvere_scan": _run_lawvere_scan,
    }[c.target]
    return runner(c)


def _header(c: Campaign, extra: str = "") -> list[str]:
    lines = [f"campaign: {c.target}", f"bounds: max_size={c.max_size}"]
    if c.target in ("lemma1", "theorem12"):
        lines.append(f"flags: strict={'on' if c.strict else 'off'} "
                     f"heart={c.heart} serial={'on' if c.serial else 'off'}")
    if extra:
        lines.append(extra)
    return lines


def _dump_block(lines: list[str], title: str, body: str) -> None:
    lines.append(f"{title}:")
    for row in body.rstrip("\n").splitlines():
        lines.append(f"  {row}")


_LEMMA_PART1 = fm.parse("[ab] [ba] [ab] Hba Ua -> D")
_LEMMA_PREMISE = fm.parse("Hab Ub")
_LEMMA_PART2_BODY = fm.parse("[ab] Hba (Ua & D)")


def _run_kripke_campaign(c: Campaign) -> CampaignReport:
    if not 1 <= c.max_size <= 5:
        raise ValueError("state bound must be between 1 and 5")
    totals = {"models": 0, "holds": 0, "fails": 0, "degenerate": 0}
    dumps: list[str] = []
    slots = kr.hole_slots(fm.Dclass())

    for k in range(1, c.max_size + 1):
        for ua_mask in range(1 << k):
            for pairs, bits, ids in _vec_blocks(k, ua_mask, c.strict):
                sp = _VecSpace(k, ua_mask, bits, ids, c.heart)
                keep = np.ones(len(ids), dtype=bool)
                if c.serial:
                    for x in range(k):
                        keep &= np.asarray(sp.succ[x] != 0)
                if c.target == "lemma1":
                    premise = np.asarray(_vec_ext(_LEMMA_PREMISE, sp) != 0)
                    part1 = np.asarray(_vec_ext(_LEMMA_PART1, sp) == sp.all)
                    part2 = np.asarray(_vec_ext(_LEMMA_PART2_BODY, sp) == 0)
                    fails = (premise & ~part1) | ~part2
                    holds = premise & part1 & part2
                    degenerate = ~premise & part2
                else:
                    any_hole = np.zeros(len(ids), dtype=bool)
                    for _, phi, use_box in slots:
                        mod = fm.Box if use_box else fm.Heart
                        content_b = _vec_ext(fm.And(fm.Ub(), phi), sp)
                        content_a = _vec_ext(fm.And(fm.Ua(), phi), sp)
                        witness_ab = _vec_ext(mod("ab", phi), sp)
                        witness_ba = _vec_ext(mod("ba", phi), sp)
                        any_hole |= np.asarray((content_b != 0) & (witness_ab == 0))
                        any_hole |= np.asarray((content_a != 0) & (witness_ba == 0))
                    holds = any_hole
                    fails = ~any_hole
                    degenerate = np.zeros(len(ids), dtype=bool)
                totals["models"] += int(np.count_nonzero(keep))
                totals["holds"] += int(np.count_nonzero(holds & keep))
                totals["fails"] += int(np.count_nonzero(fails & keep))
                totals["degenerate"] += int(np.count_nonzero(degenerate & keep))
                if len(dumps) < _FAIL_DUMP_CAP:
                    for idx in np.flatnonzero(fails & keep)[:_FAIL_DUMP_CAP - len(dumps)]:
                        model = _rebuild_kripke(k, ua_mask, pairs,
                                                int(ids[idx]), c.strict)
                        dumps.append(dump_kripke(model))

    lines = _header(c)
    lines.extend(_two_cycle_verdict(c.heart))
    claim = ("premise -> chain-implication, and the negative sentence is valid"
             if c.target == "lemma1" else "every model has one of the seven holes")
    lines.append(f"claim: {claim}")
    lines.append(f"models={totals['models']} holds={totals['holds']} "
                 f"fails={totals['fails']} degenerate={totals['degenerate']}")
    for i, body in enumerate(dumps, start=1):
        _dump_block(lines, f"fail-dump {i} of {totals['fails']}", body)
    summary = {"target": c.target, "max_size": c.max_size,
               "strict": c.strict, "heart": c.heart, "serial": c.serial, **totals}
    return CampaignReport(tuple(lines), summary)


def _two_cycle_verdict(heart: str) -> list[str]:
    m = two_cycle()
    record = kr.check_lemma_1(m, heart)
    holes = kr.find_holes(m, heart)
    return [
        "landmark two_cycle (x<->y): "
        f"premise={record.premise_holds} part1_valid={record.part1_valid} "
        f"part1_counterwitnesses={list(record.part1_counterwitnesses)} "
        f"part2_valid={record.part2_valid} any_hole={holes.any_hole}"
    ]


def _run_theorem22(c: Campaign) -> CampaignReport:
    if not 1 <= c.max_size <= 4:
        raise ValueError("node bound must be between 1 and 4")
    family = hs.bounded_formula_family()
    ops, index = _compile_program(family)
    slots = [index[f] for f in family]
    totals = {"models": 0, "holds": 0, "degenerate": 0,
              "states_checked": 0, "violations": 0}
    dumps: list[str] = []
    for rec in _compact_hypersets(c.max_size, overlap=False, with_atom=True):
        k, members, ure, ua, ub, pval = rec
        specials = [w for w in range(k)
                    if ure >> w & 1 or members[w] == 1 << w]
        totals["models"] += 1
        if not specials:
            totals["degenerate"] += 1
            totals["holds"] += 1
            continue
        vals = _run_program(ops, rec)
        model_violations = 0
        for f, slot in zip(family, slots):
            body = vals[slot]
            for w in specials:
                tgt = ub if ua >> w & 1 else ua
                need = members[w] & tgt
                assumes = body & (members[w] | 1 << w) == need
                believes = need & ~body == 0
                holds_here = bool(body >> w & 1)
                if assumes != (not holds_here) or not believes:
                    model_violations += 1
                    if len(dumps) < _FAIL_DUMP_CAP:
                        text = (f"state n{w}, formula {fm.to_text(f)}\n"
                                + dump_nwf(_rebuild_hyperset(rec)))
                        dumps.append(text)
        totals["states_checked"] += len(specials)
        totals["violations"] += model_violations
        if not model_violations:
            totals["holds"] += 1

    lines = _header(c, f"formula family: {len(family)} formulas, modal depth <= 2")
    lines.append("claim: quine/urelement states assume exactly their falsehoods "
                 "and believe everything")
    lines.append(f"models={totals['models']} holds={totals['holds']} "
                 f"violations={totals['violations']}")
    for i, body in enumerate(dumps, start=1):
        _dump_block(lines, f"violation {i} of {totals['violations']}", body)
    summary = {"target": c.target, "max_size": c.max_size, **totals}
    return CampaignReport(tuple(lines), summary)


def _run_theorem23(c: Campaign) -> CampaignReport:
    if not 1 <= c.max_size <= 4:
        raise ValueError("node bound must be between 1 and 4")
    totals = {"models": 0, "holds": 0, "violations": 0}
    dumps: list[str] = []
    for rec in _compact_hypersets(c.max_size, overlap=True, with_atom=False):
        k, members, ure, ua, ub, pval = rec
        full = (1 << k) - 1
        totals["models"] += 1
        model_violations = 0
        for w in range(k):
            if ure >> w & 1 or members[w] != 1 << w:
                continue
            for src, tgt in ((ua, ub), (ub, ua)):
                if not src >> w & 1:
                    continue
                need = members[w] & tgt
                assumes_top = full & (members[w] | 1 << w) == need
                if assumes_top and not (ua >> w & 1 and ub >> w & 1):
                    model_violations += 1
                    if len(dumps) < _FAIL_DUMP_CAP:
                        dumps.append(f"quine state n{w}\n"
                                     + dump_nwf(_rebuild_hyperset(rec)))
        totals["violations"] += model_violations
        if not model_violations:
            totals["holds"] += 1

    lines = _header(c)
    lines.append("claim: quine states with a true assumption sit in both type spaces")
    lines.append(f"models={totals['models']} holds={totals['holds']} "
                 f"violations={totals['violations']}")
    for i, body in enumerate(dumps, start=1):
        _dump_block(lines, f"violation {i} of {totals['violations']}", body)
    summary = {"target": c.target, "max_size": c.max_size, **totals}
    return CampaignReport(tuple(lines), summary)


def _run_validity_lists(c: Campaign) -> CampaignReport:
    if not 1 <= c.max_size <= 4:
        raise ValueError("node bound must be between 1 and 4")
    claims = ([(text, True) for text in hs.CLAIMED_VALID]
              + [(text, False) for text in hs.CLAIMED_INVALID])
    parsed = [(text, fm.parse(text), claimed) for text, claimed in claims]
    ops, index = _compile_program([f for _, f, _ in parsed])
    models = 0
    valid_counts = {text: 0 for text, _ in claims}
    counterexample: dict[str, str] = {}
    for rec in _compact_hypersets(c.max_size, overlap=False, with_atom=False):
        k = rec[0]
        full = (1 << k) - 1
        models += 1
        vals = _run_program(ops, rec)
        for text, f, claimed in parsed:
            if vals[index[f]] == full:
                valid_counts[text] += 1
            elif claimed and text not in counterexample:
                counterexample[text] = dump_nwf(_rebuild_hyperset(rec))

    lines = _header(c)
    lines.append("claimed-valid formulas: models on which each holds everywhere")
    for text, claimed in claims:
        tag = "claimed-valid" if claimed else "claimed-invalid"
        lines.append(f"  {tag}: {text}: {valid_counts[text]} of {models}")
    for text in sorted(counterexample):
        _dump_block(lines, f"first counter-model for {text}", counterexample[text])
    summary = {"target": c.target, "max_size": c.max_size, "models": models,
               "valid_counts": {t: v for t, v in sorted(valid_counts.items())}}
    return CampaignReport(tuple(lines), summary)


def _run_lattice_laws(c: Campaign) -> CampaignReport:
    if not 0 <= c.max_size <= 4:
        raise ValueError("carrier bound must be between 0 and 4")
    totals = {"topologies": 0, "checks": 0, "violations": 0}
    dumps: list[str] = []
    for n in range(c.max_size + 1):
        carrier = [f"x{i + 1}" for i in range(n)]
        for t in tp.enumerate_topologies(carrier):
            totals["topologies"] += 1
            closed = sorted(t.closed, key=lambda s: (len(s), tuple(sorted(s))))
            if c.target == "adjunction":
                for a in closed:
                    for b in closed:
                        sub = tp.subtraction(t, a, b)
                        for x in closed:
                            totals["checks"] += 1
                            if (sub <= x) != (a <= x | b):
                                totals["violations"] += 1
                                if len(dumps) < _FAIL_DUMP_CAP:
                                    dumps.append(
                                        f"A={sorted(a)} B={sorted(b)} X={sorted(x)} "
                                        f"closed={[sorted(s) for s in closed]}")
            else:
                for s in closed:
                    totals["checks"] += 2
                    neg = tp.pneg(t, s)
                    if s | neg != t.carrier:
                        totals["violations"] += 1
                        if len(dumps) < _FAIL_DUMP_CAP:
                            dumps.append(f"join law: S={sorted(s)} "
                                         f"closed={[sorted(x) for x in closed]}")
                    if s & neg != tp.boundary(t, s):
                        totals["violations"] += 1
                        if len(dumps) < _FAIL_DUMP_CAP:
                            dumps.append(f"overlap law: S={sorted(s)} "
                                         f"closed={[sorted(x) for x in closed]}")

    lines = _header(c)
    claim = ("subtraction adjunction over all closed triples"
             if c.target == "adjunction"
             else "S | ~S covers and S & ~S is the boundary, for closed S")
    lines.append(f"claim: {claim}")
    lines.append(f"topologies={totals['topologies']} checks={totals['checks']} "
                 f"violations={totals['violations']}")
    for i, body in enumerate(dumps, start=1):
        _dump_block(lines, f"violation {i} of {totals['violations']}", body)
    summary = {"target": c.target, "max_size": c.max_size, **totals}
    return CampaignReport(tuple(lines), summary)


def _run_lawvere_scan(c: Campaign) -> CampaignReport:
    if not 1 <= c.max_size <= 3:
        raise ValueError("carrier bound must be between 1 and 3")
    lines = _header(c)
    lines.append("claim: no weakly point-surjective map exists onto 2+ values; "
                 "witnesses satisfy the diagonal fixed-point identity")
    cells = []
    violations = 0
    for size_a in range(1, c.max_size + 1):
        for size_y in range(1, c.max_size + 1):
            result = lv.search_wps(size_a, size_y)
            if result.witness is None:
                cells.append({"size_a": size_a, "size_y": size_y,
                              "witness": False, "checked": result.candidates_checked})
                lines.append(f"  |A|={size_a} |Y|={size_y}: exhausted "
                             f"{result.candidates_checked} candidates, no witness")
            else:
                report = lv.check_fixed_point_property(result.witness)
                bad = (not report.applicable) or bool(report.violations)
                violations += int(bad)
                cells.append({"size_a": size_a, "size_y": size_y,
                              "witness": True, "fixed_points_ok": not bad})
                lines.append(f"  |A|={size_a} |Y|={size_y}: witness after "
                             f"{result.candidates_checked} candidates, "
                             f"fixed points {'ok' if not bad else 'VIOLATED'}")
    summary = {"target": c.target, "max_size": c.max_size,
               "cells": cells, "violations": violations}
    return CampaignReport(tuple(lines), summary)


# ---------------------------------------------------------------------------
# Fixtures


@dataclass(frozen=True)
class Claim:
    description: str
    passed: bool
    detail: str = ""


def fixture_prop24() -> hs.HypersetModel:
    return hs.HypersetModel(
        nodes=["w", "v"], mem=[("w", "v"), ("v", "w")],
        ua=["w"], ub=["v"])


def fixture_prop25() -> hs.HypersetModel:
    return hs.HypersetModel(
        nodes=["w", "v", "u", "t"],
        mem=[("w", "v"), ("w", "w"), ("v", "u"), ("u", "t")],
        ua=["w", "u"], ub=["v", "t"], urelements=["t"])


def fixture_ninestate() -> hs.HypersetModel:
    mem = [("w", "v"), ("w", "w"), ("v", "u"), ("u", "t"),
           ("r", "v"), ("r", "t"), ("r", "s"), ("r", "y"),
           ("s", "w"), ("s", "u"), ("s", "r"), ("s", "x"), ("s", "z"),
           ("x", "x"), ("x", "s"), ("y", "y"), ("y", "x"), ("z", "z"), ("z", "y")]
    return hs.HypersetModel(
        nodes=["w", "v", "u", "t", "r", "s", "x", "y", "z"], mem=mem,
        ua=["w", "u", "r", "x", "z"], ub=["v", "t", "s", "y"],
        urelements=["t"])


def fixture_quine_pair() -> hs.HypersetModel:
    return hs.HypersetModel(
        nodes=["w", "v"], mem=[("w", "w"), ("v", "v")],
        ua=["w"], ub=["v"], val={"p": ["w"], "q": ["v"]})


def fixture_singleton_quine() -> hs.HypersetModel:
    return hs.HypersetModel(
        nodes=["w"], mem=[("w", "w")], ua=["w"], ub=["w"],
        disjoint_types=False)


def fixture_example27() -> hs.HypersetModel:
    return hs.graph_to_structure(
        nodes=["w", "v", "u"], edges=[("w", "u"), ("w", "v"), ("u", "w")],
        root="w", types={"w": "a", "u": "b", "v": "b"})


def fixture_bk_topo() -> pt.ParaTopoModel:
    tau_a = tp.ClosedTopology.make(["a1", "a2"], [[], ["a1"], ["a1", "a2"]])
    tau_b = tp.ClosedTopology.make(["b1", "b2"], [[], ["b1"], ["b1", "b2"]])
    return pt.ParaTopoModel(
        tau_a, tau_b,
        t_a=[("a1", "b1"), ("a2", "b1"), ("a2", "b2")],
        t_b=[("b1", "a1"), ("b2", "a1"), ("b2", "a2")])


FIXTURES = {
    "prop24": fixture_prop24,
    "prop25": fixture_prop25,
    "ninestate": fixture_ninestate,
    "quine_pair": fixture_quine_pair,
    "singleton_quine": fixture_singleton_quine,
    "example27": fixture_example27,
    "bk_topo": fixture_bk_topo,
}


def _sat_claim(m: hs.HypersetModel, state: str, text: str, expect: bool = True) -> Claim:
    holds = state in hs.nwf_extension(m, fm.parse(text))
    verb = "satisfies" if expect else "falsifies"
    return Claim(f"{state} {verb} {text}", holds == expect,
                 detail=f"holds={holds}")


def _claims_prop24(m: hs.HypersetModel) -> list[Claim]:
    return [
        _sat_claim(m, "w", "Hab Ub"),
        _sat_claim(m, "w", "[ab] [ba] [ab] Hba Ua & !D+"),
        _sat_claim(m, "w", "D+", expect=False),
    ]


def _claims_prop25(m: hs.HypersetModel) -> list[Claim]:
    ext = hs.nwf_extension(m, fm.parse("Ua & D+"))
    return [
        Claim("Ua & D+ holds exactly at u", ext == frozenset(["u"]),
              detail=f"extension={sorted(ext)}"),
        _sat_claim(m, "v", "Hba (Ua & D+)"),
        _sat_claim(m, "w", "[ab] Hba (Ua & D+)"),
    ]


def _claims_ninestate(m: hs.HypersetModel) -> list[Claim]:
    ext = hs.nwf_extension(m, fm.parse("Ua & D+"))
    claims = [
        Claim("Ua & D+ holds exactly at u", ext == frozenset(["u"]),
              detail=f"extension={sorted(ext)}"),
        _sat_claim(m, "s", "Hba Ua"),
        _sat_claim(m, "r", "Hab Ub"),
        _sat_claim(m, "x", "[ab] Hba Ua"),
        _sat_claim(m, "y", "[ba] [ab] Hba Ua"),
        _sat_claim(m, "z", "[ab] [ba] [ab] Hba Ua"),
        _sat_claim(m, "v", "Hba (Ua & D+)"),
        _sat_claim(m, "w", "[ab] Hba (Ua & D+)"),
    ]
    report = hs.nwf_find_holes(m)
    claims.append(Claim("all seven slots are hole-free", not report.any_hole,
                        detail=", ".join(f"{s.label}={s.is_hole}"
                                         for s in report.slots)))
    return claims


def _claims_quine_pair(m: hs.HypersetModel) -> list[Claim]:
    return [
        _sat_claim(m, "w", "Hab q"),
        _sat_claim(m, "w", "Hab p", expect=False),
    ]


def _claims_singleton_quine(m: hs.HypersetModel) -> list[Claim]:
    claims = [
        Claim("[ab] Ua <-> true is valid", hs.nwf_valid(m, fm.parse("[ab] Ua <-> true"))),
        Claim("[ab] Ua <-> false fails",
              not hs.nwf_valid(m, fm.parse("[ab] Ua <-> false"))),
        _sat_claim(m, "w", "Hab true"),
        Claim("w sits in both type spaces", "w" in m.ua and "w" in m.ub),
        Claim("no true-assumption violations", not hs.check_theorem_2_3(m)),
    ]
    for text in hs.CLAIMED_INVALID:
        claims.append(Claim(f"{text} satisfied here", hs.nwf_valid(m, fm.parse(text))))
    return claims


def _claims_example27(m: hs.HypersetModel) -> list[Claim]:
    return [
        Claim("w = {u, v}", m.members("w") == frozenset(["u", "v"])),
        Claim("u = {w}", m.members("u") == frozenset(["w"])),
        Claim("v has no members", not m.members("v")),
        Claim("type spaces are Ua={w}, Ub={u,v}",
              m.ua == frozenset(["w"]) and m.ub == frozenset(["u", "v"])),
    ]


def _claims_bk_topo(m: pt.ParaTopoModel) -> list[Claim]:
    diag = pt.diagonal(m)
    wit = pt.bk_witnesses(m)
    discrete_wit = pt.bk_witnesses(pt.with_discrete_topologies(m))
    completeness = pt.is_assumption_complete(m)
    return [
        Claim("diagonal is {a1}", diag == frozenset(["a1"]),
              detail=f"diagonal={sorted(diag)}"),
        Claim("belief sentence witnessed at a1", wit == frozenset(["a1"]),
              detail=f"witnesses={sorted(wit)}"),
        Claim("no witnesses under discrete topologies", discrete_wit == frozenset(),
              detail=f"witnesses={sorted(discrete_wit)}"),
        Claim("model is not assumption-complete ({b2} missing)",
              not completeness.complete
              and ("b2",) in completeness.missing_subsets_of_b),
    ]


_FIXTURE_CLAIMS = {
    "prop24": _claims_prop24,
    "prop25": _claims_prop25,
    "ninestate": _claims_ninestate,
    "quine_pair": _claims_quine_pair,
    "singleton_quine": _claims_singleton_quine,
    "example27": _claims_example27,
    "bk_topo": _claims_bk_topo,
}


@dataclass(frozen=True)
class FixtureReport:
    claims: tuple[tuple[str, Claim], ...]

    @property
    def ok(self) -> bool:
        return all(claim.passed for _, claim in self.claims)

    @property
    def text(self) -> str:
        lines = []
        for name, claim in self.claims:
            status = "pass" if claim.passed else "FAIL"
            lines.append(f"{status} {name}: {claim.description}"
                         + (f" [{claim.detail}]" if claim.detail and not claim.passed
                            else ""))
        lines.append(f"fixtures: {'all claims pass' if self.ok else 'FAILURES PRESENT'}")
        return "\n".join(lines) + "\n"


def verify_fixtures() -> FixtureReport:
    """Re-derive every fixture's claim list; any failure is a hard error downstream."""
    rows = []
    for name in sorted(FIXTURES):
        model = FIXTURES[name]()
        for claim in _FIXTURE_CLAIMS[name](model):
            rows.append((name, claim))
    return FixtureReport(tuple(rows))
