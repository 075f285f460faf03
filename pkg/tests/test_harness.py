import random

import pytest

from bkw import formula as fm
from bkw import harness as hn
from bkw import hyperset as hs
from bkw import kripke as kr
from bkw.modelio import load_model


def test_enumerate_kripke_counts():
    assert sum(1 for _ in hn.enumerate_kripke(1)) == 2
    models = list(hn.enumerate_kripke(2))
    assert len(models) == 12  # 2 one-state + 10 two-state frames
    fixed_partition = [m for m in models
                       if m.ua == frozenset(["s0"]) and len(m.states) == 2]
    assert len(fixed_partition) == 4  # two cross edges, all subsets
    assert len(list(hn.enumerate_kripke(3))) == 110
    with pytest.raises(ValueError):
        next(hn.enumerate_kripke(6))


def test_enumerate_kripke_is_duplicate_free():
    seen = set()
    for m in hn.enumerate_kripke(3):
        key = (tuple(sorted(m.states)), tuple(sorted(m.ua)),
               tuple(sorted(m.rel)))
        assert key not in seen
        seen.add(key)


def test_enumerate_kripke_serial_filter():
    for m in hn.enumerate_kripke(3, serial=True):
        assert all(m.successors(x) for x in m.states)


def test_enumerate_kripke_iso_dedup():
    plain = sum(1 for _ in hn.enumerate_kripke(2))
    deduped = sum(1 for _ in hn.enumerate_kripke(2, dedup_iso=True))
    assert deduped < plain


def test_enumerate_hypersets_counts():
    singles = list(hn.enumerate_hypersets(1))
    # empty set, quine, urelement, each with two type choices
    assert len(singles) == 6
    kinds = {(m.kind("n0"), m.members("n0") == frozenset(["n0"]),
              "n0" in m.ua) for m in singles}
    assert len(kinds) == 6
    assert all(not v for m in singles for v in m.val.values())
    with pytest.raises(ValueError):
        next(hn.enumerate_hypersets(5))


def test_enumerate_hypersets_all_validate():
    count = 0
    for m in hn.enumerate_hypersets(2, allow_overlap=True):
        count += 1
        assert m.ua | m.ub == m.nodes
    assert count == 25 * 9 + 3 * 3  # two-node space + single-node space


def _models_isomorphic(m1, m2):
    from itertools import permutations
    n1, n2 = sorted(m1.nodes), sorted(m2.nodes)
    if len(n1) != len(n2):
        return False
    for perm in permutations(n2):
        sigma = dict(zip(n1, perm))
        if (frozenset((sigma[w], sigma[v]) for w, v in m1.mem) == m2.mem
                and frozenset(sigma[w] for w in m1.ua) == m2.ua
                and frozenset(sigma[w] for w in m1.ub) == m2.ub
                and frozenset(sigma[w] for w in m1.urelements) == m2.urelements
                and {k: frozenset(sigma[w] for w in v)
                     for k, v in m1.val.items() if v}
                == {k: v for k, v in m2.val.items() if v}):
            return True
    return False


def test_enumerate_hypersets_dedup_drops_equivalent_models():
    kept = [hs.canonicalize(m)[0] for m in hn.enumerate_hypersets(2, dedup=True)]
    full = [hs.canonicalize(m)[0] for m in hn.enumerate_hypersets(2)]
    assert len(kept) < len(full)
    # survivors are pairwise non-isomorphic
    for i, c1 in enumerate(kept):
        for c2 in kept[i + 1:]:
            assert not _models_isomorphic(c1, c2)
    # and they cover the whole space up to isomorphism
    for c in full:
        assert any(_models_isomorphic(c, survivor) for survivor in kept)


def test_campaign_validation():
    with pytest.raises(ValueError):
        hn.Campaign(target="nonsense")
    with pytest.raises(ValueError):
        hn.Campaign(target="lemma1", heart="sideways")
    with pytest.raises(ValueError):
        hn.run_campaign(hn.Campaign(target="lawvere_scan", max_size=9))


def test_campaign_reports_are_deterministic():
    c = hn.Campaign(target="theorem12", max_size=3, strict=True)
    assert hn.run_campaign(c).text == hn.run_campaign(c).text
    c2 = hn.Campaign(target="lemma1", max_size=2, strict=False)
    assert hn.run_campaign(c2).text == hn.run_campaign(c2).text


def test_fail_records_reload_and_reproduce():
    report = hn.run_campaign(hn.Campaign(target="theorem12", max_size=3))
    blocks = _dump_blocks(report.lines)
    assert blocks, "expected hole-free counter-models at this size"
    for text in blocks:
        m = load_model(text)
        assert not kr.find_holes(m).any_hole
    report = hn.run_campaign(hn.Campaign(target="lemma1", max_size=2))
    for text in _dump_blocks(report.lines):
        m = load_model(text)
        rec = kr.check_lemma_1(m)
        assert (rec.premise_holds and not rec.part1_valid) or not rec.part2_valid


def _dump_blocks(lines):
    blocks, current = [], None
    for line in lines:
        if line.startswith("fail-dump"):
            if current:
                blocks.append("\n".join(current) + "\n")
            current = []
        elif current is not None and line.startswith("  "):
            current.append(line[2:])
        elif current is not None:
            blocks.append("\n".join(current) + "\n")
            current = None
    if current:
        blocks.append("\n".join(current) + "\n")
    return blocks


def test_two_cycle_landmark_in_reports():
    for heart in ("frame", "local"):
        report = hn.run_campaign(hn.Campaign(target="lemma1", max_size=1,
                                             heart=heart))
        landmark = [l for l in report.lines if l.startswith("landmark two_cycle")]
        assert len(landmark) == 1
        assert "part1_valid=False" in landmark[0]
        assert "part2_valid=True" in landmark[0]
        assert "any_hole=False" in landmark[0]


def test_vectorized_engine_matches_reference():
    # every strict frame up to 3 states, both assumption semantics
    for heart in ("frame", "local"):
        seen = 0
        for k in range(1, 4):
            for ua_mask in range(1 << k):
                for pairs, bits, ids in hn._vec_blocks(k, ua_mask, strict=True):
                    sp = hn._VecSpace(k, ua_mask, bits, ids, heart)
                    premise = hn._vec_ext(hn._LEMMA_PREMISE, sp)
                    part1 = hn._vec_ext(hn._LEMMA_PART1, sp)
                    part2 = hn._vec_ext(hn._LEMMA_PART2_BODY, sp)
                    for idx in range(len(ids)):
                        m = hn._rebuild_kripke(k, ua_mask, pairs,
                                               int(ids[idx]), True)
                        rec = kr.check_lemma_1(m, heart)
                        assert bool(premise[idx]) == rec.premise_holds
                        assert (int(part1[idx]) == sp.all) == rec.part1_valid
                        assert (int(part2[idx]) == 0) == rec.part2_valid
                        seen += 1
        assert seen == 110


def test_vectorized_holes_match_reference_on_nonstrict_sample():
    rng = random.Random(61)
    k = 3
    for heart in ("frame", "local"):
        for ua_mask in (0b001, 0b110, 0b111):
            for pairs, bits, ids in hn._vec_blocks(k, ua_mask, strict=False):
                sp = hn._VecSpace(k, ua_mask, bits, ids, heart)
                any_hole = None
                for label, phi, use_box in kr.hole_slots(fm.Dclass()):
                    mod = fm.Box if use_box else fm.Heart
                    hole_b = ((hn._vec_ext(fm.And(fm.Ub(), phi), sp) != 0)
                              & (hn._vec_ext(mod("ab", phi), sp) == 0))
                    hole_a = ((hn._vec_ext(fm.And(fm.Ua(), phi), sp) != 0)
                              & (hn._vec_ext(mod("ba", phi), sp) == 0))
                    combined = hole_b | hole_a
                    any_hole = combined if any_hole is None else any_hole | combined
                for idx in rng.sample(range(len(ids)), 40):
                    m = hn._rebuild_kripke(k, ua_mask, pairs, int(ids[idx]), False)
                    assert bool(any_hole[idx]) == kr.find_holes(m, heart).any_hole


def test_mask_program_matches_reference_evaluator():
    family = hs.bounded_formula_family()[:200]
    ops, index = hn._compile_program(family)
    count = 0
    for m in hn.enumerate_hypersets(2, atom="p"):
        rec = hn._compact_from_model(m)
        vals = hn._run_program(ops, rec)
        nodes = sorted(m.nodes)
        for f in family:
            expected = hs.nwf_extension(m, f)
            got = frozenset(n for i, n in enumerate(nodes)
                            if vals[index[f]] >> i & 1)
            assert got == expected
        count += 1
    assert count == 412


def test_campaign_state_checks_match_reference_modalities():
    # the sweep derives per-state assumption/belief directly from the
    # body mask; both must agree with the reference evaluator
    rng = random.Random(62)
    from conftest import random_hyperset, random_relational_formula
    for _ in range(60):
        m = random_hyperset(rng, 4)
        rec = hn._compact_from_model(m)
        k, members, ure, ua, ub, pval = rec
        nodes = sorted(m.nodes)
        body_f = random_relational_formula(rng, 2)
        ops, index = hn._compile_program([body_f])
        body = hn._run_program(ops, rec)[index[body_f]]
        for w, name in enumerate(nodes):
            direction = "ab" if ua >> w & 1 else "ba"
            tgt = ub if direction == "ab" else ua
            need = members[w] & tgt
            assumes = (ua if direction == "ab" else ub) >> w & 1 \
                and body & (members[w] | 1 << w) == need
            believes = (ua if direction == "ab" else ub) >> w & 1 \
                and need & ~body == 0
            heart_ref = name in hs.nwf_extension(m, fm.Heart(direction, body_f))
            box_ref = name in hs.nwf_extension(m, fm.Box(direction, body_f))
            assert bool(assumes) == heart_ref
            assert bool(believes) == box_ref


def test_fixture_registry_all_pass():
    report = hn.verify_fixtures()
    assert report.ok
    assert len(report.claims) >= 30
    names = {name for name, _ in report.claims}
    assert names == set(hn.FIXTURES)
    assert "all claims pass" in report.text
