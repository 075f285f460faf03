import random

import pytest

from bkw import modelio as mio
from bkw.harness import (enumerate_hypersets, enumerate_kripke, fixture_bk_topo,
                         fixture_ninestate, two_cycle)
from bkw.hyperset import HypersetModel
from bkw.kripke import KripkeModel
from conftest import random_hyperset, random_kripke

KRIPKE_TEXT = """\
kripke
# the two-state cycle
states: x y
Ua: x
Ub: y
P: x->y y->x
val p: x y
"""

NWF_TEXT = """\
nwf
states: w v u t
urelements: t
mem: w->v w->w v->u u->t
Ua: w u
Ub: v t
val p: w
"""

PARATOPO_TEXT = """\
paratopo
A: a1 a2
B: b1 b2
closedA: {} {a1} {a1 a2}
closedB: {} {b1} {b1 b2}
tA: a1->{b1} a2->{b1 b2}
tB: b1->{a1} b2->{a1 a2}
val p: a1 b2
"""


def test_load_kripke():
    m = mio.load_model(KRIPKE_TEXT)
    assert isinstance(m, KripkeModel)
    assert m == two_cycle().__class__(states="xy", rel=[("x", "y"), ("y", "x")],
                                      ua=["x"], ub=["y"], val={"p": "xy"})


def test_load_nwf():
    m = mio.load_model(NWF_TEXT)
    assert isinstance(m, HypersetModel)
    assert m.members("w") == frozenset(["v", "w"])
    assert m.urelements == frozenset(["t"])
    assert m.val["p"] == frozenset(["w"])


def test_load_paratopo():
    m = mio.load_model(PARATOPO_TEXT)
    assert m.image_a["a2"] == frozenset(["b1", "b2"])
    assert m.image_b["b1"] == frozenset(["a1"])
    assert frozenset(["a1"]) in m.tau_a.closed
    assert m.val["p"] == frozenset(["a1", "b2"])


def test_errors():
    with pytest.raises(mio.ModelFormatError):
        mio.load_model("")
    with pytest.raises(mio.ModelFormatError):
        mio.load_model("mystery\nstates: x\n")
    with pytest.raises(mio.ModelFormatError):  # duplicate declaration
        mio.load_model("kripke\nstates: x\nstates: y\nUa: x\nUb:\n")
    with pytest.raises(mio.ModelFormatError):  # duplicate valuation
        mio.load_model("kripke\nstates: x\nUa: x\nUb:\nval p: x\nval p: x\n")
    with pytest.raises(mio.ModelFormatError):  # reserved atom name
        mio.load_model("kripke\nstates: x\nUa: x\nUb:\nval D: x\n")
    with pytest.raises(mio.ModelFormatError):  # unknown state in relation
        mio.load_model("kripke\nstates: x\nUa: x\nUb:\nP: x->zz\n")
    with pytest.raises(mio.ModelFormatError):  # missing required key
        mio.load_model("kripke\nstates: x\nUa: x\n")
    with pytest.raises(mio.ModelFormatError):  # unknown declaration
        mio.load_model("kripke\nstates: x\nUa: x\nUb:\nmem: x->x\n")
    with pytest.raises(mio.ModelFormatError):  # bad pair syntax
        mio.load_model("kripke\nstates: x\nUa: x\nUb:\nP: x=>x\n")
    with pytest.raises(mio.ModelFormatError):  # unterminated brace set
        mio.load_model("paratopo\nA: a\nB: b\nclosedA: {a\nclosedB: {} {b}\n")


def test_reserved_valuations_rejected_for_all_reserved_words():
    for name in ("Ua", "Ub", "D", "Dt", "true", "false", "Hab", "Ba"):
        with pytest.raises(mio.ModelFormatError):
            mio.load_model(f"kripke\nstates: x\nUa: x\nUb:\nval {name}: x\n")


def test_kripke_roundtrip_enumerated():
    for m in enumerate_kripke(2, strict=True):
        assert mio.load_model(mio.dump_kripke(m)) == m
    rng = random.Random(51)
    for _ in range(30):
        m = random_kripke(rng, 4, strict=False)
        again = mio.load_model(mio.dump_kripke(m))
        assert again == m and not again.strict


def test_nwf_roundtrip():
    for m in enumerate_hypersets(2):
        assert mio.load_model(mio.dump_nwf(m)) == m
    rng = random.Random(52)
    for _ in range(30):
        m = random_hyperset(rng, 5, allow_overlap=True)
        again = mio.load_model(mio.dump_nwf(m))
        assert again == m
    nine = fixture_ninestate()
    assert mio.load_model(mio.dump_nwf(nine)) == nine


def test_paratopo_roundtrip():
    m = fixture_bk_topo()
    text = mio.dump_paratopo(m)
    again = mio.load_model(text)
    assert mio.dump_paratopo(again) == text
    assert again.tau_a.closed == m.tau_a.closed
    assert again.t_a == m.t_a and again.t_b == m.t_b


def test_dump_model_dispatch():
    assert mio.dump_model(two_cycle()).startswith("kripke")
    assert mio.dump_model(fixture_ninestate()).startswith("nwf")
    assert mio.dump_model(fixture_bk_topo()).startswith("paratopo")
    with pytest.raises(TypeError):
        mio.dump_model(42)
