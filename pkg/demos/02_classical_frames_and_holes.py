# Classical belief frames and the seven-slot hole scan.
#
# A frame partitions its states into the two players' type spaces and
# relates states across them.  A "hole" at a formula is a satisfiable
# property that no state of the other player assumes; the scan checks
# the seven formulas of the classical incompleteness argument.

from bkw import formula as fm
from bkw import kripke as kr
from bkw.harness import two_cycle

no_edges = kr.KripkeModel(states="xy", rel=[], ua=["x"], ub=["y"])
print("frame with no edges:")
for slot in kr.find_holes(no_edges).slots:
    print(f"  {slot.label}: {'HOLE' if slot.is_hole else 'closed'}")

# The two-cycle, where each state watches the other, closes every slot.
cycle = two_cycle()
report = kr.find_holes(cycle)
print("\ntwo-cycle frame: any hole?", report.any_hole)

# The same frame also refutes the chained-belief implication: x believes
# through three hops that the other assumes Ua, yet the diagonal D is
# empty, because the two states watch each other.
print("diagonal D:", sorted(kr.diagonal_D(cycle)) or "(empty)")
record = kr.check_lemma_1(cycle)
print("premise (someone assumes Ub):", record.premise_holds)
print("chained implication valid:", record.part1_valid,
      "counterwitnesses:", list(record.part1_counterwitnesses))
print("negative sentence valid:", record.part2_valid)

# Both assumption readings agree here.
for heart in kr.HEART_SEMANTICS:
    ext = kr.extension(cycle, fm.parse("Hba Ua"), heart)
    print(f"heart={heart}: Hba Ua holds at {sorted(ext)}")
