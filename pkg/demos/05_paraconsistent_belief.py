# The self-referential belief sentence, satisfied paraconsistently.
#
# "a believes that b assumes that a believes b's assumption is wrong":
# Ba Xb Dt & Ea true.  Classically no state can satisfy it.  With
# closed-set topologies the diagonal Dt is negated by closure of the
# complement, and a state sitting on a boundary satisfies both a
# property and its negation -- enough to witness the sentence.

from bkw import formula as fm
from bkw import paratopo as pt
from bkw import topology as tp
from bkw.harness import fixture_bk_topo

m = fixture_bk_topo()
print("carriers: A =", sorted(m.a), " B =", sorted(m.b))
print("tA images:", {x: sorted(m.image_a[x]) for x in sorted(m.a)})
print("tB images:", {y: sorted(m.image_b[y]) for y in sorted(m.b)})

diag = pt.diagonal(m)
print("\ndiagonal Dt =", sorted(diag))
print("a1 lies on the boundary of {a1}:",
      "a1" in tp.boundary(m.tau_a, frozenset(["a1"])))
print("b1 assumes the diagonal:", sorted(pt.evaluate(m, fm.parse("Xb Dt"))))

witnesses = pt.bk_witnesses(m)
print("\nbelief-sentence witnesses:", sorted(witnesses))

# Same carriers and relations under discrete topologies: negation
# collapses to complement and the witnesses vanish.
flat = pt.with_discrete_topologies(m)
print("witnesses under discrete topologies:", sorted(pt.bk_witnesses(flat)) or "(none)")

# Assumption-completeness is a different, stronger demand; this model
# misses it because nobody assumes {b2}.
report = pt.is_assumption_complete(m)
print("\nassumption-complete:", report.complete,
      " missing:", list(report.missing_subsets_of_b))
weak = pt.is_weak_assumption_complete(m)
print("weak assumption-complete:", weak.holds,
      " first failing product set:", weak.failing_set)
