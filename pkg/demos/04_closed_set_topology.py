# Closed-set topologies as co-Heyting algebras.
#
# Closed sets form a bounded distributive lattice with a subtraction
# operation adjoint to join.  Its negation ~S = Clo(complement S)
# overlaps S on the boundary, which is what makes the algebra
# paraconsistent rather than Boolean.

from bkw import topology as tp

t = tp.ClosedTopology.make("ab", [[], ["a"], ["a", "b"]])
s = frozenset("a")

print("closed family:", sorted(map(sorted, t.closed)))
print("closure {a}: ", sorted(tp.closure(t, s)))
print("interior {a}:", sorted(tp.interior(t, s)))
print("boundary {a}:", sorted(tp.boundary(t, s)))

neg = tp.pneg(t, s)
print("\n~{a} =", sorted(neg))
print("S | ~S covers:", s | neg == t.carrier)
print("S & ~S =", sorted(s & neg), "= boundary:", s & neg == tp.boundary(t, s))
print("intuitionistic negation of {a}:", sorted(tp.ineg(t, s)) or "(empty)")

# Subtraction is adjoint to join: (A \ B) <= X iff A <= X | B.
a, b = frozenset("ab"), frozenset("a")
sub = tp.subtraction(t, a, b)
print("\ncarrier \\ {a} =", sorted(sub))
for x in sorted(t.closed, key=sorted):
    assert (sub <= x) == (a <= x | b)
print("adjunction verified over every closed X")

# Exponents and products keep the family closed.
print("\nexponent {a}^carrier =", sorted(tp.exponent(t, b, a)))
prod = tp.product(t, t)
print("product carrier size:", len(prod.carrier),
      "closed sets:", len(prod.closed),
      "valid:", not tp.validate(prod))

# On a desk-scale carrier the whole space of topologies is enumerable.
count = sum(1 for _ in tp.enumerate_topologies("xyz"))
print("\ntopologies on three points:", count)
