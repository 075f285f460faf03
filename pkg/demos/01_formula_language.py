# The shared formula language: one AST, two modal vocabularies.
#
# Relational operators: [ab]/[ba] (belief), Hab/Hba (assumption),
# <ab>/<ba> (possibility), with the diagonal atoms D (edge-based) and
# D+ (membership-based).  Topological operators: Ba/Bb, Xa/Xb, Ea/Eb
# with paraconsistent negation ~ and the diagonal atom Dt.

from bkw import formula as fm

samples = [
    "[ab] Hba (Ua & D)",          # belief about an assumption
    "[ab] [ba] [ab] Hba Ua -> D",  # the chained-belief implication
    "Ba Xb Dt & Ea true",          # the self-referential belief sentence
    "~p | !q",
    "Hab (Ua & D+) <-> false",
]

for text in samples:
    f = fm.parse(text)
    print(f"{text!r:40} depth={fm.modal_depth(f)}  prints as {fm.to_text(f)!r}")

# Printing always round-trips.
f = fm.parse("((p & q) | r) -> [ab] (Ua | D)")
assert fm.parse(fm.to_text(f)) == f
print("\nround-trip holds:", fm.to_text(f))

# Syntax errors carry positions.
try:
    fm.parse("p & ")
except fm.ParseError as err:
    print("error example:", err)
