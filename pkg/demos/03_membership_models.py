# Belief models over membership graphs: states can contain themselves.
#
# A node's believed-possible states are its members.  Quine states
# (w = {w}) assume exactly the formulas they falsify and believe
# everything; urelements are end states with no members.

from bkw import formula as fm
from bkw import hyperset as hs
from bkw.harness import fixture_ninestate, fixture_quine_pair

pair = fixture_quine_pair()   # two quine states, p at w, q at v
print("w assumes q (false at w):", "w" in hs.nwf_extension(pair, fm.parse("Hab q")))
print("w assumes p (true at w): ", "w" in hs.nwf_extension(pair, fm.parse("Hab p")))
print("w believes anything:     ", "w" in hs.nwf_extension(pair, fm.parse("[ab] false")))

# The membership diagonal D+ marks states no member of which contains
# them back.  On the nine-state counter-model it pins a single state,
# and every slot of the hole scan comes back closed.
nine = fixture_ninestate()
print("\nnine-state model: Ua & D+ =",
      sorted(hs.nwf_extension(nine, fm.parse("Ua & D+"))))
print("any hole?", hs.nwf_find_holes(nine).any_hole)

# Canonical forms: bisimilar nodes collapse, so a two-cycle of equal
# sets is the same hyperset as a single quine state.
m = hs.HypersetModel(nodes="ab", mem=[("a", "b"), ("b", "a")],
                     ua=["a", "b"], ub=[], disjoint_types=False)
canon, rep = hs.canonicalize(m)
print("\ntwo-cycle of sets canonicalizes to:", repr(canon))
print("quotient map:", rep)

# Any rooted connected digraph reads as a belief structure: children
# become members, sinks become urelements (game end states).
game = hs.graph_to_structure(
    nodes=["w", "v", "u"], edges=[("w", "u"), ("w", "v"), ("u", "w")],
    root="w", types={"w": "a", "u": "b", "v": "b"})
print("\ngraph as structure:", repr(game))
print("u can reset the game: members(u) =", sorted(game.members("u")))
