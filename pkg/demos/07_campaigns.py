# Claim-verification campaigns: sweep a claim over an enumerated space
# and report what actually holds.  Reports are deterministic text with a
# machine-readable SUMMARY line; failing models are dumped in the model
# file format and reload verbatim.

from bkw import harness as hn
from bkw.modelio import load_model
from bkw import kripke as kr

# The hole-scan claim fails on desk-scale frames: the two-cycle and its
# relatives close every slot.
report = hn.run_campaign(hn.Campaign(target="theorem12", max_size=3))
print(report.text)

# Every dumped counter-model reproduces its verdict after a round trip.
dump = [l for l in report.lines if l.startswith("  ")]
block = "\n".join(l[2:] for l in dump[:5]) + "\n"
model = load_model(block)
print("reloaded first counter-model; any hole?", kr.find_holes(model).any_hole)

# The membership-model claims, by contrast, sweep clean.
print(hn.run_campaign(hn.Campaign(target="theorem23", max_size=2)).text)

# Lattice-law sweeps over every topology on small carriers.
print(hn.run_campaign(hn.Campaign(target="adjunction", max_size=2)).text)
