"""Qutrit UPBs: Tiles, the heptagon family, and a reducible counterexample.

Not every UPB is locally stable.  The five-state Tiles UPB in 3x3 is, and
so is every six-state subset of the seven-state heptagon UPB in 3x3x3, but
embedding Tiles into 4x4 and completing it with computational states gives
a UPB a party can reduce, which the certificate catches immediately.
"""

import numpy as np

import locstab as ls

tiles = ls.upb_tiles33()
print(f"{tiles.label}: {len(tiles)} states, stable = "
      f"{ls.is_locally_stable(tiles).stable}")
print(f"  meets the 3x3 minimum {ls.cardinality_lower_bound((3, 3)).min_size}\n")

# The heptagon family: party p of state i carries the ring vector of index
# (p-th multiplier * i) mod 7.  With multipliers (1, 2, 3) every index
# difference is orthogonal at exactly one party.
sep = ls.upb_sep333()
print(f"{sep.label}: {len(sep)} states over {sep.dims}")
for party in range(3):
    diffs = sorted(
        {
            (j - k) % 7
            for j in range(7)
            for k in range(7)
            if j != k
            and abs(ls.vec_inner(sep[j].factors[party], sep[k].factors[party])) < 1e-10
        }
    )
    print(f"  party {party} handles index differences {diffs}")

campaign = ls.subset_campaign(sep, 6)
print(f"  six-state subsets: {campaign.stable}/{campaign.checked} stable\n")

# Multipliers (1, 2, 6) look similar but give the first and third party the
# SAME differences, so differences of 3 are orthogonal nowhere.
broken = ls.heptagon_qutrit_states((1, 2, 6))
offending = ls.check_mutual_orthogonality(broken)
print(f"multipliers (1,2,6): {len(offending)} non-orthogonal ordered pairs, "
      f"differences {sorted({(j - k) % 7 for j, k, _ in offending})}\n")

# The reducible 4x4 UPB: twelve states, mutually orthogonal, yet both
# parties stall at span 14 of the required 15.
reducible = ls.upb_44_reducible()
cert = ls.is_locally_stable(reducible)
print(f"{reducible.label}: {len(reducible)} states, stable = {cert.stable}")
for record in cert.parties:
    print(f"  party {record.party}: span {record.span_dim}/{record.required}")
