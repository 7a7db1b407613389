"""Cyclic shift families: maximal orthogonality economy on 2n-1 qubits.

Take |1>|s_1>...|s_{n-1}>|s_{n-1}^perp>...|s_1^perp> and rotate it around
the parties.  The 2n-1 resulting states are pairwise orthogonal, but every
pair is orthogonal in exactly ONE party: C(2n-1, 2) pairs spread as n-1
relations per party.  That economy is what keeps even small subsets stable.
"""

import itertools

import locstab as ls

n = 4
family = ls.shift_family(n)
parties = len(family.dims)
print(f"shift family n={n}: {len(family)} states on {parties} qubits\n")

# count where each pair is orthogonal
per_party = [0] * parties
for j, k in itertools.combinations(range(len(family)), 2):
    orthogonal_at = [
        r
        for r in range(parties)
        if abs(ls.vec_inner(family[j].factors[r], family[k].factors[r])) < 1e-10
    ]
    assert len(orthogonal_at) == 1
    per_party[orthogonal_at[0]] += 1
print(f"orthogonal pairs per party: {per_party} (n-1 = {n - 1} each)")
print(f"total: {sum(per_party)} = C({parties},2) = {parties * (parties - 1) // 2}\n")

# prepending |0...0> turns the family into a UPB with 2n states
upb = ls.upb_shifts(n)
cert = ls.is_locally_stable(upb)
print(f"{upb.label}: {len(upb)} states, stable = {cert.stable}\n")

# deleting states removes at most one relation per party apiece, so any
# (n+2)-subset of the family still has two relations everywhere: stable
report = ls.subset_campaign(family, n + 2)
print(f"all {report.checked} subsets of size {n + 2}: "
      f"{report.stable} stable, {report.unstable} unstable")

# below the size floor nothing survives: every 3-subset of the 3-qubit UPB
# falls short of the l(l-1) >= 9 requirement
small = ls.subset_campaign(ls.upb_qubit3(), 3)
print(f"qubit3 3-subsets: {small.stable} stable, {small.unstable} unstable")
