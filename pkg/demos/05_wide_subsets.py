"""Square-root-sized stable subsets on many qubits.

On N = 2n-1 > 36 qubits, picking 3*ceil(sqrt(N)) states of the shift
family suffices for stability: the selected first-party indices are spread
so that every cyclic shift keeps at least two complementary pairs {x, N-x},
and complementary table entries are exactly the orthogonal ones.

Numerical note: a conflict admission multiplies N-1 factor overlaps, and on
49 parties genuine products shrink to ~2e-18 while true zeros stay exact.
The admission cutoff must therefore sit below the genuine floor; the
default 1e-10 is tuned for few-party sets.
"""

import locstab as ls

WIDE_TOL = ls.Tolerance(rank_rel=1e-8, orth_abs=1e-22)

plan, subset = ls.sqrt_subset(25)
print(f"n=25: N={plan.parties} qubits, block={plan.block}")
print(f"selected first-party indices ({len(plan.indices)}):")
print(f"  {plan.indices}\n")

pairs = ls.verify_two_pairs(plan)
print(f"complementary-pair counts per shift: min={pairs.minimum}, "
      f"ok={pairs.ok}")
print(f"  first few counts: {pairs.counts[:10]}\n")

cert = ls.is_locally_stable(subset, WIDE_TOL)
smallest = min(r.smallest_conflict_magnitude for r in cert.parties)
print(f"21-state set on 49 qubits: stable = {cert.stable}")
print(f"smallest admitted rest overlap: {smallest:.3e}\n")

# the plan holds for every odd width in (36, 201]
sizes_ok = True
pairs_ok = True
for parties in range(37, 202, 2):
    p = ls.sqrt_subset_plan((parties + 1) // 2)
    sizes_ok &= len(p.indices) == 3 * p.block
    pairs_ok &= ls.verify_two_pairs(p).ok
print(f"every odd N in (36, 201]: size 3*ceil(sqrt(N)) = {sizes_ok}, "
      f"two pairs per shift = {pairs_ok}")
