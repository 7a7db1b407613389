"""How small can a locally stable set of product states be?

A stable set of size l over dims (d_1, ..., d_n) must satisfy
l(l-1) >= sum_i (d_i^2 - 1): the conflict pairs of different parties are
disjoint, yet each party needs d_i^2 - 1 of them.  The counting audit
below shows the inequality live on a concrete set.
"""

import locstab as ls

for dims in [(2, 2), (2, 2, 2), (3, 3), (3, 3, 3), (2,) * 9]:
    report = ls.cardinality_lower_bound(dims)
    print(
        f"dims {str(dims):18s} span target {report.required_span_total:3d}  "
        f"min size {report.min_size:2d}  trivial UPB floor {report.trivial_upb_bound}"
    )
print()

# The three-qubit UPB meets its bound exactly: 4 states, and 4*3 = 12
# ordered conflict pairs cover the 3+3+3 required span dimensions.
audit = ls.conflict_audit(ls.upb_qubit3())
print(f"qubit3 audit: disjoint={audit.disjoint}, conflict counts={audit.conflict_counts}")
print(f"  l(l-1) = {audit.pair_budget} >= {audit.required_span_total} = required total\n")

# Closed-form upper bounds for uniform systems.
print("qubit systems:")
for n in (5, 7, 9, 10, 12):
    parts = [f"n={n:2d}"]
    parts.append(f"full UPB gives {ls.cardinality_upper_bounds(n, 'qubit_upb')}")
    parts.append(f"subsets give {ls.cardinality_upper_bounds(n, 'qubit_subset')}")
    print("  " + ", ".join(parts))
print(f"  n=49 (odd, wide): square-root subsets give "
      f"{ls.cardinality_upper_bounds(49, 'qubit_sqrt')}")
print()

print("qutrit systems (attained composition sizes):")
for n in range(2, 8):
    print(f"  n={n}: {ls.cardinality_upper_bounds(n, 'qutrit_composition')}"
          f"  (formula value {5 * n / 3 + 2:.2f})")
print()

# Three entangled states already do what no three product states can.
triple = ls.entangled_triple()
assert ls.is_locally_stable(triple).stable
print(f"entangled triple: {len(triple)} states, stable, below the product "
      f"minimum {ls.cardinality_lower_bound((2, 2, 2)).min_size}")
