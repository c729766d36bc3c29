"""Reading the support of a measure off its quadrature nodes.

When the measure lives on an arc, the nodes pile up there: as the order
grows, all but one zero per order crowd into the support, and the lone
straggler is the anchor's own zero.  Collecting the zeros of many orders
and keeping the points that keep coming back draws a picture of the
support.  Anchors placed in the gaps sharpen it.
"""

import numpy as np

from szego_quad import (
    ArcDensity,
    Mixture,
    SofFamilySpec,
    build_opuc,
    gap_zero_census,
    point_in_arcs,
    schur_from_measure,
    support_estimate,
    zero_cloud,
)

ARC = (np.pi / 2, 3 * np.pi / 2)
spec = ArcDensity(name="uniform", arc=ARC)

# 1. watch the zeros concentrate: per order, how many land inside the arc
table = build_opuc(schur_from_measure(spec, 24), 24)
cloud = zero_cloud(table, SofFamilySpec.f1(1.0), range(1, 25))
print("zeros inside the supporting arc, by order:")
for n, zs in zip(cloud.orders[3::4], cloud.zero_sets[3::4]):
    inside = int(np.sum((zs > ARC[0]) & (zs < ARC[1])))
    print(f"  order {n:2d}: {inside} of {len(zs)}")

# 2. the gap never holds more than the anchor's own zero
census = gap_zero_census(cloud, (ARC[1], ARC[0] + 2 * np.pi))
print(f"\nzeros in the open gap per order: min {census.min()}, max {census.max()}")

# 3. the estimate: accumulation arcs of the cloud, anchor ball removed,
#    sandwiched between the true arc and its 2 eps thickening
est = support_estimate(spec, [1.0], n_max=32, epsilon=0.15)
print(f"\nestimated support at n_max = {est.n_max}, eps = {est.epsilon}:")
for lo, hi in est.arcs:
    print(f"  [{lo:.4f}, {hi:.4f}]   true arc [{ARC[0]:.4f}, {ARC[1]:.4f}]")
probes = np.linspace(ARC[0] + 1e-6, ARC[1] - 1e-6, 200)
print(f"  true arc covered: {all(point_in_arcs(est.arcs, t) for t in probes)}")
slack = max(ARC[0] - min(a for a, _ in est.arcs), max(b for _, b in est.arcs) - ARC[1])
print(f"  overshoot beyond the true arc: {slack:.4f} (allowed 2 eps = {2 * est.epsilon})")

# 4. two separated arcs, two anchors placed in the two gaps; intersecting
#    the per-anchor estimates removes each anchor's own blind spot
two = Mixture(
    components=(
        (0.5, ArcDensity(name="uniform", arc=(0.5, 2.0))),
        (0.5, ArcDensity(name="uniform", arc=(3.5, 5.0))),
    )
)
est2 = support_estimate(two, [np.exp(2.75j), np.exp(5.9j)], n_max=24, epsilon=0.2)
print("\ntwo-arc mixture, anchors in both gaps:")
for lo, hi in est2.arcs:
    print(f"  [{lo:.4f}, {hi:.4f}]")
print("  true arcs [0.5000, 2.0000] and [3.5000, 5.0000]")
