"""Walk the connection relation on the support of a two-band ring.

Support elements g and h are connected when a chain of support elements
multiplies from g to h (or to its inverse) without the partial products
ever leaving the symmetrized support.  Connectedness partitions the support
and each member gets a certificate that can be rechecked independently.
"""

from gradedrings import (
    BandedRingParams,
    banded_ring,
    connected,
    connection_classes,
    verify_certificate,
)

ring = banded_ring(BandedRingParams(size=3, bands=2))
support = ring.sorted_support()
print(f"dim {ring.dim}, support size {len(support)}")
print()

q = support[0]
same_band = [g for g in support if connected(ring, q, g)]
print(f"the class of {q} has {len(same_band)} elements")

inverse = ring.signature.invert(q)
target = next(g for g in same_band if g not in (q, inverse))
path = connected(ring, q, target)
print(f"a certificate from {q} to {target} multiplies, in order,")
for step in path.elements:
    print(f"  {step}")
print(f"independently verified: {verify_certificate(ring, path)}")
print()

classes = connection_classes(ring)
print(f"the support splits into {classes.count} classes:")
for block, rep in zip(classes.blocks, classes.representatives):
    print(f"  representative {rep}: {len(block)} elements")
print()
print("every stored certificate verifies:",
      all(verify_certificate(ring, p) for p in classes.certificates.values()))
