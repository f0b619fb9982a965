"""Planar diagrams: enumeration, composition, loops, blobs, and the cut.

Run with:  python demos/01_diagram_playground.py
"""

from tlblob import (
    BlobPairing,
    BlobParams,
    blob_e,
    compose_blob,
    compose_tl,
    cut,
    enumerate_blob,
    enumerate_tl,
    generator_u,
    identity,
    propagating_number,
)

# ---------------------------------------------------------------------------
# Plain diagrams are non-crossing pairings of boundary nodes.  Stacking two
# diagrams traces chains through the junction; closed loops are discarded
# but counted, since each one is worth a factor [2] = q + 1/q.
# ---------------------------------------------------------------------------
u1 = generator_u(1, 2)
print("the cup-cap generator on two strands:", u1)

res = compose_tl(u1, u1)
print("stacked on itself:", res.diagram, "with", res.plain_loops, "loop dropped")

print()
print("all of D(3,3):")
for d in enumerate_tl(3, 3):
    print(f"  {d}   through-lines: {propagating_number(d)}")

# Every diagram splits into an upper and a lower half meeting in exactly its
# through-lines, and the halves recompose without creating loops.
d = compose_tl(generator_u(1, 4), generator_u(3, 4)).diagram
up, down = cut(d)
print()
print("cutting", d)
print("  upper half:", up)
print("  lower half:", down)
assert compose_tl(up, down).diagram == d

# ---------------------------------------------------------------------------
# Blob diagrams decorate lines that can reach the western wall.  Two blobs
# on one line merge into one with a factor delta_e; a closed loop carrying a
# blob evaluates to gamma instead of [2].
# ---------------------------------------------------------------------------
params = BlobParams.integral_form(m=2)
e = blob_e(1)
res, scalar = compose_blob(e, e, params)
print()
print("blob squared:", res.diagram, "->", res.blob_merges, "merge, scalar", scalar)

stacked, _ = compose_blob(BlobPairing(generator_u(1, 2)), blob_e(2))
res, scalar = compose_blob(stacked.diagram, BlobPairing(generator_u(1, 2)), params)
print("cup-cap . blob . cup-cap:", res.diagram)
print("  the blob rode onto a closed loop:", res.blob_loops, "-> scalar", scalar)

counts = [len(enumerate_blob(n)) for n in range(1, 6)]
print()
print("blob diagram counts for n = 1..5:", counts, "(central binomials)")
