"""Alternating sequences, the heaps they correspond to, and polyominoes.

Run with: python3 demos/heaps_and_sequences.py
"""

from reciprocity import altseq as alt
from reciprocity import heaps as hp
from reciprocity.paths import UpDownPath

k = 3
print(f"alternating sequences with entries in 1..{k}, by length")
print("  ", [alt.count_altseq(n, k) for n in range(1, 9)])
print("  cumulative GF for k = 2:", alt.cumulative_gf(2))

seq = (3, 3, 1, 2, 2)
mh = hp.altseq_to_segment_heap(seq, k)
print(f"\nthe sequence {seq} as a heap of segments:")
print(mh.heap.render())
back = hp.segment_heap_to_altseq(mh)
print("round trip:", back, back == seq)

path = UpDownPath.from_string(0, "UUDUDD")
dh = hp.path_to_dimer_heap(path, 2, 0, 0)
print("\nthe path UUDUDD as a heap of dimers:")
print(dh.render())

print("\nparallelogram polyominoes of height at most 2, by half-perimeter")
print("  ", hp.polyomino_gf_closed(2))
