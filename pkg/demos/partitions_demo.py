#!/usr/bin/env python3
"""From a 96-word unitrade to the five-cell equitable partition and back.

The 32-word code behind each construction is completely regular with
intersection array (10,9,4;1,6,10); splitting its distance-3 shell into
the two 96-word cells refines the partition to the five-cell one, and
the reconstruction map (take neighborhoods, complement within parity
classes) recovers all five cells from the unitrade alone.
"""

from hampack.constructions import packing96_linear, packing96_z2z4
from hampack.partitions import (
    FIVE_CELL_MATRIX,
    distance_partition,
    partition_from_unitrade,
    split_distance3_cell,
)

c0, c4 = packing96_linear()

part = distance_partition(c0)
b, c = part.matrix.intersection_array()
print(f"distance partition of the 32-word code: cells {part.cell_sizes}")
print(f"completely regular with intersection array ({','.join(map(str, b))};{','.join(map(str, c))})")
print()

five = split_distance3_cell(c0, c4)
print(f"five-cell refinement: cells {five.cell_sizes}")
print("intersection matrix:")
for row in five.matrix.entries:
    print("   ", row)
assert five.matrix.entries == FIVE_CELL_MATRIX
print()

rebuilt = partition_from_unitrade(c4)
print(f"reconstruction from the unitrade alone: cells {rebuilt.cell_sizes}")
assert rebuilt.matrix.entries == FIVE_CELL_MATRIX

# the reconstruction also works for the other constructions' cells
_, c4b = packing96_z2z4()
print(f"same for the Z2Z4 unitrade: {partition_from_unitrade(c4b).cell_sizes}")
