"""Antimatroids, convex geometries and the lattice checks that go with them."""

# %%
from itertools import permutations

from coxsort import (
    build_lattice_from_family,
    diamond_lattice,
    format_set_system,
    is_antimatroid,
    is_join_distributive,
    is_sn_el_labelling,
    is_supersolvable,
    line_convex_geometry,
)

geo = line_convex_geometry(4)
print("open sets of four points on a line:")
print(format_set_system(geo))
print(is_antimatroid(geo))

# %% Join-distributive, yet no ordering of the points gives an S_n EL-labelling.
lat = build_lattice_from_family(geo)
print(is_join_distributive(lat))
print("orders with EL labelling:", sum(is_sn_el_labelling(lat, order=o) for o in permutations(range(1, 5))))

# %% M3 goes the other way: supersolvable but not join-distributive.
m3 = diamond_lattice()
print("M3 supersolvable:", is_supersolvable(m3), "|", is_join_distributive(m3))
