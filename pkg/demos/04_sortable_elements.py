"""c-sortable elements: counts against the Catalan formula and the A3 census."""

# %%
from itertools import permutations

from coxsort import catalan_number, enumerate_sortables, format_word, preset, sortable_census

for name in ["A2", "A3", "B3", "I2:6", "H3"]:
    sys = preset(name)
    counts = sorted({len(enumerate_sortables(sys, c)) for c in permutations(sys.generators)})
    print(f"{name:5s} counts {counts}  Cat = {catalan_number(name)}")

# %% Six Coxeter words of A3, two lattice shapes.
census = sortable_census(preset("A3"), "A3")
for k, cls in enumerate(census.classes):
    print(f"class {k}:", ", ".join(format_word(w) for w in cls))
