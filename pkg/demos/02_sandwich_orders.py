"""Weak order, sorting order and Bruhat order on the same set of elements."""

# %%
from coxsort import SortingWord, build_sorting_order, compare_orders, preset, sorting_order_to_dot

for name, letters in [("I2:3", (1, 2, 1)), ("I2:4", (1, 2, 1, 2)), ("A3", (1, 2, 3, 2, 1, 2))]:
    so = build_sorting_order(SortingWord(preset(name), letters))
    c = compare_orders(so)
    print(f"{name:5s} {letters}: {len(so):2d} elements, covers weak {c.weak_cover_count}, "
          f"sorting {c.sorting_cover_count}, Bruhat {c.bruhat_cover_count}")

# %% Hasse diagram of the dihedral example; pipe it through `dot -Tpdf` to draw it.
so = build_sorting_order(SortingWord(preset("I2:4"), (1, 2, 1, 2)))
print(sorting_order_to_dot(so))

# %% Commuting letters collapse all three orders.
so = build_sorting_order(SortingWord(preset("A3"), (1, 3)))
c = compare_orders(so)
print("A3 (1,3): strict below", c.strict_below, "strict above", c.strict_above)
