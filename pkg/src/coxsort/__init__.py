"""Sorting orders on Coxeter groups, antimatroids and join-distributive lattices."""

from . import convexity, coxeter, cyclic, field, lattice, permutations, sorting_order, subwords
from .convexity import *  # noqa: F401,F403
from .coxeter import *  # noqa: F401,F403
from .cyclic import *  # noqa: F401,F403
from .field import *  # noqa: F401,F403
from .lattice import *  # noqa: F401,F403
from .permutations import *  # noqa: F401,F403
from .sorting_order import *  # noqa: F401,F403
from .subwords import *  # noqa: F401,F403

__version__ = "0.1.0"

# submodule names stay out of star imports (``permutations`` would shadow itertools)
__all__ = [
    name
    for mod in (field, coxeter, convexity, subwords, lattice, sorting_order, cyclic, permutations)
    for name in mod.__all__
]
