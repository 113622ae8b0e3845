"""Generic rectangulations and 2-clumped permutations.

The package implements the map from permutations to generic
rectangulations (through diagonal rectangulations and wall shuffles),
the weak-order congruences whose classes are its fibers, and the
generating-tree engines that count 2-clumped permutations.
"""

from rectperm.perm import (
    Clump,
    CoverMove,
    DashedPattern,
    Permutation,
    avoids_all,
    clumps_of_descent,
    covers_down,
    find_occurrence,
    is_baxter,
    is_k_clumped,
    k_clumped_pattern_count,
    k_clumped_patterns,
    statistics,
)
from rectperm.congruence import (
    GAMMA,
    RHO,
    CongruenceClass,
    CoverTest,
    class_minimum,
    congruence_class,
    gamma_cover_equivalent,
    k_cover_equivalent,
    rho_cover_equivalent,
)
from rectperm.diagrect import DiagRect, Rect, Wall, fiber_rho, is_compatible, is_generic_tiling, rho
from rectperm.genrect import (
    GenRect,
    any_compatible_permutation,
    fiber_gamma,
    gamma,
    inverse_gamma,
    is_mosaic_equivalent,
    shuffle_alphabets,
    wall_slide,
)
from rectperm.enumeration import (
    baxter_closed_form,
    brute_count_k_clumped,
    children_2clumped,
    count_1clumped,
    count_2clumped,
    encode_2clumped,
)
from rectperm.realize import Layout, extract, realize, render_svg

__version__ = "0.1.0"
