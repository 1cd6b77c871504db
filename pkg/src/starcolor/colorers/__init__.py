"""Constructive star edge-colorings. Every public colorer checks its own output before returning it."""

from .complete_halin import color_complete_halin
from .cubic_halin import color_cubic_halin
from .necklace import color_necklace_odd, necklace_figure
from .partition import PartitionSpec, compose_partition
from .petersen import PetersenPartition, color_petersen_3n
from .powers import color_cycle_square, color_path_square, cycle_square_figure, star_color_cycle
from .tree import tree_star_coloring

__all__ = [
    "PartitionSpec",
    "PetersenPartition",
    "color_complete_halin",
    "color_cubic_halin",
    "color_cycle_square",
    "color_necklace_odd",
    "color_path_square",
    "color_petersen_3n",
    "compose_partition",
    "cycle_square_figure",
    "necklace_figure",
    "star_color_cycle",
    "tree_star_coloring",
]
