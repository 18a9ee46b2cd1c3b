"""Nearly neighbourly families of boxes: search, classification and verification."""
from .core import (
    Box,
    Combination,
    Interval,
    adjacent,
    alpha,
    box,
    box_adjacent,
    eps_code,
    eps_vector,
    graph_counts,
    is_clique,
    iv,
    omega,
    parse_box,
    parse_combination,
    parse_interval,
    project,
)

__version__ = "0.1.0"

__all__ = [
    "Box", "Combination", "Interval", "adjacent", "alpha", "box", "box_adjacent", "eps_code", "eps_vector",
    "graph_counts", "is_clique", "iv", "omega", "parse_box", "parse_combination", "parse_interval", "project",
]
