"""Exact and numerical checks for the spectral H(4,3)-free edge-extremal problem."""

__version__ = "0.1.0"

from .graphs import Graph, build_family, build_s_minus, build_t, from_graph6
from .h43 import brute_force_h43_oracle, contains_h43, find_h43
from .spectral import perron_root, rho_prime

__all__ = [
    "Graph", "build_family", "build_s_minus", "build_t", "from_graph6",
    "brute_force_h43_oracle", "contains_h43", "find_h43",
    "perron_root", "rho_prime", "__version__",
]
