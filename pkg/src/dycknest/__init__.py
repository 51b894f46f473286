"""Dyck nests, tight restricted-growth strings and Hamilton cycles in odd and middle-levels graphs."""

from .castling import generate_table, h_of, h_sequence, tight_nest
from .dyck import nest_to_word, word_to_nest
from .hamilton import assemble_hamilton_odd, lift_hamilton_middle
from .oddgraph import build_middle, build_odd
from .rgs import Trgs, catalan, trgs_rank, trgs_unrank
from .twofactor import lift_two_factor, uniform_two_factor

__all__ = [
    "Trgs",
    "assemble_hamilton_odd",
    "build_middle",
    "build_odd",
    "catalan",
    "generate_table",
    "h_of",
    "h_sequence",
    "lift_hamilton_middle",
    "lift_two_factor",
    "nest_to_word",
    "tight_nest",
    "trgs_rank",
    "trgs_unrank",
    "uniform_two_factor",
    "word_to_nest",
]

__version__ = "0.1.0"
