"""Exact computation in the groups G0 and G generated by x_s and y_s, and in
groups of piecewise projective homeomorphisms of the real line."""

from .errors import DomainError
from .group import GroupWord, equal_words, parse, realize, standardize
from .moebius import ProjMap
from .numeric import INF, NEG_INF, QuadExt
from .piecewise import PiecewisePP
from .symdyn import EvpSeq, Phi, phi, run_word

__all__ = [
    "DomainError", "EvpSeq", "GroupWord", "INF", "NEG_INF", "Phi", "PiecewisePP",
    "ProjMap", "QuadExt", "equal_words", "parse", "phi", "realize", "run_word",
    "standardize",
]
