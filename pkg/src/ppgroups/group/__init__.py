"""Words in the groups G0 and G: relations, realization, standard forms, abelianizations."""

from .abelian import (AbelImage, Subgroup, abelianize, g0_abelianize, germ_pair_image,
                      in_g0, member)
from .realize import chart, cylinder, equal_words, realize, realize_letter
from .standard import StandardForm, exponent_sums, is_standard_tail, standardize
from .words import (GenLetter, Group, GroupWord, commutator, format_word, is_constant,
                    parse, relation_instance, relation_instances, x, y)

__all__ = [
    "AbelImage", "GenLetter", "Group", "GroupWord", "StandardForm", "Subgroup",
    "abelianize", "chart", "commutator", "cylinder", "equal_words", "exponent_sums",
    "format_word", "g0_abelianize", "germ_pair_image", "in_g0", "is_constant",
    "is_standard_tail", "member", "parse", "realize", "realize_letter",
    "relation_instance", "relation_instances", "standardize", "x", "y",
]
