"""Labelled decompositions of HOMFLY-PT for braid closures.

Braid diagrams and their cycles, the skein evaluator, composition-product
expansions, grading shifts, and a small lab of Z2 chain complexes.
"""
from .diagram import BraidWord, Diagram, braid_corpus, close_braid, mirror, parse_braid, writhe
from .laurent import LaurentFraction, LaurentPoly
from .skein import HomflyEvaluator, homfly, homfly_prime
from .labelings import enumerate_cycles, turn_stats
from .composition import (alexander_composition, composition_destabilized, composition_jaeger)
from .gradings import bigrading_shift, euler_alexander_check, euler_homfly_check, triple_shift

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "Diagram", "braid_corpus", "close_braid", "mirror", "parse_braid", "writhe",
    "LaurentFraction", "LaurentPoly", "HomflyEvaluator", "homfly", "homfly_prime",
    "enumerate_cycles", "turn_stats", "alexander_composition", "composition_destabilized",
    "composition_jaeger", "bigrading_shift", "euler_alexander_check", "euler_homfly_check",
    "triple_shift",
]
