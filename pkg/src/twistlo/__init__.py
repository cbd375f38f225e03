"""Exact left-orderings on torus-knot groups and the Klein-bottle group.

Verifies, on finite samples, the compatibility of orderings along the
torus gluing for 4-surgery on twist knots.
"""

from twistlo.words import Word, WordSyntaxError, UnknownGenerator, parse_word
from twistlo.gamma import GammaGroup, NavasForm, Sign, SyllableForm
from twistlo.twist import TwistKnotGroup
from twistlo.klein import Family, KleinForm, OrderingId

__all__ = [
    "Word",
    "WordSyntaxError",
    "UnknownGenerator",
    "parse_word",
    "GammaGroup",
    "NavasForm",
    "Sign",
    "SyllableForm",
    "TwistKnotGroup",
    "Family",
    "KleinForm",
    "OrderingId",
]
