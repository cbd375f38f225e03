"""The torus-knot group ``G = <a, b | a^2 = b^(2m+1)>`` realized inside Gamma_n.

For ``m > 0`` put ``c = b a^-1``; then ``G = Gamma_{2m}`` and ``Delta = h``.
For ``m < 0`` put ``c = a b``; then ``G = Gamma_{-2m-2}`` and ``Delta = h^-1``.
Here ``mu = b^-m a`` is the meridian and ``h = a^2`` the regular fiber.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from twistlo.gamma import GAMMA_ALPHABET, GammaGroup, Sign
from twistlo.words import UnknownGenerator, Word, parse_word

__all__ = ["TwistKnotGroup", "TORUS_ALPHABET", "MIXED_ALPHABET"]

TORUS_ALPHABET = frozenset("ab")
MIXED_ALPHABET = frozenset("abcd")


@dataclass(frozen=True)
class TwistKnotGroup:
    m: int
    gamma: GammaGroup = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.m, int):
            raise TypeError(f"m must be an integer, got {self.m!r}")
        if self.m in (0, -1):
            raise ValueError(f"m = {self.m} is excluded (unknot / trefoil)")
        n = 2 * self.m if self.m > 0 else -2 * self.m - 2
        object.__setattr__(self, "gamma", GammaGroup(n))

    @property
    def n(self) -> int:
        return self.gamma.n

    @property
    def delta_equals_h(self) -> bool:
        return self.m > 0

    def _a_image(self) -> Word:
        if self.m > 0:
            return Word([("c", -1), ("b", 1)], GAMMA_ALPHABET)
        return Word([("c", 1), ("b", -1)], GAMMA_ALPHABET)

    def to_gamma(self, w: Union[Word, str]) -> Word:
        """Map a word over ``{a, b, c, d}`` into Gamma_n, substituting for ``a``."""
        if isinstance(w, str):
            w = parse_word(w, MIXED_ALPHABET)
        a = self._a_image()
        out = Word.identity(GAMMA_ALPHABET)
        for g, e in w.letters:
            if g == "a":
                out = out * a**e
            elif g in GAMMA_ALPHABET:
                out = out * Word.gen(g, e, GAMMA_ALPHABET)
            else:
                raise UnknownGenerator(g, MIXED_ALPHABET)
        return out

    def embed(self, w: Union[Word, str]) -> Word:
        if isinstance(w, str):
            w = parse_word(w, TORUS_ALPHABET)
        for g, _ in w.letters:
            if g not in TORUS_ALPHABET:
                raise UnknownGenerator(g, TORUS_ALPHABET)
        return self.to_gamma(w)

    def meridian(self) -> Word:
        return self.embed(Word([("b", -self.m), ("a", 1)], TORUS_ALPHABET))

    def fiber(self) -> Word:
        return self.embed(Word([("a", 2)], TORUS_ALPHABET))

    def boundary_element(self, r: int, s: int) -> Word:
        return self.meridian() ** r * self.fiber() ** s

    def sign_conj(self, w: Union[Word, str], g: Union[Word, str]) -> Sign:
        """Sign of ``w`` under the conjugate ordering ``<^g``: ``sign(g^-1 w g)``."""
        G = self.gamma
        g = G.word(g)
        return G.sign(~g * G.word(w) * g)
