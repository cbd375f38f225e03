"""The Klein-bottle group ``K = <x, y | x^-1 y x = y^-1>`` and its four left-orderings.

Elements are stored as ``(s, r)`` meaning ``x^s y^r``.  Since ``y x = x y^-1``,

    (s1, r1) * (s2, r2) = (s1 + s2, r1 * (-1)^s2 + r2).

``q`` is the projection onto the ``x``-exponent, with kernel ``<y>``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from twistlo.gamma import Sign
from twistlo.words import UnknownGenerator, Word, parse_word

__all__ = [
    "KLEIN_ALPHABET",
    "KleinForm",
    "OrderingId",
    "Family",
    "canonical",
    "sign_under",
    "q_image",
    "conjugate_ordering",
    "in_conjugated_cone",
]

KLEIN_ALPHABET = frozenset("xy")


@dataclass(frozen=True, order=True)
class KleinForm:
    s: int = 0
    r: int = 0

    def __mul__(self, other: KleinForm) -> KleinForm:
        flip = -1 if other.s % 2 else 1
        return KleinForm(self.s + other.s, self.r * flip + other.r)

    def inverse(self) -> KleinForm:
        flip = -1 if self.s % 2 else 1
        return KleinForm(-self.s, -self.r * flip)

    def __invert__(self) -> KleinForm:
        return self.inverse()

    def __pow__(self, k: int) -> KleinForm:
        if k < 0:
            return self.inverse() ** -k
        out, base = KleinForm(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_identity(self) -> bool:
        return self.s == 0 and self.r == 0

    def to_word(self) -> Word:
        return Word([("x", self.s), ("y", self.r)], KLEIN_ALPHABET)

    def __str__(self) -> str:
        return str(self.to_word())


class Family(enum.Enum):
    LPLUS = "L+"
    LMINUS = "L-"

    @property
    def members(self) -> frozenset:
        if self is Family.LPLUS:
            return frozenset({OrderingId.PP, OrderingId.PM})
        return frozenset({OrderingId.MP, OrderingId.MM})


class OrderingId(enum.Enum):
    """``PM`` names ``<_{+-}``: x-exponent positive first, then y-exponent negative."""

    PP = (1, 1)
    PM = (1, -1)
    MP = (-1, 1)
    MM = (-1, -1)

    @property
    def x_sign(self) -> int:
        return self.value[0]

    @property
    def y_sign(self) -> int:
        return self.value[1]

    @property
    def family(self) -> Family:
        return Family.LPLUS if self.x_sign > 0 else Family.LMINUS

    @property
    def label(self) -> str:
        return "<_{%s%s}" % ("+" if self.x_sign > 0 else "-", "+" if self.y_sign > 0 else "-")


def canonical(w: Union[Word, str]) -> KleinForm:
    """Move every ``x`` to the left using ``y^t x^e = x^e y^(t (-1)^e)``."""
    if isinstance(w, str):
        w = parse_word(w, KLEIN_ALPHABET)
    s = r = 0
    for g, e in w.letters:
        if g == "x":
            s += e
            if e % 2:
                r = -r
        elif g == "y":
            r += e
        else:
            raise UnknownGenerator(g, KLEIN_ALPHABET)
    return KleinForm(s, r)


def sign_under(e: KleinForm, o: OrderingId) -> Sign:
    if e.s:
        return Sign.POSITIVE if e.s * o.x_sign > 0 else Sign.NEGATIVE
    if e.r:
        return Sign.POSITIVE if e.r * o.y_sign > 0 else Sign.NEGATIVE
    return Sign.TRIVIAL


def q_image(e: KleinForm) -> int:
    return e.s


def conjugate_ordering(o: OrderingId, g: KleinForm) -> OrderingId:
    """The ordering whose cone is ``g^-1 P(o) g``.

    Conjugation preserves ``q``, and on ``<y>`` it inverts exactly when the
    x-exponent of ``g`` is odd.
    """
    if g.s % 2 == 0:
        return o
    return OrderingId((o.x_sign, -o.y_sign))


def in_conjugated_cone(e: KleinForm, o: OrderingId, g: KleinForm) -> bool:
    """Membership in ``g^-1 P(o) g`` straight from the definition."""
    return sign_under(g * e * g.inverse(), o) is Sign.POSITIVE
