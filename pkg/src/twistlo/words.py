"""Freely reduced words over small single-letter alphabets.

Text grammar::

    word   := (letter ('^' integer)?)*
    letter := one of the alphabet's symbols (a b c x y d)

Tokens are separated by whitespace.  ``1`` is accepted as the identity.
Serialization uses single spaces and omits ``^1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

__all__ = [
    "ALL_GENERATORS",
    "Word",
    "WordSyntaxError",
    "UnknownGenerator",
    "AlphabetMismatch",
    "parse_word",
    "concat",
    "invert",
    "reduce_letters",
]

ALL_GENERATORS = frozenset("abcxyd")

Letter = Tuple[str, int]

_TOKEN = re.compile(r"([A-Za-z]|1)(?:\^([+-]?\d+))?")
_SPACE = re.compile(r"\s+")


class WordSyntaxError(ValueError):
    def __init__(self, text: str, position: int, message: str = "unexpected input"):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class UnknownGenerator(ValueError):
    def __init__(self, name: str, alphabet: Iterable[str]):
        self.name = name
        self.alphabet = frozenset(alphabet)
        super().__init__(
            f"unknown generator {name!r}; expected one of {' '.join(sorted(self.alphabet))}"
        )


class AlphabetMismatch(ValueError):
    pass


def reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Merge adjacent equal generators and drop zero exponents (stack-based)."""
    out: list[Letter] = []
    for gen, exp in letters:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            total = out[-1][1] + exp
            out.pop()
            if total:
                out.append((gen, total))
        else:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """An immutable freely reduced word.

    ``letters`` is a tuple of ``(generator, exponent)`` pairs with nonzero
    exponents and distinct adjacent generators; the constructor normalizes
    whatever it is given.
    """

    letters: tuple[Letter, ...]
    alphabet: frozenset

    def __init__(self, letters: Iterable[Letter] = (), alphabet: Iterable[str] = ALL_GENERATORS):
        alphabet = frozenset(alphabet)
        letters = tuple((str(g), int(e)) for g, e in letters)
        for gen, _ in letters:
            if gen not in alphabet:
                raise UnknownGenerator(gen, alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "letters", reduce_letters(letters))

    @classmethod
    def _trusted(cls, letters: tuple[Letter, ...], alphabet: frozenset) -> Word:
        # letters already reduced and drawn from alphabet
        w = object.__new__(cls)
        object.__setattr__(w, "alphabet", alphabet)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def identity(cls, alphabet: Iterable[str] = ALL_GENERATORS) -> Word:
        return cls((), alphabet)

    @classmethod
    def gen(cls, name: str, exp: int = 1, alphabet: Iterable[str] = ALL_GENERATORS) -> Word:
        return cls(((name, exp),), alphabet)

    @classmethod
    def parse(cls, text: str, alphabet: Iterable[str] = ALL_GENERATORS) -> Word:
        return parse_word(text, alphabet)

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        """Number of syllables, not the letter length."""
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def length(self) -> int:
        """Length in the free group: sum of absolute exponents."""
        return sum(abs(e) for _, e in self.letters)

    def __mul__(self, other: Word) -> Word:
        return concat(self, other)

    def __invert__(self) -> Word:
        return invert(self)

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return invert(self) ** -k
        result = Word.identity(self.alphabet)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def with_alphabet(self, alphabet: Iterable[str]) -> Word:
        alphabet = frozenset(alphabet)
        if alphabet == self.alphabet:
            return self
        return Word(self.letters, alphabet)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def parse_word(text: str, alphabet: Iterable[str] = ALL_GENERATORS) -> Word:
    """Parse ``text`` into a freely reduced :class:`Word`.

    >>> parse_word("b^-2 c", "bc").letters
    (('b', -2), ('c', 1))
    >>> parse_word("b^3 b^-1", "bc").letters
    (('b', 2),)
    """
    alphabet = frozenset(alphabet)
    letters: list[Letter] = []
    pos = 0
    end = len(text)
    while pos < end:
        space = _SPACE.match(text, pos)
        if space:
            pos = space.end()
            continue
        tok = _TOKEN.match(text, pos)
        if not tok:
            raise WordSyntaxError(text, pos)
        name, exp = tok.group(1), tok.group(2)
        if name == "1":
            if exp is not None:
                raise WordSyntaxError(text, tok.start(2) - 1, "exponent on identity")
        elif name not in alphabet:
            raise UnknownGenerator(name, alphabet)
        else:
            letters.append((name, int(exp) if exp is not None else 1))
        pos = tok.end()
    return Word(letters, alphabet)


def concat(w1: Word, w2: Word) -> Word:
    if w1.alphabet != w2.alphabet:
        raise AlphabetMismatch(
            f"cannot multiply words over {sorted(w1.alphabet)} and {sorted(w2.alphabet)}"
        )
    left, right = list(w1.letters), w2.letters
    i = 0
    # both sides are reduced, so cancellation only happens at the seam
    while left and i < len(right) and left[-1][0] == right[i][0]:
        gen, total = left[-1][0], left[-1][1] + right[i][1]
        left.pop()
        i += 1
        if total:
            left.append((gen, total))
            break
    return Word._trusted(tuple(left) + right[i:], w1.alphabet)


def invert(w: Word) -> Word:
    return Word._trusted(tuple((g, -e) for g, e in reversed(w.letters)), w.alphabet)
