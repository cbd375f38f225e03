"""Word problem and the Navas left-ordering for ``Gamma_n = <b, c | b = c b^n c>``.

Two canonical forms are used.

* :class:`SyllableForm` lives in the isomorphic model ``<a, b | a^2 = b^(n+1)>``
  (``c = b^-n a``, ``a = b^n c``).  That group is the amalgam of ``<a>`` and
  ``<b>`` over the central ``Delta = a^2 = b^(n+1)``, so every element is
  uniquely ``Delta^ell b^j0 a b^j1 a ... a b^jk`` with ``0 <= j0 <= n``,
  interior ``ji`` in ``[1, n]`` and a last entry in ``[0, n]``.  Equality of
  group elements is equality of these forms.

* :class:`NavasForm` is ``u Delta^ell`` with ``u`` a positive ``{b, c}``-word
  in normal form.  It decides the ordering: the semigroup generated by
  ``b`` and ``c`` is the positive cone, and ``u Delta^ell`` is positive
  exactly when ``ell > 0``, or ``ell = 0`` and ``u`` is nonempty.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from twistlo.words import UnknownGenerator, Word, parse_word

__all__ = [
    "GammaGroup",
    "SyllableForm",
    "NavasForm",
    "Sign",
    "GAMMA_ALPHABET",
    "navas_conditions",
]

GAMMA_ALPHABET = frozenset("bcd")


class Sign(enum.IntEnum):
    NEGATIVE = -1
    TRIVIAL = 0
    POSITIVE = 1

    def __neg__(self) -> Sign:
        return Sign(-int(self))

    @property
    def symbol(self) -> str:
        return {-1: "-", 0: "0", 1: "+"}[int(self)]

    @property
    def label(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class SyllableForm:
    n: int
    ell: int
    head: int
    tail: tuple[int, ...] = ()

    def __post_init__(self):
        n = self.n
        if not 0 <= self.head <= n:
            raise ValueError(f"head {self.head} outside [0, {n}]")
        for i, j in enumerate(self.tail):
            lo = 0 if i == len(self.tail) - 1 else 1
            if not lo <= j <= n:
                raise ValueError(f"tail entry {j} at {i} outside [{lo}, {n}]")

    def expand(self) -> Word:
        """The denoted word over ``{b, c}``, with ``a`` written as ``b^n c``."""
        n = self.n
        letters = [("b", (n + 1) * self.ell + self.head)]
        for j in self.tail:
            letters += [("b", n), ("c", 1), ("b", j)]
        return Word(letters, "bc")


@dataclass(frozen=True)
class NavasForm:
    """``c^n0 b^m1 c^n1 ... b^mk c^nk Delta^ell``; ``pairs`` holds ``(mi, ni)``."""

    n: int
    ell: int
    n0: int = 0
    pairs: tuple[tuple[int, int], ...] = ()

    @property
    def u_is_trivial(self) -> bool:
        return self.n0 == 0 and not self.pairs

    def u_letters(self) -> list[tuple[str, int]]:
        letters = [("c", self.n0)]
        for m, k in self.pairs:
            letters += [("b", m), ("c", k)]
        return letters

    def expand(self) -> Word:
        return Word(self.u_letters() + [("b", (self.n + 1) * self.ell)], "bc")

    def is_valid(self) -> bool:
        return navas_conditions(self.n, self.n0, self.pairs)

    def __str__(self) -> str:
        w = Word(self.u_letters() + [("d", self.ell)], "bcd")
        return str(w)


def navas_conditions(n: int, n0: int, pairs) -> bool:
    """Check conditions (i)-(iii) of the Navas normal form.

    With a single b-run (k = 1) the run may reach ``n`` unless a c-run sits on
    both sides of it; for k >= 2 this is the literal statement of (iii).
    """
    k = len(pairs)
    if n0 < 0:
        return False
    if any(m < 1 for m, _ in pairs):
        return False
    # (i)
    if any(pairs[i][1] <= 0 for i in range(k - 1)):
        return False
    if k and pairs[-1][1] < 0:
        return False
    # (ii)
    for i in range(1, k - 1):
        if not 1 <= pairs[i][0] <= n - 1:
            return False
    # (iii)
    if k == 1:
        m, nk = pairs[0]
        cap = n - 1 if (n0 > 0 and nk > 0) else n
        return m <= cap
    if k >= 2:
        first_cap = n - 1 if n0 > 0 else n
        last_cap = n - 1 if pairs[-1][1] > 0 else n
        if pairs[0][0] > first_cap or pairs[-1][0] > last_cap:
            return False
    return True


WordLike = Union[Word, str]


@dataclass(frozen=True)
class GammaGroup:
    """The group ``<b, c | b = c b^n c>``; ``d`` in input words stands for ``Delta``."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be an integer >= 1, got {self.n!r}")

    @property
    def alphabet(self) -> frozenset:
        return GAMMA_ALPHABET

    def word(self, w: WordLike) -> Word:
        if isinstance(w, str):
            return parse_word(w, GAMMA_ALPHABET)
        for g, _ in w.letters:
            if g not in GAMMA_ALPHABET:
                raise UnknownGenerator(g, GAMMA_ALPHABET)
        return w.with_alphabet(GAMMA_ALPHABET)

    def delta(self, k: int = 1) -> Word:
        return Word([("b", (self.n + 1) * k)], GAMMA_ALPHABET)

    # normalization

    def syllable_form(self, w: WordLike) -> SyllableForm:
        """Right-multiply the identity form letter by letter.

        Each step is one application of ``b^(n+1) -> Delta``,
        ``a^2 -> Delta`` (or ``a^-1 -> a Delta^-1``) at the right end of an
        already canonical form, so a single left-to-right pass terminates
        with the canonical form.
        """
        n = self.n
        period = n + 1
        ell = 0
        js = [0]
        for g, e in self.word(w).letters:
            if g == "b":
                q, js[-1] = divmod(js[-1] + e, period)
                ell += q
            elif g == "d":
                ell += e
            elif e > 0:
                # c = b^-n a
                for _ in range(e):
                    j = js[-1] - n
                    if j < 0:
                        j += period
                        ell -= 1
                    if j == 0 and len(js) > 1:
                        js.pop()
                        ell += 1
                    else:
                        js[-1] = j
                        js.append(0)
            else:
                # c^-1 = a^-1 b^n = a b^n Delta^-1
                for _ in range(-e):
                    ell -= 1
                    if js[-1] == 0 and len(js) > 1:
                        js.pop()
                        ell += 1
                    else:
                        js.append(0)
                    j = js[-1] + n
                    if j >= period:
                        j -= period
                        ell += 1
                    js[-1] = j
        return SyllableForm(n, ell, js[0], tuple(js[1:]))

    def navas_form(self, s: Union[SyllableForm, WordLike]) -> NavasForm:
        """Substitute ``a = b^n c``, split b-runs above ``n`` as ``Delta b^j``."""
        if not isinstance(s, SyllableForm):
            s = self.syllable_form(s)
        n = self.n
        ell = s.ell
        if not s.tail:
            return NavasForm(n, ell, 0, ((s.head, 0),) if s.head else ())
        runs = [s.head + n] + [j + n for j in s.tail[:-1]] + [s.tail[-1]]
        for i, e in enumerate(runs):
            if e > n:
                ell += 1
                runs[i] = e - n - 1
        # runs[i] are b-exponents separated by single c's; empty runs merge c's
        n0 = 0
        pairs: list[tuple[int, int]] = []
        pending_c = 0
        for i, e in enumerate(runs):
            if i:
                pending_c += 1
            if e:
                if pairs:
                    pairs[-1] = (pairs[-1][0], pending_c)
                else:
                    n0 = pending_c
                pairs.append((e, 0))
                pending_c = 0
        if pairs:
            pairs[-1] = (pairs[-1][0], pending_c)
        else:
            n0 = pending_c
        return NavasForm(n, ell, n0, tuple(pairs))

    # queries

    def equal(self, w1: WordLike, w2: WordLike) -> bool:
        return self.syllable_form(w1) == self.syllable_form(w2)

    def sign(self, w: WordLike) -> Sign:
        f = self.navas_form(w)
        if f.u_is_trivial:
            return Sign(max(-1, min(1, f.ell)))
        return Sign.POSITIVE if f.ell >= 0 else Sign.NEGATIVE

    def less(self, w1: WordLike, w2: WordLike) -> bool:
        return self.sign(~self.word(w1) * self.word(w2)) is Sign.POSITIVE

    def compare(self, w1: WordLike, w2: WordLike) -> int:
        return int(self.sign(~self.word(w1) * self.word(w2)))

    def cofinal_floor(self, w: WordLike) -> tuple[int, bool]:
        """``(ell, exact)`` with ``Delta^ell <= w < Delta^(ell+1)``.

        ``exact`` is true iff ``w`` is itself ``Delta^ell``.
        """
        f = self.navas_form(w)
        return f.ell, f.u_is_trivial
