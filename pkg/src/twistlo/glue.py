"""Gluing the torus-knot exterior to the twisted I-bundle over the Klein bottle.

The peripheral subgroup ``H1`` is free abelian on ``mu`` and ``h``; the gluing
map sends ``mu -> y^-1`` and ``h -> y^-1 x^2``.  Orderings on the torus-knot
side are the conjugates ``<^g`` of the Navas ordering, with ``1 <^g w`` iff
``g^-1 w g`` is Navas-positive.  On the Klein side one of ``L+`` (m > 0) or
``L-`` (m < 0) is used, the member chosen by the sign of ``g^-1 mu g``.

Everything here checks the compatibility hypothesis of the Bludov-Glass
criterion on finite grids and samples; no ordering of the amalgam is built.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from twistlo.gamma import GAMMA_ALPHABET, Sign
from twistlo.klein import (
    Family,
    KleinForm,
    OrderingId,
    canonical,
    conjugate_ordering,
    in_conjugated_cone,
    sign_under,
)
from twistlo.twist import TwistKnotGroup
from twistlo.words import Word

__all__ = [
    "BoundaryElement",
    "Violation",
    "Report",
    "CONJUGATOR_BATTERY",
    "random_word",
    "conjugators",
    "phi",
    "choose_ordering",
    "check_compat",
    "property_s_holds",
    "verify_property_s",
    "verify_property_s_sweep",
    "cone_rows",
    "verify_meridian",
    "verify_mu_delta",
    "verify_interval",
    "verify_cofinal",
    "verify_klein_normality",
    "run_compat",
    "pi1_presentation",
]

CONJUGATOR_BATTERY = ("1", "b", "c", "b^-1", "c^-1", "b c", "c b^-1", "d", "d^-1 b")

MU_IMAGE = KleinForm(0, -1)
H_IMAGE = canonical("y^-1 x^2")


@dataclass(frozen=True, order=True)
class BoundaryElement:
    """``mu^r h^s`` in the peripheral subgroup."""

    r: int
    s: int

    def __add__(self, other: BoundaryElement) -> BoundaryElement:
        return BoundaryElement(self.r + other.r, self.s + other.s)

    def __neg__(self) -> BoundaryElement:
        return BoundaryElement(-self.r, -self.s)


@dataclass(frozen=True)
class Violation:
    g: str
    r: Optional[int]
    s: Optional[int]
    detail: str

    def to_dict(self) -> dict:
        return {"g": self.g, "r": self.r, "s": self.s, "detail": self.detail}


@dataclass
class Report:
    command: str
    m: Optional[int]
    seed: Optional[int]
    params: dict
    cases: int = 0
    violations: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self, max_violations: Optional[int] = None) -> dict:
        shown = self.violations if max_violations is None else self.violations[:max_violations]
        d = {
            "command": self.command,
            "m": self.m,
            "seed": self.seed,
            "params": dict(self.params),
            "cases": self.cases,
            "violations": [v.to_dict() for v in shown],
            "violation_count": len(self.violations),
            "pass": self.passed,
            "elapsed_ms": self.elapsed_ms,
        }
        d.update(self.extra)
        return d


class _Timer:
    def __init__(self, report: Report, enabled: bool):
        self.report = report
        self.enabled = enabled

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        if self.enabled:
            self.report.elapsed_ms = int(round((time.perf_counter() - self.t0) * 1000))


def random_word(rng: random.Random, max_length: int, alphabet: str = "bc") -> Word:
    """Uniform length in ``[0, max_length]``, each letter a random ``g^{+-1}``."""
    length = rng.randint(0, max_length)
    return Word(
        [(rng.choice(alphabet), rng.choice((1, -1))) for _ in range(length)],
        GAMMA_ALPHABET,
    )


def conjugators(seed: int, samples: int, max_length: int, battery: bool = True) -> list[Word]:
    out = [Word.parse(t, GAMMA_ALPHABET) for t in CONJUGATOR_BATTERY] if battery else []
    rng = random.Random(seed)
    out += [random_word(rng, max_length) for _ in range(samples)]
    return out


def phi(e: BoundaryElement) -> KleinForm:
    """Image of ``mu^r h^s``; equals ``(2s, -(r + s))``."""
    return MU_IMAGE ** e.r * H_IMAGE ** e.s


def choose_ordering(T: TwistKnotGroup, g: Word) -> OrderingId:
    positive = T.sign_conj(T.meridian(), g) is Sign.POSITIVE
    if T.m > 0:
        return OrderingId.PM if positive else OrderingId.PP
    return OrderingId.MM if positive else OrderingId.MP


class _Boundary:
    """Cached powers of ``mu`` and ``h`` for grid sweeps."""

    def __init__(self, T: TwistKnotGroup):
        self.T = T
        self.mu = T.meridian()
        self.h = T.fiber()
        self._mu: dict[int, Word] = {}
        self._h: dict[int, Word] = {}

    def element(self, r: int, s: int) -> Word:
        if r not in self._mu:
            self._mu[r] = self.mu ** r
        if s not in self._h:
            self._h[s] = self.h ** s
        return self._mu[r] * self._h[s]

    def grid(self, rmax: int, smax: int):
        # sorted by (s, r)
        for s in range(-smax, smax + 1):
            for r in range(-rmax, rmax + 1):
                yield r, s


def _conj_sign(B: _Boundary, g: Word, r: int, s: int) -> Sign:
    return B.T.sign_conj(B.element(r, s), g)


def check_compat(T: TwistKnotGroup, g: Word, rmax: int, smax: int, _boundary=None) -> list[Violation]:
    """Positives of ``H1`` under ``<^g`` must land in the chosen Klein cone."""
    if rmax < 1 or smax < 1:
        raise ValueError("rmax and smax must be >= 1")
    B = _boundary or _Boundary(T)
    o = choose_ordering(T, g)
    out = []
    for r, s in B.grid(rmax, smax):
        if _conj_sign(B, g, r, s) is not Sign.POSITIVE:
            continue
        image = phi(BoundaryElement(r, s))
        if sign_under(image, o) is not Sign.POSITIVE:
            out.append(
                Violation(
                    str(g), r, s,
                    f"1 <^g mu^{r} h^{s} but phi = {image} is not positive under {o.name}",
                )
            )
    return out


def property_s_holds(m: int, mu_conj: Sign, r: int, s: int) -> bool:
    """The conclusion for a positive ``mu^r h^s``: ``s`` has the sign of ``m``,
    or ``s = 0`` and ``r`` has the sign of ``g^-1 mu g``."""
    leading = s > 0 if m > 0 else s < 0
    return leading or (s == 0 and r * int(mu_conj) > 0)


def verify_property_s(T: TwistKnotGroup, g: Word, rmax: int, smax: int, _boundary=None) -> tuple[int, list[Violation]]:
    """Returns ``(cases, violations)`` over the nontrivial grid points."""
    B = _boundary or _Boundary(T)
    mu_conj = T.sign_conj(B.mu, g)
    cases, out = 0, []
    for r, s in B.grid(rmax, smax):
        if r == 0 and s == 0:
            continue
        cases += 1
        sg = _conj_sign(B, g, r, s)
        if sg is Sign.POSITIVE and not property_s_holds(T.m, mu_conj, r, s):
            out.append(Violation(str(g), r, s, f"1 <^g mu^{r} h^{s} outside the predicted half-plane"))
        elif sg is Sign.TRIVIAL:
            out.append(Violation(str(g), r, s, "nontrivial boundary element evaluated as trivial"))
    return cases, out


def verify_property_s_sweep(T: TwistKnotGroup, gs: Sequence[Word], rmax: int, smax: int,
                            seed=None, timing: bool = False) -> Report:
    rep = Report("verify", T.m, seed,
                 {"lemma": "property-s", "rmax": rmax, "smax": smax, "conjugator_count": len(gs)})
    with _Timer(rep, timing):
        B = _Boundary(T)
        for g in gs:
            cases, v = verify_property_s(T, g, rmax, smax, _boundary=B)
            rep.cases += cases
            rep.violations += v
    return rep


def cone_rows(T: TwistKnotGroup, g: Word, rmax: int, smax: int):
    """``(r, s, sign under <^g, phi image, sign of image)`` rows sorted by ``(s, r)``."""
    o = choose_ordering(T, g)
    B = _Boundary(T)
    for r, s in B.grid(rmax, smax):
        image = phi(BoundaryElement(r, s))
        yield r, s, _conj_sign(B, g, r, s), image, sign_under(image, o)


def verify_meridian(T: TwistKnotGroup, timing: bool = False) -> Report:
    rep = Report("verify", T.m, None, {"lemma": "meridian"})
    with _Timer(rep, timing):
        G = T.gamma
        expected = Sign.POSITIVE if T.m > 0 else Sign.NEGATIVE
        h_target = G.delta(1 if T.m > 0 else -1)
        checks = [
            ("mu", G.sign(T.meridian()) is expected),
            ("h", G.sign(T.fiber()) is expected),
            ("h = Delta^(+-1)", G.equal(T.fiber(), h_target)),
            ("a^2 = b^(2m+1)", G.equal(T.embed("a^2"), T.embed(f"b^{2 * T.m + 1}"))),
        ]
        rep.cases = len(checks)
        rep.violations = [Violation("1", None, None, f"{name} failed") for name, ok in checks if not ok]
        rep.extra = {"sign_mu": G.sign(T.meridian()).symbol, "sign_h": G.sign(T.fiber()).symbol}
    return rep


def verify_mu_delta(T: TwistKnotGroup, rmax: int, timing: bool = False) -> Report:
    rep = Report("verify", T.m, None, {"lemma": "mu-delta", "rmax": rmax})
    with _Timer(rep, timing):
        G = T.gamma
        mu, delta = T.meridian(), G.delta()
        for r in range(-rmax, rmax + 1):
            rep.cases += 1
            if not G.less(mu ** r, delta):
                rep.violations.append(Violation("1", r, 0, f"mu^{r} is not below Delta"))
    return rep


def verify_interval(T: TwistKnotGroup, gs: Sequence[Word], rmax: int, seed=None, timing: bool = False) -> Report:
    rep = Report("verify", T.m, seed, {"lemma": "interval", "rmax": rmax, "conjugator_count": len(gs)})
    with _Timer(rep, timing):
        G = T.gamma
        lo, hi = G.delta(-1), G.delta(1)
        mu = T.meridian()
        for g in gs:
            for r in range(-rmax, rmax + 1):
                rep.cases += 1
                w = ~g * mu ** r * g
                if not (G.less(lo, w) and G.less(w, hi)):
                    rep.violations.append(
                        Violation(str(g), r, None, "g^-1 mu^r g outside (Delta^-1, Delta)")
                    )
    return rep


def verify_cofinal(T: TwistKnotGroup, samples: int, seed: int, max_length: int = 16, timing: bool = False) -> Report:
    """Check ``Delta^ell <= w < Delta^(ell+1)`` with independent comparisons."""
    rep = Report("verify", T.m, seed, {"lemma": "cofinal", "samples": samples, "glen": max_length})
    with _Timer(rep, timing):
        G = T.gamma
        rng = random.Random(seed)
        for _ in range(samples):
            w = random_word(rng, max_length)
            ell, exact = G.cofinal_floor(w)
            rep.cases += 1
            low = G.delta(ell)
            left = G.equal(low, w) if exact else G.less(low, w)
            if not (left and G.less(w, G.delta(ell + 1))):
                rep.violations.append(Violation(str(w), None, None, f"floor bracket {ell} (exact={exact}) fails"))
    return rep


def verify_klein_normality(samples: int, seed: int, timing: bool = False, spread: int = 50) -> Report:
    """Distinctness of the four orderings, normality of L+ and L-, and the
    closed-form conjugation rule checked against the cone definition."""
    rep = Report("verify", None, seed, {"lemma": "klein", "samples": samples})
    with _Timer(rep, timing):
        probes = [canonical(t) for t in ("x", "x^-1", "y", "y^-1")]
        patterns = {o: tuple(sign_under(p, o) for p in probes) for o in OrderingId}
        rep.cases += 1
        if len(set(patterns.values())) != 4:
            rep.violations.append(Violation("1", None, None, "orderings not pairwise distinct"))
        rng = random.Random(seed)

        def rand_elt():
            return KleinForm(rng.randint(-spread, spread), rng.randint(-spread, spread))

        for _ in range(samples):
            g = rand_elt()
            tests = [rand_elt() for _ in range(8)] + probes
            for fam in Family:
                image = {conjugate_ordering(o, g) for o in fam.members}
                rep.cases += 1
                if not image <= fam.members:
                    rep.violations.append(Violation(str(g), None, None, f"{fam.value} not preserved"))
            for o in OrderingId:
                co = conjugate_ordering(o, g)
                for e in tests:
                    rep.cases += 1
                    direct = in_conjugated_cone(e, o, g)
                    if direct != (sign_under(e, co) is Sign.POSITIVE):
                        rep.violations.append(
                            Violation(str(g), None, None, f"conjugation rule wrong for {o.name} on {e}")
                        )
    return rep


def run_compat(
    T: TwistKnotGroup,
    gs: Sequence[Word],
    rmax: int,
    smax: int,
    seed=None,
    params: Optional[dict] = None,
    timing: bool = False,
) -> Report:
    """Compatibility sweep: one record per conjugator, plus branch coverage."""
    p = {"rmax": rmax, "smax": smax, "conjugator_count": len(gs)}
    p.update(params or {})
    rep = Report("compat", T.m, seed, p)
    with _Timer(rep, timing):
        B = _Boundary(T)
        records = []
        family = Family.LPLUS if T.m > 0 else Family.LMINUS
        branches = {o.name: 0 for o in family.members}
        for g in gs:
            o = choose_ordering(T, g)
            branches[o.name] += 1
            v = check_compat(T, g, rmax, smax, _boundary=B)
            cases = (2 * rmax + 1) * (2 * smax + 1)
            rep.cases += cases
            rep.violations += v
            records.append(
                {
                    "g": str(g),
                    "sign_of_conjugated_mu": T.sign_conj(B.mu, g).symbol,
                    "chosen": o.name,
                    "cases_checked": cases,
                    "violations": len(v),
                }
            )
        rep.extra = {
            "branches": dict(sorted(branches.items())),
            "unexercised_branches": sorted(k for k, c in branches.items() if c == 0),
            "conjugators": records,
        }
    return rep


def pi1_presentation(m: int) -> str:
    """The amalgam presentation with ``mu = b^-m a`` and ``h = a^2`` written out."""
    TwistKnotGroup(m)
    rels = [
        (Word([("a", 2)]), Word([("b", 2 * m + 1)])),
        (Word([("x", -1), ("y", 1), ("x", 1)]), Word([("y", -1)])),
        (Word([("b", -m), ("a", 1)]), Word([("y", -1)])),
        (Word([("a", 2)]), Word([("y", -1), ("x", 2)])),
    ]
    body = ", ".join(f"{lhs} = {rhs}" for lhs, rhs in rels)
    return f"< a, b, x, y | {body} >"
