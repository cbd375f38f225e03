import functools
import itertools
import operator

import pytest

from twistlo import glue
from twistlo.gamma import Sign
from twistlo.glue import BoundaryElement, phi
from twistlo.klein import Family, KleinForm, OrderingId, canonical, q_image
from twistlo.twist import TwistKnotGroup
from twistlo.words import Word

GRID = [(r, s) for s in range(-6, 7) for r in range(-6, 7)]


def test_phi_examples():
    assert phi(BoundaryElement(1, 0)) == KleinForm(0, -1)
    assert phi(BoundaryElement(0, 1)) == KleinForm(2, -1)
    # y^-3 (y^-1 x^2)^2 folded letter by letter
    letters = ["y^-1"] * 3 + ["y^-1", "x^2"] * 2
    folded = functools.reduce(operator.mul, map(canonical, letters), KleinForm())
    assert folded == KleinForm(4, -5) == phi(BoundaryElement(3, 2))


@pytest.mark.parametrize("r, s", GRID)
def test_phi_closed_form_and_q(r, s):
    assert phi(BoundaryElement(r, s)) == KleinForm(2 * s, -(r + s))
    assert q_image(phi(BoundaryElement(r, s))) == 2 * s


def test_phi_homomorphism():
    pts = [BoundaryElement(r, s) for r, s in GRID]
    for e1, e2 in itertools.product(pts[::7], pts):
        assert phi(e1 + e2) == phi(e1) * phi(e2)


def test_choose_ordering_examples():
    assert glue.choose_ordering(TwistKnotGroup(2), Word.identity("bcd")) is OrderingId.PM
    assert glue.choose_ordering(TwistKnotGroup(-2), Word.identity("bcd")) is OrderingId.MP


def _battery_search(m):
    T = TwistKnotGroup(m)
    for g in glue.conjugators(0, 0, 0):
        if T.sign_conj(T.meridian(), g) is Sign.NEGATIVE:
            return T, g
    return T, None


def test_sign_flipping_conjugator_found():
    T, g = _battery_search(2)
    assert g is not None and str(g) == "b^-1"
    assert glue.choose_ordering(T, g) is OrderingId.PP
    T, g = _battery_search(-2)
    assert str(g) == "1"
    pos = [g for g in glue.conjugators(0, 0, 0) if T.sign_conj(T.meridian(), g) is Sign.POSITIVE]
    assert pos
    assert glue.choose_ordering(T, pos[0]) is OrderingId.MM


@pytest.mark.parametrize("m", (2, 3, -2, -3))
def test_selection_in_family(m):
    T = TwistKnotGroup(m)
    fam = Family.LPLUS if m > 0 else Family.LMINUS
    for g in glue.conjugators(m, 50, 10):
        assert glue.choose_ordering(T, g) in fam.members


def test_check_compat_examples():
    assert glue.check_compat(TwistKnotGroup(2), Word.identity("bcd"), 12, 12) == []
    assert glue.check_compat(TwistKnotGroup(-3), Word.parse("b c", "bcd"), 12, 12) == []
    with pytest.raises(ValueError):
        glue.check_compat(TwistKnotGroup(2), Word.identity("bcd"), 0, 3)


def test_check_compat_flags_wrong_family(monkeypatch):
    """A deliberately wrong choice must be caught."""
    monkeypatch.setattr(glue, "choose_ordering", lambda T, g: OrderingId.MM)
    v = glue.check_compat(TwistKnotGroup(2), Word.identity("bcd"), 3, 3)
    assert v and all((x.r, x.s) != (0, 0) for x in v)


def _positive_set(T, g, R=6):
    return {(r, s) for r in range(-R, R + 1) for s in range(-R, R + 1)
            if T.sign_conj(T.boundary_element(r, s), g) is Sign.POSITIVE}


def test_property_s_identity_conjugator():
    R = 6
    e = Word.identity("bcd")
    got = _positive_set(TwistKnotGroup(2), e, R)
    assert got == {(r, s) for r in range(-R, R + 1) for s in range(-R, R + 1) if s > 0 or (s == 0 and r > 0)}
    got = _positive_set(TwistKnotGroup(-2), e, R)
    assert got == {(r, s) for r in range(-R, R + 1) for s in range(-R, R + 1) if s < 0 or (s == 0 and r < 0)}


@pytest.mark.parametrize("m", (2, -2, 3))
def test_verify_property_s(m):
    T = TwistKnotGroup(m)
    for g in glue.conjugators(m, 20, 10):
        cases, v = glue.verify_property_s(T, g, 6, 6)
        assert cases == 13 * 13 - 1
        assert v == []


def test_verify_reports():
    assert glue.verify_meridian(TwistKnotGroup(3)).passed
    rep = glue.verify_meridian(TwistKnotGroup(3))
    assert rep.extra == {"sign_mu": "+", "sign_h": "+"}
    assert glue.verify_mu_delta(TwistKnotGroup(-2), 25).passed
    rep = glue.verify_cofinal(TwistKnotGroup(2), 1000, seed=3)
    assert rep.passed and rep.cases == 1000
    rep = glue.verify_interval(TwistKnotGroup(-4), glue.conjugators(1, 30, 10), 10)
    assert rep.passed and rep.cases == 39 * 21
    assert glue.verify_klein_normality(200, seed=1).passed


def test_run_compat_report_shape():
    T = TwistKnotGroup(2)
    gs = glue.conjugators(7, 5, 10)
    rep = glue.run_compat(T, gs, 3, 3, seed=7)
    d = rep.to_dict()
    for key in ("command", "m", "seed", "params", "cases", "violations", "pass", "elapsed_ms"):
        assert key in d
    assert d["pass"] is True and d["cases"] == len(gs) * 49
    assert set(d["branches"]) == {"PP", "PM"}
    assert d["branches"]["PP"] >= 1 and d["unexercised_branches"] == []
    assert len(d["conjugators"]) == len(gs)
    assert d["elapsed_ms"] == 0


def test_conjugators_deterministic():
    a = glue.conjugators(42, 30, 10)
    b = glue.conjugators(42, 30, 10)
    assert a == b and len(a) == len(glue.CONJUGATOR_BATTERY) + 30
    assert all(w.length() <= 10 for w in a[len(glue.CONJUGATOR_BATTERY):])


def test_presentation():
    assert glue.pi1_presentation(2) == (
        "< a, b, x, y | a^2 = b^5, x^-1 y x = y^-1, b^-2 a = y^-1, a^2 = y^-1 x^2 >"
    )
    assert glue.pi1_presentation(-3) == (
        "< a, b, x, y | a^2 = b^-5, x^-1 y x = y^-1, b^3 a = y^-1, a^2 = y^-1 x^2 >"
    )
    for m in (0, -1):
        with pytest.raises(ValueError):
            glue.pi1_presentation(m)
