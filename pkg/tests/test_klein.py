import random

from hypothesis import given, strategies as st

from twistlo.gamma import Sign
from twistlo.klein import (
    Family,
    KleinForm,
    OrderingId,
    canonical,
    conjugate_ordering,
    in_conjugated_cone,
    q_image,
    sign_under,
)
from twistlo.words import Word

forms = st.builds(KleinForm, st.integers(-20, 20), st.integers(-20, 20))


def test_canonical_examples():
    assert canonical("y x") == KleinForm(1, -1)
    assert canonical("1") == KleinForm(0, 0)
    assert canonical("y^-1 x^2") == KleinForm(2, -1)
    # x^2 commutes with y, so y^-1 x^2 = x^2 y^-1
    assert KleinForm(0, -1) * KleinForm(2, 0) == KleinForm(2, 0) * KleinForm(0, -1)


def test_relation():
    assert canonical("x^-1 y x") == canonical("y^-1")


@given(st.lists(st.tuples(st.sampled_from("xy"), st.integers(-4, 4)), max_size=10))
def test_canonical_is_homomorphic(ls):
    w = Word(ls, "xy")
    prod = KleinForm()
    for g, e in w.letters:
        prod = prod * (KleinForm(e, 0) if g == "x" else KleinForm(0, e))
    assert canonical(w) == prod
    assert canonical(w.with_alphabet("xy") * Word.identity("xy")) == prod


@given(forms, forms, forms)
def test_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert (a.inverse() * a).is_identity()
    assert canonical(a.to_word()) == a


def test_sign_under_examples():
    assert sign_under(KleinForm(1, 0), OrderingId.PP) is Sign.POSITIVE
    assert sign_under(KleinForm(0, -1), OrderingId.PM) is Sign.POSITIVE
    for o in OrderingId:
        assert sign_under(KleinForm(), o) is Sign.TRIVIAL


def test_q_image():
    assert q_image(KleinForm(2, -3)) == 2
    assert q_image(canonical("y^-1 x^2")) == 2
    assert q_image(KleinForm(0, 7)) == 0


def test_orderings_distinct():
    probes = [canonical(t) for t in ("x", "x^-1", "y", "y^-1")]
    patterns = {tuple(sign_under(p, o) for p in probes) for o in OrderingId}
    assert len(patterns) == 4


def test_families():
    assert Family.LPLUS.members == {OrderingId.PP, OrderingId.PM}
    assert Family.LMINUS.members == {OrderingId.MP, OrderingId.MM}
    for o in OrderingId:
        assert o in o.family.members


@given(forms, forms, forms, st.sampled_from(list(OrderingId)))
def test_left_invariance(g, a, b, o):
    def lt(u, v):
        return sign_under(u.inverse() * v, o) is Sign.POSITIVE

    assert lt(a, b) == lt(g * a, g * b)


def test_left_order_seeded():
    rng = random.Random(0)
    def rf():
        return KleinForm(rng.randint(-9, 9), rng.randint(-9, 9))
    for _ in range(500):
        g, a, b = rf(), rf(), rf()
        for o in OrderingId:
            s1 = sign_under(a.inverse() * b, o)
            s2 = sign_under((g * a).inverse() * (g * b), o)
            assert s1 is s2


@given(forms, forms, st.sampled_from(list(OrderingId)))
def test_cone_axioms(a, b, o):
    if sign_under(a, o) is Sign.POSITIVE and sign_under(b, o) is Sign.POSITIVE:
        assert sign_under(a * b, o) is Sign.POSITIVE
    assert sign_under(a.inverse(), o) == -sign_under(a, o)


def test_conjugate_ordering_examples():
    assert conjugate_ordering(OrderingId.PP, KleinForm(1, 0)) is OrderingId.PM
    for o in OrderingId:
        assert conjugate_ordering(o, KleinForm(0, 5)) is o
        assert conjugate_ordering(o, KleinForm()) is o


def test_conjugation_by_x_flips_y_clause():
    x = KleinForm(1, 0)
    probes = [canonical(t) for t in ("y", "y^-1", "x")]
    members = [in_conjugated_cone(e, OrderingId.PP, x) for e in probes]
    assert members == [False, True, True]
    y = KleinForm(0, 1)
    for o in OrderingId:
        assert [in_conjugated_cone(e, o, y) for e in probes] == [
            sign_under(e, o) is Sign.POSITIVE for e in probes
        ]


@given(forms, forms, st.sampled_from(list(OrderingId)))
def test_conjugation_rule_matches_definition(g, e, o):
    co = conjugate_ordering(o, g)
    assert in_conjugated_cone(e, o, g) == (sign_under(e, co) is Sign.POSITIVE)


def test_families_normal():
    rng = random.Random(1)
    for _ in range(200):
        g = KleinForm(rng.randint(-50, 50), rng.randint(-50, 50))
        for fam in Family:
            assert {conjugate_ordering(o, g) for o in fam.members} == fam.members


def test_string_rendering():
    assert str(KleinForm(2, -1)) == "x^2 y^-1"
    assert str(KleinForm()) == "1"
    assert OrderingId.PM.label == "<_{+-}"
