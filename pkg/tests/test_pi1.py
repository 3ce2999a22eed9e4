"""Free-group action: generator tables, relator corpus, equality engines."""

import random

import pytest

from dehn import (
    ENGINE_CLOSED,
    ENGINE_HOMOLOGY_FAITHFUL,
    ENGINE_HOMOLOGY_NECESSARY,
    ENGINE_PI1,
    SurfaceSig,
    TwistWord,
    WordGrowthExceeded,
    abelianize,
    apply_word,
    boundary_word,
    closed_equal,
    decide_equal,
    dehn_reduce,
    is_trivial_rel_boundary,
    mcg_equal_rel_boundary,
)
from dehn.freegroup import invert_word, multiply, reduce_word
from dehn.homology import mat_vec, word_matrix
from dehn.pi1 import generator_images
from dehn.surface import standard_curves

T1 = SurfaceSig(1, 1)
T2 = SurfaceSig(2, 1)


def word(sig, names):
    return TwistWord.from_names(sig, names)


def test_boundary_word():
    assert boundary_word(1) == (1, 2, -1, -2)
    assert boundary_word(2) == (1, 2, -1, -2, 3, 4, -3, -4)


def test_genus_one_tables():
    # the textbook action on the free group <x, y>
    assert generator_images(word(T1, "a1")) == ((1,), (2, 1))
    assert generator_images(word(T1, "b1")) == ((1, -2), (2,))
    assert generator_images(word(T1, "a1^-1")) == ((1,), (2, -1))
    assert generator_images(word(T1, "b1^-1")) == ((1, 2), (2,))


def test_genus_two_extra_curve_tables():
    assert generator_images(word(T2, "d2")) == (
        (-3, 1, 3),
        (-3, -1, 3, 1, 2, 1, 3),
        (-3, -1, 3, 1, 3),
        (4, 1, 3),
    )
    assert generator_images(word(T2, "e2")) == (
        (1,),
        (3, 4, 3, -4, -3, 2, 1),
        (3,),
        (4, 3, -4, -3, 2, 1, -2, 3, 4),
    )


def test_delta_is_boundary_conjugation():
    for g in (1, 2, 3):
        sig = SurfaceSig(g, 1)
        delta = word(sig, "delta")
        bw = boundary_word(g)
        for k in range(1, 2 * g + 1):
            assert apply_word(delta, (k,)) == multiply(invert_word(bw), (k,), bw)
        # and its inverse conjugates the other way
        for k in range(1, 2 * g + 1):
            assert apply_word(word(sig, "delta^-1"), (k,)) == multiply(bw, (k,), invert_word(bw))


def test_boundary_word_is_fixed_by_every_twist():
    for g in (1, 2, 3):
        sig = SurfaceSig(g, 1)
        bw = boundary_word(g)
        for curve in standard_curves(sig):
            for s in ("", "^-1"):
                assert apply_word(word(sig, f"{curve}{s}"), bw) == bw


def test_inverse_pairs_are_trivial():
    for curve in standard_curves(T2):
        w = word(T2, f"{curve} {curve}^-1")
        assert is_trivial_rel_boundary(w)
    # also with a conjugated letter
    from dehn.surface import Twist

    t = Twist("b1", 1, (("a1", 1), ("a2", -1)))
    w = TwistWord(T2, (t, t.inverse()))
    assert is_trivial_rel_boundary(w)


def test_outputs_are_reduced():
    rng = random.Random(11)
    curves = standard_curves(T2)
    for _ in range(20):
        names = [(rng.choice(curves), rng.choice((1, -1))) for _ in range(5)]
        w = TwistWord.from_names(T2, names)
        for k in range(1, 5):
            z = apply_word(w, (k,))
            assert z == reduce_word(z)


BRAID_PAIRS = [("a1", "b1"), ("b1", "a2"), ("a2", "b2"), ("d2", "b2"), ("b2", "e2")]
COMMUTING_PAIRS = [
    ("a1", "a2"), ("a1", "b2"), ("b1", "b2"), ("d2", "e2"),
    ("d2", "a1"), ("d2", "b1"), ("d2", "a2"), ("e2", "a1"),
    ("delta", "a1"), ("delta", "b2"), ("delta", "d2"),
]


def test_braid_relations():
    for c, d in BRAID_PAIRS:
        assert mcg_equal_rel_boundary(word(T2, f"{c} {d} {c}"), word(T2, f"{d} {c} {d}"))


def test_commuting_relations():
    for c, d in COMMUTING_PAIRS:
        assert mcg_equal_rel_boundary(word(T2, f"{c} {d}"), word(T2, f"{d} {c}"))
    # intersecting pairs do not commute
    assert not mcg_equal_rel_boundary(word(T2, "a1 b1"), word(T2, "b1 a1"))
    assert not mcg_equal_rel_boundary(word(T2, "d2 b2"), word(T2, "b2 d2"))


def test_chain_relations():
    # 2-chain: (a1 b1)^6 is the boundary twist of the once-punctured torus
    assert mcg_equal_rel_boundary(word(T1, "a1 b1").power(6), word(T1, "delta"))
    # 4-chain: (a1 b1 a2 b2)^10 is the boundary twist of the whole surface
    assert mcg_equal_rel_boundary(word(T2, "a1 b1 a2 b2").power(10), word(T2, "delta"))
    # 3-chain: (d2 b2 e2)^4 twists about both boundary curves of its
    # neighborhood, the outer boundary and the curve bounding with a1, b1
    lhs = word(T2, "d2 b2 e2").power(4)
    rhs = word(T2, "delta") * word(T2, "a1 b1").power(6)
    assert mcg_equal_rel_boundary(lhs, rhs)


def test_relator_battery_on_random_words():
    rng = random.Random(23)
    relators = [
        word(T2, f"{c} {d} {c}") * word(T2, f"{d} {c} {d}").inverse()
        for c, d in BRAID_PAIRS
    ] + [
        word(T2, f"{c} {d}") * word(T2, f"{d} {c}").inverse()
        for c, d in COMMUTING_PAIRS
    ]
    curves = standard_curves(T2)
    for _ in range(30):
        names = [(rng.choice(curves), rng.choice((1, -1))) for _ in range(rng.randrange(7))]
        w = TwistWord.from_names(T2, names)
        r = rng.choice(relators)
        assert mcg_equal_rel_boundary(w * r, w)
        assert not mcg_equal_rel_boundary(w * r * word(T2, "a1"), w)


def test_growth_cap():
    w = word(T1, "a1 b1").power(6)
    with pytest.raises(WordGrowthExceeded) as info:
        mcg_equal_rel_boundary(w, word(T1, "delta"), cap=3)
    assert info.value.cap == 3
    assert info.value.length > 3
    assert decide_equal(w, word(T1, "delta"), cap=3) == ("unknown", ENGINE_PI1)


def test_abelianize():
    assert abelianize((1,), 2) == (1, 0, 0, 0)
    assert abelianize((2,), 2) == (0, -1, 0, 0)
    assert abelianize((-4, 3, 3), 2) == (0, 0, 2, 1)
    assert abelianize(boundary_word(3), 3) == (0,) * 6


def test_action_commutes_with_abelianization():
    rng = random.Random(5)
    for g in (1, 2, 3):
        sig = SurfaceSig(g, 1)
        curves = standard_curves(sig)
        for _ in range(10):
            names = [(rng.choice(curves), rng.choice((1, -1))) for _ in range(4)]
            w = TwistWord.from_names(sig, names)
            m = word_matrix(w)
            for k in range(1, 2 * g + 1):
                assert abelianize(apply_word(w, (k,)), g) == mat_vec(m, abelianize((k,), g))


def test_dehn_reduce():
    with pytest.raises(ValueError):
        dehn_reduce((1,), 1)
    r = boundary_word(2)
    assert dehn_reduce(r, 2) == ()
    assert dehn_reduce(invert_word(r), 2) == ()
    assert dehn_reduce(multiply((3, -1), r, (1, -3)), 2) == ()
    assert dehn_reduce(multiply(r, r), 2) == ()
    # short reduced words cannot contain more than half the relator
    rng = random.Random(7)
    for _ in range(20):
        z = reduce_word(tuple(rng.choice((1, -1)) * rng.randrange(1, 5) for _ in range(4)))
        assert dehn_reduce(z, 2) == z


def test_closed_equal():
    torus = SurfaceSig(1, 0)
    empty = TwistWord(torus, ())
    assert closed_equal(word(torus, "a1 b1").power(6), empty)
    assert not closed_equal(word(torus, "a1 b1").power(5), empty)

    closed2 = SurfaceSig(2, 0)
    empty2 = TwistWord(closed2, ())
    assert closed_equal(word(closed2, "a1 b1 a2 b2").power(10), empty2)
    assert not closed_equal(word(closed2, "a1 b1 a2 b2").power(9), empty2)
    assert not closed_equal(word(closed2, "a1"), empty2)

    sphere = SurfaceSig(0, 0)
    assert closed_equal(TwistWord(sphere, ()), TwistWord(sphere, ()))

    with pytest.raises(ValueError):
        closed_equal(word(T1, "a1"), word(T1, "a1"))


def test_decide_equal_dispatch():
    # boundary = 1: the faithful free-group engine
    assert decide_equal(word(T1, "a1 b1 a1"), word(T1, "b1 a1 b1")) == ("true", ENGINE_PI1)
    assert decide_equal(word(T1, "a1"), word(T1, "b1")) == ("false", ENGINE_PI1)
    # closed genus 1: homology is faithful
    torus = SurfaceSig(1, 0)
    v = decide_equal(word(torus, "a1 b1").power(6), TwistWord(torus, ()))
    assert v == ("true", ENGINE_HOMOLOGY_FAITHFUL)
    # closed genus 2: relator reduction
    closed2 = SurfaceSig(2, 0)
    v = decide_equal(word(closed2, "a1 b1 a2 b2").power(10), TwistWord(closed2, ()))
    assert v == ("true", ENGINE_CLOSED)
    # forced homology on a bounded surface is only a necessary test
    a, b = word(T2, "a1 a2"), word(T2, "a2 a1")
    assert decide_equal(a, b, engine="homology") == ("unknown", ENGINE_HOMOLOGY_NECESSARY)
    assert decide_equal(a, word(T2, "a1 a1"), engine="homology")[0] == "false"
    # engine/surface mismatches
    with pytest.raises(ValueError):
        decide_equal(word(torus, "a1"), word(torus, "a1"), engine="pi1")
    with pytest.raises(ValueError):
        decide_equal(a, b, engine="closed")
    with pytest.raises(ValueError):
        decide_equal(a, b, engine="nonsense")
    with pytest.raises(ValueError):
        decide_equal(a, word(T1, "a1"))
