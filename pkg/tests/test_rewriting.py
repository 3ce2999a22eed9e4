"""Commutation pulls, positivization, chain substitution, transports."""

import random

import pytest

from dehn import (
    ENGINE_HOMOLOGY_FAITHFUL,
    ENGINE_PI1,
    SurfaceSig,
    Twist,
    TwistWord,
    chain_relation_selftest,
    chain_substitute,
    chain_word,
    closed_equal,
    commute_pull,
    inverse_twist_expansion,
    mcg_equal_rel_boundary,
    positivize,
    prop9_factor,
)
from dehn.homology import homology_class, homology_equal, transported_class
from dehn.rewriting import transport_pairs, transport_word
from dehn.surface import standard_curves

T2 = SurfaceSig(2, 1)


def word(sig, names):
    return TwistWord.from_names(sig, names)


# ---------------------------------------------------------------------------
# transports
# ---------------------------------------------------------------------------


def test_transport_pairs_examples():
    assert transport_pairs("a1", T2) == ()
    assert transport_pairs("b1", T2) == (("b1", -1), ("a1", -1))
    assert transport_pairs("d2", T2) == (
        ("b1", -1), ("a1", -1), ("a2", -1), ("b1", -1), ("b2", -1), ("a2", -1),
        ("d2", 1), ("b2", 1),
    )
    with pytest.raises(ValueError):
        transport_pairs("delta", T2)
    with pytest.raises(ValueError):
        transport_pairs("d2", SurfaceSig(1, 1))


def test_transport_conjugates_to_a1():
    for g in (2, 3):
        sig = SurfaceSig(g, 1)
        a1 = word(sig, "a1")
        for curve in standard_curves(sig):
            if curve == "delta":
                continue
            v = transport_word(curve, sig)
            moved = v * TwistWord.from_names(sig, [curve]) * v.inverse()
            assert mcg_equal_rel_boundary(moved, a1), curve
            # and on homology classes, up to the curve's orientation
            t = Twist(curve, 1, transport_pairs(curve, sig))
            cls = homology_class("a1", sig)
            neg = tuple(-x for x in cls)
            assert transported_class(t, sig) in (cls, neg), curve


# ---------------------------------------------------------------------------
# commute_pull
# ---------------------------------------------------------------------------


def test_commute_pull_single_hop():
    rep = commute_pull(word(T2, "b1 a1"), word(T2, "a1"))
    assert rep.output.letters == (Twist("a1"), Twist("b1", 1, (("a1", -1),)))
    assert rep.steps == 1
    assert (rep.verified, rep.engine) == ("true", ENGINE_PI1)


def test_commute_pull_prefix_is_free():
    w = word(T2, "a1 b1 a2")
    rep = commute_pull(w, word(T2, "a1 b1"))
    assert rep.output == w
    assert rep.steps == 0


def test_commute_pull_disjoint_and_same_base_skip_conjugators():
    rep = commute_pull(word(T2, "a2 a1"), word(T2, "a1"))
    assert rep.output.letters == (Twist("a1"), Twist("a2"))
    rep = commute_pull(word(T2, "a1^-1 a1"), word(T2, "a1"))
    assert rep.output.letters == (Twist("a1"), Twist("a1", -1))
    assert rep.verified == "true"


def test_commute_pull_preserves_letter_count():
    w = chain_word(T2, 4)
    pattern = word(T2, "a1 b1 a2").power(4)
    rep = commute_pull(w, pattern)
    assert len(rep.output) == len(w) == 16
    assert rep.output.letters[:12] == pattern.letters
    assert (rep.verified, rep.engine) == ("true", ENGINE_PI1)


def test_commute_pull_rejections():
    with pytest.raises(ValueError, match="not realizable"):
        commute_pull(word(T2, "a1 b1"), word(T2, "d2"))
    with pytest.raises(ValueError, match="not realizable"):
        # only one plain a1 available for a two-a1 pattern
        commute_pull(word(T2, "a1 b1"), word(T2, "a1 a1"))
    with pytest.raises(ValueError, match="plain"):
        commute_pull(word(T2, "a1"), TwistWord(T2, (Twist("a1", 1, (("b1", 1),)),)))
    with pytest.raises(ValueError, match="different surfaces"):
        commute_pull(word(T2, "a1"), word(SurfaceSig(3, 1), "a1"))


def test_prop9_factor_counts():
    for n in (2, 3, 4):
        prefix, psi = prop9_factor(n)
        assert prefix == word(SurfaceSig(n, 1), "a1 b1 a2").power(4)
        assert len(psi) == 8 * n - 12
        assert psi.all_positive()
        assert all(t.base != "delta" for t in psi.letters)
    with pytest.raises(ValueError):
        prop9_factor(1)


# ---------------------------------------------------------------------------
# inverse_twist_expansion / positivize
# ---------------------------------------------------------------------------


def test_expansion_shape():
    torus = SurfaceSig(1, 0)
    e = inverse_twist_expansion(torus)
    assert [t.base for t in e.letters] == ["b1"] + ["a1", "b1"] * 5
    for g in (1, 2, 3):
        sig = SurfaceSig(g, 0)
        e = inverse_twist_expansion(sig)
        assert len(e) == (2 * g - 1) + 2 * g * (4 * g + 1)
        assert e.all_positive()
        # a1 . expansion is literally the full chain power
        lhs = TwistWord.from_names(sig, "a1") * e
        assert lhs.letters == chain_word(sig, 4 * g + 2).letters
        assert closed_equal(lhs, TwistWord(sig, ()))
    with pytest.raises(ValueError):
        inverse_twist_expansion(SurfaceSig(1, 1))
    with pytest.raises(ValueError):
        inverse_twist_expansion(SurfaceSig(0, 0))


def test_positivize_trivial_torus_word():
    torus = SurfaceSig(1, 0)
    rep = positivize(word(torus, "a1 b1 b1^-1 a1^-1"))
    assert len(rep.output) == 24
    assert rep.output.all_positive()
    assert rep.steps == 2
    assert (rep.verified, rep.engine) == ("true", ENGINE_HOMOLOGY_FAITHFUL)
    assert closed_equal(rep.output, TwistWord(torus, ()))


def test_positivize_single_inverse_is_plain_expansion():
    torus = SurfaceSig(1, 0)
    rep = positivize(word(torus, "a1^-1"))
    assert rep.output.letters == inverse_twist_expansion(torus).letters
    assert len(rep.output) == 11


def test_positivize_positive_input_unchanged():
    torus = SurfaceSig(1, 0)
    w = word(torus, "a1 b1 a1")
    rep = positivize(w)
    assert rep.output == w
    assert rep.steps == 0
    assert rep.verified == "true"


def test_positivize_conjugated_negative_letter():
    closed2 = SurfaceSig(2, 0)
    t = Twist("b2", -1, (("a1", 1),))
    rep = positivize(TwistWord(closed2, (t,)), engine="homology")
    assert len(rep.output) == 39
    expected_conj = (("a1", 1),) + tuple(
        (n, -s) for n, s in reversed(transport_pairs("b2", closed2)))
    assert all(u.conj == expected_conj for u in rep.output.letters)
    assert homology_equal(TwistWord(closed2, (t,)), rep.output)


def test_positivize_rejections():
    with pytest.raises(ValueError):
        positivize(word(T2, "a1^-1"))
    torus = SurfaceSig(1, 0)
    with pytest.raises(ValueError):
        positivize(TwistWord(SurfaceSig(1, 1), (Twist("delta", -1),)))


def test_positivize_random_battery():
    rng = random.Random(17)
    for _ in range(15):
        g = rng.choice((1, 2))
        sig = SurfaceSig(g, 0)
        curves = [c for c in standard_curves(sig) if c != "delta"]
        k = rng.randrange(1, 7)
        names = [(rng.choice(curves), rng.choice((1, -1))) for _ in range(k)]
        w = TwistWord.from_names(sig, names)
        rep = positivize(w, engine="homology")
        assert rep.output.all_positive()
        positives = sum(1 for t in w.letters if t.sign == 1)
        negatives = k - positives
        expansion = (2 * g - 1) + 2 * g * (4 * g + 1)
        assert len(rep.output) == positives + negatives * expansion
        assert homology_equal(w, rep.output)
        assert rep.verified != "false"


# ---------------------------------------------------------------------------
# chain_substitute
# ---------------------------------------------------------------------------


def test_chain_substitute_shortens_by_ten():
    w = word(T2, "a1 b1 a2").power(4) * chain_word(T2, 7)
    assert len(w) == 40
    rep = chain_substitute(w)
    assert len(rep.output) == 30
    assert rep.output.letters[:2] == (Twist("d2"), Twist("e2"))
    assert (rep.verified, rep.engine) == ("true", ENGINE_PI1)
    assert homology_equal(w, rep.output)


def test_chain_substitute_interior_block():
    w = word(T2, "b2") * word(T2, "a1 b1 a2").power(4)
    rep = chain_substitute(w)
    assert rep.output.letters == (Twist("b2"), Twist("d2"), Twist("e2"))


def test_chain_substitute_rejections():
    with pytest.raises(ValueError, match="no contiguous"):
        chain_substitute(chain_word(T2, 4))  # b2 letters interrupt the block
    with pytest.raises(ValueError, match="no contiguous"):
        chain_substitute(word(T2, "a1 b1 a2").power(3))
    with pytest.raises(ValueError, match="genus"):
        chain_substitute(word(SurfaceSig(1, 1), "a1 b1"))


def test_chain_relation_selftest():
    assert chain_relation_selftest()
