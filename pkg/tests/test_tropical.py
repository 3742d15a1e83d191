import pytest
from hypothesis import given
from hypothesis import strategies as st

from laminations.errors import IndexOutOfRange, KindMismatch
from laminations.tropical import (Coweight, DominantCoweight, Order, dominance_compare, dominant,
                                  neg_w0, pair_fundamental, prefix, standard_compare, trop_add,
                                  trop_mul)

ints = st.integers(-50, 50)


@st.composite
def sl_coweights(draw, m=3):
    head = draw(st.lists(st.integers(-6, 6), min_size=m - 1, max_size=m - 1))
    return Coweight(tuple(head + [-sum(head)]))


def test_trop_examples():
    assert trop_add(3, -1) == 3
    assert trop_mul(3, -1) == 2


@given(ints, ints, ints)
def test_semiring_laws(a, b, c):
    assert trop_add(a, a) == a
    assert trop_add(a, trop_add(b, c)) == trop_add(trop_add(a, b), c)
    assert trop_add(a, b) == trop_add(b, a)
    assert trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c))


def test_pairing_examples():
    lam = Coweight((1, 0, -1))
    assert pair_fundamental(lam, 1) == 1
    assert pair_fundamental(lam, 2) == 1
    assert all(pair_fundamental(Coweight.zero(4), i) == 0 for i in range(1, 4))
    with pytest.raises(IndexOutOfRange):
        pair_fundamental(lam, 3)
    with pytest.raises(IndexOutOfRange):
        pair_fundamental(lam, 0)
    assert prefix(lam, 0) == 0 and prefix(lam, 3) == 0


@given(sl_coweights(), sl_coweights())
def test_pairing_is_additive(lam, mu):
    for i in (1, 2):
        assert pair_fundamental(lam + mu, i) == pair_fundamental(lam, i) + pair_fundamental(mu, i)
    assert sum(lam) == 0


def test_neg_w0_examples():
    assert neg_w0(Coweight((1, -1))).entries == (1, -1)
    assert neg_w0(Coweight((2, 1, -3))).entries == (3, -1, -2)


@given(sl_coweights())
def test_neg_w0_is_an_involution(lam):
    assert neg_w0(neg_w0(lam)) == lam


def test_sl_sum_and_pgl_canonical_form():
    with pytest.raises(ValueError):
        Coweight((1, 0))
    assert Coweight((5, 3, 2), "PGL").entries == (3, 1, 0)
    assert Coweight((5, 3, 2), "PGL") == Coweight((4, 2, 1), "PGL")


def test_dominant_wrapper():
    assert dominant([-1, 2, -1]).entries == (2, -1, -1)
    with pytest.raises(ValueError):
        DominantCoweight((0, 1, -1))


def test_dominance_examples():
    assert dominance_compare(Coweight((1, -1)), Coweight((0, 0))) is Order.GREATER
    assert dominance_compare(Coweight.zero(3), Coweight.zero(3)) is Order.EQUAL
    assert dominance_compare(Coweight((1, 1, -2)), Coweight((2, -1, -1))) is Order.INCOMPARABLE
    with pytest.raises(KindMismatch):
        dominance_compare(Coweight((1, -1)), Coweight((1, 0), "GL"))


@given(sl_coweights(), sl_coweights(), sl_coweights())
def test_dominance_is_a_partial_order(a, b, c):
    assert dominance_compare(a, a) is Order.EQUAL
    ab, ba = dominance_compare(a, b), dominance_compare(b, a)
    flip = {Order.GREATER: Order.LESS, Order.LESS: Order.GREATER,
            Order.EQUAL: Order.EQUAL, Order.INCOMPARABLE: Order.INCOMPARABLE}
    assert ba is flip[ab]
    if ab is Order.GREATER and dominance_compare(b, c) is Order.GREATER:
        assert dominance_compare(a, c) is Order.GREATER


def test_gl_constant_difference_is_antisymmetric():
    a, b = Coweight((2, 2), "GL"), Coweight((1, 1), "GL")
    assert dominance_compare(a, b) is Order.GREATER
    assert dominance_compare(b, a) is Order.LESS


@given(sl_coweights(), sl_coweights(), sl_coweights())
def test_standard_order_is_a_partial_order(a, b, c):
    if standard_compare(a, b) is Order.GREATER and standard_compare(b, c) is Order.GREATER:
        assert standard_compare(a, c) is Order.GREATER


def test_standard_order_example():
    # (2,-1,-1) - (1,0,-1) = (1,-1,0): partial sums 1, 0
    assert standard_compare(Coweight((2, -1, -1)), Coweight((1, 0, -1))) is Order.GREATER
    assert dominance_compare(Coweight((2, -1, -1)), Coweight((1, 0, -1))) is Order.INCOMPARABLE
