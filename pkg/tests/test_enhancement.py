import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glinv import bilinear as bl
from glinv import enhancement as en
from glinv.enhancement import INFINITY, GaussianInt
from oracles import arf_majority, brown_direct, monsky_direct, phi_direct, radical_dim_direct
from strategies import even_matrices, sym_matrices


def test_gaussian_int():
    a, b = GaussianInt(1, 1), GaussianInt(1, -1)
    assert a * b == GaussianInt(2, 0)
    assert str(a) == "1+1i" and str(b) == "1-1i"
    assert str(GaussianInt(0, 0)) == "0" and not GaussianInt(0, 0)
    assert a.norm() == 2


def test_infinity_absorbs():
    assert en.brown_add(INFINITY, 3) is INFINITY
    assert en.brown_add(5, INFINITY) is INFINITY
    assert en.brown_neg(INFINITY) is INFINITY
    assert en.brown_add(5, 6) == 3
    assert en.brown_neg(3) == 5
    assert str(INFINITY) == "infinity"


def test_weight_parity_enforced():
    with pytest.raises(ValueError):
        en.EnhancedSpace(((1,),), (2,))


@pytest.mark.parametrize("kind, beta", [("P+", 1), ("P-", 7), ("T0", 0), ("T4", 4)])
def test_indecomposables(kind, beta):
    assert en.brown(en.indecomposable(kind)) == beta


def test_weighted_graph():
    with pytest.raises(ValueError, match="loops"):
        en.WeightedGraph((1,), ((0, 0),))
    with pytest.raises(ValueError, match="multiple"):
        en.WeightedGraph((1, 1), ((0, 1), (1, 0)))
    e = en.from_graph(en.WeightedGraph((1, 0, 0), ((0, 2), (1, 2))))
    assert en.monsky_sum(e) == GaussianInt(2, 2)


def test_small_forms():
    assert en.brown(en.enhance(bl.parse_matrix("2"))) is INFINITY
    assert en.brown(en.enhance(bl.parse_matrix(""))) == 0
    assert en.monsky_sum(en.enhance(bl.parse_matrix(""))) == GaussianInt(1, 0)
    assert en.monsky_sum(en.enhance(bl.parse_matrix("-3"))) == GaussianInt(1, 1)
    assert en.brown(en.enhance(bl.parse_matrix("-3"))) == 1
    assert en.brown(en.enhance(bl.SymIntMatrix.diagonal(1, -2))) is INFINITY


def test_cap():
    e = en.enhance(bl.SymIntMatrix.diagonal(*[1] * 6))
    with pytest.raises(en.EnumerationCapExceeded):
        en.monsky_sum(e, cap=5)
    # the decomposed route splits into 1-dimensional pieces and fits under the cap
    # (1+i)^6 = -8i
    assert en.monsky_sum_decomposed(e, cap=5) == GaussianInt(0, -8)
    assert en.brown(e, cap=5) == 6


def test_arf_of_even():
    assert en.arf_of_even(en.indecomposable("T4")) == 1
    assert en.arf_of_even(en.indecomposable("T0")) == 0
    with pytest.raises(ValueError):
        en.arf_of_even(en.indecomposable("P+"))
    with pytest.raises(en.ImproperFormError):
        en.arf_of_even(en.enhance(bl.parse_matrix("2")))


@settings(max_examples=300)
@given(sym_matrices())
def test_monsky_matches_enumeration(m):
    e = en.enhance(m)
    lam = en.monsky_sum(e)
    assert (lam.re, lam.im) == monsky_direct(m.tolist(), e.weights)
    assert en.monsky_sum_decomposed(e) == lam
    assert len(en.radical(e)) == radical_dim_direct(m.tolist())


@settings(max_examples=300)
@given(sym_matrices())
def test_brown_matches_argument(m):
    e = en.enhance(m)
    b = en.brown(e)
    ref = brown_direct(m.tolist(), e.weights)
    assert (b is INFINITY and ref is None) or b == ref
    assert (b is INFINITY) != en.is_proper(e)


@settings(max_examples=300)
@given(even_matrices())
def test_even_forms(m):
    e = en.enhance(m)
    b = en.brown(e)
    assert b in (0, 4, INFINITY)
    if b is not INFINITY:
        assert en.arf_of_even(e) == arf_majority(m.tolist(), e.weights)


@settings(max_examples=300)
@given(sym_matrices(), st.integers(0, 2**32))
def test_enhancement_identity(m, seed):
    e = en.enhance(m)
    rng = random.Random(seed)
    u = [rng.randint(0, 1) for _ in range(e.dim)]
    v = [rng.randint(0, 1) for _ in range(e.dim)]
    w = [(a + b) % 2 for a, b in zip(u, v)]
    assert en.evaluate_phi(e, w) == (en.evaluate_phi(e, u) + en.evaluate_phi(e, v) + 2 * e.dot(u, v)) % 4
    assert en.evaluate_phi(e, u) == phi_direct(m.tolist(), e.weights, u)


def test_special_matrix_mode():
    e = en.from_special_matrix(bl.parse_matrix("1,0,1;0,0,1;1,1,0"))
    assert en.monsky_sum(e) == GaussianInt(2, 2)
    assert en.brown(e) == 1
