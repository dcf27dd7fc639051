from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfgraph.characters import poly_in_k, tau, xi, zeta
from hopfgraph.corpus import corpus
from hopfgraph.multigraph import complete, edgeless
from hopfgraph.polynomial import Poly
from hopfgraph.qsym import (
    QSymElement,
    binom_poly,
    compositions,
    m_coassociativity_check,
    m_coproduct,
    m_product,
    pi,
    psi,
    vandermonde_check,
    zeta_alpha,
    zeta_q,
)

k = Poly.gen()
M = QSymElement.M


def test_compositions_count():
    assert [len(list(compositions(n))) for n in range(7)] == [1, 1, 2, 4, 8, 16, 32]


def test_zeta_alpha_examples():
    z = zeta()
    assert zeta_alpha(z, complete(2), (1, 1)) == 2
    assert zeta_alpha(z, complete(2), (2,)) == 0
    assert zeta_alpha(z, edgeless(2), (2,)) == 1
    with pytest.raises(ValueError):
        zeta_alpha(z, complete(2), (1,))


def test_psi_examples():
    z = zeta()
    assert psi(complete(1), z) == M((1,))
    assert psi(complete(2), z) == M((1, 1)) * 2
    assert psi(edgeless(2), z) == M((2,)) + M((1, 1)) * 2


def test_pi_examples():
    assert pi(M((3,))) == k
    assert pi(M((1, 1))) == (k * k - k) * Fraction(1, 2) == binom_poly(2)
    assert pi(psi(complete(2), zeta())) == k**2 - k


def test_product_examples():
    assert M((1,)) * M((1,)) == M((1, 1)) * 2 + M((2,))
    assert M(()) * M((2, 1)) == M((2, 1))
    assert pi(M((1,)) * M((1,))) == k**2
    # quasi-shuffle of (1) into (2,1): two insertions give (2,1,1)
    assert m_product((1,), (2, 1)) == M((1, 2, 1)) + M((2, 1, 1)) * 2 + M((3, 1)) + M((2, 2))


def test_product_needs_enough_variables():
    with pytest.raises(ValueError):
        m_product((1, 1), (1,), m=2)
    assert m_product((1, 1), (1,), m=4) == m_product((1, 1), (1,))


def test_product_commutative_small():
    for a, b in product([c for n in range(4) for c in compositions(n)], repeat=2):
        assert m_product(a, b) == m_product(b, a)


def test_coproduct_examples():
    assert m_coproduct((2, 1)) == [((), (2, 1)), ((2,), (1,)), ((2, 1), ())]
    assert m_coproduct(()) == [((), ())]


@pytest.mark.parametrize("n", range(6))
def test_coassociativity(n):
    assert all(m_coassociativity_check(a) for a in compositions(n))


def test_pi_multiplicative_weight_6():
    comps = [c for n in range(7) for c in compositions(n)]
    for a, b in product(comps, repeat=2):
        if sum(a) + sum(b) <= 6:
            assert pi(m_product(a, b)) == pi(M(a)) * pi(M(b))


@pytest.mark.parametrize("l", range(7))
def test_vandermonde(l):
    assert vandermonde_check(l, range(-3, 6), range(-3, 6))


def test_zeta_q():
    for n in range(6):
        for a in compositions(n):
            assert zeta_q(M(a)) == (1 if len(a) <= 1 else 0) == pi(M(a))(1)


@pytest.mark.parametrize("G", corpus(5), ids=str)
def test_polynomiality_bridge(G):
    for phi in (zeta(), xi(2), tau(2, 0)):
        assert pi(psi(G, phi)) == poly_in_k(phi, G)


@given(st.lists(st.integers(1, 3), max_size=3), st.lists(st.integers(1, 3), max_size=3))
def test_product_weight_homogeneous(a, b):
    P = m_product(tuple(a), tuple(b))
    assert all(sum(g) == sum(a) + sum(b) for g in P.terms)
    assert P.to_json()["terms"][0]["coeff"]
