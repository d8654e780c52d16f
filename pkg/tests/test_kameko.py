import random

import pytest
from hypothesis import given, strategies as st

from conftest import W1, W3
from hitcalc.errors import DegreeMismatch, ModeViolation, MuTooLarge, TooLarge
from hitcalc.hit import cohit_basis
from hitcalc.kameko import (
    DecomposedSpace, KamekoContext, decomposition_applies, down_operator, kameko_down,
    kameko_down_poly, kameko_iso_check, kameko_kernel, kameko_up,
)
from hitcalc.monomials import enumerate_monomials, mu
from hitcalc.oracle import oracle_kameko_kernel
from hitcalc.steenrod import Polynomial, sq


def test_down_examples():
    assert kameko_down((1, 1)) == (0, 0)
    assert kameko_down((3, 1)) == (1, 0)
    assert kameko_down((4, 0), source_degree=4) is None
    with pytest.raises(DegreeMismatch):
        kameko_down((3, 1), source_degree=6)


def test_up_examples():
    assert kameko_up((0,) * 5) == (1,) * 5
    f = Polynomial([(1, 0), (0, 1)], 2)
    assert kameko_up(f) == Polynomial([(3, 1), (1, 3)], 2)
    assert KamekoContext(5, 33).source_degree == 71


@given(st.lists(st.integers(0, 50), min_size=1, max_size=6).map(tuple))
def test_down_after_up_is_identity(m):
    assert kameko_down(kameko_up(m)) == m


def test_iso_check():
    assert kameko_iso_check(3, 15)  # (QP_3)_33 and (QP_3)_15, both of dimension 13
    assert cohit_basis(3, 33).dim == cohit_basis(3, 15).dim == 13
    assert kameko_iso_check(1, 1)
    assert not kameko_iso_check(5, 33, verify=False)  # mu(71) = 3
    for n in range(1, 4):
        for d in range(12):
            kameko_iso_check(n, d)  # raises if dimensions disagree


def test_down_map_sends_hit_to_hit():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 3)
        d = rng.randint(0, 8)
        D = 2 * d + n
        k = 1 << rng.randint(0, 3)
        if k > D:
            continue
        src = enumerate_monomials(n, D - k)
        f = sq(k, Polynomial(rng.sample(src, min(3, len(src))), n))
        assert cohit_basis(n, d).is_hit(kameko_down_poly(f))


def test_kernel_at_degree_33(qp5_33):
    res = kameko_kernel(5, 33, method="direct")
    assert res.total == 1002 == 1322 - 320
    nonzero = {w: k for w, k in res.pieces.items() if k}
    assert nonzero == {W1: 186, W3: 816}


def test_kernel_agrees_with_oracle():
    for n in range(1, 4):
        for D in range(n, 16, 2):
            if mu(D) > n:
                with pytest.raises(MuTooLarge):
                    kameko_kernel(n, D)
                continue
            assert kameko_kernel(n, D).total == oracle_kameko_kernel(n, D)


def test_mu_too_large():
    with pytest.raises(MuTooLarge):
        kameko_kernel(2, 33)


def test_down_operator_is_surjective():
    src, tgt = cohit_basis(4, 18), cohit_basis(4, 7)
    from hitcalc.gf2 import dense_rank
    assert dense_rank(down_operator(src, tgt)) == tgt.dim


CASES = [(n, D) for n in (3, 4) for D in range(n, 40) if decomposition_applies(n, D)]


@pytest.mark.parametrize("n,D", CASES)
def test_decomposed_matches_direct(n, D):
    a = kameko_kernel(n, D, method="direct", allow_large=True)
    b = kameko_kernel(n, D, method="decomposed")
    assert a.pieces == b.pieces
    assert b.space.full.dim == a.space.dim


def test_decomposed_matches_direct_at_degree_33(qp5_33):
    space = DecomposedSpace.build(5, 33)
    assert len(space.kernel_admissibles) == 1002
    assert space.full.dim == 1322
    assert set(space.kernel_admissibles) <= set(qp5_33.admissibles)
    rng = random.Random(6)
    mons = enumerate_monomials(5, 33)
    for _ in range(100):
        f = Polynomial(rng.sample(mons, 5), 5)
        g = qp5_33.reduce_to_admissible(f)
        assert space.is_hit(f + g)
        assert space.is_hit(f) == qp5_33.is_hit(f)
    w1 = space.kernel.restrict_weight(W1)
    assert w1.dim == 186
    assert set(w1.admissibles) == set(qp5_33.restrict_weight(W1).admissibles)


def test_decomposed_kernel_rejects_all_odd_input():
    space = DecomposedSpace.build(4, 18)
    with pytest.raises(ModeViolation):
        space.kernel.reduce([(5, 5, 5, 3)])


def test_decomposed_requires_applicable_degree():
    with pytest.raises(ValueError):
        DecomposedSpace.build(5, 14)


def test_json():
    out = kameko_kernel(4, 10).to_json()
    assert out["total"] == sum(p["dim"] for p in out["pieces"])
