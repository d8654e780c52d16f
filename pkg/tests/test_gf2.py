import random

import numpy as np
import pytest

from hitcalc import gf2
from hitcalc.errors import DimensionMismatch
from hitcalc.oracle import rank as dense_oracle_rank


def e(i, ncols):
    return 1 << (ncols - 1 - i)


def test_insert_examples():
    b = gf2.EchelonBasis(3)
    r = e(0, 3) | e(2, 3)
    assert b.insert(r) is True
    assert b.insert(r) is False
    assert b.insert(0) is False
    b = gf2.EchelonBasis(2)
    assert [b.insert(e(0, 2)), b.insert(e(1, 2)), b.insert(e(0, 2) | e(1, 2))] == [True, True, False]


def test_member_and_reduce_examples():
    b = gf2.EchelonBasis(2)
    b.insert(e(0, 2))
    assert b.member(e(0, 2)) and not b.member(e(1, 2))
    b = gf2.EchelonBasis(2)
    b.insert(e(0, 2) | e(1, 2))
    assert b.reduce(e(0, 2)) == e(1, 2)


def test_dimension_mismatch():
    b = gf2.EchelonBasis(3)
    with pytest.raises(DimensionMismatch):
        b.insert(1 << 3)
    with pytest.raises(DimensionMismatch):
        b.reduce(1 << 5)


def test_kernel_intersection_examples():
    assert len(gf2.kernel_intersection([[0, 0, 0]], 3)) == 3
    assert gf2.kernel_intersection([gf2.identity(3)]) == []
    swap = [0b10, 0b01]
    minus_id = [r ^ (1 << i) for i, r in enumerate(swap)]
    assert gf2.kernel_intersection([minus_id]) == [0b11]
    with pytest.raises(DimensionMismatch):
        gf2.kernel_intersection([[1, 2], [1]])


def random_rows(rng, nrows, ncols, density):
    return [sum(1 << j for j in range(ncols) if rng.random() < density) for _ in range(nrows)]


def to_dense(rows, ncols):
    return np.array([[(r >> (ncols - 1 - c)) & 1 for c in range(ncols)] for r in rows], dtype=np.uint8)


@pytest.mark.parametrize("seed", range(6))
def test_against_dense_oracle(seed):
    rng = random.Random(seed)
    nrows, ncols = rng.randint(1, 200), rng.randint(1, 200)
    rows = random_rows(rng, nrows, ncols, rng.choice([0.02, 0.1, 0.5]))
    for reduced in (False, True):
        b = gf2.EchelonBasis(ncols, reduced)
        b.insert_many(rows)
        assert b.check_invariants()
        assert b.rank == dense_oracle_rank(to_dense(rows, ncols))
        for probe in random_rows(rng, 20, ncols, 0.3) + rows[:5]:
            dense = dense_oracle_rank(to_dense(rows + [probe], ncols))
            assert b.member(probe) == (dense == b.rank)
            assert b.member(probe ^ b.reduce(probe))


def test_rank_independent_of_order():
    rng = random.Random(11)
    rows = random_rows(rng, 120, 90, 0.05)
    ranks = set()
    pivots = set()
    for _ in range(8):
        rng.shuffle(rows)
        b = gf2.EchelonBasis(90)
        b.insert_many(rows)
        ranks.add(b.rank)
        pivots.add(tuple(b.pivot_columns()))
    assert len(ranks) == 1 and len(pivots) == 1


def test_reduce_is_normal_form_in_both_modes():
    rng = random.Random(5)
    rows = random_rows(rng, 60, 80, 0.1)
    a, b = gf2.EchelonBasis(80), gf2.EchelonBasis(80, reduced=True)
    a.insert_many(rows)
    b.insert_many(rows)
    for probe in random_rows(rng, 50, 80, 0.2):
        assert a.reduce(probe) == b.reduce(probe)
    a.interreduce()
    assert a.check_invariants() and sorted(a.rows()) == sorted(b.rows())


def test_nullspace_solves_system():
    rng = random.Random(2)
    for _ in range(30):
        dim = rng.randint(1, 40)
        rows = [rng.getrandbits(dim) for _ in range(rng.randint(0, 30))]
        basis = gf2.nullspace(rows, dim)
        for v in basis:
            assert all(bin(r & v).count("1") % 2 == 0 for r in rows)
        assert len(basis) == dim - gf2.dense_rank(rows)


def test_transpose_round_trip():
    cols = [0b101, 0b010, 0b111, 0]
    assert gf2.transpose(gf2.transpose(cols, 3), 4) == cols


def test_cache_round_trip_and_rejection(tmp_path):
    rng = random.Random(9)
    b = gf2.EchelonBasis(130)
    b.insert_many(random_rows(rng, 100, 130, 0.1))
    h = gf2.order_hash([(1, 2), (3, 0)])
    path = tmp_path / "x.hitc"
    gf2.save_echelon(path, b, 5, 33, (3, 1, 1, 1, 1), h)
    loaded = gf2.load_echelon(path, 5, 33, (3, 1, 1, 1, 1), h)
    assert loaded.rows() == b.rows() and loaded.ncols == b.ncols
    with pytest.raises(ValueError, match="hash"):
        gf2.load_echelon(path, 5, 33, (3, 1, 1, 1, 1), gf2.order_hash([(3, 0), (1, 2)]))
    with pytest.raises(ValueError, match="key"):
        gf2.load_echelon(path, 5, 34, (3, 1, 1, 1, 1), h)
    raw = path.read_bytes()
    path.write_bytes(raw[:-3])
    with pytest.raises(ValueError):
        gf2.load_echelon(path, 5, 33, (3, 1, 1, 1, 1), h)
    path.write_bytes(b"NOPE!" + raw[5:])
    with pytest.raises(ValueError, match="magic"):
        gf2.load_echelon(path, 5, 33, (3, 1, 1, 1, 1), h)


def test_cache_file_layout(tmp_path):
    b = gf2.EchelonBasis(70)
    b.insert(1 << 69)  # column 0
    path = tmp_path / "y.hitc"
    gf2.save_echelon(path, b, 1, 2, None, bytes(32))
    raw = path.read_bytes()
    row = raw[-16:]
    # column 0 is bit 0 of the first little-endian word
    assert row[0] == 1 and not any(row[1:])
