"""Streaming GF(2) elimination on Python-int bit rows.

Rows are plain ints.  Column c of an ``ncols``-wide row lives at bit
``ncols - 1 - c``, so the leading column (lowest index, i.e. the largest
monomial) is the top bit and ``int.bit_length`` finds it in O(1).
"""

from __future__ import annotations

import hashlib
import struct
from collections.abc import Iterable, Sequence
from pathlib import Path

from .errors import DimensionMismatch

MAGIC = b"HITC1"


def row_from_columns(columns: Iterable[int], ncols: int) -> int:
    r = 0
    for c in columns:
        r ^= 1 << (ncols - 1 - c)
    return r


def columns_of(row: int, ncols: int) -> list[int]:
    """Set columns of a row, ascending."""
    out = []
    while row:
        b = row.bit_length() - 1
        out.append(ncols - 1 - b)
        row ^= 1 << b
    return out


def leading_column(row: int, ncols: int) -> int:
    return ncols - row.bit_length()


class EchelonBasis:
    """Online row-echelon basis keyed by leading column.

    With ``reduced=True`` every new pivot is cleared from the stored rows, giving
    reduced row-echelon form.  The default keeps plain row-echelon form, which is
    far cheaper at scale; ``reduce`` still returns the unique normal form because
    it keeps eliminating below the leading bit.
    """

    def __init__(self, ncols: int, reduced: bool = False):
        self.ncols = ncols
        self.reduced = reduced
        self._piv: dict[int, int] = {}  # bit position -> row

    @property
    def rank(self) -> int:
        return len(self._piv)

    def __len__(self) -> int:
        return len(self._piv)

    def _check(self, row: int) -> None:
        if row < 0 or row.bit_length() > self.ncols:
            raise DimensionMismatch(f"row wider than {self.ncols} columns")

    def insert(self, row: int) -> bool:
        self._check(row)
        piv = self._piv
        while row:
            p = row.bit_length() - 1
            q = piv.get(p)
            if q is None:
                if self.reduced:
                    row = self._tail_reduce(row, p)
                    bit = 1 << p
                    for key, other in piv.items():
                        if other & bit:
                            piv[key] = other ^ row
                piv[p] = row
                return True
            row ^= q
        return False

    def _tail_reduce(self, row: int, top: int) -> int:
        rest = row ^ (1 << top)
        out = 1 << top
        piv = self._piv
        while rest:
            p = rest.bit_length() - 1
            q = piv.get(p)
            if q is None:
                out |= 1 << p
                rest ^= 1 << p
            else:
                rest ^= q
        return out

    def insert_many(self, rows: Iterable[int]) -> int:
        return sum(self.insert(r) for r in rows)

    def reduce(self, row: int) -> int:
        """Residual of ``row`` with no support on pivot columns."""
        self._check(row)
        piv = self._piv
        out = 0
        while row:
            p = row.bit_length() - 1
            q = piv.get(p)
            if q is None:
                out |= 1 << p
                row ^= 1 << p
            else:
                row ^= q
        return out

    def member(self, row: int) -> bool:
        self._check(row)
        piv = self._piv
        while row:
            q = piv.get(row.bit_length() - 1)
            if q is None:
                return False
            row ^= q
        return True

    def pivot_columns(self) -> list[int]:
        return sorted(self.ncols - 1 - p for p in self._piv)

    def rows(self) -> list[int]:
        """Stored rows ordered by pivot column."""
        return [self._piv[p] for p in sorted(self._piv, reverse=True)]

    def interreduce(self) -> None:
        """Bring the stored rows into reduced row-echelon form."""
        piv = self._piv
        for p in sorted(piv):
            piv[p] = self._tail_reduce(piv[p], p)
        self.reduced = True

    def check_invariants(self) -> bool:
        for p, r in self._piv.items():
            if r.bit_length() - 1 != p or r.bit_length() > self.ncols:
                return False
            if self.reduced:
                for q in self._piv:
                    if q != p and r >> q & 1:
                        return False
        return True

    def copy(self) -> EchelonBasis:
        out = EchelonBasis(self.ncols, self.reduced)
        out._piv = dict(self._piv)
        return out


# Small matrices over coordinates: row i is an int whose bit j is entry (i, j).

def transpose(columns: Sequence[int], nrows: int) -> list[int]:
    rows = [0] * nrows
    for j, col in enumerate(columns):
        bit = 1 << j
        while col:
            low = col & -col
            rows[low.bit_length() - 1] |= bit
            col ^= low
    return rows


def identity(dim: int) -> list[int]:
    return [1 << i for i in range(dim)]


def nullspace(rows: Iterable[int], dim: int) -> list[int]:
    """Basis of {x : row . x = 0 for every row}, in reduced echelon form.

    Basis vectors are indexed by free columns in ascending order; each has its
    free column set plus the pivot columns needed to satisfy the rows.
    """
    piv: dict[int, int] = {}  # lowest set column -> row
    for r in rows:
        if r >> dim:
            raise DimensionMismatch(f"row wider than {dim} columns")
        while r:
            c = (r & -r).bit_length() - 1
            q = piv.get(c)
            if q is None:
                piv[c] = r
                break
            r ^= q
    order = sorted(piv)
    for i in range(len(order) - 1, -1, -1):
        c = order[i]
        r = piv[c]
        for c2 in order[i + 1:]:
            if r >> c2 & 1:
                r ^= piv[c2]
        piv[c] = r
    basis = []
    for f in range(dim):
        if f in piv:
            continue
        v = 1 << f
        for c in order:
            if piv[c] >> f & 1:
                v |= 1 << c
        basis.append(v)
    return basis


def kernel_intersection(maps: Sequence[Sequence[int]], dim: int | None = None) -> list[int]:
    """Basis of the common kernel of square operators given row-major."""
    if not maps:
        raise DimensionMismatch("no operators given")
    dim = len(maps[0]) if dim is None else dim
    stacked = []
    for m in maps:
        if len(m) != dim:
            raise DimensionMismatch(f"operator has {len(m)} rows, expected {dim}")
        stacked.extend(m)
    return nullspace(stacked, dim)


def dense_rank(rows: Iterable[int]) -> int:
    piv: dict[int, int] = {}
    for r in rows:
        while r:
            p = r.bit_length() - 1
            q = piv.get(p)
            if q is None:
                piv[p] = r
                break
            r ^= q
    return len(piv)


# On-disk cache ------------------------------------------------------------

def order_hash(columns: Iterable[Sequence[int]]) -> bytes:
    h = hashlib.sha256()
    for m in columns:
        h.update(",".join(map(str, m)).encode())
        h.update(b";")
    return h.digest()


def _to_file_order(row: int, ncols: int) -> int:
    # file layout: bit i of word w is column 64 w + i
    return int(format(row, f"0{ncols}b")[::-1], 2) if row else 0


def _from_file_order(value: int, ncols: int) -> int:
    return int(format(value, f"0{ncols}b")[::-1], 2) if value else 0


def save_echelon(path: str | Path, basis: EchelonBasis, n: int, d: int,
                 omega: Sequence[int] | None, column_hash: bytes) -> None:
    nwords = (basis.ncols + 63) // 64
    omega = list(omega or [])
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<III", n, d, len(omega)))
        fh.write(struct.pack(f"<{len(omega)}I", *omega))
        fh.write(column_hash)
        fh.write(struct.pack("<QQB", basis.rank, basis.ncols, int(basis.reduced)))
        for r in basis.rows():
            fh.write(_to_file_order(r, basis.ncols).to_bytes(8 * nwords, "little"))


def load_echelon(path: str | Path, n: int, d: int, omega: Sequence[int] | None,
                 column_hash: bytes) -> EchelonBasis:
    """Read a cached basis; raises ValueError if the file does not match."""
    with open(path, "rb") as fh:
        if fh.read(5) != MAGIC:
            raise ValueError("bad magic")
        fn, fd, k = struct.unpack("<III", fh.read(12))
        fomega = list(struct.unpack(f"<{k}I", fh.read(4 * k)))
        fhash = fh.read(32)
        if (fn, fd, fomega) != (n, d, list(omega or [])):
            raise ValueError("cache key mismatch")
        if fhash != column_hash:
            raise ValueError("column order hash mismatch")
        rank, ncols, reduced = struct.unpack("<QQB", fh.read(17))
        nwords = (ncols + 63) // 64
        basis = EchelonBasis(ncols, bool(reduced))
        for _ in range(rank):
            chunk = fh.read(8 * nwords)
            if len(chunk) != 8 * nwords:
                raise ValueError("truncated cache file")
            r = _from_file_order(int.from_bytes(chunk, "little"), ncols)
            if not r or r.bit_length() > ncols:
                raise ValueError("corrupt row")
            basis._piv[r.bit_length() - 1] = r
        if fh.read(1):
            raise ValueError("trailing bytes in cache file")
        if basis.rank != rank:
            raise ValueError("duplicate pivots in cache file")
    return basis
