"""Slow, obviously-correct reference computations for tests.

Everything here is deliberately naive: Steenrod squares come from integer
binomial coefficients summed over every composition, the hit space is spanned
by Sq^i for every i >= 1, and linear algebra is textbook elimination on dense
0/1 numpy arrays.  Only the monomial helpers are shared with the main code.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import TooLarge
from .monomials import Monomial, compare_weights, count_monomials, enumerate_monomials, weight_vector

GUARD = 20000


def _guard(n: int, d: int) -> None:
    if count_monomials(n, d) > GUARD:
        raise TooLarge(f"{count_monomials(n, d)} monomials exceed the oracle guard of {GUARD}")


def compositions(k: int, n: int):
    if n == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in compositions(k - first, n - 1):
            yield (first,) + rest


def naive_sq(k: int, m: Monomial) -> Counter:
    """Sq^k(m) with integer coefficients reduced mod 2 at the end."""
    out: Counter = Counter()
    for ks in compositions(k, len(m)):
        coeff = 1
        for a, b in zip(m, ks):
            coeff *= comb(a, b)
        if coeff:
            out[tuple(a + b for a, b in zip(m, ks))] += coeff
    return Counter({t: 1 for t, c in out.items() if c % 2})


def rref(mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form over GF(2), scanning columns left to right."""
    a = (mat.copy() & 1).astype(np.uint8)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + hits[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        a[others] ^= a[r]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(mat: np.ndarray) -> int:
    if mat.size == 0:
        return 0
    return len(rref(mat)[1])


def _in_part(m: Monomial, part: str) -> bool:
    if part == "full":
        return True
    return all(m) if part == "positive" else not all(m)


def hit_matrix(n: int, d: int, columns: list[Monomial], part: str = "full") -> np.ndarray:
    index = {m: i for i, m in enumerate(columns)}
    rows = []
    for k in range(1, d + 1):
        for m in enumerate_monomials(n, d - k):
            if not _in_part(m, part):
                continue
            v = np.zeros(len(columns), dtype=np.uint8)
            for t in naive_sq(k, m):
                v[index[t]] ^= 1
            if v.any():
                rows.append(v)
    if not rows:
        return np.zeros((0, len(columns)), dtype=np.uint8)
    return np.array(rows, dtype=np.uint8)


@dataclass
class OracleQuotient:
    n: int
    d: int
    columns: list[Monomial]
    hit_rref: np.ndarray
    pivots: list[int]

    @property
    def admissibles(self) -> list[Monomial]:
        piv = set(self.pivots)
        return [m for i, m in enumerate(self.columns) if i not in piv]

    @property
    def dim(self) -> int:
        return len(self.columns) - len(self.pivots)

    def vector(self, terms) -> np.ndarray:
        index = {m: i for i, m in enumerate(self.columns)}
        v = np.zeros(len(self.columns), dtype=np.uint8)
        for t in terms:
            v[index[tuple(t)]] ^= 1
        return v

    def reduce(self, terms) -> np.ndarray:
        """Coordinates over the admissibles of the class of a polynomial."""
        v = self.vector(terms)
        for row, c in zip(self.hit_rref, self.pivots):
            if v[c]:
                v ^= row
        piv = set(self.pivots)
        return np.array([v[i] for i in range(len(self.columns)) if i not in piv], dtype=np.uint8)

    def is_hit(self, terms) -> bool:
        return not self.reduce(terms).any()


def oracle_cohit(n: int, d: int, part: str = "full") -> OracleQuotient:
    _guard(n, d)
    columns = [m for m in enumerate_monomials(n, d) if _in_part(m, part)]
    mat = hit_matrix(n, d, columns, part)
    if mat.shape[0]:
        red, pivots = rref(mat)
    else:
        red, pivots = mat, []
    return OracleQuotient(n, d, columns, red, pivots)


def oracle_weight_dim(n: int, d: int, omega, part: str = "full") -> int:
    """dim of the weight-omega subquotient as rank(H + P(<=w)) - rank(H + P(<w))."""
    _guard(n, d)
    columns = [m for m in enumerate_monomials(n, d) if _in_part(m, part)]
    h = hit_matrix(n, d, columns, part)
    cmp = [compare_weights(weight_vector(m), omega) for m in columns]

    def with_units(keep):
        units = [np.eye(1, len(columns), i, dtype=np.uint8)[0] for i, c in enumerate(cmp) if keep(c)]
        stack = list(h) + units
        return rank(np.array(stack, dtype=np.uint8)) if stack else 0

    return with_units(lambda c: c <= 0) - with_units(lambda c: c < 0)


def oracle_kameko_kernel(n: int, source_degree: int) -> int:
    """Nullity of the down map on classes, computed on admissible coordinates."""
    if (source_degree - n) % 2 or source_degree < n:
        return oracle_cohit(n, source_degree).dim
    d = (source_degree - n) // 2
    src = oracle_cohit(n, source_degree)
    tgt = oracle_cohit(n, d)
    cols = []
    for m in src.admissibles:
        if all(a % 2 for a in m):
            cols.append(tgt.reduce([tuple((a - 1) // 2 for a in m)]))
        else:
            cols.append(np.zeros(tgt.dim, dtype=np.uint8))
    if not cols or tgt.dim == 0:
        return src.dim
    mat = np.array(cols, dtype=np.uint8).T
    return src.dim - rank(mat)


def _substitute(m: Monomial, images: list[list[int]]) -> Counter:
    """Expand prod (sum of variables)^a with multinomial coefficients."""
    n = len(m)
    acc: Counter = Counter({(0,) * n: 1})
    for j, a in enumerate(m):
        if a == 0:
            continue
        vars_ = images[j]
        nxt: Counter = Counter()
        for split in compositions(a, len(vars_)) if vars_ else []:
            coeff = 1
            left = a
            for b in split:
                coeff *= comb(left, b)
                left -= b
            for t, c in acc.items():
                e = list(t)
                for v, b in zip(vars_, split):
                    e[v] += b
                nxt[tuple(e)] += c * coeff
        acc = nxt
    return Counter({t: 1 for t, c in acc.items() if c % 2})


def oracle_generators(n: int, group: str) -> list[list[list[int]]]:
    gens = []
    for i in range(n - 1):
        img = [[j] for j in range(n)]
        img[i], img[i + 1] = [i + 1], [i]
        gens.append(img)
    if group in ("gl", "general_linear") and n >= 2:
        img = [[j] for j in range(n)]
        img[n - 1] = [n - 2, n - 1]
        gens.append(img)
    return gens


def oracle_invariants(n: int, d: int, group: str) -> int:
    """Dimension of the fixed subspace of the quotient under the group generators."""
    q = oracle_cohit(n, d)
    if q.dim == 0:
        return 0
    blocks = []
    for img in oracle_generators(n, group):
        cols = [q.reduce(_substitute(m, img)) for m in q.admissibles]
        op = np.array(cols, dtype=np.uint8).T
        blocks.append(op ^ np.eye(q.dim, dtype=np.uint8))
    if not blocks:
        return q.dim
    return q.dim - rank(np.vstack(blocks))
