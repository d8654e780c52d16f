"""Kameko's squaring maps, their kernels and the isomorphism test.

Two routes compute the kernel of the down map (QP_n)_D -> (QP_n)_d, D = 2d + n.

``direct`` reads the weight pieces with first weight entry below n off the
full elimination in degree D.

``decomposed`` avoids the degree-D monomial space.  It applies when every
monomial with fewer than n - 2 odd exponents lies below the minimal spike, so
only two blocks survive: u_N y^2 (all exponents odd, N = {1..n}) and u_I w^2
with |I| = n - 2.  The second block is modelled as copies of (QP_n)_e,
e = d + 1, one per I.  On that model the hit relations with no all-odd part
are spanned by

* Sq^1(u_J v^2), |J| = n - 1: the sum over j in J of u_{J-j} (u_j v)^2;
* Sq^2(u_N) E^2 for every E with Sq^(2^s - 1) E-parts cancelling, i.e. the
  second halves of the relations found while eliminating
  [Sq^(2^s)(y) | Sq^(2^s - 1)(y)] over all of (P_n)_d.

Coordinates are u_I a^2 for admissible a, sorted by the monomial order, so
the surviving coordinates are exactly the admissible monomials of degree D.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations

from . import gf2
from .errors import DegreeMismatch, ModeViolation, MuTooLarge, NonHomogeneous, TooLarge
from .hit import CohitBasis, cohit_basis, singer_floor
from .monomials import (
    Monomial, WeightVector, achieved_weights, compare_weights, count_monomials,
    enumerate_monomials, mu, order_key, weight_degree, weight_vector,
)
from .steenrod import Polynomial, sq_monomial

log = logging.getLogger(__name__)

DIRECT_LIMIT = 80_000
DECOMPOSED_LIMIT = 100_000  # monomials in the half degree d + 1


@dataclass(frozen=True)
class KamekoContext:
    n: int
    d: int

    @property
    def source_degree(self) -> int:
        return 2 * self.d + self.n


def kameko_down(m: Monomial, source_degree: int | None = None) -> Monomial | None:
    """y when m = u_1...u_n y^2, otherwise None (the zero class)."""
    if source_degree is not None and sum(m) != source_degree:
        raise DegreeMismatch(f"{m} does not have degree {source_degree}")
    if all(a & 1 for a in m):
        return tuple(a >> 1 for a in m)
    return None


def kameko_down_poly(f: Polynomial) -> Polynomial:
    return Polynomial((y for t in f.terms if (y := kameko_down(t)) is not None), f.n)


def kameko_up(t: Monomial | Polynomial) -> Monomial | Polynomial:
    if isinstance(t, Polynomial):
        return Polynomial((tuple(2 * a + 1 for a in m) for m in t.terms), t.n)
    return tuple(2 * a + 1 for a in t)


def kameko_iso_check(n: int, d: int, verify: bool = True) -> bool:
    """Whether the down map out of degree 2d + n is an isomorphism; when it is
    and ``verify`` is set, the two cohit dimensions are compared."""
    iso = mu(2 * d + n) == n if 2 * d + n > 0 else d == 0
    if iso and verify:
        lhs = cohit_basis(n, 2 * d + n).dim
        rhs = cohit_basis(n, d).dim
        if lhs != rhs:
            raise AssertionError(f"dim (QP_{n})_{2 * d + n} = {lhs} but dim (QP_{n})_{d} = {rhs}")
    return iso


def down_operator(source: CohitBasis, target: CohitBasis) -> list[int]:
    """Columns (admissible coordinates of the target) of the down map on classes."""
    cols = []
    for m in source.admissibles:
        y = kameko_down(m)
        cols.append(0 if y is None else target.reduce([y]))
    return cols


def candidate_kernel_weights(n: int, D: int) -> list[WeightVector]:
    """Achieved weights not below the minimal spike with first entry below n."""
    floor = singer_floor(n, D)
    out = []
    for w in achieved_weights(n, D):
        if floor is not None and compare_weights(w, floor) < 0:
            continue
        if (w[0] if w else 0) < n:
            out.append(w)
    return out


@dataclass
class KernelResult:
    n: int
    source_degree: int
    pieces: dict[WeightVector, int]
    method: str
    space: object = field(repr=False, default=None)

    @property
    def total(self) -> int:
        return sum(self.pieces.values())

    def to_json(self) -> dict:
        return {
            "n": self.n, "d": self.source_degree, "method": self.method,
            "total": self.total,
            "pieces": [{"omega": list(w), "dim": k} for w, k in self.pieces.items()],
        }


def decomposed_feasible(n: int, D: int) -> bool:
    return decomposition_applies(n, D) and count_monomials(n, (D - n) // 2 + 1) <= DECOMPOSED_LIMIT


def decomposition_applies(n: int, D: int) -> bool:
    if n < 2 or D < n or (D - n) % 2:
        return False
    floor = singer_floor(n, D)
    return floor is not None and floor[0] == n - 2


def kameko_kernel(n: int, D: int, method: str = "auto", threads: int = 1,
                  allow_large: bool = False) -> KernelResult:
    if mu(D) > n:
        raise MuTooLarge(f"mu({D}) = {mu(D)} exceeds n = {n}")
    weights = candidate_kernel_weights(n, D)
    if method == "auto":
        small = count_monomials(n, D) <= DIRECT_LIMIT
        method = "direct" if small or not decomposed_feasible(n, D) else "decomposed"
    if method == "direct":
        if count_monomials(n, D) > DIRECT_LIMIT and not allow_large:
            raise TooLarge(f"{count_monomials(n, D)} monomials in degree {D}; pass allow_large")
        full = cohit_basis(n, D, threads=threads)
        pieces = {w: full.restrict_weight(w).dim for w in weights}
        return KernelResult(n, D, pieces, "direct", full)
    if method == "decomposed":
        if not decomposed_feasible(n, D) and not allow_large:
            raise TooLarge(f"half degree {(D - n) // 2 + 1} too large for the decomposed model; pass allow_large")
        space = decomposed_space(n, D, threads)
        pieces = {w: space.kernel.restrict_weight(w).dim for w in weights}
        return KernelResult(n, D, pieces, "decomposed", space)
    raise ValueError(f"unknown method {method!r}")


_DECOMPOSED: dict[tuple[int, int], DecomposedSpace] = {}


def decomposed_space(n: int, D: int, threads: int = 1) -> DecomposedSpace:
    """Memoized DecomposedSpace.build."""
    key = (n, D)
    if key not in _DECOMPOSED:
        _DECOMPOSED[key] = DecomposedSpace.build(n, D, threads=threads)
    return _DECOMPOSED[key]


class _Subspace:
    """Quotient coordinates for one block, with the CohitBasis-style interface."""

    def __init__(self, n, d, omega, part, admissibles, reducer, owner):
        self.n, self.d, self.omega, self.part = n, d, omega, part
        self.admissibles = admissibles
        self._reducer = reducer
        self.owner = owner

    @property
    def dim(self) -> int:
        return len(self.admissibles)

    def reduce(self, f) -> int:
        return self._reducer(f)

    def is_hit(self, f) -> bool:
        return self.reduce(f) == 0

    def polynomial(self, coords: int) -> Polynomial:
        return Polynomial([self.admissibles[i] for i in range(coords.bit_length()) if coords >> i & 1], self.n)

    def reduce_to_admissible(self, f) -> Polynomial:
        return self.polynomial(self.reduce(f))

    def restrict_weight(self, omega) -> _Subspace:
        return self.owner.restrict(self, tuple(omega))

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "omega": list(self.omega) if self.omega else None,
                "part": self.part, "dim": self.dim, "admissibles": [list(m) for m in self.admissibles]}


class DecomposedSpace:
    """(QP_n)_D assembled from the all-odd block (a copy of (QP_n)_d) and the
    kernel block described in the module docstring."""

    def __init__(self, n: int, D: int):
        self.n, self.D = n, D
        self.d = (D - n) // 2
        self.e = self.d + 1
        self.stats: dict[str, float] = {}

    @classmethod
    def build(cls, n: int, D: int, threads: int = 1) -> DecomposedSpace:
        if not decomposition_applies(n, D):
            raise ValueError(f"decomposition does not apply to n={n}, D={D}")
        self = cls(n, D)
        self._build(threads)
        return self

    # -- setup ---------------------------------------------------------------
    def _build(self, threads: int) -> None:
        n, e, d = self.n, self.e, self.d
        t0 = time.time()
        self.base = cohit_basis(n, e, threads=threads)  # models the u_I w^2 block
        self._nf_cache: dict[Monomial, int] = {}
        subsets = list(combinations(range(n), n - 2))
        self.subsets = subsets
        length = self.D.bit_length()
        coords = []
        for I in subsets:
            for i, a in enumerate(self.base.admissibles):
                x = tuple(2 * a[j] + (j in I) for j in range(n))
                coords.append((order_key(x, length), x, I, i))
        coords.sort(reverse=True)
        self.t_monomials = [c[1] for c in coords]
        self.nt = len(coords)
        self._tbit = {I: [0] * self.base.dim for I in subsets}
        for pos, (_, _, I, i) in enumerate(coords):
            self._tbit[I][i] = 1 << (self.nt - 1 - pos)
        self.stats["setup"] = time.time() - t0

        # relations Sq^1(u_J v^2), |J| = n - 1
        t0 = time.time()
        self.first = gf2.EchelonBasis(self.nt)
        for J in combinations(range(n), n - 1):
            for v in enumerate_monomials(n, d):
                r = 0
                for j in J:
                    w = v[:j] + (v[j] + 1,) + v[j + 1:]
                    K = tuple(x for x in J if x != j)
                    r ^= self._embed(K, self._nf(w))
                self.first.insert(r)
        self.stats["first_relations"] = time.time() - t0
        pivots = set(self.first.pivot_columns())
        self.q_cols = [c for c in range(self.nt) if c not in pivots]
        self._q_of_bit = {self.nt - 1 - c: i for i, c in enumerate(self.q_cols)}
        self.nq = len(self.q_cols)

        # all-odd block: augmented elimination over the whole of (P_n)_d
        t0 = time.time()
        self.s_columns = enumerate_monomials(n, d)
        self.s_index = {m: i for i, m in enumerate(self.s_columns)}
        ns = len(self.s_columns)
        self._s_piv: dict[int, tuple[int, int]] = {}
        self._c_cache: dict[Monomial, int] = {}
        self.second = gf2.EchelonBasis(self.nq)
        top = ns - 1
        s = d.bit_length()
        while s >= 0:
            k = 1 << s
            if k <= d:
                for y in enumerate_monomials(n, d - k):
                    row = 0
                    for t in sq_monomial(k, y):
                        row ^= 1 << (top - self.s_index[t])
                    tag = 0
                    for E in sq_monomial(k - 1, y):
                        tag ^= self._c(E)
                    self._insert_s(row, tag)
            s -= 1
        self.stats["odd_block"] = time.time() - t0
        self.s_admissibles = [self.s_columns[ns - 1 - p] for p in range(ns - 1, -1, -1)
                              if p not in self._s_piv]

        # kernel coordinates
        piv2 = set(self.second.pivot_columns())
        self.k_qidx = [i for i in range(self.nq) if i not in piv2]
        self.kernel_admissibles = [self.t_monomials[self.q_cols[i]] for i in self.k_qidx]
        self._k_of_qbit = {self.nq - 1 - i: k for k, i in enumerate(self.k_qidx)}
        self.kernel = _Subspace(n, self.D, None, "kernel", self.kernel_admissibles,
                                self._reduce_kernel, self)
        self.full = _Subspace(n, self.D, None, "full",
                              [kameko_up(y) for y in self.s_admissibles] + self.kernel_admissibles,
                              self._reduce_full, self)

    def _nf(self, w: Monomial) -> int:
        v = self._nf_cache.get(w)
        if v is None:
            v = self.base.reduce([w])
            self._nf_cache[w] = v
        return v

    def _embed(self, I, mask: int) -> int:
        bits = self._tbit[I]
        r = 0
        while mask:
            low = mask & -mask
            r |= bits[low.bit_length() - 1]
            mask ^= low
        return r

    def _to_q(self, trow: int) -> int:
        residual = self.first.reduce(trow)
        out = 0
        qb = self._q_of_bit
        nq1 = self.nq - 1
        while residual:
            b = residual.bit_length() - 1
            out |= 1 << (nq1 - qb[b])
            residual ^= 1 << b
        return out

    def _c(self, E: Monomial) -> int:
        """Kernel-block image of Sq^2(u_N) E^2 in reduced coordinates."""
        v = self._c_cache.get(E)
        if v is None:
            n = self.n
            r = 0
            for J in combinations(range(n), 2):
                w = tuple(E[j] + (j in J) for j in range(n))
                K = tuple(x for x in range(n) if x not in J)
                r ^= self._embed(K, self._nf(w))
            v = self._to_q(r)
            self._c_cache[E] = v
        return v

    def _insert_s(self, row: int, tag: int) -> None:
        piv = self._s_piv
        while row:
            p = row.bit_length() - 1
            hit = piv.get(p)
            if hit is None:
                piv[p] = (row, tag)
                return
            row ^= hit[0]
            tag ^= hit[1]
        if tag:
            self.second.insert(tag)

    # -- reduction -----------------------------------------------------------
    def _split(self, f) -> tuple[int, int]:
        """(all-odd block as a row over (P_n)_d, kernel block in reduced coordinates)."""
        terms = f.terms if isinstance(f, Polynomial) else f
        n = self.n
        srow = 0
        trow = 0
        top = len(self.s_columns) - 1
        floor = singer_floor(n, self.D)
        for t in terms:
            if len(t) != n or sum(t) != self.D:
                raise NonHomogeneous(f"term {t} is not of degree {self.D}")
            odd = tuple(j for j in range(n) if t[j] & 1)
            half = tuple(a >> 1 for a in t)
            if len(odd) == n:
                srow ^= 1 << (top - self.s_index[half])
            elif len(odd) == n - 2:
                trow ^= self._embed(odd, self._nf(half))
            elif compare_weights(weight_vector(t), floor) >= 0:
                raise AssertionError(f"{t} should lie below the minimal spike")
        return srow, self._to_q(trow)

    def _lift(self, srow: int) -> tuple[int, int]:
        """Reduce the all-odd part; returns (residual row, kernel-block correction)."""
        piv = self._s_piv
        out = 0
        tag = 0
        while srow:
            p = srow.bit_length() - 1
            hit = piv.get(p)
            if hit is None:
                out |= 1 << p
                srow ^= 1 << p
            else:
                srow ^= hit[0]
                tag ^= hit[1]
        return out, tag

    def _kernel_coords(self, q: int) -> int:
        residual = self.second.reduce(q)
        out = 0
        kb = self._k_of_qbit
        while residual:
            b = residual.bit_length() - 1
            out |= 1 << kb[b]
            residual ^= 1 << b
        return out

    def _reduce_kernel(self, f) -> int:
        srow, q = self._split(f)
        if srow:
            raise ModeViolation("polynomial has an all-odd part; use the full space")
        return self._kernel_coords(q)

    def _reduce_full(self, f) -> int:
        srow, q = self._split(f)
        residual, tag = self._lift(srow)
        ns = len(self.s_columns)
        s_pos = {m: i for i, m in enumerate(self.s_admissibles)}
        out = 0
        while residual:
            b = residual.bit_length() - 1
            out |= 1 << s_pos[self.s_columns[ns - 1 - b]]
            residual ^= 1 << b
        return out | (self._kernel_coords(q ^ tag) << len(self.s_admissibles))

    def is_hit(self, f) -> bool:
        return self._reduce_full(f) == 0

    def restrict(self, sub: _Subspace, omega: WeightVector) -> _Subspace:
        if weight_degree(omega) != self.D:
            raise ValueError(f"weight {omega} has degree {weight_degree(omega)}, not {self.D}")
        keep = [i for i, m in enumerate(sub.admissibles) if weight_vector(m) == omega]
        pos = {i: k for k, i in enumerate(keep)}
        parent = sub

        def reducer(f) -> int:
            for t in (f.terms if isinstance(f, Polynomial) else f):
                if compare_weights(weight_vector(t), omega) > 0:
                    raise ModeViolation(f"{t} has weight above {omega}")
            c = parent.reduce(f)
            out = 0
            for i, k in pos.items():
                if c >> i & 1:
                    out |= 1 << k
            return out

        return _Subspace(self.n, self.D, omega, sub.part,
                         [sub.admissibles[i] for i in keep], reducer, self)
