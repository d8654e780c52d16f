"""Hit subspaces, admissible bases, the zero/positive split and weight subquotients."""

from __future__ import annotations

import logging
import os
from collections.abc import Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import gf2
from .errors import DegreeWeightMismatch, ModeViolation, NonHomogeneous
from .monomials import (
    Monomial, WeightVector, achieved_weights, compare_weights, enumerate_monomials,
    minimal_spike, weight_degree, weight_vector,
)
from .steenrod import Polynomial, sq_monomial

log = logging.getLogger(__name__)

PARTS = ("full", "zero", "positive")


def in_part(m: Monomial, part: str) -> bool:
    if part == "full":
        return True
    positive = all(m)
    return positive if part == "positive" else not positive


def singer_floor(n: int, d: int) -> WeightVector | None:
    """Weight of the minimal spike; monomials of smaller weight are hit."""
    z = minimal_spike(n, d)
    return None if z is None else weight_vector(z)


def hit_generators(n: int, d: int, part: str = "full") -> Iterator[Polynomial]:
    """Sq^(2^s)(m) for every s with 2^s <= d and every monomial m of degree d - 2^s.

    Zero images are yielded too, so the count is a sum of binomials.
    """
    for s, m in _generator_sources(n, d, part):
        yield Polynomial(sq_monomial(1 << s, m), n)


def _generator_sources(n: int, d: int, part: str):
    # s descending, then monomials descending: high-weight relations first
    s = max(d, 1).bit_length() - 1
    while s >= 0:
        k = 1 << s
        if k <= d:
            for m in enumerate_monomials(n, d - k):
                if in_part(m, part):
                    yield s, m
        s -= 1


@dataclass(eq=False)
class CohitBasis:
    """Admissible basis of (QP_n)_d, of one of its parts, or of a weight subquotient.

    ``columns`` lists the tracked monomials in descending order; monomials
    that are absent are known to vanish in the quotient (hit, or below the
    weight being studied).
    """

    n: int
    d: int
    omega: WeightVector | None
    part: str
    columns: list[Monomial]
    echelon: gf2.EchelonBasis
    admissibles: list[Monomial] = field(init=False)

    def __post_init__(self):
        self.index = {m: i for i, m in enumerate(self.columns)}
        self.ncols = len(self.columns)
        pivots = set(self.echelon.pivot_columns())
        keep = [c for c in range(self.ncols) if c not in pivots
                and (self.omega is None or weight_vector(self.columns[c]) == self.omega)]
        self.admissibles = [self.columns[c] for c in keep]
        self._coord_of_bit = {self.ncols - 1 - c: i for i, c in enumerate(keep)}

    @property
    def dim(self) -> int:
        return len(self.admissibles)

    @property
    def mode(self) -> str:
        return "omega" if self.omega is not None else "full"

    def column_hash(self) -> bytes:
        return gf2.order_hash(self.columns)

    def restrict_weight(self, omega: WeightVector) -> CohitBasis:
        """The weight-omega subquotient read off this (full-order) echelon."""
        omega = _trim(omega)
        if weight_degree(omega) != self.d:
            raise DegreeWeightMismatch(f"deg{omega} != {self.d}")
        if self.omega is not None and self.omega != omega:
            raise ModeViolation("basis is already restricted to another weight")
        return CohitBasis(self.n, self.d, omega, self.part, self.columns, self.echelon)

    def _row(self, f: Polynomial | Iterable[Monomial]) -> int:
        terms = f.terms if isinstance(f, Polynomial) else f
        idx = self.index
        top = self.ncols - 1
        r = 0
        for t in terms:
            if len(t) != self.n or sum(t) != self.d:
                raise NonHomogeneous(f"term {t} is not of degree {self.d} in {self.n} variables")
            c = idx.get(t)
            if c is not None:
                if self.omega is not None and compare_weights(weight_vector(t), self.omega) > 0:
                    raise ModeViolation(f"{t} has weight above {self.omega}")
                r ^= 1 << (top - c)
            else:
                self._check_dropped(t)
        return r

    def _check_dropped(self, t: Monomial) -> None:
        if not in_part(t, self.part):
            raise ModeViolation(f"{t} lies outside the {self.part} part")
        if self.omega is not None and compare_weights(weight_vector(t), self.omega) > 0:
            raise ModeViolation(f"{t} has weight above {self.omega}")

    def reduce(self, f: Polynomial | Iterable[Monomial]) -> int:
        """Admissible coordinates of [f] as a bitmask (bit i is admissibles[i])."""
        residual = self.echelon.reduce(self._row(f))
        out = 0
        coord = self._coord_of_bit
        while residual:
            b = residual.bit_length() - 1
            i = coord.get(b)
            if i is not None:
                out |= 1 << i
            residual ^= 1 << b
        return out

    def is_hit(self, f: Polynomial | Iterable[Monomial]) -> bool:
        if self.omega is None:
            return self.echelon.member(self._row(f))
        return self.reduce(f) == 0

    def polynomial(self, coords: int) -> Polynomial:
        terms = [self.admissibles[i] for i in range(coords.bit_length()) if coords >> i & 1]
        return Polynomial(terms, self.n)

    def reduce_to_admissible(self, f) -> Polynomial:
        return self.polynomial(self.reduce(f))

    def to_json(self) -> dict:
        return {
            "n": self.n, "d": self.d,
            "omega": list(self.omega) if self.omega is not None else None,
            "part": self.part, "dim": self.dim,
            "admissibles": [list(m) for m in self.admissibles],
        }


def _trim(omega) -> WeightVector:
    w = list(omega)
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


def select_columns(n: int, d: int, part: str = "full",
                   omega: WeightVector | None = None) -> list[Monomial]:
    """Tracked monomials: the part's monomials, minus those killed by the
    minimal-spike criterion or lying below omega."""
    floor = singer_floor(n, d)
    out = []
    for m in enumerate_monomials(n, d):
        if not in_part(m, part):
            continue
        w = weight_vector(m)
        if floor is not None and compare_weights(w, floor) < 0:
            continue
        if omega is not None and compare_weights(w, omega) < 0:
            continue
        out.append(m)
    return out


def _rows_for(chunk, n, index, top):
    rows = []
    for s, m in chunk:
        r = 0
        for t in sq_monomial(1 << s, m):
            c = index.get(t)
            if c is not None:
                r ^= 1 << (top - c)
        rows.append(r)
    return rows


def eliminate(n: int, d: int, columns: list[Monomial], part: str = "full",
              threads: int = 1, chunk_size: int = 2048) -> gf2.EchelonBasis:
    """Stream the hit generators into an echelon over ``columns``.

    Rows are built in parallel chunks but committed strictly in generator
    order, so the result does not depend on ``threads``.
    """
    index = {m: i for i, m in enumerate(columns)}
    top = len(columns) - 1
    ech = gf2.EchelonBasis(len(columns))
    if not columns:
        return ech
    sources = _generator_sources(n, d, part)
    chunks = _chunked(sources, chunk_size)
    if threads <= 1:
        for chunk in chunks:
            for r in _rows_for(chunk, n, index, top):
                ech.insert(r)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for rows in pool.map(lambda c: _rows_for(c, n, index, top), chunks):
                for r in rows:
                    ech.insert(r)
    return ech


def _chunked(it, size):
    buf = []
    for x in it:
        buf.append(x)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


_MEMO: dict[tuple, CohitBasis] = {}


def clear_cache() -> None:
    _MEMO.clear()


def default_cache_dir() -> Path | None:
    value = os.environ.get("HITCALC_CACHE")
    return Path(value) if value else None


def _cache_path(cache_dir: Path, n, d, omega, part) -> Path:
    tag = "full" if omega is None else "w" + "-".join(map(str, omega))
    return Path(cache_dir) / f"hit_n{n}_d{d}_{part}_{tag}.hitc"


def _compute(n: int, d: int, part: str, omega: WeightVector | None, threads: int,
             cache_dir: Path | None) -> CohitBasis:
    if n < 1:
        raise ValueError("n must be positive")
    if d < 0:
        raise ValueError("d must be non-negative")
    if part not in PARTS:
        raise ValueError(f"part must be one of {PARTS}")
    key = (n, d, part, omega)
    if key in _MEMO:
        return _MEMO[key]
    columns = select_columns(n, d, part, omega)
    ech = None
    path = None
    if cache_dir is not None:
        path = _cache_path(cache_dir, n, d, omega, part)
        if path.exists():
            try:
                ech = gf2.load_echelon(path, n, d, omega, gf2.order_hash(columns))
            except (ValueError, OSError) as exc:
                log.warning("ignoring cache file %s: %s", path, exc)
    if ech is None:
        ech = eliminate(n, d, columns, part, threads)
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            gf2.save_echelon(path, ech, n, d, omega, gf2.order_hash(columns))
    basis = CohitBasis(n, d, omega, part, columns, ech)
    _MEMO[key] = basis
    return basis


def cohit_basis(n: int, d: int, part: str = "full", *, threads: int = 1,
                cache_dir: str | Path | None = None) -> CohitBasis:
    return _compute(n, d, part, None, threads, Path(cache_dir) if cache_dir else None)


def weight_subquotient(n: int, d: int, omega, part: str = "full", *,
                       basis: CohitBasis | None = None, threads: int = 1,
                       cache_dir: str | Path | None = None) -> CohitBasis:
    """(QP_n)_d(omega) for the chosen part.

    With ``basis`` (an unrestricted basis of the same n, d, part) the answer is
    read off its echelon; otherwise an elimination over the monomials of weight
    at least omega is run.
    """
    omega = _trim(omega)
    if weight_degree(omega) != d:
        raise DegreeWeightMismatch(f"weight {omega} has degree {weight_degree(omega)}, not {d}")
    if basis is not None:
        if (basis.n, basis.d, basis.part) != (n, d, part):
            raise ModeViolation("basis belongs to a different space")
        return basis.restrict_weight(omega)
    return _compute(n, d, part, omega, threads, Path(cache_dir) if cache_dir else None)


def is_hit(f: Polynomial, **kw) -> bool:
    """Whether a homogeneous polynomial lies in the hit subspace."""
    if not f.terms:
        return True
    d = f.degree()
    return cohit_basis(f.n, d, **kw).is_hit(f)


def reduce_to_admissible(f: Polynomial, **kw) -> Polynomial:
    d = f.degree()
    return cohit_basis(f.n, d, **kw).reduce_to_admissible(f)


def split_zero_positive(basis: CohitBasis, threads: int = 1) -> tuple[CohitBasis, CohitBasis]:
    n, d, omega = basis.n, basis.d, basis.omega
    if omega is None:
        return cohit_basis(n, d, "zero", threads=threads), cohit_basis(n, d, "positive", threads=threads)
    return (weight_subquotient(n, d, omega, "zero", threads=threads),
            weight_subquotient(n, d, omega, "positive", threads=threads))


@dataclass
class DirectSumReport:
    n: int
    d: int
    total: int
    pieces: dict[WeightVector, int]

    @property
    def ok(self) -> bool:
        return self.total == sum(self.pieces.values())


def check_direct_sum(n: int, d: int, part: str = "full", threads: int = 1) -> DirectSumReport:
    """Compare dim (QP_n)_d with the sum of independently computed weight pieces."""
    total = cohit_basis(n, d, part, threads=threads).dim
    floor = singer_floor(n, d)
    pieces = {}
    for w in achieved_weights(n, d):
        if floor is not None and compare_weights(w, floor) < 0:
            pieces[w] = 0
            continue
        pieces[w] = weight_subquotient(n, d, w, part, threads=threads).dim
    return DirectSumReport(n, d, total, pieces)
