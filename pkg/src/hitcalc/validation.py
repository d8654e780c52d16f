"""Argument checks shared by the estimator and the command line."""

from __future__ import annotations

from collections.abc import Iterable

from .errors import DegreeMismatch, DegreeWeightMismatch
from .hit import PARTS
from .monomials import weight_degree
from .steenrod import Polynomial, parse_terms


def check_n_d(n: int, d: int) -> tuple[int, int]:
    n, d = int(n), int(d)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if d < 0:
        raise ValueError(f"d must be non-negative, got {d}")
    return n, d


def check_part(part: str) -> str:
    if part not in PARTS:
        raise ValueError(f"part must be one of {', '.join(PARTS)}, got {part!r}")
    return part


def parse_omega(text: str | Iterable[int] | None):
    if text is None:
        return None
    if isinstance(text, str):
        text = [int(x) for x in text.replace(" ", "").split(",") if x]
    w = [int(x) for x in text]
    if any(x < 0 for x in w):
        raise ValueError("weight entries must be non-negative")
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


def check_omega(omega, d: int, n: int | None = None):
    w = parse_omega(omega)
    if w is None:
        return None
    if weight_degree(w) != d:
        raise DegreeWeightMismatch(f"weight {w} has degree {weight_degree(w)}, not {d}")
    if n is not None and any(x > n for x in w):
        raise ValueError(f"weight {w} has an entry larger than n = {n}")
    return w


def check_polynomial(f, n: int, d: int | None = None) -> Polynomial:
    """Accept a Polynomial, polynomial text, or an iterable of exponent tuples."""
    if isinstance(f, str):
        f = Polynomial(parse_terms(f, n), n)
    elif not isinstance(f, Polynomial):
        f = Polynomial([tuple(t) for t in f], n)
    if f.terms and f.n != n:
        raise DegreeMismatch(f"polynomial has {f.n} variables, expected {n}")
    if d is not None and f.terms and f.degree() != d:
        raise DegreeMismatch(f"polynomial has degree {f.degree()}, expected {d}")
    return f
