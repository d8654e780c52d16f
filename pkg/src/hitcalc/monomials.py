"""Monomials in F2[u1, ..., un], weight vectors, the admissibility order and spikes.

A monomial is a plain tuple of non-negative exponents.  Degree, weight and
order are computed from that tuple; nothing else is stored.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import DegreeMismatch

Monomial = tuple[int, ...]
WeightVector = tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


def degree(m: Monomial) -> int:
    return sum(m)


def alpha(d: int) -> int:
    """Number of ones in the binary expansion of d."""
    return bin(d).count("1")


def weight_vector(m: Monomial) -> WeightVector:
    """Entry i counts the exponents whose bit i-1 is set; trailing zeros trimmed."""
    w = []
    top = max(m, default=0).bit_length()
    for i in range(top):
        w.append(sum((a >> i) & 1 for a in m))
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


def weight_degree(w: WeightVector) -> int:
    return sum(c << i for i, c in enumerate(w))


def pad(w: WeightVector, length: int) -> WeightVector:
    return tuple(w) + (0,) * (length - len(w))


def compare_weights(w1: WeightVector, w2: WeightVector) -> int:
    length = max(len(w1), len(w2))
    a, b = pad(w1, length), pad(w2, length)
    return (a > b) - (a < b)


def order_key(m: Monomial, length: int = 0):
    """Sort key realising the admissibility order: weight first, then exponents."""
    w = weight_vector(m)
    return pad(w, max(length, len(w))), m


def compare(u: Monomial, y: Monomial) -> int:
    if len(u) != len(y) or sum(u) != sum(y):
        raise DegreeMismatch(f"cannot compare {u} and {y}")
    length = max(max(u, default=0), max(y, default=0)).bit_length()
    ku, ky = order_key(u, length), order_key(y, length)
    return (ku > ky) - (ku < ky)


@lru_cache(maxsize=None)
def mu(d: int) -> int:
    """Least n with alpha(d + n) <= n, i.e. d is a sum of n numbers 2^s - 1."""
    n = 1
    while alpha(d + n) > n:
        n += 1
    return n


def is_spike(m: Monomial) -> bool:
    return all((a + 1) & a == 0 for a in m)


def _spike_exponent_bits(m: Monomial) -> list[int]:
    return [(a + 1).bit_length() - 1 for a in m]


def is_minimal_spike(m: Monomial) -> bool:
    """Exponents 2^c - 1 with c strictly decreasing except possibly the last two,
    all nonzero ones first, and the total number of them equal to mu(degree)."""
    if not is_spike(m) or sum(m) == 0:
        return False
    cs = _spike_exponent_bits(m)
    r = sum(1 for c in cs if c)
    if any(cs[i] == 0 for i in range(r)):
        return False
    head = cs[:r]
    if any(head[i] <= head[i + 1] for i in range(r - 2)):
        return False
    if r >= 2 and head[r - 2] < head[r - 1]:
        return False
    return r == mu(sum(m))


def _spike_decompositions(d: int, parts: int, max_c: int):
    # c_1 > c_2 > ... > c_{r-1} >= c_r >= 1 with sum of (2^c - 1) equal to d
    if parts == 0:
        if d == 0:
            yield ()
        return
    for c in range(min(max_c, (d + 1).bit_length()), 0, -1):
        rest = d - ((1 << c) - 1)
        if rest < 0:
            continue
        bound = c if parts == 2 else c - 1
        for tail in _spike_decompositions(rest, parts - 1, bound):
            yield (c,) + tail


def minimal_spike(n: int, d: int) -> Monomial | None:
    if d == 0:
        return (0,) * n
    r = mu(d)
    if r > n:
        return None
    for cs in _spike_decompositions(d, r, d.bit_length() + 1):
        return tuple((1 << c) - 1 for c in cs) + (0,) * (n - r)
    return None


def count_monomials(n: int, d: int) -> int:
    return comb(d + n - 1, n - 1) if n > 0 else int(d == 0)


def _compositions(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in _compositions(n - 1, d - a):
            yield (a,) + rest


def enumerate_monomials(n: int, d: int, omega: WeightVector | None = None,
                        strictness: str = "all") -> list[Monomial]:
    """All degree-d monomials in n variables, sorted descending in the
    admissibility order.

    strictness is "all", "equal" (weight exactly omega), "below" (weight
    strictly below omega) or "at-least" (weight not below omega).
    """
    mons = list(_compositions(n, d)) if n else ([()] if d == 0 else [])
    if omega is not None and strictness != "all":
        keep = {
            "equal": lambda c: c == 0,
            "below": lambda c: c < 0,
            "at-least": lambda c: c >= 0,
        }[strictness]
        mons = [m for m in mons if keep(compare_weights(weight_vector(m), omega))]
    length = max(d, 1).bit_length()
    mons.sort(key=lambda m: order_key(m, length), reverse=True)
    return mons


def achieved_weights(n: int, d: int) -> list[WeightVector]:
    """Distinct weight vectors of degree-d monomials, descending."""
    seen = {weight_vector(m) for m in _compositions(n, d)} if n else set()
    length = max(d, 1).bit_length()
    return sorted(seen, key=lambda w: pad(w, length), reverse=True)


def variable_subsets(n: int, size: int):
    return combinations(range(n), size)


def format_monomial(m: Monomial, var: str = "u") -> str:
    parts = []
    for i, a in enumerate(m):
        if a == 1:
            parts.append(f"{var}{i + 1}")
        elif a:
            parts.append(f"{var}{i + 1}^{a}")
    return "*".join(parts) or "1"
