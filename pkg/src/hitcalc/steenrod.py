"""Polynomials over F2 and the left action of Steenrod squares."""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from functools import lru_cache

from .errors import MalformedImage, NonHomogeneous
from .monomials import Monomial, format_monomial


def binom_parity(a: int, b: int) -> int:
    """C(a, b) mod 2 by Lucas: odd exactly when b is a bit-submask of a."""
    if b < 0 or b > a:
        return 0
    return int(b & ~a == 0)


@lru_cache(maxsize=4096)
def submasks(a: int) -> tuple[int, ...]:
    """All bit-submasks of a, ascending."""
    out = []
    s = a
    while True:
        out.append(s)
        if s == 0:
            break
        s = (s - 1) & a
    return tuple(reversed(out))


class Polynomial:
    """An element of F2[u1..un]: a set of exponent tuples, added by symmetric difference."""

    __slots__ = ("terms", "n")

    def __init__(self, terms: Iterable[Monomial] = (), n: int | None = None):
        acc: set[Monomial] = set()
        for t in terms:
            t = tuple(t)
            acc ^= {t}
        if n is None:
            n = len(next(iter(acc))) if acc else 0
        if any(len(t) != n for t in acc):
            raise ValueError("terms have different numbers of variables")
        self.terms = frozenset(acc)
        self.n = n

    @classmethod
    def monomial(cls, m: Monomial) -> Polynomial:
        return cls([m], len(m))

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls((), n)

    @classmethod
    def variable(cls, j: int, n: int) -> Polynomial:
        return cls([tuple(int(i == j) for i in range(n))], n)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Polynomial:
        return cls(parse_terms(text, n), n)

    def __add__(self, other: Polynomial) -> Polynomial:
        return Polynomial(self.terms ^ other.terms, self._common_n(other))

    __sub__ = __add__

    def __mul__(self, other: Polynomial) -> Polynomial:
        acc: set[Monomial] = set()
        for a in self.terms:
            for b in other.terms:
                acc ^= {tuple(x + y for x, y in zip(a, b))}
        return Polynomial(acc, self._common_n(other))

    def _common_n(self, other: Polynomial) -> int:
        if self.terms and other.terms and self.n != other.n:
            raise ValueError("polynomials live in different rings")
        return self.n if self.terms else other.n

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __contains__(self, m) -> bool:
        return tuple(m) in self.terms

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, reverse=True)

    def degrees(self) -> set[int]:
        return {sum(t) for t in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        degs = self.degrees()
        if len(degs) > 1:
            raise NonHomogeneous(f"terms of degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def square(self) -> Polynomial:
        return Polynomial((tuple(2 * a for a in t) for t in self.terms), self.n)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)


_TERM = re.compile(r"^([a-z])(\d+)(?:\^(\d+))?$")


def parse_terms(text: str, n: int | None = None, var: str = "u") -> list[Monomial]:
    """Parse `u1^3*u2^5 + u4` style text into exponent tuples."""
    text = "".join(text.split())
    if not text or text == "0":
        return []
    raw = []
    top = 0
    for chunk in text.split("+"):
        exps: dict[int, int] = {}
        if chunk != "1":
            for factor in chunk.split("*"):
                m = _TERM.match(factor)
                if not m or m.group(1) != var:
                    raise ValueError(f"bad factor {factor!r}")
                j = int(m.group(2))
                if j < 1:
                    raise ValueError(f"variable index must start at 1: {factor!r}")
                exps[j] = exps.get(j, 0) + int(m.group(3) or 1)
                top = max(top, j)
        raw.append(exps)
    n = top if n is None else n
    if top > n:
        raise ValueError(f"variable index {top} exceeds n={n}")
    return [tuple(e.get(j, 0) for j in range(1, n + 1)) for e in raw]


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    return " + ".join(format_monomial(t) for t in f.sorted_terms())


def sq_monomial(k: int, m: Monomial) -> list[Monomial]:
    """Terms of Sq^k(m).

    Each composition k = k_1 + ... + k_n with every k_j a submask of a_j
    contributes the distinct monomial (a_j + k_j), so no cancellation occurs.
    """
    if k == 0:
        return [m]
    n = len(m)
    if k > sum(m):
        return []
    cap = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        cap[i] = cap[i + 1] + m[i]
    out: list[Monomial] = []

    def rec(i: int, rem: int, acc: tuple) -> None:
        a = m[i]
        if i == n - 1:
            if rem & ~a == 0:
                out.append(acc + (a + rem,))
            return
        nxt = cap[i + 1]
        for s in submasks(a):
            if s > rem:
                break
            if rem - s <= nxt:
                rec(i + 1, rem - s, acc + (a + s,))

    rec(0, k, ())
    return out


def sq(k: int, f: Polynomial) -> Polynomial:
    acc: set[Monomial] = set()
    for t in f.terms:
        acc.symmetric_difference_update(sq_monomial(k, t))
    return Polynomial(acc, f.n)


def _image_variables(image: Polynomial, n: int) -> list[int]:
    out = []
    for t in image.terms:
        if len(t) != n or sum(t) != 1:
            raise MalformedImage(f"image term {t} is not a single variable")
        out.append(t.index(1))
    return sorted(out)


def _power_of_sum(variables: Sequence[int], a: int, n: int) -> list[Monomial]:
    """Terms of (x_1 + ... + x_r)^a: every way of handing the bits of a to the variables."""
    if a == 0:
        return [(0,) * n]
    if not variables:
        return []
    bits = [1 << i for i in range(a.bit_length()) if a >> i & 1]
    results = [[0] * n]
    for b in bits:
        results = [r[:j] + [r[j] + b] + r[j + 1:] for r in results for j in variables]
    return [tuple(r) for r in results]


def substitute(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Ring map sending u_j to images[j], each a sum of distinct variables."""
    n = f.n if f.terms else (images[0].n if images else 0)
    if len(images) != n:
        raise MalformedImage(f"expected {n} images, got {len(images)}")
    target_n = images[0].n if images else n
    variables = [_image_variables(img, target_n) for img in images]
    acc: set[Monomial] = set()
    for t in f.terms:
        partial: set[Monomial] = {(0,) * target_n}
        for j, a in enumerate(t):
            if a == 0:
                continue
            expansion = _power_of_sum(variables[j], a, target_n)
            nxt: set[Monomial] = set()
            for p in partial:
                for e in expansion:
                    nxt ^= {tuple(x + y for x, y in zip(p, e))}
            partial = nxt
        acc ^= partial
    return Polynomial(acc, target_n)
