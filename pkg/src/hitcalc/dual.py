"""Divided powers, the right action of Steenrod squares, and the pairing with P_n.

A divided-power monomial a1^(t1)...an^(tn) is the dual basis element of
u1^t1...un^tn, so a DualPolynomial is again a set of exponent tuples.
"""

from __future__ import annotations

import re
from collections.abc import Iterable

from .errors import DegreeMismatch, NonHomogeneous
from .gf2 import nullspace
from .monomials import Monomial, enumerate_monomials
from .steenrod import Polynomial, binom_parity


class DualPolynomial:
    __slots__ = ("terms", "n")

    def __init__(self, terms: Iterable[Monomial] = (), n: int | None = None):
        acc: set[Monomial] = set()
        for t in terms:
            acc ^= {tuple(t)}
        if n is None:
            n = len(next(iter(acc))) if acc else 0
        self.terms = frozenset(acc)
        self.n = n

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> DualPolynomial:
        return cls(parse_divided(text, n), n)

    def __add__(self, other: DualPolynomial) -> DualPolynomial:
        return DualPolynomial(self.terms ^ other.terms, self.n or other.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, DualPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        degs = {sum(t) for t in self.terms}
        if len(degs) > 1:
            raise NonHomogeneous(f"terms of degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            "*".join(f"a{i + 1}^({e})" for i, e in enumerate(t) if e) or "1"
            for t in sorted(self.terms, reverse=True))

    def __repr__(self) -> str:
        return f"DualPolynomial({str(self)!r})"


_FACTOR = re.compile(r"^a(\d+)\^\((\d+)\)$|^a(\d+)$")


def parse_divided(text: str, n: int | None = None) -> list[Monomial]:
    """Parse `a1^(3)*a2^(11) + ...`; a bare `a2` means a2^(1)."""
    text = "".join(text.split())
    if not text or text == "0":
        return []
    raw = []
    top = 0
    for chunk in text.split("+"):
        exps: dict[int, int] = {}
        if chunk != "1":
            for factor in chunk.split("*"):
                m = _FACTOR.match(factor)
                if not m:
                    raise ValueError(f"bad divided-power factor {factor!r}")
                j = int(m.group(1) or m.group(3))
                if j in exps:
                    raise ValueError(f"variable a{j} repeated in {chunk!r}")
                exps[j] = int(m.group(2) or 1)
                top = max(top, j)
        raw.append(exps)
    n = top if n is None else n
    if top > n:
        raise ValueError(f"variable index {top} exceeds n={n}")
    return [tuple(e.get(j, 0) for j in range(1, n + 1)) for e in raw]


def right_sq_monomial(k: int, t: Monomial) -> list[Monomial]:
    """(a^(t))Sq^k = C(t-k, k) a^(t-k) per variable, combined by Cartan."""
    out: list[Monomial] = []
    n = len(t)

    def rec(i: int, rem: int, acc: tuple) -> None:
        if i == n:
            if rem == 0:
                out.append(acc)
            return
        a = t[i]
        for j in range(min(rem, a // 2) + 1):
            if binom_parity(a - j, j):
                rec(i + 1, rem - j, acc + (a - j,))

    rec(0, k, ())
    return out


def right_sq(k: int, f: DualPolynomial) -> DualPolynomial:
    acc: set[Monomial] = set()
    for t in f.terms:
        acc.symmetric_difference_update(right_sq_monomial(k, t))
    return DualPolynomial(acc, f.n)


def is_annihilated(f: DualPolynomial) -> bool:
    """True when every positive square kills f (all k, not only powers of two)."""
    d = f.degree()
    return all(not right_sq(k, f) for k in range(1, d + 1))


def pairing(f: DualPolynomial, g: Polynomial) -> int:
    if f.terms and g.terms:
        if f.n != g.n:
            raise DegreeMismatch("different numbers of variables")
        if f.degree() != g.degree():
            raise DegreeMismatch(f"degrees {f.degree()} and {g.degree()} differ")
    return len(f.terms & g.terms) % 2


def annihilated_dimension(n: int, d: int) -> int:
    """Dimension of the annihilated divided powers of degree d, by solving
    the linear conditions (f)Sq^k = 0 on the basis of Gamma_d."""
    basis = enumerate_monomials(n, d)
    # one linear functional per (k, target monomial); row bit j = basis element j
    conditions: dict[tuple, int] = {}
    for j, t in enumerate(basis):
        for k in range(1, d + 1):
            for s in right_sq_monomial(k, t):
                key = (k, s)
                conditions[key] = conditions.get(key, 0) ^ (1 << j)
    return len(nullspace(conditions.values(), len(basis)))
