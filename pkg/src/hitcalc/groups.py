"""Linear substitutions acting on cohit spaces, fixed points, and projections P_n -> P_(n-1)."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import gf2
from .errors import DegreeMismatch, IndexOutOfRange, ModeViolation
from .spaces import quotient_space
from .steenrod import Polynomial, _power_of_sum

GROUPS = {"symmetric": "symmetric", "sigma": "symmetric",
          "general_linear": "general_linear", "gl": "general_linear"}


@dataclass(frozen=True)
class Substitution:
    """u_j -> sum of the variables in images[j] (0-based indices)."""

    images: tuple[tuple[int, ...], ...]
    target_n: int
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for img in self.images:
            if len(set(img)) != len(img) or any(not 0 <= v < self.target_n for v in img):
                raise ValueError(f"image {img} is not a sum of distinct variables")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def from_polynomials(cls, images: list[Polynomial], name: str = "") -> Substitution:
        target = images[0].n if images else 0
        out = []
        for img in images:
            vs = []
            for t in img.terms:
                if sum(t) != 1:
                    raise ValueError(f"image term {t} is not a single variable")
                vs.append(t.index(1))
            out.append(tuple(sorted(vs)))
        return cls(tuple(out), target, name)

    def polynomials(self) -> list[Polynomial]:
        return [Polynomial([tuple(int(i == v) for i in range(self.target_n)) for v in img],
                           self.target_n) for img in self.images]

    def is_permutation(self) -> bool:
        return (self.n == self.target_n and all(len(i) == 1 for i in self.images)
                and len({i[0] for i in self.images}) == self.n)

    def apply_monomial(self, m) -> set:
        tn = self.target_n
        partial = {(0,) * tn}
        for j, a in enumerate(m):
            if a == 0:
                continue
            expansion = _power_of_sum(self.images[j], a, tn)
            nxt: set = set()
            for p in partial:
                for e in expansion:
                    nxt ^= {tuple(x + y for x, y in zip(p, e))}
            partial = nxt
        return partial

    def apply(self, f: Polynomial) -> Polynomial:
        acc: set = set()
        for t in f.terms:
            acc ^= self.apply_monomial(t)
        return Polynomial(acc, self.target_n)

    def __call__(self, f: Polynomial) -> Polynomial:
        return self.apply(f)


def adjacent_swap(n: int, i: int) -> Substitution:
    """Exchange u_i and u_(i+1), 1-based."""
    imgs = [(j,) for j in range(n)]
    imgs[i - 1], imgs[i] = (i,), (i - 1,)
    return Substitution(tuple(imgs), n, f"rho{i}")


def transvection(n: int) -> Substitution:
    """u_n -> u_n + u_(n-1), other variables fixed."""
    imgs = [(j,) for j in range(n)]
    imgs[n - 1] = (n - 2, n - 1)
    return Substitution(tuple(imgs), n, f"rho{n}")


def standard_generators(n: int, group: str) -> list[Substitution]:
    if n < 2:
        raise ValueError("need at least two variables")
    kind = GROUPS.get(group)
    if kind is None:
        raise ValueError(f"unknown group {group!r}")
    gens = [adjacent_swap(n, i) for i in range(1, n)]
    if kind == "general_linear":
        gens.append(transvection(n))
    return gens


def induced_columns(sub: Substitution, space, threads: int = 1) -> list[int]:
    """Column j: admissible coordinates of sub(admissible_j)."""
    part = getattr(space, "part", "full")
    if part in ("zero", "positive") and not sub.is_permutation():
        raise ModeViolation(f"{sub.name or 'substitution'} does not preserve the {part} part")
    if sub.n != space.n or sub.target_n != space.n:
        raise ModeViolation("substitution and space have different numbers of variables")

    def column(m):
        return space.reduce(sub.apply_monomial(m))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(column, space.admissibles))
    return [column(m) for m in space.admissibles]


def induced_operator(sub: Substitution, space, threads: int = 1) -> list[int]:
    """Row-major square matrix of the induced map on admissible coordinates."""
    return gf2.transpose(induced_columns(sub, space, threads), space.dim)


@dataclass
class InvariantResult:
    group: str
    n: int
    d: int
    omega: tuple | None
    coords: list[int]
    generators: list[Polynomial]

    @property
    def dim(self) -> int:
        return len(self.coords)

    def to_json(self) -> dict:
        return {
            "group": "gl" if self.group == "general_linear" else "sigma",
            "n": self.n, "d": self.d,
            "omega": list(self.omega) if self.omega else None,
            "dim": self.dim,
            "generators": [[list(t) for t in g.sorted_terms()] for g in self.generators],
        }


def fixed_space(space, gens: list[Substitution], threads: int = 1) -> list[int]:
    dim = space.dim
    if dim == 0:
        return []
    maps = []
    for g in gens:
        rows = induced_operator(g, space, threads)
        maps.append([r ^ (1 << i) for i, r in enumerate(rows)])
    return gf2.kernel_intersection(maps, dim)


def invariants(n: int, d: int, omega=None, group: str = "symmetric", part: str = "full", *,
               space=None, threads: int = 1, allow_large: bool = False) -> InvariantResult:
    """Fixed points of the group on (QP_n)_d, a part, or a weight piece."""
    if space is None:
        space = quotient_space(n, d, omega, part, allow_large=allow_large, threads=threads)
    coords = fixed_space(space, standard_generators(n, group), threads)
    return InvariantResult(GROUPS[group], n, d, getattr(space, "omega", omega),
                           coords, [space.polynomial(c) for c in coords])


def verify_invariant_class(f: Polynomial, n: int, d: int, group: str, *,
                           space=None, allow_large: bool = True) -> bool:
    """True when g(f) + f is hit for every standard generator g."""
    if not f.terms:
        return True
    if f.n != n:
        raise DegreeMismatch(f"polynomial has {f.n} variables, expected {n}")
    if f.degree() != d:
        raise DegreeMismatch(f"polynomial has degree {f.degree()}, expected {d}")
    if space is None:
        space = quotient_space(n, d, allow_large=allow_large)
    return all(space.reduce(g.apply(f) + f) == 0 for g in standard_generators(n, group))


def projection(n: int, l: int, l_prime: int) -> Substitution:
    """P_n -> P_(n-1): u_j fixed below l, u_l -> u_(l'-1), u_j -> u_(j-1) above l."""
    if not 1 <= l < l_prime <= n:
        raise IndexOutOfRange(f"need 1 <= l < l' <= {n}, got l={l}, l'={l_prime}")
    imgs = []
    for j in range(1, n + 1):
        if j < l:
            imgs.append((j - 1,))
        elif j == l:
            imgs.append((l_prime - 2,))
        else:
            imgs.append((j - 2,))
    return Substitution(tuple(imgs), n - 1, f"p({l},{l_prime})")


def project_p(l: int, l_prime: int, f: Polynomial) -> Polynomial:
    n = f.n if f.terms else 5
    return projection(n, l, l_prime).apply(f)
