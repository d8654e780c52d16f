"""Polynomials and admissible lists transcribed from the source text, with checksums."""

from __future__ import annotations

import hashlib
from functools import lru_cache
from importlib import resources

from .dual import DualPolynomial
from .monomials import Monomial
from .steenrod import Polynomial, parse_terms

SIGMA5_RANGE = range(8, 26)


def _read(name: str) -> str:
    return resources.files("hitcalc").joinpath("data", name).read_text()


@lru_cache(maxsize=None)
def _manifest() -> dict[str, str]:
    out = {}
    for line in _read("checksums.sha256").splitlines():
        digest, name = line.split()
        out[name] = digest
    return out


def verify_checksums() -> list[str]:
    """Names of data files whose contents no longer match the manifest."""
    bad = []
    for name, digest in _manifest().items():
        data = resources.files("hitcalc").joinpath("data", name).read_bytes()
        if hashlib.sha256(data).hexdigest() != digest:
            bad.append(name)
    return bad


def load_polynomial(name: str, n: int = 5) -> Polynomial:
    return Polynomial(parse_terms(_read(f"{name}.poly"), n), n)


def zeta() -> Polynomial:
    return load_polynomial("zeta")


def xi() -> Polynomial:
    return load_polynomial("xi")


def xi_tilde() -> Polynomial:
    return load_polynomial("xi_tilde")


def sigma5_generator(k: int) -> Polynomial:
    if k not in SIGMA5_RANGE:
        raise IndexError(f"listed generators run from 8 to 25, got {k}")
    return load_polynomial(f"sigma5_{k:02d}")


def zeta0_tilde() -> DualPolynomial:
    return DualPolynomial.parse(_read("zeta0_tilde.dp"), 5)


def _numbered(name: str, n: int) -> dict[int, Monomial]:
    out = {}
    for line in _read(name).splitlines():
        k, mono = line.split(maxsplit=1)
        (m,) = parse_terms(mono, n)
        out[int(k)] = m
    return out


def adm_5_33() -> dict[int, Monomial]:
    """adm_1 ... adm_186, the weight-(3,1,1,1,1) admissibles in five variables."""
    return _numbered("adm_5_33_w1.txt", 5)


def adm_4_33() -> dict[int, Monomial]:
    """Adm_1 ... Adm_17, the positive weight-(3,1,1,1,1) admissibles in four variables."""
    return _numbered("adm_4_33_w1.txt", 4)
