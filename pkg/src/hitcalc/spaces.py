"""Pick a quotient-space implementation that can handle a given (n, d)."""

from __future__ import annotations

from .errors import ModeViolation, TooLarge
from .hit import _trim, cohit_basis, weight_subquotient
from .kameko import DIRECT_LIMIT, decomposed_feasible, decomposed_space
from .monomials import count_monomials


def quotient_space(n: int, d: int, omega=None, part: str = "full", *,
                   allow_large: bool = False, threads: int = 1, cache_dir=None):
    """A basis object for (QP_n)_d or one weight piece of it.

    Small spaces are eliminated directly.  Larger ones use the decomposed model
    when it applies; otherwise ``allow_large`` forces direct elimination.
    """
    omega = _trim(omega) if omega is not None else None
    if count_monomials(n, d) <= DIRECT_LIMIT or (allow_large and not decomposed_feasible(n, d)):
        if omega is None:
            return cohit_basis(n, d, part, threads=threads, cache_dir=cache_dir)
        return weight_subquotient(n, d, omega, part, threads=threads, cache_dir=cache_dir)
    if decomposed_feasible(n, d):
        if part != "full":
            raise ModeViolation("the decomposed model only covers the full space")
        space = decomposed_space(n, d, threads)
        return space.full if omega is None else space.full.restrict_weight(omega)
    raise TooLarge(f"{count_monomials(n, d)} monomials in degree {d}; pass allow_large")


def kernel_space(n: int, d: int, omega=None, threads: int = 1):
    """The kernel block of the down map, optionally one weight piece of it."""
    space = decomposed_space(n, d, threads)
    return space.kernel if omega is None else space.kernel.restrict_weight(_trim(omega))
