"""The published dimension claims as a table of checks with timings."""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass

from . import reference
from .dual import is_annihilated, pairing
from .groups import invariants, verify_invariant_class
from .hit import cohit_basis
from .kameko import kameko_kernel, kameko_up
from .spaces import kernel_space, quotient_space

WEIGHTS_33 = [(3, 1, 1, 1, 1), (3, 1, 1, 3), (3, 3, 2, 2), (3, 3, 4, 1)]
WEIGHTS_71 = [(3, 2, 2, 1, 1, 1), (3, 2, 2, 1, 3), (3, 2, 2, 3, 2), (3, 2, 4, 2, 2),
              (3, 2, 4, 4, 1), (3, 4, 1, 1, 1, 1), (3, 4, 1, 1, 3), (3, 4, 3, 2, 2),
              (3, 4, 3, 4, 1)]


@dataclass
class Row:
    criterion: int
    label: str
    expected: object
    actual: object = None
    seconds: float = 0.0
    error: str | None = None
    stretch: bool = False

    @property
    def passed(self) -> bool:
        return self.error is None and self.actual == self.expected

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        got = self.error if self.error else self.actual
        tag = " [stretch]" if self.stretch else ""
        return (f"{status}  {self.criterion:>2}  {self.label:<44} expected={self.expected!s:<8}"
                f" got={got!s:<8} {self.seconds:8.1f}s{tag}")

    def to_json(self) -> dict:
        return {"criterion": self.criterion, "label": self.label, "expected": self.expected,
                "actual": self.actual, "passed": self.passed, "seconds": round(self.seconds, 3),
                "error": self.error, "stretch": self.stretch}


def _checks(threads: int, cache_dir) -> list[tuple[int, str, object, Callable[[], object], bool]]:
    def full(n, d, part="full"):
        return cohit_basis(n, d, part, threads=threads, cache_dir=cache_dir)

    def inv(space, group):
        return invariants(space.n, space.d, group=group, space=space, threads=threads).dim

    zeta_class = lambda: kameko_up(reference.zeta()) + reference.xi()
    w1, w2, w3, w4 = WEIGHTS_33
    rows = [
        (1, "(5,14) full", 320, lambda: full(5, 14).dim, False),
        (2, "(5,33) full", 1322, lambda: full(5, 33).dim, False),
        (3, "(5,33) zero", 550, lambda: full(5, 33, "zero").dim, False),
        (3, "(5,33,w1) zero", 155, lambda: full(5, 33, "zero").restrict_weight(w1).dim, False),
        (3, "(5,33,w3) zero", 395, lambda: full(5, 33, "zero").restrict_weight(w3).dim, False),
    ]
    for k, (w, want) in enumerate(zip(WEIGHTS_33, (31, 0, 421, 0)), 1):
        rows.append((4, f"(5,33,w{k}) positive", want,
                     lambda w=w: full(5, 33, "positive").restrict_weight(w).dim, False))
    rows += [
        (5, "(5,33,w1) Sigma5-invariants", 7, lambda: inv(full(5, 33).restrict_weight(w1), "symmetric"), False),
        (5, "(5,33,w3) Sigma5-invariants", 18, lambda: inv(full(5, 33).restrict_weight(w3), "symmetric"), False),
        (6, "(5,33,w1) GL5-invariants", 0, lambda: inv(full(5, 33).restrict_weight(w1), "gl"), False),
        (6, "(5,33,w3) GL5-invariants", 0, lambda: inv(full(5, 33).restrict_weight(w3), "gl"), False),
        (6, "(5,33) GL5-invariants", 1, lambda: inv(full(5, 33), "gl"), False),
        (6, "(5,14) GL5-invariants", 1, lambda: inv(full(5, 14), "gl"), False),
        (6, "(5,14) class of zeta GL5-fixed", True,
         lambda: verify_invariant_class(reference.zeta(), 5, 14, "gl", space=full(5, 14)), False),
        (7, "(5,33) phi(zeta)+xi GL5-fixed", True,
         lambda: verify_invariant_class(zeta_class(), 5, 33, "gl", space=full(5, 33)), False),
        (7, "pairing(zeta0~, phi(zeta))", 1,
         lambda: pairing(reference.zeta0_tilde(), kameko_up(reference.zeta())), False),
        (7, "zeta0~ annihilated", True, lambda: is_annihilated(reference.zeta0_tilde()), False),
    ]
    kernel = {}

    def piece(w):
        if "r" not in kernel:
            kernel["r"] = kameko_kernel(5, 71, method="decomposed", threads=threads)
        return kernel["r"].pieces.get(w, 0)

    expected71 = dict.fromkeys(WEIGHTS_71, 0)
    expected71[WEIGHTS_71[0]] = 1395
    expected71[WEIGHTS_71[5]] = 124
    for k, w in enumerate(WEIGHTS_71, 1):
        rows.append((8, f"(5,71) kernel piece w{k}", expected71[w], lambda w=w: piece(w), True))
    rows += [
        (8, "(5,71) kernel total", 1519, lambda: (piece(WEIGHTS_71[0]), kernel["r"].total)[1], True),
        (8, "(5,71,w1) Sigma5-invariants", 27,
         lambda: inv(kernel_space(5, 71, WEIGHTS_71[0], threads), "symmetric"), True),
        (8, "(5,71,w6) Sigma5-invariants", 6,
         lambda: inv(kernel_space(5, 71, WEIGHTS_71[5], threads), "symmetric"), True),
        (8, "(5,71) kernel GL5-invariants", 0, lambda: inv(kernel_space(5, 71, None, threads), "gl"), True),
        (8, "(5,71) phi^2(zeta)+phi(xi)+xi~ GL5-fixed", True,
         lambda: verify_invariant_class(
             kameko_up(zeta_class()) + reference.xi_tilde(), 5, 71, "gl",
             space=quotient_space(5, 71, threads=threads)), True),
        (9, "(3,15) full", 13, lambda: full(3, 15).dim, False),
        (9, "(4,33) positive", 84, lambda: full(4, 33, "positive").dim, False),
        (9, "(4,33,w1) positive", 17, lambda: full(4, 33, "positive").restrict_weight(w1).dim, False),
        (9, "(4,33,w3) positive", 67, lambda: full(4, 33, "positive").restrict_weight(w3).dim, False),
    ]
    return rows


def reproduce_paper(threads: int = 1, cache_dir=None, stretch: bool = True,
                    criteria: set[int] | None = None, echo=None) -> list[Row]:
    out = []
    for crit, label, want, fn, is_stretch in _checks(threads, cache_dir):
        if (is_stretch and not stretch) or (criteria and crit not in criteria):
            continue
        row = Row(crit, label, want, stretch=is_stretch)
        t0 = time.perf_counter()
        try:
            row.actual = fn()
        except Exception as exc:  # a failing check is a table row, not a crash
            row.error = f"{type(exc).__name__}: {exc}"
        row.seconds = time.perf_counter() - t0
        out.append(row)
        if echo:
            echo(row.line())
    return out
