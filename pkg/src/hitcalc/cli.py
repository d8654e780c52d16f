"""Command-line front end: ``hitcalc <command> [options]``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .dual import DualPolynomial, is_annihilated, pairing
from .errors import HitcalcError, TooLarge
from .groups import GROUPS, invariants, verify_invariant_class
from .hit import default_cache_dir
from .kameko import DIRECT_LIMIT, decomposed_feasible, kameko_kernel
from .monomials import count_monomials, format_monomial
from .reproduce import reproduce_paper
from .spaces import quotient_space
from .steenrod import format_polynomial
from .validation import check_n_d, check_omega, check_part, check_polynomial

EXIT_OK, EXIT_USAGE, EXIT_GUARD = 0, 2, 3

COMMANDS = ("cohit", "weight", "kameko-kernel", "invariants", "verify-invariant",
            "check-annihilated", "pairing", "reproduce-paper")


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    d: int | None = None
    omega: tuple | None = None
    part: str = "full"
    group: str | None = None
    format: str = "json"
    cache_dir: str | None = None
    threads: int = 1
    file: str | None = None
    poly: str | None = None
    allow_large: bool = False
    skip_stretch: bool = False


class UsageError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hitcalc", description="Cohit spaces of polynomial algebras over GF(2).")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--omega", help="weight vector, e.g. 3,1,1,1,1")
    p.add_argument("--part", default="full", choices=("full", "zero", "positive"))
    p.add_argument("--group", choices=sorted(GROUPS))
    p.add_argument("--format", default="json", choices=("json", "text"))
    p.add_argument("--cache-dir", default=None, help="defaults to $HITCALC_CACHE")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--file", help="polynomial (or divided-power) text file")
    p.add_argument("--poly", help="polynomial file paired against --file (pairing)")
    p.add_argument("--allow-large", action="store_true", help="permit very large eliminations")
    p.add_argument("--skip-stretch", action="store_true", help="reproduce-paper: skip degree 71")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def validate(cfg: RunConfig) -> RunConfig:
    needs_nd = cfg.command in ("cohit", "weight", "kameko-kernel", "invariants", "verify-invariant")
    if needs_nd:
        if cfg.n is None or cfg.d is None:
            raise UsageError(f"{cfg.command} needs --n and --d")
        check_n_d(cfg.n, cfg.d)
    if cfg.command == "weight" and cfg.omega is None:
        raise UsageError("weight needs --omega")
    if cfg.omega is not None:
        if cfg.d is None:
            raise UsageError("--omega needs --d")
        cfg.omega = check_omega(cfg.omega, cfg.d, cfg.n)
    check_part(cfg.part)
    if cfg.command in ("invariants", "verify-invariant") and cfg.group is None:
        raise UsageError(f"{cfg.command} needs --group")
    if cfg.command in ("verify-invariant", "check-annihilated", "pairing") and cfg.file is None:
        raise UsageError(f"{cfg.command} needs --file")
    if cfg.command == "pairing" and cfg.poly is None:
        raise UsageError("pairing needs --poly")
    if cfg.threads < 1:
        raise UsageError("--threads must be at least 1")
    if cfg.command == "kameko-kernel" and cfg.part != "full":
        raise UsageError("kameko-kernel works on the full space")
    return cfg


def memory_estimate_mb(n: int, d: int) -> float:
    """Rough peak for direct elimination: half-dense rows, rank close to the column count."""
    cols = count_monomials(n, d)
    return cols * cols / 16 / 2**20


def _guard(cfg: RunConfig, err) -> None:
    n, d = cfg.n, cfg.d
    if count_monomials(n, d) <= DIRECT_LIMIT or (decomposed_feasible(n, d) and cfg.part == "full"):
        return
    if not cfg.allow_large:
        raise TooLarge(f"{count_monomials(n, d)} monomials in degree {d}; "
                       f"direct elimination needs about {memory_estimate_mb(n, d):.0f} MB; pass --allow-large")
    print(f"estimated memory: {memory_estimate_mb(n, d):.0f} MB", file=err)


def _read(path: str) -> str:
    return Path(path).read_text()


def _space(cfg: RunConfig):
    return quotient_space(cfg.n, cfg.d, cfg.omega, cfg.part, allow_large=cfg.allow_large,
                          threads=cfg.threads, cache_dir=cfg.cache_dir)


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        cfg = validate(cfg)
        report, text = _dispatch(cfg, err)
    except (UsageError, HitcalcError, ValueError, OSError) as exc:
        if isinstance(exc, TooLarge):
            print(f"error: {exc}", file=err)
            return EXIT_GUARD
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    if cfg.format == "json":
        out.write(json.dumps(report, sort_keys=False) + "\n")
    else:
        out.write(text + "\n")
    if cfg.command == "reproduce-paper" and not all(r["passed"] for r in report["rows"]):
        return 1
    return EXIT_OK


def _dispatch(cfg: RunConfig, err) -> tuple[dict, str]:
    cmd = cfg.command
    if cmd in ("cohit", "weight"):
        _guard(cfg, err)
        space = _space(cfg)
        report = space.to_json()
        lines = [f"dim (QP_{cfg.n})_{cfg.d}" + (f"({list(cfg.omega)})" if cfg.omega else "")
                 + f" [{cfg.part}] = {space.dim}"]
        lines += [format_monomial(m) for m in space.admissibles]
        return report, "\n".join(lines)
    if cmd == "kameko-kernel":
        res = kameko_kernel(cfg.n, cfg.d, threads=cfg.threads, allow_large=cfg.allow_large)
        report = res.to_json()
        lines = [f"{list(w)}: {k}" for w, k in res.pieces.items()] + [f"total: {res.total}"]
        return report, "\n".join(lines)
    if cmd == "invariants":
        _guard(cfg, err)
        res = invariants(cfg.n, cfg.d, cfg.omega, cfg.group, cfg.part, space=_space(cfg),
                         threads=cfg.threads)
        lines = [f"dim = {res.dim}"] + [format_polynomial(g) for g in res.generators]
        return res.to_json(), "\n".join(lines)
    if cmd == "verify-invariant":
        _guard(cfg, err)
        f = check_polynomial(_read(cfg.file), cfg.n, cfg.d)
        ok = verify_invariant_class(f, cfg.n, cfg.d, cfg.group, space=_space(cfg))
        report = {"n": cfg.n, "d": cfg.d, "group": "gl" if GROUPS[cfg.group] == "general_linear" else "sigma",
                  "invariant": ok}
        return report, f"invariant: {str(ok).lower()}"
    if cmd == "check-annihilated":
        f = DualPolynomial.parse(_read(cfg.file), cfg.n)
        ok = is_annihilated(f)
        return {"n": f.n, "d": f.degree(), "annihilated": ok}, f"annihilated: {str(ok).lower()}"
    if cmd == "pairing":
        f = DualPolynomial.parse(_read(cfg.file), cfg.n)
        g = check_polynomial(_read(cfg.poly), f.n)
        v = pairing(f, g)
        return {"n": f.n, "pairing": v}, str(v)
    if cmd == "reproduce-paper":
        rows = reproduce_paper(cfg.threads, cfg.cache_dir, stretch=not cfg.skip_stretch,
                               echo=(lambda s: print(s, file=err)) if cfg.format == "json" else None)
        report = {"rows": [r.to_json() for r in rows], "passed": sum(r.passed for r in rows),
                  "total": len(rows)}
        return report, "\n".join(r.line() for r in rows)
    raise UsageError(f"unknown command {cmd}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    cache = args.cache_dir if args.cache_dir is not None else default_cache_dir()
    cfg = RunConfig(args.command, args.n, args.d, args.omega, args.part, args.group, args.format,
                    str(cache) if cache else None, args.threads, args.file, args.poly,
                    args.allow_large, args.skip_stretch)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
