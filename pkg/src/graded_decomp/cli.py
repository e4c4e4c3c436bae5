"""Command-line front end and the on-disk matrix cache.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .fock import FockVector, IdentityViolation, canonical_basis_column, first_approximation, verify_fock
from .laurent import DivisionError, LaurentPoly
from .ladders import ladder_weight, r_lambda
from .partitions import Partition, is_e_restricted
from .solver import SCHEMA_VERSION, AlgorithmError, DecompMatrix, InconsistentInput, decomposition_matrix, verify_matrix
from .tableaux import ENUMERATION_LIMIT, SizeLimitError, specht_character

log = logging.getLogger(__name__)

COMMANDS = ("matrix", "character", "ladder-weight", "canonical-basis", "first-approx", "verify")
FORMATS = ("json", "csv", "latex", "text")
CACHE_ENV = "GRADED_DECOMP_CACHE"

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3


class InvalidInput(ValueError):
    pass


@dataclass
class JobConfig:
    e: int
    d: int | None
    command: str
    format: str = "text"
    cache_dir: Path | None = None
    threads: int = 1
    shape: Partition | None = None
    at_one: bool = False
    labels: bool = False
    show_mtable: bool = False

    def __post_init__(self):
        if not isinstance(self.e, int) or self.e < 2:
            raise InvalidInput(f"--e must be an integer >= 2, got {self.e}")
        if self.command not in COMMANDS:
            raise InvalidInput(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise InvalidInput(f"unknown format {self.format!r}")
        if self.threads < 1:
            raise InvalidInput("--threads must be positive")
        if self.d is not None and self.d < 0:
            raise InvalidInput("--d must be nonnegative")


# -- cache ---------------------------------------------------------------


def cache_path(cache_dir: Path, e: int, d: int) -> Path:
    return Path(cache_dir) / f"matrix_e{e}_d{d}.v{SCHEMA_VERSION}.json"


def cache_lookup(cache_dir: Path | None, e: int, d: int) -> DecompMatrix | None:
    """Load a cached matrix; unreadable, corrupt or mismatched files yield ``None``."""
    if cache_dir is None:
        return None
    path = cache_path(cache_dir, e, d)
    if not path.exists():
        return None
    try:
        M = DecompMatrix.from_json(json.loads(path.read_text()))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        log.warning("ignoring unusable cache file %s: %s", path, exc)
        return None
    if (M.e, M.d) != (e, d):
        log.warning("ignoring cache file %s: holds (e, d) = (%d, %d)", path, M.e, M.d)
        return None
    return M


def cache_store(cache_dir: Path | None, M: DecompMatrix) -> bool:
    if cache_dir is None:
        return False
    path = cache_path(cache_dir, M.e, M.d)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(M.to_json(), sort_keys=True, separators=(",", ":")))
        tmp.replace(path)
    except OSError as exc:
        log.warning("cache directory %s is not writable, continuing uncached: %s", cache_dir, exc)
        return False
    return True


def get_matrix(e: int, d: int, cache_dir: Path | None = None, threads: int = 1) -> DecompMatrix:
    M = cache_lookup(cache_dir, e, d)
    if M is None:
        M = decomposition_matrix(d, e, threads=threads)
        cache_store(cache_dir, M)
    return M


# -- rendering -------------------------------------------------------------


def _poly(p: LaurentPoly, cfg: JobConfig):
    if cfg.at_one:
        return p.at_one()
    return p.to_json() if cfg.format == "json" else (p.to_latex() if cfg.format == "latex" else str(p))


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _render_matrix(M: DecompMatrix, cfg: JobConfig) -> str:
    if cfg.format == "json":
        obj = M.to_json()
        if cfg.at_one:
            obj["entries"] = M.at_one()
            obj["mtable"] = [[M.m(lam, mu).at_one() for mu in M.cols] for lam in M.cols]
        return _dumps(obj)
    if cfg.format == "csv":
        return M.to_csv(at_one=cfg.at_one).rstrip("\n")
    if cfg.format == "latex":
        return M.to_latex(at_one=cfg.at_one)
    out = M.to_text(at_one=cfg.at_one, labels=cfg.labels)
    if cfg.show_mtable:
        out += "\n\nm_lambda(D(mu)), rows lambda, columns mu:\n" + M.mtable_text(at_one=cfg.at_one)
    return out


def _render_fock(name: str, v: FockVector, cfg: JobConfig) -> str:
    if cfg.at_one:
        terms = {mu: LaurentPoly.constant(p.at_one()) for mu, p in v.terms.items()}
        v = FockVector(v.d, terms)
    if cfg.format == "json":
        return _dumps(v.to_json())
    if cfg.format == "csv":
        return "\n".join(["partition,poly"] + [f'"{mu}",{p}' for mu, p in v._ordered()])
    if cfg.format == "latex":
        return "$" + v.to_latex(name) + "$"
    return f"{name} = {v}"


def _restricted_shape(cfg: JobConfig) -> Partition:
    if cfg.shape is None:
        raise InvalidInput("--shape is required")
    if not is_e_restricted(cfg.shape, cfg.e):
        raise InvalidInput(f"{cfg.shape} is not {cfg.e}-restricted")
    return cfg.shape


def run(cfg: JobConfig, out=None) -> int:
    """Execute one job, writing to ``out`` (default stdout); returns the exit status."""
    out = out or sys.stdout
    e = cfg.e
    if cfg.command in ("matrix", "verify"):
        if cfg.d is None:
            raise InvalidInput("--d is required")
        M = get_matrix(e, cfg.d, cfg.cache_dir, cfg.threads)
        if cfg.command == "matrix":
            print(_render_matrix(M, cfg), file=out)
            return EXIT_OK
        report = verify_matrix(M)
        if cfg.d <= ENUMERATION_LIMIT:
            report.extend(verify_fock(M))
        else:
            print(f"note: character checks skipped above d = {ENUMERATION_LIMIT}", file=out)
        print(report, file=out)
        return EXIT_OK if report.ok else EXIT_VERIFY_FAILED

    if cfg.shape is None:
        raise InvalidInput("--shape is required")
    mu = cfg.shape

    if cfg.command == "character":
        try:
            ch = specht_character(mu, e)
        except SizeLimitError as exc:
            raise InvalidInput(str(exc)) from exc
        if cfg.format == "json":
            recs = ch.to_json()
            if cfg.at_one:
                recs = [{"seq": r["seq"], "poly": LaurentPoly.from_json(r["poly"]).at_one()} for r in recs]
            text = _dumps(recs)
        else:
            sep = {"csv": ",", "latex": " & ", "text": ": "}[cfg.format]
            lines = []
            for seq in sorted(ch.terms):
                key = ",".join(map(str, seq))
                key = f'"{key}"' if cfg.format == "csv" else f"({key})"
                lines.append(f"{key}{sep}{_poly(ch.terms[seq], cfg)}" + (r" \\" if cfg.format == "latex" else ""))
            text = "\n".join(lines)
        print(text, file=out)
        return EXIT_OK

    lam = _restricted_shape(cfg)
    r = r_lambda(lam, e)
    if cfg.command == "ladder-weight":
        j = ladder_weight(lam, e)
        if cfg.format == "json":
            print(_dumps({"shape": lam.to_json(), "j": list(j), "r": _poly(r, cfg)}), file=out)
        elif cfg.format == "csv":
            print("j,r", file=out)
            print(f'"{",".join(map(str, j))}",{_poly(r, cfg)}', file=out)
        else:
            print(f"j = ({','.join(map(str, j))}), r = {_poly(r, cfg)}", file=out)
        return EXIT_OK

    if cfg.command == "canonical-basis":
        M = get_matrix(e, lam.size, cfg.cache_dir, cfg.threads)
        print(_render_fock(f"G{lam.compact()}", canonical_basis_column(lam, M), cfg), file=out)
        return EXIT_OK

    # first-approx
    v = first_approximation(lam, e)
    if cfg.format == "json":
        obj = v.to_json() if not cfg.at_one else json.loads(_render_fock("", v, cfg))
        obj["r"] = _poly(r, cfg)
        print(_dumps(obj), file=out)
    else:
        if cfg.format == "text":
            print(f"r = {_poly(r, cfg)}", file=out)
        print(_render_fock(f"r*A{lam.compact()}", v, cfg), file=out)
    return EXIT_OK


# -- argument parsing --------------------------------------------------------


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"malformed partition {text!r}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="graded-decomp",
        description="Graded decomposition numbers of Hecke algebras of symmetric groups at roots of unity.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--e", type=int, required=True, help="quantum characteristic (>= 2)")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--cache-dir", type=Path, default=None, help=f"matrix cache (env {CACHE_ENV})")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--at-one", action="store_true", help="specialise q = 1")

    for name in ("matrix", "verify"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--d", type=int, required=True)
        if name == "matrix":
            sp.add_argument("--labels", action="store_true", help="label rows and columns (text format)")
            sp.add_argument("--mtable", action="store_true", help="also print m_lambda(D(mu)) (text format)")
    for name in ("character", "ladder-weight", "canonical-basis", "first-approx"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--shape", type=_partition_arg, required=True, help='partition, e.g. "2,1"')
    return p


def config_from_args(ns: argparse.Namespace) -> JobConfig:
    cache = ns.cache_dir
    if os.environ.get(CACHE_ENV):
        cache = Path(os.environ[CACHE_ENV])
    return JobConfig(
        e=ns.e,
        d=getattr(ns, "d", None),
        command=ns.command,
        format=ns.format,
        cache_dir=cache,
        threads=ns.threads,
        shape=getattr(ns, "shape", None),
        at_one=ns.at_one,
        labels=getattr(ns, "labels", False),
        show_mtable=getattr(ns, "mtable", False),
    )


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    ns = build_parser().parse_args(argv)
    try:
        return run(config_from_args(ns))
    except (AlgorithmError, IdentityViolation, DivisionError, InconsistentInput) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
