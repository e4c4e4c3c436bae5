"""Graded decomposition matrices by induction on the distance ``l(mu, lam)``.

For each ``mu`` and e-restricted ``lam`` that is a move for ``mu``, the
multiplicity ``m_lam(S(mu))`` of the ladder weight of ``lam`` in the Specht
character satisfies

    m_lam(S(mu)) = sum_{nu != lam} d_{mu,nu} m_lam(D(nu)) + d_{mu,lam} r_lam,

where ``nu`` runs over restricted partitions between ``lam`` and ``mu``.
Every term on the right except the unknowns has strictly smaller distance,
so the pairs are processed stratum by stratum.  When ``mu`` is restricted
the unknown ``m_lam(D(mu))`` is bar-invariant and ``d_{mu,lam}`` lies in
``qZ[q]``, which :func:`basic_solve` separates.
"""

from __future__ import annotations

import csv
import io
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import groupby
from typing import Iterable

from .laurent import ONE, ZERO, DivisionError, LaurentPoly, exact_div
from .ladders import ladder_weight, r_lambda
from .partitions import (
    Partition,
    all_partitions,
    check_e,
    distance,
    is_e_restricted,
    moves,
    moves_between,
    restricted_partitions,
)
from .tableaux import specht_multiplicity

__all__ = [
    "BasicSolution",
    "InconsistentInput",
    "AlgorithmError",
    "basic_solve",
    "DecompMatrix",
    "MainAlgorithm",
    "decomposition_matrix",
    "CheckResult",
    "VerificationReport",
    "verify_matrix",
    "SCHEMA_VERSION",
]

SCHEMA_VERSION = "1"


class InconsistentInput(ArithmeticError):
    """The input to :func:`basic_solve` is not of the form ``d*r + m``."""


class AlgorithmError(RuntimeError):
    """An arithmetic guard fired inside the main algorithm."""

    def __init__(self, mu: Partition, lam: Partition, cause: Exception):
        self.mu = mu
        self.lam = lam
        self.cause = cause
        super().__init__(f"at (mu, lam) = ({mu.compact()}, {lam.compact()}): {cause}")


@dataclass(frozen=True)
class BasicSolution:
    d_part: LaurentPoly
    m_part: LaurentPoly

    def __iter__(self):
        return iter((self.d_part, self.m_part))


def basic_solve(f: LaurentPoly, r: LaurentPoly, method: str = "peel") -> BasicSolution:
    """Split ``f = d*r + m`` with ``d`` in ``qZ[q]`` and ``m`` bar-invariant.

    ``r`` must be nonzero and bar-invariant.  ``method="peel"`` strips terms
    from the ends of ``f``: the top term goes into ``d`` while the top
    exponent exceeds minus the bottom one, otherwise the bottom term and its
    mirror go into ``m``.
    ``method="antisymmetric"`` instead divides ``f - bar(f)`` by ``r`` and
    keeps the positive part; it shares no code path with peeling.

    Raises InconsistentInput if ``f`` is not of the promised form.
    """
    f = LaurentPoly.coerce(f)
    r = LaurentPoly.coerce(r)
    if not r:
        raise ValueError("r must be nonzero")
    if not r.is_bar_invariant():
        raise ValueError(f"r = {r} is not bar-invariant")
    if method == "peel":
        sol = _peel(f, r)
    elif method == "antisymmetric":
        sol = _antisymmetric(f, r)
    else:
        raise ValueError(f"unknown method {method!r}")
    if sol.d_part * r + sol.m_part != f:
        raise InconsistentInput(f"reconstruction failed for f = {f}, r = {r}")
    return sol


def _peel(f: LaurentPoly, r: LaurentPoly) -> BasicSolution:
    # With M, N the top exponent and minus the bottom exponent of f:
    #   M > N  -> the top term of f is the top term of d*r;
    #   M <= N -> the bottom term of f is the bottom term of m.
    # The second rule also covers M < N, which arises when the tops of d*r
    # and m cancel (only possible with signed coefficients).
    # Peeled d-exponents and m-widths must strictly decrease; that bounds
    # the loop on malformed input.
    top_r = r.max_exp
    b = r.coeff(top_r)
    d = ZERO
    m = ZERO
    last_k = last_w = None
    while f:
        hi, lo = f.max_exp, f.min_exp
        big_m, big_n = hi, -lo
        if big_m > big_n:
            a = f.coeff(hi)
            quo, rem = divmod(a, b)
            if rem:
                raise InconsistentInput(f"top coefficient {a} not divisible by {b}")
            k = hi - top_r
            if k < 1 or (last_k is not None and k >= last_k):
                raise InconsistentInput(f"top term q^{hi} of {f} cannot come from d*r")
            last_k = k
            term = LaurentPoly.monomial(k, quo)
            d = d + term
            f = f - term * r
        else:
            if last_w is not None and big_n >= last_w:
                raise InconsistentInput(f"bottom term q^{lo} of {f} cannot come from m")
            last_w = big_n
            a = f.coeff(lo)
            pair = LaurentPoly({lo: a, -lo: a}) if big_n else LaurentPoly.constant(a)
            m = m + pair
            f = f - pair
    return BasicSolution(d, m)


def _antisymmetric(f: LaurentPoly, r: LaurentPoly) -> BasicSolution:
    # f - bar(f) = (d - bar(d)) * r, and d has only positive exponents
    try:
        diff = exact_div(f - f.bar(), r)
    except DivisionError as exc:
        raise InconsistentInput(str(exc)) from exc
    d = LaurentPoly({n: a for n, a in diff.terms() if n > 0})
    if d - d.bar() != diff:
        raise InconsistentInput(f"{diff} is not antisymmetric")
    return BasicSolution(d, f - d * r)


@dataclass
class DecompMatrix:
    """Graded decomposition numbers together with the table ``m_lam(D(mu))``.

    ``entries`` maps ``(mu, lam)`` and ``mtable`` maps ``(lam, mu)``; both
    store nonzero values only.
    """

    e: int
    d: int
    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    entries: dict[tuple[Partition, Partition], LaurentPoly] = field(default_factory=dict)
    mtable: dict[tuple[Partition, Partition], LaurentPoly] = field(default_factory=dict)

    def entry(self, mu, lam) -> LaurentPoly:
        return self.entries.get((Partition(mu), Partition(lam)), ZERO)

    def m(self, lam, mu) -> LaurentPoly:
        """``m_lam(D(mu))``."""
        return self.mtable.get((Partition(lam), Partition(mu)), ZERO)

    def set_entry(self, mu, lam, value) -> None:
        key = (Partition(mu), Partition(lam))
        value = LaurentPoly.coerce(value)
        if value:
            self.entries[key] = value
        else:
            self.entries.pop(key, None)

    def set_m(self, lam, mu, value) -> None:
        key = (Partition(lam), Partition(mu))
        value = LaurentPoly.coerce(value)
        if value:
            self.mtable[key] = value
        else:
            self.mtable.pop(key, None)

    def column(self, lam) -> dict[Partition, LaurentPoly]:
        lam = Partition(lam)
        return {mu: v for (mu, l), v in self.entries.items() if l == lam}

    def at_one(self) -> list[list[int]]:
        return [[self.entry(mu, lam).at_one() for lam in self.cols] for mu in self.rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DecompMatrix):
            return NotImplemented
        return (self.e, self.d, self.rows, self.cols, self.entries, self.mtable) == (
            other.e,
            other.d,
            other.rows,
            other.cols,
            other.entries,
            other.mtable,
        )

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "version": SCHEMA_VERSION,
            "e": self.e,
            "d": self.d,
            "rows": [mu.to_json() for mu in self.rows],
            "cols": [lam.to_json() for lam in self.cols],
            "entries": [[self.entry(mu, lam).to_json() for lam in self.cols] for mu in self.rows],
            "mtable": [[self.m(lam, mu).to_json() for mu in self.cols] for lam in self.cols],
        }

    @classmethod
    def from_json(cls, obj: dict) -> DecompMatrix:
        if obj.get("version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {obj.get('version')!r}")
        rows = tuple(Partition(p) for p in obj["rows"])
        cols = tuple(Partition(p) for p in obj["cols"])
        out = cls(e=int(obj["e"]), d=int(obj["d"]), rows=rows, cols=cols)
        if len(obj["entries"]) != len(rows) or len(obj["mtable"]) != len(cols):
            raise ValueError("table dimensions do not match rows/cols")
        for mu, line in zip(rows, obj["entries"]):
            if len(line) != len(cols):
                raise ValueError("ragged entries table")
            for lam, poly in zip(cols, line):
                out.set_entry(mu, lam, LaurentPoly.from_json(poly))
        for lam, line in zip(cols, obj["mtable"]):
            if len(line) != len(cols):
                raise ValueError("ragged mtable")
            for mu, poly in zip(cols, line):
                out.set_m(lam, mu, LaurentPoly.from_json(poly))
        return out

    def _cell(self, poly: LaurentPoly, at_one: bool, latex: bool = False) -> str:
        if at_one:
            return str(poly.at_one())
        return poly.to_latex() if latex else str(poly)

    def to_text(self, at_one: bool = False, labels: bool = False) -> str:
        cells = [[self._cell(self.entry(mu, lam), at_one) for lam in self.cols] for mu in self.rows]
        if labels:
            cells = [[""] + [lam.compact() for lam in self.cols]] + [
                [mu.compact()] + row for mu, row in zip(self.rows, cells)
            ]
        if not cells or not cells[0]:
            return ""
        widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells)

    def mtable_text(self, at_one: bool = False) -> str:
        cells = [[""] + [mu.compact() for mu in self.cols]]
        for lam in self.cols:
            cells.append([lam.compact()] + [self._cell(self.m(lam, mu), at_one) for mu in self.cols])
        widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells)

    def to_csv(self, at_one: bool = False) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["mu"] + [str(lam) for lam in self.cols])
        for mu in self.rows:
            w.writerow([str(mu)] + [self._cell(self.entry(mu, lam), at_one) for lam in self.cols])
        return buf.getvalue()

    def to_latex(self, at_one: bool = False) -> str:
        lines = [
            r"\begin{tabular}{l|" + "c" * len(self.cols) + "}",
            " & ".join([""] + [f"${lam.compact()}$" for lam in self.cols]) + r" \\ \hline",
        ]
        for mu in self.rows:
            cells = []
            for lam in self.cols:
                poly = self.entry(mu, lam)
                cells.append("" if not poly else f"${self._cell(poly, at_one, latex=True)}$")
            lines.append(" & ".join([f"${mu.compact()}$"] + cells) + r" \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines)


class MainAlgorithm:
    """Stratified evaluation of the decomposition matrix.

    With ``trace=True`` every read of a memoised value is logged against the
    pair being computed, in :attr:`access_log`.
    """

    def __init__(self, d: int, e: int, threads: int = 1, trace: bool = False):
        check_e(e)
        if d < 0:
            raise ValueError(f"d must be nonnegative, got {d}")
        if threads < 1:
            raise ValueError("threads must be positive")
        self.d = d
        self.e = e
        self.threads = threads
        self.trace = trace
        self.rows = all_partitions(d)
        self.cols = restricted_partitions(d, e)
        self._rank = {p: i for i, p in enumerate(self.rows)}
        self.dvals: dict[tuple[Partition, Partition], LaurentPoly] = {}
        self.mvals: dict[tuple[Partition, Partition], LaurentPoly] = {}
        self.access_log: dict[tuple[Partition, Partition], set] = defaultdict(set)

    def pairs(self) -> list[tuple[int, Partition, Partition]]:
        """``(distance, mu, lam)`` for all ``lam`` restricted in ``M(mu)``, in processing order."""
        out = []
        for mu in self.rows:
            for lam in moves(mu, self.e):
                if is_e_restricted(lam, self.e):
                    out.append((distance(mu, lam), mu, lam))
        out.sort(key=lambda t: (t[0], self._rank[t[1]], self._rank[t[2]]))
        return out

    def _d(self, owner, mu, nu) -> LaurentPoly:
        if self.trace:
            self.access_log[owner].add(("d", mu, nu))
        return self.dvals[(mu, nu)]

    def _m(self, owner, lam, nu) -> LaurentPoly:
        if self.trace:
            self.access_log[owner].add(("m", nu, lam))
        return self.mvals[(lam, nu)]

    def _step(self, mu: Partition, lam: Partition):
        e = self.e
        owner = (mu, lam)
        r = r_lambda(lam, e)
        f = specht_multiplicity(mu, ladder_weight(lam, e), e)
        restricted_mu = is_e_restricted(mu, e)
        for nu in moves_between(mu, lam, e):
            if nu == lam or nu == mu or not is_e_restricted(nu, e):
                continue
            f = f - self._d(owner, mu, nu) * self._m(owner, lam, nu)
        try:
            if restricted_mu:
                sol = basic_solve(f, r)
                return sol.d_part, sol.m_part
            return exact_div(f, r), None
        except (DivisionError, InconsistentInput) as exc:
            raise AlgorithmError(mu, lam, exc) from exc

    def run(self) -> DecompMatrix:
        e = self.e
        pool = ThreadPoolExecutor(self.threads) if self.threads > 1 else None
        try:
            for dist, stratum in groupby(self.pairs(), key=lambda t: t[0]):
                stratum = [(mu, lam) for _, mu, lam in stratum]
                if dist == 0:
                    for mu, _ in stratum:
                        self.dvals[(mu, mu)] = ONE
                        self.mvals[(mu, mu)] = r_lambda(mu, e)
                    continue
                if pool is None:
                    results = [self._step(mu, lam) for mu, lam in stratum]
                else:
                    results = list(pool.map(lambda p: self._step(*p), stratum))
                # commit only after the whole stratum: strata never read themselves
                for (mu, lam), (dval, mval) in zip(stratum, results):
                    self.dvals[(mu, lam)] = dval
                    if mval is not None:
                        self.mvals[(lam, mu)] = mval
        finally:
            if pool is not None:
                pool.shutdown()
        out = DecompMatrix(e=e, d=self.d, rows=self.rows, cols=self.cols)
        for (mu, lam), v in self.dvals.items():
            out.set_entry(mu, lam, v)
        for (lam, mu), v in self.mvals.items():
            out.set_m(lam, mu, v)
        return out


def decomposition_matrix(d: int, e: int, threads: int = 1) -> DecompMatrix:
    """The graded decomposition matrix of the Hecke algebra of ``S_d`` at an ``e``-th root of unity."""
    return MainAlgorithm(d, e, threads=threads).run()


@dataclass
class CheckResult:
    name: str
    passed: bool
    witnesses: list = field(default_factory=list)

    def __str__(self) -> str:
        if self.passed:
            return f"PASS  {self.name}"
        shown = "; ".join(map(str, self.witnesses[:5]))
        more = f" (+{len(self.witnesses) - 5} more)" if len(self.witnesses) > 5 else ""
        return f"FAIL  {self.name}: {shown}{more}"


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def add(self, name: str, witnesses: Iterable) -> None:
        w = list(witnesses)
        self.checks.append(CheckResult(name, not w, w))

    def extend(self, other: VerificationReport) -> None:
        self.checks.extend(other.checks)

    def __str__(self) -> str:
        return "\n".join(map(str, self.checks))


def _fmt(*parts: Partition) -> str:
    return ", ".join(p.compact() for p in parts)


def verify_matrix(M: DecompMatrix) -> VerificationReport:
    """Check the structural properties the matrix must satisfy.

    Failures are recorded with witnesses rather than raised.
    """
    e, d = M.e, M.d
    rep = VerificationReport()
    rows_ok = M.rows == all_partitions(d) and M.cols == restricted_partitions(d, e)
    rep.add("indexing: rows = P_d, cols = RP_d", [] if rows_ok else ["row/column sets differ"])

    mv = {mu: set(moves(mu, e)) for mu in M.rows}
    rep.add(
        "unitriangular: d(lam, lam) = 1",
        (f"d({_fmt(lam, lam)}) = {M.entry(lam, lam)}" for lam in M.cols if M.entry(lam, lam) != ONE),
    )
    rep.add(
        "support: d(mu, lam) = 0 unless lam in M(mu)",
        (f"d({_fmt(mu, lam)}) = {v}" for (mu, lam), v in M.entries.items() if lam not in mv.get(mu, ())),
    )
    rep.add(
        "positivity: d(mu, lam) in qN[q] for mu != lam",
        (
            f"d({_fmt(mu, lam)}) = {v}"
            for (mu, lam), v in M.entries.items()
            if mu != lam and not (v.min_exp >= 1 and v.nonnegative())
        ),
    )
    rep.add(
        "m_lam(D(lam)) = r_lam",
        (f"m({_fmt(lam, lam)}) = {M.m(lam, lam)}" for lam in M.cols if M.m(lam, lam) != r_lambda(lam, e)),
    )
    rep.add(
        "bar-invariance of m_lam(D(mu))",
        (f"m({_fmt(lam, mu)}) = {v}" for (lam, mu), v in M.mtable.items() if not v.is_bar_invariant()),
    )
    rep.add(
        "nonnegativity of m_lam(D(mu))",
        (f"m({_fmt(lam, mu)}) = {v}" for (lam, mu), v in M.mtable.items() if not v.nonnegative()),
    )
    rep.add(
        "support: m_lam(D(mu)) = 0 unless lam in M(mu)",
        (f"m({_fmt(lam, mu)}) = {v}" for (lam, mu), v in M.mtable.items() if lam not in mv.get(mu, ())),
    )

    bad = []
    for lam in M.cols:
        j = ladder_weight(lam, e)
        for mu in M.rows:
            lhs = specht_multiplicity(mu, j, e)
            rhs = ZERO
            for nu in M.cols:
                dv = M.entry(mu, nu)
                if dv:
                    rhs = rhs + dv * M.m(lam, nu)
            if lhs != rhs:
                bad.append(f"lam={lam.compact()}, mu={mu.compact()}: {lhs} != {rhs}")
    rep.add("weight identity: m_lam(S(mu)) = sum_nu d(mu, nu) m_lam(D(nu))", bad)
    return rep
