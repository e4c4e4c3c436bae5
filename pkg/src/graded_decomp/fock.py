"""Fock-space vectors, canonical basis columns and irreducible characters.

Everything here is read off a finished :class:`DecompMatrix`, plus Specht
multiplicities.  ``first_approximation`` returns ``r_lam * A(lam)`` so that
all coefficients stay integral Laurent polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import ZERO, LaurentPoly
from .ladders import ladder_weight, r_lambda
from .partitions import Partition, all_partitions, dominates, is_e_restricted, restricted_partitions
from .solver import DecompMatrix, VerificationReport
from .tableaux import ENUMERATION_LIMIT, GradedCharacter, char_multiplicity, specht_character, specht_multiplicity

__all__ = [
    "FockVector",
    "IdentityViolation",
    "first_approximation",
    "canonical_basis_column",
    "b_coefficients",
    "reconstruct_irreducible_characters",
    "projective_character_mults",
    "grothendieck_expansions",
    "verify_fock",
]


class IdentityViolation(ArithmeticError):
    """An identity between Fock-space expansions failed."""


@dataclass
class FockVector:
    d: int
    terms: dict[Partition, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mu, poly in self.terms.items():
            mu = Partition(mu)
            if mu.size != self.d:
                raise ValueError(f"{mu} is not a partition of {self.d}")
            poly = LaurentPoly.coerce(poly)
            if poly:
                clean[mu] = poly
        self.terms = clean

    def __getitem__(self, mu) -> LaurentPoly:
        return self.terms.get(Partition(mu), ZERO)

    def __eq__(self, other) -> bool:
        if isinstance(other, FockVector):
            return self.d == other.d and self.terms == other.terms
        return NotImplemented

    def __add__(self, other: FockVector) -> FockVector:
        out = dict(self.terms)
        for mu, p in other.terms.items():
            out[mu] = out.get(mu, ZERO) + p
        return FockVector(self.d, out)

    def scale(self, c) -> FockVector:
        c = LaurentPoly.coerce(c)
        return FockVector(self.d, {mu: p * c for mu, p in self.terms.items()})

    def _ordered(self):
        return [(mu, self.terms[mu]) for mu in all_partitions(self.d) if mu in self.terms]

    def to_json(self) -> dict:
        return {"terms": [{"partition": mu.to_json(), "poly": p.to_json()} for mu, p in self._ordered()]}

    @classmethod
    def from_json(cls, obj: dict, d: int) -> FockVector:
        return cls(d, {Partition(t["partition"]): LaurentPoly.from_json(t["poly"]) for t in obj["terms"]})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for mu, p in self._ordered():
            coeff = "" if p == 1 else (f"({p})" if len(p) > 1 else f"{p}")
            out.append(f"{coeff}{mu.compact()}")
        return " + ".join(out)

    def to_latex(self, name: str | None = None) -> str:
        parts = []
        for mu, p in self._ordered():
            coeff = "" if p == 1 else (f"({p.to_latex()})" if len(p) > 1 else p.to_latex())
            parts.append(f"{coeff}{mu.compact()}")
        body = " + ".join(parts) or "0"
        return f"{name} = {body}" if name else body


def _restricted(lam, e) -> Partition:
    lam = Partition(lam)
    if not is_e_restricted(lam, e):
        raise ValueError(f"{lam} is not {e}-restricted")
    return lam


def first_approximation(lam: Partition, e: int) -> FockVector:
    """``r_lam * A(lam) = sum_mu m_lam(S(mu)) mu`` (unnormalised)."""
    lam = _restricted(lam, e)
    j = ladder_weight(lam, e)
    return FockVector(lam.size, {mu: specht_multiplicity(mu, j, e) for mu in all_partitions(lam.size)})


def canonical_basis_column(lam: Partition, M: DecompMatrix) -> FockVector:
    """``G(lam) = sum_mu d_{mu,lam} mu``."""
    lam = _restricted(lam, M.e)
    if lam.size != M.d:
        raise ValueError(f"{lam} is not a partition of {M.d}")
    return FockVector(M.d, M.column(lam))


def b_coefficients(lam: Partition, M: DecompMatrix) -> dict[Partition, LaurentPoly]:
    """Coefficients of ``r_lam * A(lam)`` in the canonical basis.

    They are the solver's ``m_lam(D(nu))``; the expansion is recomputed and
    IdentityViolation raised if it does not reproduce ``r_lam * A(lam)``.
    """
    lam = _restricted(lam, M.e)
    b = {nu: M.m(lam, nu) for nu in M.cols}
    rhs = FockVector(M.d)
    for nu, coeff in b.items():
        if coeff:
            rhs = rhs + canonical_basis_column(nu, M).scale(coeff)
    lhs = first_approximation(lam, M.e)
    if lhs != rhs:
        raise IdentityViolation(f"r*A({lam.compact()}) = {lhs} but sum b G = {rhs}")
    return b


def reconstruct_irreducible_characters(M: DecompMatrix, limit: int | None = None) -> dict[Partition, GradedCharacter]:
    """Graded characters of the simple modules by unitriangular back-substitution.

    ``ch S(lam) = ch D(lam) + sum_{nu < lam} d_{lam,nu} ch D(nu)``; columns
    are processed dominance-minimal first so every ``ch D(nu)`` on the right
    is already known.
    """
    e, d = M.e, M.d
    cap = ENUMERATION_LIMIT if limit is None else limit
    # all_partitions is decreasing lex, a linear extension of dominance; reverse it
    order = list(reversed(restricted_partitions(d, e)))
    out: dict[Partition, GradedCharacter] = {}
    for lam in order:
        ch = specht_character(lam, e, limit=cap)
        for nu in order:
            coeff = M.entry(lam, nu)
            if nu != lam and coeff:
                ch = ch - out[nu].scale(coeff)
        out[lam] = ch
    return {lam: out[lam] for lam in restricted_partitions(d, e)}


def projective_character_mults(lam: Partition, M: DecompMatrix) -> dict[Partition, LaurentPoly]:
    """``m_lam(P(nu)) = sum_mu m_lam(S(mu)) d_{mu,nu}`` for every restricted ``nu``."""
    lam = _restricted(lam, M.e)
    j = ladder_weight(lam, M.e)
    ms = {mu: specht_multiplicity(mu, j, M.e) for mu in M.rows}
    out = {}
    for nu in M.cols:
        total = ZERO
        for mu, dv in M.column(nu).items():
            total = total + ms[mu] * dv
        out[nu] = total
    return out


def grothendieck_expansions(lam: Partition, M: DecompMatrix) -> dict[str, dict]:
    """Class of ``H e(j^lam)`` expanded three ways.

    Returns, under keys ``"P->S"``, ``"S"``, ``"S->D"``, ``"P->S->D"`` and
    ``"D"``, coefficient maps on the Specht basis (first two) and on the
    simple basis (last three).  Consistency means the first two agree and
    the last three agree.
    """
    lam = _restricted(lam, M.e)
    e = M.e
    j = ladder_weight(lam, e)
    ms = {mu: specht_multiplicity(mu, j, e) for mu in M.rows}
    md = {mu: M.m(lam, mu) for mu in M.cols}

    # sum_mu m_lam(D(mu)) [P(mu)],  [P(mu)] = sum_nu d_{nu,mu} [S(nu)]
    p_to_s = {nu: ZERO for nu in M.rows}
    for mu, c in md.items():
        for nu, dv in M.column(mu).items():
            p_to_s[nu] = p_to_s[nu] + c * dv

    def s_to_d(svec):
        out = {nu: ZERO for nu in M.cols}
        for mu, c in svec.items():
            if not c:
                continue
            for nu in M.cols:
                dv = M.entry(mu, nu)
                if dv:
                    out[nu] = out[nu] + c * dv
        return out

    return {
        "P->S": p_to_s,
        "S": ms,
        "S->D": s_to_d(ms),
        "P->S->D": s_to_d(p_to_s),
        "D": projective_character_mults(lam, M),
    }


def verify_fock(M: DecompMatrix, limit: int | None = None) -> VerificationReport:
    """Character-level and Fock-space checks; needs ``M.d`` within the enumeration limit."""
    e = M.e
    rep = VerificationReport()
    chars = reconstruct_irreducible_characters(M, limit=limit)
    rep.add("ch D(lam) is bar-invariant", (lam.compact() for lam, ch in chars.items() if not ch.is_bar_invariant()))
    rep.add("ch D(lam) has nonnegative coefficients", (lam.compact() for lam, ch in chars.items() if not ch.is_nonnegative()))
    rep.add(
        "j^lam has multiplicity r_lam in ch D(lam)",
        (
            lam.compact()
            for lam, ch in chars.items()
            if char_multiplicity(ch, ladder_weight(lam, e)) != r_lambda(lam, e)
        ),
    )
    rep.add(
        "j^lam absent from ch D(mu) unless mu dominates lam",
        (
            f"lam={lam.compact()}, mu={mu.compact()}"
            for lam in M.cols
            for mu, ch in chars.items()
            if not dominates(mu, lam) and char_multiplicity(ch, ladder_weight(lam, e))
        ),
    )
    rep.add(
        "solver m_lam(D(nu)) = multiplicity of j^lam in reconstructed ch D(nu)",
        (
            f"lam={lam.compact()}, nu={nu.compact()}"
            for lam in M.cols
            for nu, ch in chars.items()
            if char_multiplicity(ch, ladder_weight(lam, e)) != M.m(lam, nu)
        ),
    )
    rep.add(
        "d(mu, lam) != 0 implies m_lam(S(mu)) != 0",
        (
            f"mu={mu.compact()}, lam={lam.compact()}"
            for (mu, lam) in M.entries
            if not specht_multiplicity(mu, ladder_weight(lam, e), e)
        ),
    )
    bad_b, bad_che = [], []
    for lam in M.cols:
        try:
            b_coefficients(lam, M)
        except IdentityViolation as exc:
            bad_b.append(str(exc))
        ex = grothendieck_expansions(lam, M)
        if ex["P->S"] != ex["S"] or not (ex["S->D"] == ex["P->S->D"] == ex["D"]):
            bad_che.append(lam.compact())
    rep.add("r_lam A(lam) = sum_nu b_{lam,nu} G(nu)", bad_b)
    rep.add("three expansions of [H e(j^lam)] agree", bad_che)
    return rep
