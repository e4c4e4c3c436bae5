"""Integer Laurent polynomials in one variable ``q``.

A :class:`LaurentPoly` is an immutable sparse map ``exponent -> coefficient``
with zero coefficients pruned, so structural equality is polynomial equality.
Coefficients are Python ints and never overflow.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "DivisionError",
    "bar",
    "quantum_int",
    "quantum_factorial",
    "exact_div",
    "eval_at_one",
    "q",
]


class DivisionError(ArithmeticError):
    """Raised when a Laurent polynomial is not divisible by another."""


Coercible = Union["LaurentPoly", int]


class LaurentPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        c: dict[int, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for n, a in items:
                if not isinstance(a, int) or isinstance(a, bool):
                    raise TypeError(f"coefficient {a!r} is not an integer")
                if a:
                    c[int(n)] = c.get(int(n), 0) + a
                    if not c[int(n)]:
                        del c[int(n)]
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> LaurentPoly:
        # c must already be pruned
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def constant(cls, a: int) -> LaurentPoly:
        return cls.monomial(0, a)

    @staticmethod
    def coerce(x: Coercible) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return LaurentPoly.constant(x)
        raise TypeError(f"cannot coerce {x!r} to LaurentPoly")

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        """A copy of the ``exponent -> coefficient`` mapping."""
        return dict(self._c)

    def coeff(self, n: int) -> int:
        return self._c.get(n, 0)

    def terms(self) -> list[tuple[int, int]]:
        """``(exponent, coefficient)`` pairs, ascending exponent."""
        return sorted(self._c.items())

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no min_exp")
        return min(self._c)

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no max_exp")
        return max(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_bar_invariant(self) -> bool:
        return all(self._c.get(-n) == a for n, a in self._c.items())

    def nonnegative(self) -> bool:
        return all(a > 0 for a in self._c.values())

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Coercible) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._c:
            return self
        c = dict(self._c)
        for n, a in other._c.items():
            s = c.get(n, 0) + a
            if s:
                c[n] = s
            else:
                c.pop(n, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({n: -a for n, a in self._c.items()})

    def __sub__(self, other: Coercible) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Coercible) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        c: dict[int, int] = {}
        for n, a in self._c.items():
            for m, b in other._c.items():
                c[n + m] = c.get(n + m, 0) + a * b
        return LaurentPoly._raw({n: a for n, a in c.items() if a})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k``."""
        return LaurentPoly._raw({n + k: a for n, a in self._c.items()})

    def bar(self) -> LaurentPoly:
        return LaurentPoly._raw({-n: a for n, a in self._c.items()})

    def at_one(self) -> int:
        return sum(self._c.values())

    def __call__(self, x):
        return sum(a * x**n for n, a in self._c.items())

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, int) and not isinstance(other, bool):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- formatting and serialization ------------------------------------

    def _render(self, latex: bool) -> str:
        if not self._c:
            return "0"
        out = []
        for n, a in sorted(self._c.items(), reverse=True):
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if n == 0:
                body = str(mag)
            else:
                if n == 1:
                    mono = "q"
                elif latex:
                    mono = f"q^{{{n}}}"
                else:
                    mono = f"q^{n}"
                body = mono if mag == 1 else f"{mag}{mono}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self) -> str:
        return self._render(latex=False)

    def to_latex(self) -> str:
        return self._render(latex=True)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict[str, int]:
        return {str(n): a for n, a in sorted(self._c.items())}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> LaurentPoly:
        if not isinstance(obj, Mapping):
            raise ValueError(f"expected a JSON object, got {type(obj).__name__}")
        return cls({int(k): v for k, v in obj.items()})


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
q = LaurentPoly._raw({1: 1})


def bar(p: LaurentPoly) -> LaurentPoly:
    """The ring involution ``q -> q^-1``."""
    return p.bar()


def quantum_int(n: int) -> LaurentPoly:
    """``[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)``."""
    if n < 1:
        raise ValueError(f"quantum integer needs n >= 1, got {n}")
    return LaurentPoly._raw({k: 1 for k in range(1 - n, n, 2)})


_FACTORIALS: list[LaurentPoly] = [ONE]


def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"quantum factorial needs n >= 0, got {n}")
    while len(_FACTORIALS) <= n:
        k = len(_FACTORIALS)
        _FACTORIALS.append(_FACTORIALS[-1] * quantum_int(k))
    return _FACTORIALS[n]


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Return ``h`` with ``h * g == f``.

    Long division from the top exponent; raises :class:`DivisionError` when
    a leading coefficient does not divide or a nonzero remainder survives.
    """
    f = LaurentPoly.coerce(f)
    g = LaurentPoly.coerce(g)
    if not g:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if not f:
        return ZERO
    g_top, g_low = g.max_exp, g.min_exp
    b = g.coeff(g_top)
    floor = f.min_exp - g_low
    rem = f
    h: dict[int, int] = {}
    while rem:
        top = rem.max_exp
        k = top - g_top
        if k < floor:
            raise DivisionError(f"{f} is not divisible by {g}")
        a = rem.coeff(top)
        quo, r = divmod(a, b)
        if r:
            raise DivisionError(f"{f} is not divisible by {g}: coefficient {a} vs leading {b}")
        h[k] = quo
        rem = rem - g.shift(k) * quo
    return LaurentPoly._raw(h)


def eval_at_one(p: LaurentPoly) -> int:
    return LaurentPoly.coerce(p).at_one()
