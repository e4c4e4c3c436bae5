"""Partitions, nodes, residues, dominance and moves.

Nodes are 1-indexed ``(row, col)`` in English notation.  The residue of a
node is ``(col - row) mod e`` and ``e >= 2`` is always passed explicitly.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from typing import Iterable, NamedTuple

__all__ = [
    "Node",
    "Partition",
    "all_partitions",
    "restricted_partitions",
    "sigma",
    "dominates",
    "is_e_restricted",
    "residue",
    "residue_content",
    "moves",
    "moves_between",
    "distance",
    "check_e",
]


def check_e(e: int) -> None:
    if not isinstance(e, int) or e < 2:
        raise ValueError(f"quantum characteristic must be an integer >= 2, got {e!r}")


class Node(NamedTuple):
    row: int
    col: int


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Comparison is plain tuple comparison, so ``sorted(..., reverse=True)``
    gives decreasing lexicographic order.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"2,1"``, ``"(2,1)"`` or ``"2,1^3"``; ``""`` and ``"0"`` give the empty partition."""
        text = text.strip().strip("()[]").replace(" ", "")
        if text in ("", "0", "∅"):
            return cls()
        parts: list[int] = []
        for tok in text.split(","):
            if "^" in tok:
                base, mult = tok.split("^")
                parts.extend([int(base)] * int(mult))
            else:
                parts.append(int(tok))
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-indexed part, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __contains__(self, node) -> bool:  # type: ignore[override]
        r, c = node
        return 1 <= r <= len(self) and 1 <= c <= self[r - 1]

    def nodes(self) -> list[Node]:
        return [Node(r, c) for r, row in enumerate(self, 1) for c in range(1, row + 1)]

    def removable_nodes(self) -> list[Node]:
        return [
            Node(r, self[r - 1])
            for r in range(1, len(self) + 1)
            if r == len(self) or self[r] < self[r - 1]
        ]

    def addable_nodes(self) -> list[Node]:
        out = [Node(r, self[r - 1] + 1) for r in range(1, len(self) + 1) if r == 1 or self[r - 2] > self[r - 1]]
        out.append(Node(len(self) + 1, 1))
        return out

    def add_node(self, node: Node) -> Partition:
        r, c = node
        parts = list(self)
        if r == len(parts) + 1 and c == 1:
            parts.append(1)
        elif 1 <= r <= len(parts) and c == parts[r - 1] + 1 and (r == 1 or parts[r - 2] >= c):
            parts[r - 1] = c
        else:
            raise ValueError(f"{node} is not addable for {self}")
        return Partition._trusted(parts)

    def remove_node(self, node: Node) -> Partition:
        if node not in self.removable_nodes():
            raise ValueError(f"{node} is not removable for {self}")
        parts = list(self)
        parts[node.row - 1] -= 1
        if not parts[-1]:
            parts.pop()
        return Partition._trusted(parts)

    @classmethod
    def _trusted(cls, parts) -> Partition:
        return tuple.__new__(cls, parts)

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition._trusted([sum(1 for p in self if p >= c) for c in range(1, self[0] + 1)])

    def compact(self) -> str:
        """``(2,1^3)``-style exponent notation."""
        if not self:
            return "∅"
        chunks = []
        i = 0
        while i < len(self):
            j = i
            while j < len(self) and self[j] == self[i]:
                j += 1
            chunks.append(str(self[i]) if j - i == 1 else f"{self[i]}^{j - i}")
            i = j
        return "(" + ",".join(chunks) + ")"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "∅"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def to_json(self) -> list[int]:
        return list(self)


@lru_cache(maxsize=None)
def all_partitions(d: int) -> tuple[Partition, ...]:
    """Every partition of ``d``, in decreasing lexicographic order."""
    if d < 0:
        raise ValueError(f"d must be nonnegative, got {d}")

    def gen(n: int, cap: int):
        if n == 0:
            yield ()
            return
        for first in range(min(n, cap), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    return tuple(Partition._trusted(p) for p in gen(d, d))


@lru_cache(maxsize=None)
def restricted_partitions(d: int, e: int) -> tuple[Partition, ...]:
    """The e-restricted partitions of ``d`` in the same order as :func:`all_partitions`."""
    return tuple(p for p in all_partitions(d) if is_e_restricted(p, e))


def sigma(lam: Partition, k: int) -> int:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return sum(lam[:k])


def dominates(mu: Partition, lam: Partition) -> bool:
    """True iff ``lam`` is dominated by ``mu``."""
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance compares partitions of equal size: {mu} vs {lam}")
    return _dominates(tuple(mu), tuple(lam))


@lru_cache(maxsize=1 << 16)
def _dominates(mu: tuple, lam: tuple) -> bool:
    n = max(len(mu), len(lam))
    mu_s = accumulate(mu + (0,) * (n - len(mu)))
    lam_s = accumulate(lam + (0,) * (n - len(lam)))
    return all(a >= b for a, b in zip(mu_s, lam_s))


def is_e_restricted(lam: Partition, e: int) -> bool:
    check_e(e)
    ext = tuple(lam) + (0,)
    return all(ext[r] - ext[r + 1] < e for r in range(len(lam)))


def residue(node: Node | tuple[int, int], e: int) -> int:
    r, c = node
    return (c - r) % e


@lru_cache(maxsize=1 << 14)
def _content(lam: tuple, e: int) -> tuple[int, ...]:
    counts = [0] * e
    for r, row in enumerate(lam, 1):
        for c in range(1, row + 1):
            counts[(c - r) % e] += 1
    return tuple(counts)


def residue_content(lam: Partition, e: int) -> dict[int, int]:
    """Number of ``i``-nodes of ``lam`` for each residue ``i``."""
    check_e(e)
    return dict(enumerate(_content(tuple(lam), e)))


def moves(mu: Partition, e: int) -> tuple[Partition, ...]:
    check_e(e)
    return _moves(Partition(mu), e)


@lru_cache(maxsize=None)
def _moves(mu: Partition, e: int) -> tuple[Partition, ...]:
    c = _content(tuple(mu), e)
    return tuple(
        lam
        for lam in all_partitions(mu.size)
        if _content(tuple(lam), e) == c and _dominates(tuple(mu), tuple(lam))
    )


def moves_between(mu: Partition, lam: Partition, e: int) -> tuple[Partition, ...]:
    """``{nu in M(mu) : lam in M(nu)}``; empty when ``lam`` is not a move for ``mu``."""
    check_e(e)
    if sum(mu) != sum(lam):
        raise ValueError(f"partitions of different sizes: {mu} vs {lam}")
    lam = Partition(lam)
    mv = _moves(Partition(mu), e)
    if lam not in mv:
        return ()
    return tuple(nu for nu in mv if _dominates(tuple(nu), tuple(lam)))


def distance(mu: Partition, lam: Partition) -> int:
    """Sum over k of ``sigma_k(mu) - sigma_k(lam)``; requires ``lam`` dominated by ``mu``."""
    if not dominates(mu, lam):
        raise ValueError(f"{lam} is not dominated by {mu}")
    n = max(len(mu), len(lam))
    mu_s = accumulate(tuple(mu) + (0,) * (n - len(mu)))
    lam_s = accumulate(tuple(lam) + (0,) * (n - len(lam)))
    return sum(a - b for a, b in zip(mu_s, lam_s))
