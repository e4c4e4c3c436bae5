"""Ladders, bottom removable sequences and the ladder weight.

Ladder ``L_m`` is the set of nodes ``(1 + k, m - k(e - 1))`` with ``k >= 0``
and positive column.  Every node lies on exactly one ladder, with index
``col + (row - 1)(e - 1)``, and all nodes of ``L_m`` have residue
``(m - 1) mod e``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import ONE, LaurentPoly, quantum_factorial
from .partitions import Node, Partition, check_e, is_e_restricted, residue

__all__ = [
    "ResidueSeq",
    "LadderProfile",
    "ladder_index",
    "ladder_nodes",
    "ladder_profile",
    "is_bottom_complete",
    "bottom_removable_sequence",
    "ladder_weight",
    "ladder_weight_recursive",
    "r_lambda",
]

ResidueSeq = tuple[int, ...]


@dataclass(frozen=True)
class LadderProfile:
    e: int
    counts: tuple[int, ...]
    residues: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.counts)


def ladder_index(node: Node | tuple[int, int], e: int) -> int:
    check_e(e)
    r, c = node
    return c + (r - 1) * (e - 1)


def ladder_nodes(m: int, e: int) -> list[Node]:
    """All nodes of ``L_m``, top row first."""
    check_e(e)
    out = []
    k = 0
    while m - k * (e - 1) >= 1:
        out.append(Node(1 + k, m - k * (e - 1)))
        k += 1
    return out


def ladder_profile(lam: Partition, e: int) -> LadderProfile:
    check_e(e)
    counts: dict[int, int] = {}
    for node in Partition(lam).nodes():
        m = ladder_index(node, e)
        counts[m] = counts.get(m, 0) + 1
    t = max(counts, default=0)
    return LadderProfile(
        e=e,
        counts=tuple(counts.get(m, 0) for m in range(1, t + 1)),
        residues=tuple((m - 1) % e for m in range(1, t + 1)),
    )


def is_bottom_complete(lam: Partition, e: int) -> bool:
    """Every ladder of ``lam`` is bottom complete."""
    check_e(e)
    lam = Partition(lam)
    for node in lam.nodes():
        m = ladder_index(node, e)
        for other in ladder_nodes(m, e):
            if other.row > node.row and other not in lam:
                return False
    return True


def _require_restricted(lam: Partition, e: int) -> Partition:
    check_e(e)
    lam = Partition(lam)
    if not is_e_restricted(lam, e):
        raise ValueError(f"{lam} is not {e}-restricted")
    return lam


def bottom_removable_sequence(lam: Partition, e: int) -> tuple[Node, ...]:
    """Nodes of ``lam`` on its last ladder, lowest first."""
    lam = _require_restricted(lam, e)
    if not lam:
        raise ValueError("the empty partition has no bottom removable sequence")
    t = max(ladder_index(n, e) for n in lam.removable_nodes())
    return tuple(sorted((n for n in ladder_nodes(t, e) if n in lam), key=lambda n: -n.row))


def ladder_weight_recursive(lam: Partition, e: int) -> ResidueSeq:
    """Ladder weight by peeling the top node of the bottom removable sequence.

    Quadratic; kept as the reference for :func:`ladder_weight`.
    """
    lam = _require_restricted(lam, e)
    out: list[int] = []
    while lam:
        top = bottom_removable_sequence(lam, e)[-1]
        out.append(residue(top, e))
        lam = lam.remove_node(top)
    return tuple(reversed(out))


def ladder_weight(lam: Partition, e: int) -> ResidueSeq:
    """``res L_m`` repeated ``r_m(lam)`` times, for ``m = 1 .. t``."""
    lam = _require_restricted(lam, e)
    return _ladder_weight(lam, e)


@lru_cache(maxsize=None)
def _ladder_weight(lam: Partition, e: int) -> ResidueSeq:
    prof = ladder_profile(lam, e)
    return tuple(res for res, r in zip(prof.residues, prof.counts) for _ in range(r))


@lru_cache(maxsize=None)
def _r_lambda(lam: Partition, e: int) -> LaurentPoly:
    out = ONE
    for r in ladder_profile(lam, e).counts:
        out = out * quantum_factorial(r)
    return out


def r_lambda(lam: Partition, e: int) -> LaurentPoly:
    """Product of quantum factorials of the ladder sizes of ``lam``."""
    check_e(e)
    return _r_lambda(Partition(lam), e)
