"""Standard tableaux, their degrees, and graded Specht characters.

Two routes to the multiplicity of a residue sequence in a Specht character:

* :func:`specht_character` enumerates every standard tableau (small sizes);
* :func:`specht_multiplicity` runs a dynamic program over the chain of
  shapes realising the sequence and never touches individual tableaux.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .laurent import ONE, ZERO, LaurentPoly
from .ladders import ResidueSeq
from .partitions import Node, Partition, check_e, residue

__all__ = [
    "StandardTableau",
    "GradedCharacter",
    "SizeLimitError",
    "ENUMERATION_LIMIT",
    "standard_tableaux",
    "node_degree",
    "tableau_degree",
    "residue_sequence",
    "specht_character",
    "specht_multiplicity",
    "char_multiplicity",
]

ENUMERATION_LIMIT = 12


class SizeLimitError(ValueError):
    """Full tableau enumeration was requested above the configured size."""


@dataclass(frozen=True)
class StandardTableau:
    """A standard tableau stored as the sequence of nodes labelled 1, 2, ..., d."""

    shape: Partition
    path: tuple[Node, ...]

    def __post_init__(self):
        object.__setattr__(self, "shape", Partition(self.shape))
        object.__setattr__(self, "path", tuple(Node(*n) for n in self.path))
        shape = Partition()
        for node in self.path:
            shape = shape.add_node(node)
        if shape != self.shape:
            raise ValueError(f"path {self.path} does not fill {self.shape}")

    @classmethod
    def from_rows(cls, rows) -> StandardTableau:
        """Build from row lists of labels, e.g. ``[[1, 2], [3]]``."""
        cells = {label: Node(r, c) for r, row in enumerate(rows, 1) for c, label in enumerate(row, 1)}
        shape = Partition(len(row) for row in rows)
        if sorted(cells) != list(range(1, shape.size + 1)):
            raise ValueError(f"labels must be 1..{shape.size}")
        return cls(shape, tuple(cells[k] for k in range(1, shape.size + 1)))

    @property
    def size(self) -> int:
        return len(self.path)

    def rows(self) -> list[list[int]]:
        out = [[0] * p for p in self.shape]
        for label, (r, c) in enumerate(self.path, 1):
            out[r - 1][c - 1] = label
        return out

    def restrict(self, s: int) -> StandardTableau:
        """The subtableau of entries ``1..s``."""
        sub = self.path[:s]
        shape = Partition()
        for node in sub:
            shape = shape.add_node(node)
        return StandardTableau(shape, sub)

    def shape_at(self, s: int) -> Partition:
        return self.restrict(s).shape

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rows())


def standard_tableaux(mu: Partition) -> Iterator[StandardTableau]:
    """Yield every standard tableau of shape ``mu``.

    The largest entry sits in a removable node; recursion removes it.  Order
    follows :meth:`Partition.removable_nodes` (top row first) at every level.
    """
    mu = Partition(mu)
    for path in _paths(mu):
        yield StandardTableau(mu, path)


def _paths(mu: Partition) -> Iterator[tuple[Node, ...]]:
    if not mu:
        yield ()
        return
    for node in mu.removable_nodes():
        for path in _paths(mu.remove_node(node)):
            yield path + (node,)


def node_degree(lam: Partition, node: Node, e: int) -> int:
    """Addable minus removable nodes of the same residue strictly below ``node``."""
    check_e(e)
    lam = Partition(lam)
    node = Node(*node)
    if node not in lam.removable_nodes():
        raise ValueError(f"{node} is not removable for {lam}")
    return _node_degree(lam, node, e)


def _node_degree(lam: Partition, node: Node, e: int) -> int:
    i = residue(node, e)
    up = sum(1 for b in lam.addable_nodes() if b.row > node.row and residue(b, e) == i)
    down = sum(1 for b in lam.removable_nodes() if b.row > node.row and residue(b, e) == i)
    return up - down


def tableau_degree(t: StandardTableau, e: int) -> int:
    check_e(e)
    deg = 0
    shape = Partition()
    for node in t.path:
        shape = shape.add_node(node)
        deg += _node_degree(shape, node, e)
    return deg


def residue_sequence(t: StandardTableau, e: int) -> ResidueSeq:
    check_e(e)
    return tuple(residue(n, e) for n in t.path)


@dataclass
class GradedCharacter:
    """Sparse formal sum of residue sequences with Laurent coefficients.

    Keys are tuples of small ints; zero coefficients are never stored.
    """

    d: int
    e: int
    terms: dict[ResidueSeq, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for seq, poly in self.terms.items():
            seq = tuple(seq)
            if len(seq) != self.d or any(not 0 <= i < self.e for i in seq):
                raise ValueError(f"bad residue sequence {seq} for d={self.d}, e={self.e}")
            if poly:
                clean[seq] = LaurentPoly.coerce(poly)
        self.terms = clean

    def add_term(self, seq: ResidueSeq, poly: LaurentPoly) -> None:
        total = self.terms.get(seq, ZERO) + poly
        if total:
            self.terms[seq] = total
        else:
            self.terms.pop(seq, None)

    def __getitem__(self, seq) -> LaurentPoly:
        return self.terms.get(tuple(seq), ZERO)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return (self.d, self.e, self.terms) == (other.d, other.e, other.terms)

    def __add__(self, other: GradedCharacter) -> GradedCharacter:
        self._compatible(other)
        out = GradedCharacter(self.d, self.e, dict(self.terms))
        for seq, poly in other.terms.items():
            out.add_term(seq, poly)
        return out

    def __sub__(self, other: GradedCharacter) -> GradedCharacter:
        return self + other.scale(-1)

    def scale(self, c) -> GradedCharacter:
        c = LaurentPoly.coerce(c)
        return GradedCharacter(self.d, self.e, {s: p * c for s, p in self.terms.items()})

    def bar(self) -> GradedCharacter:
        return GradedCharacter(self.d, self.e, {s: p.bar() for s, p in self.terms.items()})

    def is_bar_invariant(self) -> bool:
        return all(p.is_bar_invariant() for p in self.terms.values())

    def is_nonnegative(self) -> bool:
        return all(p.nonnegative() for p in self.terms.values())

    def dimension(self) -> int:
        """Total coefficient mass at ``q = 1``."""
        return sum(p.at_one() for p in self.terms.values())

    def _compatible(self, other: GradedCharacter) -> None:
        if (self.d, self.e) != (other.d, other.e):
            raise ValueError("characters for different (d, e)")

    def to_json(self) -> list[dict]:
        return [{"seq": list(s), "poly": self.terms[s].to_json()} for s in sorted(self.terms)]

    @classmethod
    def from_json(cls, records, d: int, e: int) -> GradedCharacter:
        return cls(d, e, {tuple(r["seq"]): LaurentPoly.from_json(r["poly"]) for r in records})


def specht_character(mu: Partition, e: int, limit: int | None = None) -> GradedCharacter:
    """``sum over standard tableaux T of q^deg(T) * i^T``.

    Refuses shapes larger than ``limit`` (default :data:`ENUMERATION_LIMIT`);
    use :func:`specht_multiplicity` for single weights of larger shapes.
    """
    check_e(e)
    mu = Partition(mu)
    cap = ENUMERATION_LIMIT if limit is None else limit
    if mu.size > cap:
        raise SizeLimitError(
            f"|mu| = {mu.size} exceeds the enumeration limit {cap}; use specht_multiplicity instead"
        )
    return _specht_character(mu, e)


@lru_cache(maxsize=256)
def _specht_character_terms(mu: Partition, e: int) -> tuple[tuple[ResidueSeq, LaurentPoly], ...]:
    acc: dict[ResidueSeq, dict[int, int]] = {}
    for t in standard_tableaux(mu):
        seq = residue_sequence(t, e)
        deg = tableau_degree(t, e)
        slot = acc.setdefault(seq, {})
        slot[deg] = slot.get(deg, 0) + 1
    return tuple((s, LaurentPoly(c)) for s, c in acc.items())


def _specht_character(mu: Partition, e: int) -> GradedCharacter:
    return GradedCharacter(mu.size, e, dict(_specht_character_terms(mu, e)))


def specht_multiplicity(mu: Partition, seq: ResidueSeq, e: int) -> LaurentPoly:
    """Coefficient of ``seq`` in the graded Specht character of ``mu``.

    Dynamic program over partial shapes: step ``r`` adds an addable node of
    ``mu`` with residue ``seq[r]`` and multiplies by ``q`` to the degree of
    that node in the grown shape.
    """
    check_e(e)
    mu = Partition(mu)
    seq = tuple(seq)
    if len(seq) != mu.size:
        raise ValueError(f"sequence length {len(seq)} != |mu| = {mu.size}")
    return _specht_multiplicity(mu, seq, e)


@lru_cache(maxsize=1 << 16)
def _specht_multiplicity(mu: Partition, seq: ResidueSeq, e: int) -> LaurentPoly:
    layer: dict[Partition, LaurentPoly] = {Partition(): ONE}
    for i in seq:
        nxt: dict[Partition, LaurentPoly] = {}
        for shape, weight in layer.items():
            for b in shape.addable_nodes():
                if b not in mu or (b.col - b.row) % e != i:
                    continue
                grown = shape.add_node(b)
                w = weight.shift(_node_degree(grown, b, e))
                nxt[grown] = nxt[grown] + w if grown in nxt else w
        layer = {s: w for s, w in nxt.items() if w}
        if not layer:
            return ZERO
    return layer.get(mu, ZERO)


def char_multiplicity(ch: GradedCharacter, seq: ResidueSeq) -> LaurentPoly:
    seq = tuple(seq)
    if len(seq) != ch.d:
        raise ValueError(f"sequence length {len(seq)} != character degree {ch.d}")
    return ch[seq]
