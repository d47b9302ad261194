"""Finite binary-relation quantales.

A ``Relation`` is a binary relation on the state set {0, ..., size-1},
stored as a dense boolean matrix: ``bits[i, j]`` iff the pair (i, j) is
in the relation.  Composition is diagrammatic ("and then"): a pair
(x, z) is in ``r.compose(s)`` iff x r y and y s z for some y.  Together
with union as join, transposition as involution and the diagonal as
unit, relations of a fixed size form an involutive unital quantale.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np


class DimensionError(ValueError):
    """Raised when relations of different sizes are combined."""


class Relation:
    """An immutable binary relation on ``size`` states."""

    __slots__ = ("size", "bits")

    def __init__(self, size: int, bits: np.ndarray):
        if size < 0:
            raise ValueError(f"negative size: {size}")
        bits = np.asarray(bits, dtype=bool)
        if bits.shape != (size, size):
            raise ValueError(f"bit matrix shape {bits.shape} != ({size}, {size})")
        bits = bits.copy()
        bits.flags.writeable = False
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("Relation is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def empty(cls, size: int) -> "Relation":
        """The bottom element 0: no pairs."""
        return cls(size, np.zeros((size, size), dtype=bool))

    @classmethod
    def identity(cls, size: int) -> "Relation":
        """The unit e: exactly the diagonal."""
        return cls(size, np.eye(size, dtype=bool))

    @classmethod
    def full(cls, size: int) -> "Relation":
        """All pairs."""
        return cls(size, np.ones((size, size), dtype=bool))

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        bits = np.zeros((size, size), dtype=bool)
        for i, j in pairs:
            if not (0 <= i < size and 0 <= j < size):
                raise ValueError(f"pair ({i}, {j}) out of range for size {size}")
            bits[i, j] = True
        return cls(size, bits)

    # -- basic protocol -----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        return self.size == other.size and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self) -> int:
        return hash((self.size, self.bits.tobytes()))

    def __contains__(self, pair: tuple[int, int]) -> bool:
        i, j = pair
        return bool(self.bits[i, j])

    def __repr__(self) -> str:
        return f"Relation({self.size}, {sorted(self.pairs())})"

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Member pairs in row-major order."""
        for i, j in zip(*np.nonzero(self.bits)):
            yield (int(i), int(j))

    def count(self) -> int:
        return int(self.bits.sum())

    def is_subset_of(self, other: "Relation") -> bool:
        self._check_size(other)
        return bool(np.all(~self.bits | other.bits))

    def first_violation(self, other: "Relation") -> tuple[int, int] | None:
        """Row-major least pair in ``self`` but not in ``other``, if any."""
        self._check_size(other)
        diff = self.bits & ~other.bits
        idx = np.argwhere(diff)
        if len(idx) == 0:
            return None
        i, j = idx[0]
        return (int(i), int(j))

    def _check_size(self, other: "Relation") -> None:
        if self.size != other.size:
            raise DimensionError(f"size mismatch: {self.size} != {other.size}")

    # -- quantale operations ------------------------------------------

    def compose(self, other: "Relation") -> "Relation":
        """Diagrammatic composition: (x, z) iff x self y and y other z."""
        self._check_size(other)
        # float matmul hits BLAS and stays exact (path counts < 2**53)
        prod = self.bits.astype(np.float64) @ other.bits.astype(np.float64)
        return Relation(self.size, prod > 0.5)

    def converse(self) -> "Relation":
        """The involution: reverse every pair."""
        return Relation(self.size, self.bits.T)

    def union(self, other: "Relation") -> "Relation":
        self._check_size(other)
        return Relation(self.size, self.bits | other.bits)


def join(relations: Sequence[Relation], size: int | None = None) -> Relation:
    """Union of the given relations; the empty join is the bottom element.

    ``size`` is required when the list is empty (the bottom of which
    Rel(X) is otherwise ambiguous) and optional but checked otherwise.
    """
    if not relations:
        if size is None:
            raise ValueError("empty join needs an explicit size")
        return Relation.empty(size)
    first = relations[0]
    if size is not None and first.size != size:
        raise DimensionError(f"size mismatch: {first.size} != {size}")
    bits = np.zeros((first.size, first.size), dtype=bool)
    for r in relations:
        first._check_size(r)
        bits |= r.bits
    return Relation(first.size, bits)


def equivalence_closure(r: Relation) -> Relation:
    """Smallest reflexive, symmetric, transitive relation containing ``r``.

    Computed by squaring the reflexive-symmetric hull to a fixed point.
    """
    n = r.size
    bits = r.bits | r.bits.T | np.eye(n, dtype=bool)
    while True:
        step = (bits.astype(np.float64) @ bits.astype(np.float64)) > 0.5
        if np.array_equal(step, bits):
            return Relation(n, bits)
        bits = step


def connected_components(r: Relation) -> list[list[int]]:
    """Blocks of the equivalence closure of ``r``.

    Every state appears in exactly one block; blocks are sorted by their
    least element and internally ascending, so output is deterministic.
    """
    closure = equivalence_closure(r).bits
    seen = np.zeros(r.size, dtype=bool)
    blocks: list[list[int]] = []
    for i in range(r.size):
        if seen[i]:
            continue
        members = np.nonzero(closure[i])[0]
        seen[members] = True
        blocks.append([int(m) for m in members])
    return blocks
