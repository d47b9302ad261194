"""Truncated Penrose sequences.

A sequence keeps bits 0..L-1 of an infinite 0/1 sequence in which every
1 is immediately followed by a 0; positions at or beyond the truncation
level L read as 0 (the tail-zero convention), which is always
admissible.  Under that convention all length-L sequences agree from
position L onwards, so a single truncation level models exactly one
tail-equivalence class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def is_admissible(bits: Iterable[int]) -> bool:
    """True iff no 1 is immediately followed by another 1."""
    previous = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"bit out of range: {b!r}")
        if previous == 1 and b == 1:
            return False
        previous = b
    return True


@dataclass(frozen=True, order=True)
class TruncSeq:
    """An admissible 0/1 string of fixed length; index 0 is leftmost."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if not is_admissible(self.bits):
            raise ValueError(f"inadmissible sequence: {''.join(map(str, self.bits))}")

    @classmethod
    def from_string(cls, text: str) -> "TruncSeq":
        if not all(c in "01" for c in text):
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls(tuple(int(c) for c in text))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, n: int) -> int:
        return self.bits[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def enumerate_seqs(level: int) -> list[TruncSeq]:
    """All admissible sequences of the given length, lexicographically.

    The count follows the Fibonacci-style recurrence
    c(L) = c(L-1) + c(L-2) with c(1) = 2, c(2) = 3.
    """
    if level < 0:
        raise ValueError(f"negative level: {level}")
    out: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...]) -> None:
        if len(prefix) == level:
            out.append(prefix)
            return
        grow(prefix + (0,))
        if not prefix or prefix[-1] == 0:
            grow(prefix + (1,))

    grow(())
    return [TruncSeq(bits) for bits in out]


def tail_equal(s: TruncSeq, t: TruncSeq, start: int) -> bool:
    """True iff s and t agree at every index k with start <= k < L."""
    if len(s) != len(t):
        raise ValueError(f"length mismatch: {len(s)} != {len(t)}")
    if not 0 <= start <= len(s):
        raise ValueError(f"start index {start} out of range for length {len(s)}")
    return s.bits[start:] == t.bits[start:]


def cylinder(level: int, n: int, bit: int) -> list[TruncSeq]:
    """The sequences of the given length whose n-th bit equals ``bit``."""
    if not 0 <= n < level:
        raise ValueError(f"position {n} out of range for level {level}")
    if bit not in (0, 1):
        raise ValueError(f"bit out of range: {bit!r}")
    return [s for s in enumerate_seqs(level) if s[n] == bit]
