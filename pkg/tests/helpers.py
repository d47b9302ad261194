"""Shared builders and lemma checkers used across the test modules."""

from __future__ import annotations

import random

import numpy as np

from penrel.reptheory import RelRep, SigmaSpec, induced_from_sigma, seq_of_state, top_relation
from penrel.seqspace import enumerate_seqs


def doubled_rep(level: int, copies: int = 2) -> RelRep:
    """One connected block carrying each sequence with a fixed multiplicity."""
    tags = "abcdefghij"[:copies]
    seqs = enumerate_seqs(level)
    labels = tuple(f"{s}{t}" for s in map(str, seqs) for t in tags)
    sigma = {f"{s}{t}": s_obj for s_obj in seqs for s, t in ((str(s_obj), t) for t in tags)}
    return induced_from_sigma(SigmaSpec(labels, (labels,), sigma))


def random_sigma_spec(rng: random.Random, max_level: int = 6, max_blocks: int = 3,
                      max_multiplicity: int = 3) -> SigmaSpec:
    level = rng.randint(1, max_level)
    blocks = []
    states: list[str] = []
    sigma = {}
    for b in range(rng.randint(1, max_blocks)):
        block = []
        for s in enumerate_seqs(level):
            for k in range(rng.randint(1, max_multiplicity)):
                label = f"b{b}.{s}.{k}"
                block.append(label)
                sigma[label] = s
        rng.shuffle(block)
        blocks.append(tuple(block))
        states.extend(block)
    return SigmaSpec(tuple(states), tuple(blocks), sigma)


def seq_bit_matrix(rep: RelRep) -> np.ndarray:
    """Per-state sequence bits as an (n, L) integer matrix."""
    return np.array(
        [list(seq_of_state(rep, label)) for label in rep.states], dtype=np.int8
    ).reshape(rep.size, rep.trunc_level)


def tail_agreement_stack(bits: np.ndarray) -> list[np.ndarray]:
    """agree[k][x, y] iff the sequences of x and y agree at all m > k."""
    n, level = bits.shape
    agree: list[np.ndarray] = [np.empty(0)] * level
    running = np.ones((n, n), dtype=bool)
    for k in reversed(range(level)):
        agree[k] = running
        running = running & (bits[:, k][:, None] == bits[:, k][None, :])
    return agree


def assert_state_dichotomy(rep: RelRep) -> None:
    """The four per-state equivalences plus the small-implies-large step.

    At every state and level: the L diagonal holds iff the S diagonal
    does not, iff some state reaches it by the L generator, iff no state
    reaches it by the S generator; and an S diagonal at n forces an L
    diagonal at n + 1.
    """
    for n in range(rep.trunc_level):
        wl = rep.gen_map[(n, "L")].bits
        ws = rep.gen_map[(n, "S")].bits
        diag_l = np.diag(wl)
        diag_s = np.diag(ws)
        assert np.array_equal(diag_l, ~diag_s)
        assert np.array_equal(diag_l, wl.any(axis=0))
        assert np.array_equal(diag_s, ws.any(axis=0))
        if n + 1 < rep.trunc_level:
            next_l = np.diag(rep.gen_map[(n + 1, "L")].bits)
            assert np.all(~diag_s | next_l)


def assert_transition_formula(rep: RelRep) -> None:
    """Generator transitions are exactly fixed by connectivity and sequences.

    (x, y) sits in the level-n tile-X relation iff x and y are connected,
    bit n of y's sequence matches X, and the sequences agree above n.
    """
    bits = seq_bit_matrix(rep)
    agree = tail_agreement_stack(bits)
    connected = top_relation(rep).bits
    for n in range(rep.trunc_level):
        for tile, bit in (("L", 0), ("S", 1)):
            expected = connected & agree[n] & (bits[:, n] == bit)[None, :]
            assert np.array_equal(rep.gen_map[(n, tile)].bits, expected), (n, tile)


def assert_connectivity_by_generators(rep: RelRep) -> None:
    """Two states are connected iff a single generator letter relates them,
    and every generator transition preserves the sequence above its level."""
    n = rep.size
    bits = seq_bit_matrix(rep)
    agree = tail_agreement_stack(bits)
    union = np.zeros((n, n), dtype=bool)
    for (lvl, _tile), rel in rep.gen_map.items():
        union |= rel.bits | rel.bits.T
        assert np.all(~rel.bits | agree[lvl])
    connected = top_relation(rep).bits
    off_diagonal = ~np.eye(n, dtype=bool)
    assert np.array_equal(connected & off_diagonal, union & off_diagonal)


def assert_component_saturation(rep: RelRep) -> None:
    """Each component's sequence image is the whole truncated class."""
    from penrel.relalg import connected_components

    full = {s.bits for s in enumerate_seqs(rep.trunc_level)}
    for block in connected_components(top_relation(rep)):
        image = {tuple(seq_bit_matrix(rep)[i]) for i in block}
        image = {tuple(int(b) for b in t) for t in image}
        assert image == full
