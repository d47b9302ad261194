"""Relational representations of the Penrose theories at finite truncation.

A representation assigns to every forward generator of level below the
truncation a binary relation on a finite labelled state set; backward
generators act as converses, ``true`` as the diagonal, ``false`` as the
empty relation, products as diagrammatic composition, disjunctions as
unions, and ``top`` as the connectivity equivalence generated by all
generator relations.

The module provides term evaluation and axiom checking against the
instantiated theories, the per-state sequence map, representations
induced by a sequence-valued labelling of a partitioned state set, the
Cantor representation, sums and canonical decompositions, the
irreducible / deterministic / algebraically-irreducible classification,
equivalence of representations, and the module-homomorphism property of
the sequence map.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .relalg import Relation, connected_components, equivalence_closure, join as rel_join
from .seqspace import TruncSeq, enumerate_seqs
from .theory import (
    TILES,
    Bottom,
    Gen,
    Generator,
    Join,
    Mul,
    Sequent,
    Star,
    Term,
    Top,
    Unit,
    bit_of_tile,
    instantiate_pent,
    print_term,
)


class TruncationError(ValueError):
    """A term mentions a generator level at or above the truncation."""


class NotAModelError(ValueError):
    """A representation violates the theory where a model is required."""


class NotSaturatedError(ValueError):
    """A block's sequence image misses part of the truncated class."""


class UnsupportedError(ValueError):
    """The requested check exceeds a documented size limitation."""


# ---------------------------------------------------------------------------
# Representations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RelRep:
    """A finite relational representation.

    ``gen_map`` holds one relation per forward generator, keyed by
    (level, tile) for every level below ``trunc_level``; backward
    generators are evaluated as converses and never stored.
    """

    states: tuple[str, ...]
    trunc_level: int
    gen_map: Mapping[tuple[int, str], Relation]

    def __post_init__(self):
        if self.trunc_level < 0:
            raise ValueError(f"negative truncation level: {self.trunc_level}")
        if len(set(self.states)) != len(self.states):
            raise ValueError("state labels must be distinct")
        n = len(self.states)
        expected = {(lvl, tile) for lvl in range(self.trunc_level) for tile in TILES}
        if set(self.gen_map) != expected:
            raise ValueError("gen_map must cover exactly levels 0..L-1 for tiles L and S")
        for key, rel in self.gen_map.items():
            if rel.size != n:
                raise ValueError(f"relation for {key} has size {rel.size}, expected {n}")

    @property
    def size(self) -> int:
        return len(self.states)

    def state_index(self, label: str) -> int:
        try:
            return self.states.index(label)
        except ValueError:
            raise KeyError(f"unknown state {label!r}") from None

    def relation(self, level: int, tile: str, daggered: bool = False) -> Relation:
        if not 0 <= level < self.trunc_level:
            raise TruncationError(
                f"generator level {level} outside truncation {self.trunc_level}"
            )
        rel = self.gen_map[(level, tile)]
        return rel.converse() if daggered else rel

    def generator_letters(self) -> list[tuple[int, str, bool]]:
        """All generator letters (level, tile, daggered) in canonical order."""
        return [
            (n, tile, dag)
            for n in range(self.trunc_level)
            for tile in TILES
            for dag in (False, True)
        ]


def make_rep(
    states: Iterable[str],
    trunc_level: int,
    gen_map: Mapping[tuple[int, str], Relation],
) -> RelRep:
    return RelRep(tuple(states), trunc_level, dict(gen_map))


# ---------------------------------------------------------------------------
# Term evaluation and axiom checking
# ---------------------------------------------------------------------------


def eval_term(rep: RelRep, term: Term) -> Relation:
    """Evaluate a term to a relation on the representation's states.

    ``true`` is the exact diagonal (models here are strictly unital) and
    ``top`` is the equivalence closure of all generator relations and
    their converses, which is the join of the images of all elements.
    """
    n = rep.size
    if isinstance(term, Gen):
        g = term.gen
        return rep.relation(g.level, g.tile, g.daggered)
    if isinstance(term, Unit):
        return Relation.identity(n)
    if isinstance(term, Bottom):
        return Relation.empty(n)
    if isinstance(term, Top):
        return top_relation(rep)
    if isinstance(term, Star):
        return eval_term(rep, term.arg).converse()
    if isinstance(term, Mul):
        result = eval_term(rep, term.factors[0])
        for factor in term.factors[1:]:
            result = result.compose(eval_term(rep, factor))
        return result
    if isinstance(term, Join):
        return rel_join([eval_term(rep, t) for t in term.terms], size=n)
    raise TypeError(f"not a term: {term!r}")


def top_relation(rep: RelRep) -> Relation:
    """The value of ``top``: connectivity by arbitrary generator words."""
    rels = list(rep.gen_map.values())
    rels += [r.converse() for r in rels]
    return equivalence_closure(rel_join(rels, size=rep.size))


@dataclass(frozen=True)
class SequentVerdict:
    name: str
    passed: bool
    witness: tuple[str, str] | None

    def to_text(self) -> str:
        if self.passed:
            return f"{self.name}: PASS"
        x, y = self.witness
        return f"{self.name}: FAIL  witness ({x}, {y})"

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "witness": list(self.witness) if self.witness else None,
        }


def check_sequent(rep: RelRep, sequent: Sequent) -> SequentVerdict:
    """PASS iff eval(lhs) is contained in eval(rhs).

    A failure carries the row-major least witness pair from the
    difference.
    """
    lhs = eval_term(rep, sequent.lhs)
    rhs = eval_term(rep, sequent.rhs)
    pair = lhs.first_violation(rhs)
    if pair is None:
        return SequentVerdict(sequent.name, True, None)
    i, j = pair
    return SequentVerdict(sequent.name, False, (rep.states[i], rep.states[j]))


@dataclass(frozen=True)
class TheoryReport:
    verdicts: tuple[SequentVerdict, ...]

    @property
    def all_passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def failures(self) -> tuple[SequentVerdict, ...]:
        return tuple(v for v in self.verdicts if not v.passed)

    def to_text(self) -> str:
        lines = [v.to_text() for v in self.verdicts]
        passed = sum(v.passed for v in self.verdicts)
        lines.append(f"{passed}/{len(self.verdicts)} axioms PASS")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "total": len(self.verdicts),
            "passed": sum(v.passed for v in self.verdicts),
            "all_pass": self.all_passed,
            "verdicts": [v.to_json_dict() for v in self.verdicts],
        }


def check_theory(rep: RelRep, axioms: Iterable[Sequent]) -> TheoryReport:
    return TheoryReport(tuple(check_sequent(rep, s) for s in axioms))


def _require_model(rep: RelRep) -> None:
    report = check_theory(rep, instantiate_pent(rep.trunc_level))
    if not report.all_passed:
        first = report.failures[0]
        raise NotAModelError(
            f"representation violates axiom {first.name} at witness {first.witness}"
        )


# ---------------------------------------------------------------------------
# The sequence map
# ---------------------------------------------------------------------------


def seq_of_state(rep: RelRep, label: str) -> TruncSeq:
    """The truncated sequence read off the diagonal transitions of a state.

    Bit n is 0 when the state loops on the level-n L generator and 1 when
    it loops on the S generator; exactly one must hold at every level in
    a model, and the result must be admissible.
    """
    x = rep.state_index(label)
    bits = []
    for n in range(rep.trunc_level):
        on_l = (x, x) in rep.gen_map[(n, "L")]
        on_s = (x, x) in rep.gen_map[(n, "S")]
        if on_l == on_s:
            which = "both" if on_l else "neither"
            raise NotAModelError(
                f"state {label!r} has {which} diagonal transitions at level {n}"
            )
        bits.append(1 if on_s else 0)
    for i in range(len(bits) - 1):
        if bits[i] == 1 and bits[i + 1] == 1:
            raise NotAModelError(
                f"state {label!r} yields an inadmissible sequence at level {i}"
            )
    return TruncSeq(tuple(bits))


def seq_table(rep: RelRep) -> dict[str, TruncSeq]:
    return {label: seq_of_state(rep, label) for label in rep.states}


# ---------------------------------------------------------------------------
# Induced representations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SigmaSpec:
    """A partitioned state set with a sequence label for every state.

    Every block's image under ``sigma`` must be the whole truncated
    class (all admissible sequences of the common length); fibers may
    have any multiplicity.
    """

    states: tuple[str, ...]
    blocks: tuple[tuple[str, ...], ...]
    sigma: Mapping[str, TruncSeq]

    def __post_init__(self):
        if not self.states:
            raise ValueError("a sigma specification needs at least one state")
        if len(set(self.states)) != len(self.states):
            raise ValueError("state labels must be distinct")
        flat = [s for block in self.blocks for s in block]
        if sorted(flat) != sorted(self.states):
            raise ValueError("blocks must partition the state set")
        if set(self.sigma) != set(self.states):
            raise ValueError("sigma must be defined on exactly the states")
        lengths = {len(self.sigma[s]) for s in self.states}
        if len(lengths) != 1:
            raise ValueError(f"sequences of mixed lengths: {sorted(lengths)}")

    @property
    def trunc_level(self) -> int:
        return len(self.sigma[self.states[0]])


def induced_from_sigma(spec: SigmaSpec) -> RelRep:
    """The representation induced by a sequence labelling.

    The level-n generator for tile X relates (x, y) exactly when x and y
    lie in a common block, bit n of sigma(y) matches X, and sigma(x) and
    sigma(y) agree strictly above n.  Each block must surject onto the
    full truncated class; otherwise the completeness axioms would fail,
    and the construction refuses with the first missing sequence.
    """
    L = spec.trunc_level
    full_class = {s.bits for s in enumerate_seqs(L)}
    for b, block in enumerate(spec.blocks):
        image = {spec.sigma[s].bits for s in block}
        missing = sorted(full_class - image)
        if missing:
            text = "".join(map(str, missing[0]))
            raise NotSaturatedError(f"block {b} has no state with sequence {text}")

    n = len(spec.states)
    index = {label: i for i, label in enumerate(spec.states)}
    same_block = np.zeros((n, n), dtype=bool)
    for block in spec.blocks:
        idx = [index[s] for s in block]
        same_block[np.ix_(idx, idx)] = True

    seq_matrix = np.array(
        [[spec.sigma[label][k] for k in range(L)] for label in spec.states], dtype=np.int8
    ).reshape(n, L)

    # agree_above[k][x, y] iff the sequences of x and y agree at all m > k
    agree_above: list[np.ndarray] = [np.empty(0)] * L
    running = np.ones((n, n), dtype=bool)
    for k in reversed(range(L)):
        agree_above[k] = running
        running = running & (seq_matrix[:, k][:, None] == seq_matrix[:, k][None, :])

    gen_map: dict[tuple[int, str], Relation] = {}
    for k in range(L):
        for tile in TILES:
            target = seq_matrix[:, k] == bit_of_tile(tile)
            gen_map[(k, tile)] = Relation(n, same_block & agree_above[k] & target[None, :])
    return RelRep(spec.states, L, gen_map)


def cantor_rep(level: int) -> RelRep:
    """The Cantor representation at a truncation: one state per sequence."""
    seqs = enumerate_seqs(level)
    labels = tuple(str(s) for s in seqs)
    spec = SigmaSpec(labels, (labels,), {str(s): s for s in seqs})
    return induced_from_sigma(spec)


# ---------------------------------------------------------------------------
# Sums and decomposition
# ---------------------------------------------------------------------------


def sum_reps(reps: list[RelRep], trunc_level: int | None = None) -> RelRep:
    """Block-diagonal sum on the disjoint union of the state sets.

    States of the i-th summand are relabelled ``i:<label>``.  The empty
    sum is the empty representation (at ``trunc_level``, default 0).
    """
    if not reps:
        L = 0 if trunc_level is None else trunc_level
        return RelRep((), L, {(n, t): Relation.empty(0) for n in range(L) for t in TILES})
    L = reps[0].trunc_level
    if trunc_level is not None and trunc_level != L:
        raise ValueError(f"truncation level mismatch: {trunc_level} != {L}")
    for r in reps:
        if r.trunc_level != L:
            raise ValueError(
                f"truncation level mismatch: {r.trunc_level} != {L}"
            )
    labels = tuple(f"{i}:{s}" for i, r in enumerate(reps) for s in r.states)
    total = len(labels)
    gen_map: dict[tuple[int, str], Relation] = {}
    for n in range(L):
        for tile in TILES:
            bits = np.zeros((total, total), dtype=bool)
            offset = 0
            for r in reps:
                size = r.size
                bits[offset : offset + size, offset : offset + size] = r.gen_map[
                    (n, tile)
                ].bits
                offset += size
            gen_map[(n, tile)] = Relation(total, bits)
    return RelRep(labels, L, gen_map)


def restrict_rep(rep: RelRep, indices: list[int]) -> RelRep:
    """The representation restricted to a subset of states."""
    sub = np.array(indices, dtype=int)
    labels = tuple(rep.states[i] for i in indices)
    gen_map = {
        key: Relation(len(indices), rel.bits[np.ix_(sub, sub)])
        for key, rel in rep.gen_map.items()
    }
    return RelRep(labels, rep.trunc_level, gen_map)


def decompose(rep: RelRep) -> tuple[list[RelRep], list[list[str]]]:
    """Split into the irreducible components given by the blocks of ``top``.

    Returns the component representations and the state partition, both
    ordered by least state index.
    """
    if rep.size == 0:
        return [], []
    blocks = connected_components(top_relation(rep))
    components = [restrict_rep(rep, block) for block in blocks]
    partition = [[rep.states[i] for i in block] for block in blocks]
    return components, partition


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationReport:
    """Connectivity, determinism and the derived classification.

    ``fallback_word_bound`` records the word-length bound of the
    exhaustive search when the single constructive word did not settle
    determinism on its own.
    """

    connected: bool
    components: tuple[tuple[str, ...], ...]
    deterministic: bool
    algebraically_irreducible: bool
    seq_injective_per_component: bool
    nondeterminism_witness: tuple[str, str] | None
    seq_collision_witness: tuple[str, str] | None
    fallback_word_bound: int | None

    def to_text(self) -> str:
        lines = [
            f"connected: {self.connected}",
            f"components: {len(self.components)}",
            f"deterministic: {self.deterministic}",
            f"algebraically irreducible: {self.algebraically_irreducible}",
        ]
        if self.nondeterminism_witness:
            x, y = self.nondeterminism_witness
            lines.append(f"no word maps {{{x}}} onto {{{y}}}")
        if self.seq_collision_witness:
            x, y = self.seq_collision_witness
            lines.append(f"states {x} and {y} share a sequence")
        if self.fallback_word_bound is not None:
            lines.append(f"word search bound: {self.fallback_word_bound}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "connected": self.connected,
            "components": [list(c) for c in self.components],
            "deterministic": self.deterministic,
            "algebraically_irreducible": self.algebraically_irreducible,
            "seq_injective_per_component": self.seq_injective_per_component,
            "nondeterminism_witness": list(self.nondeterminism_witness)
            if self.nondeterminism_witness
            else None,
            "seq_collision_witness": list(self.seq_collision_witness)
            if self.seq_collision_witness
            else None,
            "fallback_word_bound": self.fallback_word_bound,
        }


def _word_relation_for_target(rep: RelRep, target: TruncSeq) -> Relation:
    """Evaluate <L-1 X_{L-1}; ...; 0 X_0| with tiles matching the target."""
    L = rep.trunc_level
    result = Relation.identity(rep.size)
    for n in reversed(range(L)):
        result = result.compose(rep.gen_map[(n, TILES[target[n]])])
    return result


def _word_search(rep: RelRep, start: int, goal: int, bound: int) -> bool:
    """Breadth-first search for a generator word with {start}.a = {goal}."""
    letters = []
    for key in sorted(rep.gen_map):
        bits = rep.gen_map[key].bits
        letters.append([_row_mask(bits, i) for i in range(rep.size)])
        bits_t = bits.T
        letters.append([_row_mask(bits_t, i) for i in range(rep.size)])
    target = 1 << goal
    frontier = {1 << start}
    seen = set(frontier)
    if target in frontier:
        return True
    for _ in range(bound):
        next_frontier = set()
        for mask in frontier:
            for rows in letters:
                image = 0
                m = mask
                while m:
                    low = m & -m
                    image |= rows[low.bit_length() - 1]
                    m ^= low
                if image and image not in seen:
                    if image == target:
                        return True
                    seen.add(image)
                    next_frontier.add(image)
        if not next_frontier:
            return False
        frontier = next_frontier
    return False


def _row_mask(bits: np.ndarray, i: int) -> int:
    mask = 0
    for j in np.nonzero(bits[i])[0]:
        mask |= 1 << int(j)
    return mask


def classify(rep: RelRep) -> ClassificationReport:
    """Classify a model: connected / deterministic / algebraically irreducible.

    Determinism is decided constructively: for a connected pair (x, y)
    the full-depth forward word whose tiles spell the sequence of y maps
    {x} onto the set of states sharing that sequence, so it equals {y}
    exactly when no other state shadows y; pairs the word does not settle
    fall back to a bounded breadth-first search over generator words.
    The verdict is cross-checked against per-component injectivity of
    the sequence map, and a disagreement raises.

    The empty representation has no component and is reported as neither
    connected nor algebraically irreducible.
    """
    _require_model(rep)
    n = rep.size
    top = top_relation(rep)
    connected = n > 0 and top == Relation.full(n)
    blocks = connected_components(top) if n else []
    components = tuple(tuple(rep.states[i] for i in block) for block in blocks)

    seqs = [seq_of_state(rep, label) for label in rep.states]

    collision: tuple[str, str] | None = None
    injective = True
    for block in blocks:
        seen: dict[TruncSeq, int] = {}
        for i in block:
            if seqs[i] in seen and collision is None:
                injective = False
                collision = (rep.states[seen[seqs[i]]], rep.states[i])
            seen.setdefault(seqs[i], i)

    deterministic = True
    nondet_witness: tuple[str, str] | None = None
    fallback_bound: int | None = None
    word_cache: dict[TruncSeq, Relation] = {}
    for block in blocks:
        for x in block:
            if not deterministic:
                break
            for y in block:
                if x == y:
                    continue  # the unit word settles the diagonal
                if seqs[y] not in word_cache:
                    word_cache[seqs[y]] = _word_relation_for_target(rep, seqs[y])
                row = word_cache[seqs[y]].bits[x]
                if row[y] and row.sum() == 1:
                    continue
                fallback_bound = rep.trunc_level
                if not _word_search(rep, x, y, fallback_bound):
                    deterministic = False
                    nondet_witness = (rep.states[x], rep.states[y])
                    break
        if not deterministic:
            break

    if deterministic != injective:
        raise RuntimeError(
            "internal consistency error: constructive determinism "
            f"({deterministic}) disagrees with sequence injectivity ({injective})"
        )

    return ClassificationReport(
        connected=connected,
        components=components,
        deterministic=deterministic,
        algebraically_irreducible=connected and deterministic,
        seq_injective_per_component=injective,
        nondeterminism_witness=nondet_witness,
        seq_collision_witness=collision,
        fallback_word_bound=fallback_bound,
    )


# ---------------------------------------------------------------------------
# Equivalence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    bijection: dict[str, str] | None


def is_equivalence_bijection(a: RelRep, b: RelRep, mapping: Mapping[str, str]) -> bool:
    """True iff the mapping is a generator-preserving bijection of states."""
    if a.trunc_level != b.trunc_level or a.size != b.size:
        return False
    if set(mapping) != set(a.states) or set(mapping.values()) != set(b.states):
        return False
    perm = np.array([b.state_index(mapping[s]) for s in a.states], dtype=int)
    for key, rel in a.gen_map.items():
        if not np.array_equal(rel.bits, b.gen_map[key].bits[np.ix_(perm, perm)]):
            return False
    return True


def _match_components(ca: RelRep, cb: RelRep) -> dict[str, str] | None:
    """A generator-preserving bijection between two irreducible models."""
    if ca.size != cb.size:
        return None
    seq_a = seq_table(ca)
    seq_b = seq_table(cb)
    fibers_b: dict[TruncSeq, list[str]] = {}
    for label in cb.states:
        fibers_b.setdefault(seq_b[label], []).append(label)
    fibers_a: dict[TruncSeq, list[str]] = {}
    for label in ca.states:
        fibers_a.setdefault(seq_a[label], []).append(label)
    if {s: len(v) for s, v in fibers_a.items()} != {s: len(v) for s, v in fibers_b.items()}:
        return None

    if all(len(v) == 1 for v in fibers_a.values()):
        # deterministic: the bijection is forced through the sequence map
        mapping = {label: fibers_b[seq_a[label]][0] for label in ca.states}
        return mapping if is_equivalence_bijection(ca, cb, mapping) else None

    if ca.size > 8:
        raise UnsupportedError(
            "equivalence search for non-deterministic components is limited "
            f"to 8 states; component has {ca.size}"
        )
    keys = sorted(fibers_a, key=lambda s: s.bits)
    pools = [itertools.permutations(fibers_b[k]) for k in keys]
    for arrangement in itertools.product(*pools):
        mapping = {}
        for key, perm in zip(keys, arrangement):
            mapping.update(dict(zip(fibers_a[key], perm)))
        if is_equivalence_bijection(ca, cb, mapping):
            return mapping
    return None


def are_equivalent(a: RelRep, b: RelRep) -> EquivalenceResult:
    """Decide equivalence by matching irreducible components one-to-one.

    Representations at different truncation levels are inequivalent.
    Non-deterministic components are matched by exhaustive search over
    sequence-respecting bijections, which is capped at 8 states per
    component.
    """
    if a.trunc_level != b.trunc_level:
        return EquivalenceResult(False, None)
    _require_model(a)
    _require_model(b)
    comps_a, _ = decompose(a)
    comps_b, _ = decompose(b)
    if len(comps_a) != len(comps_b):
        return EquivalenceResult(False, None)
    unused = list(range(len(comps_b)))
    bijection: dict[str, str] = {}
    for ca in comps_a:
        for j in list(unused):
            mapping = _match_components(ca, comps_b[j])
            if mapping is not None:
                bijection.update(mapping)
                unused.remove(j)
                break
        else:
            return EquivalenceResult(False, None)
    return EquivalenceResult(True, bijection)


# ---------------------------------------------------------------------------
# The sequence map as a module homomorphism
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModuleHomVerdict:
    passed: bool
    witness: tuple[str, str] | None  # (state, generator text)

    def to_text(self) -> str:
        if self.passed:
            return "sequence map commutes with every generator action: PASS"
        x, g = self.witness
        return f"FAIL at state {x} under {g}"

    def to_json_dict(self) -> dict:
        return {
            "pass": self.passed,
            "witness": list(self.witness) if self.witness else None,
        }


def seq_module_hom_check(rep: RelRep) -> ModuleHomVerdict:
    """Check Seq({x}.a) = Seq({x}).a against the Cantor representation.

    For every state and every generator letter (forward and backward),
    the sequences of the successors in ``rep`` must equal the successors
    of the state's own sequence in the Cantor representation at the same
    truncation.
    """
    _require_model(rep)
    L = rep.trunc_level
    cantor = cantor_rep(L)
    cantor_index = {label: i for i, label in enumerate(cantor.states)}
    seqs = [str(seq_of_state(rep, label)) for label in rep.states]
    for n, tile, dag in rep.generator_letters():
        rel = rep.relation(n, tile, dag)
        crel = cantor.relation(n, tile, dag)
        for x in range(rep.size):
            image = {seqs[y] for y in np.nonzero(rel.bits[x])[0]}
            cantor_image = {
                cantor.states[z]
                for z in np.nonzero(crel.bits[cantor_index[seqs[x]]])[0]
            }
            if image != cantor_image:
                letter = print_term(Gen(Generator(n, tile, dag)))
                return ModuleHomVerdict(False, (rep.states[x], letter))
    return ModuleHomVerdict(True, None)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def rep_to_json_dict(rep: RelRep) -> dict:
    """The representation file format: forward generators as pair lists."""
    return {
        "trunc_level": rep.trunc_level,
        "states": list(rep.states),
        "generators": {
            f"W:{n}:{tile}": [list(p) for p in rep.gen_map[(n, tile)].pairs()]
            for n in range(rep.trunc_level)
            for tile in TILES
        },
    }


def rep_to_json(rep: RelRep) -> str:
    return json.dumps(rep_to_json_dict(rep), indent=2, sort_keys=True) + "\n"


def rep_from_json_dict(data: dict) -> RelRep:
    if not isinstance(data, dict):
        raise ValueError("representation file must be a JSON object")
    try:
        level = data["trunc_level"]
        states = data["states"]
        generators = data["generators"]
    except KeyError as exc:
        raise ValueError(f"representation file missing key {exc}") from None
    if not isinstance(level, int) or level < 0:
        raise ValueError(f"bad trunc_level: {level!r}")
    if not isinstance(states, list) or not all(isinstance(s, str) for s in states):
        raise ValueError("states must be a list of strings")
    n = len(states)
    expected = {f"W:{k}:{tile}" for k in range(level) for tile in TILES}
    if set(generators) != expected:
        raise ValueError(
            f"generator keys {sorted(generators)} do not match truncation level {level}"
        )
    gen_map: dict[tuple[int, str], Relation] = {}
    for key, pairs in generators.items():
        _, num, tile = key.split(":")
        try:
            gen_map[(int(num), tile)] = Relation.from_pairs(
                n, [(int(i), int(j)) for i, j in pairs]
            )
        except (TypeError, ValueError) as exc:
            raise ValueError(f"bad pair list for {key}: {exc}") from None
    return RelRep(tuple(states), level, gen_map)


def rep_from_json(text: str) -> RelRep:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    return rep_from_json_dict(data)
