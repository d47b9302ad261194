"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines as they pass.
"""

import itertools
import random
import time

import numpy as np

from penrel.relalg import Relation, connected_components, join
from penrel.seqspace import enumerate_seqs
from penrel.theory import (
    instantiate_pens,
    instantiate_pent,
    parse_term,
    print_term,
)
from penrel.reptheory import (
    RelRep,
    cantor_rep,
    check_theory,
    classify,
    decompose,
    induced_from_sigma,
    is_equivalence_bijection,
    seq_module_hom_check,
    seq_of_state,
    sum_reps,
    top_relation,
)
from penrel.tiling import (
    TileDecoration,
    geometric_rep,
    inflate,
    leaf_address,
    leaf_to_seq,
    matching_check,
)

from helpers import (
    doubled_rep,
    random_sigma_spec,
    seq_bit_matrix,
    tail_agreement_stack,
)


def note(criterion: int, text: str) -> None:
    print(f"[acceptance {criterion}] PASS - {text}")


def test_criterion_1_model_validity():
    started = time.monotonic()
    rep = cantor_rep(8)
    assert rep.size == 55
    axioms = instantiate_pent(8)
    by_prefix = {}
    for s in axioms:
        by_prefix.setdefault(s.name.split("_")[0], []).append(s.name)
    assert len(by_prefix["C1"]) == 8 and len(by_prefix["D1"]) == 8
    assert len(by_prefix["I1"]) == 16 and len(by_prefix["I2"]) == 16
    assert len(by_prefix["C2"]) == 7 and len(by_prefix["D2"]) == 7
    for schema in ("E1", "E2", "E3", "E4"):
        assert len(by_prefix[schema]) == 28  # 7 levels x 4 tile pairs
    assert all(len(name) - 3 <= 8 for name in by_prefix["Cp"])
    report = check_theory(rep, axioms)
    elapsed = time.monotonic() - started
    assert report.all_passed, report.failures[:3]
    assert elapsed < 30.0
    note(1, f"Cantor level 8: {len(axioms)} axioms, 0 failures, {elapsed:.2f}s")


def test_criterion_2_classification_triple():
    cantor = classify(cantor_rep(6))
    assert cantor.connected
    assert cantor.deterministic
    assert cantor.algebraically_irreducible

    rep = doubled_rep(4, copies=2)
    report = classify(rep)
    assert report.connected
    assert not report.algebraically_irreducible
    x, y = report.seq_collision_witness
    assert x != y
    assert seq_of_state(rep, x) == seq_of_state(rep, y)
    note(2, "Cantor level 6 is a point; the doubled model is connected but not")


def test_criterion_3_decomposition():
    parts = [cantor_rep(5), doubled_rep(5), cantor_rep(5)]
    rep = sum_reps(parts)
    components, partition = decompose(rep)
    assert len(components) == 3

    rebuilt = sum_reps(components)
    mapping = {
        f"{i}:{label}": label
        for i, block in enumerate(partition)
        for label in block
    }
    assert is_equivalence_bijection(rebuilt, rep, mapping)

    blocks = connected_components(top_relation(rep))
    assert partition == [[rep.states[i] for i in block] for block in blocks]
    note(3, "triple sum decomposes into 3 components; rebuild is equivalent")


def test_criterion_4_geometry_matches_cantor():
    expected_counts = [2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
    for order, count in zip(range(1, 11), expected_counts):
        tree = inflate("L", order)
        assert len(tree.leaves) == count
        rep = geometric_rep(tree)
        mapping = {
            leaf_address(tree, leaf): str(leaf_to_seq(tree, leaf))
            for leaf in tree.leaves
        }
        assert is_equivalence_bijection(rep, cantor_rep(order), mapping), order
    note(4, "orders 1..10: geometric = Cantor under the leaf bijection")


def _check_dichotomy(rep: RelRep) -> None:
    # the four per-state equivalences, plus small-implies-large-next
    for n in range(rep.trunc_level):
        wl = rep.gen_map[(n, "L")].bits
        ws = rep.gen_map[(n, "S")].bits
        diag_l, diag_s = np.diag(wl), np.diag(ws)
        assert np.array_equal(diag_l, ~diag_s)
        assert np.array_equal(diag_l, wl.any(axis=0))
        assert np.array_equal(diag_s, ws.any(axis=0))
        if n + 1 < rep.trunc_level:
            assert np.all(~diag_s | np.diag(rep.gen_map[(n + 1, "L")].bits))


def _check_transition_biconditional(rep: RelRep) -> None:
    bits = seq_bit_matrix(rep)
    agree = tail_agreement_stack(bits)
    connected = top_relation(rep).bits
    for n in range(rep.trunc_level):
        for tile, bit in (("L", 0), ("S", 1)):
            expected = connected & agree[n] & (bits[:, n] == bit)[None, :]
            assert np.array_equal(rep.gen_map[(n, tile)].bits, expected)


def test_criterion_5_seq_soundness():
    rng = random.Random(90125)
    for _ in range(100):
        spec = random_sigma_spec(rng, max_level=6, max_blocks=3, max_multiplicity=3)
        rep = induced_from_sigma(spec)
        for label in rep.states:
            assert seq_of_state(rep, label) == spec.sigma[label]
        _check_dichotomy(rep)
        _check_transition_biconditional(rep)
    exhaustive = cantor_rep(5)
    _check_dichotomy(exhaustive)
    _check_transition_biconditional(exhaustive)
    note(5, "100 induced models: sequences, dichotomy and transitions agree")


def test_criterion_6_module_homomorphism():
    for level in range(9):
        assert seq_module_hom_check(cantor_rep(level)).passed
    for level in range(1, 7):
        assert seq_module_hom_check(doubled_rep(level)).passed
    for order in range(9):
        assert seq_module_hom_check(geometric_rep(inflate("L", order))).passed
    note(6, "sequence map is a module homomorphism on all fleet models")


def test_criterion_7_theory_transport():
    rng = random.Random(777)
    for level in range(7):
        fleet = [cantor_rep(level)]
        if level >= 1:
            fleet.append(doubled_rep(min(level, 4)))
            full = Relation.full(2)
            fleet.append(
                RelRep(
                    ("x", "y"),
                    1,
                    {(0, "L"): full, (0, "S"): full},
                )
            )
        if 1 <= level <= 4:
            fleet.append(induced_from_sigma(random_sigma_spec(rng, max_level=level)))
        for rep in fleet:
            pent = check_theory(rep, instantiate_pent(rep.trunc_level))
            pens = check_theory(rep, instantiate_pens(rep.trunc_level))
            assert len(pent.verdicts) == len(pens.verdicts)
            for a, b in zip(pent.verdicts, pens.verdicts):
                assert a.name == b.name and a.passed == b.passed
    note(7, "renamed axioms give identical verdicts on the whole fleet")


def test_criterion_8_algebra_laws():
    rng = random.Random(1618)

    def random_relation(size):
        density = rng.random()
        pairs = [
            (i, j)
            for i in range(size)
            for j in range(size)
            if rng.random() < density
        ]
        return Relation.from_pairs(size, pairs)

    for _ in range(1000):
        size = rng.randint(0, 6)
        r, s, t = (random_relation(size) for _ in range(3))
        assert r.compose(s).compose(t) == r.compose(s.compose(t))
        e = Relation.identity(size)
        assert r.compose(e) == r and e.compose(r) == r
        assert r.compose(s).converse() == s.converse().compose(r.converse())
        assert r.converse().converse() == r
        assert join([r, s]).converse() == join([r.converse(), s.converse()])
        assert t.compose(join([r, s])) == join([t.compose(r), t.compose(s)])
        assert join([r, s]).compose(t) == join([r.compose(t), s.compose(t)])
    note(8, "1000 random triples satisfy the quantale laws exactly")


def test_criterion_9_combinatorics():
    for level in range(13):
        brute = [
            bits
            for bits in itertools.product((0, 1), repeat=level)
            if all(not (bits[i] and bits[i + 1]) for i in range(level - 1))
        ]
        assert [s.bits for s in enumerate_seqs(level)] == sorted(brute)
    a, b = 1, 2
    for level in range(1, 21):
        assert len(enumerate_seqs(level)) == b
        a, b = b, a + b
    assert [str(s) for s in enumerate_seqs(3)] == ["000", "001", "010", "100", "101"]
    note(9, "counts match brute force (L<=12) and the recurrence (L<=20)")


def test_criterion_10_matching_rules():
    for order in range(9):
        verdict = matching_check(inflate("L", order))
        assert verdict.passed, (order, verdict.detail)
    tree = inflate("L", 4)
    victim = tree.leaves[3]
    colors = victim.decoration.vertex_colors
    victim.decoration = TileDecoration(
        (colors[2], colors[1], colors[0]), victim.decoration.oriented_edge
    )
    assert not matching_check(tree).passed
    note(10, "matching holds through order 8 and the fault fixture fails")


def test_criterion_11_parser_round_trip():
    corpus = []
    for sequent in instantiate_pent(3):  # every axiom schema shape
        corpus.append(sequent.lhs_text())
        corpus.append(sequent.rhs_text())
    rng = random.Random(424242)
    from test_theory import random_term

    while len(corpus) < 200:
        corpus.append(print_term(random_term(rng)))
    assert len(corpus) >= 200
    for text in corpus:
        term = parse_term(text)
        assert print_term(term) == text  # print after parse restores the text
        assert parse_term(print_term(term)) == term  # parse after print restores
    note(11, f"print/parse identities hold on a {len(corpus)}-term corpus")
