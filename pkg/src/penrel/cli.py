"""Command-line surface.

One verb per construct: sequence enumeration, theory printing,
representation building / checking / classification / decomposition /
comparison, and tiling inflation / rendering / matching.  Exit codes:
0 for success or PASS, 1 for a FAIL verdict (witnesses printed), 2 for
usage or input errors.  Identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import reptheory, seqspace, theory, tiling


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_rep(path: str) -> reptheory.RelRep:
    with open(path, "r", encoding="utf-8") as fh:
        return reptheory.rep_from_json(fh.read())


def _load_sigma_spec(path: str) -> reptheory.SigmaSpec:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        states = tuple(data["states"])
        blocks = tuple(tuple(block) for block in data["blocks"])
        sigma = {
            label: seqspace.TruncSeq.from_string(bits)
            for label, bits in data["sigma"].items()
        }
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"malformed sigma specification: {exc}") from None
    return reptheory.SigmaSpec(states, blocks, sigma)


def _json_text(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# sequences
# ---------------------------------------------------------------------------


def cmd_sequences_enumerate(args) -> int:
    for s in seqspace.enumerate_seqs(args.level):
        print(str(s))
    return 0


def cmd_sequences_count(args) -> int:
    print(len(seqspace.enumerate_seqs(args.level)))
    return 0


# ---------------------------------------------------------------------------
# theory
# ---------------------------------------------------------------------------


def cmd_theory_print(args) -> int:
    axioms = (
        theory.instantiate_pens(args.max_level)
        if args.pens
        else theory.instantiate_pent(args.max_level)
    )
    if args.json:
        data = {
            "theory": "pens" if args.pens else "pent",
            "max_level": args.max_level,
            "axioms": [
                {"name": s.name, "lhs": s.lhs_text(), "rhs": s.rhs_text()}
                for s in axioms
            ],
        }
        _write(args.out, _json_text(data))
        return 0
    lines = [f"{s.name} : {s}" for s in axioms]
    _write(args.out, "\n".join(lines) + ("\n" if lines else ""))
    return 0


# ---------------------------------------------------------------------------
# rep
# ---------------------------------------------------------------------------


def cmd_rep_cantor(args) -> int:
    rep = reptheory.cantor_rep(args.level)
    _write(args.out, reptheory.rep_to_json(rep))
    return 0


def cmd_rep_induced(args) -> int:
    spec = _load_sigma_spec(args.file)
    rep = reptheory.induced_from_sigma(spec)
    _write(args.out, reptheory.rep_to_json(rep))
    return 0


def cmd_rep_sum(args) -> int:
    reps = [_load_rep(path) for path in args.file]
    rep = reptheory.sum_reps(reps)
    _write(args.out, reptheory.rep_to_json(rep))
    return 0


def cmd_rep_check(args) -> int:
    rep = _load_rep(args.file)
    axioms = (
        theory.instantiate_pens(rep.trunc_level)
        if args.pens
        else theory.instantiate_pent(rep.trunc_level)
    )
    report = reptheory.check_theory(rep, axioms)
    if args.json:
        _write(args.out, _json_text(report.to_json_dict()))
    else:
        lines = [v.to_text() for v in report.failures]
        if report.all_passed:
            lines.append(f"all axioms PASS ({len(report.verdicts)} checked)")
        else:
            lines.append(
                f"{len(report.failures)}/{len(report.verdicts)} axioms FAIL"
            )
        _write(args.out, "\n".join(lines) + "\n")
    return 0 if report.all_passed else 1


def cmd_rep_classify(args) -> int:
    rep = _load_rep(args.file)
    report = reptheory.classify(rep)
    if args.json:
        _write(args.out, _json_text(report.to_json_dict()))
    else:
        _write(args.out, report.to_text() + "\n")
    return 0


def cmd_rep_decompose(args) -> int:
    rep = _load_rep(args.file)
    components, partition = reptheory.decompose(rep)
    if args.json:
        data = {
            "component_count": len(components),
            "partition": partition,
            "components": [reptheory.rep_to_json_dict(c) for c in components],
        }
        _write(args.out, _json_text(data))
    else:
        lines = [f"{len(components)} component(s)"]
        for i, block in enumerate(partition):
            lines.append(f"component {i}: " + " ".join(block))
        _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_rep_compare(args) -> int:
    if len(args.file) != 2:
        raise ValueError("compare needs --file given exactly twice")
    rep_a = _load_rep(args.file[0])
    rep_b = _load_rep(args.file[1])
    result = reptheory.are_equivalent(rep_a, rep_b)
    if args.json:
        data = {
            "equivalent": result.equivalent,
            "bijection": result.bijection,
        }
        _write(args.out, _json_text(data))
    elif result.equivalent:
        lines = ["equivalent"]
        for key in sorted(result.bijection):
            lines.append(f"{key} -> {result.bijection[key]}")
        _write(args.out, "\n".join(lines) + "\n")
    else:
        _write(args.out, "not equivalent\n")
    return 0 if result.equivalent else 1


def cmd_rep_seq(args) -> int:
    rep = _load_rep(args.file)
    table = reptheory.seq_table(rep)
    if args.json:
        _write(args.out, _json_text({label: str(s) for label, s in table.items()}))
    else:
        lines = [f"{label} : {table[label]}" for label in rep.states]
        _write(args.out, "\n".join(lines) + ("\n" if lines else ""))
    return 0


def cmd_rep_modhom(args) -> int:
    rep = _load_rep(args.file)
    verdict = reptheory.seq_module_hom_check(rep)
    if args.json:
        _write(args.out, _json_text(verdict.to_json_dict()))
    else:
        _write(args.out, verdict.to_text() + "\n")
    return 0 if verdict.passed else 1


# ---------------------------------------------------------------------------
# tiling
# ---------------------------------------------------------------------------


def cmd_tiling_inflate(args) -> int:
    tree = tiling.inflate(args.root, args.order)
    rows = []
    for leaf in tree.leaves:
        address = tiling.leaf_address(tree, leaf)
        if tree.root.type == "L":
            rows.append((address, str(tiling.leaf_to_seq(tree, leaf))))
        else:
            rows.append((address, None))
    if args.json:
        data = {
            "root": tree.root.type,
            "order": tree.order,
            "leaf_count": len(tree.leaves),
            "leaves": [
                {"address": addr, "sequence": seq} for addr, seq in rows
            ],
        }
        _write(args.out, _json_text(data))
    else:
        lines = [f"{len(tree.leaves)} leaves at order {tree.order} (root {tree.root.type})"]
        for addr, seq in rows:
            lines.append(f"{addr} {seq}" if seq is not None else addr)
        _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_tiling_svg(args) -> int:
    tree = tiling.inflate(args.root, args.order)
    options = tiling.SvgOptions(
        vertex_colors=args.vertex_colors,
        arrows=args.arrows,
        outline_level=args.outline_level,
        fill_large=args.fill_large,
        fill_small=args.fill_small,
        stroke=args.stroke,
    )
    if options.outline_level is not None and options.outline_level > args.order:
        raise ValueError(
            f"outline level {options.outline_level} exceeds order {args.order}"
        )
    _write(args.out, tiling.render_svg(tree, options))
    return 0


def cmd_tiling_rep(args) -> int:
    tree = tiling.inflate("L", args.order)
    rep = tiling.geometric_rep(tree)
    _write(args.out, reptheory.rep_to_json(rep))
    return 0


def cmd_tiling_match(args) -> int:
    tree = tiling.inflate(args.root, args.order)
    verdict = tiling.matching_check(tree, tolerance=args.tolerance)
    if args.json:
        _write(
            args.out,
            _json_text({"pass": verdict.passed, "detail": verdict.detail}),
        )
    else:
        _write(args.out, verdict.to_text() + "\n")
    return 0 if verdict.passed else 1


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------


def _add_json_out(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--out", metavar="PATH", help="write output to a file")


def _add_theory_choice(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--pent", action="store_true", help="the tiling theory (default)"
    )
    group.add_argument("--pens", action="store_true", help="the sequence theory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="penrel",
        description="Finite relational models of the Penrose tiling theories.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed for randomized suites (reserved; all verbs are deterministic)",
    )
    top = parser.add_subparsers(dest="group", required=True)

    seq = top.add_parser("sequences", help="truncated Penrose sequences")
    seq_sub = seq.add_subparsers(dest="verb", required=True)
    p = seq_sub.add_parser("enumerate", help="list all admissible sequences")
    p.add_argument("--level", "-L", type=int, required=True)
    p.set_defaults(func=cmd_sequences_enumerate)
    p = seq_sub.add_parser("count", help="count admissible sequences")
    p.add_argument("--level", "-L", type=int, required=True)
    p.set_defaults(func=cmd_sequences_count)

    thy = top.add_parser("theory", help="axiom schemas at a truncation")
    thy_sub = thy.add_subparsers(dest="verb", required=True)
    p = thy_sub.add_parser("print", help="print every instantiated axiom")
    p.add_argument("--max-level", type=int, required=True)
    _add_theory_choice(p)
    _add_json_out(p)
    p.set_defaults(func=cmd_theory_print)

    rep = top.add_parser("rep", help="relational representations")
    rep_sub = rep.add_subparsers(dest="verb", required=True)

    p = rep_sub.add_parser("cantor", help="build the Cantor representation")
    p.add_argument("--level", "-L", type=int, required=True)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_rep_cantor)

    p = rep_sub.add_parser("induced", help="build from a sigma specification")
    p.add_argument("--file", required=True)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_rep_induced)

    p = rep_sub.add_parser("sum", help="block-diagonal sum of representations")
    p.add_argument("--file", action="append", required=True)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_rep_sum)

    p = rep_sub.add_parser("check", help="check every axiom of a theory")
    p.add_argument("--file", required=True)
    _add_theory_choice(p)
    _add_json_out(p)
    p.set_defaults(func=cmd_rep_check)

    p = rep_sub.add_parser("classify", help="connectivity and determinism")
    p.add_argument("--file", required=True)
    _add_json_out(p)
    p.set_defaults(func=cmd_rep_classify)

    p = rep_sub.add_parser("decompose", help="split into irreducible components")
    p.add_argument("--file", required=True)
    _add_json_out(p)
    p.set_defaults(func=cmd_rep_decompose)

    p = rep_sub.add_parser("compare", help="decide equivalence of two representations")
    p.add_argument("--file", action="append", required=True, help="given twice")
    _add_json_out(p)
    p.set_defaults(func=cmd_rep_compare)

    p = rep_sub.add_parser("seq", help="the sequence of every state")
    p.add_argument("--file", required=True)
    _add_json_out(p)
    p.set_defaults(func=cmd_rep_seq)

    p = rep_sub.add_parser("modhom", help="sequence map module-homomorphism check")
    p.add_argument("--file", required=True)
    _add_json_out(p)
    p.set_defaults(func=cmd_rep_modhom)

    til = top.add_parser("tiling", help="Robinson-triangle fragments")
    til_sub = til.add_subparsers(dest="verb", required=True)

    p = til_sub.add_parser("inflate", help="leaf addresses of an inflated fragment")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--root", choices=("L", "S"), default="L")
    _add_json_out(p)
    p.set_defaults(func=cmd_tiling_inflate)

    p = til_sub.add_parser("svg", help="render a fragment as SVG")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--root", choices=("L", "S"), default="L")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--vertex-colors", action="store_true")
    p.add_argument("--arrows", action="store_true")
    p.add_argument("--outline-level", type=int, default=None)
    p.add_argument("--fill-large", default=tiling.SvgOptions.fill_large)
    p.add_argument("--fill-small", default=tiling.SvgOptions.fill_small)
    p.add_argument("--stroke", default=tiling.SvgOptions.stroke)
    p.set_defaults(func=cmd_tiling_svg)

    p = til_sub.add_parser("rep", help="the geometrical representation on the leaves")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_tiling_rep)

    p = til_sub.add_parser("match", help="check the matching rules on a fragment")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--root", choices=("L", "S"), default="L")
    p.add_argument("--tolerance", type=float, default=1e-9)
    _add_json_out(p)
    p.set_defaults(func=cmd_tiling_match)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
