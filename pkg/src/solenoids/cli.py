"""Command-line front end.

Every line written to stdout is a JSON document (see ``schemas.OUTPUT``);
diagnostics go to stderr. Exit status is 0 for any computed result and 2
for any input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify import (
    adic_surfaces_return_equivalent,
    classify_adic_surfaces,
    classify_vietoris,
    generate_counterexample,
)
from .odometer import ClopenSet, TruncatedTower, add_one
from .presentation import PresentationError, dump_presentation, load_presentation
from .pseudogroup import RestrictedAction, is_collapsible, isotropy, translates_partition
from .supernatural import BondingSequence, characteristic
from .toral import (
    DimensionMismatch,
    kernel_lattice_at_depth,
    lattice_invariants,
    quotient_invariants,
    strictly_shrinking,
    toral_consistency,
)

EXIT_OK = 0
EXIT_INPUT = 2


class InputError(ValueError):
    pass


class KindMismatch(InputError):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(record) -> None:
    print(json.dumps(record, sort_keys=False))


def _sequence(args) -> BondingSequence:
    return BondingSequence(tuple(args.prefix), tuple(args.period))


def cmd_classify(args) -> int:
    a, b = load_presentation(args.first), load_presentation(args.second)
    if a.kind != b.kind:
        raise KindMismatch(f"cannot compare kind {a.kind!r} with kind {b.kind!r}")
    if a.kind == "toral" and a.dimension != b.dimension:
        raise KindMismatch(f"toral chains have dimensions {a.dimension} and {b.dimension}")
    record = {"command": "classify", "kind": a.kind}
    if a.kind == "vietoris":
        record.update(classify_vietoris(a.value, b.value).to_record())
    elif a.kind == "adic-surface":
        record.update(classify_adic_surfaces(a.value, b.value).to_record())
        record["return_equivalent"] = adic_surfaces_return_equivalent(a.value, b.value)
    else:
        record.update(toral_consistency(a.value, b.value, args.depth).to_record())
    _emit(record)
    return EXIT_OK


def cmd_odometer(args) -> int:
    tower = TruncatedTower(_sequence(args), args.depth)
    if not 0 <= args.start < tower.order:
        raise InputError(f"--start {args.start} outside [0, {tower.order})")
    if args.steps < 0:
        raise InputError("--steps must be >= 0")
    p = tower.point(args.start)
    for _ in range(args.steps):
        p = add_one(p)
        _emit(p.residue)
    return EXIT_OK


def cmd_collapsible(args) -> int:
    depth = args.depth if args.depth is not None else max(args.level, 1)
    if args.level > depth:
        raise InputError(f"--level {args.level} exceeds --depth {depth}")
    tower = TruncatedTower(_sequence(args), depth)
    M = tower.modulus(args.level)
    try:
        residues = range(M) if args.set == "all" else _int_list(args.set)
    except argparse.ArgumentTypeError as e:
        raise InputError(f"--set: {e}") from None
    if not residues:
        raise InputError("--set must name at least one residue")
    bad = [r for r in residues if not 0 <= r < M]
    if bad:
        raise InputError(f"residues {bad} outside [0, {M}) at level {args.level}")
    w = ClopenSet(tower, args.level, frozenset(residues))
    action = RestrictedAction(tower, w)
    record = {
        "command": "collapsible",
        "modulus": M,
        "level": args.level,
        "set": w.sorted(),
        "collapsible": is_collapsible(action),
    }
    if record["collapsible"]:
        iso = isotropy(action)
        record["index"] = iso.index
        record["generator"] = iso.generator
        record["partition"] = [sorted(u.residues_at(args.level)) for u in translates_partition(action)]
    _emit(record)
    return EXIT_OK


def cmd_counterexample(args) -> int:
    if args.genus < 2:
        raise InputError(f"--genus must be >= 2, got {args.genus}")
    A, B = generate_counterexample(args.genus, _sequence(args))
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = [out / f"{args.stem}_m.json", out / f"{args.stem}_n.json"]
    dump_presentation(A, files[0])
    dump_presentation(B, files[1])
    verdict = classify_adic_surfaces(A, B)
    _emit(
        {
            "command": "counterexample",
            "genus": args.genus,
            "p1": B.seq.prefix[0],
            "files": [str(f) for f in files],
            "return_equivalent": adic_surfaces_return_equivalent(A, B),
            "homeomorphic": verdict.homeomorphic,
            "theorem": verdict.theorem,
        }
    )
    return EXIT_OK


def cmd_invariants(args) -> int:
    pres = load_presentation(args.file)
    record = {"command": "invariants", "kind": pres.kind}
    if pres.kind == "toral":
        chain = pres.value
        kernel = kernel_lattice_at_depth(chain, args.depth)
        lat = lattice_invariants(kernel)
        record.update(
            depth=args.depth,
            invariant_factors=[list(f) for f in quotient_invariants(chain, args.depth)],
            kernel_hnf=[list(row) for row in kernel],
            rank=lat.rank,
            torsion_rank=lat.torsion_rank,
            strictly_shrinking=strictly_shrinking(chain),
        )
    else:
        seq = pres.value if pres.kind == "vietoris" else pres.value.seq
        if pres.kind == "adic-surface":
            record["genus"] = pres.value.genus
        c = characteristic(seq)
        record.update(
            finite_part={str(p): e for p, e in c.finite_part.items()},
            infinite_primes=sorted(c.infinite_primes),
        )
    _emit(record)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solenoids",
        description="Invariants and homeomorphism verdicts for solenoids and adic surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def seq_flags(p):
        p.add_argument("--prefix", type=_int_list, default=[], help="comma-separated prefix degrees")
        p.add_argument("--period", type=_int_list, required=True, help="comma-separated period degrees")

    p = sub.add_parser("classify", help="decide whether two presentations are homeomorphic")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--depth", type=int, default=6, help="screening depth for toral chains")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("odometer", help="iterate the adding machine on a truncated fiber")
    seq_flags(p)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--steps", type=int, default=1)
    p.set_defaults(func=cmd_odometer)

    p = sub.add_parser("collapsible", help="test whether a clopen window is collapsible")
    seq_flags(p)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--set", required=True, help="comma-separated residues mod M_level, or 'all'")
    p.add_argument("--depth", type=int, default=None, help="tower depth (defaults to the level)")
    p.set_defaults(func=cmd_collapsible)

    p = sub.add_parser("counterexample", help="return-equivalent but non-homeomorphic adic surfaces")
    seq_flags(p)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--out-dir", default=".")
    p.add_argument("--stem", default="adic_surface")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("invariants", help="list the invariants of one presentation")
    p.add_argument("file")
    p.add_argument("--depth", type=int, default=3, help="depth for toral chains")
    p.set_defaults(func=cmd_invariants)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, PresentationError, DimensionMismatch, ValueError) as e:
        kind = type(e).__name__
        print(f"solenoids {args.command}: {kind}: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
