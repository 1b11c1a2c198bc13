"""Command-line interface.

Exit codes: 0 for success (consistent, form holds, equivalent), 1 for a
negative check result (no answer set, form violated, not equivalent),
2 for usage errors, 3 for input errors (unreadable files, syntax
errors, enumeration caps).

The environment variable ``ASPNF_MAX_ATOMS`` overrides the default
answer-set enumeration cap; an explicit ``--max-atoms`` beats both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import AspnfError
from .generate import decode_3col, encode_3col, graph, random_kernel_program
from .kernel import (
    antichain_to_kernel,
    check_kernel,
    equivalent_mod_projection,
    kernelize,
    parse_antichain,
)
from .model import Program
from .normalize import check_3kernel, three_kernelize, trace_to_dict
from .semantics import enumerate_answer_sets, well_founded
from .textio import export_dot, parse_program, render_program, split_atom_list

ENV_MAX_ATOMS = "ASPNF_MAX_ATOMS"


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _read_program(args: argparse.Namespace, attr: str = "file") -> Program:
    allow = getattr(args, "allow_reserved", False)
    return parse_program(_read_text(getattr(args, attr)), allow_reserved=allow)


def _max_atoms(args: argparse.Namespace) -> int | None:
    if getattr(args, "max_atoms", None) is not None:
        return args.max_atoms
    env = os.environ.get(ENV_MAX_ATOMS)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise AspnfError(f"{ENV_MAX_ATOMS} must be an integer, got {env!r}") from exc
    return None


def _format_set(atoms) -> str:
    return ", ".join(sorted(atoms))


def _cmd_parse(args: argparse.Namespace) -> int:
    program = _read_program(args)
    if args.dot:
        print(export_dot(program), end="")
    else:
        print(render_program(program), end="")
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    program = _read_program(args)
    collection = enumerate_answer_sets(program, _max_atoms(args))
    if args.json:
        print(json.dumps([sorted(s) for s in collection]))
    else:
        for answer_set in collection:
            print(_format_set(answer_set))
    return 0 if len(collection) else 1


def _cmd_wfs(args: argparse.Namespace) -> int:
    wfs = well_founded(_read_program(args))
    print(f"true: {_format_set(wfs.true_atoms)}")
    print(f"false: {_format_set(wfs.false_atoms)}")
    print(f"undefined: {_format_set(wfs.undefined_atoms)}")
    return 0


def _cmd_kernel_check(args: argparse.Namespace) -> int:
    report = check_kernel(_read_program(args))
    print(f"kernel form: {'yes' if report.is_kernel else 'no'}")
    for violation in report.violations:
        print(f"  - {violation.condition}: {violation.witness}")
    return 0 if report.is_kernel else 1


def _cmd_3kernel_check(args: argparse.Namespace) -> int:
    report = check_3kernel(_read_program(args))
    print(f"3-kernel form: {'yes' if report.is_3kernel else 'no'}")
    for violation in report.violations:
        print(f"  - condition {violation.condition} ({violation.label}): "
              f"{violation.witness}")
    return 0 if report.is_3kernel else 1


def _cmd_kernelize(args: argparse.Namespace) -> int:
    result, universe = kernelize(_read_program(args), _max_atoms(args))
    print(f"% universe: {_format_set(universe)}")
    print(render_program(result), end="")
    return 0


def _cmd_antichain2kernel(args: argparse.Namespace) -> int:
    antichain = parse_antichain(_read_text(args.file))
    print(render_program(antichain_to_kernel(antichain)), end="")
    return 0


def _cmd_3kernelize(args: argparse.Namespace) -> int:
    result, trace = three_kernelize(_read_program(args))
    print(render_program(result), end="")
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as handle:
            json.dump(trace_to_dict(trace), handle, indent=2)
            handle.write("\n")
    return 0


def _read_graph(path: str):
    nodes: list[int] = []
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(_read_text(path).splitlines(), 1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("nodes:"):
                nodes.extend(int(tok) for tok in line[len("nodes:"):].split())
            elif line.startswith("edge:"):
                u, v = (int(tok) for tok in line[len("edge:"):].split())
                edges.append((u, v))
            else:
                raise AspnfError(f"{path}:{lineno}: unrecognized line {line!r}")
        except ValueError as exc:
            raise AspnfError(f"{path}:{lineno}: {exc}") from exc
    try:
        return graph(nodes, edges)
    except ValueError as exc:
        raise AspnfError(f"{path}: {exc}") from exc


def _cmd_encode_3col(args: argparse.Namespace) -> int:
    print(render_program(encode_3col(_read_graph(args.graphfile))), end="")
    return 0


def _cmd_decode_3col(args: argparse.Namespace) -> int:
    g = _read_graph(args.graphfile)
    for raw in sys.stdin:
        atoms = frozenset(split_atom_list(raw))
        coloring = decode_3col(atoms, g)
        print(" ".join(f"{v}={coloring[v]}" for v in g.nodes))
    return 0


def _cmd_equiv(args: argparse.Namespace) -> int:
    first = _read_program(args, "file1")
    second = _read_program(args, "file2")
    atoms = frozenset(split_atom_list(args.over))
    same = equivalent_mod_projection(first, second, atoms, _max_atoms(args))
    print("equivalent" if same else "not equivalent")
    return 0 if same else 1


def _cmd_gen_kernel(args: argparse.Namespace) -> int:
    program = random_kernel_program(
        args.atoms, args.rules, max_body=args.max_body, seed=args.seed
    )
    print(render_program(program), end="")
    return 0


def _add_allow_reserved(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--allow-reserved",
        action="store_true",
        help="accept '__' atoms (programs produced by the transformations)",
    )


def _add_max_atoms(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--max-atoms", type=int, default=None, help="enumeration cap override"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aspnf",
        description="Normal forms and reference semantics for answer-set programs.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("parse", help="echo the normalized program")
    sub.add_argument("file")
    sub.add_argument("--dot", action="store_true", help="emit DOT instead")
    _add_allow_reserved(sub)
    sub.set_defaults(func=_cmd_parse)

    sub = commands.add_parser("solve", help="enumerate answer sets")
    sub.add_argument("file")
    sub.add_argument("--json", action="store_true")
    _add_max_atoms(sub)
    _add_allow_reserved(sub)
    sub.set_defaults(func=_cmd_solve)

    sub = commands.add_parser("wfs", help="well-founded model")
    sub.add_argument("file")
    _add_allow_reserved(sub)
    sub.set_defaults(func=_cmd_wfs)

    sub = commands.add_parser("kernel-check", help="check kernel form")
    sub.add_argument("file")
    _add_allow_reserved(sub)
    sub.set_defaults(func=_cmd_kernel_check)

    sub = commands.add_parser("3kernel-check", help="check 3-kernel form")
    sub.add_argument("file")
    _add_allow_reserved(sub)
    sub.set_defaults(func=_cmd_3kernel_check)

    sub = commands.add_parser(
        "kernelize", help="equivalent kernel program via enumeration"
    )
    sub.add_argument("file")
    _add_max_atoms(sub)
    sub.set_defaults(func=_cmd_kernelize)

    sub = commands.add_parser(
        "antichain2kernel", help="kernel program for an anti-chain file"
    )
    sub.add_argument("file")
    sub.set_defaults(func=_cmd_antichain2kernel)

    sub = commands.add_parser("3kernelize", help="transform kernel to 3-kernel")
    sub.add_argument("file")
    sub.add_argument("--trace", metavar="OUT.json", help="write the transform trace")
    _add_allow_reserved(sub)
    sub.set_defaults(func=_cmd_3kernelize)

    sub = commands.add_parser("encode-3col", help="3-colorability encoder")
    sub.add_argument("graphfile")
    sub.set_defaults(func=_cmd_encode_3col)

    sub = commands.add_parser(
        "decode-3col", help="decode colorings from answer sets on stdin"
    )
    sub.add_argument("graphfile")
    sub.set_defaults(func=_cmd_decode_3col)

    sub = commands.add_parser("equiv", help="equivalence modulo projection")
    sub.add_argument("file1")
    sub.add_argument("file2")
    sub.add_argument("--over", required=True, help="comma-separated atoms")
    _add_max_atoms(sub)
    _add_allow_reserved(sub)
    sub.set_defaults(func=_cmd_equiv)

    sub = commands.add_parser("gen-kernel", help="random kernel program")
    sub.add_argument("--atoms", type=int, required=True)
    sub.add_argument("--rules", type=int, required=True)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--max-body", type=int, default=3)
    sub.set_defaults(func=_cmd_gen_kernel)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (AspnfError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
