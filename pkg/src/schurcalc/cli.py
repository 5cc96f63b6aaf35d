"""Command line entry point: ``schurcalc VERB [flags]``.

Exit codes: 0 on success, 1 on a usage or input error, 2 when a
verification suite reports counterexamples.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import balmer, characters, lr, partitions, schur_calculus, suites
from .errors import SchurCalcError
from .partitions import format_partition, parse_partition
from .schur_calculus import GradedObject


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


def _partition_arg(text: str) -> partitions.Partition:
    try:
        return parse_partition(text)
    except SchurCalcError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _object_arg(text: str) -> GradedObject:
    try:
        return GradedObject.parse(text)
    except SchurCalcError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition_list(text: str) -> list[partitions.Partition]:
    return [_partition_arg(t) for t in text.split(";") if t.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = _Parser(prog="schurcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("transpose", parents=[common], help="transpose a partition")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)

    p = sub.add_parser("dim", parents=[common], help="dimension of a Specht module")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)

    p = sub.add_parser("char", parents=[common], help="character value or full table")
    p.add_argument("--lambda", dest="lam", type=_partition_arg)
    p.add_argument("--rho", type=_partition_arg)
    p.add_argument("--n", type=int, help="print the whole character table of S_n")

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    p.add_argument("--outer", type=_partition_arg, help="omit to print the full product")
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, required=True)

    p = sub.add_parser("kron", parents=[common], help="Kronecker multiplicity")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, required=True)

    p = sub.add_parser("schur", parents=[common], help="Schur functor of a graded object")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--object", dest="obj", type=_object_arg, required=True)
    p.add_argument("--method", choices=("peel", "tableaux"), default="peel")

    p = sub.add_parser("hook", parents=[common], help="hook vanishing criterion")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--p", type=int, required=True, help="number of even lines")
    p.add_argument("--q", type=int, required=True, help="number of odd lines")

    p = sub.add_parser("rect-lr", parents=[common], help="support of (p)^q times (r)^s")
    for flag in ("--p", "--q", "--r", "--s"):
        p.add_argument(flag, type=int, required=True)

    p = sub.add_parser("primes", parents=[common], help="enumerate prime truncations")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("classify", parents=[common], help="classify an ideal truncation")
    p.add_argument("--ideal", help="IdealTruncation JSON, or @path to a JSON file")
    p.add_argument("--generators", type=_partition_list, help="e.g. '2,1;3'")
    p.add_argument("--max-size", type=int)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(suites.SUITES)} or all")
    p.add_argument("--max-n", type=int)

    return parser


def _cmd_transpose(a) -> tuple[str, Any]:
    t = partitions.transpose(a.lam)
    return format_partition(t), {"lambda": list(a.lam), "transpose": list(t)}


def _cmd_dim(a) -> tuple[str, Any]:
    d = partitions.specht_dim(a.lam)
    return str(d), {"lambda": list(a.lam), "dim": d}


def _cmd_char(a) -> tuple[str, Any]:
    if a.n is not None:
        if a.lam is not None or a.rho is not None:
            raise UsageError("--n cannot be combined with --lambda/--rho")
        if a.n < 1:
            raise UsageError("--n must be positive")
        table = characters.character_table_json(a.n)
        cols = [",".join(map(str, r)) for r in partitions.partitions_of(a.n)]
        lines = ["lambda\\rho\t" + "\t".join(cols)]
        for row in table["rows"]:
            name = ",".join(map(str, row["lambda"]))
            lines.append(name + "\t" + "\t".join(str(row["values"][c]) for c in cols))
        return "\n".join(lines), table
    if a.lam is None or a.rho is None:
        raise UsageError("char needs --lambda and --rho, or --n")
    v = characters.mn_character(a.lam, a.rho)
    return str(v), {"lambda": list(a.lam), "rho": list(a.rho), "value": v}


def _cmd_lr(a) -> tuple[str, Any]:
    if a.outer is None:
        exp = lr.tensor_square_expansion(a.mu, a.nu)
        text = "\n".join(f"{format_partition(k)}\t{m}" for k, m in exp.sorted_items())
        return text, {"mu": list(a.mu), "nu": list(a.nu), "terms": exp.to_json()}
    c = lr.lr_coefficient(a.outer, a.mu, a.nu)
    return str(c), {"lambda": list(a.outer), "mu": list(a.mu), "nu": list(a.nu), "coefficient": c}


def _cmd_kron(a) -> tuple[str, Any]:
    k = characters.kronecker_multiplicity(a.lam, a.mu, a.nu)
    return str(k), {"lambda": list(a.lam), "mu": list(a.mu), "nu": list(a.nu), "multiplicity": k}


def _cmd_schur(a) -> tuple[str, Any]:
    if a.method == "peel":
        y = schur_calculus.schur_of_object(a.lam, a.obj)
    else:
        y = schur_calculus.schur_by_tableaux(a.lam, a.obj)
    return str(y), y.to_json()


def _cmd_hook(a) -> tuple[str, Any]:
    v = schur_calculus.hook_vanishing_test(a.lam, a.p, a.q)
    return str(v).lower(), {"lambda": list(a.lam), "p": a.p, "q": a.q, "vanishes": v}


def _cmd_rect_lr(a) -> tuple[str, Any]:
    support = lr.rectangular_lr_support(a.p, a.q, a.r, a.s)
    return "\n".join(map(format_partition, support)), [list(x) for x in support]


def _cmd_primes(a) -> tuple[str, Any]:
    found = balmer.enumerate_prime_truncations(a.n)
    rows = []
    lines = []
    for s in found:
        c = balmer.classify(s)
        rows.append({"members": [list(m) for m in s.sorted_members()], "classification": c.to_json()})
        if isinstance(c, balmer.PrimeLabel):
            label = f"P({c.p},{c.q})"
        else:
            label = "zero" if isinstance(c, balmer.Zero) else "flagged"
        lines.append(f"{label}\t" + " ".join(format_partition(m) for m in s.sorted_members()))
    flagged = sum(1 for r in rows if r["classification"].get("flagged"))
    lines.append(f"# {len(rows)} prime truncations at N={a.n}, {flagged} flagged")
    return "\n".join(lines), {"n": a.n, "results": rows, "flagged_count": flagged}


def _load_ideal(a) -> balmer.IdealTruncation:
    if a.ideal is not None:
        if a.generators is not None:
            raise UsageError("use either --ideal or --generators")
        text = a.ideal
        if text.startswith("@"):
            with open(text[1:], encoding="utf-8") as fh:
                text = fh.read()
        try:
            return balmer.IdealTruncation.from_json(json.loads(text))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"bad ideal JSON: {exc}") from None
    if a.generators is None or a.max_size is None:
        raise UsageError("classify needs --ideal, or --generators with --max-size")
    return balmer.ideal_closure(a.generators, a.max_size)


def _cmd_classify(a) -> tuple[str, Any]:
    c = balmer.classify(_load_ideal(a))
    j = c.to_json()
    if j["result"] == "prime":
        text = f"prime {j['p']} {j['q']}"
    elif j["result"] == "zero":
        text = "zero"
    elif j["witness"] is None:
        text = f"not_prime flagged: {c.reason}"
    else:
        w = j["witness"]
        text = f"not_prime witness mu={format_partition(w['mu'])} nu={format_partition(w['nu'])}"
    return text, j


def _cmd_verify(a) -> tuple[str, Any]:
    names = list(suites.SUITES) if a.suite == "all" else [a.suite]
    if a.suite != "all" and a.suite not in suites.SUITES:
        raise UsageError(f"unknown suite {a.suite!r}")
    reports = suites.run_suites(names, a.max_n)
    doc = {"passed": all(r.passed for r in reports), "suites": [r.to_dict() for r in reports]}
    text = json.dumps(doc, indent=2)
    return text, doc


COMMANDS = {
    "transpose": _cmd_transpose,
    "dim": _cmd_dim,
    "char": _cmd_char,
    "lr": _cmd_lr,
    "kron": _cmd_kron,
    "schur": _cmd_schur,
    "hook": _cmd_hook,
    "rect-lr": _cmd_rect_lr,
    "primes": _cmd_primes,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
}


def _attach_negative_values(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--object -1:1`` as ``--object=-1:1`` so argparse keeps the value."""
    out: list[str] = []
    for token in argv:
        if (
            out
            and out[-1].startswith("--")
            and "=" not in out[-1]
            and len(token) > 1
            and token[0] == "-"
            and token[1].isdigit()
        ):
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = _attach_negative_values(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        text, doc = COMMANDS[args.verb](args)
    except UsageError as exc:
        print(f"schurcalc: error: {exc}", file=stderr)
        return 1
    except (SchurCalcError, ValueError, OSError) as exc:
        print(f"schurcalc: error: {exc}", file=stderr)
        return 1
    output = json.dumps(doc) if args.json and args.verb != "verify" else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(output + "\n")
    else:
        print(output, file=stdout)
    if args.verb == "verify" and not doc["passed"]:
        return 2
    return 0


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
