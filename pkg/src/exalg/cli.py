"""Command-line front end.

Subcommands expose the algebra (wedge, meet, join, factor, hodge, plucker,
det, solve, project), the seeded theorem harness (verify), and a replay of
the built-in worked examples with expected values (examples).

Output reuses the input grammars, so results can be piped back in.  Exit
status: 0 on success, 1 when a verification or example check fails, 2 on
parse or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import examples as examples_mod
from .affine import AffinePoint
from .errors import ExalgError
from .exterior import factor_blade, plucker_from_matrix
from .fields import Field, field_from_string
from .harness import THEOREMS, run_trials
from .matrices import Matrix
from .metric import euclidean, hodge, parse_gram
from .multivector import Multivector, Vector
from .projective import ProjFlat, ProjPoint, central_project, join, meet


def _parse_flat(text: str, field: Field, dim: int) -> ProjFlat:
    text = text.strip()
    if text.startswith("span{") and text.endswith("}"):
        body = text[len("span{"):-1]
        parts = _split_brackets(body)
        vectors = [Vector.parse(p, field) for p in parts]
        return ProjFlat.from_vectors(vectors)
    return ProjFlat(Multivector.parse(text, field, dim))


def _split_brackets(body: str) -> list[str]:
    """Split ``[..],[..],...`` at top-level commas."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    tail = body[start:]
    if tail:
        parts.append(tail)
    return parts


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exalg",
        description="Exact exterior algebra and incidence geometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, dim_default=4):
        p.add_argument("--field", default="q", help="q or gf:<p>")
        p.add_argument("--dim", type=int, default=dim_default, help="ambient dimension")

    p = sub.add_parser("wedge", help="progressive product of multivectors")
    common(p)
    p.add_argument("operands", nargs="+")

    p = sub.add_parser("meet", help="intersection flat of two flats")
    common(p)
    p.add_argument("operands", nargs=2)

    p = sub.add_parser("join", help="span flat of two or more flats")
    common(p)
    p.add_argument("operands", nargs="+")

    p = sub.add_parser("factor", help="vector factors of a blade")
    common(p)
    p.add_argument("operand")

    p = sub.add_parser("hodge", help="star of a multivector under a scalar product")
    common(p)
    p.add_argument("--gram", default=None, help="diag:+1,-1,... or matrix:[[...],...]")
    p.add_argument("operand")

    p = sub.add_parser("plucker", help="coordinates of the span of vectors")
    common(p)
    p.add_argument("operand", help="span{[...],[...]} or matrix:[[...],...] (columns)")

    p = sub.add_parser("det", help="determinant of a square matrix")
    p.add_argument("--field", default="q")
    p.add_argument("operand", help="matrix:[[...],...] or [[...],...]")

    p = sub.add_parser("solve", help="solve A x = b exactly")
    p.add_argument("--field", default="q")
    p.add_argument("matrix")
    p.add_argument("rhs")

    p = sub.add_parser("project", help="central projection of a point")
    common(p, dim_default=3)
    p.add_argument("center")
    p.add_argument("target")
    p.add_argument("point")

    p = sub.add_parser("verify", help="run the seeded randomized theorem harness")
    p.add_argument("theorem", choices=sorted(THEOREMS))
    p.add_argument("--field", default="q")
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)

    sub.add_parser("examples", help="replay the built-in worked examples")

    return parser


def _parse_matrix_arg(text: str, field: Field) -> Matrix:
    text = text.strip()
    if text.startswith("matrix:"):
        text = text[len("matrix:"):]
    return Matrix.parse(text, field)


def _run(args) -> int:
    if args.command == "examples":
        failures = 0
        for name, ok, detail in examples_mod.run_all():
            if ok:
                print(f"ok {name}")
            else:
                failures += 1
                print(f"FAIL {name}: {detail}")
        print(f"{'all checks passed' if not failures else f'{failures} check(s) failed'}")
        return 0 if failures == 0 else 1

    field = field_from_string(args.field)

    if args.command == "verify":
        report = run_trials(args.theorem, field, args.trials, args.seed, dim=args.dim)
        print(report.summary())
        return 0 if report.failed == 0 else 1

    if args.command == "det":
        print(_parse_matrix_arg(args.operand, field).det())
        return 0

    if args.command == "solve":
        a = _parse_matrix_arg(args.matrix, field)
        b = Vector.parse(args.rhs, field)
        print(a.cramer_solve(b))
        return 0

    dim = args.dim

    if args.command == "wedge":
        out = Multivector.parse(args.operands[0], field, dim)
        for text in args.operands[1:]:
            out = out.wedge(Multivector.parse(text, field, dim))
        print(out)
        return 0

    if args.command == "meet":
        a = _parse_flat(args.operands[0], field, dim)
        b = _parse_flat(args.operands[1], field, dim)
        print(meet(a, b).blade)
        return 0

    if args.command == "join":
        flats = [_parse_flat(t, field, dim) for t in args.operands]
        print(join(flats).blade)
        return 0

    if args.command == "factor":
        m = Multivector.parse(args.operand, field, dim)
        for v in factor_blade(m):
            print(v)
        return 0

    if args.command == "hodge":
        gram = parse_gram(args.gram, field, dim) if args.gram else euclidean(field, dim)
        m = Multivector.parse(args.operand, field, dim)
        print(hodge(gram, m))
        return 0

    if args.command == "plucker":
        text = args.operand.strip()
        if text.startswith("span{") and text.endswith("}"):
            vecs = [Vector.parse(part, field) for part in _split_brackets(text[len("span{"):-1])]
            matrix = Matrix.from_columns(vecs)
        else:
            matrix = _parse_matrix_arg(text, field)
        print(plucker_from_matrix(matrix))
        return 0

    if args.command == "project":
        center = _parse_flat(args.center, field, dim)
        target = _parse_flat(args.target, field, dim)
        point = ProjPoint(Vector.parse(args.point, field))
        print(central_project(center, target, point).vector)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except ExalgError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
