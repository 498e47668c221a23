"""Command-line surface: enumeration, polynomials, transport traces, fibers,
and batch verification.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification failure, 2 usage or validation error.  All output is
deterministic; JSON uses sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys

from .perm import (
    Partition,
    Permutation,
    Transposition,
    dominant_permutations,
    partitions_up_to,
    symmetric_group,
    weak_interval_below,
)
from .pipedream import (
    MarkedPipeDream,
    PipeDream,
    pipe_dreams,
    pipe_dreams_bruteforce,
    render_ascii,
)
from .poly import padded_schubert_poly, schubert_poly
from .correspondence import (
    MarkClass,
    between_sets,
    covers_below,
    fiber,
    resolve,
    verify_lowering,
    verify_raising,
    verify_sl2,
)

_SWEEP_GUARD = 6


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _parse_positions(text: str) -> list[tuple[int, int]]:
    data = json.loads(text)
    return [(int(i), int(j)) for (i, j) in data]


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected two comma-separated integers, got {text!r}")
    return int(parts[0]), int(parts[1])


def _cmd_enumerate(args) -> int:
    w = Permutation.from_string(args.w)
    dreams = sorted(pipe_dreams(w))
    if args.format == "count":
        print(len(dreams))
    elif args.format == "ascii":
        print("\n\n".join(render_ascii(pd) for pd in dreams))
    else:
        _emit(
            {
                "count": len(dreams),
                "permutation": w.to_string(),
                "pipe_dreams": [pd.to_json_obj() for pd in dreams],
            }
        )
    return 0


def _cmd_schubert(args) -> int:
    poly = schubert_poly(Permutation.from_string(args.w))
    if args.format == "json":
        _emit(poly.to_json_obj())
    else:
        print(poly.to_text())
    return 0


def _cmd_padded(args) -> int:
    w = Permutation.from_string(args.w)
    above = Permutation.from_string(args.above)
    poly = padded_schubert_poly(w, above)
    if args.format == "json":
        _emit(poly.to_json_obj())
    else:
        print(poly.to_text())
    return 0


def _cmd_phi(args) -> int:
    w = Permutation.from_string(args.w)
    above = Permutation.from_string(args.above)
    pd = PipeDream(_parse_positions(args.crosses))
    if pd.permutation != w:
        raise ValueError(
            f"cross-set has permutation {pd.permutation.to_string()}, not {w.to_string()}"
        )
    mpd = MarkedPipeDream(pd, _parse_pair(args.mark))
    resolution = resolve(mpd, above)
    if args.trace:
        for step in resolution.steps:
            print(render_ascii(step.pd, above, step.mark), file=sys.stderr)
            print(file=sys.stderr)
        print(render_ascii(resolution.result, above), file=sys.stderr)
    _emit(resolution.to_json_obj())
    return 0


def _cmd_fiber(args) -> int:
    w = Permutation.from_string(args.w)
    above = Permutation.from_string(args.above)
    a, b = _parse_pair(args.t)
    cover = Transposition(a, b)
    target = PipeDream(_parse_positions(args.crosses))
    classes = fiber(target, w, cover, above)
    sets = between_sets(w, cover, above)
    _emit(
        {
            "A": sorted(sets.position),
            "B": sorted(sets.value),
            "count": sum(len(v) for v in classes.values()),
            "classes": {
                cls.value: [m.to_json_obj() for m in sorted(members)]
                for cls, members in classes.items()
            },
        }
    )
    return 0


def _sweep_pairs(n: int):
    for above in dominant_permutations(n):
        for w in weak_interval_below(above):
            yield w, above


def _verify_identity(kind: str, args) -> tuple[bool, dict]:
    check = verify_raising if kind == "delta" else verify_lowering
    cases = 0
    failures = []
    if args.above is not None:
        above = Permutation.from_string(args.above)
        ws = (
            [Permutation.from_string(args.w)]
            if args.w is not None
            else list(weak_interval_below(above))
        )
        pairs = [(w, above) for w in ws]
    else:
        pairs = list(_sweep_pairs(args.n))
    for w, above in pairs:
        cases += 1
        report = check(w, above)
        if not report.ok:
            failures.append(
                {
                    "w": w.to_string(),
                    "pi": above.to_string(),
                    "mismatches": report.to_json_obj()["mismatches"],
                }
            )
    return not failures, {"cases": cases, "failures": failures}


def _verify_sl2(args) -> tuple[bool, dict]:
    shapes = (
        [Partition.from_string(args.shape)]
        if args.shape is not None
        else list(partitions_up_to(min(args.n, _SWEEP_GUARD)))
    )
    cases = 0
    failures = []
    for shape in shapes:
        report = verify_sl2(shape)
        cases += report.cases
        failures.extend(
            {"lambda": shape.to_string(), "relation": text} for text in report.failures
        )
    return not failures, {"cases": cases, "failures": failures}


def _verify_fibers(args) -> tuple[bool, dict]:
    cases = 0
    failures = []
    for w, above in _sweep_pairs(args.n):
        for cover in covers_below(w, above):
            expected = 1 + between_sets(w, cover, above).total
            for target in sorted(pipe_dreams(cover.times(w))):
                cases += 1
                classes = fiber(target, w, cover, above)
                total = sum(len(v) for v in classes.values())
                if total != expected or len(classes[MarkClass.DIRECT]) != 1:
                    failures.append(
                        {
                            "w": w.to_string(),
                            "pi": above.to_string(),
                            "t": [cover.a, cover.b],
                            "Q": target.to_json_obj(),
                            "expected": expected,
                            "found": total,
                        }
                    )
    return not failures, {"cases": cases, "failures": failures}


def _verify_enum_oracle(args) -> tuple[bool, dict]:
    cases = 0
    failures = []
    for w in symmetric_group(args.n):
        cases += 1
        if pipe_dreams(w) != pipe_dreams_bruteforce(w):
            failures.append({"w": w.to_string()})
    return not failures, {"cases": cases, "failures": failures}


def _cmd_verify(args) -> int:
    if args.n > _SWEEP_GUARD and not args.force:
        raise ValueError(
            f"sweep at n={args.n} exceeds the guard ({_SWEEP_GUARD}); pass --force"
        )
    if args.n > _SWEEP_GUARD:
        print(f"warning: sweeping at n={args.n} may take very long", file=sys.stderr)
    runner = {
        "delta": lambda a: _verify_identity("delta", a),
        "nabla": lambda a: _verify_identity("nabla", a),
        "sl2": _verify_sl2,
        "fibers": _verify_fibers,
        "enum-oracle": _verify_enum_oracle,
    }[args.kind]
    ok, payload = runner(args)
    _emit({"ok": ok, "kind": args.kind, **payload})
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pipedreams",
        description="Pipe dream combinatorics of Schubert polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the pipe dreams of a permutation")
    p.add_argument("w", help="permutation, comma-separated one-line notation")
    p.add_argument("--format", choices=("json", "ascii", "count"), default="json")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("schubert", help="Schubert polynomial of a permutation")
    p.add_argument("w")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_schubert)

    p = sub.add_parser("padded", help="padded Schubert polynomial")
    p.add_argument("w")
    p.add_argument("above", help="dominant permutation bounding the interval")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_padded)

    p = sub.add_parser("phi", help="transport a marked bump to a cover")
    p.add_argument("w")
    p.add_argument("above")
    p.add_argument("--crosses", required=True, help='JSON, e.g. "[[1,1],[3,2]]"')
    p.add_argument("--mark", required=True, help='position "i,j"')
    p.add_argument("--trace", action="store_true", help="render each step to stderr")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("fiber", help="preimage of a cover's pipe dream")
    p.add_argument("w")
    p.add_argument("above")
    p.add_argument("--t", required=True, help='transposition "a,b"')
    p.add_argument("--crosses", required=True, help="target pipe dream, JSON")
    p.set_defaults(func=_cmd_fiber)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("kind", choices=("delta", "nabla", "sl2", "fibers", "enum-oracle"))
    p.add_argument("--n", type=int, default=None, help="sweep rank bound")
    p.add_argument("--pi", dest="above", default=None, help="single dominant permutation")
    p.add_argument("--w", default=None, help="single base permutation (with --pi)")
    p.add_argument("--lambda", dest="shape", default=None, help="single shape for sl2")
    p.add_argument("--force", action="store_true", help="allow sweeps past the guard")
    p.set_defaults(func=_cmd_verify)
    return parser


_DEFAULT_N = {"delta": 5, "nabla": 5, "sl2": 6, "fibers": 4, "enum-oracle": 5}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is None and hasattr(args, "kind"):
        args.n = _DEFAULT_N[args.kind]
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
