"""Command-line surface.

Subcommands: validate, classify, tower, induce, infchar, chain, oracle,
render, enumerate, verify, wf-ialpha.  Exit codes: 0 ok, 1 check failed,
2 usage or malformed input.  All output is deterministic for fixed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import diagram_core as dc
from . import moment_oracle as mo
from .diagram_core import Kind, Partition, Signature
from .enumeration import class_count, shapes, signed_diagrams
from .infchar import infchar_domino, infchar_segments
from .orbit_induction import induce_real, induce_real_tau, plus_rows, wf_ialpha
from .theta_orbits import chain
from .tower import certificate, class_u
from .vector_order import bar_sort, vector_to_json
from .verify import SUITES, run_suite

USAGE_ERROR = 2
CHECK_FAILED = 1


class CliError(Exception):
    """Malformed input or bad arguments; exits with the usage code."""


def _kind(token: str) -> Kind:
    if token in ("sp", "symplectic"):
        return Kind.SYMPLECTIC
    if token in ("o", "orthogonal"):
        return Kind.ORTHOGONAL
    raise CliError(f"unknown kind {token!r}; use sp or o")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None


def _load_diagram(path: str) -> dc.SignedDiagram:
    try:
        return dc.loads(_read(path))
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from None


def _load_partition(path: str) -> Partition:
    try:
        data = json.loads(_read(path))
        return Partition(tuple(data))
    except (ValueError, TypeError) as exc:
        raise CliError(f"{path}: not a partition: {exc}") from None


def _emit(data: dict, as_json: bool, pretty: str | None = None) -> None:
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(pretty if pretty is not None else json.dumps(data, indent=2, sort_keys=True))


# ---------------------------------------------------------------------------


def cmd_validate(args) -> int:
    # schema problems are usage errors; convention violations are findings
    try:
        data = json.loads(_read(args.diagram))
        d = dc.from_json_dict(data, validated=False)
    except ValueError as exc:
        raise CliError(f"{args.diagram}: {exc}") from None
    ok, violations = dc.validate_signed(d)
    _emit(
        {"valid": ok, "violations": violations},
        args.json,
        "valid" if ok else "invalid: " + "; ".join(violations),
    )
    return 0 if ok else CHECK_FAILED


def cmd_classify(args) -> int:
    d = _load_diagram(args.diagram)
    report = class_u(d)
    data = {
        "group": str(dc.group_of(d)),
        "signature": list(dc.signature(d)),
        "shape": d.shape().to_json(),
        "class_u": report.to_json_dict(),
    }
    pretty = "\n".join(
        [
            f"group: {data['group']}",
            f"signature: ({data['signature'][0]},{data['signature'][1]})",
            f"admissible: {'yes' if report.member else 'no'}",
        ]
        + [f"  - {r}" for r in report.reasons]
    )
    _emit(data, args.json, pretty)
    return 0 if report.member else CHECK_FAILED


def cmd_tower(args) -> int:
    d = _load_diagram(args.diagram)
    report = class_u(d)
    if not report.member:
        _emit(
            {"valid": False, "class_u": report.to_json_dict()},
            args.json,
            "not admissible: " + "; ".join(report.reasons),
        )
        return CHECK_FAILED
    cert = certificate(d)
    if args.json:
        print(json.dumps(cert.to_json_dict(), indent=2, sort_keys=True))
    else:
        lines = [f"tower of {dc.group_of(d)}:"]
        lines.append(
            "  " + " -> ".join(str(g) for g in cert.groups())
        )
        lines.append(
            "  signatures: "
            + " ".join(f"({s.plus},{s.minus})" for s in cert.signatures())
        )
        for step in cert.steps:
            flags = []
            for label, rec in (
                ("pm", step.lemma_pm),
                ("range", step.range_checks),
                ("non3", step.non3),
            ):
                if rec is not None:
                    flags.append(f"{label}:{'ok' if rec['ok'] else 'FAIL'}")
            lines.append(f"  step {step.k}: {step.group} " + " ".join(flags))
        lines.append("  infchar: " + " ".join(vector_to_json(cert.infchar)))
        lines.append(f"  associated variety: {cert.associated_variety}")
        lines.append("  certificate: " + ("VALID" if cert.valid else "INVALID"))
        print("\n".join(lines))
    return 0 if cert.valid else CHECK_FAILED


def cmd_induce(args) -> int:
    s = _load_diagram(args.diagram)
    try:
        result = (induce_real_tau if args.tau else induce_real)(s, args.n)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    data = {
        "count": result.count,
        "new_columns": result.new_columns,
        "diagrams": [dc.to_json_dict(d) for d in result.diagrams],
    }
    _emit(data, args.json, "\n\n".join(dc.render_ascii(d) for d in result.diagrams))
    return 0


def cmd_infchar(args) -> int:
    d = _load_partition(args.partition)
    kind = _kind(args.kind)
    segments = infchar_segments(d, kind)
    data: dict = {
        "segments": vector_to_json(segments),
        "sorted": vector_to_json(bar_sort(segments)),
    }
    try:
        domino = infchar_domino(d, kind)
        data["domino"] = vector_to_json(domino)
        data["agree"] = domino == bar_sort(segments)
    except ValueError as exc:
        data["domino"] = None
        data["domino_error"] = str(exc)
        data["agree"] = None
    pretty = [
        "segments: " + " ".join(data["segments"]),
        "domino:   "
        + (" ".join(data["domino"]) if data["domino"] is not None else f"({data['domino_error']})"),
        f"agree: {data['agree']}",
    ]
    _emit(data, args.json, "\n".join(pretty))
    return 0 if data["agree"] is not False else CHECK_FAILED


def cmd_chain(args) -> int:
    d = _load_diagram(args.diagram)
    th = chain(d)
    data = [
        {"diagram": dc.to_json_dict(entry), "group": str(g)} for entry, g in th.entries
    ]
    _emit(
        {"chain": data},
        args.json,
        " -> ".join(str(g) for _, g in th.entries),
    )
    return 0


def cmd_oracle(args) -> int:
    if args.action != "classify":
        raise CliError("oracle supports the classify action")
    try:
        matrix = mo.RationalMatrix.from_json(json.loads(_read(args.matrix)))
    except ValueError as exc:
        raise CliError(f"{args.matrix}: {exc}") from None
    form = _parse_form(args.form)
    try:
        d = mo.classify_signed(matrix, form)
    except ValueError as exc:
        print(f"classification failed: {exc}")
        return CHECK_FAILED
    _emit(
        {"diagram": dc.to_json_dict(d), "group": str(dc.group_of(d))},
        args.json,
        dc.render_ascii(d) + f"\n{dc.group_of(d)}",
    )
    return 0


def _parse_form(token: str) -> mo.FormSpec:
    try:
        head, params = token.split(":", 1)
        if head == "sp":
            return mo.FormSpec.symplectic(int(params))
        if head == "o":
            p, q = params.split(",")
            return mo.FormSpec.orthogonal(int(p), int(q))
    except ValueError:
        pass
    raise CliError(f"bad form {token!r}; use sp:2n or o:p,q")


def cmd_render(args) -> int:
    d = _load_diagram(args.diagram)
    print(dc.render_ascii(d))
    return 0


def cmd_enumerate(args) -> int:
    kind = _kind(args.kind)
    if args.signature is not None:
        try:
            p, q = (int(x) for x in args.signature.split(","))
        except ValueError:
            raise CliError("signature must be p,q") from None
        diagrams = list(signed_diagrams(kind, sig=Signature(p, q)))
    elif args.size is not None:
        diagrams = list(signed_diagrams(kind, size=args.size))
    else:
        raise CliError("need --size or --signature")
    if args.count:
        formula = 0
        sizes = {d.size for d in diagrams} or (
            {args.size} if args.size is not None else set()
        )
        for size in sizes:
            formula += sum(class_count(s, kind) for s in shapes(kind, size))
        data = {"count": len(diagrams)}
        if args.signature is None:
            data["formula"] = formula
        _emit(data, args.json, str(len(diagrams)))
        return 0
    payload = [dc.to_json_dict(d) for d in diagrams]
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n\n".join(dc.render_ascii(d) for d in diagrams))
    return 0


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise CliError(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)}")
    rep = run_suite(args.suite, args.max)
    if args.json:
        print(json.dumps(rep.to_json_dict(), indent=2, sort_keys=True))
    else:
        status = "pass" if rep.passed else "FAIL"
        print(f"{rep.name} (bound {rep.bound}): {status}, {rep.checked} cases")
        for note in rep.notes:
            print(f"  note: {note}")
        for ce in rep.counterexamples:
            print(f"  counterexample: {ce}")
    return 0 if rep.passed else CHECK_FAILED


def cmd_wf_ialpha(args) -> int:
    try:
        diagrams = wf_ialpha(args.n, args.alpha)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    data = {
        "components": [
            {"plus_rows": plus_rows(d), "diagram": dc.to_json_dict(d)} for d in diagrams
        ],
        "complete": len(diagrams) == args.n + 1,
    }
    _emit(
        data,
        args.json,
        " ".join(f"[2^{args.n}]^({plus_rows(d)})" for d in diagrams),
    )
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitcalc",
        description="signed Young diagram calculus for real nilpotent orbits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("validate", help="check a diagram file")
    p.add_argument("diagram")
    add_json(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="group and admissibility of a diagram")
    p.add_argument("diagram")
    add_json(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tower", help="full certificate of a diagram")
    p.add_argument("diagram")
    add_json(p)
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("induce", help="real induced orbits from a symplectic diagram")
    p.add_argument("diagram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", action="store_true", help="use the tau variant")
    add_json(p)
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("infchar", help="infinitesimal character of a partition")
    p.add_argument("partition")
    p.add_argument("--kind", required=True, help="sp or o")
    add_json(p)
    p.set_defaults(func=cmd_infchar)

    p = sub.add_parser("chain", help="alternating orbit chain of a diagram")
    p.add_argument("diagram")
    add_json(p)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("oracle", help="matrix-level classification")
    p.add_argument("action", choices=["classify"])
    p.add_argument("matrix")
    p.add_argument("--form", required=True, help="sp:2n or o:p,q")
    add_json(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", help="ASCII picture of a diagram")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("enumerate", help="stream valid diagrams")
    p.add_argument("--kind", required=True, help="sp or o")
    p.add_argument("--size", type=int)
    p.add_argument("--signature", help="p,q")
    p.add_argument("--count", action="store_true", help="print counts only")
    add_json(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--max", type=int, required=True, help="size bound")
    add_json(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("wf-ialpha", help="wave-front components of a parity class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    add_json(p)
    p.set_defaults(func=cmd_wf_ialpha)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
