"""Command-line interface.

Exit codes: 0 success or verified, 1 verification found violations,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from . import __version__
from .csm import csm_cell, csm_cell_equiv, csm_variety, pushforward_GP
from .io import class_document, dumps, render_class_text, report_document
from .rootsys import build
from .verify import verify_identities, verify_positivity
from .weyl import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapError,
    format_element,
    from_word,
    parse_permutation,
)

class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_common(p: argparse.ArgumentParser, element: bool = True) -> None:
    p.add_argument("--type", required=True, help="Cartan type letter A-G")
    p.add_argument("--rank", required=True, type=int)
    if element:
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--word", help="comma-separated word, e.g. 1,2,1 ('' for the identity)")
        g.add_argument("--perm", help="one-line permutation, e.g. 4312 (type A only)")
    p.add_argument("--format", choices=("json", "text"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csmflag",
        description="CSM classes of Schubert cells in generalized flag manifolds.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cell", help="CSM class of a Schubert cell")
    _add_common(p)
    p = sub.add_parser("variety", help="CSM class of a Schubert variety")
    _add_common(p)
    p = sub.add_parser("equivariant", help="torus-equivariant CSM class of a Schubert cell")
    _add_common(p)
    p = sub.add_parser("pushforward", help="CSM class of a Schubert cell in G/P")
    _add_common(p)
    p.add_argument("--parabolic", type=_int_list, default=[],
                   help="simple indices generating W_P, e.g. 1,3")
    p.add_argument("--equivariant", action="store_true")

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("kind", choices=("positivity", "identities"))
    _add_common(p, element=False)
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--equivariant", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--samples", type=int, default=100, help="random vectors (identities)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                   help="refuse full enumeration of groups larger than this")
    return parser


def _element(rs, args):
    if args.perm is not None:
        if rs.lie_type != "A":
            raise UsageError(f"--perm is only valid in type A, not {rs.name}")
        return parse_permutation(rs, args.perm)
    text = args.word.strip()
    if text in ("", "e"):
        return rs.weyl.identity
    try:
        word = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed word {args.word!r}: expected e.g. 1,2,1") from None
    return from_word(rs, word)


def _emit(doc, text: str, fmt: str) -> None:
    sys.stdout.write(dumps(doc) if fmt == "json" else text)


def _run_class(args, rs) -> int:
    w = _element(rs, args)
    label = format_element(w)
    if args.command == "cell":
        gamma = csm_cell(w)
        title = f"c_SM(X({label})°) in {rs.name}"
        parabolic = None
    elif args.command == "variety":
        gamma = csm_variety(w)
        title = f"c_SM(X({label})) in {rs.name}"
        parabolic = None
    elif args.command == "equivariant":
        gamma = csm_cell_equiv(w)
        title = f"c_SM^T(X({label})°) in {rs.name}"
        parabolic = None
    else:
        parabolic = sorted(set(args.parabolic))
        for k in parabolic:
            if not 1 <= k <= rs.rank:
                raise UsageError(f"parabolic index {k} out of range 1..{rs.rank}")
        cell = csm_cell_equiv(w) if args.equivariant else csm_cell(w)
        gamma = pushforward_GP(cell, parabolic)
        title = f"push-forward of c_SM(X({label})°) to {rs.name}/P, P={parabolic}"
    doc = class_document(gamma, args.command, element=w, parabolic=parabolic)
    _emit(doc, render_class_text(gamma, title), args.format)
    return 0


def _run_verify(args, rs) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    start = time.perf_counter()
    if args.kind == "positivity":
        report = verify_positivity(
            rs, max_length=args.max_length, equivariant=args.equivariant,
            jobs=args.jobs, cap=args.cap,
        )
        payload = report.to_payload()
        ok = report.ok
        lines = [
            f"# positivity {'(equivariant) ' if args.equivariant else ''}{rs.name}",
            f"scope: {payload['scope']}",
            f"cells: {report.cells_checked}",
            f"coefficients: {report.coefficients_checked}",
        ]
        lines += [f"check {name}: {n}" for name, n in payload["checks"].items()]
        lines.append(f"counterexamples: {len(report.counterexamples)}")
        lines += [f"  w={c['w']} u={c['u']} coeff={c['coeff']}" for c in report.counterexamples]
        lines.append(f"structural failures: {len(report.structural_failures)}")
        lines += [f"  {f}" for f in report.structural_failures]
        lines.append(f"verdict: {report.verdict}")
    else:
        report = verify_identities(rs, samples=args.samples, seed=args.seed)
        payload = report.to_payload()
        ok = report.ok
        lines = [f"# identities {rs.name}, {args.samples} samples, seed {args.seed}"]
        for name, info in payload["identities"].items():
            status = "ok" if not info["witnesses"] else f"FAIL ({len(info['witnesses'])}+)"
            lines.append(f"{name}: {info['checked']} checked, {status}")
        lines.append(f"verdict: {payload['verdict']}")
    print(f"{args.kind} sweep finished in {time.perf_counter() - start:.2f}s", file=sys.stderr)
    doc = report_document(rs, f"verify-{args.kind}", payload)
    _emit(doc, "\n".join(lines) + "\n", args.format)
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        rs = build(args.type, args.rank)
        if args.command == "verify":
            return _run_verify(args, rs)
        return _run_class(args, rs)
    except EnumerationCapError as exc:
        print(f"csmflag: error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"csmflag: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
