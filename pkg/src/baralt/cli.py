"""Command-line interface.

Subcommands: check, radical, bradical, peirce, decompose, verify.
Exit codes: 0 pass/success, 1 domain error (category printed), 2 usage error.
Reports are printed as JSON with --format machine, or as a human summary.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import check_alternative
from .baric import check_weight
from .errors import BaraltError, NotIdempotentError
from .files import (
    decomposition_to_text,
    parse_algebra_text,
    parse_decomposition_text,
)
from .peirce import Idempotent, peirce_single, principal_idempotent, verify_peirce_relations
from .radical import b_radical, is_b_semisimple, nilradical_report
from .wedderburn import decompose, verify_decomposition


def _fmt_vec(field, v):
    return [field.fmt(c) for c in v]


def _emit(report: dict, fmt: str):
    if fmt == "machine":
        print(json.dumps(report, indent=1, sort_keys=True))
    else:
        for line in report.get("summary", []):
            print(line)


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra_text(fh.read())


def cmd_check(args) -> int:
    u, _meta = _load(args.algebra)
    a = u.algebra
    report = {"dim": a.dim, "summary": []}
    wit = check_alternative(a)
    report["alternative"] = wit is None
    if wit is None:
        report["summary"].append("alternative: pass (all basis triples)")
    else:
        report["alternative_witness"] = {
            "identity": wit.kind,
            "x": _fmt_vec(a.field, wit.x),
            "y": _fmt_vec(a.field, wit.y),
        }
        report["summary"].append(
            f"alternative: FAIL ({wit.kind} identity, witness x={report['alternative_witness']['x']},"
            f" y={report['alternative_witness']['y']})"
        )
    wwit = check_weight(a, u.weight)
    report["weight"] = wwit is None
    report["summary"].append("weight: pass (nonzero homomorphism)" if wwit is None else "weight: FAIL")
    _emit(report, args.format)
    return 0 if (wit is None and wwit is None) else 1


def cmd_radical(args) -> int:
    u, _meta = _load(args.algebra)
    a = u.algebra
    rad, cert, outside = nilradical_report(a)
    report = {
        "nilradical_dim": rad.dim,
        "nilradical_basis": [_fmt_vec(a.field, r) for r in rad.rows],
        "nil_index": cert.nil_index,
        "chain_dims": [s.dim for s in cert.chain],
        "maximality_checked_vectors": len(outside),
        "semisimple": rad.dim == 0,
        "summary": [
            f"nilradical: dim {rad.dim}, nil index {cert.nil_index}, "
            f"chain dims {[s.dim for s in cert.chain]}",
            f"maximality oracle: {len(outside)} outside basis vectors certified non-nil",
        ],
    }
    _emit(report, args.format)
    return 0


def cmd_bradical(args) -> int:
    u, _meta = _load(args.algebra)
    rad = b_radical(u)
    report = {
        "b_radical_dim": rad.dim,
        "b_radical_basis": [_fmt_vec(u.field, r) for r in rad.rows],
        "b_semisimple": is_b_semisimple(u),
        "summary": [f"b-radical: dim {rad.dim}; b-semisimple: {is_b_semisimple(u)}"],
    }
    _emit(report, args.format)
    return 0


def cmd_peirce(args) -> int:
    u, _meta = _load(args.algebra)
    a = u.algebra
    if args.principal:
        e = principal_idempotent(u, seed=args.seed)
    else:
        coords = tuple(a.field.parse(c) for c in args.idempotent.split(","))
        if len(coords) != a.dim:
            raise BaraltError(f"idempotent needs {a.dim} coordinates")
        if a.mul(coords, coords) != coords:
            raise NotIdempotentError("supplied element is not idempotent")
        e = Idempotent(coords, u.wt(coords))
    system = peirce_single(a, e.element)
    wit = verify_peirce_relations(system)
    dims = {f"{i}{j}": s.dim for (i, j), s in system.components.items()}
    report = {
        "idempotent": _fmt_vec(a.field, e.element),
        "component_dims": dims,
        "relations": wit is None,
        "summary": [
            f"idempotent: {_fmt_vec(a.field, e.element)}",
            f"component dims: {dims}",
            f"relations: {'pass' if wit is None else 'FAIL at ' + str((wit.source, wit.other))}",
        ],
    }
    _emit(report, args.format)
    return 0 if wit is None else 1


def cmd_decompose(args) -> int:
    u, _meta = _load(args.algebra)
    dec = decompose(u, seed=args.seed, search_bound=args.search_bound)
    text = decomposition_to_text(u, dec, args.seed, args.search_bound)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.format == "human":
        print(
            f"decomposition: dim S = {dec.s_basis.dim}, dim V = {dec.v_basis.dim}, "
            f"dim rad = {dec.rad_basis.dim}; certificate "
            f"{'accepted' if dec.certificate.accepted else 'REJECTED'}",
            file=sys.stderr,
        )
    return 0


def cmd_verify(args) -> int:
    u, _meta = _load(args.algebra)
    with open(args.decomposition, "r", encoding="utf-8") as fh:
        dec, _data = parse_decomposition_text(fh.read(), u)
    cert = verify_decomposition(u, dec)
    report = {
        "accepted": cert.accepted,
        "checks": [
            {"name": c.name, "passed": c.passed, "informative": c.informative, "detail": c.detail}
            for c in cert.checks
        ],
        "summary": [
            f"{c.name}: {'pass' if c.passed else 'FAIL'}{' (informative)' if c.informative else ''}"
            for c in cert.checks
        ]
        + [f"certificate: {'accepted' if cert.accepted else 'REJECTED: ' + ', '.join(cert.failing())}"],
    }
    _emit(report, args.format)
    return 0 if cert.accepted else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="baralt",
        description="Exact Wedderburn b-decompositions of baric alternative algebras",
    )
    parser.add_argument("--format", choices=("human", "machine"), default="human")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the alternative identities and the weight")
    p.add_argument("algebra")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("radical", help="nilradical with certificates")
    p.add_argument("algebra")
    p.set_defaults(fn=cmd_radical)

    p = sub.add_parser("bradical", help="b-radical bar(U)^2 ∩ R(U)")
    p.add_argument("algebra")
    p.set_defaults(fn=cmd_bradical)

    p = sub.add_parser("peirce", help="Peirce decomposition relative to an idempotent")
    p.add_argument("algebra")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--idempotent", help="comma-separated coordinates")
    group.add_argument("--principal", action="store_true", help="use a principal idempotent")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_peirce)

    p = sub.add_parser("decompose", help="compute the Wedderburn b-decomposition")
    p.add_argument("algebra")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--search-bound", type=int, default=3)
    p.add_argument("-o", "--output", help="write the decomposition file here (default stdout)")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("verify", help="verify a decomposition file against its algebra")
    p.add_argument("algebra")
    p.add_argument("decomposition")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BaraltError as exc:
        print(f"error [{exc.category}]: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error [io]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
