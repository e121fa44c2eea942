"""Command-line interface.

Commands::

    validate <file>                      check the polyhedral-graph conditions
    faces <file>                         list the faces of the embedding
    dual <file>                          planar dual in polygraph format
    generate <family> [n]                emit a generated graph
    decide (--inscribable|--circumscribable) <file>
    angles <certificate.json> <file>     ideal dihedral angles from a certificate
    verify <certificate.json> <file>     re-check an emitted certificate

``-`` reads the graph from standard input.  Exit codes: 0 for any
successfully computed answer (yes or no), 2 for invalid input, 3 for an
internal error or an exceeded iteration cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .decide import (
    Certificate,
    certificate_from_json,
    certificate_to_json,
    decide_circumscribable,
    decide_inscribable,
    dihedral_angles,
    fast_path_four_connected,
    verify_certificate,
)
from .errors import GraphError, InternalError
from .generators import generate
from .graph import (
    dual,
    format_graph,
    parse_graph,
    trace_faces,
    validate_steinitz,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INTERNAL = 3


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _cmd_validate(args) -> int:
    g = parse_graph(_read_source(args.file), require_polyhedral=False)
    report = validate_steinitz(g)
    if args.format == "json":
        print(json.dumps({
            "planar_spherical": report.planar_spherical,
            "three_connected": report.three_connected,
        }, indent=2))
    else:
        print(f"planar_spherical: {str(report.planar_spherical).lower()}")
        print(f"three_connected: {str(report.three_connected).lower()}")
    return EXIT_OK


def _cmd_faces(args) -> int:
    g = parse_graph(_read_source(args.file), require_polyhedral=False)
    faces = trace_faces(g)
    if args.format == "json":
        print(json.dumps([
            {
                "id": f.id,
                "vertices": list(f.vertices),
                "edges": [e for e, _ in f.boundary],
            }
            for f in faces
        ], indent=2))
    else:
        print(f"faces: {len(faces)}")
        for f in faces:
            verts = " ".join(str(v) for v in f.vertices)
            edges = " ".join(str(e) for e, _ in f.boundary)
            print(f"{f.id}: vertices {verts}; edges {edges}")
    return EXIT_OK


def _cmd_dual(args) -> int:
    g = parse_graph(_read_source(args.file))
    pair = dual(g)
    if args.format == "json":
        print(json.dumps({
            "dual_polygraph": format_graph(pair.dual),
            "edge_bijection": {str(e): d for e, d in enumerate(pair.primal_to_dual)},
        }, indent=2))
    else:
        sys.stdout.write(format_graph(pair.dual))
        print("# edge bijection (primal -> dual)")
        for e, d in enumerate(pair.primal_to_dual):
            print(f"# {e} -> {d}")
    return EXIT_OK


def _cmd_generate(args) -> int:
    g = generate(args.family, args.n)
    sys.stdout.write(format_graph(g))
    return EXIT_OK


def _cmd_decide(args) -> int:
    g = parse_graph(_read_source(args.file))
    mode = "inscribable" if args.inscribable else "circumscribable"
    if args.fast_path and fast_path_four_connected(g):
        cert = Certificate(
            answer="yes",
            graph_role="dual" if mode == "inscribable" else "primal",
            margin=None,
            weights=None,
            cuts=(),
            iterations=0,
            lp_status="skipped",
        )
        _emit_certificate(cert, None, args.format, fast_path=True)
        return EXIT_OK
    if mode == "inscribable":
        cert = decide_inscribable(g, max_iterations=args.max_iters)
        angles = dihedral_angles(cert, dual(g)) if cert.is_yes else None
    else:
        cert = decide_circumscribable(g, max_iterations=args.max_iters)
        angles = None
    _emit_certificate(cert, angles, args.format)
    return EXIT_OK


def _emit_certificate(cert, angles, fmt, fast_path=False) -> None:
    if fmt == "json":
        text = certificate_to_json(cert, angles)
        if fast_path:
            doc = json.loads(text)
            doc["fast_path"] = True
            text = json.dumps(doc, indent=2) + "\n"
        sys.stdout.write(text)
        return
    print(f"answer: {cert.answer}")
    print(f"graph_role: {cert.graph_role}")
    if fast_path:
        print("method: 4-connected fast path (no weight certificate)")
        return
    if cert.margin is not None:
        print(f"margin: {_frac(cert.margin)}")
    else:
        print("margin: none (face equalities contradictory)")
    print(f"iterations: {cert.iterations}")
    print(f"cuts: {len(cert.cuts)}")
    if cert.weights is not None:
        print("weights:")
        for e in range(len(cert.weights)):
            print(f"  edge {e}: {_frac(cert.weights[e])}")
    if angles is not None:
        print("dihedral angles (fractions of pi):")
        for e in range(len(angles)):
            print(f"  edge {e}: {_frac(angles[e])}")


def _cmd_angles(args) -> int:
    cert = _load_certificate(args.certificate)
    g = parse_graph(_read_source(args.file))
    if not cert.is_yes:
        raise GraphError("certificate answer is 'no'; no angles exist")
    if cert.graph_role != "dual":
        raise GraphError("angles need an inscribability (dual-role) certificate")
    pair = dual(g)
    angles = dihedral_angles(cert, pair)
    if args.format == "json":
        print(json.dumps(
            {str(e): _frac(angles[e]) for e in range(len(angles))}, indent=2
        ))
    else:
        for e in range(len(angles)):
            u, v = g.edges[e]
            print(f"edge {e} ({u}-{v}): {_frac(angles[e])} pi")
    return EXIT_OK


def _cmd_verify(args) -> int:
    cert = _load_certificate(args.certificate)
    g = parse_graph(_read_source(args.file))
    ok, problems = verify_certificate(cert, g)
    if args.format == "json":
        print(json.dumps({"valid": ok, "problems": problems}, indent=2))
    else:
        print(f"verification: {'PASS' if ok else 'FAIL'}")
        for p in problems:
            print(f"  {p}")
    return EXIT_OK


def _load_certificate(path: str) -> Certificate:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc
    try:
        return certificate_from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise GraphError(f"malformed certificate {path}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inscribe",
        description="Decide inscribable/circumscribable type of polyhedral graphs "
        "with exact rational arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json"), default="text",
            help="output format (default text)",
        )

    p = sub.add_parser("validate", help="check the polyhedral-graph conditions")
    p.add_argument("file", help="polygraph file, or - for stdin")
    add_format(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("faces", help="list the faces of the embedding")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=_cmd_faces)

    p = sub.add_parser("dual", help="planar dual with edge bijection")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("generate", help="emit a generated polyhedral graph")
    p.add_argument("family", help="e.g. cube, prism, 'kleetope(tetrahedron)'")
    p.add_argument("n", nargs="?", type=int, default=None, help="size for sized families")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("decide", help="decide inscribable or circumscribable type")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--inscribable", action="store_true")
    group.add_argument("--circumscribable", action="store_true")
    p.add_argument("file")
    add_format(p)
    p.add_argument(
        "--fast-path", action="store_true",
        help="answer yes immediately for 4-connected graphs (no certificate)",
    )
    p.add_argument(
        "--max-iters", type=int, default=None,
        help="cut-loop iteration cap (default 10*E)",
    )
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("angles", help="ideal dihedral angles from a certificate")
    p.add_argument("certificate")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=_cmd_angles)

    p = sub.add_parser("verify", help="re-check an emitted certificate")
    p.add_argument("certificate")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
