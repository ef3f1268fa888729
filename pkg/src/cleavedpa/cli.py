"""Command-line interface: ``cleavedpa <command> ...``.

Exit status is 0 on success, 1 for domain errors (invalid diagrams,
signature mismatches, failed checks) and 2 for unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .braid import BraidWord, braid_rep, check_conventions
from .cleaved import enumerate_cleaved, format_link, label
from .diagram import DiagramError, ParseError, PlanarDiagram, serialize_diagram
from .linalg import RingMatrix, kernel_basis, rank
from .partition import PartitionMatrix, pairing_matrix, partition_map
from .tangle import (
    TangleDiagram,
    compose,
    find_tangle_violations,
    jones_closed,
    mirror,
    parse_tangle,
    partition_tangle,
    serialize_tangle,
    skein_check,
)
from .tlcompare import (
    format_named_vector,
    generator_positions,
    joint_nullity,
    kernel_report,
    tl_generator_matrices,
)


class _Failure(Exception):
    """A check ran and reported a negative result."""


def _read_tangle(path: str) -> TangleDiagram:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DiagramError(f"cannot read {path}: {exc.strerror}") from None
    return parse_tangle(text, source=path)


def _as_planar(T: TangleDiagram) -> PlanarDiagram:
    if T.crossings:
        raise DiagramError("expected a planar diagram without crossings")
    return T.planar()


def _link_name(n: int, k: int) -> str:
    name = label(enumerate_cleaved(n)[k])
    return name if name is not None else f"L{k}"


def _matrix_payload(Z: PartitionMatrix) -> dict:
    return {
        "signature": list(Z.signature),
        "rows": [_link_name(Z.n_out, r) for r in range(Z.shape[0])],
        "columns": [[_link_name(n, k) for n, k in zip(Z.n_in, c)] for c in Z.columns()],
        "entries": [
            {"row": r, "cols": list(c), "value": v.to_pairs()} for (r, c), v in Z.entries.items()
        ],
    }


def _matrix_text(Z: PartitionMatrix) -> str:
    sig = f"({Z.n_out};{','.join(map(str, Z.n_in))})" if Z.n_in else f"({Z.n_out})"
    lines = [f"signature {sig}"]
    for c in Z.columns():
        col = Z.column_vector(c)
        name = " ⊗ ".join(f"I[{_link_name(n, k)}]" for n, k in zip(Z.n_in, c) if n) or "1"
        image = " + ".join(f"({v})*I[{_link_name(Z.n_out, r[0])}]" for r, v in col.coeffs.items()) or "0"
        lines.append(f"{name} -> {image}")
    return "\n".join(lines)


def _emit_matrix(Z: PartitionMatrix, fmt: str) -> str:
    return json.dumps(_matrix_payload(Z)) if fmt == "json" else _matrix_text(Z)


def _ring_matrix_text(M: RingMatrix) -> str:
    cells = [[str(x) for x in r] for r in M.rows]
    width = max((len(c) for r in cells for c in r), default=1)
    lines = []
    if M.col_labels:
        lines.append(" " * 5 + " ".join(f"{c:>{width}}" for c in M.col_labels))
    for k, r in enumerate(cells):
        head = f"{M.row_labels[k]:>4} " if M.row_labels else ""
        lines.append(head + " ".join(f"{c:>{width}}" for c in r))
    return "\n".join(lines)


# --- commands ---------------------------------------------------------


def cmd_basis(args) -> str:
    links = enumerate_cleaved(args.n)
    if args.format == "json":
        return json.dumps(
            [
                {"index": k, "inside": str(l.inside), "outside": str(l.outside), "decorations": l.decorations, "label": label(l)}
                for k, l in enumerate(links)
            ]
        )
    lines = [f"{k:3d}  {format_link(l)}" for k, l in enumerate(links)]
    lines.append(f"dimension {len(links)}")
    return "\n".join(lines)


def cmd_zmap(args) -> str:
    return _emit_matrix(partition_map(_as_planar(_read_tangle(args.file))), args.format)


def cmd_compose(args) -> str:
    R, T = _read_tangle(args.outer), _read_tangle(args.inner)
    C = compose(R, args.index, T)
    if args.format == "json":
        return json.dumps({"text": serialize_tangle(C)})
    return (serialize_tangle(C) if C.crossings else serialize_diagram(C.planar())).rstrip("\n")


def cmd_jones(args) -> str:
    J = jones_closed(_read_tangle(args.file))
    return json.dumps({"jones": J.to_pairs()}) if args.format == "json" else str(J)


def cmd_ztangle(args) -> str:
    return _emit_matrix(partition_tangle(_read_tangle(args.file)), args.format)


def cmd_skein(args) -> str:
    T = _read_tangle(args.file)
    results = skein_check(T)
    if args.format == "json":
        out = json.dumps({T.names[c]: ok for c, ok in results.items()})
    else:
        out = "\n".join(f"crossing {T.names[c]}: {'ok' if ok else 'FAILED'}" for c, ok in results.items())
        out = out or "no crossings"
    if not all(results.values()):
        raise _Failure(out)
    return out


def cmd_mirror(args) -> str:
    text = serialize_tangle(mirror(_read_tangle(args.file)))
    return json.dumps({"text": text}) if args.format == "json" else text.rstrip("\n")


def cmd_braid_rep(args) -> str:
    try:
        w = BraidWord.parse(args.strands, args.word)
    except ValueError as exc:
        raise DiagramError(str(exc)) from None
    return _emit_matrix(braid_rep(w), args.format)


def cmd_pairing(args) -> str:
    return _emit_matrix(pairing_matrix(args.n), args.format)


def cmd_tl_matrices(args) -> str:
    mats = tl_generator_matrices(args.n)
    if args.n == 2:
        pos = generator_positions()
        names = [f"M{k} (cup-cap at {pos[f'M{k}']},{pos[f'M{k}'] + 1})" for k in (1, 2, 3)]
    else:
        names = [f"E{p} (cup-cap at {p},{p + 1})" for p in range(1, 2 * args.n)]
    if args.format == "json":
        return json.dumps({name: {"labels": M.row_labels, "rows": M.to_pairs()} for name, M in zip(names, mats)})
    return "\n\n".join(f"{name}\n{_ring_matrix_text(M)}" for name, M in zip(names, mats))


def cmd_tl_kernels(args) -> str:
    mats = tl_generator_matrices(args.n)
    names = [f"M{k}" for k in range(1, len(mats) + 1)] if args.n == 2 else [f"E{p}" for p in range(1, 2 * args.n)]
    labels = mats[0].row_labels
    payload = {}
    for name, M in zip(names, mats):
        payload[name] = {
            "nullity": M.shape[1] - rank(M),
            "basis": [format_named_vector(v, labels) for v in kernel_basis(M)],
        }
    stacked = mats[0].stack(*mats[1:])
    payload["joint"] = {
        "nullity": joint_nullity(mats),
        "basis": [format_named_vector(v, labels) for v in kernel_basis(stacked)],
    }
    if args.n == 2:
        payload["quoted_vectors"] = kernel_report()
    if args.format == "json":
        return json.dumps(payload)
    lines = []
    for name, info in payload.items():
        if name == "quoted_vectors":
            continue
        lines.append(f"ker {name}: nullity {info['nullity']}")
        lines += [f"  {v}" for v in info["basis"]]
    if args.n == 2:
        lines.append("quoted kernel vectors:")
        for rec in payload["quoted_vectors"]:
            lines.append(f"  [{'ok' if rec['in_kernel'] else 'NOT IN KERNEL'}] ker {rec['matrix']}: {rec['vector']}")
    return "\n".join(lines)


def cmd_validate(args) -> str:
    T = _read_tangle(args.file)
    problems = find_tangle_violations(T, strict=args.strict)
    if problems:
        raise DiagramError("; ".join(problems), problems)
    return json.dumps({"ok": True}) if args.format == "json" else "ok"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cleavedpa", description="Exact planar-algebra computations.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="enumerate the cleaved-link basis of I_2n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("zmap", help="partition map of a planar diagram file")
    p.add_argument("file")
    p.set_defaults(func=cmd_zmap)

    p = sub.add_parser("compose", help="glue diagram T into boundary i of diagram R")
    p.add_argument("outer")
    p.add_argument("index", type=int)
    p.add_argument("inner")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("jones", help="Jones polynomial of a closed tangle file")
    p.add_argument("file")
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("ztangle", help="Z_T of an oriented tangle file")
    p.add_argument("file")
    p.set_defaults(func=cmd_ztangle)

    p = sub.add_parser("skein-check", help="verify the skein relation at every crossing")
    p.add_argument("file")
    p.set_defaults(func=cmd_skein)

    p = sub.add_parser("mirror", help="mirror a tangle file")
    p.add_argument("file")
    p.set_defaults(func=cmd_mirror)

    p = sub.add_parser("braid-rep", help="representation matrix of a braid word")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_braid_rep)

    p = sub.add_parser("pairing", help="Gram matrix of the non-degenerate pairing on I_2n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_pairing)

    p = sub.add_parser("tl-matrices", help="Temperley-Lieb generator matrices on I_2n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_tl_matrices)

    p = sub.add_parser("tl-kernels", help="kernels of the Temperley-Lieb generator matrices")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_tl_kernels)

    p = sub.add_parser("validate", help="check a diagram or tangle file")
    p.add_argument("--strict", action="store_true", help="also require a planar embedding")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    check_conventions()
    try:
        out = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except _Failure as exc:
        print(str(exc))
        return 1
    except (DiagramError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
