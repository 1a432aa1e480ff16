"""Command-line interface: ``acyclic <subcommand> [options] [input]``.

Inputs come from a file, from stdin (``-`` or no argument) or from a named
``--preset``.  The input kind is detected from its first character: ``<``
starts a group presentation, ``{`` a chain complex in JSON, anything else
is a simplicial complex given by maximal simplices.

Exit codes: 0 success, 1 negative verdict from a check (``perfect``,
``acyclicity --k``, ``permcheck``, ``verify-paper``), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Union

from . import grouppres as gp
from . import simplicial as sc
from .acyclicity import INFINITY, analyze_chain
from .chaincomplex import ChainComplex, ChainComplexError, HomologyGroup, cohomology
from .fundgroup import edge_path_presentation
from .intlinalg import cokernel_structure, snf
from .parsing import ParseError, parse_complex, parse_matrix, parse_presentation
from .permgroup import (
    DEFAULT_CAP,
    FiniteGroup,
    GroupCapError,
    alternating,
    cyclic_group,
    evaluate,
    generate,
    is_perfect_finite,
    parse_cycles,
    symmetric,
)
from .schemas import SCHEMAS
from .simplicial import SimplicialComplex, SimplicialError
from .verify import verify_paper

Source = Union[SimplicialComplex, gp.Presentation, ChainComplex]


class InputError(Exception):
    """Bad input or usage; reported on stderr with exit code 2."""


# presets

_FAMILIES: list[tuple[str, Callable[..., Source]]] = [
    (r"sphere(\d+)", lambda n: sc.sphere(int(n))),
    (r"simplex(\d+)", lambda n: sc.simplex(int(n))),
    (r"circle(\d+)", lambda n: sc.circle(int(n))),
    (r"free(\d+)", lambda n: gp.free(int(n))),
    (r"cyclic(\d+)", lambda n: gp.cyclic(int(n))),
    (r"higman(\d+)", lambda n: gp.higman_n(int(n))),
    (r"bs(-?\d+)_(-?\d+)", lambda m, n: gp.baumslag_solitar(int(m), int(n))),
]


def preset_names() -> list[str]:
    return sorted(sc.corpus()) + sorted(gp.corpus())


def resolve_preset(name: str) -> Source:
    """Named complex or presentation; families like ``sphere5`` or ``bs2_3`` also work."""
    complexes = sc.corpus()
    if name in complexes:
        return complexes[name]
    presentations = gp.corpus()
    if name in presentations:
        return presentations[name]
    for pattern, build in _FAMILIES:
        m = re.fullmatch(pattern, name)
        if m:
            try:
                return build(*m.groups())
            except (SimplicialError, gp.PresentationError, ValueError) as e:
                raise InputError(f"preset {name!r}: {e}") from None
    raise InputError(f"unknown preset {name!r}; known: {', '.join(preset_names())}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def parse_source(text: str) -> Source:
    head = text.lstrip()[:1]
    if head == "<":
        return parse_presentation(text)
    if head == "{":
        try:
            return ChainComplex.from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno, e.colno) from None
        except (KeyError, TypeError) as e:
            raise InputError(f"chain complex JSON: missing or malformed field {e}") from None
    return parse_complex(text)


def load(args, index: int = 0) -> Source:
    sources = getattr(args, "sources", None) or [("file", "-")]
    kind, value = sources[index]
    if kind == "preset":
        return resolve_preset(value)
    return parse_source(_read(value))


def to_chain(X: Source) -> ChainComplex:
    if isinstance(X, SimplicialComplex):
        return sc.chain_complex(X)
    if isinstance(X, gp.Presentation):
        return gp.presentation_complex_chain(X)
    return X


def need_complex(X: Source, what: str) -> SimplicialComplex:
    if not isinstance(X, SimplicialComplex):
        raise InputError(f"{what} needs a simplicial complex, got a {_kind(X)}")
    return X


def need_presentation(X: Source, what: str) -> gp.Presentation:
    if not isinstance(X, gp.Presentation):
        raise InputError(f"{what} needs a group presentation, got a {_kind(X)}")
    return X


def _kind(X: Source) -> str:
    if isinstance(X, SimplicialComplex):
        return "simplicial complex"
    if isinstance(X, gp.Presentation):
        return "presentation"
    return "chain complex"


def vertex_index(K: SimplicialComplex, label: str | None) -> int:
    if label is None:
        if not K.n_vertices:
            raise InputError("the complex has no vertices")
        return 0
    for i, lab in enumerate(K.labels):
        if str(lab) == label:
            return i
    raise InputError(f"no vertex labelled {label!r}")


# output helpers


@dataclass
class Output:
    data: object
    text: str
    status: int = 0


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _table(groups: dict[int, HomologyGroup]) -> dict:
    return {str(i): g.to_dict() for i, g in sorted(groups.items())}


def _degree_range(C: ChainComplex, max_degree: int | None) -> range:
    top = C.top_degree if max_degree is None else max_degree
    return range(C.bottom_degree, top + 1)


def _symbol(kind: str, reduced: bool, i: int) -> str:
    h = "H~" if reduced else "H"
    return f"{h}_{i}" if kind == "homology" else f"{h}^{i}"


# subcommands


def cmd_homology(args) -> Output:
    C = to_chain(load(args))
    if args.unreduced and C.augmented:
        C = C.unreduced()
    reduced = C.augmented
    if args.command == "homology":
        groups = {i: C.homology(i) for i in _degree_range(C, args.max_degree)}
    else:
        groups = {i: cohomology(C, i) for i in _degree_range(C, args.max_degree)}
    text = "\n".join(f"{_symbol(args.command, reduced, i)} = {g}" for i, g in groups.items())
    return Output({"kind": args.command, "reduced": reduced, "groups": _table(groups)}, text)


def _abelianization_output(P: gp.Presentation) -> Output:
    ab = gp.abelianization(P)
    data = {
        "presentation": str(P),
        "free_rank": ab.free_rank,
        "torsion": list(ab.torsion),
        "perfect": ab.is_trivial(),
        "exponent_matrix": gp.exponent_matrix(P).tolist(),
    }
    text = "\n".join([
        f"presentation: {P}",
        f"abelianization: {ab}",
        f"perfect: {_yes(ab.is_trivial())}",
    ])
    return Output(data, text)


def cmd_abelianize(args) -> Output:
    return _abelianization_output(need_presentation(load(args), "abelianize"))


def cmd_perfect(args) -> Output:
    out = _abelianization_output(need_presentation(load(args), "perfect"))
    out.status = 0 if out.data["perfect"] else 1
    return out


def cmd_acyclicity(args) -> Output:
    C = to_chain(load(args))
    if not C.augmented:
        raise InputError("acyclicity needs an augmented chain complex (reduced homology)")
    report = analyze_chain(C, args.h_indexing)
    data = report.to_dict()
    if args.max_degree is not None:
        data["homology"] = {k: v for k, v in data["homology"].items() if int(k) <= args.max_degree}
    lines = [
        f"nonempty: {_yes(report.nonempty)}",
        f"connected: {_yes(report.connected)}",
    ]
    for k, g in data["homology"].items():
        lines.append(f"H~_{k} = {HomologyGroup(g['betti'], tuple(g['torsion']))}")
    lines += [
        f"max_k: {data['max_k']}",
        f"perfect_pi1_h1: {_yes(report.perfect_pi1_h1)}",
        f"indexing: {report.indexing}",
    ]
    status = 0
    if args.k is not None:
        if args.k < -1:
            raise InputError("--k must be >= -1")
        verdict = report.k_acyclic(args.k)
        data["k"] = args.k
        data["k_acyclic"] = verdict
        lines.append(f"{args.k}-acyclic: {_yes(verdict)}")
        status = 0 if verdict else 1
    lines.append(f"caveat: {report.caveat}")
    return Output(data, "\n".join(lines), status)


def cmd_pi1(args) -> Output:
    K = need_complex(load(args), "pi1")
    base = vertex_index(K, args.basepoint)
    pres = edge_path_presentation(K, base)
    P = pres.presentation
    ab = gp.abelianization(P).as_homology()
    component = sorted(pres.component)
    sub = sc.from_maximal_simplices(
        list(range(K.n_vertices)),
        [s for s in K.maximal_simplices() if s[0] in pres.component],
    )
    h1 = sc.chain_complex(sub).homology(1)
    labels = K.labels
    gens = [[labels[u], labels[v]] for u, v in pres.generator_edges]
    data = {
        "presentation": str(P),
        "basepoint": labels[base],
        "generators": gens,
        "abelianization": ab.to_dict(),
        "h1": h1.to_dict(),
        "agree": ab == h1,
    }
    lines = [f"basepoint: {labels[base]}", f"presentation: {P}"]
    for name, (u, v) in zip(P.generator_names, gens):
        lines.append(f"  {name}: edge {u} -> {v}")
    if len(component) < K.n_vertices:
        lines.append(f"component: {len(component)} of {K.n_vertices} vertices")
    lines += [f"abelianization: {ab}", f"H1: {h1}", f"agree: {_yes(ab == h1)}"]
    return Output(data, "\n".join(lines))


def cmd_snf(args) -> Output:
    sources = getattr(args, "sources", None) or [("file", "-")]
    kind, value = sources[0]
    if kind == "preset":
        raise InputError("snf reads a matrix from a file or stdin; presets are not matrices")
    M = parse_matrix(_read(value))
    s = snf(M)
    free, torsion = cokernel_structure(M)
    coker = HomologyGroup(free, tuple(torsion))
    data = {
        "shape": [M.rows, M.cols],
        "rank": s.rank,
        "invariant_factors": list(s.diagonal),
        "cokernel": coker.to_dict(),
    }
    lines = [
        f"shape: {M.rows} x {M.cols}",
        f"rank: {s.rank}",
        "invariant factors: " + (" ".join(map(str, s.diagonal)) or "(none)"),
        f"cokernel: {coker}",
    ]
    if args.transforms:
        for name, mat in (("U", s.U), ("D", s.D), ("V", s.V)):
            data[name] = mat.tolist()
            lines.append(f"{name}:")
            lines.extend("  " + " ".join(f"{x:>4}" for x in row) for row in mat.tolist())
    return Output(data, "\n".join(lines))


def _complex_output(K: SimplicialComplex) -> Output:
    return Output(K.to_json(), K.to_text().rstrip("\n"))


def cmd_suspend(args) -> Output:
    K = need_complex(load(args), args.command)
    return _complex_output(sc.suspension(K) if args.command == "suspend" else sc.cone(K))


def _two(args, what: str) -> tuple[SimplicialComplex, SimplicialComplex]:
    sources = getattr(args, "sources", None) or []
    if len(sources) != 2:
        raise InputError(f"{what} needs exactly two inputs (files or --preset), got {len(sources)}")
    return need_complex(load(args, 0), what), need_complex(load(args, 1), what)


def cmd_join(args) -> Output:
    A, B = _two(args, "join")
    return _complex_output(sc.join(A, B))


def cmd_wedge(args) -> Output:
    A, B = _two(args, "wedge")
    v, w = args.at if args.at else (None, None)
    return _complex_output(sc.wedge(A, vertex_index(A, v), B, vertex_index(B, w)))


_TARGET = re.compile(r"([ASC])(\d+)")


def _target_group(name: str) -> FiniteGroup:
    m = _TARGET.fullmatch(name)
    if not m:
        raise InputError(f"target {name!r} must look like A5, S4 or C3")
    family, n = m.group(1), int(m.group(2))
    try:
        return {"A": alternating, "S": symmetric, "C": cyclic_group}[family](n)
    except ValueError as e:
        raise InputError(f"target {name}: {e}") from None


HATCHER_A5 = {"a": "(1 2 3 4 5)", "b": "(2 5 4)"}


def cmd_permcheck(args) -> Output:
    sources = getattr(args, "sources", None) or []
    assign_text = dict(a.split("=", 1) for a in args.assign or [])
    target = args.target
    if sources == [("preset", "hatcher-a5")]:
        P = gp.hatcher()
        assign_text = {**HATCHER_A5, **assign_text}
        target = target or "A5"
    else:
        P = need_presentation(load(args), "permcheck")
    missing = [g for g in P.generator_names if g not in assign_text]
    if missing:
        raise InputError(f"no --assign for generator(s) {', '.join(missing)}")
    extra = sorted(set(assign_text) - set(P.generator_names))
    if extra:
        raise InputError(f"--assign names unknown generator(s) {', '.join(extra)}")
    texts = [assign_text[g] for g in P.generator_names]
    degree = args.degree
    if degree is None:
        degree = max((parse_cycles(t).degree for t in texts), default=1)
    try:
        perms = [parse_cycles(t, degree) for t in texts]
    except ValueError as e:
        raise InputError(f"--assign: {e}") from None
    rows = []
    for r in P.relators:
        value = evaluate(r, perms, degree)
        rows.append({"relator": r.format(P.generator_names), "value": str(value), "holds": value.is_identity()})
    holds = all(row["holds"] for row in rows)
    image = generate(degree, perms, args.cap)
    data = {
        "presentation": str(P),
        "assignment": {g: str(p) for g, p in zip(P.generator_names, perms)},
        "relators": rows,
        "relations_hold": holds,
        "image_order": image.order,
        "image_perfect": is_perfect_finite(image, args.cap),
        "target": None,
        "target_order": None,
        "surjective": None,
    }
    lines = [f"presentation: {P}"]
    lines += [f"  {g} -> {p}" for g, p in zip(P.generator_names, perms)]
    lines += [f"  {row['relator']} -> {row['value']}: {'ok' if row['holds'] else 'FAILS'}" for row in rows]
    lines += [
        f"relations hold: {_yes(holds)}",
        f"image order: {image.order}",
        f"image perfect: {_yes(data['image_perfect'])}",
    ]
    status = 0 if holds else 1
    if target:
        T = _target_group(target)
        if T.degree != degree:
            raise InputError(f"target {target} acts on {T.degree} points, the assignment on {degree}")
        onto = image == T
        data.update(target=target, target_order=T.order, surjective=onto)
        lines.append(f"surjective onto {target} (order {T.order}): {_yes(onto)}")
        if not onto:
            status = 1
    return Output(data, "\n".join(lines), status)


def cmd_verify(args) -> Output:
    rows = verify_paper()
    ok = all(r.passed for r in rows)
    data = {"passed": ok, "rows": [r.to_dict() for r in rows]}
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.criterion:>2}  {r.id:<22} {r.detail}"
        for r in rows
    ]
    lines.append(f"{sum(r.passed for r in rows)}/{len(rows)} rows pass")
    return Output(data, "\n".join(lines), 0 if ok else 1)


def cmd_schema(args) -> Output:
    schema = SCHEMAS[args.name]
    return Output(schema, json.dumps(schema, indent=2))


# argument parsing


class _SourceAction(argparse.Action):
    """Collect ``--preset`` and positional inputs in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        sources = list(getattr(namespace, "sources", None) or [])
        if option_string:
            sources.append(("preset", values))
        else:
            sources.extend(("file", v) for v in values)
        namespace.sources = sources


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text", help="output format")

    single = argparse.ArgumentParser(add_help=False)
    single.add_argument("inputs", nargs="*", action=_SourceAction, metavar="INPUT",
                        help="input file ('-' or none for stdin)")
    single.add_argument("--preset", action=_SourceAction, metavar="NAME",
                        help="use a built-in complex or presentation instead of a file")

    degrees = argparse.ArgumentParser(add_help=False)
    degrees.add_argument("--max-degree", type=int, metavar="N", help="last degree to report")

    parser = argparse.ArgumentParser(
        prog="acyclic",
        description="Homology, abelianization and acyclicity of complexes and group presentations.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    for name, helptext in (("homology", "reduced homology groups"), ("cohomology", "reduced cohomology groups")):
        p = sub.add_parser(name, parents=[common, single, degrees], help=helptext)
        p.add_argument("--unreduced", action="store_true", help="drop the augmentation")
        p.set_defaults(func=cmd_homology)

    p = sub.add_parser("abelianize", parents=[common, single], help="abelianization of a presentation")
    p.set_defaults(func=cmd_abelianize)
    p = sub.add_parser("perfect", parents=[common, single], help="exit 0 iff the group is perfect")
    p.set_defaults(func=cmd_perfect)

    p = sub.add_parser("acyclicity", parents=[common, single, degrees], help="k-acyclicity report")
    p.add_argument("--h-indexing", choices=["section3", "section5"], default="section3",
                   help="indexing of the k-acyclic ladder (default section3)")
    p.add_argument("--k", type=int, help="also decide k-acyclicity; exit 1 if it fails")
    p.set_defaults(func=cmd_acyclicity)

    p = sub.add_parser("pi1", parents=[common, single], help="edge-path presentation of pi_1")
    p.add_argument("--basepoint", metavar="LABEL", help="base vertex label (default: first vertex)")
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("snf", parents=[common, single], help="Smith normal form of an integer matrix")
    p.add_argument("--transforms", action="store_true", help="also print U, D, V with U M V = D")
    p.set_defaults(func=cmd_snf)

    for name, helptext in (("suspend", "suspension (join with S^0)"), ("cone", "cone (join with a point)")):
        p = sub.add_parser(name, parents=[common, single], help=helptext)
        p.set_defaults(func=cmd_suspend)
    p = sub.add_parser("join", parents=[common, single], help="join of two complexes")
    p.set_defaults(func=cmd_join)
    p = sub.add_parser("wedge", parents=[common, single], help="wedge of two complexes")
    p.add_argument("--at", nargs=2, metavar=("V", "W"), help="base vertex labels (default: first vertices)")
    p.set_defaults(func=cmd_wedge)

    p = sub.add_parser("permcheck", parents=[common, single],
                       help="check a permutation representation of a presentation")
    p.add_argument("--assign", action="append", metavar="GEN=CYCLES", help="e.g. a='(1 2 3 4 5)'")
    p.add_argument("--degree", type=int, help="number of points (default: largest point mentioned)")
    p.add_argument("--target", metavar="GROUP", help="A<n>, S<n> or C<n>; check the image equals it")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order to enumerate")
    p.set_defaults(func=cmd_permcheck)

    p = sub.add_parser("verify-paper", parents=[common], help="run the reproducibility table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("schema", help="print the JSON schema of a subcommand's output")
    p.add_argument("name", choices=sorted(SCHEMAS))
    p.set_defaults(func=cmd_schema, format="json")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        out = args.func(args)
    except ParseError as e:
        print(f"acyclic: parse error: {e}", file=sys.stderr)
        return 2
    except GroupCapError as e:
        print(f"acyclic: resource cap exceeded (GroupCapError): {e}", file=sys.stderr)
        return 2
    except (InputError, SimplicialError, gp.PresentationError, ChainComplexError, ValueError) as e:
        print(f"acyclic: error: {e}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(out.data, indent=2, sort_keys=False))
    elif out.text:
        print(out.text)
    return out.status


if __name__ == "__main__":
    sys.exit(main())
