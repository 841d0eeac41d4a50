"""Command-line front end.  Every command prints one JSON CommandResult on stdout.

    primex group info FILE
    primex group affine FILE
    primex cohom FILE --normal GENS | --gl-subgroup JSON
    primex ext complements FILE --normal GENS
    primex enumerate --l L --n N [--out DIR]
    primex quartic classify --coeffs a,b,c,d [--precision K]
    primex quartic scan --mod-bits m

GENS is a ';'-separated list of generators, each as space- or comma-separated
0-based images.  Exit status is 0 iff the status field is "ok".
"""

from __future__ import annotations

import argparse
import json
import sys
import time

__all__ = ["main", "run"]


class CommandError(Exception):
    def __init__(self, code: str, message: str):
        self.code = code
        self.message = message
        super().__init__(f"{code}: {message}")


def _load_group(path: str):
    from .groupio import GroupFileError, read_group

    try:
        return read_group(path)
    except GroupFileError as exc:
        raise CommandError("PARSE", str(exc)) from None
    except OSError as exc:
        raise CommandError("IO", str(exc)) from None


def _parse_gens(text: str, degree: int):
    from .perm import Permutation, PermutationGroup

    gens = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            images = [int(x) for x in chunk.replace(",", " ").split()]
            gens.append(Permutation(images))
        except ValueError as exc:
            raise CommandError("PARSE", f"bad generator {chunk!r}: {exc}") from None
        if len(images) != degree:
            raise CommandError("PARSE", f"generator {chunk!r} has degree {len(images)}, expected {degree}")
    return PermutationGroup(gens, degree=degree)


def cmd_group_info(args) -> dict:
    from .blocks import is_primitive
    from .perm import SUBGROUP_ORDER_GUARD, derived_series, is_maximal, point_stabilizer

    G = _load_group(args.file)
    series = derived_series(G)
    solvable = series[-1].is_trivial()
    transitive = G.is_transitive()
    primitive = is_primitive(G) if G.degree >= 2 else None
    maximal = None
    if G.degree >= 2 and transitive and G.order() <= SUBGROUP_ORDER_GUARD:
        maximal = is_maximal(G, point_stabilizer(G, 0))
    return {
        "degree": G.degree,
        "order": G.order(),
        "transitive": transitive,
        "primitive": primitive,
        "solvable": solvable,
        "derived_length": len(series) - 1 if solvable else None,
        "derived_series_orders": [H.order() for H in series],
        "stabilizer_maximal": maximal,
    }


def cmd_group_affine(args) -> dict:
    from .affine import DefectError, PreconditionError, recover_affine

    G = _load_group(args.file)
    try:
        structure, maps = recover_affine(G)
    except PreconditionError as exc:
        raise CommandError("PRECONDITION", exc.reason) from None
    except DefectError as exc:
        raise CommandError("DEFECT", str(exc)) from None
    return structure.to_json([maps[g] for g in G.generators])


def _gl_rep(text: str):
    from .gf import FlMatrix
    from .modrep import LinearRepresentation, gl_group, matrix_to_perm
    from .perm import PermutationGroup

    try:
        data = json.loads(text)
        l, n = int(data["l"]), int(data["n"])
        mats = [FlMatrix(l, m) for m in data["matrices"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise CommandError("PARSE", f"bad --gl-subgroup value: {exc}") from None
    if any(m.n != n for m in mats):
        raise CommandError("PARSE", "matrix size does not match n")
    if any(not m.is_invertible() for m in mats):
        raise CommandError("PRECONDITION", "matrix is not invertible")
    H = PermutationGroup([matrix_to_perm(m) for m in mats], degree=l**n - 1)
    return LinearRepresentation(l, n, H, mats)


def cmd_cohom(args) -> dict:
    from .cohomology import cohomology
    from .modrep import is_faithful, is_simple, module_from_conjugation

    if args.gl_subgroup:
        rep = _gl_rep(args.gl_subgroup)
    else:
        if not args.file or not args.normal:
            raise CommandError("USAGE", "give FILE with --normal, or --gl-subgroup")
        L = _load_group(args.file)
        N = _parse_gens(args.normal, L.degree)
        try:
            _, rep = module_from_conjugation(L, N)
        except ValueError as exc:
            raise CommandError("PRECONDITION", str(exc)) from None
    report = json.loads(cohomology(rep).to_json())
    report["simple"] = is_simple(rep)
    report["faithful"] = is_faithful(rep)
    return report


def cmd_complements(args) -> dict:
    from .cohomology import ORDER_GUARD, cohomology
    from .extensions import complement_classes, complements, extension

    L = _load_group(args.file)
    N = _parse_gens(args.normal, L.degree)
    try:
        E = extension(L, N)
    except ValueError as exc:
        raise CommandError("PRECONDITION", str(exc)) from None
    comps = complements(E)
    out = {
        "order": L.order(),
        "normal_order": N.order(),
        "count": len(comps),
        "classes": complement_classes(E),
        "split": bool(comps),
        "faithful": E.faithful,
    }
    if E.induced.group.order() <= ORDER_GUARD:
        c = cohomology(E.induced)
        out["cocycle_count"] = E.induced.l**c.z1
        out["h1"] = c.h1
        out["h2"] = c.h2
    return out


def cmd_enumerate(args) -> dict:
    from .classify import solvable_primitive_groups, write_enumeration

    entries = solvable_primitive_groups(args.l, args.n)
    if args.out:
        return write_enumeration(entries, args.out, args.l, args.n)
    return {"l": args.l, "n": args.n, "count": len(entries), "entries": [e.to_json() for e in entries]}


def cmd_quartic_classify(args) -> dict:
    from .dyadic import classify_quartic

    try:
        a, b, c, d = (int(x) for x in args.coeffs.split(","))
    except ValueError:
        raise CommandError("PARSE", f"expected four comma-separated integers, got {args.coeffs!r}") from None
    return classify_quartic(a, b, c, d, precision=args.precision).to_json()


def cmd_quartic_scan(args) -> dict:
    from .dyadic import eisenstein_scan

    return eisenstein_scan(args.mod_bits).to_json()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primex", description="Solvable primitive groups toolkit")
    parser.add_argument("--timing", action="store_true", help="include elapsed_ms in the result")
    sub = parser.add_subparsers(dest="command", required=True)

    group = sub.add_parser("group").add_subparsers(dest="action", required=True)
    p = group.add_parser("info")
    p.add_argument("file")
    p.set_defaults(func=cmd_group_info)
    p = group.add_parser("affine")
    p.add_argument("file")
    p.set_defaults(func=cmd_group_affine)

    p = sub.add_parser("cohom")
    p.add_argument("file", nargs="?")
    p.add_argument("--normal")
    p.add_argument("--gl-subgroup", help='JSON like {"l":2,"n":2,"matrices":[[[0,1],[1,1]]]}')
    p.set_defaults(func=cmd_cohom)

    ext = sub.add_parser("ext").add_subparsers(dest="action", required=True)
    p = ext.add_parser("complements")
    p.add_argument("file")
    p.add_argument("--normal", required=True)
    p.set_defaults(func=cmd_complements)

    p = sub.add_parser("enumerate")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    quartic = sub.add_parser("quartic").add_subparsers(dest="action", required=True)
    p = quartic.add_parser("classify")
    p.add_argument("--coeffs", required=True, help="a,b,c,d for x^4+ax^3+bx^2+cx+d (use --coeffs=-1,...)")
    p.add_argument("--precision", type=int, default=64)
    p.set_defaults(func=cmd_quartic_classify)
    p = quartic.add_parser("scan")
    p.add_argument("--mod-bits", type=int, required=True)
    p.set_defaults(func=cmd_quartic_scan)
    return parser


def run(argv: list[str]) -> tuple[dict, int]:
    """Execute one command; return the CommandResult dict and the exit code."""
    from .affine import DefectError
    from .dyadic import PrecisionError
    from .perm import GuardError

    parser = build_parser()
    args = parser.parse_args(argv)
    result: dict = {"command": list(argv)}
    start = time.perf_counter()
    try:
        result["payload"] = args.func(args)
        result["status"] = "ok"
    except CommandError as exc:
        result.update(status="error", error={"code": exc.code, "message": exc.message})
    except GuardError as exc:
        result.update(status="error", error={"code": "GUARD", "message": str(exc), "limit": exc.limit})
    except PrecisionError as exc:
        result.update(status="error", error={"code": "PRECISION", "message": str(exc)})
    except DefectError as exc:
        result.update(status="error", error={"code": "DEFECT", "message": str(exc)})
    if args.timing:
        result["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return result, 0 if result["status"] == "ok" else 1


def main(argv: list[str] | None = None) -> int:
    result, code = run(sys.argv[1:] if argv is None else argv)
    json.dump(result, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
