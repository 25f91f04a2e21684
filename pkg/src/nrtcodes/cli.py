"""Command-line interface: ``nrtcodes <subcommand> [options]``.

Exit status is 0 on success, 1 on domain errors (bad code file, cap exceeded,
failed verification) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as cons
from .algebra.poly import jacobian_matrix, parse_poly
from .algebra.field import is_prime
from .core import (NrtCode, codes_equivalent, default_enum_cap, dual_code,
                   format_code, is_self_dual, is_self_orthogonal, read_code)
from .errors import NrtError
from .invariants import (express_in_basis, invariant_space_basis, is_invariant,
                         jacobian_independent, known_bases, molien_series,
                         named_group, reynolds)
from .shape_enum import (macwilliams_transform, shape_enumerator, theta_matrix,
                         verify_theta_properties)


class UsageError(Exception):
    pass


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def _write_code(args, C: NrtCode) -> str:
    text = format_code(C)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def _code_payload(C: NrtCode):
    return {"q": C.q, "n": C.n, "s": C.s, "k": C.k,
            "generator": [list(r) for r in C.gen]}


# -- subcommands ------------------------------------------------------------

def cmd_shape_enum(args):
    C = read_code(args.code)
    H = shape_enumerator(C)
    _emit(args, str(H), {"enumerator": str(H), "terms": H.to_json(),
                         "size": C.size})


def cmd_dual(args):
    C = read_code(args.code)
    D = dual_code(C)
    text = _write_code(args, D)
    _emit(args, text.rstrip("\n"), {**_code_payload(D),
                                    "self_dual": is_self_dual(C),
                                    "self_orthogonal": is_self_orthogonal(C)})


def cmd_macwilliams(args):
    if args.code:
        C = read_code(args.code)
        H = shape_enumerator(C).poly
        q, size = C.q, C.size
    else:
        if args.poly is None or args.q is None or args.size is None:
            raise UsageError("give --code, or --poly with --q and --size")
        H = parse_poly(args.poly, args.s + 1 if args.s else None)
        q, size = args.q, args.size
    out = macwilliams_transform(H, q, size)
    _emit(args, str(out), {"dual_enumerator": str(out), "terms": out.to_json()})


def cmd_theta(args):
    T = theta_matrix(args.s, args.q)
    lines = [str(T)]
    payload = {"s": args.s, "q": args.q, "matrix": [list(r) for r in T.entries]}
    if args.verify:
        spec = verify_theta_properties(args.s, args.q)
        lines.append(spec.summary())
        lines += [f"{name}: {'OK' if ok else 'FAIL'}"
                  for name, ok in spec.checks.items()]
        payload.update(trace=spec.trace, det=spec.det, charpoly=spec.charpoly,
                       r1=spec.r1, r2=spec.r2, checks=spec.checks)
    _emit(args, "\n".join(lines), payload)


def cmd_molien(args):
    G = named_group(args.group, args.s)
    M = molien_series(G, args.degree)
    lines = [M.closed.factored_str(), "degree  count"]
    lines += [f"{d:>6}  {c}" for d, c in enumerate(M.coeffs)]
    _emit(args, "\n".join(lines), {
        "group": args.group, "order": G.order, "series": M.closed.factored_str(),
        "numerator": M.closed.num.to_str(), "denominator": M.closed.den.to_str(),
        "coefficients": list(M.coeffs)})


def cmd_reynolds(args):
    G = named_group(args.group, args.s)
    f = parse_poly(args.poly, G.dim)
    out = reynolds(G, f, args.mode)
    _emit(args, str(out), {"input": str(f), "mode": args.mode, "result": str(out),
                           "invariant": is_invariant(G, out)})


def cmd_invariant_basis(args):
    G = named_group(args.group, args.s)
    basis = invariant_space_basis(G, args.degree)
    text = "\n".join(str(p) for p in basis) if basis else "(no invariants)"
    _emit(args, text, {"group": args.group, "degree": args.degree,
                       "basis": [str(p) for p in basis]})


def cmd_jacobian(args):
    fs = [parse_poly(t, args.nvars) for t in args.polys]
    nvars = max(f.nvars for f in fs)
    fs = [parse_poly(t, nvars) for t in args.polys]
    J = jacobian_matrix(fs)
    indep = jacobian_independent(fs)
    rows = [[str(e) for e in r] for r in J]
    lines = ["[" + ", ".join(r) + "]" for r in rows]
    lines.append(f"independent={'true' if indep else 'false'}")
    _emit(args, "\n".join(lines), {"jacobian": rows, "independent": indep})


def cmd_classify(args):
    fams = cons.classify_ns4(args.q)
    manifest = {"q": args.q, "families": [f.to_json() for f in fams]}
    if args.check:
        manifest["completeness"] = {}
        for n, s in ((1, 4), (2, 2), (4, 1)):
            rep = cons.classification_completeness(args.q, n, s, fams)
            manifest["completeness"][f"M_{n},{s}"] = {
                "self_dual_codes": rep.total, "matched": rep.matched,
                "class_counts": rep.class_counts,
                "unmatched": [[list(r) for r in C.gen] for C in rep.unmatched]}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(manifest, fh, indent=2, ensure_ascii=False)
    lines = []
    for f in fams:
        dup = f" (= {f.duplicate_of})" if f.duplicate_of else ""
        gen = " / ".join(" ".join(map(str, r)) for r in f.generator)
        lines.append(f"{f.label:<14} M_{{{f.code.n},{f.code.s}}}  {gen}{dup}")
    for key, rep in manifest.get("completeness", {}).items():
        lines.append(f"{key}: {rep['matched']}/{rep['self_dual_codes']} self-dual "
                     f"codes equivalent to a listed family")
    _emit(args, "\n".join(lines), manifest)


def cmd_construct(args):
    codes = [read_code(p) for p in args.code]
    kind = args.kind
    if kind in ("co", "cort", "cn") and len(codes) != 1:
        raise UsageError(f"{kind} takes exactly one --code")
    if kind == "interleave" and len(codes) != 2:
        raise UsageError("interleave takes exactly two --code")
    if kind == "co":
        out = cons.construct_co(codes[0])
    elif kind == "cort":
        out = cons.construct_cort(codes[0])
    elif kind == "cn":
        out = cons.construct_cn(codes[0])
    elif kind == "interleave":
        out = cons.construct_interleave(*codes)
    else:
        out = cons.construct_padded_concat(codes)
    text = _write_code(args, out)
    _emit(args, text.rstrip("\n"), {**_code_payload(out),
                                    "self_dual": is_self_dual(out),
                                    "self_orthogonal": is_self_orthogonal(out)})


def cmd_equivalent(args):
    if len(args.code) != 2:
        raise UsageError("equivalent takes exactly two --code")
    a, b = (read_code(p) for p in args.code)
    eq = codes_equivalent(a, b)
    _emit(args, "true" if eq else "false", {"equivalent": eq})


def cmd_known_bases(args):
    bases = known_bases()
    names = [args.group.upper()] if args.group else list(bases)
    payload = {}
    lines = []
    for name in names:
        B = bases[name]
        entry = []
        lines.append(f"{name}:")
        for label, p, d, kind in zip(B.labels, B.polys, B.degrees, B.kinds):
            lines.append(f"  {label} ({kind}, degree {d}) = {p}")
            entry.append({"name": label, "kind": kind, "degree": d, "poly": str(p)})
        payload[name] = entry
    if args.express or args.code:
        B = bases[names[0]]
        if args.code:
            H = shape_enumerator(read_code(args.code)).poly
        else:
            H = parse_poly(args.express, B.polys[0].nvars)
        expr = express_in_basis(H, B)
        lines.append(f"{H} = {expr}")
        payload["expression"] = {"poly": str(H), "in_basis": str(expr)}
    _emit(args, "\n".join(lines), payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nrtcodes", description="Exact toolkit for linear codes in the NRT metric.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shape-enum", parents=[common], help="shape enumerator of a code")
    p.add_argument("--code", required=True)
    p.set_defaults(func=cmd_shape_enum)

    p = sub.add_parser("dual", parents=[common], help="NRT dual of a code")
    p.add_argument("--code", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("macwilliams", parents=[common],
                       help="dual enumerator via the Θ transform")
    p.add_argument("--code")
    p.add_argument("--poly")
    p.add_argument("--s", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--size", type=int)
    p.set_defaults(func=cmd_macwilliams)

    p = sub.add_parser("theta", parents=[common], help="the Θ_s matrix")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_theta)

    groups = ["g1", "g2", "g3", "theta", "theta-pm", "selfdual"]
    for name, func, helptext in (
            ("molien", cmd_molien, "Molien series of a group"),
            ("reynolds", cmd_reynolds, "Reynolds operator"),
            ("invariant-basis", cmd_invariant_basis, "basis of degree-d invariants")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--group", choices=groups, required=True)
        p.add_argument("--s", type=int, default=2, help="for theta groups")
        if name == "reynolds":
            p.add_argument("--poly", required=True)
            p.add_argument("--mode", choices=["sum", "average"], default="average")
        else:
            p.add_argument("--degree", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("jacobian", parents=[common], help="Jacobian independence test")
    p.add_argument("polys", nargs="+")
    p.add_argument("--nvars", type=int)
    p.set_defaults(func=cmd_jacobian)

    p = sub.add_parser("classify", parents=[common],
                       help="bidimensional self-dual families (ns = 4)")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--check", action="store_true",
                   help="also match every self-dual code against the families")
    p.add_argument("--out", help="write the JSON manifest here")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", parents=[common], help="build a code")
    p.add_argument("kind", choices=["co", "cort", "cn", "interleave", "padded"])
    p.add_argument("--code", action="append", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("equivalent", parents=[common], help="isometry equivalence")
    p.add_argument("--code", action="append", required=True)
    p.set_defaults(func=cmd_equivalent)

    p = sub.add_parser("known-bases", parents=[common], help="invariant bases G1, G2, G3")
    p.add_argument("--group", choices=["g1", "g2", "g3"])
    p.add_argument("--express", help="polynomial to express in the basis")
    p.add_argument("--code", help="express this code's enumerator in the basis")
    p.set_defaults(func=cmd_known_bases)
    return parser


def _validate(args) -> None:
    for name in ("s", "nvars"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            raise UsageError(f"--{name} must be positive")
    if getattr(args, "degree", None) is not None and args.degree < 0:
        raise UsageError("--degree must be nonnegative")
    q = getattr(args, "q", None)
    if q is not None and not is_prime(q):
        raise UsageError(f"--q must be prime, got {q}")
    if getattr(args, "size", None) is not None and args.size < 1:
        raise UsageError("--size must be positive")
    try:
        default_enum_cap()
    except NrtError as exc:
        raise UsageError(str(exc)) from None


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _validate(args)
        args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (NrtError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
