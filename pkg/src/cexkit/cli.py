"""Command-line front end: ``cexkit <subcommand> ...``.

Exit codes: 0 when every check passes, 1 on a verification failure, 2 on
usage, format or guard errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import (AlgebraError, FormatError, algebra_from_text, algebra_to_text, fingerprint,
                      invariant_signature, is_iso_witness)
from .catalog import CatalogError, FILIFORM_BASES, make_algebra, parse_spec
from .cohomology import (Cocycle, CohomologyError, cocycle_from_text, cocycle_to_text, cohomology_basis,
                         vector_to_form)
from .exact import Matrix, format_scalar, scalar
from .extension import ExtensionError, central_extend, reconstruct
from .orbitlab import OrbitError, ff_iso_search, verify_action, verify_t_list


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_algebra(arg: str):
    """A file path if it exists, otherwise a catalog spec like ``mu1_1:5``."""
    if os.path.exists(arg):
        return algebra_from_text(_read(arg))
    if ":" not in arg:
        raise UsageError(f"{arg!r} is neither an existing file nor a catalog spec <family>:<n>")
    return make_algebra(parse_spec(arg))


def matrix_to_text(m: Matrix) -> str:
    rows = [[format_scalar(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]
    body = ",\n".join("    " + json.dumps(r) for r in rows)
    return '{\n  "rows": [\n%s\n  ]\n}\n' % body


def matrix_from_text(text: str) -> Matrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"matrix file is not valid JSON: {exc}") from None
    rows = doc.get("rows") if isinstance(doc, dict) else None
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise FormatError("matrix file needs a non-empty list field 'rows'")
    try:
        vals = [[scalar(x) for x in r] for r in rows]
        return Matrix.from_rows(vals)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad matrix entries: {exc}") from None


def _emit(text: str, out: str | None = None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _form_terms(m: Matrix) -> str:
    terms = []
    for i in range(m.rows):
        for j in range(m.cols):
            c = m[i, j]
            if c:
                terms.append(f"{'' if c == 1 else '-' if c == -1 else str(c) + '·'}Δ{i + 1},{j + 1}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


# ---------------------------------------------------------------------------
# subcommands


def cmd_cohomology(args) -> int:
    a = load_algebra(args.alg)
    cb = cohomology_basis(a)
    n = a.dim
    z2 = [vector_to_form(v, n) for v in cb.z2.vectors()]
    b2 = [vector_to_form(v, n) for v in cb.b2.vectors()]
    h2 = list(cb.h2_reps)
    if args.machine:
        doc = {"dims": list(cb.dims)}
        for key, forms in (("z2", z2), ("b2", b2), ("h2", h2)):
            doc[key] = json.loads(cocycle_to_text(Cocycle(n, tuple(forms)))) if forms else \
                {"dim": n, "components": []}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
        return 0
    print(f"dims {cb.dims}")
    for title, forms in (("Z2 basis", z2), ("B2 basis", b2), ("H2 representatives", h2)):
        print(f"{title}:")
        for k, f in enumerate(forms, 1):
            print(f"  {k}: {_form_terms(f)}")
    return 0


def cmd_extend(args) -> int:
    a = load_algebra(args.alg)
    theta = cocycle_from_text(_read(args.cocycle))
    if theta.source_dim != a.dim:
        raise UsageError(f"cocycle is on dimension {theta.source_dim}, algebra has dimension {a.dim}")
    _emit(algebra_to_text(central_extend(a, theta)), args.output)
    return 0


def cmd_catalog(args) -> int:
    sys.stdout.write(algebra_to_text(make_algebra(parse_spec(args.spec))))
    return 0


def cmd_fingerprint(args) -> int:
    a = load_algebra(args.alg)
    fp = fingerprint(a)
    if args.machine:
        doc = fp.as_dict()
        if args.refined:
            doc["refined_signature"] = repr(invariant_signature(a))
        sys.stdout.write(json.dumps(doc) + "\n")
        return 0
    for k, v in fp.as_dict().items():
        print(f"{k}: {tuple(v) if isinstance(v, list) else v}")
    if args.refined:
        print(f"refined signature: {invariant_signature(a)}")
    return 0


def cmd_iso_witness(args) -> int:
    a, b = load_algebra(args.a), load_algebra(args.b)
    p = matrix_from_text(_read(args.matrix))
    if p.rows != b.dim or p.cols != a.dim:
        print(f"matrix is {p.rows}x{p.cols}, expected {b.dim}x{a.dim}: not a witness")
        return 1
    ok = is_iso_witness(a, b, p)
    print("verified: the matrix is an isomorphism" if ok else "not an isomorphism")
    return 0 if ok else 1


def cmd_iso_search(args) -> int:
    a, b = load_algebra(args.a), load_algebra(args.b)
    res = ff_iso_search(a, b, args.field)
    if args.machine:
        sys.stdout.write(json.dumps({"p": res.p, "dim": res.dim, "examined": res.examined,
                                     "route": res.route, "witness": res.witness}) + "\n")
    else:
        print("\n".join(res.lines()))
    return 0 if res.found else 1


def cmd_reconstruct(args) -> int:
    b = load_algebra(args.alg)
    a2, theta, w = reconstruct(b)
    if args.machine:
        doc = {"algebra": json.loads(algebra_to_text(a2)), "cocycle": json.loads(cocycle_to_text(theta)),
               "witness": json.loads(matrix_to_text(w))}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
        return 0
    print("quotient algebra:")
    sys.stdout.write(algebra_to_text(a2))
    print("cocycle:")
    sys.stdout.write(cocycle_to_text(theta))
    print("witness (input basis -> extension basis):")
    sys.stdout.write(matrix_to_text(w))
    return 0


def _check_family_arg(fam: str):
    if fam not in FILIFORM_BASES:
        raise CatalogError(f"unknown filiform family {fam!r}; expected one of {', '.join(FILIFORM_BASES)}")


def cmd_verify_action(args) -> int:
    _check_family_arg(args.family)
    rep = verify_action(args.family, args.n)
    print("\n".join(rep.lines()))
    return 0 if rep.ok else 1


def cmd_verify_classification(args) -> int:
    _check_family_arg(args.family)
    rep = verify_t_list(args.family, args.n, args.s)
    if rep.error:
        raise OrbitError(rep.error)
    print("\n".join(rep.lines(verbose=args.verbose)))
    return 0 if rep.ok else 1


def cmd_reproduce(args) -> int:
    from . import acceptance
    results = []
    for crit in acceptance.CRITERIA:
        res = crit(n=args.n) if crit is acceptance.criterion_theorems else crit()
        results.append(res)
        print(res.line(), flush=True)
        for d in res.details:
            print("    " + d)
    ok = all(r.passed for r in results)
    print(f"{sum(r.passed for r in results)}/{len(results)} criteria pass")
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subparser default from overwriting a flag given before the subcommand
    common.add_argument("--machine", action="store_true", default=argparse.SUPPRESS, help="structured output")
    parser = argparse.ArgumentParser(prog="cexkit", parents=[common],
                                     description="Central extensions of nilpotent associative algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("cohomology", cmd_cohomology, "dims and bases of Z2, B2, H2")
    p.add_argument("alg")
    p = add("extend", cmd_extend, "central extension by a cocycle file")
    p.add_argument("alg")
    p.add_argument("--cocycle", required=True)
    p.add_argument("-o", "--output")
    p = add("catalog", cmd_catalog, "emit a family algebra file")
    p.add_argument("spec")
    p = add("fingerprint", cmd_fingerprint, "isomorphism invariants")
    p.add_argument("alg")
    p.add_argument("--refined", action="store_true", help="also print the refined invariant signature")
    p = add("iso-witness", cmd_iso_witness, "verify an isomorphism matrix A -> B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--matrix", required=True)
    p = add("iso-search", cmd_iso_search, "finite-field isomorphism search (dim <= 5)")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--field", type=int, required=True)
    p = add("reconstruct", cmd_reconstruct, "write an algebra as a central extension")
    p.add_argument("alg")
    p = add("verify-action", cmd_verify_action, "symbolic action check")
    p.add_argument("family")
    p.add_argument("--n", type=int, required=True)
    p = add("verify-classification", cmd_verify_classification, "orbit cases and T_s matching")
    p.add_argument("family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--verbose", action="store_true")
    p = add("reproduce-paper", cmd_reproduce, "run every acceptance check")
    p.add_argument("--n", type=int, default=5)
    return parser


ERRORS = (
    (FormatError, "malformed input"),
    (CatalogError, "catalog error"),
    (OrbitError, "guard violation"),
    (ExtensionError, "extension error"),
    (CohomologyError, "cocycle error"),
    (AlgebraError, "algebra error"),
    (UsageError, "usage error"),
)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    args.machine = getattr(args, "machine", False)
    try:
        return args.func(args)
    except tuple(cls for cls, _ in ERRORS) as exc:
        kind = next(label for cls, label in ERRORS if isinstance(exc, cls))
        print(f"cexkit: {kind}: {exc}", file=sys.stderr)
        return 2


def run(argv) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
