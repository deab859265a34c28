"""Command-line interface.

Subcommands: check, invariants, cohomology, autos, extend, orbits, iso,
decompose, catalog, oracle, verify-paper.  Exit codes: 0 pass, 1 check
failure, 2 usage or parse error, 3 inconclusive (rational isomorphism
unknown).
"""

from __future__ import annotations

import argparse
import sys

from . import catalog as cat
from . import core, verify
from .algebra import Algebra, PreconditionError
from .bilinear import cohomology, format_form, parse_form
from .extensions import ExtensionSpec, central_extension, decompose, enumerate_orbits
from .fields import QQ, FieldError, parse_field
from .fileformat import (
    FormatError,
    ParametricTable,
    format_algebra,
    parse_algebra,
    table_lines,
)
from .morphisms import SearchBoundExceeded, enumerate_automorphisms, is_isomorphic
from .oracle import PREDICATES, EnumerationTask, cross_validate, enumerate_bruteforce

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _parse_sets(pairs):
    bindings = {}
    for pair in pairs or ():
        name, sep, value = pair.partition("=")
        if not sep:
            raise CliError(f"--set expects name=value, got {pair!r}")
        bindings[name.strip()] = value.strip()
    return bindings


def _load_algebra(path, field_text=None, set_pairs=None) -> Algebra:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc}")
    try:
        parsed = parse_algebra(text)
    except FormatError as exc:
        raise CliError(f"{path}: {exc}")
    field = parse_field(field_text) if field_text else None
    bindings = _parse_sets(set_pairs)
    if isinstance(parsed, ParametricTable):
        use_field = field or parsed.field
        if use_field is None:
            raise CliError(f"{path}: parametric table needs --field")
        try:
            return parsed.instantiate(use_field, bindings)
        except (FormatError, FieldError, ZeroDivisionError) as exc:
            raise CliError(f"{path}: {exc}")
    if bindings:
        raise CliError(f"{path}: --set given but the table has no parameters")
    if field is not None and parsed.field != field:
        # reinterpret the table over the requested field
        try:
            return Algebra(
                field,
                parsed.dim,
                [
                    [[field.of(c) for c in row] for row in plane]
                    for plane in parsed.sc
                ],
            )
        except (FieldError, ZeroDivisionError) as exc:
            raise CliError(f"{path}: cannot reinterpret over {field}: {exc}")
    return parsed


def cmd_check(args):
    A = _load_algebra(args.file, args.field, args.set)
    violations = A.bicommutativity_violations()
    for kind, i, j, k, lhs, rhs in violations[:20]:
        ident = "(xy)z=(xz)y" if kind == "right" else "x(yz)=y(xz)"
        print(f"violation of {ident} at (e{i}, e{j}, e{k}): {lhs} != {rhs}")
    bic = not violations
    nil = A.is_nilpotent()
    one = nil and A.is_one_generated()
    print(f"bicommutative: {'yes' if bic else 'no'}")
    print(f"nilpotent: {'yes' if nil else 'no'}")
    print(f"one-generated: {'yes' if one else 'no' if nil else 'n/a (not nilpotent)'}")
    return EXIT_OK if (bic and nil and one) else EXIT_FAIL


def cmd_invariants(args):
    A = _load_algebra(args.file, args.field, args.set)
    filt = [s.dim for s in A.power_filtration()]
    print(f"dim: {A.dim}")
    print(f"power filtration dims: {filt}")
    print(f"annihilator dim: {A.annihilator().dim}")
    print(f"left annihilator dim: {A.left_annihilator().dim}")
    print(f"right annihilator dim: {A.right_annihilator().dim}")
    if A.is_bicommutative():
        space = cohomology(A)
        print(f"dim Z^2: {space.dim_z2}")
        print(f"dim B^2: {space.dim_b2}")
        print(f"dim H^2: {space.dim_h2}")
    return EXIT_OK


def cmd_cohomology(args):
    A = _load_algebra(args.file, args.field, args.set)
    if not A.is_bicommutative():
        raise CliError("algebra is not bicommutative", EXIT_FAIL)
    space = cohomology(A)
    print(f"dim Z^2 = {space.dim_z2}")
    for form in space.z2:
        print(f"  Z2: {format_form(form)}")
    print(f"dim B^2 = {space.dim_b2}")
    for form in space.b2:
        print(f"  B2: {format_form(form)}")
    print(f"dim H^2 = {space.dim_h2}")
    for form in space.h2_reps:
        print(f"  H2 rep: {format_form(form)}")
    return EXIT_OK


def cmd_autos(args):
    A = _load_algebra(args.file, args.field, args.set)
    try:
        autos = enumerate_automorphisms(A)
    except (PreconditionError, SearchBoundExceeded) as exc:
        raise CliError(str(exc), EXIT_FAIL)
    print(f"automorphism group order: {len(autos)}")
    if args.matrices:
        for phi in autos:
            print(";".join(",".join(str(x) for x in row) for row in phi.matrix))
    return EXIT_OK


def cmd_extend(args):
    A = _load_algebra(args.file, args.field, args.set)
    forms = []
    for text in args.cocycle:
        try:
            forms.append(parse_form(A.field, A.dim, text))
        except ValueError as exc:
            raise CliError(str(exc))
    try:
        ext = central_extension(ExtensionSpec(A, tuple(forms)))
    except PreconditionError as exc:
        raise CliError(str(exc), EXIT_FAIL)
    sys.stdout.write(format_algebra(ext, name=args.name))
    return EXIT_OK


def cmd_orbits(args):
    A = _load_algebra(args.file, args.field, args.set)
    try:
        report = enumerate_orbits(A, args.ext_dim)
    except (PreconditionError, SearchBoundExceeded) as exc:
        raise CliError(str(exc), EXIT_FAIL)
    print(report.format())
    return EXIT_OK


def cmd_iso(args):
    A = _load_algebra(args.file1, args.field, args.set)
    B = _load_algebra(args.file2, args.field, args.set2)
    try:
        result = is_isomorphic(A, B)
    except (PreconditionError, SearchBoundExceeded) as exc:
        raise CliError(str(exc), EXIT_FAIL)
    print(f"isomorphic: {result.verdict}")
    if result.witness is not None:
        for row in result.witness.matrix:
            print("  " + " ".join(A.field.format(x) for x in row))
    if result.reason:
        print(f"reason: {result.reason}")
    if result.verdict == "yes":
        return EXIT_OK
    if result.verdict == "no":
        return EXIT_FAIL
    return EXIT_UNKNOWN


def cmd_decompose(args):
    A = _load_algebra(args.file, args.field, args.set)
    try:
        parent, spec, witness = decompose(A)
    except PreconditionError as exc:
        raise CliError(str(exc), EXIT_FAIL)
    print(f"annihilator dim: {spec.s}")
    for t, form in enumerate(spec.theta, 1):
        print(f"cocycle {t}: {format_form(form)}")
    sys.stdout.write(format_algebra(parent, name="parent"))
    return EXIT_OK


def cmd_catalog(args):
    if args.action == "list":
        for name in cat.list_entries(args.dim):
            entry = cat.get(name)
            params = f"({', '.join(entry.params)})" if entry.params else ""
            print(f"{name}{params}  dim {entry.dim}")
        return EXIT_OK
    entry = cat.get(args.name)
    if args.action == "show":
        params = f"({', '.join(entry.params)})" if entry.params else ""
        print(f"{entry.name}{params}  dim {entry.dim}")
        for line in entry.table:
            print(f"  {line}")
        if entry.provenance:
            prov = entry.provenance
            binds = ", ".join(f"{k}={v}" for k, v in prov.parent_bindings)
            print(f"constructed from {prov.parent}" + (f" at {binds}" if binds else ""))
        return EXIT_OK
    # export
    field = parse_field(args.field) if args.field else QQ
    bindings = _parse_sets(args.set)
    try:
        A = cat.instantiate(args.name, {k: field.parse(v) for k, v in bindings.items()}, field)
    except (cat.ConstraintViolation, FieldError) as exc:
        raise CliError(str(exc))
    sys.stdout.write(format_algebra(A, name=args.name))
    return EXIT_OK


def cmd_oracle(args):
    field = parse_field(args.field) if args.field else parse_field("GF(2)")
    predicates = frozenset(args.predicates or PREDICATES)
    try:
        task = EnumerationTask(field, args.dim, predicates)
    except ValueError as exc:
        raise CliError(str(exc))
    if args.cross_validate:
        if predicates != frozenset(PREDICATES):
            raise CliError("--cross-validate runs with all three predicates")
        report = cross_validate(args.dim, field, threads=args.threads,
                                checkpoint=args.checkpoint)
        print(report.format())
        return EXIT_OK if report.ok else EXIT_FAIL
    classes = enumerate_bruteforce(task, threads=args.threads,
                                   checkpoint=args.checkpoint)
    print(f"{task.total_tables()} tables scanned; "
          f"{len(classes)} isomorphism classes satisfy {sorted(predicates)}")
    for i, alg in enumerate(classes, 1):
        lines = table_lines(alg)
        print(f"class {i}: {'; '.join(lines) if lines else 'zero algebra'}")
    return EXIT_OK


def cmd_verify_paper(args):
    scopes = args.scope or list(verify.SCOPES)
    for scope in scopes:
        if scope not in verify.SCOPES:
            raise CliError(f"unknown scope {scope!r}; choose from {sorted(verify.SCOPES)}")
    primes = [int(p) for p in args.field] if args.field else None
    results = verify.run_scopes(scopes, primes=primes, threads=args.threads)
    all_ok = True
    for res in results:
        print(res.format())
        print()
        all_ok = all_ok and res.passed
    passed = sum(1 for r in results if r.passed)
    print(f"summary: {passed}/{len(results)} checks passed")
    return EXIT_OK if all_ok else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nilext",
        description="Exact computations with nilpotent bicommutative algebras: "
        "cohomology, central extensions, automorphisms, isomorphism, and "
        "machine verification of the built-in classification catalog.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, file_args=("file",)):
        for fa in file_args:
            p.add_argument(fa, help="algebra file (or - for stdin)")
        p.add_argument("--field", help="field override: Q or GF(p)")
        p.add_argument("--set", action="append", metavar="PARAM=VALUE",
                       help="bind a table parameter (repeatable)")

    p = sub.add_parser("check", help="bicommutative / nilpotent / one-generated report")
    common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("invariants", help="isomorphism-invariant summary")
    common(p)
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("cohomology", help="bases of Z^2, B^2 and H^2 representatives")
    common(p)
    p.set_defaults(fn=cmd_cohomology)

    p = sub.add_parser("autos", help="enumerate automorphisms over GF(p)")
    common(p)
    p.add_argument("--matrices", action="store_true", help="print the matrices")
    p.set_defaults(fn=cmd_autos)

    p = sub.add_parser("extend", help="build a central extension from cocycles")
    common(p)
    p.add_argument("--cocycle", action="append", required=True,
                   metavar="FORM", help="cocycle in D(i,j) syntax (repeatable)")
    p.add_argument("--name", default="extension", help="name for the output algebra")
    p.set_defaults(fn=cmd_extend)

    p = sub.add_parser("orbits", help="automorphism orbits on T_s over GF(p)")
    common(p)
    p.add_argument("--ext-dim", type=int, default=1, metavar="S",
                   help="extension dimension s (default 1)")
    p.set_defaults(fn=cmd_orbits)

    p = sub.add_parser("iso", help="isomorphism test (exact over GF(p))")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--field", help="field override: Q or GF(p)")
    p.add_argument("--set", action="append", metavar="PARAM=VALUE",
                   help="parameters for the first file")
    p.add_argument("--set2", action="append", metavar="PARAM=VALUE",
                   help="parameters for the second file")
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("decompose", help="split off the annihilator as a central extension")
    common(p)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("catalog", help="browse the built-in catalog")
    catsub = p.add_subparsers(dest="action", required=True)
    pl = catsub.add_parser("list", help="list entries")
    pl.add_argument("--dim", type=int)
    ps = catsub.add_parser("show", help="print an entry's table")
    ps.add_argument("name")
    pe = catsub.add_parser("export", help="emit an entry as an algebra file")
    pe.add_argument("name")
    pe.add_argument("--field", help="target field (default Q)")
    pe.add_argument("--set", action="append", metavar="PARAM=VALUE")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("oracle", help="brute-force enumeration of tiny algebras")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--field", help="GF(2) (default) or GF(3)")
    p.add_argument("--predicates", nargs="*", choices=PREDICATES,
                   help="filters (default: all three)")
    p.add_argument("--cross-validate", action="store_true",
                   help="compare against the extension pipeline")
    p.add_argument("--threads", type=int, default=core.default_threads())
    p.add_argument("--checkpoint", help="JSON checkpoint file for long scans")
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("verify-paper", help="run the catalog verification suites")
    p.add_argument("--scope", action="append", choices=sorted(verify.SCOPES),
                   help="restrict to a scope (repeatable; default all)")
    p.add_argument("--field", action="append", metavar="P",
                   help="primes for the distinctness scope (default 7 11)")
    p.add_argument("--threads", type=int, default=core.default_threads())
    p.set_defaults(fn=cmd_verify_paper)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (FormatError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
