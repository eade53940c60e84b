"""Command-line front end.

Subcommands:
  construct   build one code, write its generator matrix, print `n k d`
  survey      enumerate all abelian codes of F_q[C_{p^m} x C_2]
  verify      run the named verification checks
  compare     check constructed codes against a reference table `n k d_best`

Exit codes: 0 success, 2 inadmissible parameters, 3 enumeration budget
exceeded, 4 I/O failure, 5 malformed reference table.  Identical inputs
produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import re
import sys

from .codes import DEFAULT_BUDGET, BudgetExceededError, left_ideal_code, subgroup_pair_code
from .ff import InadmissibleParameters, PrimeField, check_admissible
from .groups import DihedralGroup
from .idempotents import central_idempotents, matrix_units, noncentral_generator
from .survey import abelian_catalog, enumerate_abelian_codes, write_survey_table
from .verify import CHECK_NAMES, run_checks

EXIT_OK = 0
EXIT_INADMISSIBLE = 2
EXIT_BUDGET = 3
EXIT_IO = 4
EXIT_BAD_TABLE = 5

_SUBGROUP_SPEC = re.compile(r"^(h|hstar)(\d+)$")


def _add_common(parser):
    parser.add_argument("--q", type=int, required=True, help="field size (prime)")
    parser.add_argument("--p", type=int, required=True, help="odd prime p")
    parser.add_argument("--m", type=int, required=True, help="exponent m >= 1")
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="enumeration budget on q^k (only gates whether a value is computed)",
    )
    parser.add_argument(
        "--backend",
        choices=("numba", "numpy"),
        default=None,
        help="force a scan backend (default: DIHEDRAL_CODES_BACKEND or auto)",
    )


def _gate_admissible(args) -> bool:
    try:
        return check_admissible(args.q, args.p, args.m)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return False


def _parse_subgroup(group: DihedralGroup, spec: str):
    mt = _SUBGROUP_SPEC.match(spec)
    if not mt:
        raise ValueError(f"bad subgroup spec {spec!r}; use h<j> or hstar<j>")
    j = int(mt.group(2))
    if not 0 <= j <= group.m:
        raise ValueError(f"subgroup index {j} out of range 0..{group.m}")
    return group.subgroup_H(j) if mt.group(1) == "h" else group.subgroup_Hstar(j)


def cmd_construct(args) -> int:
    if not _gate_admissible(args):
        print(f"inadmissible parameters (q, p, m) = ({args.q}, {args.p}, {args.m})",
              file=sys.stderr)
        return EXIT_INADMISSIBLE

    field = PrimeField(args.q)
    group = DihedralGroup(args.p, args.m)
    try:
        if args.gen == "pair":
            if not args.sub_h or not args.sub_k:
                raise ValueError("--gen pair needs --sub-h and --sub-k")
            H = _parse_subgroup(group, args.sub_h)
            K = _parse_subgroup(group, args.sub_k)
            code, _ = subgroup_pair_code(field, H, K)
        elif args.gen == "custom":
            if not args.coeffs:
                raise ValueError("--gen custom needs --coeffs")
            coeffs = [int(t) for t in args.coeffs.split(",")]
            from .algebra import AlgebraElem

            code = left_ideal_code(AlgebraElem(group, field, coeffs))
        else:
            catalog = central_idempotents(field, group)
            if args.gen == "ej":
                gen = catalog.component(args.j)
            else:
                units = matrix_units(catalog, args.j)
                if args.gen == "e11":
                    gen = units.e11
                elif args.gen == "e22":
                    gen = units.e22
                else:  # f
                    gen = noncentral_generator(units).f
            code = left_ideal_code(gen)
    except (ValueError, InadmissibleParameters) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE

    try:
        code.write(args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO

    try:
        d = code.min_weight(budget=args.budget, backend=args.backend)
    except BudgetExceededError as exc:
        print(f"{code.n} {code.k} ?")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    print(f"{code.n} {code.k} {d}")
    return EXIT_OK


def cmd_survey(args) -> int:
    if not _gate_admissible(args):
        print(f"inadmissible parameters (q, p, m) = ({args.q}, {args.p}, {args.m})",
              file=sys.stderr)
        return EXIT_INADMISSIBLE
    field = PrimeField(args.q)
    catalog = abelian_catalog(field, args.p, args.m)
    rows = enumerate_abelian_codes(
        catalog, dim_filter=args.dim, budget=args.budget, backend=args.backend
    )
    try:
        write_survey_table(rows, args.q, args.p, args.m, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    best: dict[int, int | None] = {}
    for row in rows:
        cur = best.get(row.dim)
        if row.min_weight is not None and (cur is None or row.min_weight > cur):
            best[row.dim] = row.min_weight
        else:
            best.setdefault(row.dim, cur)
    for dim in sorted(best):
        w = best[dim]
        print(f"dim {dim}: best weight {'?' if w is None else w}")
    print(f"{len(rows)} rows written to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = args.check if args.check else None
    try:
        results = run_checks(
            args.q,
            args.p,
            args.m,
            names=names,
            budget=args.budget,
            seed=args.seed,
            backend=args.backend,
        )
    except InadmissibleParameters as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    for res in results:
        print(f"{'PASS' if res.passed else 'FAIL'} {res.name}: {res.detail}")
    return EXIT_OK if all(r.passed for r in results) else 1


def _parse_reference_table(path) -> list[tuple[int, int, int]]:
    rows = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            parts = text.split()
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'n k d_best', got {line.rstrip()!r}")
            try:
                rows.append(tuple(int(t) for t in parts))
            except ValueError as exc:
                raise ValueError(f"line {lineno}: non-integer field") from exc
    return rows


def cmd_compare(args) -> int:
    if not _gate_admissible(args):
        print(f"inadmissible parameters (q, p, m) = ({args.q}, {args.p}, {args.m})",
              file=sys.stderr)
        return EXIT_INADMISSIBLE
    try:
        reference = _parse_reference_table(args.table)
    except OSError as exc:
        print(f"error: cannot read {args.table}: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: malformed reference table: {exc}", file=sys.stderr)
        return EXIT_BAD_TABLE

    field = PrimeField(args.q)
    group = DihedralGroup(args.p, args.m)
    catalog = central_idempotents(field, group)
    for j in range(1, args.m + 1):
        units = matrix_units(catalog, j)
        for label, gen in (
            (f"f[j={j}]", noncentral_generator(units).f),
            (f"e11[j={j}]", units.e11),
        ):
            code = left_ideal_code(gen)
            try:
                d = code.min_weight(budget=args.budget, backend=args.backend)
            except BudgetExceededError:
                print(f"{label} {code.n} {code.k} ? - unknown (budget)")
                continue
            ref = next(
                (r[2] for r in reference if r[0] == code.n and r[1] == code.k), None
            )
            if ref is None:
                print(f"{label} {code.n} {code.k} {d} - no reference")
            else:
                verdict = "matches" if d == ref else ("below" if d < ref else "above")
                print(f"{label} {code.n} {code.k} {d} {ref} {verdict}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dihedral-codes",
        description="Codes from left ideals of dihedral group algebras over F_q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser("construct", help="build a code and export its matrix")
    _add_common(p_construct)
    p_construct.add_argument("--j", type=int, default=1, help="component index (default 1)")
    p_construct.add_argument(
        "--gen",
        required=True,
        choices=("f", "e11", "e22", "ej", "custom", "pair"),
        help="generator choice",
    )
    p_construct.add_argument("--coeffs", help="comma-separated residues for --gen custom")
    p_construct.add_argument("--sub-h", help="subgroup spec h<j> or hstar<j> for --gen pair")
    p_construct.add_argument("--sub-k", help="subgroup spec h<j> or hstar<j> for --gen pair")
    p_construct.add_argument("--out", required=True, help="generator matrix output path")
    p_construct.set_defaults(func=cmd_construct)

    p_survey = sub.add_parser("survey", help="enumerate all abelian codes")
    _add_common(p_survey)
    p_survey.add_argument("--dim", type=int, default=None, help="only rows of this dimension")
    p_survey.add_argument("--out", required=True, help="survey table output path")
    p_survey.set_defaults(func=cmd_survey)

    p_verify = sub.add_parser("verify", help="run verification checks")
    _add_common(p_verify)
    p_verify.add_argument(
        "--check",
        action="append",
        choices=CHECK_NAMES,
        help="run only this named check (repeatable)",
    )
    p_verify.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    p_verify.set_defaults(func=cmd_verify)

    p_compare = sub.add_parser("compare", help="compare against a reference table")
    _add_common(p_compare)
    p_compare.add_argument("--table", required=True, help="reference table `n k d_best`")
    p_compare.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
