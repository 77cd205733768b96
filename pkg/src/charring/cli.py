"""Command line interface and the compare/scan workflows.

Exit codes: 0 done, 1 some scan inputs failed, 2 invalid input,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import gfp
from .blocks import block_decomposition, principal_block
from .chartab import CharacterTable, load_table, validate_table
from .errors import (
    InconsistentTableError,
    InvariantViolation,
    NotPIntegralError,
    OracleCapExceeded,
    TableParseError,
)
from .exactnum import is_prime
from .loewy import loewy_report, nilradical, oracle_loewy_length, oracle_nilpotent_set
from .modring import build_algebra, exact_structure_constants
from .sections import section_partition

EXIT_OK, EXIT_PARTIAL, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3

SCAN_COLUMNS = ["name", "order", "p", "classes", "p_regular", "blocks",
                "principal_dim", "principal_loewy_length"]


class InvalidInput(Exception):
    pass


def load_validated(path) -> CharacterTable:
    try:
        table = load_table(path)
    except OSError as exc:
        raise InvalidInput(f"{path}: cannot read ({exc.strerror or exc})") from None
    except (TableParseError, UnicodeDecodeError) as exc:
        raise InvalidInput(f"{path}: parse error: {exc}") from None
    report = validate_table(table)
    if not report.ok:
        raise InvalidInput(f"{path}: invalid table:\n  " + "\n  ".join(report.failures))
    return table


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidInput(f"{p} is not a prime")


@dataclass(frozen=True)
class ComparisonReport:
    group: str
    group_order: int
    normalizer: str
    normalizer_order: int
    p: int
    ll_group: int
    ll_normalizer: int
    radical_dims_group: tuple[int, ...] = ()
    radical_dims_normalizer: tuple[int, ...] = ()

    @property
    def equal(self) -> bool:
        return self.ll_group == self.ll_normalizer

    def as_dict(self) -> dict:
        d = asdict(self)
        d["radical_dims_group"] = list(self.radical_dims_group)
        d["radical_dims_normalizer"] = list(self.radical_dims_normalizer)
        d["equal"] = self.equal
        return d

    def __str__(self):
        verdict = "equal" if self.equal else "different"
        return (
            f"G = {self.group} (order {self.group_order}): principal block radical dims "
            f"{' '.join(map(str, self.radical_dims_group))}, Loewy length {self.ll_group}\n"
            f"N = {self.normalizer} (order {self.normalizer_order}): principal block radical dims "
            f"{' '.join(map(str, self.radical_dims_normalizer))}, Loewy length {self.ll_normalizer}\n"
            f"p = {self.p}: {self.ll_group} vs {self.ll_normalizer} -> {verdict}"
        )


def compare_tables(G: CharacterTable, N: CharacterTable, p: int) -> ComparisonReport:
    """Loewy lengths of the principal blocks of two validated tables at p."""
    rg = loewy_report(principal_block(G, p))
    rn = loewy_report(principal_block(N, p))
    return ComparisonReport(G.name, G.order, N.name, N.order, p,
                            rg.loewy_length, rn.loewy_length,
                            rg.radical_dims, rn.radical_dims)


def cmd_compare(path_g, path_n, p: int) -> ComparisonReport:
    _check_prime(p)
    G = load_validated(path_g)
    N = load_validated(path_n)
    if G.order % p:
        raise InvalidInput(f"{p} does not divide |G| = {G.order}")
    if N.order % p:
        print(f"warning: {p} does not divide the order {N.order} of {N.name}; "
              "inputs look inconsistent", file=sys.stderr)
    return compare_tables(G, N, p)


def scan_row(table: CharacterTable, p: int) -> dict:
    A = build_algebra(table, p)
    blocks = block_decomposition(table, p, A)
    B = principal_block(table, p, A)
    return {
        "name": table.name,
        "order": table.order,
        "p": p,
        "classes": table.class_number,
        "p_regular": len(section_partition(table, p).regular_classes),
        "blocks": len(blocks),
        "principal_dim": B.dim,
        "principal_loewy_length": loewy_report(B).loewy_length,
    }


def _scan_file(path: Path, prime):
    try:
        table = load_validated(path)
    except InvalidInput as exc:
        return path, [], str(exc)
    primes = table.primes if prime is None else [prime]
    try:
        return path, [scan_row(table, q) for q in primes], None
    except (InvariantViolation, InconsistentTableError, NotPIntegralError) as exc:
        return path, [], f"{path}: {exc}"


def cmd_scan(directory, prime: int | None = None, jobs: int = 1) -> tuple[list[dict], list[str]]:
    """Rows for every (table file, prime) pair, sorted by file name then prime.

    ``prime=None`` scans every prime dividing each table's order.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise InvalidInput(f"{directory}: not a readable directory")
    if prime is not None:
        _check_prime(prime)
    files = sorted(directory.glob("*.json"), key=lambda f: f.name)
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            results = list(pool.map(lambda f: _scan_file(f, prime), files))
    else:
        results = [_scan_file(f, prime) for f in files]
    results.sort(key=lambda r: r[0].name)
    rows = [row for _, rs, _ in results for row in rs]
    errors = [err for _, _, err in results if err]
    return rows, errors


def format_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SCAN_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


# -- subcommand handlers --------------------------------------------------------

def _vec(v) -> str:
    return " ".join(str(int(x)) for x in v)


def _do_validate(args, out):
    try:
        table = load_table(args.file)
    except OSError as exc:
        raise InvalidInput(f"{args.file}: cannot read ({exc.strerror or exc})") from None
    except TableParseError as exc:
        raise InvalidInput(f"{args.file}: parse error: {exc}") from None
    report = validate_table(table)
    if report.ok:
        print(f"{table.name}: ok (order {table.order}, {table.class_number} classes)", file=out)
        return EXIT_OK
    print(f"{table.name}: {len(report.failures)} failed checks", file=out)
    for f in report.failures:
        print(f"  {f}", file=out)
    return EXIT_INVALID


def _do_sections(args, out):
    _check_prime(args.p)
    table = load_validated(args.file)
    part = section_partition(table, args.p)
    for r, members in part.fibers.items():
        print(f"{r} {table.classes[r].element_order} {' '.join(map(str, members))}", file=out)
    return EXIT_OK


def _do_blocks(args, out):
    _check_prime(args.p)
    table = load_validated(args.file)
    A = build_algebra(table, args.p)
    if args.dump_constants:
        print(f"# dimension {A.dim}", file=out)
        exact = exact_structure_constants(table)
        for (i, j, l), v in np.ndenumerate(exact):
            if v:
                print(f"{i} {j} {l} {v}", file=out)
    for b in block_decomposition(table, args.p, A):
        print(f"sections {b.label()} dim {b.dim} idempotent {_vec(b.idempotent)}", file=out)
    return EXIT_OK


def _oracle_check(B) -> None:
    J = nilradical(B)
    nil = oracle_nilpotent_set(B)
    span = gfp.span_basis(nil, B.p, B.dim)
    if span.shape != J.shape or not np.array_equal(span, J):
        raise InvariantViolation(f"block {B.label()}: oracle nilpotents differ from the Frobenius kernel")
    if oracle_loewy_length(B, nil) != loewy_report(B).loewy_length:
        raise InvariantViolation(f"block {B.label()}: oracle Loewy length differs")


def _do_loewy(args, out):
    _check_prime(args.p)
    table = load_validated(args.file)
    A = build_algebra(table, args.p)
    blocks = [principal_block(table, args.p, A)] if args.principal else block_decomposition(table, args.p, A)
    reports = []
    for b in blocks:
        if args.oracle:
            _oracle_check(b)
        reports.append(loewy_report(b))
    if args.json:
        doc = {"name": table.name, "order": table.order, "p": args.p,
               "oracle_checked": bool(args.oracle),
               "blocks": [r.as_dict() for r in reports]}
        print(json.dumps(doc, indent=1), file=out)
    else:
        for r in reports:
            print(f"block {r.block} radical_dims {_vec(r.radical_dims)} loewy_length {r.loewy_length}",
                  file=out)
        if args.oracle:
            print("oracle: agrees", file=out)
    return EXIT_OK


def _do_compare(args, out):
    report = cmd_compare(args.file_g, args.file_n, args.p)
    if args.json:
        print(json.dumps(report.as_dict(), indent=1), file=out)
    else:
        print(report, file=out)
    return EXIT_OK


def _do_scan(args, out):
    prime = None if args.all_primes else args.p
    rows, errors = cmd_scan(args.dir, prime, args.jobs)
    text = format_rows(rows, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    for e in errors:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_PARTIAL if errors else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="charring", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a character table file")
    p.add_argument("file")
    p.set_defaults(func=_do_validate)

    p = sub.add_parser("sections", help="list p'-sections")
    p.add_argument("file")
    p.add_argument("-p", type=int, required=True)
    p.set_defaults(func=_do_sections)

    p = sub.add_parser("blocks", help="block decomposition of F_p Irr(G)")
    p.add_argument("file")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--dump-constants", action="store_true",
                   help="print nonzero exact structure constants as 'i j l value'")
    p.set_defaults(func=_do_blocks)

    p = sub.add_parser("loewy", help="radical dimensions and Loewy lengths of blocks")
    p.add_argument("file")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--principal", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check by exhaustive enumeration")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_do_loewy)

    p = sub.add_parser("compare", help="compare principal blocks of G and N_G(P)")
    p.add_argument("file_g")
    p.add_argument("file_n")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_do_compare)

    p = sub.add_parser("scan", help="tabulate a directory of tables")
    p.add_argument("dir")
    g = p.add_mutually_exclusive_group()
    g.add_argument("-p", type=int)
    g.add_argument("--all-primes", action="store_true")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("-o", "--output")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_do_scan)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    if args.command == "scan" and args.p is None:
        args.all_primes = True
    try:
        return args.func(args, out)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InvariantViolation, InconsistentTableError, NotPIntegralError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main_entry() -> None:
    sys.exit(main())
