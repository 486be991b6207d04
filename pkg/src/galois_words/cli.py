"""Command-line interface.

Input is always raw bytes: no newline stripping, no encoding transforms.
A trailing newline in a file is part of the word, which matters for
reproducing factor counts on reference corpora byte for byte.

Exit codes: 0 success (for ``check``: the word is Galois), 1 ``check`` on a
non-Galois word, 2 I/O or usage error, 3 non-primitive input to ``rotate``,
4 disagreement with the brute-force oracle under ``--oracle``.
"""

from __future__ import annotations

import argparse
import csv
import json
import statistics
import sys
import time
from typing import Sequence

from . import oracles
from ._accel import kernels
from .errors import NotPrimitiveError
from .galois_core import (
    FAST_THRESHOLD,
    GaloisFactorizer,
    factorize,
    galois_rotation,
    is_galois,
    is_pre_galois,
)
from .lyndon_baseline import duval_factorize

#: Size guards for --oracle cross-checks (the oracles are quadratic or
#: exponential); larger inputs skip the check with a note on stderr.
ORACLE_DETECT_LIMIT = 4096
ORACLE_ROTATE_LIMIT = 2048

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_IO = 2
EXIT_NOT_PRIMITIVE = 3
EXIT_ORACLE_MISMATCH = 4


def _read_input(name: str) -> bytes:
    if name == "-":
        return sys.stdin.buffer.read()
    with open(name, "rb") as handle:
        return handle.read()


def _escape(data: bytes) -> str:
    """Printable single-line rendering of raw bytes."""
    return data.decode("latin-1").encode("unicode_escape").decode("ascii")


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _emit_json(record: dict) -> None:
    print(json.dumps(record))


def _emit_csv(rows: list[dict], fields: list[str]) -> None:
    writer = csv.DictWriter(sys.stdout, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def _alphabet_size(data: bytes) -> int:
    if not data:
        return 0
    try:
        import numpy as np
    except Exception:
        return len(set(data))
    counts = np.bincount(np.frombuffer(data, dtype=np.uint8), minlength=256)
    return int((counts > 0).sum())


def _warm_kernels(paths_sizes: Sequence[int]) -> None:
    """Compile the kernels before any timed run that would use them."""
    if any(size >= FAST_THRESHOLD for size in paths_sizes):
        fast = kernels()
        if fast is not None:
            fast.warmup()


def _timed_counts(data: bytes) -> tuple[int, int, int, int]:
    """(galois_count, galois_us, lyndon_count, lyndon_us) for one input."""
    t0 = time.perf_counter_ns()
    gcount = len(factorize(data).spans)
    t1 = time.perf_counter_ns()
    lcount = len(duval_factorize(data).spans)
    t2 = time.perf_counter_ns()
    return gcount, (t1 - t0) // 1000, lcount, (t2 - t1) // 1000


def cmd_check(args: argparse.Namespace) -> int:
    try:
        data = _read_input(args.files[0])
    except OSError as exc:
        _note(f"galois: {exc}")
        return EXIT_IO
    result = is_galois(data)
    pre = is_pre_galois(data) if args.pre else None
    if args.oracle:
        if len(data) <= ORACLE_DETECT_LIMIT:
            if result != oracles.oracle_is_galois(data):
                _note("galois: oracle mismatch for is_galois")
                return EXIT_ORACLE_MISMATCH
            if pre is not None and pre != oracles.oracle_is_pre_galois(data):
                _note("galois: oracle mismatch for is_pre_galois")
                return EXIT_ORACLE_MISMATCH
        else:
            _note(f"galois: input exceeds {ORACLE_DETECT_LIMIT} bytes, oracle check skipped")
    name = args.files[0]
    if args.format == "json":
        record = {"file": name, "galois": result}
        if pre is not None:
            record["pre_galois"] = pre
        _emit_json(record)
    elif args.format == "csv":
        fields = ["file", "galois"] + (["pre_galois"] if pre is not None else [])
        row = {"file": name, "galois": result}
        if pre is not None:
            row["pre_galois"] = pre
        _emit_csv([row], fields)
    else:
        print(f"galois: {'true' if result else 'false'}")
        if pre is not None:
            print(f"pre-galois: {'true' if pre else 'false'}")
    return EXIT_OK if result else EXIT_FALSE


def _stream_spans(data: bytes) -> list[tuple[int, int]]:
    factorizer = GaloisFactorizer()
    spans: list[tuple[int, int]] = []
    for byte in data:
        spans.extend(factorizer.push(byte))
    spans.extend(factorizer.finish())
    return spans


def cmd_factorize(args: argparse.Namespace) -> int:
    try:
        data = _read_input(args.files[0])
    except OSError as exc:
        _note(f"galois: {exc}")
        return EXIT_IO
    if args.stream:
        spans = _stream_spans(data)
    else:
        spans = list(factorize(data).spans)
    if args.oracle:
        if len(data) <= oracles.FACTORIZE_LIMIT:
            if tuple(spans) != oracles.oracle_factorize(data).spans:
                _note("galois: oracle mismatch for factorize")
                return EXIT_ORACLE_MISMATCH
        else:
            _note(f"galois: input exceeds {oracles.FACTORIZE_LIMIT} bytes, oracle check skipped")
    base = args.index_base
    rows = []
    for start, length in spans:
        row: dict = {"start": start - 1 + base, "length": length}
        if args.emit_text:
            row["text"] = _escape(data[start - 1 : start - 1 + length])
        rows.append(row)
    if args.format == "json":
        for row in rows:
            _emit_json(row)
    elif args.format == "csv":
        fields = ["start", "length"] + (["text"] if args.emit_text else [])
        _emit_csv(rows, fields)
    else:
        for row in rows:
            line = f"{row['start']} {row['length']}"
            if args.emit_text:
                line += f" {row['text']}"
            print(line)
    return EXIT_OK


def cmd_rotate(args: argparse.Namespace) -> int:
    try:
        data = _read_input(args.files[0])
    except OSError as exc:
        _note(f"galois: {exc}")
        return EXIT_IO
    if not data:
        _note("galois: cannot rotate empty input")
        return EXIT_IO
    try:
        start = galois_rotation(data, validate=not args.unchecked)
    except NotPrimitiveError:
        _note("galois: input is not primitive, no Galois rotation exists")
        return EXIT_NOT_PRIMITIVE
    if args.oracle:
        if len(data) <= ORACLE_ROTATE_LIMIT:
            if start != oracles.oracle_rotation(data):
                _note("galois: oracle mismatch for rotation")
                return EXIT_ORACLE_MISMATCH
        else:
            _note(f"galois: input exceeds {ORACLE_ROTATE_LIMIT} bytes, oracle check skipped")
    rotated = data[start - 1 :] + data[: start - 1] if args.emit_text else None
    index = start - 1 + args.index_base
    name = args.files[0]
    if args.format == "json":
        record: dict = {"file": name, "index": index}
        if rotated is not None:
            record["rotation"] = _escape(rotated)
        _emit_json(record)
    elif args.format == "csv":
        fields = ["file", "index"] + (["rotation"] if rotated is not None else [])
        row: dict = {"file": name, "index": index}
        if rotated is not None:
            row["rotation"] = _escape(rotated)
        _emit_csv([row], fields)
    else:
        print(index)
        if rotated is not None:
            print(_escape(rotated))
    return EXIT_OK


_STATS_FIELDS = ["file", "sigma", "size", "galois_count", "galois_time_us", "lyndon_count", "lyndon_time_us"]


def _print_table(rows: list[dict], fields: list[str]) -> None:
    cells = [[str(row[field]) for field in fields] for row in rows]
    widths = [max(len(field), *(len(line[col]) for line in cells)) if cells else len(field) for col, field in enumerate(fields)]
    print("  ".join(field.ljust(widths[col]) for col, field in enumerate(fields)).rstrip())
    for line in cells:
        print("  ".join(value.rjust(widths[col]) if col else value.ljust(widths[col]) for col, value in enumerate(line)).rstrip())


def cmd_stats(args: argparse.Namespace) -> int:
    failed = False
    rows = []
    blobs = []
    for name in args.files:
        try:
            blobs.append((name, _read_input(name)))
        except OSError as exc:
            _note(f"galois: {name}: {exc}")
            failed = True
    _warm_kernels([len(data) for _, data in blobs])
    for name, data in blobs:
        gcount, gus, lcount, lus = _timed_counts(data)
        rows.append(
            {
                "file": name,
                "sigma": _alphabet_size(data),
                "size": len(data),
                "galois_count": gcount,
                "galois_time_us": gus,
                "lyndon_count": lcount,
                "lyndon_time_us": lus,
            }
        )
    if args.format == "json":
        for row in rows:
            _emit_json(row)
    elif args.format == "csv":
        _emit_csv(rows, _STATS_FIELDS)
    else:
        _print_table(rows, _STATS_FIELDS)
    return EXIT_IO if failed else EXIT_OK


_COMPARE_FIELDS = ["file", "size", "galois_count", "galois_median_us", "lyndon_count", "lyndon_median_us"]


def cmd_compare(args: argparse.Namespace) -> int:
    failed = False
    rows = []
    blobs = []
    for name in args.files:
        try:
            blobs.append((name, _read_input(name)))
        except OSError as exc:
            _note(f"galois: {name}: {exc}")
            failed = True
    _warm_kernels([len(data) for _, data in blobs])
    repeats = max(1, args.repeat)
    for name, data in blobs:
        gtimes = []
        ltimes = []
        gcount = lcount = 0
        for _ in range(repeats):
            gcount, gus, lcount, lus = _timed_counts(data)
            gtimes.append(gus)
            ltimes.append(lus)
        rows.append(
            {
                "file": name,
                "size": len(data),
                "galois_count": gcount,
                "galois_median_us": int(statistics.median(gtimes)),
                "lyndon_count": lcount,
                "lyndon_median_us": int(statistics.median(ltimes)),
            }
        )
    if args.format == "json":
        for row in rows:
            _emit_json(row)
    elif args.format == "csv":
        _emit_csv(rows, _COMPARE_FIELDS)
    else:
        _print_table(rows, _COMPARE_FIELDS)
    return EXIT_IO if failed else EXIT_OK


_SINGLE_INPUT = {"check", "factorize", "rotate"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galois",
        description="Detect, factorize, and rotate Galois words (alternating-order Lyndon analogue).",
        epilog="Input is read as raw bytes; use - for stdin.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    specs = {
        "check": (cmd_check, "report whether the input is a Galois word"),
        "factorize": (cmd_factorize, "print the Galois factorization as start/length spans"),
        "rotate": (cmd_rotate, "print the start of the Galois rotation of a primitive word"),
        "stats": (cmd_stats, "per-file alphabet size, byte size, factor counts, and timings"),
        "compare": (cmd_compare, "repeat both factorizations and report median wall times"),
    }
    for name, (func, help_text) in specs.items():
        cmd = sub.add_parser(name, help=help_text)
        cmd.set_defaults(func=func)
        cmd.add_argument("files", nargs="*", default=["-"], metavar="FILE", help="input files, or - for stdin")
        cmd.add_argument("--format", choices=["text", "json", "csv"], default="text")
        cmd.add_argument("--index-base", type=int, choices=[0, 1], default=0, help="base for reported indexes")
        cmd.add_argument("--emit-text", action="store_true", help="include factor/rotation bytes in the output")
        cmd.add_argument("--stream", action="store_true", help="factorize: force the byte-at-a-time push path")
        cmd.add_argument("--pre", action="store_true", help="check: also report pre-Galois status")
        cmd.add_argument("--unchecked", action="store_true", help="rotate: skip the primitivity validation pass")
        cmd.add_argument("--repeat", type=int, default=5, metavar="N", help="compare: timed repetitions per file")
        cmd.add_argument("--oracle", action="store_true", help="cross-check results against the brute-force oracles (small inputs)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not args.files:
        args.files = ["-"]
    if args.command in _SINGLE_INPUT and len(args.files) > 1:
        parser.error(f"{args.command} takes a single input")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
