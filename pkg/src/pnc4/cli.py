"""Command-line front end: ``pnc4 <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
import time
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import fixtures
from .fadespace import (
    N_USERS,
    enumerate_singular_subspaces,
    removable_subspaces,
    sample_subspace_point,
    subspace_class,
    vector_index,
)
from .hypercube import (
    Codebook,
    FormatError,
    build_codebook,
    build_constraints,
    constraints_conflict,
    load_codebook,
    satisfies_exclusive_law,
    store_codebook,
    table1_map,
    table2_map,
)
from .selection import MapSelector, cross_cluster_mask, min_cluster_distance
from .simulator import BCMode, ConfigError, Scheme, SimConfig, CSV_HEADER, simulate, snr_range

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CASE_COUNTS = {1: 4, 2: 72, 3: 448, 4: 960}
CASE4_SUBCASES = {1: 256, 2: 384, 3: 256, 4: 64}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _format_vector(v) -> str:
    return fixtures.format_vector(v)


def _write_csv(rows: Sequence[Sequence], header: Sequence[str], out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _open_out(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


# -- verification -------------------------------------------------------------

Check = Tuple[str, bool, str]


def census_checks() -> List[Check]:
    out = []
    t0 = time.perf_counter()
    classes = enumerate_singular_subspaces()
    elapsed = time.perf_counter() - t0
    counts = {c: sum(s.case_id == c for s in classes) for c in CASE_COUNTS}
    out.append(("census class counts", counts == CASE_COUNTS, f"{counts} in {elapsed:.2f}s"))
    sub = {k: sum(s.case_id == 4 and s.subcase_id == k for s in classes) for k in CASE4_SUBCASES}
    out.append(("case-4 subcase counts", sub == CASE4_SUBCASES, str(sub)))
    sizes = {len(s.orbit) for s in classes}
    out.append(("orbit sizes in {4, 8}", sizes <= {4, 8}, str(sorted(sizes))))
    sums = {c: sum(len(s.orbit) for s in classes if s.case_id == c) for c in CASE_COUNTS}
    raw = {1: 32, 2: 384, 3: 2048, 4: 4096}
    out.append(("orbit sizes sum to vector counts", sums == raw, str(sums)))
    return out


def _all_d1(v) -> bool:
    return all(abs(re) == 1 and abs(im) == 1 for re, im in v)


def fixture_checks() -> List[Check]:
    out = []
    classes = enumerate_singular_subspaces()
    ab = {s.orbit for s in classes if s.support == (0, 1)}
    pairs = {frozenset(g) for g in fixtures.pair_groups()}
    out.append(("two-user (A,B) classes equal the 12 listed groups", ab == pairs, f"{len(ab)} computed"))
    d1 = {s.orbit for s in classes if s.case_id == 4 and any(_all_d1(w) for w in s.orbit)}
    app = {frozenset(g) for g in fixtures.appendix_groups()}
    out.append(("all-D1 case-4 classes equal the 64 listed groups", d1 == app, f"{len(d1)} computed"))
    out.append(("table II map is a Latin hyper-cube", satisfies_exclusive_law(table2_map()), ""))
    t1 = table1_map()
    part = build_constraints(subspace_class(fixtures.parse_vector(fixtures.EXAMPLE1_VECTOR)))
    mono = all(len({t1.flat[c] for c in p}) == 1 for p in part.parts)
    out.append(("table I map is a Latin hyper-cube", satisfies_exclusive_law(t1), ""))
    out.append(("table I is constant on every example constraint part", mono, ""))
    return out


def removability_checks() -> List[Check]:
    bad = [s.canonical for s in enumerate_singular_subspaces() if constraints_conflict(build_constraints(s)) == s.removable]
    return [("constraint conflict iff non-removable", not bad, f"{len(bad)} mismatches")]


def codebook_checks(cb: Codebook, seed: int = 0) -> List[Check]:
    out = []
    classes = removable_subspaces()
    vecs = [s.canonical for s in classes]
    out.append(("one entry per removable class, in order", [e.vector for e in cb.entries] == vecs,
                f"{len(cb)} entries"))
    latin = [k for k, e in enumerate(cb.entries) if not satisfies_exclusive_law(e.map)]
    out.append(("every map is a Latin hyper-cube", not latin, f"{len(latin)} failing"))
    ts = cb.label_counts()
    out.append(("every map has t >= 64", bool(len(ts)) and int(ts.min()) >= 64,
                f"t in [{ts.min() if len(ts) else '-'}, {ts.max() if len(ts) else '-'}], {int((ts > 90).sum())} above 90"))
    not_removed = []
    split = []
    for k, (s, e) in enumerate(zip(classes, cb.entries)):
        if k >= len(cb):
            break
        mask = cross_cluster_mask(e.map)
        if any(mask[vector_index(w)] for w in s.orbit):
            split.append(k)
        h = sample_subspace_point(s, seed=(seed, k))
        if min_cluster_distance(e.map, h, mask) <= 1e-9 * np.linalg.norm(h):
            not_removed.append(k)
    out.append(("orbit differences are co-clustered", not split, f"{len(split)} failing"))
    out.append(("every map removes its subspace at a generic point", not not_removed,
                f"{len(not_removed)} failing"))
    return out


def run_verification(cb: Optional[Codebook]) -> List[Check]:
    checks = census_checks() + fixture_checks() + removability_checks()
    if cb is not None:
        checks += codebook_checks(cb)
    return checks


# -- subcommands --------------------------------------------------------------

def cmd_enumerate(args) -> int:
    classes = enumerate_singular_subspaces(args.case)
    rows = [[s.case_id, s.subcase_id, len(s.orbit), _format_vector(s.canonical)] for s in classes]
    out, close = _open_out(args.out)
    try:
        if args.format == "csv":
            _write_csv(rows, ["case", "subcase", "orbit_size", "canonical"], out)
        else:
            for r in rows:
                out.write(f"case {r[0]} subcase {r[1]} size {r[2]}  {r[3]}\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_build_codebook(args) -> int:
    t0 = time.perf_counter()
    cb = build_codebook(workers=args.workers)
    store_codebook(cb, args.out)
    ts = cb.label_counts()
    values, counts = np.unique(ts, return_counts=True)
    print(f"built {len(cb)} maps in {time.perf_counter() - t0:.1f}s -> {args.out}")
    print(f"label count t: min {ts.min()} max {ts.max()}; above 90: {int((ts > 90).sum())}")
    print("t histogram: " + " ".join(f"{v}:{c}" for v, c in zip(values, counts)))
    return EXIT_OK


def _load(path: str) -> Codebook:
    try:
        return load_codebook(path)
    except OSError as exc:
        raise UsageError(f"cannot read codebook: {exc}") from None


def cmd_verify(args) -> int:
    cb = None
    if args.codebook:
        try:
            cb = _load(args.codebook)
        except FormatError as exc:
            print(f"FAIL  codebook format: {exc}")
            return EXIT_FAIL
    checks = run_verification(cb)
    for name, ok, detail in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
    failed = sum(not ok for _, ok, _ in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def parse_fade(text: str) -> np.ndarray:
    parts = text.split()
    if len(parts) != N_USERS:
        raise UsageError(f"--fade needs {N_USERS} 're,im' pairs, got {len(parts)}")
    h = []
    for p in parts:
        try:
            re, im = (float(x) for x in p.split(","))
        except ValueError:
            raise UsageError(f"bad fade coefficient {p!r}; expected 're,im'") from None
        h.append(complex(re, im))
    h = np.array(h)
    if not np.all(np.isfinite(h)) or not np.any(h):
        raise UsageError("fade state must be finite and not all zero")
    return h


def cmd_select(args) -> int:
    h = parse_fade(args.fade)
    cb = _load(args.codebook)
    if len(cb) == 0:
        raise UsageError("codebook is empty")
    k, d = MapSelector(cb).select(h)
    print(f"index {k}")
    print(f"vector {_format_vector(cb[k].vector)}")
    print(f"labels {cb[k].map.label_count}")
    print(f"min_cluster_distance {d:.12g}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.frames < 1:
        raise UsageError("--frames must be >= 1")
    try:
        snrs = snr_range(args.snr_start, args.snr_stop, args.snr_step)
        cfg = SimConfig(
            snr_db_list=snrs,
            scheme=Scheme(args.scheme),
            rician_k_db=args.rician_k_db,
            frame_bits=args.frame_bits,
            frames_per_snr=args.frames,
            seed=args.seed,
            bc_mode=BCMode(args.bc),
            workers=args.workers,
        )
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    cb = None
    if cfg.scheme is Scheme.ADAPTIVE:
        cb = _load(args.codebook) if args.codebook else build_codebook(workers=args.workers)
    res = simulate(cfg, cb)
    buf = io.StringIO()
    _write_csv(res.csv_rows(), CSV_HEADER, buf)
    out, close = _open_out(args.out)
    try:
        out.write(buf.getvalue())
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_fixtures(args) -> int:
    corrected = not args.as_printed
    out, close = _open_out(args.out)
    try:
        w = csv.writer(out, lineterminator="\n")
        if args.which in ("table1", "table2"):
            labels = (fixtures.table1_labels if args.which == "table1" else fixtures.table2_labels)(corrected)
            w.writerow(["x_a", "x_b", "x_c", "x_d", "label"])
            for idx in np.ndindex(labels.shape):
                w.writerow([*idx, int(labels[idx])])
        else:
            groups = (fixtures.appendix_groups if args.which == "appendix" else fixtures.pair_groups)(corrected)
            w.writerow(["item", "vector"])
            for i, g in enumerate(groups, 1):
                for v in g:
                    w.writerow([i, _format_vector(v)])
    finally:
        if close:
            out.close()
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def _workers_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: PNC4_THREADS or the CPU count)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pnc4", description="Adaptive network-coding maps for the four-way relay channel.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list singular fade subspace classes")
    p.add_argument("--case", type=int, choices=range(1, 5), default=None, metavar="N",
                   help="restrict to case N (1-4: number of nonzero coordinates)")
    p.add_argument("--format", choices=("csv", "text"), default="csv", help="output format (default csv)")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("build-codebook", help="build one relay map per removable subspace")
    p.add_argument("--out", required=True, help="codebook file to write")
    _workers_arg(p)
    p.set_defaults(func=cmd_build_codebook)

    p = sub.add_parser("verify", help="run the invariant suite; exit 1 on any failure")
    p.add_argument("--codebook", default=None, help="codebook file to check as well")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("select", help="pick the codebook map for a fade state")
    p.add_argument("--codebook", required=True, help="codebook file")
    p.add_argument("--fade", required=True, help='four coefficients, e.g. "1,0 0.3,0.8 -0.6,0.2 0.1,0.9"')
    p.set_defaults(func=cmd_select)

    for name, what in (("simulate-ber", "bit error rate"), ("simulate-throughput", "throughput")):
        p = sub.add_parser(name, help=f"Monte Carlo {what} versus SNR (CSV output)")
        p.add_argument("--snr-start", type=float, default=0.0, help="first SNR in dB (default 0)")
        p.add_argument("--snr-stop", type=float, default=40.0, help="last SNR in dB (default 40)")
        p.add_argument("--snr-step", type=float, default=5.0, help="SNR step in dB (default 5)")
        p.add_argument("--rician-k-db", type=float, default=20.0, help="Rician K factor in dB (default 20)")
        p.add_argument("--frame-bits", type=int, default=256, help="bits per user per frame (default 256)")
        p.add_argument("--frames", type=int, default=200, help="frames per SNR point (default 200)")
        p.add_argument("--seed", type=int, default=0, help="master RNG seed (default 0)")
        p.add_argument("--scheme", choices=[s.value for s in Scheme], default="adaptive",
                       help="relaying scheme (default adaptive)")
        p.add_argument("--bc", choices=[m.value for m in BCMode], default="ideal",
                       help="broadcast phase model (default ideal)")
        p.add_argument("--codebook", default=None, help="codebook file (adaptive; built on the fly if omitted)")
        p.add_argument("--out", default=None, help="CSV file (default stdout)")
        _workers_arg(p)
        p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("fixtures", help="dump the embedded published tables as CSV")
    p.add_argument("--which", choices=("table1", "table2", "appendix", "pairs"), default="table2",
                   help="which fixture to dump (default table2)")
    p.add_argument("--as-printed", action="store_true", help="dump the verbatim transcription without errata")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_fixtures)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "workers", 0) is not None and getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be >= 1")
        if hasattr(args, "workers") and args.workers is None:
            from .hypercube import default_workers

            args.workers = default_workers()
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(message)s")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
