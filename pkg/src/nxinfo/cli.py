"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 numeric failure.
``NXINFO_OUTPUT_DIR`` (optional) is prepended to relative ``--out`` paths.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from .capacity import (
    ChannelSpec,
    bec_capacity_closed,
    bsc_capacity_closed,
    capacity_numeric,
)
from .coding import (
    empirical_distribution,
    kraft_sum_classical,
    kraft_sum_generalized,
    simulate_source,
    theorem_report,
)
from .entropy import ALL_KINDS, Distribution, EntropyKind, entropy
from .errors import ConvergenceError, DomainError, InvalidDistributionError
from .genfun import N_COEFFS, Convention
from .sweep import (
    DIGITS,
    SweepTable,
    format_cell,
    sweep_bec,
    sweep_bsc,
    sweep_fig1,
    sweep_uniform_lengths,
)

EXIT_INPUT = 2
EXIT_NUMERIC = 3
OUTPUT_DIR_ENV = "NXINFO_OUTPUT_DIR"

CODING_COMMANDS = {"entropy", "lengths", "kraft", "simulate"}


class InputError(Exception):
    pass


# --- input parsing -------------------------------------------------------


def _parse_numbers(tokens) -> list[float]:
    values = []
    for tok in tokens:
        for part in str(tok).replace(",", " ").split():
            try:
                values.append(float(part))
            except ValueError:
                raise InputError(f"not a number: {part!r}") from None
    return values


def _load_file(path: str) -> tuple[Distribution, list[str] | None]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        doc = None
    if isinstance(doc, dict):
        if "probs" in doc:
            return Distribution(np.asarray(doc["probs"], dtype=float)), None
        if "counts" in doc:
            return Distribution.from_counts(np.asarray(doc["counts"], dtype=float)), None
        raise InputError('JSON input needs a "probs" or "counts" array')
    if doc is not None and not isinstance(doc, (int, float)):
        raise InputError('JSON input must be an object with "probs" or "counts"')
    tokens = text.split()
    if not tokens:
        raise InputError(f"{path} contains no symbols")
    labels, counts = np.unique(np.array(tokens), return_counts=True)
    return Distribution.from_counts(counts), [str(s) for s in labels]


def _read_distribution(args) -> tuple[Distribution, list[str] | None]:
    if args.input and args.probs:
        raise InputError("give either inline probabilities or --input, not both")
    if args.input:
        return _load_file(args.input)
    if not args.probs:
        raise InputError("no distribution given (inline probabilities or --input)")
    return Distribution(_parse_numbers(args.probs)), None


def _variants(args, allowed=ALL_KINDS) -> list[EntropyKind]:
    if args.variant == "all":
        return list(allowed)
    kind = EntropyKind(args.variant)
    if kind not in allowed:
        raise InputError(f"variant {kind.value} is not available for this command")
    return [kind]


def _convention(args) -> Convention:
    if args.convention is not None:
        return Convention(args.convention)
    return Convention.RESCALE if args.command in CODING_COMMANDS else Convention.NATURAL


# --- output --------------------------------------------------------------


def _round_floats(obj):
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        if not math.isfinite(v):
            return None
        return float(format(v, f".{DIGITS}g")) + 0.0
    return obj


def _render(table: SweepTable, fmt: str, meta: dict | None = None) -> str:
    if fmt == "csv":
        return table.to_csv()
    doc = dict(meta or {})
    doc["rows"] = table.to_records()
    return json.dumps(_round_floats(doc), indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    env_dir = os.environ.get(OUTPUT_DIR_ENV)
    if env_dir and not path.is_absolute():
        path = Path(env_dir) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


# --- commands ------------------------------------------------------------


def cmd_entropy(args) -> str:
    dist, _ = _read_distribution(args)
    conv = _convention(args)
    table = SweepTable(["measure", "value"])
    for kind in _variants(args):
        table.rows.append((kind.value, entropy(kind, dist, args.base, conv)))
    meta = {"base": args.base, "convention": conv.value}
    return _render(table, args.format, meta)


def _report_rows(dist, kinds, base, conv, jmax) -> tuple[SweepTable, list[dict]]:
    header = [
        "kind", "entropy", "avg_real", "avg_int", "kraft_classical",
        "kraft_generalized", "prefix_feasible", "sandwich_ok",
        "real_lengths", "int_lengths",
    ]
    table = SweepTable(header)
    reports = []
    for kind in kinds:
        rep = theorem_report(kind, dist, base, conv)
        k_gen = rep.kraft_generalized
        if k_gen is not None and jmax != N_COEFFS - 1:
            k_gen = kraft_sum_generalized(kind.value, rep.real_lengths, base, jmax)
            rep.kraft_generalized = k_gen
        table.rows.append((
            kind.value,
            rep.entropy_value,
            rep.avg_real,
            rep.avg_int,
            rep.kraft_classical,
            "" if k_gen is None else k_gen,
            rep.prefix_feasible,
            rep.sandwich_ok,
            ";".join(format_cell(float(v)) for v in rep.real_lengths),
            ";".join(str(int(v)) for v in rep.int_lengths),
        ))
        reports.append(rep.to_dict())
    return table, reports


def cmd_lengths(args) -> str:
    dist, _ = _read_distribution(args)
    conv = _convention(args)
    table, reports = _report_rows(dist, _variants(args), args.base, conv, args.jmax)
    if args.format == "csv":
        return table.to_csv()
    return json.dumps(_round_floats({"jmax": args.jmax, "reports": reports}), indent=2) + "\n"


def cmd_kraft(args) -> str:
    lengths = _parse_numbers(args.lengths)
    if not lengths:
        raise InputError("no codeword lengths given")
    if any(v <= 0 for v in lengths):
        raise InputError("codeword lengths must be positive")
    table = SweepTable(["measure", "value"])
    table.rows.append(("classical", kraft_sum_classical(lengths, args.base)))
    for kind in _variants(args):
        if kind in (EntropyKind.PLUS, EntropyKind.MINUS):
            table.rows.append(
                (kind.value, kraft_sum_generalized(kind.value, lengths, args.base, args.jmax))
            )
    meta = {"base": args.base, "jmax": args.jmax, "lengths": lengths}
    return _render(table, args.format, meta)


def cmd_capacity(args) -> str:
    if args.channel == "bsc":
        channel = ChannelSpec.bsc(args.param)
        closed = bsc_capacity_closed
    else:
        channel = ChannelSpec.bec(args.param)
        closed = bec_capacity_closed
    table = SweepTable(["kind", "channel", "param", "closed_form", "numeric", "maximizer"])
    for kind in _variants(args):
        res = capacity_numeric(kind, channel, grid_step=args.step or 1e-3, route=args.route)
        table.rows.append(
            (kind.value, args.channel, args.param, closed(kind, args.param), res.value, res.maximizer)
        )
    return _render(table, args.format, {"route": args.route})


def cmd_sweep(args) -> str:
    kinds = None if args.variant == "all" else [args.variant]
    target = args.target
    if target == "fig1":
        table = sweep_fig1(
            int(args.start if args.start is not None else 2),
            int(args.stop if args.stop is not None else 100),
            int(args.step or 1),
            kinds,
        )
    elif target == "uniform":
        table = sweep_uniform_lengths(
            int(args.start if args.start is not None else 2),
            int(args.stop if args.stop is not None else 1024),
            int(args.step or 1),
            args.base,
            args.convention or Convention.RESCALE,
            kinds,
        )
    else:
        fn = sweep_bsc if target == "bsc" else sweep_bec
        table = fn(
            args.start if args.start is not None else 0.0,
            args.stop if args.stop is not None else 1.0,
            args.step or 1e-3,
            kinds,
        )
    return _render(table, args.format, {"target": target})


def cmd_simulate(args) -> str:
    dist, _ = _read_distribution(args)
    conv = _convention(args)
    sample = simulate_source(args.seed, dist, args.draws)
    emp = empirical_distribution(sample)
    counts = np.bincount(sample.symbols, minlength=len(dist))
    if args.samples:
        _emit("\n".join(str(int(s)) for s in sample.symbols) + "\n", args.samples)
    support = Distribution(emp.probs[emp.probs > 0])
    table, reports = _report_rows(support, _variants(args), args.base, conv, args.jmax)
    if args.format == "csv":
        return table.to_csv()
    doc = {
        "seed": args.seed,
        "draws": args.draws,
        "counts": counts.tolist(),
        "empirical": emp.probs.tolist(),
        "reports": reports,
    }
    return json.dumps(_round_floats(doc), indent=2) + "\n"


COMMANDS = {
    "entropy": cmd_entropy,
    "lengths": cmd_lengths,
    "kraft": cmd_kraft,
    "capacity": cmd_capacity,
    "sweep": cmd_sweep,
    "simulate": cmd_simulate,
}


def _base(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("base must be an integer >= 2")
    return value


def _jmax(text: str) -> int:
    value = int(text)
    if not 0 <= value < N_COEFFS:
        raise argparse.ArgumentTypeError(f"jmax must lie in 0..{N_COEFFS - 1}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--variant", default="all",
        choices=["shannon", "plus", "minus", "zero", "all"],
    )
    common.add_argument("--base", type=_base, default=2)
    common.add_argument(
        "--convention", default=None, choices=[c.value for c in Convention],
        help="default: rescale for entropy/lengths/kraft/simulate, natural otherwise",
    )
    common.add_argument("--jmax", type=_jmax, default=N_COEFFS - 1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--step", type=float, default=None)
    common.add_argument("--format", default="csv", choices=["csv", "json"])
    common.add_argument("--out", default=None, help="write to PATH instead of stdout")

    dist_input = argparse.ArgumentParser(add_help=False)
    dist_input.add_argument("probs", nargs="*", help="probabilities, space or comma separated")
    dist_input.add_argument(
        "--input", default=None,
        help='JSON {"probs": [...]} or {"counts": [...]}, or a whitespace-separated symbol file',
    )

    parser = argparse.ArgumentParser(
        prog="nxinfo", description="Generalized-entropy coding and capacity tools."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("entropy", parents=[common, dist_input], help="entropies of a distribution")
    sub.add_parser("lengths", parents=[common, dist_input], help="optimal codeword lengths")
    kp = sub.add_parser("kraft", parents=[common], help="classical and generalized Kraft sums")
    kp.add_argument("lengths", nargs="+")
    cp = sub.add_parser("capacity", parents=[common], help="BSC/BEC capacity")
    cp.add_argument("channel", choices=["bsc", "bec"])
    cp.add_argument("param", type=float)
    cp.add_argument("--route", default="auto", choices=["auto", "joint", "conditional"])
    sp = sub.add_parser("sweep", parents=[common], help="tabulate a figure's data as CSV")
    sp.add_argument("target", choices=["fig1", "bsc", "bec", "uniform"])
    sp.add_argument("--start", type=float, default=None)
    sp.add_argument("--stop", type=float, default=None)
    mp = sub.add_parser("simulate", parents=[common, dist_input], help="seeded source draws")
    mp.add_argument("--draws", type=int, default=1000)
    mp.add_argument("--samples", default=None, help="also write the drawn symbols to PATH")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = COMMANDS[args.command](args)
        _emit(text, args.out)
    except (InputError, InvalidDistributionError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConvergenceError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return 0


if __name__ == "__main__":
    sys.exit(main())
