"""Tabulated sweeps behind the entropy and capacity curves."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .capacity import bec_capacity_closed, bsc_capacity_closed
from .coding import average_length, optimal_lengths
from .entropy import Distribution, EntropyKind, uniform_entropy_closed
from .errors import DomainError
from .genfun import Convention

DIGITS = 12

_SUFFIX = {
    EntropyKind.SHANNON: "S",
    EntropyKind.PLUS: "plus",
    EntropyKind.MINUS: "minus",
    EntropyKind.ZERO: "zero",
}
DEFAULT_KINDS = (EntropyKind.SHANNON, EntropyKind.PLUS, EntropyKind.MINUS)


def format_cell(value) -> str:
    """Locale-independent cell text; floats get 12 significant digits."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if v == 0.0:
            v = 0.0  # drop the sign of -0.0
        return format(v, f".{DIGITS}g")
    return str(value)


@dataclass
class SweepTable:
    header: list[str]
    rows: list[tuple] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header)
        for row in self.rows:
            writer.writerow([format_cell(v) for v in row])
        return buf.getvalue()

    def to_records(self) -> list[dict]:
        return [dict(zip(self.header, row)) for row in self.rows]

    def column(self, name: str) -> np.ndarray:
        i = self.header.index(name)
        return np.array([row[i] for row in self.rows])


def parameter_grid(start: float, stop: float, step: float) -> np.ndarray:
    """``start, start+step, ...`` up to ``stop`` inclusive, rounded to 12 decimals."""
    if not step > 0:
        raise DomainError("step must be positive")
    if stop < start:
        raise DomainError(f"empty range: stop {stop!r} < start {start!r}")
    n = int(np.floor((stop - start) / step + 1e-9)) + 1
    return np.round(start + step * np.arange(n), 12)


def integer_grid(start: int, stop: int, step: int = 1) -> list[int]:
    if step < 1:
        raise DomainError("step must be a positive integer")
    values = list(range(int(start), int(stop) + 1, int(step)))
    if not values:
        raise DomainError(f"empty range: {start}..{stop}")
    return values


def _kinds(kinds) -> tuple[EntropyKind, ...]:
    return DEFAULT_KINDS if kinds is None else tuple(EntropyKind(k) for k in kinds)


def sweep_fig1(n_start=2, n_stop=100, n_step=1, kinds=None) -> SweepTable:
    """Uniform-distribution entropies (natural units) against the number of states."""
    kinds = _kinds(kinds)
    table = SweepTable(["N"] + [f"H_{_SUFFIX[k]}" for k in kinds])
    if n_start < 1:
        raise DomainError("N must be >= 1")
    for n in integer_grid(n_start, n_stop, n_step):
        table.rows.append((n, *(uniform_entropy_closed(k, n) for k in kinds)))
    return table


def sweep_bsc(start=0.0, stop=1.0, step=1e-3, kinds=None) -> SweepTable:
    kinds = _kinds(kinds)
    table = SweepTable(["p"] + [f"C_{_SUFFIX[k]}" for k in kinds])
    for p in parameter_grid(start, stop, step):
        table.rows.append((float(p), *(bsc_capacity_closed(k, float(p)) for k in kinds)))
    return table


def sweep_bec(start=0.0, stop=1.0, step=1e-3, kinds=None) -> SweepTable:
    kinds = _kinds(kinds)
    table = SweepTable(["alpha"] + [f"C_{_SUFFIX[k]}" for k in kinds])
    for a in parameter_grid(start, stop, step):
        table.rows.append((float(a), *(bec_capacity_closed(k, float(a)) for k in kinds)))
    return table


def sweep_uniform_lengths(
    n_start=2, n_stop=1024, n_step=1, base=2, convention=Convention.RESCALE, kinds=None
) -> SweepTable:
    """Optimal (pre-ceiling) average lengths for uniform sources.

    The last column is the relative gain ``(L_S - L_plus) / L_S``.
    """
    kinds = _kinds(kinds)
    table = SweepTable(["N"] + [f"L_{_SUFFIX[k]}" for k in kinds] + ["gap_plus"])
    if n_start < 2:
        raise DomainError("uniform length sweep needs N >= 2")
    for n in integer_grid(n_start, n_stop, n_step):
        dist = Distribution.uniform(n)
        lengths = {
            k: average_length(dist, optimal_lengths(k, dist, base, convention))
            for k in set(kinds) | {EntropyKind.SHANNON, EntropyKind.PLUS}
        }
        gap = (lengths[EntropyKind.SHANNON] - lengths[EntropyKind.PLUS]) / lengths[
            EntropyKind.SHANNON
        ]
        table.rows.append((n, *(lengths[k] for k in kinds), gap))
    return table
