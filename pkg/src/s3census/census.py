"""Tabulation of sextic closures against the asymptotic predictions.

Enumerated cubic fields are rolled up into the comparison tables: cumulative
counts of twin sextic discriminants below a list of checkpoints, optionally
restricted to fields unramified at chosen primes, optionally broken down by
residue class of the sextic discriminant, and paired with rounded model
predictions plus a normalised error column.

Counting is streaming: one pass over the enumeration batches, a fixed-size
accumulator per checkpoint (plus one residue row per checkpoint when a
modulus is requested).  The cubic range a query needs is always derived from
the largest checkpoint, never supplied by hand: |disc(Kt)| = disc(K)^2 * |F|
with |F| >= 3, so checkpoints below X only involve cubic discriminants with
disc(K)^2 <= (X - 1) / 3.  Callers replaying a cached stream must declare
the range it covers; anything short of the derived requirement is rejected
rather than silently undercounted.

Accumulations over disjoint partitions of the cubic range are merged by
elementwise integer addition, which is associative and exact, so partitioned
or threaded runs reproduce the single-pass tables byte for byte.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Mapping, Sequence

import numpy as np

from .enumeration import EnumerationRange, WindowBatch, iter_batches, subset_batch
from .local_analysis import UNRAMIFIED, _is_prime
from .predictor import (
    MODEL_TAIL_CORRECTED,
    MODEL_TWO_TERM,
    REFERENCE_CONSTANTS,
    EvaluationConstants,
    LocalCondition,
    PredictionModel,
    nearest_count,
    predict,
)
from .sextic import abs_sextic_below, resolvent_vec, sextic_residues

_MAX_FILTER_PRIMES = 10


class InsufficientRangeError(ValueError):
    """A record stream stops short of the cubic range a query needs."""


def ensure_covers(covered: EnumerationRange, required: EnumerationRange) -> None:
    """Reject coverage that cannot support the derived cubic range."""
    if covered.lower != 0 or covered.upper < required.upper:
        raise InsufficientRangeError(
            "enumeration covers |disc| in [%d, %d) but [0, %d) is needed"
            % (covered.lower, covered.upper, required.upper)
        )


@dataclass(frozen=True)
class CensusFilter:
    """What subset of fields a table counts.

    `sign` selects totally real (+1) or complex (-1) cubic fields, which is
    also the sign of the twin sextic discriminant.  `unramified` lists primes
    at which the sextic closure must be unramified, i.e. primes not dividing
    the sextic discriminant; note this is stronger at 2 than being unramified
    in the cubic field, because the quadratic resolvent can ramify at 2 on
    its own.  `modulus` switches on the per-residue histogram of the sextic
    discriminant.
    """

    sign: int
    unramified: tuple[int, ...] = ()
    modulus: int | None = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        primes = tuple(sorted({operator.index(p) for p in self.unramified}))
        if len(primes) > _MAX_FILTER_PRIMES:
            raise ValueError("at most %d filter primes" % _MAX_FILTER_PRIMES)
        for p in primes:
            if not _is_prime(p):
                raise ValueError("filter entries must be prime, got %d" % p)
        object.__setattr__(self, "unramified", primes)
        if self.modulus is not None:
            m = operator.index(self.modulus)
            if m < 2:
                raise ValueError("modulus must be at least 2")
            object.__setattr__(self, "modulus", m)


def required_cubic_range(x_max: int) -> EnumerationRange:
    """Cubic enumeration range that provably covers checkpoints below x_max."""
    x_max = operator.index(x_max)
    if x_max < 1:
        raise ValueError("checkpoints must be positive")
    return EnumerationRange(0, math.isqrt((x_max - 1) // 3) + 1)


def _checked_checkpoints(checkpoints: Sequence[int]) -> tuple[int, ...]:
    cps = tuple(operator.index(x) for x in checkpoints)
    for a, b in zip(cps, cps[1:]):
        if a >= b:
            raise ValueError("checkpoints must be strictly increasing")
    if cps and cps[0] < 1:
        raise ValueError("checkpoints must be positive")
    return cps


def _checked_stream(filt_sign, required, batches, covered):
    if batches is None:
        return iter_batches(required, filt_sign), required
    if covered is None:
        raise ValueError("externally supplied batches need their covered range")
    ensure_covers(covered, required)
    return batches, covered


def _drop_ramified(sub: WindowBatch, f: np.ndarray, primes) -> np.ndarray:
    keep = np.ones(sub.size, dtype=bool)
    rows = np.repeat(np.arange(sub.size), np.diff(sub.prof_ptr))
    for p in primes:
        hit = np.zeros(sub.size, dtype=bool)
        hit[rows[sub.prof_p == p]] = True
        keep &= ~hit & (f % p != 0)
    return keep


def accumulate_stream(
    checkpoints: Sequence[int],
    filt: CensusFilter,
    batches: Iterable[WindowBatch],
    stop_at: int | None = None,
) -> tuple[np.ndarray, np.ndarray | None]:
    """Count one batch stream; the partition building block.

    Returns per-checkpoint counts and, when the filter carries a modulus,
    a (checkpoint, residue) matrix.  Results from disjoint sub-ranges add
    elementwise.  `stop_at` cuts off a stream that extends past the needed
    cubic range (batches arrive in increasing |disc| order).
    """
    cps = _checked_checkpoints(checkpoints)
    counts = np.zeros(len(cps), dtype=np.int64)
    hist = None
    if filt.modulus is not None:
        hist = np.zeros((len(cps), filt.modulus), dtype=np.int64)
    for batch in batches:
        if stop_at is not None and batch.size and abs(int(batch.disc[0])) >= stop_at:
            break
        sub = subset_batch(batch, ~batch.cyclic)
        if not sub.size:
            continue
        f = resolvent_vec(sub)
        disc = sub.disc
        if filt.unramified:
            keep = _drop_ramified(sub, f, filt.unramified)
            disc, f = disc[keep], f[keep]
        if not disc.size:
            continue
        res = None
        if hist is not None:
            res = sextic_residues(disc, f, filt.modulus)
        for i, x in enumerate(cps):
            below = abs_sextic_below(disc, f, x)
            counts[i] += int(below.sum())
            if hist is not None:
                hist[i] += np.bincount(res[below], minlength=filt.modulus)
    return counts, hist


def merge_accumulations(parts):
    """Elementwise sum of accumulate_stream results over disjoint partitions."""
    parts = list(parts)
    if not parts:
        raise ValueError("nothing to merge")
    counts = np.sum([c for c, _ in parts], axis=0)
    hists = [h for _, h in parts]
    if any(h is None for h in hists):
        if not all(h is None for h in hists):
            raise ValueError("cannot merge histogram and non-histogram parts")
        return counts, None
    return counts, np.sum(hists, axis=0)


def count_checkpoints(
    checkpoints: Sequence[int],
    filt: CensusFilter,
    batches: Iterable[WindowBatch] | None = None,
    covered: EnumerationRange | None = None,
) -> list[int]:
    """Fields with 0 < sign * disc(Kt) < X for each checkpoint X.

    The bound is strict and exact at the boundary.  With no `batches`, the
    needed cubic range is enumerated on the fly; a supplied stream must
    declare `covered` and is rejected if it cannot support max(checkpoints).
    """
    cps = _checked_checkpoints(checkpoints)
    if not cps:
        return []
    required = required_cubic_range(cps[-1])
    stream, _ = _checked_stream(filt.sign, required, batches, covered)
    counts, _ = accumulate_stream(cps, filt, stream, stop_at=required.upper)
    return [int(c) for c in counts]


def ap_histogram(
    checkpoints: Sequence[int],
    filt: CensusFilter,
    batches: Iterable[WindowBatch] | None = None,
    covered: EnumerationRange | None = None,
) -> list[tuple[int, ...]]:
    """Per-checkpoint residue rows of disc(Kt) mod filt.modulus.

    Residues are mathematical (always in [0, m)), so the sign convention of
    the discriminant cannot leak into the histogram.  Each row sums to the
    matching count_checkpoints value.
    """
    if filt.modulus is None:
        raise ValueError("histogram needs a filter with a modulus")
    cps = _checked_checkpoints(checkpoints)
    if not cps:
        return []
    required = required_cubic_range(cps[-1])
    stream, _ = _checked_stream(filt.sign, required, batches, covered)
    _, hist = accumulate_stream(cps, filt, stream, stop_at=required.upper)
    return [tuple(int(v) for v in row) for row in hist]


@dataclass(frozen=True)
class CubicApResult:
    """Residue histogram of cubic field discriminants below a bound."""

    modulus: int
    bound: int
    sign: int
    include_cyclic: bool
    counts: tuple[int, ...]
    total: int
    cyclic_seen: int

    def __post_init__(self):
        if len(self.counts) != self.modulus:
            raise ValueError("one bin per residue class required")
        if sum(self.counts) != self.total:
            raise ValueError("histogram bins must sum to the total")

    @property
    def convention(self) -> str:
        return "cyclic included" if self.include_cyclic else "cyclic excluded"


def cubic_ap_histogram(
    modulus: int,
    bound: int,
    include_cyclic: bool = True,
    sign: int = 1,
    batches: Iterable[WindowBatch] | None = None,
    covered: EnumerationRange | None = None,
) -> CubicApResult:
    """Cubic discriminants with 0 < sign * disc < bound, binned mod `modulus`.

    Both cyclic-inclusion conventions are supported and the one used is
    recorded on the result, since published tables differ on the point.
    """
    modulus = operator.index(modulus)
    bound = operator.index(bound)
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    if bound < 1:
        raise ValueError("bound must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    required = EnumerationRange(0, bound)
    stream, _ = _checked_stream(sign, required, batches, covered)
    counts = np.zeros(modulus, dtype=np.int64)
    cyclic_seen = 0
    for batch in stream:
        if batch.size and abs(int(batch.disc[0])) >= bound:
            break
        cyclic_seen += int(batch.cyclic.sum())
        disc = batch.disc if include_cyclic else batch.disc[~batch.cyclic]
        counts += np.bincount(disc % modulus, minlength=modulus)
    return CubicApResult(
        modulus=modulus,
        bound=bound,
        sign=sign,
        include_cyclic=include_cyclic,
        counts=tuple(int(c) for c in counts),
        total=int(counts.sum()),
        cyclic_seen=cyclic_seen,
    )


def error_column(predicted: float, actual: int, x: int) -> float:
    """Normalised overshoot (predicted - actual) / x^(5/18)."""
    if not x > 0:
        raise ValueError("checkpoint must be positive")
    return (predicted - actual) / float(x) ** (5.0 / 18.0)


def format_error(value: float) -> str:
    """Three decimals, ties away from zero, matching the published columns."""
    return str(Decimal(repr(value)).quantize(Decimal("0.001"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class CensusReport:
    """One assembled comparison table.

    `predicted` maps model names to rounded counts in the requested model
    order; `errors` is the error column against the first model.  The
    histogram, present only when the filter had a modulus and the counts
    were produced here, carries one residue row per checkpoint.
    """

    filt: CensusFilter
    checkpoints: tuple[int, ...]
    actual: tuple[int, ...]
    predicted: Mapping[str, tuple[int, ...]] = field(default_factory=dict)
    errors: tuple[float, ...] = ()
    histogram: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        n = len(self.checkpoints)
        if len(self.actual) != n:
            raise ValueError("one actual count per checkpoint required")
        for a, b in zip(self.actual, self.actual[1:]):
            if a > b:
                raise ValueError("cumulative counts cannot decrease")
        for name, col in self.predicted.items():
            if len(col) != n:
                raise ValueError("predicted column %r has the wrong length" % name)
        if self.errors and len(self.errors) != n:
            raise ValueError("error column has the wrong length")
        if self.histogram is not None:
            if self.filt.modulus is None:
                raise ValueError("histogram rows require a filter modulus")
            if len(self.histogram) != n:
                raise ValueError("one histogram row per checkpoint required")
            for row, total in zip(self.histogram, self.actual):
                if len(row) != self.filt.modulus:
                    raise ValueError("histogram rows need one bin per residue")
                if sum(row) != total:
                    raise ValueError("histogram row does not sum to its count")


def build_report(
    checkpoints: Sequence[int],
    filt: CensusFilter,
    models: Sequence[str] = (MODEL_TWO_TERM, MODEL_TAIL_CORRECTED),
    constants: EvaluationConstants = REFERENCE_CONSTANTS,
    actual: Sequence[int] | None = None,
    batches: Iterable[WindowBatch] | None = None,
    covered: EnumerationRange | None = None,
    accumulated: tuple[np.ndarray, np.ndarray | None] | None = None,
) -> CensusReport:
    """Assemble counts, model predictions, and the error column.

    Counts come from the enumeration stream unless `actual` supplies them
    (the route for checkpoints beyond feasible enumeration) or `accumulated`
    carries a merged accumulate_stream result from partitioned runs.
    Predictions are conditioned on the filter's unramified primes, so a
    filtered table is compared against the matching conditional asymptotic.
    An empty checkpoint list yields an empty report.
    """
    cps = _checked_checkpoints(checkpoints)
    for name in models:
        PredictionModel(filt.sign, name)
    if len(set(models)) != len(models):
        raise ValueError("duplicate model names")
    if sum(x is not None for x in (actual, accumulated)) > 1:
        raise ValueError("supply at most one of actual and accumulated")
    if batches is not None and (actual is not None or accumulated is not None):
        raise ValueError("supply either precomputed counts or a batch stream")
    hist_rows = None
    if not cps:
        counts = ()
    elif actual is not None:
        counts = tuple(operator.index(c) for c in actual)
    elif accumulated is not None:
        raw, hist = accumulated
        counts = tuple(int(c) for c in raw)
        if hist is not None:
            hist_rows = tuple(tuple(int(v) for v in row) for row in hist)
    else:
        required = required_cubic_range(cps[-1])
        stream, _ = _checked_stream(filt.sign, required, batches, covered)
        raw, hist = accumulate_stream(cps, filt, stream, stop_at=required.upper)
        counts = tuple(int(c) for c in raw)
        if hist is not None:
            hist_rows = tuple(tuple(int(v) for v in row) for row in hist)
    overrides = tuple(LocalCondition(p, UNRAMIFIED) for p in filt.unramified)
    predicted = {}
    for name in models:
        model = PredictionModel(filt.sign, name)
        predicted[name] = tuple(
            nearest_count(predict(x, model, overrides, constants)) for x in cps
        )
    errors = ()
    if models and cps:
        lead = predicted[models[0]]
        errors = tuple(
            error_column(lead[i], counts[i], cps[i]) for i in range(len(cps))
        )
    return CensusReport(
        filt=filt,
        checkpoints=cps,
        actual=counts,
        predicted=predicted,
        errors=errors,
        histogram=hist_rows,
    )
