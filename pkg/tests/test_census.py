import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import reference_tables as ref
from s3census.census import (
    CensusFilter,
    CensusReport,
    CubicApResult,
    accumulate_stream,
    ap_histogram,
    build_report,
    count_checkpoints,
    cubic_ap_histogram,
    error_column,
    format_error,
    merge_accumulations,
    required_cubic_range,
)
from s3census.enumeration import (
    EnumerationRange,
    enumerate_fields,
    iter_batches,
    partition,
)
from s3census.predictor import MODEL_MAIN, MODEL_TAIL_CORRECTED, MODEL_TWO_TERM
from s3census.sextic import sextic_discriminant


def test_required_range_is_tight():
    rng = required_cubic_range(12168)
    assert rng == EnumerationRange(0, 64)
    assert 3 * 63**2 <= 12167
    assert 3 * 64**2 > 12167
    assert required_cubic_range(1) == EnumerationRange(0, 1)


@given(st.integers(min_value=4, max_value=10**24))
@settings(max_examples=200, deadline=None)
def test_required_range_covers_exactly(x):
    upper = required_cubic_range(x).upper
    # every field with |d6| < x fits, and the range is not one wider than needed
    assert 3 * upper**2 >= x
    assert 3 * (upper - 1) ** 2 < x


def test_boundary_strict():
    neg = CensusFilter(sign=-1)
    assert count_checkpoints([12167], neg) == [0]
    assert count_checkpoints([12168], neg) == [1]


def test_desk_counts_smallest_checkpoint():
    assert count_checkpoints([10**12], CensusFilter(1)) == [690]
    assert count_checkpoints([10**12], CensusFilter(-1)) == [2809]


def test_multi_checkpoint_positive():
    counts = count_checkpoints([10**12, 10**13], CensusFilter(1))
    assert counts == [690, 1650]


def test_counts_never_decrease():
    counts = count_checkpoints([10**10, 10**11, 10**12], CensusFilter(-1))
    assert counts == sorted(counts)


def test_histogram_rows_partition_the_counts():
    cps = [10**11, 10**12]
    filt = CensusFilter(sign=-1, modulus=7)
    rows = ap_histogram(cps, filt)
    totals = count_checkpoints(cps, CensusFilter(sign=-1))
    assert [sum(r) for r in rows] == totals
    assert all(len(r) == 7 for r in rows)


def test_histogram_requires_modulus():
    with pytest.raises(ValueError):
        ap_histogram([10**10], CensusFilter(sign=-1))


def test_filtered_counts_match_brute_force():
    x = 10**9
    rng = required_cubic_range(x)
    brute = 0
    brute_hist = [0] * 5
    brute_cubic_only = 0
    for r in enumerate_fields(rng, -1):
        if r.cyclic:
            continue
        d6 = sextic_discriminant(r.disc, r.profile)
        if not -x < d6 < 0:
            continue
        if all(p not in {q.p for q in r.profile} for p in (2, 3)):
            brute_cubic_only += 1
            if d6 % 2 and d6 % 3:
                brute += 1
                brute_hist[d6 % 5] += 1
    filt = CensusFilter(sign=-1, unramified=(2, 3), modulus=5)
    assert count_checkpoints([x], filt) == [brute]
    assert ap_histogram([x], filt) == [tuple(brute_hist)]
    # discriminants are 0 or 1 mod 4, so an odd cubic discriminant forces an
    # odd resolvent: the closure filter and the cubic-only filter agree
    assert brute == brute_cubic_only
    assert brute > 0


def test_filter_validation():
    with pytest.raises(ValueError):
        CensusFilter(sign=0)
    with pytest.raises(ValueError):
        CensusFilter(sign=1, unramified=(4,))
    with pytest.raises(ValueError):
        CensusFilter(sign=1, unramified=tuple(ref.CUBIC_AP_MOD7) + (2, 3, 5, 7))
    with pytest.raises(ValueError):
        CensusFilter(sign=1, modulus=1)
    f = CensusFilter(sign=1, unramified=(5, 3, 3, 2))
    assert f.unramified == (2, 3, 5)


def test_checkpoint_validation():
    neg = CensusFilter(sign=-1)
    with pytest.raises(ValueError):
        count_checkpoints([100, 100], neg)
    with pytest.raises(ValueError):
        count_checkpoints([200, 100], neg)
    with pytest.raises(ValueError):
        count_checkpoints([0], neg)
    with pytest.raises(TypeError):
        count_checkpoints([1e12], neg)
    assert count_checkpoints([], neg) == []


def test_insufficient_range_rejected():
    small = EnumerationRange(0, 100)
    batches = list(iter_batches(small, -1))
    with pytest.raises(ValueError, match="needed"):
        count_checkpoints([10**8], CensusFilter(-1), batches=batches, covered=small)
    with pytest.raises(ValueError, match="covered range"):
        count_checkpoints([10**8], CensusFilter(-1), batches=batches)
    shifted = EnumerationRange(5, 10**6)
    with pytest.raises(ValueError):
        count_checkpoints([10**8], CensusFilter(-1), batches=batches, covered=shifted)


def test_oversized_stream_is_cut_off():
    cps = [10**9, 10**10]
    wide = EnumerationRange(0, 10**6)
    direct = count_checkpoints(cps, CensusFilter(-1))
    replay = count_checkpoints(
        cps, CensusFilter(-1), batches=iter_batches(wide, -1), covered=wide
    )
    assert replay == direct


@pytest.mark.parametrize("k", [2, 5])
def test_partition_independence(k):
    cps = [10**10, 10**12]
    filt = CensusFilter(sign=-1, modulus=5)
    rng = required_cubic_range(cps[-1])
    parts = [
        accumulate_stream(cps, filt, iter_batches(piece, filt.sign))
        for piece in partition(rng, k)
    ]
    counts, hist = merge_accumulations(parts)
    assert list(counts) == count_checkpoints(cps, CensusFilter(sign=-1))
    assert [tuple(r) for r in hist] == ap_histogram(cps, filt)


def test_merge_validation():
    with pytest.raises(ValueError):
        merge_accumulations([])
    a = (np.array([1]), np.array([[1, 0]]))
    b = (np.array([2]), None)
    with pytest.raises(ValueError):
        merge_accumulations([a, b])


def test_cubic_ap_published_rows():
    r7 = cubic_ap_histogram(7, 2 * 10**6, include_cyclic=True)
    assert r7.counts == ref.CUBIC_AP_MOD7
    assert r7.total == ref.CUBIC_AP_TOTAL
    assert r7.cyclic_seen == ref.CUBIC_AP_CYCLIC
    assert r7.convention == "cyclic included"
    r5 = cubic_ap_histogram(5, 2 * 10**6, include_cyclic=True)
    assert r5.counts == ref.CUBIC_AP_MOD5
    assert r5.total == ref.CUBIC_AP_TOTAL


def test_cubic_ap_exclusion_convention():
    r = cubic_ap_histogram(7, 2 * 10**6, include_cyclic=False)
    assert r.total == ref.CUBIC_AP_TOTAL - ref.CUBIC_AP_CYCLIC
    assert r.convention == "cyclic excluded"
    assert r.cyclic_seen == ref.CUBIC_AP_CYCLIC


def test_cubic_ap_validation():
    with pytest.raises(ValueError):
        cubic_ap_histogram(1, 10**5)
    with pytest.raises(ValueError):
        cubic_ap_histogram(7, 0)
    with pytest.raises(ValueError):
        cubic_ap_histogram(7, 10**5, sign=2)
    with pytest.raises(ValueError):
        CubicApResult(5, 10, 1, True, (1, 2, 3, 4, 5), 14, 0)


def test_error_column_examples():
    assert format_error(error_column(756, 690, 10**12)) == "0.031"
    assert format_error(error_column(2979, 2809, 10**12)) == "0.079"
    assert format_error(error_column(690, 756, 10**12)) == "-0.031"
    assert format_error(0.0005) == "0.001"
    assert format_error(-0.0005) == "-0.001"
    with pytest.raises(ValueError):
        error_column(1, 1, 0)


def test_build_report_live_counts():
    rep = build_report([10**12, 10**13], CensusFilter(sign=1))
    assert rep.actual == (690, 1650)
    assert rep.predicted[MODEL_TWO_TERM] == (756, 1762)
    assert rep.predicted[MODEL_TAIL_CORRECTED] == (709, 1682)
    assert [format_error(e) for e in rep.errors] == ["0.031", "0.027"]
    assert rep.histogram is None


def test_build_report_histogram_rows():
    filt = CensusFilter(sign=-1, modulus=5)
    rep = build_report([10**11, 10**12], filt, models=(MODEL_TWO_TERM,))
    assert rep.histogram is not None
    assert [sum(r) for r in rep.histogram] == list(rep.actual)


def test_build_report_external_actual():
    cps = [10**15, 10**16]
    rep = build_report(
        cps, CensusFilter(sign=-1), actual=[ref.NEG_ACTUAL[3], ref.NEG_ACTUAL[4]]
    )
    assert rep.predicted[MODEL_TWO_TERM] == tuple(ref.NEG_TWO_TERM[3:5])
    assert rep.predicted[MODEL_TAIL_CORRECTED] == tuple(ref.NEG_TAIL_CORRECTED[3:5])
    assert [format_error(e) for e in rep.errors] == ref.NEG_ERROR[3:5]


def test_build_report_empty_checkpoints():
    rep = build_report([], CensusFilter(sign=1))
    assert rep.checkpoints == ()
    assert rep.actual == ()
    assert rep.errors == ()
    assert all(col == () for col in rep.predicted.values())


def test_build_report_validation():
    with pytest.raises(ValueError):
        build_report([10**10], CensusFilter(1), models=(MODEL_MAIN, MODEL_MAIN))
    with pytest.raises(ValueError):
        build_report([10**10], CensusFilter(1), models=("bogus",))
    with pytest.raises(ValueError):
        build_report(
            [10**10],
            CensusFilter(1),
            actual=[5],
            batches=iter_batches(EnumerationRange(0, 10), 1),
        )
    with pytest.raises(ValueError):
        build_report([10**10, 10**11], CensusFilter(1), actual=[7, 3])


def test_report_invariants_direct():
    filt = CensusFilter(sign=1, modulus=3)
    with pytest.raises(ValueError, match="sum"):
        CensusReport(
            filt=filt,
            checkpoints=(10,),
            actual=(4,),
            histogram=((1, 1, 1),),
        )
    with pytest.raises(ValueError, match="decrease"):
        CensusReport(filt=filt, checkpoints=(10, 20), actual=(4, 3))
    with pytest.raises(ValueError, match="modulus"):
        CensusReport(
            filt=CensusFilter(sign=1),
            checkpoints=(10,),
            actual=(2,),
            histogram=((1, 1),),
        )
