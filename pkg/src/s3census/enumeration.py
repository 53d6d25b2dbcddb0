"""Complete enumeration of cubic fields ordered by absolute discriminant.

Cubic fields correspond one-to-one with GL2(Z)-classes of irreducible
integral binary cubic forms whose cubic ring is maximal, and every class
has a unique canonical representative (forms.py).  This module sweeps the
canonical region directly: for each leading pair (a, b) and middle
coefficient c it intersects, in exact integer arithmetic, the runs of d
allowed by the region inequalities and by the |disc| window, so canonical
forms are materialized straight from closed-form bounds and every field
appears exactly once.

Enumeration is windowed on |disc|; each window is swept, filtered
(content, irreducibility, maximality), factored, tagged and sorted
independently, which keeps memory bounded and makes range partitions glue
back together deterministically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from s3census.forms import (
    SMALL_GL2,
    BinaryCubicForm,
    canonical_reduce,
    content,
    discriminant,
    is_irreducible,
)
from s3census.local_analysis import (
    RamifiedPrime,
    factorize,
    is_cyclic,
    is_maximal,
    ramification_profile,
)

_SENT = 1 << 40  # beyond any d the sweeps can reach, safe under int64 run algebra
_WINDOW = 8_000_000
_ORACLE_LIMIT = 100_000


@dataclass(frozen=True)
class EnumerationRange:
    """Half-open window lower <= |disc| < upper."""

    lower: int
    upper: int

    def __post_init__(self):
        if not (0 <= self.lower < self.upper):
            raise ValueError("need 0 <= lower < upper")


@dataclass(frozen=True)
class CubicFieldRecord:
    a: int
    b: int
    c: int
    d: int
    disc: int
    cyclic: bool
    profile: tuple[RamifiedPrime, ...]

    def form(self) -> BinaryCubicForm:
        return BinaryCubicForm(self.a, self.b, self.c, self.d)


def partition(rng: EnumerationRange, k: int) -> list[EnumerationRange]:
    """Split into at most k contiguous subranges covering rng exactly.

    Enumerating the pieces in order yields the same record sequence as
    enumerating rng directly.
    """
    if k < 1:
        raise ValueError("k must be positive")
    width = rng.upper - rng.lower
    k = min(k, width)
    base, extra = divmod(width, k)
    out = []
    lo = rng.lower
    for i in range(k):
        hi = lo + base + (1 if i < extra else 0)
        out.append(EnumerationRange(lo, hi))
        lo = hi
    return out


def _windows(rng: EnumerationRange) -> Iterator[tuple[int, int]]:
    lo = rng.lower
    while lo < rng.upper:
        hi = min(lo + _WINDOW, rng.upper)
        yield lo, hi
        lo = hi


# --------------------------------------------------------------- run algebra


def _band_le(a2, a1, a0, thresh):
    """Integer solution band of a concave quadratic inequality.

    For a2 < 0 elementwise, the integers d with a2*d^2 + a1*d + a0 <= thresh
    form (-inf, uL] | [uR, +inf); returns (uL, uR), with uL = +SENT and
    uR = -SENT when every integer qualifies.  Float roots only seed the
    search; the returned endpoints are fixed by exact integer predicates.
    """
    a2 = np.asarray(a2, dtype=np.int64)
    a1 = np.asarray(a1, dtype=np.int64)
    a0 = np.asarray(a0, dtype=np.int64)
    disc = a1 * a1 - 4 * a2 * (a0 - thresh)
    strict = disc > 0
    s = np.sqrt(np.clip(disc, 0, None).astype(np.float64))
    den = (2 * a2).astype(np.float64)
    a1f = a1.astype(np.float64)
    uL = np.floor((-a1f + s) / den).astype(np.int64)
    uR = np.ceil((-a1f - s) / den).astype(np.int64)
    vfloor = (-a1) // (2 * a2)
    vceil = -(a1 // (2 * a2))

    def ok(d):
        return a2 * d * d + a1 * d + a0 <= thresh

    for _ in range(64):
        bad = strict & ~ok(uL)
        if not bad.any():
            break
        uL[bad] -= 1
    else:
        raise AssertionError("left endpoint did not settle")
    for _ in range(64):
        push = strict & (uL + 1 <= vfloor) & ok(uL + 1)
        if not push.any():
            break
        uL[push] += 1
    else:
        raise AssertionError("left endpoint did not settle")
    for _ in range(64):
        bad = strict & ~ok(uR)
        if not bad.any():
            break
        uR[bad] += 1
    else:
        raise AssertionError("right endpoint did not settle")
    for _ in range(64):
        pull = strict & (uR - 1 >= vceil) & ok(uR - 1)
        if not pull.any():
            break
        uR[pull] -= 1
    else:
        raise AssertionError("right endpoint did not settle")
    assert np.all(~strict | ((uL <= vfloor) & (uR >= vceil)))
    uL = np.where(strict, uL, _SENT)
    uR = np.where(strict, uR, -_SENT)
    return uL, uR


def _cut(lo, hi, band_l, band_r):
    """Remove the open integer band (band_l, band_r) from [lo, hi].

    Returns two disjoint pieces; emptiness shows up as lo > hi.
    """
    hi1 = np.minimum(hi, band_l)
    lo2 = np.maximum(np.maximum(lo, band_r), hi1 + 1)
    return (lo, hi1), (lo2, hi)


def _materialize(pieces, a_col, b_col, c_col):
    """Expand run lists [(lo_i, hi_i)] into explicit (a, b, c, d) rows."""
    lo = np.concatenate([p[0] for p in pieces])
    hi = np.concatenate([p[1] for p in pieces])
    reps = len(pieces)
    acol = np.concatenate([a_col] * reps)
    bcol = np.concatenate([b_col] * reps)
    ccol = np.concatenate([c_col] * reps)
    w = np.clip(hi - lo + 1, 0, None)
    total = int(w.sum())
    if total == 0:
        return np.empty((0, 4), dtype=np.int64)
    starts = np.cumsum(w) - w
    d = np.repeat(lo, w) + (np.arange(total, dtype=np.int64) - np.repeat(starts, w))
    out = np.empty((total, 4), dtype=np.int64)
    out[:, 0] = np.repeat(acol, w)
    out[:, 1] = np.repeat(bcol, w)
    out[:, 2] = np.repeat(ccol, w)
    out[:, 3] = d
    return out


def _cdiv(n, m):
    # ceil for ints of any sign (m != 0)
    return -((-n) // m)


# ------------------------------------------------------------------- sweeps


def _sweep_negative(lo: int, hi: int) -> np.ndarray:
    """Canonical-region forms with negative disc and lo <= |disc| < hi.

    Region (a > 0): ad - bc > 0, ad - bc < (a+b)^2 + ac, and
    d^2 - bd + ac - a^2 > 0.  The first two give one d-interval, the third
    removes a middle band, and the |disc| window removes another, leaving
    at most four runs per (a, b, c).
    """
    X = hi - 1
    lo_eff = max(lo, 1)
    chunks = []
    a = 1
    while 27 * a**4 <= 16 * X:
        m_rad = (X / 3) ** 0.25 / a
        bmax = int(1.5 * a + (X / 3) ** 0.25) + 2
        c_lo = math.floor(a * (1 - m_rad)) - 2
        c_hi = math.ceil(0.75 * a + (X / 3) ** 0.25 + (X / 4) ** (1 / 3) / a ** (1 / 3)) + 2
        bs = np.arange(-bmax, bmax + 1, dtype=np.int64)
        cs = np.arange(c_lo, c_hi + 1, dtype=np.int64)
        B = np.repeat(bs, cs.size)
        C = np.tile(cs, bs.size)

        L = B * C // a + 1
        R = _cdiv(B * C + (a + B) ** 2 + a * C, a) - 1

        a2 = np.full(B.shape, -27 * a * a, dtype=np.int64)
        a1 = 18 * a * B * C - 4 * B**3
        a0 = B * B * C * C - 4 * a * C**3

        wL, wR = _band_le(a2, a1, a0, -hi)       # disc > -hi inside (wL, wR)
        L = np.maximum(L, wL + 1)
        R = np.minimum(R, wR - 1)
        uL, uR = _band_le(a2, a1, a0, -lo_eff)   # disc <= -lo outside (uL, uR)
        p1, p2 = _cut(L, R, uL, uR)
        tL, tR = _band_le(np.full(B.shape, -1, dtype=np.int64), B,
                          a * a - a * C, -1)     # unit-circle test band
        p11, p12 = _cut(*p1, tL, tR)
        p21, p22 = _cut(*p2, tL, tR)

        A = np.full(B.shape, a, dtype=np.int64)
        chunks.append(_materialize([p11, p12, p21, p22], A, B, C))
        a += 1
    if not chunks:
        return np.empty((0, 4), dtype=np.int64)
    return np.concatenate(chunks)


def _sweep_positive(lo: int, hi: int) -> np.ndarray:
    """Hessian-cone forms with positive disc and lo <= disc < hi.

    The cone 0 <= Q <= P <= R in the Hessian (P, Q, R) pins c through
    P = b^2 - 3ac and bounds d by the Q-window and the R >= P ray; the
    disc window then leaves at most two runs per (a, b, c).
    """
    X = hi - 1
    lo_eff = max(lo, 1)
    pmax = math.isqrt(X)
    chunks = []
    a = 1
    while 27 * a * a <= 4 * pmax:
        bmax = (3 * a + math.isqrt(max(0, 4 * pmax - 27 * a * a))) // 2
        bs = np.arange(-bmax, bmax + 1, dtype=np.int64)
        p_low = np.maximum(1, bs * bs - 3 * a * np.abs(bs) + 9 * a * a)
        c_min = _cdiv(bs * bs - pmax, 3 * a)
        c_max = (bs * bs - p_low) // (3 * a)
        counts = np.clip(c_max - c_min + 1, 0, None)
        total = int(counts.sum())
        if total == 0:
            a += 1
            continue
        B = np.repeat(bs, counts)
        starts = np.cumsum(counts) - counts
        C = np.repeat(c_min, counts) + (np.arange(total, dtype=np.int64)
                                        - np.repeat(starts, counts))
        P = B * B - 3 * a * C

        L = _cdiv(B * C - P, 9 * a)              # Q <= P
        R = (B * C) // (9 * a)                   # Q >= 0
        rhi = np.where(B > 0, (C * C - P) // (3 * np.where(B > 0, B, 1)), _SENT)
        rlo = np.where(B < 0, _cdiv(C * C - P, 3 * np.where(B < 0, B, -1)), -_SENT)
        flat = (B == 0) & (C * C < P)            # R >= P fails for every d
        rhi = np.where(flat, -_SENT, rhi)
        L = np.maximum(L, rlo)
        R = np.minimum(R, rhi)

        a2 = np.full(B.shape, -27 * a * a, dtype=np.int64)
        a1 = 18 * a * B * C - 4 * B**3
        a0 = B * B * C * C - 4 * a * C**3

        uL, uR = _band_le(a2, a1, a0, lo_eff - 1)  # disc >= lo inside (uL, uR)
        L = np.maximum(L, uL + 1)
        R = np.minimum(R, uR - 1)
        wL, wR = _band_le(a2, a1, a0, X)           # disc <= X outside (wL, wR)
        p1, p2 = _cut(L, R, wL, wR)

        A = np.full(B.shape, a, dtype=np.int64)
        chunks.append(_materialize([p1, p2], A, B, C))
        a += 1
    if not chunks:
        return np.empty((0, 4), dtype=np.int64)
    return np.concatenate(chunks)


# ------------------------------------------------------------------ filters


def _disc_vec(m):
    A, B, C, D = m[:, 0], m[:, 1], m[:, 2], m[:, 3]
    return (18 * A * B * C * D - 4 * B**3 * D + B * B * C * C
            - 4 * A * C**3 - 27 * A * A * D * D)


def _hessian_vec(m):
    A, B, C, D = m[:, 0], m[:, 1], m[:, 2], m[:, 3]
    return B * B - 3 * A * C, B * C - 9 * A * D, C * C - 3 * B * D


def _check_region(m, disc, sign, lo, hi):
    absd = np.abs(disc)
    assert np.all((np.sign(disc) == sign) & (absd >= lo) & (absd < hi)), \
        "sweep emitted a form outside its window"
    A, B, C, D = m[:, 0], m[:, 1], m[:, 2], m[:, 3]
    assert np.all(A > 0)
    if sign < 0:
        t1 = A * D - B * C
        assert np.all(t1 > 0)
        assert np.all((A + B) ** 2 + A * C - t1 > 0)
        assert np.all(D * D - B * D + A * C - A * A > 0)
    else:
        P, Q, R = _hessian_vec(m)
        assert np.all((P > 0) & (Q >= 0) & (Q <= P) & (P <= R))


def _irreducible_mask(m):
    n = len(m)
    und = np.ones(n, dtype=bool)
    irr = np.zeros(n, dtype=bool)
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        idx = np.flatnonzero(und)
        if idx.size == 0:
            return irr
        A, B, C, D = (m[idx, j] for j in range(4))
        has_root = A % q == 0
        for k in range(q):
            has_root |= (((A * k + B) * k + C) * k + D) % q == 0
        clean = ~has_root
        irr[idx[clean]] = True
        und[idx[clean]] = False
    for i in np.flatnonzero(und):
        irr[i] = is_irreducible(BinaryCubicForm(*(int(x) for x in m[i])))
    return irr


def _lex_less(x, y):
    out = np.zeros(len(x), dtype=bool)
    done = np.zeros(len(x), dtype=bool)
    for j in range(4):
        lt = x[:, j] < y[:, j]
        gt = x[:, j] > y[:, j]
        out |= lt & ~done
        done |= lt | gt
    return out


def _apply_vec(m, g):
    al, be, ga, de = g.g11, g.g21, g.g12, g.g22
    A, B, C, D = m[:, 0], m[:, 1], m[:, 2], m[:, 3]
    out = np.empty_like(m)
    out[:, 0] = A * al**3 + B * al * al * ga + C * al * ga * ga + D * ga**3
    out[:, 1] = (3 * A * al * al * be + B * (al * al * de + 2 * al * be * ga)
                 + C * (2 * al * ga * de + be * ga * ga) + 3 * D * ga * ga * de)
    out[:, 2] = (3 * A * al * be * be + B * (2 * al * be * de + be * be * ga)
                 + C * (al * de * de + 2 * be * ga * de) + 3 * D * ga * de * de)
    out[:, 3] = A * be**3 + B * be * be * de + C * be * de * de + D * de**3
    return out


def _cone_keep_mask(m):
    """Among Hessian-cone boundary forms, keep only the orbit lex minimum."""
    P, Q, R = _hessian_vec(m)
    border = (Q == 0) | (Q == P) | (P == R)
    keep = np.ones(len(m), dtype=bool)
    idx = np.flatnonzero(border)
    if idx.size == 0:
        return keep
    sub = m[idx]
    best = sub.copy()
    for g in SMALL_GL2:
        cand = _apply_vec(sub, g)
        neg = cand[:, 0] < 0
        cand[neg] = -cand[neg]
        p, q, r = (cand[:, 1] ** 2 - 3 * cand[:, 0] * cand[:, 2],
                   cand[:, 1] * cand[:, 2] - 9 * cand[:, 0] * cand[:, 3],
                   cand[:, 2] ** 2 - 3 * cand[:, 1] * cand[:, 3])
        ok = (cand[:, 0] > 0) & (q >= 0) & (q <= p) & (p <= r)
        better = ok & _lex_less(cand, best)
        best[better] = cand[better]
    keep[idx] = ~_lex_less(best, sub)
    return keep


# ------------------------------------------------------------- factor tables

_spf_state: dict = {}


def _spf_table(limit: int) -> np.ndarray:
    table = _spf_state.get("table")
    if table is not None and len(table) > limit:
        return table
    spf = np.zeros(limit + 1, dtype=np.int32)
    spf[1] = 1
    spf[2::2] = 2
    for i in range(3, math.isqrt(limit) + 1, 2):
        if spf[i] == 0:
            sl = spf[i * i::i]
            sl[sl == 0] = i
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest.astype(np.int32)
    spf[0] = 0
    _spf_state["table"] = spf
    return spf


def _factor_pairs(absdisc: np.ndarray, spf: np.ndarray):
    """CSR-style (record index, prime, exponent) triples, primes ascending."""
    v = absdisc.copy()
    idx_parts, p_parts, e_parts = [], [], []
    active = np.flatnonzero(v > 1)
    while active.size:
        vv = v[active]
        p = spf[vv].astype(np.int64)
        e = np.zeros(active.size, dtype=np.int64)
        while True:
            q, r = np.divmod(vv, p)
            hit = r == 0
            if not hit.any():
                break
            vv[hit] = q[hit]
            e[hit] += 1
        v[active] = vv
        idx_parts.append(active.copy())
        p_parts.append(p)
        e_parts.append(e)
        active = active[vv > 1]
    if not idx_parts:
        z = np.empty(0, dtype=np.int64)
        return z, z, z
    idx = np.concatenate(idx_parts)
    ps = np.concatenate(p_parts)
    es = np.concatenate(e_parts)
    order = np.lexsort((ps, idx))
    return idx[order], ps[order], es[order]


def _mod_inverse_vec(x: np.ndarray, p: int) -> np.ndarray:
    # x^(p-2) mod p by binary powering
    result = np.ones_like(x)
    base = x % p
    e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def _f_mod(m, k, mod):
    A, B, C, D = m[:, 0], m[:, 1], m[:, 2], m[:, 3]
    return (((A * k % mod + B) * k % mod + C) * k % mod + D) % mod


def _fprime_mod(m, k, mod):
    A, B, C = m[:, 0], m[:, 1], m[:, 2]
    return ((3 * A * k % mod + 2 * B) * k % mod + C) % mod


def _nonmax_mask(m, pair_idx, pair_p, pair_e):
    """Records whose ring fails maximality at some prime (content 1 input)."""
    nonmax = np.zeros(len(m), dtype=bool)

    sub = pair_idx[(pair_p == 2) & (pair_e >= 2)]
    if sub.size:
        A, B, C, D = (m[sub, j] for j in range(4))
        f11 = A + B + C + D
        bad = (((D % 4 == 0) & (C % 2 == 0))
               | ((f11 % 4 == 0) & ((A + C) % 2 == 0))
               | ((A % 4 == 0) & (B % 2 == 0)))
        nonmax[sub[bad]] = True

    sub = pair_idx[(pair_p == 3) & (pair_e >= 2)]
    if sub.size:
        ms = m[sub]
        bad = (ms[:, 0] % 9 == 0) & (ms[:, 1] % 3 == 0)
        for k in (0, 1, 2):
            bad |= (_f_mod(ms, k, 9) == 0) & (_fprime_mod(ms, k, 3) == 0)
        nonmax[sub[bad]] = True

    big = (pair_p >= 5) & (pair_e >= 2)
    for p in np.unique(pair_p[big]):
        p = int(p)
        sub = pair_idx[big & (pair_p == p)]
        ms = m[sub]
        pp = p * p
        A, B = ms[:, 0], ms[:, 1]
        hp = (B * B - 3 * A * ms[:, 2]) % p
        hq = (B * ms[:, 2] - 9 * A * ms[:, 3]) % p
        hr = (ms[:, 2] ** 2 - 3 * B * ms[:, 3]) % p
        triple = (hp == 0) & (hq == 0) & (hr == 0)
        bad = np.zeros(len(ms), dtype=bool)

        at_inf = (triple & (A % p == 0)) | (~triple & (hp == 0))
        if at_inf.any():
            assert np.all(A[at_inf] % p == 0) and np.all(B[at_inf] % p == 0)
            assert np.all(hq[~triple & (hp == 0)] == 0)
            bad[at_inf] = A[at_inf] % pp == 0
        fin = ~at_inf
        if fin.any():
            k = np.zeros(len(ms), dtype=np.int64)
            t_fin = triple & fin
            if t_fin.any():
                k[t_fin] = (-B[t_fin] % p) * _mod_inverse_vec(3 * A[t_fin], p) % p
            d_fin = ~triple & fin
            if d_fin.any():
                k[d_fin] = (-hq[d_fin] % p) * _mod_inverse_vec(2 * hp[d_fin], p) % p
            fk = _f_mod(ms, k, pp)
            # the located point must really be a repeated root
            assert np.all(fk[fin] % p == 0)
            assert np.all(_fprime_mod(ms, k, p)[fin] == 0)
            bad[fin] = fk[fin] == 0
        nonmax[sub[bad]] = True
    return nonmax


def _total_flags(m, pair_idx, pair_p, pair_e):
    """T/P tag per ramified prime, with exponent consistency tripwires."""
    total = np.zeros(len(pair_p), dtype=bool)

    m5 = pair_p >= 5
    assert np.all((pair_e[m5] == 1) | (pair_e[m5] == 2)), "bad exponent at p >= 5"
    total[m5] = pair_e[m5] == 2
    if m5.any():
        sub = pair_idx[m5]
        hp, hq, hr = _hessian_vec(m[sub])
        p = pair_p[m5]
        triple = (hp % p == 0) & (hq % p == 0) & (hr % p == 0)
        assert np.all(triple == total[m5]), "Hessian test disagrees with exponent"

    m3 = pair_p == 3
    e3 = pair_e[m3]
    assert np.all((e3 == 1) | ((e3 >= 3) & (e3 <= 5))), "bad exponent at 3"
    total[m3] = e3 >= 3
    if m3.any():
        sub = pair_idx[m3]
        triple = (m[sub, 1] % 3 == 0) & (m[sub, 2] % 3 == 0)
        assert np.all(triple == total[m3]), "mod-3 cube test disagrees with exponent"

    m2 = pair_p == 2
    e2 = pair_e[m2]
    assert np.all((e2 == 2) | (e2 == 3)), "bad exponent at 2"
    if m2.any():
        sub = pair_idx[m2]
        r = (m[sub] & 1).astype(bool)
        triple = ((r[:, 0] & r[:, 1] & r[:, 2] & r[:, 3])
                  | (r[:, 0] & ~r[:, 1] & ~r[:, 2] & ~r[:, 3])
                  | (~r[:, 0] & ~r[:, 1] & ~r[:, 2] & r[:, 3]))
        assert not np.any(triple & (e2 == 3)), "wild cube with odd exponent"
        total[m2] = triple
    return total


def _cyclic_mask(disc: np.ndarray) -> np.ndarray:
    out = np.zeros(len(disc), dtype=bool)
    pos = disc > 0
    r = np.sqrt(disc[pos].astype(np.float64)).astype(np.int64)
    d = disc[pos]
    out[pos] = (r * r == d) | ((r + 1) ** 2 == d) | ((r - 1) * (r - 1) == d)
    return out


# ------------------------------------------------------------------- batches


@dataclass
class WindowBatch:
    """One |disc| window of fields, already sorted by (|disc|, a, b, c, d)."""

    coeffs: np.ndarray       # (n, 4) int64
    disc: np.ndarray         # (n,)   int64, signed
    cyclic: np.ndarray       # (n,)   bool
    prof_ptr: np.ndarray     # (n+1,) CSR offsets into the three pair arrays
    prof_p: np.ndarray
    prof_e: np.ndarray
    prof_total: np.ndarray

    @property
    def size(self) -> int:
        return len(self.disc)


def _build_batch(lo: int, hi: int, sign: int, spf: np.ndarray) -> WindowBatch:
    m = _sweep_negative(lo, hi) if sign < 0 else _sweep_positive(lo, hi)
    disc = _disc_vec(m)
    _check_region(m, disc, sign, max(lo, 1), hi)

    prim = (np.gcd(np.gcd(m[:, 0], m[:, 1]), np.gcd(m[:, 2], m[:, 3])) == 1)
    m, disc = m[prim], disc[prim]

    irr = _irreducible_mask(m)
    m, disc = m[irr], disc[irr]

    if sign > 0:
        keep = _cone_keep_mask(m)
        m, disc = m[keep], disc[keep]

    order = np.lexsort((m[:, 3], m[:, 2], m[:, 1], m[:, 0], np.abs(disc)))
    m, disc = m[order], disc[order]

    pair_idx, pair_p, pair_e = _factor_pairs(np.abs(disc), spf)
    nonmax = _nonmax_mask(m, pair_idx, pair_p, pair_e)

    keep = ~nonmax
    new_pos = np.cumsum(keep) - 1
    pair_keep = keep[pair_idx]
    pair_idx = new_pos[pair_idx[pair_keep]]
    pair_p = pair_p[pair_keep]
    pair_e = pair_e[pair_keep]
    m, disc = m[keep], disc[keep]

    total = _total_flags(m, pair_idx, pair_p, pair_e)
    counts = np.bincount(pair_idx, minlength=len(m)).astype(np.int64)
    ptr = np.concatenate(([0], np.cumsum(counts)))
    return WindowBatch(m, disc, _cyclic_mask(disc), ptr, pair_p, pair_e, total)


def subset_batch(batch: WindowBatch, mask: np.ndarray) -> WindowBatch:
    """Restrict a batch to the records selected by a boolean mask."""
    counts = np.diff(batch.prof_ptr)[mask]
    pair_keep = np.repeat(mask, np.diff(batch.prof_ptr))
    ptr = np.concatenate(([0], np.cumsum(counts)))
    return WindowBatch(batch.coeffs[mask], batch.disc[mask], batch.cyclic[mask],
                       ptr, batch.prof_p[pair_keep], batch.prof_e[pair_keep],
                       batch.prof_total[pair_keep])


def iter_batches(rng: EnumerationRange, sign: int) -> Iterator[WindowBatch]:
    """Window-sized batches of fields, globally ordered by (|disc|, coeffs)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    spf = _spf_table(max(rng.upper - 1, 3))
    for lo, hi in _windows(rng):
        yield _build_batch(lo, hi, sign, spf)


def _batch_record(batch: WindowBatch, i: int) -> CubicFieldRecord:
    s, e = batch.prof_ptr[i], batch.prof_ptr[i + 1]
    profile = tuple(
        RamifiedPrime(int(batch.prof_p[j]), int(batch.prof_e[j]),
                      bool(batch.prof_total[j]))
        for j in range(s, e)
    )
    a, b, c, d = (int(x) for x in batch.coeffs[i])
    return CubicFieldRecord(a, b, c, d, int(batch.disc[i]),
                            bool(batch.cyclic[i]), profile)


def enumerate_fields(rng: EnumerationRange, sign: int) -> Iterator[CubicFieldRecord]:
    """All cubic fields with sign(disc) = sign and lower <= |disc| < upper.

    Yields one record per field (cyclic ones included, flagged), ordered by
    |disc| and then lexicographically by the canonical form coefficients.
    """
    for batch in iter_batches(rng, sign):
        for i in range(batch.size):
            yield _batch_record(batch, i)


# -------------------------------------------------------------------- oracle


def _oracle_d_values(a, b, c, bound, sign):
    """Integers d with 1 <= |disc(a,b,c,d)| < bound and the wanted sign."""
    a2 = -27 * a * a
    a1 = 18 * a * b * c - 4 * b**3
    a0 = b * b * c * c - 4 * a * c**3
    y = bound - 1
    t_outer, t_inner = (1, y) if sign > 0 else (-y, -1)

    def roots(t):
        dd = a1 * a1 - 4 * a2 * (a0 - t)
        if dd < 0:
            return None
        s = math.sqrt(dd)
        return (-a1 + s) / (2 * a2), (-a1 - s) / (2 * a2)

    outer = roots(t_outer)
    if outer is None:
        return []
    inner = roots(t_inner)
    if inner is None:
        runs = [outer]
    else:
        runs = [(outer[0], inner[0]), (inner[1], outer[1])]
    out = set()
    for lo, hi in runs:
        for d in range(math.floor(lo) - 2, math.ceil(hi) + 3):
            v = (a2 * d + a1) * d + a0
            if v != 0 and abs(v) < bound and (v > 0) == (sign > 0):
                out.add(d)
    return sorted(out)


def brute_force_enumerate(upper: int, sign: int) -> list[CubicFieldRecord]:
    """Oracle enumeration by box scan plus per-form reduction.

    Scans a generous coefficient box for every form with |disc| < upper of
    the requested sign, keeps the irreducible maximal ones, canonicalizes
    each survivor and deduplicates.  Shares no run arithmetic with the
    sweep, so agreement with enumerate_fields is a real cross-check.
    Intended for small ranges only (upper <= 100000).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if upper > _ORACLE_LIMIT:
        raise ValueError("oracle is for small ranges")
    y = upper - 1
    if y < 1:
        return []
    seen = {}
    amax = math.ceil(y**0.25) + 1
    bmax = math.ceil(2.6 * y**0.25) + 2
    cmax = math.ceil(2.6 * math.sqrt(y)) + 2
    for a in range(1, amax + 1):
        for b in range(-bmax, bmax + 1):
            for c in range(-cmax, cmax + 1):
                for d in _oracle_d_values(a, b, c, upper, sign):
                    f = BinaryCubicForm(a, b, c, d)
                    if content(f) != 1 or not is_irreducible(f):
                        continue
                    dd = discriminant(f)
                    fact = factorize(dd)
                    if not is_maximal(f, fact):
                        continue
                    cf = canonical_reduce(f)
                    if cf not in seen:
                        profile = ramification_profile(cf, fact)
                        seen[cf] = CubicFieldRecord(cf.a, cf.b, cf.c, cf.d, dd,
                                                    is_cyclic(cf), profile)
    return sorted(seen.values(), key=lambda r: (abs(r.disc), r.a, r.b, r.c, r.d))
