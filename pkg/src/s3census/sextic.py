"""From non-cyclic cubic fields to their Galois closures.

A non-cyclic cubic field K has an S3 sextic closure Kt, and every such
sextic arises exactly once this way, so tabulating sextic fields by
|disc(Kt)| reduces to tabulating cubic fields with a discriminant
translation.  Two independent routes to disc(Kt) are implemented:

* resolvent route: disc(Kt) = disc(K)^2 * F, with F the fundamental
  discriminant of the quadratic resolvent Q(sqrt(disc K));
* local route: v_p(disc Kt) is read off the ramification profile alone
  (3 * v_p(disc K) when p is not totally ramified in K, 2 * v_p when it
  is and p != 3, and 7/8/11 for v_3 = 3/4/5 when 3 is).

They must agree exponent by exponent; every entry point checks that they
do, which guards the profile tags, the factorization and the resolvent
arithmetic against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from s3census.enumeration import CubicFieldRecord, WindowBatch
from s3census.local_analysis import Factorization, RamifiedPrime, factorize

_TOTAL_AT_3 = {3: 7, 4: 8, 5: 11}


def squarefree_kernel(fact: Factorization) -> int:
    """Signed product of the primes appearing to an odd power."""
    k = fact.sign
    for p, e in fact.factors:
        if e % 2:
            k *= p
    return k


def fundamental_discriminant(n: int) -> int:
    """Discriminant of Q(sqrt(n)); 1 when n is a square."""
    s = squarefree_kernel(factorize(n))
    f = s if s % 4 == 1 else 4 * s
    assert f % 4 in (0, 1)
    return f


def _local_exponent(rp: RamifiedPrime) -> int:
    if not rp.total:
        return 3 * rp.e
    if rp.p == 3:
        return _TOTAL_AT_3[rp.e]
    return 2 * rp.e


def sextic_discriminant(disc: int, profile: Iterable[RamifiedPrime]) -> int:
    """Discriminant of the S3 closure of a cubic field.

    disc and profile must describe the same non-cyclic field; cyclic input
    (square discriminant, trivial resolvent) is rejected.  Both discriminant
    routes are evaluated and compared before the value is returned.
    """
    fact = factorize(disc)
    prof = tuple(profile)
    if [(p, e) for p, e in fact.factors] != [(rp.p, rp.e) for rp in prof]:
        raise ValueError("profile does not match the discriminant")
    s = squarefree_kernel(fact)
    if s == 1:
        raise ValueError("cyclic cubic fields have no S3 closure")
    f = s if s % 4 == 1 else 4 * s

    local = 1 if disc > 0 else -1
    for rp in prof:
        local *= rp.p ** _local_exponent(rp)
    v2f = 0 if f % 2 else (3 if s % 2 == 0 else 2)
    for rp in prof:
        vf = v2f if rp.p == 2 else rp.e % 2
        assert _local_exponent(rp) == 2 * rp.e + vf, \
            "discriminant routes disagree at a prime"
        if rp.p == 2 and rp.e == 2:
            assert rp.total == (s % 4 == 1), \
                "wild tag at 2 inconsistent with the resolvent"
    resolvent = disc * disc * f
    assert local == resolvent, "discriminant routes disagree"
    return resolvent


def cube_defect_at_three(disc: int) -> int:
    """3-part of disc(K)^3 / disc(Kt): 1, 9 or 81 as v_3(disc) is <3, =3, >3.

    Totally ramified wild cubes at 3 are the only place where the closure
    discriminant falls behind the full cube of the cubic discriminant by
    more than the tame square factors.
    """
    v3 = 0
    n = abs(disc)
    while n % 3 == 0:
        v3 += 1
        n //= 3
    if v3 < 3:
        return 1
    return 9 if v3 == 3 else 81


@dataclass(frozen=True)
class SexticRecord:
    cubic: CubicFieldRecord
    disc: int

    @property
    def sign(self) -> int:
        return 1 if self.disc > 0 else -1


def build_sextic(record: CubicFieldRecord) -> SexticRecord:
    if record.cyclic:
        raise ValueError("cyclic cubic fields have no S3 closure")
    return SexticRecord(record, sextic_discriminant(record.disc, record.profile))


# ----------------------------------------------------------------- vector API


def _kernel_vec(batch: WindowBatch) -> np.ndarray:
    """Signed squarefree kernel of each record's discriminant."""
    factors = np.where(batch.prof_e % 2 == 1, batch.prof_p, 1)
    s = np.ones(batch.size, dtype=np.int64)
    counts = np.diff(batch.prof_ptr)
    starts = batch.prof_ptr[:-1]
    for r in range(int(counts.max(initial=0))):
        has = counts > r
        s[has] *= factors[starts[has] + r]
    return np.where(batch.disc < 0, -s, s)


def _pair_records(batch: WindowBatch) -> np.ndarray:
    counts = np.diff(batch.prof_ptr)
    return np.repeat(np.arange(batch.size, dtype=np.int64), counts)


def resolvent_vec(batch: WindowBatch) -> np.ndarray:
    """Fundamental resolvent discriminant F per record, fully cross-checked.

    Every record must be non-cyclic.  The per-prime closure exponents from
    the profile tags are checked against 2*e + v_p(F) before F is returned,
    so a single inconsistent tag anywhere in the batch raises.
    """
    assert not batch.cyclic.any(), "cyclic records have no S3 closure"
    s = _kernel_vec(batch)
    assert np.all(s != 1), "trivial resolvent on a non-cyclic record"
    f = np.where(s % 4 == 1, s, 4 * s)

    rec = _pair_records(batch)
    p, e, total = batch.prof_p, batch.prof_e, batch.prof_total
    lemma = np.where(total, 2 * e, 3 * e)
    at3 = total & (p == 3)
    lut = np.array([0, 0, 0, 7, 8, 11], dtype=np.int64)
    lemma[at3] = lut[e[at3]]

    s_at = s[rec]
    v2f = np.where(s_at % 2 == 0, 3, np.where(s_at % 4 == 1, 0, 2))
    vf = np.where(p == 2, v2f, e % 2)
    assert np.all(lemma == 2 * e + vf), "discriminant routes disagree at a prime"

    wild2 = (p == 2) & (e == 2)
    assert np.all(total[wild2] == (s_at[wild2] % 4 == 1)), \
        "wild tag at 2 inconsistent with the resolvent"
    return f


def _bound_longdouble(x: int) -> np.longdouble:
    # np.longdouble(big python int) detours through float64 and can be off
    # by ~1e7 near 1e23; two 32-bit limbs keep the error at one longdouble ulp
    hi, lo = divmod(x, 1 << 32)
    return np.longdouble(hi) * np.longdouble(4294967296.0) + np.longdouble(lo)


def abs_sextic_below(disc: np.ndarray, f: np.ndarray, x: int) -> np.ndarray:
    """Mask of records with |disc^2 * F| < x, exact at the boundary.

    |disc(Kt)| overflows int64 well inside the ranges of interest, so the
    comparison runs in extended-precision floats with an exact integer
    recheck on the narrow uncertain band.
    """
    mag = np.abs(disc).astype(np.longdouble)
    t = mag * mag * np.abs(f).astype(np.longdouble)
    xl = _bound_longdouble(x)
    out = t < xl
    slack = 8 * xl * np.finfo(np.longdouble).eps + np.longdouble(16)
    band = np.abs(t - xl) <= slack
    for i in np.flatnonzero(band):
        out[i] = int(disc[i]) ** 2 * abs(int(f[i])) < x
    return out


def sextic_residues(disc: np.ndarray, f: np.ndarray, mod: int) -> np.ndarray:
    """disc^2 * F mod `mod`, with the sign folded in the usual math way."""
    d = disc % mod
    return (d * d % mod) * (f % mod) % mod
