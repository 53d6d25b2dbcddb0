import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from s3census.forms import BinaryCubicForm as F, discriminant
from s3census.local_analysis import (
    Factorization,
    SplittingType,
    factorize,
    has_triple_root,
    is_cyclic,
    is_maximal,
    is_maximal_at,
    ramification_profile,
    splitting_type,
)

# ---------------------------------------------------- polynomial arithmetic
# small F_p[x] toolkit so the oracles below share nothing with the library


def trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def pmul(f, g, p):
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def pdivmod(f, g, p):
    f = f[:]
    inv = pow(g[-1], -1, p)
    q = [0] * max(0, len(f) - len(g) + 1)
    while len(f) >= len(g) and trim(f):
        k = len(f) - len(g)
        coef = f[-1] * inv % p
        q[k] = coef
        for i, b in enumerate(g):
            f[i + k] = (f[i + k] - coef * b) % p
        trim(f)
    return trim(q), f


def pgcd(f, g, p):
    f, g = trim([c % p for c in f]), trim([c % p for c in g])
    while g:
        f, g = g, pdivmod(f, g, p)[1]
    if f:
        inv = pow(f[-1], -1, p)
        f = [c * inv % p for c in f]
    return f


def factor_cubic_mod_p(f, p):
    """Irreducible factors (with multiplicity) of a monic cubic mod p."""
    fac = []
    rest = f[:]
    for k in range(p):
        while True:
            q, r = pdivmod(rest, [(-k) % p, 1], p)
            if r:
                break
            fac.append([(-k) % p, 1])
            rest = q
        if len(rest) == 1:
            break
    if len(rest) > 1:
        fac.append(rest)
    return fac


def dedekind_maximal(f, p):
    """Dedekind's index criterion for Z[x]/(f), f monic cubic."""
    fp = [c % p for c in f]
    fac = factor_cubic_mod_p(fp, p)
    gbar = [1]
    seen = []
    for q in fac:
        if q not in seen:
            seen.append(q)
            gbar = pmul(gbar, q, p)
    hbar, rem = pdivmod(fp, gbar, p)
    assert not rem
    # integer lift, then F = (g*h - f)/p
    gh = [0] * 4
    for i, a in enumerate(gbar):
        for j, b in enumerate(hbar):
            gh[i + j] += a * b
    big = [(gh[i] - f[i]) for i in range(4)]
    assert all(x % p == 0 for x in big)
    fbig = [x // p for x in big]
    g1 = pgcd(fbig, gbar, p)
    g2 = pgcd(g1, hbar, p)
    return len(g2) <= 1


def proj_multiplicities(form, p):
    """Multiplicity of every projective root of form mod p, brute force."""
    out = {}
    poly = trim([form.d % p, form.c % p, form.b % p, form.a % p])
    inf_mult = 4 - len(poly) if poly else 4
    if inf_mult:
        out["inf"] = inf_mult
    for k in range(p):
        m = 0
        rest = poly[:]
        while len(rest) > 1:
            q, r = pdivmod(rest, [(-k) % p, 1], p)
            if r:
                break
            m += 1
            rest = q
        if m:
            out[k] = m
    return out


# -------------------------------------------------------------- small cases


def test_known_maximality():
    assert not is_maximal_at(F(1, 0, 0, -4), 2)   # Z[x]/(x^3-4): index 2 at p=2
    assert is_maximal_at(F(1, 0, 0, -2), 2)
    assert is_maximal_at(F(1, 0, 0, -2), 3)
    assert is_maximal(F(1, 0, 0, -2), factorize(-108))
    assert not is_maximal(F(1, 0, 0, -4), factorize(discriminant(F(1, 0, 0, -4))))


def test_is_maximal_rejects_wrong_factorization():
    with pytest.raises(ValueError):
        is_maximal(F(1, 0, -1, -1), factorize(-24))


def test_known_splitting():
    assert splitting_type(F(2, 1, 0, 1), 2) is SplittingType.PARTIAL
    assert splitting_type(F(1, 0, -1, -1), 5) is SplittingType.MIXED
    assert splitting_type(F(1, 0, 0, -2), 2) is SplittingType.TOTAL
    assert splitting_type(F(1, 0, 0, -2), 3) is SplittingType.TOTAL
    assert splitting_type(F(1, 0, 0, -2), 5) is SplittingType.MIXED
    with pytest.raises(ValueError):
        splitting_type(F(2, 2, 4, 2), 2)


def test_triple_root_set_mod_2():
    # mod 2 the forms with a triple root are exactly these three residues
    want = {(1, 1, 1, 1), (1, 0, 0, 0), (0, 0, 0, 1)}
    got = set()
    for a in (0, 1):
        for b in (0, 1):
            for c in (0, 1):
                for d in (0, 1):
                    if (a, b, c, d) == (0, 0, 0, 0):
                        continue
                    if has_triple_root(F(a, b, c, d), 2):
                        got.add((a, b, c, d))
    assert got == want


def test_profiles():
    prof = ramification_profile(F(1, 0, 0, -2), factorize(-108))
    assert [str(r) for r in prof] == ["2:2:T", "3:3:T"]
    prof = ramification_profile(F(1, 0, -1, -1), factorize(-23))
    assert [str(r) for r in prof] == ["23:1:P"]


def test_cyclic_flag():
    assert is_cyclic(F(1, 1, -2, -1))        # disc 49
    assert not is_cyclic(F(1, -1, 2, -1))    # disc -23
    assert not is_cyclic(F(1, 0, 0, -2))     # disc -108


def test_factorization_type():
    f = factorize(-360)
    assert f.sign == -1 and f.factors == ((2, 3), (3, 2), (5, 1))
    assert f.value() == -360
    assert f.exponent(3) == 2 and f.exponent(7) == 0
    with pytest.raises(ValueError):
        Factorization(1, ((4, 1),) + ((3, 1),))
    with pytest.raises(ValueError):
        factorize(0)


# ------------------------------------------------------------ cross oracles

PRIMES = (2, 3, 5, 7, 11, 13)

monic_forms = st.builds(
    F, st.just(1),
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=-20, max_value=20),
)


@settings(deadline=None, max_examples=200)
@given(monic_forms, st.sampled_from(PRIMES))
def test_maximality_matches_dedekind(f, p):
    """For monic forms the ring is Z[x]/(f), so Dedekind's criterion applies."""
    if discriminant(f) == 0:
        return
    poly = [f.d, f.c, f.b, f.a]
    assert is_maximal_at(f, p) == dedekind_maximal(poly, p)


any_forms = st.builds(
    F,
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=-20, max_value=20),
)


@settings(deadline=None, max_examples=200)
@given(any_forms, st.sampled_from(PRIMES))
def test_nonmaximal_forces_square_disc(f, p):
    d = discriminant(f)
    if d == 0:
        return
    if not is_maximal_at(f, p):
        assert d % (p * p) == 0


@settings(deadline=None, max_examples=200)
@given(any_forms, st.sampled_from(PRIMES))
def test_splitting_against_multiplicity_oracle(f, p):
    d = discriminant(f)
    if d == 0 or all(x % p == 0 for x in f.coefficients()):
        return
    mults = proj_multiplicities(f, p)
    stype = splitting_type(f, p)
    worst = max(mults.values(), default=0)
    if stype is SplittingType.TOTAL:
        assert worst == 3
    elif stype is SplittingType.PARTIAL:
        assert worst == 2
    else:
        assert worst <= 1
        roots = len(mults)
        assert {SplittingType.SPLIT: 3, SplittingType.MIXED: 1,
                SplittingType.INERT: 0}[stype] == roots


def test_unramified_split_matches_frobenius_gcd():
    # number of roots of a squarefree cubic mod p equals deg gcd(x^p - x, f)
    rng = random.Random(3)
    done = 0
    while done < 120:
        p = PRIMES[rng.randrange(len(PRIMES))]
        f = F(rng.randint(-9, 9), rng.randint(-9, 9),
              rng.randint(-9, 9), rng.randint(-9, 9))
        d = discriminant(f)
        if d == 0 or d % p == 0 or f.a % p == 0:
            continue
        fp = [f.d % p, f.c % p, f.b % p, f.a % p]
        # x^p mod f by square and multiply
        xp = [0, 1]
        e = p
        acc = [1]
        while e:
            if e & 1:
                acc = pdivmod(pmul(acc, xp, p), fp, p)[1]
            xp = pdivmod(pmul(xp, xp, p), fp, p)[1]
            e >>= 1
        acc = acc + [0] * (2 - len(acc))
        acc[1] = (acc[1] - 1) % p  # x^p - x
        g = pgcd(acc, fp, p)
        affine_roots = len(g) - 1
        stype = splitting_type(f, p)
        want = {SplittingType.SPLIT: 3, SplittingType.MIXED: 1,
                SplittingType.INERT: 0}[stype]
        assert affine_roots == want
        done += 1


@settings(deadline=None, max_examples=150)
@given(monic_forms)
def test_factorize_roundtrip(f):
    n = discriminant(f)
    if n == 0:
        return
    fac = factorize(n)
    assert fac.value() == n
    from s3census.local_analysis import _is_prime
    assert all(_is_prime(p) for p, _ in fac.factors)
