"""Region-dispatched numerical evaluation of Phi(s, z, c) and relatives.

Phi(s,z,c) = sum_{n>=0} z^n (n+c)^{-s} on |z| < 1, continued to the cut
plane z not in [1, infinity) on the principal branch (powers of n+c use
the principal log).  Four strategies cover the parameter space:

series      |z| <= 0.75 (geometric tail majorant, certified bound)
integral    Gamma(s)^{-1} * int_0^inf t^{s-1} e^{-ct} / (1 - z e^{-t}) dt
            for Re(s) > 0, Re(c) > 0, z off the cut
c_shift     Phi(s,z,c) = sum_{k<N} z^k (c+k)^{-s} + z^N Phi(s,z,c+N),
            pushes Re(c) into the right half-plane, then re-dispatches
reflection  for Re(s) <= 0: the three-term transformation formula in the
            Lerch-zeta coordinates (a = Log z / 2 pi i, semi-principal
            Log), whose right-hand side lives at s' = 1 - s, Re(s') > 1/2

plus an exact short-circuit: integer s <= 0 with rational (z, c) is the
bivariate rational from special_values, returned exactly.

Evaluation refuses within 1e-8 of the singular strata z = 1 and
c in {0, -1, -2, ...} rather than returning garbage; z on [1, infinity)
is a branch error (the principal value is ambiguous there).
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import count

from .branch_numerics import (
    branched_power,
    complex_gamma,
    principal_log,
    quad_semiaxis,
    reciprocal_gamma,
    semi_principal_log,
    sum_with_tail_bound,
)
from .errors import AccuracyError, BranchError, DomainError, PoleError, StratumError
from .special_values import negative_polylog, q_ratio

__all__ = [
    "LerchPoint",
    "StratumClass",
    "EvalResult",
    "classify_stratum",
    "phi_series",
    "phi_integral",
    "phi_c_shift",
    "phi_reflect",
    "phi",
    "lerch_zeta",
    "periodic_zeta",
    "hurwitz_zeta",
    "extended_polylog",
]

_2PI_I = 2j * math.pi
_NEAR = 1e-8       # refuse within this distance of z=1 / c in Z_{<=0}
_INT_TOL = 1e-12   # integer detection for inexact inputs


@dataclass(frozen=True)
class LerchPoint:
    s: object
    z: object
    c: object


@dataclass(frozen=True)
class StratumClass:
    tag: str
    flags: tuple = ()

    def __str__(self):
        return self.tag


@dataclass(frozen=True)
class EvalResult:
    value: complex
    method: str
    error_estimate: float
    exact: object = None  # Fraction when the rational path applied


def _cplx(x):
    if isinstance(x, Fraction):
        return complex(float(x))
    return complex(x)


def _as_int(x):
    """(is_integer, rounded value); exact test for int/Fraction, 1e-12
    tolerance for float/complex."""
    if isinstance(x, int):
        return True, x
    if isinstance(x, Fraction):
        return (x.denominator == 1), int(x) if x.denominator == 1 else None
    w = complex(x)
    n = round(w.real)
    if abs(w.imag) <= _INT_TOL and abs(w.real - n) <= _INT_TOL:
        return True, int(n)
    return False, None


def _dist_to_nonpos_int(c):
    w = _cplx(c)
    n = min(0.0, round(w.real))
    return abs(w - n)


def classify_stratum(p, z=None, c=None):
    """Stratum tag of a parameter point (LerchPoint or an (s,z,c) triple).

    regular / removable_c (c a positive integer) / singular_z0 /
    singular_z1 / singular_zinf / singular_c (c a non-positive integer) /
    multiple (more than one of the above degenerations at once).
    """
    if isinstance(p, LerchPoint):
        s_, z_, c_ = p.s, p.z, p.c
    else:
        s_, z_, c_ = p, z, c
    del s_  # the stratum depends only on (z, c)
    zc = _cplx(z_)
    flags = []
    if cmath.isinf(zc):
        flags.append("singular_zinf")
    elif zc == 0:
        flags.append("singular_z0")
    elif zc == 1 or abs(zc - 1) <= _INT_TOL:
        flags.append("singular_z1")
    is_int, n = _as_int(c_)
    if is_int:
        flags.append("singular_c" if n <= 0 else "removable_c")
    if not flags:
        return StratumClass("regular")
    if len(flags) == 1:
        return StratumClass(flags[0], tuple(flags))
    return StratumClass("multiple", tuple(flags))


def _guard_near_singular(z, c):
    zc = _cplx(z)
    if abs(zc - 1) < _NEAR:
        raise StratumError("z within 1e-8 of the singular point z = 1",
                           stratum="singular_z1")
    if _dist_to_nonpos_int(c) < _NEAR:
        raise StratumError(
            "c within 1e-8 of a non-positive integer (singular stratum)",
            stratum="singular_c")


def _guard_cut(z):
    """The principal branch is ambiguous on [1, inf)."""
    zc = _cplx(z)
    if abs(zc.imag) < _NEAR and zc.real >= 1.0 - _NEAR:
        raise BranchError(
            "z = %s lies on (or within 1e-8 of) the cut [1, oo); the "
            "principal value is ambiguous there" % (zc,))


# ---------------------------------------------------------------------------
# strategy: direct series
# ---------------------------------------------------------------------------

def phi_series(s, z, c, tol=1e-12, max_terms=200_000):
    """Direct summation of sum z^n (n+c)^{-s} with a certified tail bound.

    Works for |z| < 1 and any s (the geometric factor wins eventually);
    for Re(c) <= 0 the finitely many terms with Re(n+c) <= 0 simply go
    through the principal branched power like all the others.
    """
    sc, zc, cc = _cplx(s), _cplx(z), _cplx(c)
    if _dist_to_nonpos_int(c) < _NEAR:
        raise StratumError("c is (nearly) a non-positive integer",
                           stratum="singular_c")
    az = abs(zc)
    if az >= 1.0:
        raise DomainError("series strategy needs |z| < 1, got |z| = %g" % az)
    if abs(zc - 1) < _NEAR:
        raise StratumError("z within 1e-8 of z = 1", stratum="singular_z1")
    if zc == 0:
        return EvalResult(branched_power(cc, -sc), "series", 0.0)

    lz = cmath.log(zc)
    ac = abs(cc)

    def term(n):
        return cmath.exp(n * lz - sc * principal_log(n + cc))

    # Ratio majorant: for n >= n0, |t_{n+1}/t_n| <= |z| e^q <= rho < 1
    # with q = 2|s| / (n - |c|) and a margin that keeps rho away from 1.
    q_cap = min(0.15, (1.0 - az) / 3.0) if az > 0 else 0.15
    n0 = int(max(2 * ac + 2, ac + 2 * abs(sc) / q_cap)) + 1
    rho = az * math.exp(q_cap)
    geo = 1.0 / (1.0 - rho)

    def tail_bound(n):
        if n < n0:
            return math.inf
        return abs(term(n)) * geo

    res = sum_with_tail_bound((term(n) for n in count()), tail_bound,
                              tol=tol, max_terms=max_terms)
    return EvalResult(res.value, "series", res.tail_bound)


# ---------------------------------------------------------------------------
# strategy: real-axis integral
# ---------------------------------------------------------------------------

def phi_integral(s, z, c, tol=1e-12):
    """Gamma(s)^{-1} int_0^inf t^{s-1} e^{-ct}/(1 - z e^{-t}) dt.

    Valid for Re(s) > 0, Re(c) > 0, z off the cut [1, inf); the
    denominator never vanishes for real t > 0 there.
    """
    sc, zc, cc = _cplx(s), _cplx(z), _cplx(c)
    if sc.real <= 0:
        raise DomainError("integral strategy needs Re(s) > 0")
    if cc.real <= 0:
        raise DomainError("integral strategy needs Re(c) > 0")
    _guard_cut(z)
    if abs(zc - 1) < _NEAR:
        raise StratumError("z within 1e-8 of z = 1", stratum="singular_z1")
    rg = reciprocal_gamma(sc)
    sm1 = sc - 1.0

    def integrand(t):
        return cmath.exp(sm1 * math.log(t) - cc * t) / (1.0 - zc * math.exp(-t))

    qtol = 0.1 * tol / max(1.0, abs(rg))
    v, err = quad_semiaxis(integrand, tol=qtol)
    value = rg * v
    err_total = abs(rg) * err
    if err_total > tol * (1.0 + abs(value)):
        raise AccuracyError("integral route achieved only %.2g" % err_total,
                            best=value, bound=err_total)
    return EvalResult(value, "integral", err_total)


# ---------------------------------------------------------------------------
# strategy: shift c to the right
# ---------------------------------------------------------------------------

def phi_c_shift(s, z, c, n_shift, tol=1e-12):
    """Phi(s,z,c) = sum_{k<N} z^k (c+k)^{-s} + z^N Phi(s,z,c+N).

    The head terms use the principal branched power (some c+k may have
    non-positive real part); the tail re-enters the dispatcher.
    """
    if n_shift < 0:
        raise DomainError("shift count must be >= 0")
    sc, zc = _cplx(s), _cplx(z)
    cc = _cplx(c)
    head = 0j
    zpow = 1.0 + 0j
    for k in range(n_shift):
        ck = cc + k
        if abs(ck) < _NEAR:
            raise StratumError("c + %d vanishes (singular stratum)" % k,
                               stratum="singular_c")
        head += zpow * branched_power(ck, -sc)
        zpow *= zc
    inner_tol = 0.5 * tol / max(1.0, abs(zpow))
    inner = phi(sc, zc, cc + n_shift, tol=inner_tol)
    value = head + zpow * inner.value
    err = abs(zpow) * inner.error_estimate + 1e-15 * (n_shift + 1) * abs(head)
    return EvalResult(value, "c_shift", err)


# ---------------------------------------------------------------------------
# strategy: reflection to Re(s') > 1/2
# ---------------------------------------------------------------------------

def phi_reflect(s, z, c, tol=1e-12):
    """The three-term transformation formula, solved for Phi at Re(s) < 1/2.

    In Lerch-zeta coordinates z = e^{2 pi i a} (a from the semi-principal
    Log, so 0 <= Re(a) < 1):

      zeta(1-s', a, c) = (2 pi)^{-s'} Gamma(s') *
          [ e^{ i pi s'/2} e^{-2 pi i a c}     zeta(s', 1-c, a)
          + e^{-i pi s'/2} e^{ 2 pi i c(1-a)}  zeta(s', c, 1-a) ]

    with s' = 1 - s, so both inner evaluations live at Re(s') > 1/2 and
    are handled by the series/integral/c-shift strategies (for z on
    (0,1), Re(a) = 0 and the inner dispatch goes through c_shift).
    """
    sc, zc, cc = _cplx(s), _cplx(z), _cplx(c)
    if sc.real >= 0.5:
        raise DomainError("reflection strategy expects Re(s) < 1/2")
    if not 0.0 < cc.real < 1.0:
        raise DomainError("reflection needs 0 < Re(c) < 1; shift c first")
    if zc == 0:
        raise StratumError("z = 0 is a singular stratum point",
                           stratum="singular_z0")
    _guard_cut(z)
    _guard_near_singular(z, c)
    sp = 1.0 - sc
    a = semi_principal_log(zc) / _2PI_I
    z1 = cmath.exp(-_2PI_I * cc)
    z2 = cmath.exp(_2PI_I * cc)
    pref = cmath.exp(-sp * math.log(2 * math.pi)) * complex_gamma(sp)
    pa = cmath.exp(1j * math.pi * sp / 2 - _2PI_I * a * cc)
    pb = cmath.exp(-1j * math.pi * sp / 2 + _2PI_I * cc * (1.0 - a))
    scale = abs(pref) * (abs(pa) + abs(pb)) + 1.0
    inner_tol = 0.25 * tol / scale
    r1 = phi(sp, z1, a, tol=inner_tol)
    r2 = phi(sp, z2, 1.0 - a, tol=inner_tol)
    value = pref * (pa * r1.value + pb * r2.value)
    err = abs(pref) * (abs(pa) * r1.error_estimate
                       + abs(pb) * r2.error_estimate) + 1e-15 * abs(value)
    return EvalResult(value, "reflection", err)


def _reflect_with_c_normalization(s, z, c, tol):
    """Bring Re(c) into (0,1) by an integer shift, then reflect.

    Downward shift inverts the c_shift identity:
    Phi(s,z,c) = z^{-M} [ Phi(s,z,c-M) - sum_{k<M} z^k (c-M+k)^{-s} ].
    Exactly-integer Re(c) can never reach the *open* strip, which is a
    documented limitation of this route.
    """
    sc, zc, cc = _cplx(s), _cplx(z), _cplx(c)
    if 0.0 < cc.real < 1.0:
        return phi_reflect(sc, zc, cc, tol=tol)
    if abs(cc.real - round(cc.real)) <= _INT_TOL:
        raise DomainError(
            "Re(s) <= 0 with Re(c) an exact integer: the reflection route "
            "needs 0 < Re(c) < 1 after an integer shift and cannot reach "
            "the open strip; perturb c or use integer s (exact rational "
            "path) instead")
    m_shift = math.floor(cc.real)  # Re(c - m_shift) lands in (0, 1)
    head = 0j
    zpow = 1.0 + 0j
    cm = cc - m_shift
    for k in range(m_shift):
        head += zpow * branched_power(cm + k, -sc)
        zpow *= zc
    inner = phi_reflect(sc, zc, cm, tol=0.25 * tol / max(1.0, abs(zpow)))
    value = (inner.value - head) / zpow
    err = (inner.error_estimate + 1e-15 * abs(head)) / abs(zpow)
    return EvalResult(value, "reflection", err)


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------

def _exact_rational_case(s, z, c):
    if not isinstance(s, (int, Fraction)):
        return None
    if isinstance(s, Fraction) and s.denominator != 1:
        return None
    if int(s) > 0:
        return None
    if not isinstance(z, (int, Fraction)) or not isinstance(c, (int, Fraction)):
        return None
    m = -int(s)
    zf, cf = Fraction(z), Fraction(c)
    if zf in (0, 1) or (cf.denominator == 1 and cf <= 0):
        return None  # singular stratum; let the guards report it
    # Phi(-m, z, c) = Li_{-m}(z,c) / z, both exact rationals
    val = negative_polylog(m).eval(zf, cf) / zf
    return EvalResult(_cplx(val), "rational", 0.0, exact=val)


def phi(s, z, c, tol=1e-12):
    """Evaluate Phi(s, z, c) on the principal branch, auto-dispatched.

    Route order: exact rational short-circuit (integer s <= 0, rational
    z and c); series for |z| <= 0.75 with Re(c) > 0; integral for
    Re(s) > 0, Re(c) > 0, z off [1, oo); c_shift when Re(c) <= 0;
    reflection when Re(s) <= 0.  Singular strata raise StratumError,
    the cut [1, oo) raises BranchError.
    """
    exact = _exact_rational_case(s, z, c)
    if exact is not None:
        return exact
    stratum = classify_stratum(s, z, c)
    if stratum.tag not in ("regular", "removable_c"):
        raise StratumError("point lies on singular stratum: %s" % stratum.tag,
                           stratum=stratum.tag)
    _guard_near_singular(z, c)
    sc, zc, cc = _cplx(s), _cplx(z), _cplx(c)
    if abs(zc) <= 0.75 and cc.real > 0:
        return phi_series(sc, zc, cc, tol=tol)
    if sc.real > 0 and cc.real > 0:
        _guard_cut(zc)  # raises BranchError on [1, oo)
        return phi_integral(sc, zc, cc, tol=tol)
    if cc.real <= 0:
        n_shift = math.ceil(1.0 - cc.real)
        return phi_c_shift(sc, zc, cc, n_shift, tol=tol)
    # now Re(s) <= 0, Re(c) > 0, |z| > 0.75
    _guard_cut(zc)
    return _reflect_with_c_normalization(sc, zc, cc, tol)


# ---------------------------------------------------------------------------
# the zeta-family wrappers
# ---------------------------------------------------------------------------

def lerch_zeta(s, a, c, tol=1e-12):
    """zeta(s, a, c) = Phi(s, e^{2 pi i a}, c) for 0 < Re(a) < 1."""
    ac = _cplx(a)
    if not 0.0 < ac.real < 1.0:
        raise DomainError("lerch_zeta needs 0 < Re(a) < 1")
    z = cmath.exp(_2PI_I * ac)
    if ac.real == 0.5 and ac.imag == 0.0:
        z = -1.0 + 0j  # kill the 1e-16 rounding at the half-period point
    return phi(s, z, c, tol=tol)


def periodic_zeta(a, s, tol=1e-12):
    """F(a, s) = sum_{n>=1} e^{2 pi i n a} n^{-s}, entire in s.

    Re(s) > 0: F = Gamma(s)^{-1} int_0^inf t^{s-1} w/(1-w) dt with
    w = e^{2 pi i a} e^{-t}.  Re(s) <= 0: the ladder
    F(a, s) = (z d/dz)^j F(a, s+j) (z = e^{2 pi i a}) is applied under
    the integral sign; (z d/dz)^j of the geometric kernel is the exact
    rational q_j(w), never a numerical derivative.
    """
    ac, sc = _cplx(a), _cplx(s)
    if not 0.0 < ac.real < 1.0:
        raise DomainError("periodic_zeta needs 0 < Re(a) < 1")
    z = cmath.exp(_2PI_I * ac)
    if ac.real == 0.5 and ac.imag == 0.0:
        z = -1.0 + 0j
    j = 0 if sc.real > 0 else math.ceil(1.0 - sc.real)
    sig = sc + j
    rg = reciprocal_gamma(sig)

    if j == 0:
        def integrand(t):
            w = z * math.exp(-t)
            return cmath.exp((sig - 1.0) * math.log(t)) * w / (1.0 - w)
    else:
        def integrand(t):
            w = z * math.exp(-t)
            return cmath.exp((sig - 1.0) * math.log(t)) * q_ratio(j, w)

    qtol = 0.1 * tol / max(1.0, abs(rg))
    v, err = quad_semiaxis(integrand, tol=qtol)
    return EvalResult(rg * v, "integral", abs(rg) * err)


@lru_cache(maxsize=None)
def _bernoulli(n):
    """Exact Bernoulli number B_n by the Akiyama-Tanigawa triangle.

    Only even indices are ever requested here, so the B_1 sign
    convention is moot."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def hurwitz_zeta(s, c, tol=1e-12):
    """zeta_H(s, c) = sum (n+c)^{-s} by Euler-Maclaurin, |s| <= ~30.

    Head terms push Re(c) above 1/2 first; the correction sum uses exact
    Bernoulli numbers with the asymptotic term magnitude as the error
    proxy (N doubles until it is below tol).
    """
    sc, cc = _cplx(s), _cplx(c)
    if abs(sc - 1.0) < _INT_TOL:
        raise PoleError("Hurwitz zeta has its pole at s = 1", location=1)
    if _dist_to_nonpos_int(c) < _NEAR:
        raise StratumError("c is (nearly) a non-positive integer",
                           stratum="singular_c")
    k0 = max(0, math.ceil(0.5 - cc.real))
    head = sum(branched_power(cc + k, -sc) for k in range(k0))
    cx = cc + k0

    K = 12
    big_n = max(10, math.ceil(1.2 * abs(sc)) + 5)
    for _ in range(6):
        # magnitude of the first omitted correction term
        poch = 1.0
        for i in range(2 * K + 1):
            poch *= abs(sc + i)
        b = abs(_bernoulli(2 * K + 2)) / math.factorial(2 * K + 2)
        tail = float(b) * poch * abs(cx + big_n) ** (-(sc.real + 2 * K + 1))
        if tail <= 0.1 * tol:
            break
        big_n *= 2
    else:
        raise AccuracyError("Euler-Maclaurin tail would not drop below tol")

    total = sum(cmath.exp(-sc * principal_log(n + cx)) for n in range(big_n))
    base = big_n + cx
    lb = principal_log(base)
    total += cmath.exp((1.0 - sc) * lb) / (sc - 1.0)
    total += 0.5 * cmath.exp(-sc * lb)
    poch = sc
    for k in range(1, K + 1):
        bk = float(_bernoulli(2 * k)) / math.factorial(2 * k)
        total += bk * poch * cmath.exp((-sc - 2 * k + 1) * lb)
        poch *= (sc + 2 * k - 1) * (sc + 2 * k)
    return EvalResult(head + total, "euler_maclaurin", tail)


def extended_polylog(s, z, c, tol=1e-12):
    """Li_s(z, c) = z * Phi(s, z, c); Li_s(z, 1) is the classical polylog."""
    if _cplx(z) == 0:
        return EvalResult(0j, "series", 0.0)
    inner = phi(s, z, c, tol=tol)
    zc = _cplx(z)
    exact = None
    if inner.exact is not None and isinstance(z, (int, Fraction)):
        exact = inner.exact * Fraction(z)
    return EvalResult(zc * inner.value, inner.method,
                      abs(zc) * inner.error_estimate, exact=exact)
