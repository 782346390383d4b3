"""Branch-aware elementary numerics: total logarithms, branched powers,
the gamma function, and the two workhorse summation/quadrature routines.

Branch conventions
------------------
Two logarithms are used throughout the package, both *total* on the
punctured plane; each cut line is attached to the open region lying
counterclockwise of it (equivalently: approached from the upper side):

``principal_log``
    imaginary part in (-pi, pi], cut along the negative real axis,
    principal_log(-1) = +i*pi, principal_log(-1j) = -i*pi/2.

``semi_principal_log``
    imaginary part in [0, 2*pi), cut along the *positive* real axis,
    semi_principal_log(1) = 0, semi_principal_log(-1j) = 3*i*pi/2.

The two agree on the open upper half-plane and on the negative real
axis, and differ by 2*pi*i on the open lower half-plane.  Powers are
always exp(exponent * chosen log); no power is ever formed by
``cmath``'s ``**`` operator, whose branch policy we do not control.
"""

import cmath
import math
from collections import namedtuple
from itertools import islice

from .errors import AccuracyError, DomainError, PoleError

__all__ = [
    "principal_log",
    "semi_principal_log",
    "branched_power",
    "complex_gamma",
    "reciprocal_gamma",
    "quad_semiaxis",
    "sum_with_tail_bound",
    "QuadResult",
    "SumResult",
]

QuadResult = namedtuple("QuadResult", "value error")
SumResult = namedtuple("SumResult", "value tail_bound")

_TWO_PI = 2.0 * math.pi


def _as_upper_edge(z):
    """Normalize a signed-zero imaginary part so that real inputs are
    treated as limits from the upper half-plane (cut attachment rule)."""
    z = complex(z)
    if z.imag == 0.0:
        # kills -0.0, which would otherwise flip cmath.log to the lower edge
        z = complex(z.real, 0.0)
    return z


def principal_log(z):
    """Principal logarithm, Im in (-pi, pi], negative reals from above.

    Total on C \\ {0}; principal_log(-x) = log x + i*pi for x > 0.
    """
    z = _as_upper_edge(z)
    if z == 0:
        raise DomainError("log(0) is undefined")
    return cmath.log(z)


def semi_principal_log(z):
    """Logarithm with Im in [0, 2*pi); the cut sits on the positive reals.

    Positive real z gets the upper-edge value (imaginary part 0), so
    semi_principal_log(1) = 0 and the function agrees with
    ``principal_log`` on the closed upper half-plane minus the origin.
    """
    z = _as_upper_edge(z)
    if z == 0:
        raise DomainError("log(0) is undefined")
    w = cmath.log(z)
    if w.imag < 0.0:
        w += 2j * math.pi
    return w


def branched_power(base, exponent, branch="principal"):
    """base**exponent via exp(exponent * log) on an explicit branch.

    branch is "principal" or "semi" (the [0, 2*pi) logarithm).  Example:
    (-1j)**0.5 is (1-1j)/sqrt(2) on the principal branch but
    (-1+1j)/sqrt(2) on the semi-principal one.
    """
    if branch == "principal":
        lg = principal_log(base)
    elif branch == "semi":
        lg = semi_principal_log(base)
    else:
        raise ValueError("branch must be 'principal' or 'semi'")
    return cmath.exp(complex(exponent) * lg)


# ---------------------------------------------------------------------------
# gamma
# ---------------------------------------------------------------------------

# Lanczos g = 7, 9-term coefficient set (double precision workhorse,
# relative error around 1e-13 on the right half-plane).
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _is_exact_nonpositive_int(s):
    """True when s is *exactly* a non-positive integer (int, Fraction,
    or a float/complex that equals one bit-for-bit)."""
    try:
        im = s.imag
        re = s.real
    except AttributeError:
        re, im = s, 0
    if im != 0:
        return False
    return re == math.floor(re) and re <= 0 if re == re else False


def complex_gamma(s):
    """Gamma(s) for complex s by Lanczos approximation plus reflection.

    Poles at the non-positive integers raise ``PoleError``.  Accuracy is
    about 1e-13 relative for |s| <= 50.
    """
    s = complex(s)
    if _is_exact_nonpositive_int(s):
        raise PoleError("gamma pole at s = %g" % s.real, location=s)
    if s.real < 0.5:
        # reflection: gamma(s) gamma(1-s) = pi / sin(pi s)
        return math.pi / (cmath.sin(math.pi * s) * complex_gamma(1.0 - s))
    x = s - 1.0
    a = _LANCZOS_C[0]
    for i in range(1, 9):
        a += _LANCZOS_C[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * cmath.exp((x + 0.5) * cmath.log(t) - t) * a


def reciprocal_gamma(s):
    """1/Gamma(s), entire; returns *exactly* 0+0j at s in {0, -1, -2, ...}.

    The exact zero matters: monodromy values carry a 1/Gamma(s) factor
    that must kill every term identically at non-positive integer s, not
    merely to rounding level.
    """
    if _is_exact_nonpositive_int(s):
        return 0j
    s = complex(s)
    if s.real < 0.5:
        # cancellation-free on the left half-plane
        return cmath.sin(math.pi * s) * complex_gamma(1.0 - s) / math.pi
    return 1.0 / complex_gamma(s)


# ---------------------------------------------------------------------------
# quadrature on (0, infinity)
# ---------------------------------------------------------------------------

# Hard window for the transformed variable u; t = exp(u - exp(-u)) spans
# ~1e-290 .. 2.7e5 over it, which is all double precision can represent
# usefully.  Integrands t^(sigma-1)*bounded need sigma >~ 0.05 for the
# truncated left tail to be negligible; every internal caller keeps the
# exponent's real part at or above 1/2.
_U_MIN = -9.0
_U_MAX = 12.5
_T_FLOOR = 1e-290


def _de_term(f, u):
    emu = math.exp(-u)
    t = math.exp(u - emu)
    if t < _T_FLOOR:
        return 0j
    return f(t) * (t * (1.0 + emu))


def quad_semiaxis(f, tol=1e-12, max_level=12):
    """Integrate f over (0, infinity) by double-exponential trapezoid.

    Substitutes t = exp(u - exp(-u)) and applies the trapezoid rule in u
    with successive mesh halving (h = 0.5 / 2**level), reusing previous
    nodes; converged when two successive levels agree to ``tol`` in the
    scale-aware sense |T_k - T_{k-1}| <= tol * (1 + |T_k|).

    Returns ``QuadResult(value, error)`` with the level-agreement bound
    as the error field.  Raises ``AccuracyError`` if ``max_level`` mesh
    halvings are not enough, with the best estimate attached.
    """
    h = 0.5
    # negligibility threshold for truncating the u-range, kept well below
    # the requested tolerance so truncation never dominates
    cut = min(tol, 1e-13) * 1e-3

    total = _de_term(f, 0.0)
    scale = abs(total)
    jmin = jmax = 0
    # extend to the right, then to the left, until several consecutive
    # terms are negligible relative to the running scale
    for direction in (+1, -1):
        j, quiet = direction, 0
        while _U_MIN <= j * h <= _U_MAX and quiet < 4:
            term = _de_term(f, j * h)
            total += term
            scale = max(scale, abs(term))
            if abs(term) <= cut * (1.0 + scale):
                quiet += 1
            else:
                quiet = 0
            if direction > 0:
                jmax = j
            else:
                jmin = j
            j += direction
        if quiet < 4 and abs(term) > tol * (1.0 + scale):
            raise AccuracyError(
                "integrand not negligible at the quadrature window edge",
                best=total * h, bound=abs(term),
            )
    umin, umax = jmin * h, jmax * h
    value = total * h

    for _level in range(1, max_level + 1):
        h *= 0.5
        mids = 0j
        u = umin + h
        while u < umax:
            mids += _de_term(f, u)
            u += 2.0 * h
        refined = 0.5 * value + h * mids
        # at the finer mesh the window may need to grow a little
        for direction, edge in ((+1, umax), (-1, umin)):
            u, quiet = edge + direction * h, 0
            while _U_MIN <= u <= _U_MAX and quiet < 4:
                term = _de_term(f, u)
                refined += h * term
                if abs(term) <= cut * (1.0 + scale):
                    quiet += 1
                else:
                    quiet = 0
                u += direction * h
            if direction > 0:
                umax = max(umax, u - h)
            else:
                umin = min(umin, u + h)
        err = abs(refined - value)
        value = refined
        if err <= tol * (1.0 + abs(value)):
            return QuadResult(value, err)
    raise AccuracyError(
        "quadrature did not converge within %d levels" % max_level,
        best=value, bound=err,
    )


# ---------------------------------------------------------------------------
# summation with a proven tail majorant
# ---------------------------------------------------------------------------

def sum_with_tail_bound(terms, bound, tol=1e-12, max_terms=100_000):
    """Sum a series whose tail is controlled by an explicit majorant.

    Parameters
    ----------
    terms : iterable of complex
        The series terms t_0, t_1, ...
    bound : callable
        bound(n) must majorize |sum_{k >= n} t_k|; it may return
        ``math.inf`` while n is below the regime where the majorant is
        valid.  It must tend to 0.
    tol : float
        Stop as soon as bound(n) <= tol.
    max_terms : int
        Safety cap; exceeded means ``AccuracyError`` (with the partial
        sum attached).

    Returns
    -------
    SumResult(value, tail_bound)
        Partial sum and the certified bound on the omitted tail.  An
        iterator that simply runs out is treated as a finite sum with
        tail 0.
    """
    partial = 0j
    n = 0
    for term in islice(terms, max_terms):
        b = bound(n)
        if b <= tol:
            return SumResult(partial, b)
        partial += term
        n += 1
    if n < max_terms:
        return SumResult(partial, 0.0)
    b = bound(n)
    if b <= tol:
        return SumResult(partial, b)
    raise AccuracyError(
        "tail bound still %.3g after %d terms" % (b, n), best=partial, bound=b
    )
