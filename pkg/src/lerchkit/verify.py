"""Residual checks for the differential and reflection identities.

Each check evaluates both sides of one identity and reports the signed
residual ``left - right``.  Derivatives are taken term-wise on the
defining series when ``|z| <= 0.75`` (so the two sides are computed by
genuinely different summations); elsewhere they are trapezoid sums over
a small Cauchy circle.  For a holomorphic integrand the N-point
trapezoid rule on a circle of radius r converges like (r/R)^N (R the
distance to the nearest singularity), so with r = 0.05 R the quadrature
error is negligible and the only cost is the roundoff amplification
eps/r.

Suites bundle the checks over fixed deterministic grids; ``run_suite``
returns a machine-readable SuiteReport (the CLI serialises it to JSON).
"""

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .branch_numerics import branched_power, complex_gamma
from .errors import DomainError
from .eval_core import _dist_to_nonpos_int, lerch_zeta, phi
from .monodromy import monodromy, monodromy_Z_conj, parse_word
from .special_values import negative_polylog

_2PI_I = 2j * math.pi


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResidualReport:
    """Two-sided evaluation of one identity at one point."""

    name: str
    point: tuple
    left: complex
    right: complex
    tol: float

    @property
    def signed_residual(self):
        return self.left - self.right

    @property
    def abs_residual(self):
        return abs(self.left - self.right)

    @property
    def rel_residual(self):
        scale = max(1.0, abs(self.left), abs(self.right))
        return self.abs_residual / scale

    @property
    def passed(self):
        return self.rel_residual <= self.tol

    def to_dict(self):
        return {
            "name": self.name,
            "point": [str(p) for p in self.point],
            "left": [self.left.real, self.left.imag],
            "right": [self.right.real, self.right.imag],
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "tol": self.tol,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class SuiteReport:
    name: str
    reports: tuple
    warning: str = None

    @property
    def passed(self):
        return all(r.passed for r in self.reports)

    def to_dict(self):
        return {
            "suite": self.name,
            "passed": self.passed,
            "warning": self.warning,
            "checks": [r.to_dict() for r in self.reports],
        }


# ---------------------------------------------------------------------------
# derivative machinery
# ---------------------------------------------------------------------------

def _cauchy_deriv(f, w0, radius, nodes=24):
    """f'(w0) as the trapezoid sum of (2 pi i)^{-1} oint f/(w-w0)^2 dw."""
    acc = 0j
    for k in range(nodes):
        rot = cmath.exp(2j * math.pi * k / nodes)
        acc += f(w0 + radius * rot) / rot
    return acc / (nodes * radius)


def _dist_to_ray(z, x0):
    """Distance from z to the ray [x0, oo)."""
    zc = complex(z)
    if zc.real >= x0:
        return abs(zc.imag)
    return abs(zc - x0)


def _series_mode(z, c):
    return abs(complex(z)) <= 0.75 and complex(c).real > 0


def _phi_z_deriv_series(s, z, c):
    """d/dz of sum z^n (n+c)^{-s}, term by term (needs |z| <= 0.75)."""
    sc, zc, cc = complex(s), complex(z), complex(c)
    acc = 0j
    zp = 1.0 + 0j  # z^{n-1}
    for n in range(1, 100_000):
        term = n * zp * branched_power(n + cc, -sc, "principal")
        acc += term
        zp *= zc
        if n > 4 and abs(term) < 1e-17 * max(1.0, abs(acc)):
            break
    return acc


def _phi_c_deriv_series(s, z, c):
    """d/dc of sum z^n (n+c)^{-s} = -s sum z^n (n+c)^{-s-1} term-wise."""
    sc, zc, cc = complex(s), complex(z), complex(c)
    acc = 0j
    zp = 1.0 + 0j
    for n in range(0, 100_000):
        term = zp * branched_power(n + cc, -sc - 1, "principal")
        acc += term
        zp *= zc
        if n > 4 and abs(term) < 1e-17 * max(1.0, abs(acc)):
            break
    return -sc * acc


def _phi_value(s, z, c):
    return phi(s, z, c).value


def _shift_s(s, k):
    """s + k, staying exact for int/Fraction s."""
    if isinstance(s, (int, Fraction)):
        return s + k
    return complex(s) + k


def _default_tol(z, c, series_tol, circle_tol):
    return series_tol if _series_mode(z, c) else circle_tol


# ---------------------------------------------------------------------------
# ladder and PDE checks
# ---------------------------------------------------------------------------

def check_ladder_down(s, z, c, tol=None):
    """(z d/dz + c) Phi(s, z, c) = Phi(s-1, z, c)."""
    if tol is None:
        tol = _default_tol(z, c, 1e-9, 1e-7)
    sc, zc, cc = complex(s), complex(z), complex(c)
    if zc == 0:
        left = branched_power(cc, 1 - sc, "principal")
        right = branched_power(cc, 1 - sc, "principal") * (1 + 0j)
        return ResidualReport("ladder_down", (s, z, c), left, right, tol)
    if _series_mode(z, c):
        dz = _phi_z_deriv_series(sc, zc, cc)
    else:
        r = 0.05 * _dist_to_ray(zc, 1.0)
        dz = _cauchy_deriv(lambda w: _phi_value(s, w, c), zc, r)
    left = zc * dz + cc * _phi_value(s, z, c)
    right = _phi_value(_shift_s(s, -1), z, c)
    return ResidualReport("ladder_down", (s, z, c), left, right, tol)


def check_ladder_up(s, z, c, tol=None):
    """d/dc Phi(s, z, c) = -s Phi(s+1, z, c).

    At s = 0 both sides vanish identically; at integer s < 0 with
    rational z, c the derivative of the rational continuation is exact
    and the residual is an exact zero.
    """
    if tol is None:
        tol = _default_tol(z, c, 1e-9, 1e-7)
    if s == 0:
        return ResidualReport("ladder_up", (s, z, c), 0j, 0j, tol)
    sc, zc, cc = complex(s), complex(z), complex(c)
    if zc == 0:
        left = -sc * branched_power(cc, -sc - 1, "principal")
        right = -sc * branched_power(cc, -sc - 1, "principal") * (1 + 0j)
        return ResidualReport("ladder_up", (s, z, c), left, right, tol)
    exact = _ladder_up_exact(s, z, c)
    if exact is not None:
        left, right = exact
        return ResidualReport("ladder_up", (s, z, c),
                              complex(left), complex(right), tol)
    if _series_mode(z, c):
        dc = _phi_c_deriv_series(sc, zc, cc)
    else:
        r = 0.05 * _dist_to_nonpos_int(cc)
        dc = _cauchy_deriv(lambda w: _phi_value(s, z, w), cc, r)
    right = -sc * _phi_value(_shift_s(s, 1), z, c)
    return ResidualReport("ladder_up", (s, z, c), dc, right, tol)


def _ladder_up_exact(s, z, c):
    """Exact Fractions for integer s < 0, rational z, c; else None."""
    if not isinstance(s, (int, Fraction)) or Fraction(s).denominator != 1:
        return None
    si = int(s)
    if si >= 0:
        return None
    if not isinstance(z, (int, Fraction)) or not isinstance(c, (int, Fraction)):
        return None
    zf, cf = Fraction(z), Fraction(c)
    if zf in (0, 1) or (cf.denominator == 1 and cf <= 0):
        return None
    m = -si
    left = negative_polylog(m).c_derivative().eval(zf, cf) / zf
    up = phi(si + 1, z, c)
    right = -Fraction(si) * up.exact
    return left, right


def check_pde(s, z, c, tol=None, target="phi"):
    """(z d/dz d/dc + c d/dc) F = -s F.

    ``target="phi"`` checks the main function; ``target="monodromy"``
    applies the same operator to the one-loop branch correction
    -(2 pi)^s e^{i pi s / 2} Gamma(s)^{-1} f_0(s, z, c), whose closed
    form satisfies the same equation.
    """
    sc, zc, cc = complex(s), complex(z), complex(c)
    if target == "monodromy":
        if tol is None:
            tol = 1e-8
        fun = lambda w, x: monodromy_Z_conj(0, 1, s, w, x)
        r_z = 0.05 * _dist_to_ray(zc, 0.0)
        r_c = 0.2
        left = _pde_left_circles(fun, zc, cc, r_z, r_c)
        right = -sc * fun(zc, cc)
        return ResidualReport("pde_monodromy_term", (s, z, c), left, right, tol)
    if target != "phi":
        raise ValueError("target must be 'phi' or 'monodromy'")
    if tol is None:
        tol = _default_tol(z, c, 1e-9, 1e-7)
    if zc == 0:
        left = cc * (-sc) * branched_power(cc, -sc - 1, "principal")
        right = -sc * branched_power(cc, -sc, "principal")
        return ResidualReport("pde", (s, z, c), left, right, tol)
    if _series_mode(z, c):
        # the two derivative pieces as separate (n+c)^{-s-1} sums
        mixed = 0j
        plain = 0j
        zp = 1.0 + 0j
        for n in range(0, 100_000):
            base = branched_power(n + cc, -sc - 1, "principal")
            mixed += n * zp * base
            plain += zp * base
            zp *= zc
            if n > 4 and abs(zp) * abs(base) < 1e-17:
                break
        left = -sc * (mixed + cc * plain)
    else:
        fun = lambda w, x: _phi_value(s, w, x)
        r_z = 0.05 * _dist_to_ray(zc, 1.0)
        r_c = 0.05 * _dist_to_nonpos_int(cc)
        left = _pde_left_circles(fun, zc, cc, r_z, r_c, nodes=16)
    right = -sc * _phi_value(s, z, c)
    return ResidualReport("pde", (s, z, c), left, right, tol)


def _pde_left_circles(fun, zc, cc, r_z, r_c, nodes=16):
    """z d/dz d/dc fun + c d/dc fun by nested Cauchy circles."""
    def dc_at(w):
        return _cauchy_deriv(lambda x: fun(w, x), cc, r_c, nodes)
    mixed = _cauchy_deriv(dc_at, zc, r_z, nodes)
    return zc * mixed + cc * dc_at(zc)


# ---------------------------------------------------------------------------
# ladder commutator, exact on monomials
# ---------------------------------------------------------------------------

def _op_down(p):
    """(z d/dz + c) on a {(j, k): coeff} polynomial in z, c."""
    out = {}
    for (j, k), a in p.items():
        if j:
            out[(j, k)] = out.get((j, k), 0) + a * j
        out[(j, k + 1)] = out.get((j, k + 1), 0) + a
    return {key: v for key, v in out.items() if v}


def _op_up(p):
    """d/dc on a {(j, k): coeff} polynomial."""
    out = {}
    for (j, k), a in p.items():
        if k:
            out[(j, k - 1)] = out.get((j, k - 1), 0) + a * k
    return {key: v for key, v in out.items() if v}


def check_commutator(max_degree=6, tol=0.0):
    """[d/dc, z d/dz + c] = id, verified exactly on monomials z^j c^k."""
    worst = Fraction(0)
    for j in range(max_degree + 1):
        for k in range(max_degree + 1):
            p = {(j, k): Fraction(1)}
            comm = _op_up(_op_down(p))
            for key, v in _op_down(_op_up(p)).items():
                comm[key] = comm.get(key, 0) - v
            comm[(j, k)] = comm.get((j, k), 0) - 1
            dev = max((abs(v) for v in comm.values()), default=Fraction(0))
            worst = max(worst, dev)
    point = ("monomials z^j c^k, j,k <= %d" % max_degree,)
    return ResidualReport("commutator", point,
                          complex(float(worst)), 0j, tol)


# ---------------------------------------------------------------------------
# reflection identities
# ---------------------------------------------------------------------------

def _check_cylinder(s, a, c):
    for name, w in (("s", s), ("a", a), ("c", c)):
        if not 0.0 < complex(w).real < 1.0:
            raise DomainError(
                "%s = %s outside the unit polycylinder 0 < Re < 1"
                % (name, w))


def check_lerch_three_term(s, a, c, tol=1e-8):
    """zeta(1-s, a, c) against the two-term rotation of zeta(s, ., .)."""
    _check_cylinder(s, a, c)
    sc, ac, cc = complex(s), complex(a), complex(c)
    left = lerch_zeta(_shift_s_neg(s), a, c).value
    pref = cmath.exp(-sc * math.log(2 * math.pi)) * complex_gamma(sc)
    right = pref * (
        cmath.exp(1j * math.pi * sc / 2) * cmath.exp(-_2PI_I * ac * cc)
        * lerch_zeta(s, _one_minus(c), a).value
        + cmath.exp(-1j * math.pi * sc / 2) * cmath.exp(_2PI_I * cc * (1 - ac))
        * lerch_zeta(s, c, _one_minus(a)).value)
    return ResidualReport("three_term", (s, a, c), left, right, tol)


def _one_minus(x):
    if isinstance(x, (int, Fraction)):
        return 1 - x
    return 1 - complex(x)


def _shift_s_neg(s):
    if isinstance(s, (int, Fraction)):
        return 1 - s
    return 1 - complex(s)


def check_four_term(s, a, c, parity=1, tol=1e-8):
    """Completed two-sided functional equation, both parity sectors.

    parity +1:  pi^{-s/2} Gamma(s/2) [zeta(s,a,c) + e^{-2 pi i a}
    zeta(s,1-a,1-c)] equals e^{-2 pi i a c} times the mirrored
    combination at (1-s, 1-c, a); parity -1 uses the Gamma((s+1)/2)
    completion, the minus combination and an extra factor i on the
    right.
    """
    if parity not in (1, -1):
        raise DomainError("parity must be +1 or -1")
    _check_cylinder(s, a, c)
    sc, ac, cc = complex(s), complex(a), complex(c)
    k = 0 if parity == 1 else 1

    def lam(sig):
        return (cmath.exp(-(sig + k) / 2 * math.log(math.pi))
                * complex_gamma((sig + k) / 2))

    combo_l = (lerch_zeta(s, a, c).value
               + parity * cmath.exp(-_2PI_I * ac)
               * lerch_zeta(s, _one_minus(a), _one_minus(c)).value)
    combo_r = (lerch_zeta(_shift_s_neg(s), _one_minus(c), a).value
               + parity * cmath.exp(_2PI_I * cc)
               * lerch_zeta(_shift_s_neg(s), c, _one_minus(a)).value)
    twist = 1.0 if parity == 1 else 1j
    left = lam(sc) * combo_l
    right = twist * cmath.exp(-_2PI_I * ac * cc) * lam(1 - sc) * combo_r
    name = "four_term_plus" if parity == 1 else "four_term_minus"
    return ResidualReport(name, (s, a, c, parity), left, right, tol)


# ---------------------------------------------------------------------------
# dilogarithm identities on real sub-domains
# ---------------------------------------------------------------------------

def dilog_real(x):
    """Li_2(x) for 0 <= x < 1: series below 1/2, Euler reflection above."""
    if not 0.0 <= x < 1.0:
        raise DomainError("dilog_real needs 0 <= x < 1, got %s" % x)
    if x == 0.0:
        return 0.0
    if x > 0.5:
        return (math.pi ** 2 / 6 - math.log(x) * math.log1p(-x)
                - dilog_real(1.0 - x))
    acc = 0.0
    xp = x
    n = 1
    while True:
        t = xp / (n * n)
        acc += t
        if t < 1e-18:
            return acc
        n += 1
        xp *= x


def check_spence(x, y, tol=1e-10):
    """Five-dilog Spence identity on 0 <= x, y < 1/2."""
    for w in (x, y):
        if not 0.0 <= w < 0.5:
            raise DomainError("spence needs x, y in [0, 1/2), got %s" % w)
    u = x * y / ((1.0 - x) * (1.0 - y))
    left = complex(dilog_real(u))
    right = complex(
        dilog_real(x / (1.0 - y)) + dilog_real(y / (1.0 - x))
        - dilog_real(x) - dilog_real(y)
        - math.log1p(-x) * math.log1p(-y))
    return ResidualReport("spence", (x, y), left, right, tol)


def _rogers_L(x):
    """Rogers normalisation L(x) = Li_2(x) + log(x) log(1-x) / 2."""
    if x == 0.0:
        return 0.0
    return dilog_real(x) + 0.5 * math.log(x) * math.log1p(-x)


def check_rogers(x, y, tol=1e-10):
    """Rogers five-term: L(x)+L(y)-L(xy) = L((x-xy)/(1-xy)) + L((y-xy)/(1-xy))."""
    for w in (x, y):
        if not 0.0 < w < 1.0:
            raise DomainError("rogers needs x, y in (0, 1), got %s" % w)
    xy = x * y
    left = complex(_rogers_L(x) + _rogers_L(y) - _rogers_L(xy))
    right = complex(_rogers_L((x - xy) / (1.0 - xy))
                    + _rogers_L((y - xy) / (1.0 - xy)))
    return ResidualReport("rogers", (x, y), left, right, tol)


# ---------------------------------------------------------------------------
# monodromy vanishing
# ---------------------------------------------------------------------------

_VANISH_WORDS = (
    "Z1",
    "Z0 Z1 Z0^-1",
    "Z0^2 Z1^-1 Z0^-2",
    "Z1 Z0 Z1 Z0^-1 Z1^-1",
    "Y0",
    "Y-2^3 Z1^2",
    "Z0^2 Z1^-1 Z0^-1 Y-1 Z0^-1",
)

_VANISH_Y_WORDS = ("Y0", "Y-1^2", "Y-3 Y0^-1", "Y-2^3")

_VANISH_POINT = (0.5 + 0.3j, 0.62)


def check_monodromy_vanishing(s, words=None, tol=0.0):
    """All branch corrections vanish identically at integer s.

    For integer s <= 0 every word gives exactly 0; for integer s >= 1
    the Y-corrections (the loops around c = -n) give exactly 0.  The
    default tolerance 0 asserts the zeros are exact, not merely small.
    """
    if not isinstance(s, int):
        raise DomainError("monodromy vanishing is an integer-s statement")
    if words is None:
        words = _VANISH_WORDS if s <= 0 else _VANISH_Y_WORDS
    z0, c0 = _VANISH_POINT
    worst = 0.0
    for text in words:
        total, _ = monodromy(parse_word(text), s, z0, c0)
        worst = max(worst, abs(total))
    point = (s,) + tuple(words)
    return ResidualReport("monodromy_vanishing", point,
                          complex(worst), 0j, tol)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

_LADDER_GRID = (
    (2, 0.5, 0.5),
    (1.5, 0.3 + 0.2j, 0.7),
    (0.5 + 0.5j, -0.4, 1.2),
    (2.5, 0.6j, 0.8 - 0.1j),
    (3, -0.7, 2.0),
    (0, 0.5, 0.75),
    (-1.5, 0.55, 0.9),
    (2, 0.85, 0.6),
    (1.2, -1.3, 0.8),
    (0.8, 1.5j, 1.1),
)

_THREE_TERM_GRID = (
    (0.3, 0.4, 0.6),
    (0.5, 0.5, 0.5),
    (0.3 + 0.2j, 0.4, 0.6),
    (0.6, 0.7, 0.3),
    (0.45, 0.25, 0.85),
)

_FOUR_TERM_GRID = (
    (0.5, 0.5, 0.5),
    (0.4, 0.3, 0.7),
    (0.25, 0.6, 0.45),
    (0.35, 0.55, 0.8),
    (0.65, 0.15, 0.3),
)

_DILOG_AXIS = (0.05, 0.16, 0.27, 0.38, 0.49)


def _suite_ladders(grid, tol):
    pts = _LADDER_GRID if grid is None else grid
    out = []
    for (s, z, c) in pts:
        out.append(check_ladder_down(s, z, c, tol=tol))
        out.append(check_ladder_up(s, z, c, tol=tol))
    return out


def _suite_pde(grid, tol):
    pts = _LADDER_GRID if grid is None else grid
    out = [check_pde(s, z, c, tol=tol) for (s, z, c) in pts]
    if grid is None:
        out.append(check_pde(0.5, -0.5, 0.5, tol=tol, target="monodromy"))
        out.append(check_pde(0.3 + 0.2j, -1.1 + 0.4j, 0.8,
                             tol=tol, target="monodromy"))
    return out


def _suite_commutator(grid, tol):
    degrees = (6,) if grid is None else grid
    return [check_commutator(max_degree=d, tol=0.0 if tol is None else tol)
            for d in degrees]


def _suite_three_term(grid, tol):
    pts = _THREE_TERM_GRID if grid is None else grid
    t = 1e-8 if tol is None else tol
    return [check_lerch_three_term(s, a, c, tol=t) for (s, a, c) in pts]


def _suite_four_term(grid, tol):
    pts = _FOUR_TERM_GRID if grid is None else grid
    t = 1e-8 if tol is None else tol
    out = []
    for (s, a, c) in pts:
        out.append(check_four_term(s, a, c, parity=1, tol=t))
        out.append(check_four_term(s, a, c, parity=-1, tol=t))
    return out


def _suite_spence(grid, tol):
    pts = (grid if grid is not None
           else [(x, y) for x in _DILOG_AXIS for y in _DILOG_AXIS])
    t = 1e-10 if tol is None else tol
    return [check_spence(x, y, tol=t) for (x, y) in pts]


def _suite_rogers(grid, tol):
    pts = (grid if grid is not None
           else [(x, y) for x in _DILOG_AXIS for y in _DILOG_AXIS])
    t = 1e-10 if tol is None else tol
    return [check_rogers(x, y, tol=t) for (x, y) in pts]


def _suite_monodromy(grid, tol):
    svals = (0, -1, -2, -3, 2) if grid is None else grid
    t = 0.0 if tol is None else tol
    return [check_monodromy_vanishing(s, tol=t) for s in svals]


_SUITES = {
    "ladders": _suite_ladders,
    "pde": _suite_pde,
    "commutator": _suite_commutator,
    "three_term": _suite_three_term,
    "four_term": _suite_four_term,
    "spence": _suite_spence,
    "rogers": _suite_rogers,
    "monodromy_vanishing": _suite_monodromy,
}

SUITE_NAMES = ("ladders", "pde", "commutator", "three_term", "four_term",
               "spence", "rogers", "monodromy_vanishing", "all")


def run_suite(name, grid=None, tol=None):
    """Run one named suite (or "all") over its deterministic default grid.

    An explicitly empty grid passes vacuously; the report carries a
    warning so the caller can tell silence from success.
    """
    if name == "all":
        if grid is not None:
            raise ValueError("the combined suite takes no grid")
        reports = []
        for sub in SUITE_NAMES[:-1]:
            reports.extend(_SUITES[sub](None, tol))
        return SuiteReport("all", tuple(reports))
    if name not in _SUITES:
        raise ValueError("unknown suite %r; choose from %s"
                         % (name, ", ".join(SUITE_NAMES)))
    if grid is not None and len(grid) == 0:
        msg = "suite %r ran on an empty grid: vacuous pass" % name
        warnings.warn(msg)
        return SuiteReport(name, (), warning=msg)
    return SuiteReport(name, tuple(_SUITES[name](grid, tol)))
