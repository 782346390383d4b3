"""The order-(m+1) Fuchsian operator behind the deformed polylogarithm,
its exact Weyl-algebra expansion over Z[c], solution bases on the regular
and singular strata, closed-form monodromy matrices, and a Taylor-method
transport oracle that continues the full solution frame along paths.

The operator in theta = z d/dz form is

    D_{m+1}^c = ((1-z) theta - 1) (theta + c - 1)^m,

expanded exactly as sum_k (alpha_k(c) z + beta_k(c)) z^k d^k/dz^k with
alpha, beta in Z[c] and top coefficient (1-z) z^{m+1}.  Solutions: the
deformed polylog Li_{m,c}(z) = sum_{n>=0} z^{n+1}/(n+c)^m together with
z^{1-c} (log z)^j / j! for j = m-1..0; on the singular stratum
c = -k in Z_{<=0} the first entry is replaced by the regularized

    Li*_m(z,-k) = sum_{n != k} z^{n+1}/(n-k)^m + z^{k+1} (log z)^m / m!.

Basis entries carry the 1/j! normalization so the monodromy matrices
take the Pascal band form with entries (2 pi i)^d / d!.  All logs are
principal; the base point z = -1 sits on the cut and takes its
upper-edge values (log(-1) = +i pi), matching the branch conventions
used everywhere else in this package.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .branch_numerics import branched_power, principal_log
from .errors import BranchError, DomainError, TransportError
from .eval_core import phi as _phi

__all__ = [
    "CPolynomial",
    "WeylOperator",
    "FuchsianBasis",
    "MonodromyMatrix",
    "PowerLogSeries",
    "weyl_expand",
    "apply_operator",
    "theta_shift",
    "li_series",
    "li_star_series",
    "log_power_series",
    "li_star",
    "basis",
    "basis_series",
    "rho",
    "rho_word",
    "numeric_transport",
    "z0_loop",
    "z1_loop",
    "unipotency_class",
]

_2PI_I = 2j * math.pi


# ---------------------------------------------------------------------------
# exact integer polynomials in c
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CPolynomial:
    """Polynomial in c with integer coefficients, ascending order."""
    coeffs: tuple = (0,)

    def eval(self, c):
        acc = 0 * c if not isinstance(c, (int, float, complex)) else 0
        for a in reversed(self.coeffs):
            acc = acc * c + a
        return acc

    @property
    def degree(self):
        d = len(self.coeffs) - 1
        while d > 0 and self.coeffs[d] == 0:
            d -= 1
        return d

    def is_zero(self):
        return all(a == 0 for a in self.coeffs)


def _ptrim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(p, q):
    n = max(len(p), len(q))
    return _ptrim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                   for i in range(n)])


def _psub(p, q):
    return _padd(p, tuple(-a for a in q))


def _pmul_linear(p, a):
    """p(c) * (c + a) with integer a."""
    out = [0] * (len(p) + 1)
    for i, v in enumerate(p):
        out[i] += a * v
        out[i + 1] += v
    return _ptrim(out)


def _pshift_c(p):
    """p(c) * c."""
    return _ptrim((0,) + tuple(p))


def _stirling_rows(m_top):
    """Rows f^{(j)} of (theta + c - 1)^j = sum_k f^{(j)}_k z^k d^k,
    via f^{(j+1)}_k = f^{(j)}_{k-1} + (k + c - 1) f^{(j)}_k."""
    rows = [[(1,)]]  # f^{(0)} = [1]
    for j in range(m_top):
        prev = rows[-1]
        nxt = []
        for k in range(len(prev) + 1):
            term = prev[k - 1] if k >= 1 else (0,)
            if k < len(prev):
                term = _padd(term, _pmul_linear(prev[k], k - 1))
            nxt.append(term)
        rows.append(nxt)
    return rows


@dataclass(frozen=True)
class WeylOperator:
    order: int
    entries: tuple  # ((alpha_k, beta_k) CPolynomial pairs, k = 0..order)


def weyl_expand(m):
    """Exact z^k d^k expansion of D_{m+1}^c = ((1-z)theta - 1)(theta+c-1)^m.

    With f^{(j)}_k the coefficients of (theta + c - 1)^j the entries are
    alpha_k = (c-1) f^{(m)}_k - f^{(m+1)}_k and
    beta_k = f^{(m+1)}_k - c f^{(m)}_k, so the top coefficient is
    (1 - z) z^{m+1} exactly.
    """
    if m < 0:
        raise DomainError("operator order needs m >= 0")
    rows = _stirling_rows(m + 1)
    fm, fm1 = rows[m], rows[m + 1]
    entries = []
    for k in range(m + 2):
        a = fm[k] if k < len(fm) else (0,)
        b = fm1[k] if k < len(fm1) else (0,)
        alpha = _psub(_pmul_linear(a, -1), b)          # (c-1) f_m - f_{m+1}
        beta = _psub(b, _pshift_c(a))                  # f_{m+1} - c f_m
        entries.append((CPolynomial(alpha), CPolynomial(beta)))
    return WeylOperator(m + 1, tuple(entries))


# ---------------------------------------------------------------------------
# truncated power-log series  sum_{n,j} coeff * z^{nu+n} (log z)^j / j!
# ---------------------------------------------------------------------------

@dataclass
class PowerLogSeries:
    nu: object               # exponent offset, exact (Fraction) when possible
    c: object                # the deformation parameter the series belongs to
    coeffs: dict             # n -> {j -> coefficient}
    order: int               # coefficients trusted for n <= order

    def coeff(self, n, j=0):
        return self.coeffs.get(n, {}).get(j, 0)

    def max_log_power(self):
        return max((j for d in self.coeffs.values() for j in d), default=0)


def _new_coeffs():
    return {}


def _bump(coeffs, n, j, v):
    if v == 0:
        return
    row = coeffs.setdefault(n, {})
    row[j] = row.get(j, 0) + v
    if row[j] == 0:
        del row[j]
        if not row:
            del coeffs[n]


def _series_like(s, coeffs, order):
    return PowerLogSeries(s.nu, s.c, coeffs, order)


def _series_deriv(s):
    """d/dz of the series; note d[z^{nu+n}(log z)^j/j!] picks up both the
    power and the log term, each at n-1."""
    out = _new_coeffs()
    for n, row in s.coeffs.items():
        for j, v in row.items():
            _bump(out, n - 1, j, v * (s.nu + n))
            if j >= 1:
                _bump(out, n - 1, j - 1, v)
    return _series_like(s, out, s.order - 1)


def _series_shift(s, k):
    """Multiply by z^k."""
    out = {n + k: dict(row) for n, row in s.coeffs.items()}
    return _series_like(s, out, s.order + k)


def _series_axpy(acc, s, scale):
    for n, row in s.coeffs.items():
        for j, v in row.items():
            _bump(acc, n, j, v * scale)


def theta_shift(s, shift=None):
    """(z d/dz + shift) applied to the series; shift defaults to c - 1."""
    if shift is None:
        shift = s.c - 1
    out = _new_coeffs()
    for n, row in s.coeffs.items():
        for j, v in row.items():
            _bump(out, n, j, v * (s.nu + n + shift))
            if j >= 1:
                _bump(out, n, j - 1, v)
    return _series_like(s, out, s.order)


def apply_operator(op, series):
    """Apply a WeylOperator, exactly when the inputs are exact.

    Coefficients of the result are trusted through z^{nu+n} for
    n <= series.order (the z-multiplications only push information
    upward, never pull missing high-order terms down).
    """
    c = series.c
    acc = _new_coeffs()
    d = series
    for k, (alpha, beta) in enumerate(op.entries):
        if k > 0:
            d = _series_deriv(d)
        if alpha.is_zero() and beta.is_zero():
            continue
        zk = _series_shift(d, k)
        av, bv = alpha.eval(c), beta.eval(c)
        if bv != 0:
            _series_axpy(acc, zk, bv)
        if av != 0:
            _series_axpy(acc, _series_shift(zk, 1), av)
    return PowerLogSeries(series.nu, c, acc, series.order)


def li_series(m, c, order):
    """Series of Li_{m,c}(z) = sum_{n>=0} z^{n+1}/(n+c)^m through z^order."""
    coeffs = _new_coeffs()
    for n in range(order):
        base = n + c
        if base == 0:
            raise DomainError("Li_{m,c} series undefined at c = %r" % (c,))
        _bump(coeffs, n + 1, 0, Fraction(1) / base ** m
              if isinstance(base, (int, Fraction)) else 1.0 / base ** m)
    nu = Fraction(0) if isinstance(c, (int, Fraction)) else 0.0
    return PowerLogSeries(nu, c, coeffs, order)


def li_star_series(m, k, order):
    """Series of the regularized Li*_m(z,-k) through z^order (c = -k)."""
    if k < 0:
        raise DomainError("Li* wants k >= 0")
    coeffs = _new_coeffs()
    for n in range(order):
        if n == k:
            continue
        _bump(coeffs, n + 1, 0, Fraction(1, (n - k) ** m) if m else Fraction(1))
    if k + 1 <= order:
        _bump(coeffs, k + 1, m, Fraction(1))
    return PowerLogSeries(Fraction(0), -k, coeffs, order)


def log_power_series(c, j, order=None):
    """The basis entry z^{1-c} (log z)^j / j! as a one-term series; the
    single term is exact, so `order` only caps downstream trust windows."""
    nu = 1 - c if isinstance(c, (int, Fraction)) else 1.0 - c
    coeffs = {0: {j: Fraction(1) if isinstance(c, (int, Fraction)) else 1.0}}
    return PowerLogSeries(nu, c, coeffs, 10 ** 9 if order is None else order)


def series_residual_norm(s, through=None):
    """Largest coefficient magnitude up to the trusted order."""
    top = s.order if through is None else min(through, s.order)
    worst = 0.0
    for n, row in s.coeffs.items():
        if n > top:
            continue
        for v in row.values():
            worst = max(worst, abs(complex(v)))
    return worst


# ---------------------------------------------------------------------------
# the regularized singular-stratum solution
# ---------------------------------------------------------------------------

def li_star(m, k, z, tol=1e-12):
    """Li*_m(z,-k) on C minus ((-inf,0] u [1,inf)), by the closed form

        z^{k+1} [ Li_m(z) + (log z)^m / m! ]
        + (-1)^m sum_{j<k} z^{j+1} / (k-j)^m.
    """
    if k < 0 or m < 0:
        raise DomainError("Li* wants m >= 0, k >= 0")
    z = complex(z)
    if z == 0:
        return 0j  # every term carries z^{>=1}, and z (log z)^m -> 0
    if z.imag == 0 and z.real >= 1:
        raise BranchError("Li* hits the polylog cut [1, inf)")
    # negative reals take their upper-edge values (log(-x) = log x + i pi),
    # the same attachment convention used on every other cut here
    if m == 0:
        return z / (1.0 - z)
    li_m = z * _phi(m, z, 1, tol=tol).value
    lg = principal_log(z)
    head = z ** (k + 1) * (li_m + lg ** m / math.factorial(m))
    tail = sum(z ** (j + 1) / (k - j) ** m for j in range(k))
    return head + (-1) ** m * tail


# ---------------------------------------------------------------------------
# solution bases
# ---------------------------------------------------------------------------

def _singular_c(c):
    if isinstance(c, (int, Fraction)):
        ci = int(c)
        return (ci == c and ci <= 0), ci if ci == c else None
    cc = complex(c)
    r = round(cc.real)
    if abs(cc.imag) <= 1e-12 and abs(cc.real - r) <= 1e-12 and r <= 0:
        return True, r
    return False, None


@dataclass(frozen=True)
class FuchsianBasis:
    m: int
    c: object
    kind: str       # "regular" | "singular"
    entries: tuple  # human-readable descriptors, leading entry first


def basis(m, c):
    if m < 1:
        raise DomainError("basis wants m >= 1")
    singular, ci = _singular_c(c)
    logs = tuple("z^{1-c} (log z)^%d / %d!" % (j, j) if j > 1
                 else ("z^{1-c} log z" if j == 1 else "z^{1-c}")
                 for j in range(m - 1, -1, -1))
    if singular:
        lead = "Li*_%d(z, %d)" % (m, ci)
        return FuchsianBasis(m, c, "singular", (lead,) + logs)
    lead = "Li_{%d,c}(z)" % m
    return FuchsianBasis(m, c, "regular", (lead,) + logs)


def basis_series(fb, order):
    """Exact truncated series for every basis entry (lead entry first)."""
    singular, ci = _singular_c(fb.c)
    out = []
    if singular:
        out.append(li_star_series(fb.m, -ci, order))
    else:
        out.append(li_series(fb.m, fb.c, order))
    for j in range(fb.m - 1, -1, -1):
        out.append(log_power_series(fb.c, j, order))
    return out


# ---------------------------------------------------------------------------
# closed-form monodromy matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class MonodromyMatrix:
    entries: object          # (m+1) x (m+1) ndarray
    generator: str           # "Z0", "Z1", word text, or "transport"
    kind: str                # basis kind the matrix acts on

    @property
    def m(self):
        return self.entries.shape[0] - 1

    def det(self):
        return complex(np.linalg.det(self.entries))


def _pascal_band(n, w):
    """Upper-triangular band with w^d/d! on the d-th superdiagonal."""
    mat = np.zeros((n, n), dtype=complex)
    for d in range(n):
        val = w ** d / math.factorial(d)
        for i in range(n - d):
            mat[i, i + d] = val
    return mat


def rho(generator, m, c, inverse=False):
    """Closed-form monodromy matrix on the basis of D_{m+1}^c.

    Row i holds the coordinates of the continued basis entry i.  For Z0
    on the regular stratum the lead entry is single valued (first row
    (1,0,...,0)) and the log block is the e^{-2 pi i c}-scaled Pascal
    band of 2 pi i; on the singular stratum the band runs through the
    first row as well.  Z1 is I - 2 pi i E_{12} on both strata.
    """
    if m < 1:
        raise DomainError("rho wants m >= 1")
    n = m + 1
    w = -_2PI_I if inverse else _2PI_I
    singular, _ = _singular_c(c)
    if generator == "Z1":
        mat = np.eye(n, dtype=complex)
        mat[0, 1] = -w
        return MonodromyMatrix(mat, "Z1" if not inverse else "Z1^-1",
                               "singular" if singular else "regular")
    if generator != "Z0":
        raise DomainError("generator must be Z0 or Z1")
    if singular:
        mat = _pascal_band(n, w)
        return MonodromyMatrix(mat, "Z0" if not inverse else "Z0^-1",
                               "singular")
    mat = np.zeros((n, n), dtype=complex)
    mat[0, 0] = 1.0
    mat[1:, 1:] = _unit_phase(c, inverse) * _pascal_band(m, w)
    return MonodromyMatrix(mat, "Z0" if not inverse else "Z0^-1", "regular")


def _unit_phase(c, inverse):
    """e^{-2 pi i c} (conjugate for the inverse loop), snapped to the
    exact fourth root of unity when rational c makes it one."""
    sign = 1 if inverse else -1
    if isinstance(c, (int, Fraction)):
        r = (sign * Fraction(c)) % 1
        quarter = {Fraction(0): 1.0 + 0j, Fraction(1, 4): 1j,
                   Fraction(1, 2): -1.0 + 0j, Fraction(3, 4): -1j}
        if r in quarter:
            return quarter[r]
        return cmath.exp(_2PI_I * float(r))
    return cmath.exp(sign * _2PI_I * complex(c))


def rho_word(word, m, c):
    """Ordered product of generator matrices for a Y-free word; paths
    read left to right and the matrices multiply in the same order
    (validated against numeric transport of concatenated loops)."""
    from .monodromy import parse_word
    if isinstance(word, str):
        word = parse_word(word)
    letters = list(word)
    n = m + 1
    mat = np.eye(n, dtype=complex)
    kind = rho("Z0", m, c).kind
    for letter in letters:
        if letter.kind == "Y":
            raise DomainError("rho_word handles Z-letters only")
        g = rho(letter.kind, m, c, inverse=(letter.exp == -1))
        mat = mat @ g.entries
    text = " ".join(str(x) for x in letters) if letters else "e"
    return MonodromyMatrix(mat, text, kind)


def unipotency_class(m, c, irrational=False):
    """Classify rho(Z0) from its spectrum {1, e^{-2 pi i c}}: unipotent
    for integer c, quasi-unipotent for rational c, otherwise inside a
    Borel subgroup without being quasi-unipotent.  Pass irrational=True
    for exact irrationals handed over as floats."""
    if irrational:
        return "borel"
    if isinstance(c, complex) and abs(c.imag) > 1e-12:
        return "borel"
    cr = c.real if isinstance(c, complex) else c
    if isinstance(cr, (int, Fraction)):
        return "unipotent" if Fraction(cr).denominator == 1 \
            else "quasi-unipotent"
    # floats are exact rationals by representation
    return "unipotent" if float(cr) == round(float(cr)) \
        else "quasi-unipotent"


# ---------------------------------------------------------------------------
# numeric transport oracle
# ---------------------------------------------------------------------------

_BASE = -1.0 + 0.0j


def z0_loop(n_arc=16):
    """Polyline from -1 once counterclockwise around 0 (radius 1/2),
    winding number 0 about 1."""
    pts = [_BASE, -0.5 + 0.0j]
    for i in range(1, n_arc + 1):
        pts.append(cmath.rect(0.5, math.pi + 2.0 * math.pi * i / n_arc))
    pts += [_BASE]
    return pts


def z1_loop(n_arc=16, height=0.65):
    """Polyline from -1 once counterclockwise around 1 (radius `height`),
    via a corridor at Im z = height; winding number 0 about 0.  The ccw
    orientation is the one matching rho(Z1): the continued lead entry
    gains -2 pi i times the top log entry (transport-validated)."""
    pts = [_BASE, complex(-1.0, height), complex(1.0, height)]
    for i in range(1, n_arc + 1):
        pts.append(1.0 + cmath.rect(height,
                                    math.pi / 2.0 + 2.0 * math.pi * i / n_arc))
    pts += [complex(-1.0, height), _BASE]
    return pts


def _seg_dist(a, b, p):
    """Distance from point p to segment [a, b]."""
    ab = b - a
    denom = abs(ab) ** 2
    if denom == 0:
        return abs(p - a)
    t = ((p - a) * ab.conjugate()).real / denom
    t = min(1.0, max(0.0, t))
    return abs(p - (a + t * ab))


def _check_path(path):
    if len(path) < 2:
        raise TransportError("path needs at least two points")
    if abs(path[0] - _BASE) > 1e-9 or abs(path[-1] - _BASE) > 1e-9:
        raise TransportError("transport paths start and end at z = -1")
    for a, b in zip(path, path[1:]):
        if min(_seg_dist(a, b, 0.0), _seg_dist(a, b, 1.0)) < 0.1 - 1e-12:
            raise TransportError("path strays within 0.1 of a singular point")


def _lead_values(m, c, singular, ci, tol=1e-13):
    """Values Li_j(-1) (or Li*_j(-1,c)) for j = 0..m."""
    vals = [_BASE / (1.0 - _BASE)]  # z/(1-z) at z = -1
    for j in range(1, m + 1):
        if singular:
            vals.append(li_star(j, -ci, _BASE.real, tol=tol))
        else:
            vals.append(_BASE * _phi(j, _BASE.real, c, tol=tol).value)
    return vals


def _start_frame(m, c):
    """Jet matrix S at z = -1: rows are derivative orders 0..m, columns
    the basis entries [lead, b_{m-1}, ..., b_0]."""
    cc = complex(c)
    singular, ci = _singular_c(c)
    n = m + 1
    S = np.zeros((n, n), dtype=complex)
    # lead column via the ladder Li_j' = (Li_{j-1} - (c-1) Li_j)/z,
    # iterated with Leibniz: D[j][i+1] = (D[j-1][i] - (c-1+i) D[j][i])/z
    lead_c = complex(ci) if singular else cc
    D = [[v] for v in _lead_values(m, c if not singular else ci,
                                   singular, ci)]
    for i in range(m):
        D[0].append(math.factorial(i + 1) / (1.0 - _BASE) ** (i + 2))
        for j in range(1, m + 1):
            D[j].append((D[j - 1][i] - (lead_c - 1.0 + i) * D[j][i]) / _BASE)
    S[:, 0] = [D[m][i] for i in range(n)]
    # log columns: b_n = z^{1-c}(log z)^n/n!, upper-edge values at -1,
    # with b_n' = ((1-c) b_n + b_{n-1})/z iterated the same way
    zpow = branched_power(_BASE, 1.0 - cc, "principal")
    B = [[zpow * (1j * math.pi) ** nn / math.factorial(nn)]
         for nn in range(m)]
    for i in range(m):
        for nn in range(m):
            low = B[nn - 1][i] if nn >= 1 else 0.0
            B[nn].append(((1.0 - cc - i) * B[nn][i] + low) / _BASE)
    for col, j in enumerate(range(m - 1, -1, -1), start=1):
        S[:, col] = [B[j][i] for i in range(n)]
    return S


def _poly_w_coeffs(op, cc, z0):
    """Coefficients p[k][i] of P_k(w) = (alpha_k (z0+w) + beta_k)(z0+w)^k
    expanded about w = 0."""
    out = []
    for k, (alpha, beta) in enumerate(op.entries):
        av, bv = complex(alpha.eval(cc)), complex(beta.eval(cc))
        base = av * z0 + bv
        p = [0j] * (k + 2)
        for i in range(k + 1):
            binom = math.comb(k, i) * z0 ** (k - i)
            p[i] += base * binom
            p[i + 1] += av * binom
        out.append(p)
    return out


def _taylor_extend(pw, jet, n_top, m):
    """Taylor coefficients A_0..A_{n_top} of a solution with the given
    derivative jet at the expansion point."""
    A = [jet[i] / math.factorial(i) for i in range(m + 1)]
    top = pw[m + 1][0]  # (1-z0) z0^{m+1}, nonzero off the singular set
    for q in range(m + 1, n_top + 1):
        N = q - m - 1
        acc = 0j
        for k in range(m + 2):
            for i, p in enumerate(pw[k]):
                if p == 0:
                    continue
                idx = N - i + k
                if idx < 0 or idx >= q:
                    continue
                acc += p * A[idx] * math.perm(idx, k)
        A.append(-acc / (top * math.perm(q, m + 1)))
    return A


def _jet_at(A, h, m):
    """Evaluate (y, y', ..., y^{(m)}) at offset h by Horner."""
    jet = []
    for r in range(m + 1):
        acc = 0j
        for q in range(len(A) - 1, r - 1, -1):
            acc = acc * h + A[q] * math.perm(q, r)
        jet.append(acc)
    return jet


def numeric_transport(m, c, path, n_taylor=30, tol=1e-10):
    """Continue the full solution frame of D_{m+1}^c along a polyline
    (start = end = -1), and express the continued basis in the original
    one.  Step size stays below 0.4 times the distance to {0, 1}; each
    step is accepted by comparing against a two-orders-lower evaluation.
    """
    if m < 1:
        raise DomainError("transport wants m >= 1")
    path = [complex(p) for p in path]
    _check_path(path)
    cc = complex(c)
    op = weyl_expand(m)
    S = _start_frame(m, c)
    if np.linalg.cond(S) > 1e12:
        raise TransportError("degenerate start frame")
    frame = S.copy()
    singular, _ = _singular_c(c)
    for a, b in zip(path, path[1:]):
        pos = a
        while abs(pos - b) > 1e-13:
            dist = min(abs(pos), abs(pos - 1.0))
            h_full = min(abs(b - pos), 0.4 * dist)
            direction = (b - pos) / abs(b - pos)
            h = h_full
            for _ in range(40):
                pw = _poly_w_coeffs(op, cc, pos)
                ok = True
                new_frame = np.zeros_like(frame)
                step = h * direction
                for col in range(m + 1):
                    A = _taylor_extend(pw, frame[:, col], n_taylor, m)
                    jet = _jet_at(A, step, m)
                    jet_lo = _jet_at(A[: n_taylor - 1], step, m)
                    scale = max(1.0, max(abs(x) for x in jet))
                    if max(abs(u - v) for u, v in zip(jet, jet_lo)) \
                            > tol * scale:
                        ok = False
                        break
                    new_frame[:, col] = jet
                if ok:
                    frame = new_frame
                    pos = pos + step
                    break
                h *= 0.5
            else:
                raise TransportError("step size underflow near %r" % (pos,))
    X = np.linalg.solve(S, frame)
    return MonodromyMatrix(X.T, "transport",
                           "singular" if singular else "regular")
