"""Homotopy-word algebra and closed-form monodromy of the Lerch branch.

Words live in the direct product  F2<Z0, Z1>  x  F(..., Y_-1, Y_0, Y_1, ...):
Z0 and Z1 are loops around z = 0 and z = 1, Y_n a loop around c = n, and
the Y's commute with everything, so a word is stored as a freely reduced
Z-letter sequence plus a net-exponent map for the Y's.

The Z-side monodromy of the branch Z~ of Phi is carried entirely by the
conjugates  Z0^k Z1 Z0^{-k}: scanning the Z-part left to right and
logging each Z1^{+-1} at its current net Z0-offset k gives the profile
h(k); the leftover pure Z0^t power contributes nothing on its own and is
dropped.  Each conjugate power contributes a closed form built from the
elementary functions

    f_n(s,z,c) = e^{i pi (s-1)} e^{2 pi i n c} z^{-c} (n-a)^{s-1}   (n >= 1)
    f_n(s,z,c) =                e^{2 pi i n c} z^{-c} (a-n)^{s-1}   (n <= 0)

with a = Log z / 2 pi i on the semi-principal branch, z^{-c} through the
same Log, and the inner power principal.  Y_n contributes only for
n <= 0.  Everything vanishes *identically* at s in {0, -1, -2, ...}
(the reciprocal gamma factor and the unit phase factors), and all
Y-monodromy vanishes at every integer s.
"""

import cmath
import math
from dataclasses import dataclass, field

from .branch_numerics import (
    branched_power,
    complex_gamma,
    reciprocal_gamma,
    semi_principal_log,
)
from .errors import DomainError, PoleError, StratumError
from .eval_core import phi as _phi

__all__ = [
    "GeneratorLetter",
    "HomotopyWord",
    "ZProfile",
    "BranchValue",
    "parse_word",
    "reduce_word",
    "z_profile",
    "f_elementary",
    "c_coeff",
    "monodromy_Z_conj",
    "monodromy_Y",
    "monodromy",
    "branch_value",
    "monodromy_space_basis",
]

_2PI = 2.0 * math.pi
_INT_TOL = 1e-8  # integer-s detection for the 0/0 geometric ratios


@dataclass(frozen=True)
class GeneratorLetter:
    kind: str            # "Z0", "Z1", or "Y"
    exp: int = 1         # +1 or -1
    n: int = None        # puncture index, Y only

    def __post_init__(self):
        if self.kind not in ("Z0", "Z1", "Y"):
            raise ValueError("letter kind must be Z0, Z1 or Y")
        if self.exp not in (1, -1):
            raise ValueError("letter exponent must be +1 or -1")
        if (self.kind == "Y") != (self.n is not None):
            raise ValueError("Y letters need an index n; Z letters must not")

    def inverse(self):
        return GeneratorLetter(self.kind, -self.exp, self.n)

    def __str__(self):
        base = self.kind if self.kind != "Y" else "Y%d" % self.n
        return base if self.exp == 1 else base + "^-1"


@dataclass(frozen=True)
class HomotopyWord:
    z_part: tuple = ()
    y_exponents: tuple = ()  # sorted ((n, k(n)), ...), zeros dropped

    def y_map(self):
        return dict(self.y_exponents)

    def is_identity(self):
        return not self.z_part and not self.y_exponents

    def __str__(self):
        bits = [str(letter) for letter in self.z_part]
        bits += ["Y%d^%d" % (n, k) for n, k in self.y_exponents]
        return " ".join(bits) if bits else "e"


@dataclass(frozen=True)
class ZProfile:
    h: tuple = ()  # sorted ((k, h(k)), ...), zeros dropped
    t: int = 0

    def h_map(self):
        return dict(self.h)


@dataclass(frozen=True)
class BranchValue:
    base: complex
    contributions: tuple
    total: complex


def parse_word(text):
    """Parse CLI word syntax: whitespace-separated `Z0`, `Z1`, `Y<n>`
    tokens with an optional `^<int>` exponent, e.g. "Z0^2 Z1^-1 Y-3".

    Exponents are expanded into single +-1 letters.
    """
    letters = []
    for token in text.split():
        body, _, exp_text = token.partition("^")
        try:
            exp = int(exp_text) if exp_text else 1
        except ValueError:
            raise ValueError("bad exponent in token %r" % token) from None
        if body in ("Z0", "Z1"):
            letter = GeneratorLetter(body, 1)
        elif body.startswith("Y"):
            try:
                n = int(body[1:])
            except ValueError:
                raise ValueError("bad Y index in token %r" % token) from None
            letter = GeneratorLetter("Y", 1, n)
        else:
            raise ValueError("unknown generator %r (want Z0, Z1 or Y<n>)"
                             % token)
        if exp >= 0:
            letters.extend([letter] * exp)
        else:
            letters.extend([letter.inverse()] * (-exp))
    return letters


def reduce_word(raw):
    """Split off the (commuting) Y-letters into a net-exponent map and
    freely reduce the remaining Z-letter sequence."""
    y = {}
    stack = []
    for letter in raw:
        if letter.kind == "Y":
            y[letter.n] = y.get(letter.n, 0) + letter.exp
        else:
            if stack and stack[-1].kind == letter.kind \
                    and stack[-1].exp == -letter.exp:
                stack.pop()
            else:
                stack.append(letter)
    y_items = tuple(sorted((n, k) for n, k in y.items() if k != 0))
    return HomotopyWord(tuple(stack), y_items)


def z_profile(z_part):
    """Scan a freely reduced Z-letter sequence left to right, tracking
    the net Z0-offset; each Z1^{+-1} met at offset k adds its exponent
    to h(k).  The final offset is the residual t."""
    h = {}
    offset = 0
    for letter in z_part:
        if letter.kind == "Z0":
            offset += letter.exp
        else:
            h[offset] = h.get(offset, 0) + letter.exp
    h_items = tuple(sorted((k, v) for k, v in h.items() if v != 0))
    return ZProfile(h_items, offset)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def f_elementary(n, s, z, c):
    """The elementary monodromy function f_n(s, z, c) on the cut domain.

    a = Log z / 2 pi i (semi-principal, so 0 <= Re(a) < 1); positive
    real z takes its upper-edge limit value per the attachment rule,
    only z = 0 is an error.
    """
    s, c = complex(s), complex(c)
    if z == 0:
        raise DomainError("f_n is undefined at z = 0")
    lg = semi_principal_log(z)
    a = lg / (2j * math.pi)
    zmc = cmath.exp(-c * lg)
    phase = cmath.exp(2j * math.pi * n * c)
    if n >= 1:
        return cmath.exp(1j * math.pi * (s - 1.0)) * phase * zmc \
            * branched_power(n - a, s - 1.0, "principal")
    return phase * zmc * branched_power(a - n, s - 1.0, "principal")


def c_coeff(n, s):
    """Fourier-side coefficient c_n(s) = (2 pi)^{s-1} Gamma(1-s)
    e^{-+ i pi (1-s)/2}, the sign negative for n >= 1 and positive for
    n <= 0.  Simple poles at s in {1, 2, 3, ...}."""
    s = complex(s)
    if s.imag == 0 and s.real == round(s.real) and s.real >= 1:
        raise PoleError("c_n(s) has a simple pole at s = %d" % round(s.real),
                        location=s)
    sign = -1.0 if n >= 1 else 1.0
    return cmath.exp((s - 1.0) * math.log(_2PI)) * complex_gamma(1.0 - s) \
        * cmath.exp(sign * 1j * math.pi * (1.0 - s) / 2.0)


def _near_int(s):
    sc = complex(s)
    return (abs(sc.imag) <= _INT_TOL
            and abs(sc.real - round(sc.real)) <= _INT_TOL)


def _geom_ratio(s, j, sign):
    """(lambda^j - 1)/(lambda - 1) with lambda = e^{sign 2 pi i s};
    at (near-)integer s the 0/0 limit is j."""
    if j == 0:
        return 0.0
    if _near_int(s):
        return float(j)
    lam_j = cmath.exp(sign * 2j * math.pi * complex(s) * j)
    lam = cmath.exp(sign * 2j * math.pi * complex(s))
    return (lam_j - 1.0) / (lam - 1.0)


def monodromy_Z_conj(k, j, s, z, c):
    """Monodromy of the branch along ([Z0]^k [Z1] [Z0]^{-k})^j.

    The single-turn value is -(2 pi)^s e^{i pi s/2} Gamma(s)^{-1} f_k;
    further turns scale geometrically with ratio e^{2 pi i s}, and the
    reciprocal gamma factor kills everything identically at
    s in {0, -1, -2, ...} (exact complex zero, not rounding-level).
    """
    if j == 0:
        return 0j
    s = complex(s)
    rg = reciprocal_gamma(s)
    if rg == 0:
        return 0j
    base = -cmath.exp(s * math.log(_2PI) + 1j * math.pi * s / 2.0) * rg \
        * f_elementary(k, s, z, c)
    return _geom_ratio(s, j, +1) * base


def monodromy_Y(n, k, s, z, c):
    """Monodromy of the branch along [Y_n]^k.

    Zero for n >= 1 (those punctures do not see the principal branch)
    and at every integer s; otherwise (e^{-2 pi i k s} - 1) z^{-n}
    (c-n)^{-s}, which folds the one-turn value and the geometric power
    scaling into a single factor (exact for negative k too).
    """
    if k == 0 or n >= 1:
        return 0j
    s, z, c = complex(s), complex(z), complex(c)
    if abs(c - n) < 1e-12:
        raise StratumError("c = %d sits on the puncture of Y_%d" % (n, n),
                           stratum="singular_c")
    if _near_int(s):
        return 0j
    factor = cmath.exp(-2j * math.pi * s * k) - 1.0
    return factor * z ** (-n) * branched_power(c - n, -s, "principal")


def monodromy(word, s, z, c):
    """Total monodromy of the branch along a reduced word, with an
    itemized ledger.

    Returns (total, ledger) where ledger lists ("<term>", value) pairs:
    the Y-part summed over net exponents, the Z-part over the conjugate
    profile (the residual Z0^t power contributes nothing).  Exact zeros
    stay exact, so the total is the exact complex 0 at s in Z_{<=0}.
    """
    if not isinstance(word, HomotopyWord):
        word = reduce_word(word)
    ledger = []
    total = 0j
    for n, k in word.y_exponents:
        v = monodromy_Y(n, k, s, z, c)
        ledger.append(("Y%d^%d" % (n, k), v))
        total += v
    profile = z_profile(word.z_part)
    for k, h in profile.h:
        v = monodromy_Z_conj(k, h, s, z, c)
        ledger.append(("(Z0^%d Z1 Z0^%d)^%d" % (k, -k, h), v))
        total += v
    return total, ledger


def branch_value(word, s, z, c, tol=1e-12):
    """Value of the branch reached by continuing along `word`, as
    principal value plus itemized monodromy contributions."""
    if not isinstance(word, HomotopyWord):
        word = reduce_word(word)
    base = _phi(s, z, c, tol=tol).value
    total, ledger = monodromy(word, s, z, c)
    return BranchValue(base, tuple(ledger), base + total)


def monodromy_space_basis(s):
    """Symbolic description of the space spanned by all branches at
    fixed s: the three regimes are non-positive integer s (single
    valued, the branch alone), positive integer s (conjugate family
    only), and generic s (conjugates plus the Y-family)."""
    sc = complex(s)
    is_int = (abs(sc.imag) <= 1e-12
              and abs(sc.real - round(sc.real)) <= 1e-12)
    if is_int and round(sc.real) <= 0:
        return {
            "case": "nonpositive_integer",
            "dimension": 1,
            "generators": ["Z~"],
            "note": "all monodromy vanishes identically; the branch is "
                    "a rational function of (z, c)",
        }
    if is_int:
        return {
            "case": "positive_integer",
            "dimension": "countably infinite",
            "generators": ["Z~", "f_k for all integer k"],
            "note": "Y-monodromy vanishes at integer s; conjugate terms "
                    "survive with ratio limits",
        }
    return {
        "case": "generic",
        "dimension": "countably infinite",
        "generators": ["Z~", "f_k for all integer k",
                       "z^{-n} (c-n)^{-s} for n <= 0"],
        "note": "full conjugate and Y families",
    }
