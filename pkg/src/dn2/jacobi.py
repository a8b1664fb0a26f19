"""Jacobian elliptic functions sn, cn, dn at parameter m = k^2.

Real arguments go through the descending Landen/AGM recursion; complex
arguments are split into two real evaluations by the classical addition
formula, so the recursion itself stays entirely real.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .hyper import complete_K
from .kernel import DomainError

# below this denominator magnitude the quotient's relative error is
# uncontrolled; callers get an explicit pole signal instead of a number
POLE_THRESHOLD = 1e-13


class PoleError(ArithmeticError):
    """Evaluation at (or numerically indistinguishable from) a pole."""


@dataclass(frozen=True)
class JacobiTriple:
    sn: float | complex
    cn: float | complex
    dn: float | complex


def jacobi_real(x: float, m: float) -> JacobiTriple:
    """sn, cn, dn of a real argument, 0 <= m < 1."""
    if not 0.0 <= m < 1.0:
        raise DomainError(f"jacobi_real requires 0 <= m < 1, got m={m}")
    if m == 0.0:
        return JacobiTriple(math.sin(x), math.cos(x), 1.0)
    # reduce modulo the real period to keep the recursion well conditioned
    x = math.remainder(x, 4.0 * complete_K(m))

    emc = 1.0 - m
    a = 1.0
    dn = 1.0
    em: list[float] = []
    en: list[float] = []
    c = 0.0
    for _ in range(16):
        em.append(a)
        emc = math.sqrt(emc)
        en.append(emc)
        c = 0.5 * (a + emc)
        if abs(a - emc) <= 1e-8 * a:
            break
        emc *= a
        a = c

    u = x * c
    sn = math.sin(u)
    cn = math.cos(u)
    if sn != 0.0:
        aa = cn / sn
        cc = c * aa
        for i in range(len(em) - 1, -1, -1):
            b = em[i]
            aa *= cc
            cc *= dn
            dn = (en[i] + aa) / (b + aa)
            aa = cc / b
        amp = 1.0 / math.sqrt(cc * cc + 1.0)
        sn = amp if sn >= 0.0 else -amp
        cn = cc * sn
    return JacobiTriple(sn, cn, dn)


def jacobi_complex(z: complex, m: float) -> JacobiTriple:
    """sn, cn, dn of a complex argument via the real-real addition split.

    Raises PoleError when the shared denominator drops below the pole
    threshold (z congruent to iK' modulo periods).
    """
    if not 0.0 <= m < 1.0:
        raise DomainError(f"jacobi_complex requires 0 <= m < 1, got m={m}")
    z = complex(z)
    if m == 0.0:
        return JacobiTriple(cmath.sin(z), cmath.cos(z), complex(1.0))
    rx = jacobi_real(z.real, m)
    ry = jacobi_real(z.imag, 1.0 - m)
    s, c, d = rx.sn, rx.cn, rx.dn
    s1, c1, d1 = ry.sn, ry.cn, ry.dn
    denom = c1 * c1 + m * s * s * s1 * s1
    if abs(denom) < POLE_THRESHOLD:
        raise PoleError(f"jacobi functions at a pole (denominator {denom:.3e})")
    sn = complex(s * d1, c * d * s1 * c1) / denom
    cn = complex(c * c1, -s * d * s1 * d1) / denom
    dn = complex(d * c1 * d1, -m * s * c * s1) / denom
    return JacobiTriple(sn, cn, dn)
