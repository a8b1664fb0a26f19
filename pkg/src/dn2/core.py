"""The signature-four elliptic function dn2.

Three evaluation routes (Jacobian sn closed form, Weierstrass P bridge,
amplitude inversion on the real axis), the companion function s2, the
incomplete integral f and its inverse phi, and the fundamental periods by
three methods.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .hyper import F_QUARTER_ONE, complete_K, f14_34_12_closed, gauss_2f1
from .jacobi import PoleError, jacobi_complex, jacobi_real
from .kernel import DomainError, integrate, newton_invert
from .weier import LatticeData, PeriodPair


@dataclass(frozen=True)
class Modulus:
    """Modulus kappa in (0, 1) with derived complementary quantities."""

    kappa: float

    def __post_init__(self):
        if not 0.0 < self.kappa < 1.0:
            raise DomainError(f"modulus must lie in (0, 1), got {self.kappa}")

    @property
    def lam(self) -> float:
        return math.sqrt(1.0 - self.kappa**2)

    @property
    def alpha(self) -> float:
        return math.acos(self.kappa)

    @property
    def beta(self) -> float:
        return math.acos(self.lam)


class Route(enum.Enum):
    SN = "sn"
    WP = "wp"
    PHI = "phi"


class PeriodMethod(enum.Enum):
    INTEGRAL = "integral"
    ELLIPTIC = "elliptic"
    HYPER = "hyper"


def _sn_parameter(mod: Modulus) -> tuple[float, float]:
    # Jacobian parameter and argument scaling shared by the SN and WP routes
    lam = mod.lam
    return (1.0 - lam) / (1.0 + lam), math.sqrt(0.5 * (1.0 + lam))


def invariants_of(mod: Modulus) -> LatticeData:
    """Lattice data of the coperiodic Weierstrass function.

    The midpoint values have closed forms for this family; using them keeps
    1/3 + e3 exactly zero in double precision, which the WP route needs to
    stay accurate near its pole.
    """
    k2 = mod.kappa**2
    lam = mod.lam
    g2 = 4.0 / 3.0 - k2
    g3 = 8.0 / 27.0 - k2 / 3.0
    e1 = 1.0 / 6.0 + 0.5 * lam
    e2 = 1.0 / 6.0 - 0.5 * lam
    e3 = -1.0 / 3.0
    m, scale = _sn_parameter(mod)
    return LatticeData(g2, g3, g2**3 - 27.0 * g3**2, e1, e2, e3, m, scale)


def dn2(z: float | complex, mod: Modulus, route: Route = Route.SN) -> float | complex:
    """Evaluate dn2 at z by the requested route.

    Real input yields a float; complex input with nonzero imaginary part
    yields a complex value.  Raises PoleError on the pole set (z congruent to
    iK' modulo the period lattice).
    """
    if route is Route.PHI:
        if isinstance(z, complex):
            if z.imag != 0.0:
                raise DomainError("PHI route is defined on the real axis only")
            z = z.real
        s = mod.kappa * math.sin(phi(z, mod))
        return math.sqrt(1.0 - s * s)

    m, scale = _sn_parameter(mod)
    real_input = not isinstance(z, complex)
    if real_input and route is Route.SN:
        s = jacobi_real(z * scale, m).sn
        return 1.0 - (1.0 - mod.lam) * s * s

    zc = complex(z)
    sn = jacobi_complex(zc * scale, m).sn
    sn2 = sn * sn
    if route is Route.SN:
        val = 1.0 - (1.0 - mod.lam) * sn2
    else:
        lat = invariants_of(mod)
        if abs(sn2) < 1e-26:
            # lattice point: P has its pole here and dn2 tends to 1
            val = complex(1.0)
        else:
            # 1/3 + wp(z), associated so the exact cancellation 1/3 + e3 = 0
            # survives floating point
            denom = (1.0 / 3.0 + lat.e3) + (lat.e1 - lat.e3) / sn2
            if abs(denom) < 1e-13:
                raise PoleError("dn2 pole: 1/3 + wp(z) vanishes")
            val = 1.0 - 0.5 * mod.kappa**2 / denom
    if zc.imag == 0.0:
        return val.real
    return val


def dn2_deriv(x: float, mod: Modulus) -> float:
    """d/dx of dn2 on the real axis, by the sn-route chain rule."""
    m, scale = _sn_parameter(mod)
    t = jacobi_real(x * scale, m)
    return -2.0 * (1.0 - mod.lam) * t.sn * t.cn * t.dn * scale


def f_forward(T: float, mod: Modulus) -> float:
    """The incomplete integral f(T); strictly increasing in T."""
    if T == 0.0:
        return 0.0
    k2 = mod.kappa**2

    def integrand(t: float) -> float:
        return f14_34_12_closed(k2 * math.sin(t) ** 2)

    lo, hi = (0.0, T) if T > 0.0 else (T, 0.0)
    value = integrate(integrand, lo, hi, tol=1e-12).value
    return value if T > 0.0 else -value


def phi(u: float, mod: Modulus, tol: float = 1e-12) -> float:
    """Inverse of f on the whole real line.

    Reduction uses f(T + pi) = f(T) + 2K, then a safeguarded Newton solve on
    the reduced interval; the derivative of f is at least 1 everywhere.
    """
    if u == 0.0:
        return 0.0
    two_k = 2.0 * periods(mod, PeriodMethod.ELLIPTIC).K
    n = math.floor(u / two_k)
    ur = u - two_k * n
    if ur == 0.0:
        return math.pi * n
    k2 = mod.kappa**2

    def deriv(t: float) -> float:
        return f14_34_12_closed(k2 * math.sin(t) ** 2)

    x0 = min(max(ur * math.pi / two_k, 0.05), math.pi - 0.05)
    t = newton_invert(lambda T: f_forward(T, mod), deriv, ur, x0, tol=tol)
    return t + math.pi * n


def s2(x: float, mod: Modulus) -> float:
    """Companion function sin(phi(x))."""
    return math.sin(phi(x, mod))


def i_gamma(gamma: float, tol: float = 1e-10) -> float:
    """The period integral I(gamma) for an acute angle gamma."""
    if not 0.0 < gamma < 0.5 * math.pi:
        raise DomainError(f"gamma must be an acute angle, got {gamma}")

    def integrand(u: float) -> float:
        # substituted t = gamma - u so the singularity sits at u = 0, where
        # quadrature nodes carry an exact endpoint distance; here
        # sin(u) sin(2 gamma - u) = cos^2 t - cos^2 gamma
        s = math.sin(u) * math.sin(2.0 * gamma - u)
        return math.cos(0.5 * (gamma - u)) / math.sqrt(s)

    return integrate(integrand, 0.0, gamma, singular_left=True, tol=tol).value


def periods(mod: Modulus, method: PeriodMethod = PeriodMethod.ELLIPTIC) -> PeriodPair:
    """Half-period magnitudes (K, K'); fundamental periods are 2K and 2iK'."""
    lam = mod.lam
    if method is PeriodMethod.ELLIPTIC:
        pref = math.sqrt(2.0 / (1.0 + lam))
        return PeriodPair(
            pref * complete_K((1.0 - lam) / (1.0 + lam)),
            pref * complete_K(2.0 * lam / (1.0 + lam)),
        )
    if method is PeriodMethod.HYPER:
        k2 = mod.kappa**2
        l2 = lam * lam
        half_pi = 0.5 * math.pi
        return PeriodPair(
            half_pi * gauss_2f1(F_QUARTER_ONE, k2, one_minus_x=l2),
            math.sqrt(2.0) * half_pi * gauss_2f1(F_QUARTER_ONE, l2, one_minus_x=k2),
        )
    return PeriodPair(i_gamma(mod.beta), math.sqrt(2.0) * i_gamma(mod.alpha))


def greenhill_check(a: float, b: float, c: float, tol: float = 1e-10) -> tuple[float, float]:
    """Residuals of the two cubic-integral reductions to complete K.

    For the cubic (t-a)(t-b)(t-c) with a > b > c, returns the quadrature
    value minus the closed form for the middle and lower root intervals.
    """
    if not a > b > c:
        raise DomainError("greenhill_check requires a > b > c")
    pref = 2.0 / math.sqrt(a - c)
    ab, bc, ac = a - b, b - c, a - c

    def halved(f_lo, f_hi, length: float) -> float:
        # each half is parametrised by the distance s from its own singular
        # root, so quadrature nodes keep full accuracy at the endpoints
        m = 0.5 * length
        lo = integrate(f_lo, 0.0, m, singular_left=True, tol=tol)
        hi = integrate(f_hi, 0.0, length - m, singular_left=True, tol=tol)
        return lo.value + hi.value

    mid = halved(
        lambda s: 1.0 / math.sqrt((ab - s) * s * (s + bc)),
        lambda s: 1.0 / math.sqrt(s * (ab - s) * (ac - s)),
        ab,
    )
    low = halved(
        lambda s: 1.0 / math.sqrt((ac - s) * (bc - s) * s),
        lambda s: 1.0 / math.sqrt((ab + s) * s * (bc - s)),
        bc,
    )
    return (
        mid - pref * complete_K((a - b) / (a - c)),
        low - pref * complete_K((b - c) / (a - c)),
    )
