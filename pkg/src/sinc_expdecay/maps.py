"""Conformal maps from the real line onto the half line (0, inf).

Two maps are provided::

    psi(x) = arcsinh(exp(x))     strip half-width up to pi/2
    phi(x) = log(1 + exp(x))     strip half-width up to pi

All functions accept scalars or numpy arrays.  Scalar input gives a Python
scalar back.  Evaluation avoids ``exp`` overflow and the cancellation of
``log(1 + e^x)`` / ``log(sinh t)`` at the ends of the range, so the maps are
usable on the whole grid ``2**-50 .. 2**50``.
"""

import enum
from dataclasses import dataclass

import numpy as np

from . import _io
from .errors import AdmissibilityError, BranchError, SincDomainError

__all__ = [
    "MapKind",
    "BoundaryCurve",
    "map_forward",
    "map_inverse",
    "map_derivative",
    "map_forward_complex",
    "domain_boundary",
    "domain_arg",
    "in_domain",
    "max_strip_width",
    "check_admissible_d",
    "clog1p",
    "cexpm1",
]


class MapKind(enum.Enum):
    ARCSINH = "psi"
    LOGISTIC_LOG = "phi"

    @classmethod
    def from_name(cls, name):
        if isinstance(name, cls):
            return name
        key = str(name).lower()
        aliases = {"psi": cls.ARCSINH, "arcsinh": cls.ARCSINH,
                   "phi": cls.LOGISTIC_LOG, "logistic_log": cls.LOGISTIC_LOG}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown map kind {name!r}") from None


def max_strip_width(kind):
    """Distance from the real axis to the nearest singularity of the map."""
    kind = MapKind.from_name(kind)
    return np.pi / 2 if kind is MapKind.ARCSINH else np.pi


def check_admissible_d(kind, d, strict=False):
    """Raise AdmissibilityError unless ``d`` is a usable strip half-width.

    The arcsinh map allows ``0 < d <= pi/2`` (``d < pi/2`` when ``strict``);
    the logistic-log map always requires ``0 < d < pi``.
    """
    kind = MapKind.from_name(kind)
    d = float(d)
    top = max_strip_width(kind)
    closed = kind is MapKind.ARCSINH and not strict
    ok = np.isfinite(d) and d > 0 and (d <= top if closed else d < top)
    if not ok:
        bracket = "]" if closed else ")"
        raise AdmissibilityError(
            f"d={d!r} outside (0, {top:.17g}{bracket} for the {kind.value} map")
    return d


def _scalar_out(x, out):
    return out.item() if np.ndim(x) == 0 else out


def map_forward(kind, x):
    kind = MapKind.from_name(kind)
    xa = np.asarray(x, dtype=float)
    ax = np.abs(xa)
    if kind is MapKind.LOGISTIC_LOG:
        out = np.maximum(xa, 0.0) + np.log1p(np.exp(-ax))
    else:
        pos = xa + np.log(1.0 + np.sqrt(1.0 + np.exp(-2.0 * ax)))
        neg = np.arcsinh(np.exp(-ax))
        out = np.where(xa > 0, pos, neg)
    return _scalar_out(x, out)


def map_inverse(kind, t):
    """Inverse map: ``log(sinh t)`` for psi, ``log(e^t - 1)`` for phi."""
    kind = MapKind.from_name(kind)
    ta = np.asarray(t, dtype=float)
    if np.any(~(ta > 0)) or np.any(~np.isfinite(ta)):
        raise SincDomainError("map_inverse needs finite t > 0")
    small = np.minimum(ta, 1.0)
    big = np.maximum(ta, 1.0)
    if kind is MapKind.LOGISTIC_LOG:
        lo = np.log(np.expm1(small))
        hi = big + np.log1p(-np.exp(-big))
    else:
        lo = np.log(np.sinh(small))
        hi = big + np.log1p(-np.exp(-2.0 * big)) - np.log(2.0)
    out = np.where(ta <= 1.0, lo, hi)
    return _scalar_out(t, out)


def map_derivative(kind, x):
    kind = MapKind.from_name(kind)
    xa = np.asarray(x, dtype=float)
    e = np.exp(-np.abs(xa))
    if kind is MapKind.LOGISTIC_LOG:
        out = np.where(xa >= 0, 1.0 / (1.0 + e), e / (1.0 + e))
    else:
        out = np.where(xa >= 0, 1.0 / np.sqrt(1.0 + e * e), e / np.sqrt(1.0 + e * e))
    return _scalar_out(x, out)


def clog1p(w):
    """Principal ``log(1 + w)`` for complex ``w``, accurate for small ``|w|``."""
    w = np.asarray(w, dtype=complex)
    a, b = w.real, w.imag
    small = np.abs(w) < 0.5
    with np.errstate(divide="ignore", invalid="ignore"):
        re_small = 0.5 * np.log1p(2.0 * a + a * a + b * b)
        direct = np.log(1.0 + w)
    im = np.arctan2(b, 1.0 + a)
    out = np.where(small, re_small + 1j * im, direct)
    return out


def cexpm1(z):
    """``exp(z) - 1`` for complex ``z`` without cancellation near 0."""
    z = np.asarray(z, dtype=complex)
    x, y = z.real, z.imag
    s = np.sin(0.5 * y)
    re = np.expm1(x) * np.cos(y) - 2.0 * s * s
    im = np.exp(x) * np.sin(y)
    return re + 1j * im


def map_forward_complex(kind, z):
    """Analytic continuation of the map into its strip, principal branch.

    Raises BranchError at the singular points (``x + i pi/2`` with
    ``x >= 0`` for psi, ``x + i pi`` with ``x >= 0`` for phi) and for
    points further from the real axis than those.
    """
    kind = MapKind.from_name(kind)
    za = np.asarray(z, dtype=complex)
    if np.any(~np.isfinite(za)):
        raise SincDomainError("complex argument must be finite")
    x, y = za.real, np.abs(za.imag)
    top = max_strip_width(kind)
    bad = (y > top) | ((y == top) & (x >= 0))
    if np.any(bad):
        zb = za[bad] if za.ndim else za
        raise BranchError(
            f"{kind.value} map is not analytic at {complex(np.ravel(zb)[0])!r}")
    if kind is MapKind.LOGISTIC_LOG:
        # fold Re z > 0 onto z + log(1 + e^-z); both are the principal branch
        # inside the open strip |Im z| < pi
        zp = np.where(x > 0, za, 0.0)
        zn = np.where(x > 0, 0.0, za)
        pos = zp + clog1p(np.exp(-zp))
        neg = clog1p(np.exp(zn))
        out = np.where(x > 0, pos, neg)
    else:
        zp = np.where(x > 0, za, 0.0)
        zn = np.where(x > 0, 0.0, za)
        pos = zp + np.log(1.0 + np.sqrt(1.0 + np.exp(-2.0 * zp)))
        neg = np.arcsinh(np.exp(zn))
        out = np.where(x > 0, pos, neg)
    return out.item() if za.ndim == 0 else out


def domain_arg(kind, z):
    """Principal ``arg(sinh z)`` (psi) or ``arg(e^z - 1)`` (phi), in (-pi, pi]."""
    kind = MapKind.from_name(kind)
    za = np.asarray(z, dtype=complex)
    x, y = za.real, za.imag
    if kind is MapKind.ARCSINH:
        # sinh z / cosh x = tanh x cos y + i sin y
        num = np.sin(y)
        den = np.tanh(x) * np.cos(y)
        undefined = (x == 0) & (num == 0)
    else:
        s = np.sin(0.5 * y)
        xp = np.maximum(x, 0.0)
        xn = np.minimum(x, 0.0)
        # for x > 0 divide e^z - 1 by e^x so nothing overflows
        num = np.where(x > 0, np.sin(y), np.exp(xn) * np.sin(y))
        den = np.where(x > 0, -np.expm1(-xp) - 2.0 * s * s,
                       np.expm1(xn) * np.cos(y) - 2.0 * s * s)
        undefined = (num == 0) & (den == 0)
    if np.any(undefined):
        raise SincDomainError("argument undefined: the image of z is 0")
    out = np.arctan2(num, den)
    out = np.where(out == -np.pi, np.pi, out)
    return out.item() if za.ndim == 0 else out


def in_domain(kind, z, d):
    """True where ``z`` lies in the image of the strip of half-width ``d``."""
    d = check_admissible_d(kind, d)
    arg = domain_arg(kind, z)
    out = np.abs(arg) < d
    return bool(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class BoundaryCurve:
    """Image of the strip boundary ``x +- i d`` under a map."""

    d: float
    x: np.ndarray
    upper: np.ndarray
    lower: np.ndarray

    def __post_init__(self):
        if len(self.upper) != len(self.lower) or len(self.upper) < 2:
            raise ValueError("upper and lower traces need equal length >= 2")

    def rows(self):
        for xs, u, w in zip(self.x, self.upper, self.lower):
            yield [_io.fmt(xs), _io.fmt(u.real), _io.fmt(u.imag),
                   _io.fmt(w.real), _io.fmt(w.imag)]

    def to_csv(self, path):
        _io.write_rows(path, ["x_strip", "re_upper", "im_upper", "re_lower", "im_lower"],
                       self.rows())


def domain_boundary(kind, d, x_min, x_max, count):
    kind = MapKind.from_name(kind)
    d = check_admissible_d(kind, d, strict=True)
    count = int(count)
    if count < 2:
        raise ValueError("count must be at least 2")
    x = np.linspace(float(x_min), float(x_max), count)
    upper = np.asarray(map_forward_complex(kind, x + 1j * d), dtype=complex)
    return BoundaryCurve(d=d, x=x, upper=upper, lower=np.conj(upper))
