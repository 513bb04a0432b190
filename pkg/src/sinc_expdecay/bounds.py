"""Computable a-priori error bounds for the two Sinc approximations.

Every bound has the form ``C sqrt(n) exp(-sqrt(pi d mu n))``.  The two maps
differ only in the factor multiplying the discretization part:
``2^((alpha+beta)/2)`` for arcsinh and ``(e/(e-1))^(mu/2)`` for logistic-log.
"""

import enum
import math

from .errors import AdmissibilityError
from .maps import MapKind, check_admissible_d

__all__ = [
    "BoundVariant",
    "variant_for",
    "strip_factor",
    "bound_constant",
    "total_bound",
    "discretization_bound",
    "truncation_bound",
    "n1_norm_bound",
    "stenger_discretization",
]


class BoundVariant(enum.Enum):
    EXISTING_PSI = "psi"
    NEW_PHI = "phi"


_VARIANT_MAP = {BoundVariant.EXISTING_PSI: MapKind.ARCSINH,
                BoundVariant.NEW_PHI: MapKind.LOGISTIC_LOG}


def variant_for(kind):
    kind = MapKind.from_name(kind)
    return BoundVariant.EXISTING_PSI if kind is MapKind.ARCSINH else BoundVariant.NEW_PHI


def _checked(profile, variant):
    if variant is None:
        variant = variant_for(profile.map_kind)
    variant = BoundVariant(variant)
    if _VARIANT_MAP[variant] is not profile.map_kind:
        raise ValueError(f"bound variant {variant.name} does not match "
                         f"profile map {profile.map_kind.value}")
    check_admissible_d(profile.map_kind, profile.d)
    c = math.cos(profile.d / 2)
    if not c > 0:
        raise AdmissibilityError("cos(d/2) must be positive")
    return variant


def strip_factor(profile, variant=None):
    """Map-dependent constant that bounds ``|F|`` on the strip edges."""
    variant = _checked(profile, variant)
    if variant is BoundVariant.EXISTING_PSI:
        return 2.0 ** ((profile.alpha + profile.beta) / 2)
    e = math.e
    return (e / (e - 1.0)) ** (profile.mu / 2)


def bound_constant(profile, variant=None):
    variant = _checked(profile, variant)
    K, d, mu = profile.K, profile.d, profile.mu
    s = math.sqrt(math.pi * d * mu)
    cos_pow = math.cos(d / 2) ** (profile.alpha + profile.beta)
    inner = 2.0 * strip_factor(profile, variant) / (s * -math.expm1(-2.0 * s) * cos_pow)
    return 2.0 * K / s * (inner + 1.0)


def total_bound(profile, variant, n):
    n = int(n)
    if n < 1:
        raise ValueError("n must be a positive integer")
    C = bound_constant(profile, variant)
    return C * math.sqrt(n) * math.exp(-math.sqrt(math.pi * profile.d * profile.mu * n))


def n1_norm_bound(profile, variant=None):
    """Upper bound of the strip-boundary norm of ``F = f(map(.))``."""
    variant = _checked(profile, variant)
    cos_pow = math.cos(profile.d / 2) ** (profile.alpha + profile.beta)
    return 4.0 * profile.K * strip_factor(profile, variant) / (profile.mu * cos_pow)


def stenger_discretization(n1, d, h):
    """Discretization error bound of the infinite cardinal series from a norm bound."""
    q = math.pi * d / h
    return n1 * math.exp(-q) / (math.pi * d * -math.expm1(-2.0 * q))


def discretization_bound(profile, h, variant=None):
    variant = _checked(profile, variant)
    if not h > 0:
        raise ValueError("h must be positive")
    K, d, mu = profile.K, profile.d, profile.mu
    q = math.pi * d / h
    cos_pow = math.cos(d / 2) ** (profile.alpha + profile.beta)
    return (4.0 * K * strip_factor(profile, variant) * math.exp(-q)
            / (math.pi * d * mu * -math.expm1(-2.0 * q) * cos_pow))


def truncation_bound(profile, h, n):
    if not h > 0:
        raise ValueError("h must be positive")
    mu = profile.mu
    return 2.0 * profile.K / (mu * h) * math.exp(-mu * int(n) * h)
