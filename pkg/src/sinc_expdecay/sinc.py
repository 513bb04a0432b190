"""Sinc approximation on (0, inf) through a conformal map.

The approximant of ``f`` is::

    f(t) ~ sum_{k=-M}^{N} f(map(k h)) S(k, h)(map^{-1}(t))

with ``M``, ``N`` and ``h`` chosen from the decay profile ``(K, alpha, beta, d)``
of ``f`` and the integer ``n``.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BuildError, SincDomainError
from .maps import MapKind, check_admissible_d, map_forward, map_inverse

__all__ = [
    "DecayProfile",
    "SincParams",
    "Approximant",
    "sinc_kernel",
    "select_params",
    "build_approximant",
    "evaluate",
    "evaluate_batch",
]

# |x/h - k| below this is treated as the removable point of the kernel
SINC_ZERO_TOL = 1e-14
_CEIL_GUARD = 1e-12


@dataclass(frozen=True)
class DecayProfile:
    """Constants of the bound ``|f(z)| <= K |z/(1+z)|^alpha |exp(-z)|^beta``.

    The bound is assumed to hold on the image of the strip of half-width
    ``d`` under ``map_kind``.
    """

    K: float
    alpha: float
    beta: float
    d: float
    map_kind: MapKind

    def __post_init__(self):
        object.__setattr__(self, "map_kind", MapKind.from_name(self.map_kind))
        for name in ("K", "alpha", "beta"):
            v = float(getattr(self, name))
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be finite and positive, got {v!r}")
            object.__setattr__(self, name, v)
        object.__setattr__(self, "d", check_admissible_d(self.map_kind, self.d))

    @property
    def mu(self):
        return min(self.alpha, self.beta)

    @property
    def rate(self):
        """Exponent constant ``sqrt(pi d mu)`` of the error ``exp(-rate sqrt(n))``."""
        return math.sqrt(math.pi * self.d * self.mu)


@dataclass(frozen=True)
class SincParams:
    n: int
    h: float
    M: int
    N: int


def _guarded_ceil(r):
    nearest = round(r)
    if abs(r - nearest) <= _CEIL_GUARD * max(1.0, abs(r)):
        return int(nearest)
    return int(math.ceil(r))


def select_params(profile, n):
    n = int(n)
    if n < 1:
        raise ValueError("n must be a positive integer")
    a, b = profile.alpha, profile.beta
    mu = profile.mu
    if mu == a:
        M, N = n, _guarded_ceil(a * n / b)
    else:
        M, N = _guarded_ceil(b * n / a), n
    h = math.sqrt(math.pi * profile.d / (mu * n))
    return SincParams(n=n, h=h, M=M, N=N)


def _sinc_offsets(u):
    """sin(pi u)/(pi u) with the argument reduced so integer u gives exact zeros."""
    u = np.asarray(u, dtype=float)
    m = np.rint(u)
    r = u - m
    sign = np.where(np.fmod(m, 2.0) == 0.0, 1.0, -1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        val = sign * np.sin(np.pi * r) / (np.pi * u)
    return np.where(np.abs(u) < SINC_ZERO_TOL, 1.0, val)


def sinc_kernel(k, h, x):
    """The shifted cardinal function ``S(k, h)(x)``."""
    if not h > 0:
        raise ValueError("h must be positive")
    out = _sinc_offsets(np.asarray(x, dtype=float) / h - k)
    return out.item() if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class Approximant:
    profile: DecayProfile
    params: SincParams
    samples: np.ndarray = field(repr=False)

    def __post_init__(self):
        w = np.array(self.samples, dtype=float)
        if w.shape != (self.params.M + self.params.N + 1,):
            raise ValueError("need exactly M + N + 1 samples")
        if not np.all(np.isfinite(w)):
            raise ValueError("samples must be finite")
        w.flags.writeable = False
        object.__setattr__(self, "samples", w)

    @property
    def map_kind(self):
        return self.profile.map_kind

    @property
    def indices(self):
        return np.arange(-self.params.M, self.params.N + 1)

    @property
    def nodes(self):
        """Sample points ``map(k h)`` in the t variable, k = -M..N."""
        return np.asarray(map_forward(self.map_kind, self.indices * self.params.h))

    def __call__(self, t):
        if np.ndim(t) == 0:
            return evaluate(self, t)
        return evaluate_batch(self, t)


def build_approximant(f, profile, n):
    params = select_params(profile, n)
    ks = np.arange(-params.M, params.N + 1)
    ts = np.asarray(map_forward(profile.map_kind, ks * params.h))
    samples = np.empty(len(ks))
    for i, (k, t) in enumerate(zip(ks, ts)):
        v = float(f(float(t)))
        if not math.isfinite(v):
            raise BuildError(f"f(map({k}h)) = f({t!r}) is not finite", k=int(k), n=params.n)
        samples[i] = v
    return Approximant(profile=profile, params=params, samples=samples)


def evaluate(a, t):
    t = float(t)
    if not t > 0 or not math.isfinite(t):
        raise SincDomainError(f"approximant is defined for finite t > 0, got {t!r}")
    x = map_inverse(a.map_kind, t)
    kern = _sinc_offsets(x / a.params.h - a.indices)
    return math.fsum(a.samples * kern)


def evaluate_batch(a, ts):
    ts = np.asarray(ts, dtype=float).ravel()
    out = np.empty(len(ts))
    for i, t in enumerate(ts):
        try:
            out[i] = evaluate(a, t)
        except SincDomainError as exc:
            raise SincDomainError(f"ts[{i}]: {exc}") from exc
    return out
