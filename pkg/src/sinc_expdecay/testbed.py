"""Benchmark functions, the dyadic evaluation grid, and convergence sweeps."""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _io
from .bounds import total_bound, variant_for
from .errors import BuildError, SincDomainError
from .maps import MapKind, cexpm1
from .sinc import DecayProfile, build_approximant, evaluate_batch

__all__ = [
    "ExampleFunction",
    "ErrorReport",
    "EXAMPLE_IDS",
    "example",
    "evaluation_grid",
    "observed_error",
    "convergence_sweep",
    "write_reports",
    "rate_fit",
]

EXAMPLE_IDS = ("f1", "f2", "f3")
CSV_HEADER = ["n", "h", "M", "N", "observed_error", "bound"]


@dataclass(frozen=True)
class ExampleFunction:
    id: str
    eval: Callable
    eval_complex: Callable
    profile_psi: DecayProfile
    profile_phi: DecayProfile

    def profile(self, kind):
        kind = MapKind.from_name(kind)
        return self.profile_psi if kind is MapKind.ARCSINH else self.profile_phi


def _f1(t):
    t = np.asarray(t, dtype=float)
    return t ** (np.pi / 4) * np.exp(-t)


def _f1_complex(z):
    z = np.asarray(z, dtype=complex)
    return np.exp((np.pi / 4) * np.log(z) - z)


def _f2(t):
    t = np.asarray(t, dtype=float)
    lo = np.minimum(t, 1.0)
    hi = np.maximum(t, 1.0)
    # sqrt(e^t - 1) e^{-3t/2}; the large-t form is sqrt(1 - e^-t) e^-t
    near = np.sqrt(np.expm1(lo)) * np.exp(-1.5 * lo)
    far = np.sqrt(-np.expm1(-hi)) * np.exp(-hi)
    return np.where(t <= 1.0, near, far)


def _f2_complex(z):
    z = np.asarray(z, dtype=complex)
    far = z.real > 1.0
    zn = np.where(far, 0.0, z)
    zf = np.where(far, z, 2.0)
    near_val = np.sqrt(cexpm1(zn)) * np.exp(-1.5 * zn)
    far_val = np.sqrt(-cexpm1(-zf)) * np.exp(-zf)
    return np.where(far, far_val, near_val)


def _f3(t):
    t = np.asarray(t, dtype=float)
    e = np.exp(-t)
    return np.sqrt(1.0 + (1.0 - 2.0 * e) ** 2) * (t / (1.0 + t)) * e


def _f3_complex(z):
    z = np.asarray(z, dtype=complex)
    e = np.exp(-z)
    return np.sqrt(1.0 + (1.0 - 2.0 * e) ** 2) * (z / (1.0 + z)) * e


def _scalarize(fn):
    def wrapped(t):
        out = fn(t)
        return out.item() if np.ndim(out) == 0 else out
    wrapped.__name__ = fn.__name__
    wrapped.__doc__ = fn.__doc__
    return wrapped


def _make(example_id):
    psi, phi = MapKind.ARCSINH, MapKind.LOGISTIC_LOG
    pi = math.pi
    if example_id == "f1":
        a = pi / 4
        d = 3.0
        g = -math.log(math.cos(d / 2))
        K_phi = (((1 - g) ** 2 + pi ** 2) * math.exp(g / pi)) ** (a / 2)
        return ExampleFunction(
            "f1", _scalarize(_f1), _scalarize(_f1_complex),
            DecayProfile((1 + (pi / 2) ** 2) ** (a / 2), a, 1 - a / pi, pi / 2, psi),
            DecayProfile(K_phi, a, 1 - a / (2 * pi), d, phi))
    if example_id == "f2":
        a = 0.5
        d = 3.0
        g = 1 + 1 / math.cos(d / 2)
        K_phi = (g * (1 + math.log(1 + g)) / math.log(1 + g)) ** a
        return ExampleFunction(
            "f2", _scalarize(_f2), _scalarize(_f2_complex),
            DecayProfile(4 ** a, a, 1.0, pi / 2, psi),
            DecayProfile(K_phi, a, 1.0, d, phi))
    if example_id == "f3":
        return ExampleFunction(
            "f3", _scalarize(_f3), _scalarize(_f3_complex),
            DecayProfile(math.sqrt(2), 1.0, 1.0, math.atan(3), psi),
            DecayProfile(2.0, 1.0, 1.0, pi / 2, phi))
    raise KeyError(f"unknown example id {example_id!r}; expected one of {EXAMPLE_IDS}")


def example(example_id):
    return _make(str(example_id).lower())


def evaluation_grid():
    """The 201 points 2^-50, 2^-49.5, ..., 2^50."""
    j = np.arange(201)
    return np.exp2((j - 100) / 2.0)


def observed_error(ex, a):
    """Largest absolute error of the approximant over the evaluation grid."""
    f = ex.eval if hasattr(ex, "eval") else ex
    grid = evaluation_grid()
    exact = np.asarray(f(grid), dtype=float)
    approx = evaluate_batch(a, grid)
    return float(np.max(np.abs(exact - approx)))


@dataclass(frozen=True)
class ErrorReport:
    n: int
    h: float
    M: int
    N: int
    observed_error: float
    bound: float

    def csv_row(self):
        return [str(self.n), _io.fmt(self.h), str(self.M), str(self.N),
                _io.fmt(self.observed_error), _io.fmt(self.bound)]


def convergence_sweep(ex, map_kind, n_list):
    kind = MapKind.from_name(map_kind)
    n_list = [int(n) for n in n_list]
    if not n_list:
        raise ValueError("n_list must not be empty")
    profile = ex.profile(kind)
    variant = variant_for(kind)
    reports = []
    for n in n_list:
        try:
            a = build_approximant(ex.eval, profile, n)
            err = observed_error(ex, a)
        except (BuildError, SincDomainError) as exc:
            raise BuildError(f"n={n}: {exc}", n=n) from exc
        p = a.params
        reports.append(ErrorReport(n, p.h, p.M, p.N, err, total_bound(profile, variant, n)))
    return reports


def write_reports(path, reports):
    _io.write_rows(path, CSV_HEADER, (r.csv_row() for r in reports))


def rate_fit(reports, lo=1e-12, hi=1e-2):
    """Least-squares slope of ln(observed error) against sqrt(n).

    Only reports with ``lo <= observed_error <= hi`` take part.  Returns NaN
    when fewer than two reports qualify.
    """
    pts = [(math.sqrt(r.n), math.log(r.observed_error)) for r in reports
           if lo <= r.observed_error <= hi]
    if len(pts) < 2:
        return float("nan")
    x, y = np.array(pts).T
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)
