"""Sampling oracles for the inequalities behind the logistic-log error bound.

Each ``check_*`` function draws seeded random points, adds a few fixed
points where the inequality is tight or delicate, and reports the smallest
margin ``rhs - lhs`` it saw.  Random draws come from a Philox (counter-based)
generator, so a given ``(samples, seed)`` always gives the same report.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _io
from .maps import MapKind, clog1p, domain_boundary, map_forward, max_strip_width
from .testbed import EXAMPLE_IDS, example

__all__ = [
    "MARGIN_TOL",
    "SampleReport",
    "LemmaConstants",
    "LEMMA",
    "essential_value",
    "real_line_value",
    "p_poly",
    "h_reduced",
    "limit_values",
    "check_essential_inequality",
    "check_real_line_bound",
    "check_p_nonneg",
    "check_exp_bound",
    "check_decay_condition",
    "run_all",
    "REPORT_HEADER",
]

MARGIN_TOL = 1e-12
REPORT_HEADER = ["check_name", "samples", "worst_margin", "worst_point", "passed"]


@dataclass(frozen=True)
class SampleReport:
    check_name: str
    checked: int
    worst_margin: float
    worst_point: object
    passed: bool

    def csv_row(self):
        return [self.check_name, str(self.checked), _io.fmt(self.worst_margin),
                _io.fmt_point(self.worst_point), "true" if self.passed else "false"]


@dataclass(frozen=True)
class LemmaConstants:
    l: float

    @classmethod
    def compute(cls):
        # log(e/(e-1)) = -log(1 - 1/e)
        return cls(l=-math.log1p(-math.exp(-1.0)))


LEMMA = LemmaConstants.compute()


def _rng(seed):
    return np.random.Generator(np.random.Philox(int(seed)))


def _report(name, margins, points):
    margins = np.asarray(margins, dtype=float)
    if margins.size == 0:
        raise ValueError("no samples were checked")
    bad = ~np.isfinite(margins)
    if np.any(bad):
        i = int(np.argmax(bad))
        return SampleReport(name, margins.size, float("-inf"), points[i], False)
    i = int(np.argmin(margins))
    worst = float(margins[i])
    pt = points[i]
    pt = complex(pt) if np.iscomplexobj(points) else float(pt)
    return SampleReport(name, int(margins.size), worst, pt, worst >= -MARGIN_TOL)


def _check_samples(samples):
    samples = int(samples)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    return samples


def _exp_iy(y):
    """(cos y, sin y) with the values at y = +-pi made exact."""
    y = np.asarray(y, dtype=float)
    edge = np.abs(y) == np.pi
    c = np.where(edge, -1.0, np.cos(y))
    s = np.where(edge, 0.0, np.sin(y))
    return c, s


def essential_value(x, y):
    """``|log(1+e^z)/(1+log(1+e^z)) * (e^-l + e^z)/e^z|`` at ``z = x + i y``.

    Valid for ``|y| <= pi``; on the edges ``y = +-pi`` with ``x > 0`` the
    logarithm takes the branch ``log(e^x - 1) +- i pi``.  The point
    ``x = 0, y = +-pi`` is removable and returns NaN here.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    c, s = _exp_iy(y)
    ex = np.exp(x)
    w = ex * (c + 1j * s)
    on_cut = (np.abs(y) == np.pi) & (x > 0)
    with np.errstate(divide="ignore", invalid="ignore"):
        xc = np.where(on_cut, x, 1.0)
        cut_log = np.log(-np.expm1(-xc)) + xc + 1j * np.pi * np.sign(y)
        L = np.where(on_cut, cut_log, clog1p(w))
        emx = np.exp(-x)
        second = 1.0 + math.exp(-LEMMA.l) * emx * (c - 1j * s)
        val = np.abs(L / (1.0 + L)) * np.abs(second)
    return np.where((x == 0) & (np.abs(y) == np.pi), np.nan, val)


def real_line_value(x):
    x = np.asarray(x, dtype=float)
    L = np.asarray(map_forward(MapKind.LOGISTIC_LOG, x))
    return np.abs(L / (1.0 + L) * (1.0 + np.exp(-x)))


def p_poly(t):
    t = np.asarray(t, dtype=float)
    e = math.e
    return 1.0 + np.exp(t) * (np.exp(t + 1) - 1.0 + t + t * t - e * (1.0 + t + t * t))


def h_reduced(t):
    """The reduced form of the edge expression for ``x < 0`` with ``t = log(1 - e^x)``.

    Written as ``(t/expm1(t)) * (expm1(t+1)/(t+1)) / e`` so the points
    ``t = 0`` and ``t = -1`` are only removable, not cancelling.
    """
    t = np.asarray(t, dtype=float)
    return (t / np.expm1(t)) * (np.expm1(t + 1.0) / (t + 1.0)) / math.e


def limit_values(offset=1e-7):
    """Limits of the edge expression at its removable points.

    Returns ``{"edge_at_origin": ~1/e, "h_at_0": ~(e-1)/e, "h_at_minus_1": ~1/(e-1)}``.
    The finite points use the mean of ``h`` at ``+-offset`` (error O(offset^2)).
    ``z -> i pi`` corresponds to ``t -> -inf`` and is evaluated far out.
    """
    def sym(t0):
        return float(0.5 * (h_reduced(t0 + offset) + h_reduced(t0 - offset)))
    return {
        "edge_at_origin": float(h_reduced(-1e13)),
        "h_at_0": sym(0.0),
        "h_at_minus_1": sym(-1.0),
    }


def check_essential_inequality(samples, seed):
    samples = _check_samples(samples)
    rng = _rng(seed)
    x = rng.uniform(-50.0, 50.0, samples)
    y = rng.uniform(-np.pi, np.pi, samples)
    # the maximum sits on the edges y = +-pi; cover them densely and near x = 0
    xe = np.linspace(-50.0, 50.0, 2001)
    xe = xe[xe != 0.0]
    xe = np.concatenate([xe, [-1e-7, 1e-7, -1e-3, 1e-3]])
    xs = np.concatenate([x, [0.0], xe, xe])
    ys = np.concatenate([y, [0.0], np.full(xe.size, np.pi), np.full(xe.size, -np.pi)])
    margins = 1.0 - essential_value(xs, ys)
    return _report("essential_inequality", margins, xs + 1j * ys)


def check_real_line_bound(samples, seed):
    samples = _check_samples(samples)
    x = _rng(seed).uniform(-60.0, 60.0, samples)
    xs = np.concatenate([x, [-60.0, 0.0, 60.0]])
    return _report("real_line_bound", 1.0 - real_line_value(xs), xs)


def check_p_nonneg(samples, seed):
    samples = _check_samples(samples)
    t = _rng(seed).uniform(-60.0, 0.0, samples)
    ts = np.concatenate([t, [0.0, -1.0]])
    return _report("p_nonneg", p_poly(ts), ts)


def _exp_bound_margins(x, y):
    z = x + 1j * y
    cos_half = np.cos(0.5 * y)
    m1 = 1.0 / ((1.0 + np.exp(x)) * cos_half) - np.abs(1.0 / (1.0 + np.exp(z)))
    m2 = 1.0 / ((1.0 + np.exp(-x)) * cos_half) - np.abs(1.0 / (1.0 + np.exp(-z)))
    return np.minimum(m1, m2)


def check_exp_bound(samples, seed):
    samples = _check_samples(samples)
    rng = _rng(seed)
    x = rng.uniform(-50.0, 50.0, samples)
    y = rng.uniform(-np.pi, np.pi, samples)
    y = np.where(y == -np.pi, 0.0, y)  # keep the open interval
    fixed_x = np.array([-50.0, -1.0, 0.0, 1.0, 50.0, 0.0])
    fixed_y = np.array([0.0, 0.0, 0.0, 0.0, 0.0, np.pi / 2])
    xs = np.concatenate([x, fixed_x])
    ys = np.concatenate([y, fixed_y])
    return _report("exp_bound", _exp_bound_margins(xs, ys), xs + 1j * ys)


def _decay_margins(f_complex, profile, z):
    z = np.asarray(z, dtype=complex)
    lhs = np.abs(f_complex(z))
    rhs = profile.K * np.abs(z / (1.0 + z)) ** profile.alpha * np.exp(-profile.beta * z.real)
    return rhs - lhs


def check_decay_condition(example_id, map_kind, samples, seed, f_complex=None, profile=None):
    """Sample ``|f(z)| <= K |z/(1+z)|^alpha |e^-z|^beta`` for an example profile.

    Points are drawn log-uniformly on (2^-50, 2^50) and along the image of
    the strip edges ``x +- i d`` for ``|x| <= 30``.  ``f_complex`` and
    ``profile`` override the stored example, e.g. for synthetic functions.
    """
    samples = _check_samples(samples)
    kind = MapKind.from_name(map_kind)
    if profile is None or f_complex is None:
        ex = example(example_id)
        profile = profile or ex.profile(kind)
        f_complex = f_complex or ex.eval_complex
    rng = _rng(seed)
    t = np.exp2(rng.uniform(-50.0, 50.0, samples))
    d = profile.d
    if d >= max_strip_width(kind):
        # the edge runs through the map's singularity; trace it from inside
        d = d * (1.0 - 1e-9)
    curve = domain_boundary(kind, d, -30.0, 30.0, max(samples, 2))
    z = np.concatenate([t + 0j, curve.upper, curve.lower])
    margins = _decay_margins(f_complex, profile, z)
    name = f"decay_{example_id}_{kind.value}"
    return _report(name, margins, z)


def run_all(samples, seed):
    """Every check, in a fixed order; the decay check runs for all six profiles."""
    reports = [
        check_essential_inequality(samples, seed),
        check_real_line_bound(samples, seed),
        check_p_nonneg(samples, seed),
        check_exp_bound(samples, seed),
    ]
    for ex_id in EXAMPLE_IDS:
        for kind in MapKind:
            reports.append(check_decay_condition(ex_id, kind, samples, seed))
    return reports
