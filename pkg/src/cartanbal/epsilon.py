"""Numerical epsilon-function evaluation on rank-one domains by quadrature.

Squared monomial norms are computed against the plain Euclidean volume form
on coordinates (so all constants below are tied to that normalization):

  ball(d), d in {1, 2}:   ||z^m||^2 = int (1-|z|^2)^(alpha-(d+1)) |z^m|^2 dV
  Hartogs over the disc:  ||z^j w^m||^2 =
      int (N^mu - |w|^2)^(alpha-3) N^(2 mu - 2) |z|^(2j) |w|^(2m) dV,
      N = 1 - |z|^2, over {|z| < 1, |w|^2 < N^mu}.

Angular integration is exact (monomials are orthogonal; tests spot-check the
cross terms by quadrature), which reduces every norm to iterated 1D radial
integrals in t = |z|^2 and rho = |w|^2.  The Hartogs fiber variable is
normalized by rho = N^mu * u, which maps the fiber integral to a fixed Beta
integral in u and leaves a pure power of N for the base integral; this
substitution is the variable change that also regularizes the boundary
singularity.  Integrands with an endpoint factor (1-t)^e, e in (-1, 0), are
regularized by the substitution s = (1-t)^(1+e), after which the integrand
is bounded.

Quadrature targets are relative (epsrel 1e-12 for d=1, 1e-10 for d=2 and
Hartogs): the epsilon sums divide monomial values by norms whose magnitudes
span many orders across the degree range, so relative accuracy per norm is
what the constancy spreads require; for norms of order one this is at least
as strict as the same figure read as an absolute target.

Divergent norms are never reported as numbers: the norms object carries a
divergence flag set from the exact integrability thresholds (alpha <= d for
the ball; alpha <= d+1 or alpha*mu <= gamma-1 = 1 for the Hartogs disc).

The epsilon function of the weight is

    epsilon(p) = weight(p) * sum_m |basis_m(p)|^2 / ||basis_m||^2,

so on the ball epsilon(z) = (1-|z|^2)^alpha sum |z^m|^2/||z^m||^2, and over
the disc epsilon(z, w) = (N^mu - |w|^2)^alpha sum |z^j w^m|^2/||z^j w^m||^2.
Constancy of epsilon over a grid is the numerical signature of balancedness:
spread below 1e-5 reads as constant, above 1e-3 as non-constant, and the gap
between them is treated as inconclusive (callers fail loudly on it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from .calabi import multi_index_enumerate
from .errors import (
    QuadratureFailureError,
    SampleOutsideDomainError,
    TrivialSpaceError,
)

__all__ = [
    "WeightedBasisNorms",
    "EpsilonReport",
    "DiscGrid",
    "ball_monomial_norms",
    "epsilon_ball",
    "epsilon_point_ball",
    "hartogs_disc_norms",
    "epsilon_hartogs_disc",
    "epsilon_point_hartogs",
    "constancy_verdict",
    "SPREAD_CONSTANT",
    "SPREAD_NONCONSTANT",
]

SPREAD_CONSTANT = 1e-5
SPREAD_NONCONSTANT = 1e-3

_EPSREL_D1 = 1e-12
_EPSREL_D2 = 1e-10


@dataclass(frozen=True)
class WeightedBasisNorms:
    """Squared monomial norms for one weighted Bergman setting.

    setting is "ball" (params d, alpha; keys are int degrees for d=1 and
    multi-index tuples for d=2) or "hartogs-disc" (params mu, alpha; keys are
    (z degree, w degree) pairs).  divergent means the defining integrals do
    not converge; then norms is empty.
    """

    setting: str
    params: tuple
    norms: dict
    divergent: bool
    quadrature_error: float


@dataclass(frozen=True)
class EpsilonReport:
    grid: tuple  # (|z|, |w|) pairs; |w| = 0 for ball settings
    values: tuple
    min_value: float
    max_value: float
    spread: float  # (max - min) / max
    truncation_degree: tuple
    tail_bound: float


@dataclass(frozen=True)
class DiscGrid:
    """Interior evaluation grid for the Hartogs disc setting.

    t = |z|^2 runs over nz points in [0, t_max]; the fiber coordinate is
    sampled through u = |w|^2 / (1-t)^mu over nw points in [0, u_max], which
    keeps every point strictly inside the domain and keeps the truncation
    tail controlled by max(t_max, u_max).
    """

    nz: int = 8
    nw: int = 8
    t_max: float = 0.35
    u_max: float = 0.5

    def __post_init__(self):
        if not (self.nz >= 1 and self.nw >= 1):
            raise ValueError("grid needs at least one point per axis")
        if not (0 <= self.t_max < 1 and 0 <= self.u_max < 1):
            raise SampleOutsideDomainError(
                "grid bounds must satisfy 0 <= t_max < 1 and 0 <= u_max < 1"
            )


def constancy_verdict(spread: float) -> str:
    """Map a measured spread to "constant", "non-constant" or "inconclusive"."""
    if spread < SPREAD_CONSTANT:
        return "constant"
    if spread > SPREAD_NONCONSTANT:
        return "non-constant"
    return "inconclusive"


# ---------------------------------------------------------------------------
# quadrature primitives


def _quad01(integrand, epsrel: float) -> tuple[float, float]:
    """Adaptive quadrature on [0, 1] with a relative target; loud on failure."""
    out = quad(integrand, 0.0, 1.0, epsabs=0.0, epsrel=epsrel, limit=200, full_output=1)
    value, abserr = out[0], out[1]
    if len(out) > 3:  # QUADPACK warning; accept only if the result is still tight
        if not (value > 0 and abserr <= 1e-8 * abs(value)):
            raise QuadratureFailureError(
                f"quadrature did not reach epsrel={epsrel}: {out[3].splitlines()[0]}"
            )
    return value, abserr


def _beta_like_integral(p: int, e: float, epsrel: float) -> tuple[float, float]:
    """int_0^1 t^p (1-t)^e dt for integer p >= 0, real e > -1.

    For e in (-1, 0) the endpoint singularity at t=1 is removed exactly by
    s = (1-t)^(1+e): the integral becomes (1/(1+e)) int_0^1 (1-s^(1/(1+e)))^p ds
    with a bounded integrand.
    """
    if e <= -1:
        raise ValueError(f"exponent {e} is not integrable on [0, 1]")
    if e < 0:
        c = 1.0 + e
        inv = 1.0 / c
        value, err = _quad01(lambda s: (1.0 - s**inv) ** p, epsrel)
        return value / c, err / c
    return _quad01(lambda t: t**p * (1.0 - t) ** e, epsrel)


# ---------------------------------------------------------------------------
# ball norms and epsilon


def ball_monomial_norms(d: int, alpha, degree_cap: int) -> WeightedBasisNorms:
    """Squared monomial norms on the ball, or a divergence flag if alpha <= d.

    d=1: ||z^m||^2 = pi * int t^m (1-t)^(alpha-2) dt, keys m = 0..degree_cap.
    d=2: after the angular and simplex reduction (t_i = rho s_i),
         ||z^m||^2 = pi^2 * int u^m1 (1-u)^m2 du * int rho^(|m|+1) (1-rho)^(alpha-3) drho,
         keys all multi-indices with |m| <= degree_cap.
    """
    alpha = float(alpha)
    if d not in (1, 2):
        raise ValueError(f"d must be 1 or 2, got {d}")
    if degree_cap < 0:
        raise ValueError(f"degree_cap must be >= 0, got {degree_cap}")
    if alpha <= d:
        return WeightedBasisNorms("ball", (d, alpha), {}, True, 0.0)
    epsrel = _EPSREL_D1 if d == 1 else _EPSREL_D2
    e = alpha - (d + 1)
    norms: dict = {}
    worst = 0.0
    if d == 1:
        for m in range(degree_cap + 1):
            value, err = _beta_like_integral(m, e, epsrel)
            norms[m] = math.pi * value
            worst = max(worst, math.pi * err)
    else:
        radial: dict[int, tuple[float, float]] = {}
        for n in range(degree_cap + 1):
            radial[n] = _beta_like_integral(n + 1, e, epsrel)
        for idx in multi_index_enumerate(2, degree_cap):
            m1, m2 = idx
            ang, ang_err = _beta_like_integral(m1, float(m2), epsrel)
            rad, rad_err = radial[m1 + m2]
            norms[idx] = math.pi**2 * ang * rad
            worst = max(worst, math.pi**2 * (ang_err * rad + ang * rad_err))
    return WeightedBasisNorms("ball", (d, alpha), norms, False, worst)


def epsilon_point_ball(norms: WeightedBasisNorms, z) -> float:
    """epsilon at one point of the ball, from precomputed norms."""
    d, alpha = norms.params
    if norms.divergent:
        raise TrivialSpaceError(
            f"no nonzero analytic functions for ball d={d}, alpha={alpha}"
        )
    zs = (complex(z),) if d == 1 and not isinstance(z, (tuple, list)) else tuple(
        complex(p) for p in z
    )
    if len(zs) != d:
        raise SampleOutsideDomainError(f"z must have {d} coordinates")
    t = sum(abs(p) ** 2 for p in zs)
    if t >= 1.0:
        raise SampleOutsideDomainError(f"|z|^2 = {t} is not < 1")
    if d == 1:
        terms = [t**m / norm for m, norm in norms.norms.items()]
    else:
        moduli = [abs(p) ** 2 for p in zs]
        terms = [
            (moduli[0] ** m1) * (moduli[1] ** m2) / norm
            for (m1, m2), norm in norms.norms.items()
        ]
    return (1.0 - t) ** alpha * math.fsum(terms)


@lru_cache(maxsize=16)
def _ball_norms_cached(d: int, alpha: float, degree_cap: int) -> WeightedBasisNorms:
    return ball_monomial_norms(d, alpha, degree_cap)


def epsilon_ball(
    d: int, alpha, grid_rmax: float, degree_cap: int, grid_points: int = 25
) -> EpsilonReport:
    """epsilon along a radial grid on the ball; TrivialSpaceError if alpha <= d.

    The truncation tail at |z|^2 = t obeys the exact term ratio
    a_(n+1)/a_n = t (n+alpha)/(n+1) (from the Beta-integral norms), which is
    decreasing in n, so the tail above the cap is bounded by the last kept
    degree-slice times a geometric series.
    """
    alpha = float(alpha)
    if alpha <= d:
        raise TrivialSpaceError(
            f"alpha must exceed d = {d} for a nontrivial space, got {alpha}"
        )
    if not 0 < grid_rmax < 1:
        raise SampleOutsideDomainError(f"grid_rmax must lie in (0, 1), got {grid_rmax}")
    norms = _ball_norms_cached(d, alpha, degree_cap)
    direction = (1.0,) if d == 1 else (1 / math.sqrt(2), 1 / math.sqrt(2))
    radii = np.linspace(0.0, grid_rmax, grid_points)
    values = []
    tail = 0.0
    for r in radii:
        z = r * direction[0] if d == 1 else tuple(r * u for u in direction)
        values.append(epsilon_point_ball(norms, z))
        t = float(r) ** 2
        last_slice = _ball_last_slice(norms, t, degree_cap, direction)
        rho = t * (degree_cap + alpha) / (degree_cap + 1)
        bound = math.inf if rho >= 1 else (1 - t) ** alpha * last_slice * rho / (1 - rho)
        tail = max(tail, bound)
    vmax, vmin = max(values), min(values)
    return EpsilonReport(
        tuple((float(r), 0.0) for r in radii),
        tuple(values),
        vmin,
        vmax,
        (vmax - vmin) / vmax,
        (degree_cap,),
        tail,
    )


def _ball_last_slice(norms, t: float, cap: int, direction) -> float:
    d, _ = norms.params
    if d == 1:
        return t**cap / norms.norms[cap]
    m0 = direction[0] ** 2 * t
    m1 = direction[1] ** 2 * t
    return math.fsum(
        m0**i * m1 ** (cap - i) / norms.norms[(i, cap - i)] for i in range(cap + 1)
    )


# ---------------------------------------------------------------------------
# Hartogs disc norms and epsilon


def hartogs_disc_norms(mu, alpha, caps: tuple[int, int]) -> WeightedBasisNorms:
    """Squared norms of z^j w^m over the Hartogs domain on the disc.

    Normalizing the fiber by rho = (1-t)^mu u factorizes each norm exactly:

        ||z^j w^m||^2 = pi^2 * int_0^1 u^m (1-u)^(alpha-3) du
                              * int_0^1 t^j (1-t)^(mu(alpha+m)-2) dt.

    The divergence thresholds are exact: the u integral needs alpha > 2 and
    the t integral needs mu(alpha+m) > 1 for all m >= 0, i.e. alpha*mu > 1.
    """
    mu = float(mu)
    alpha = float(alpha)
    cap_z, cap_w = caps
    if mu <= 0:
        raise ValueError(f"mu must be positive, got {mu}")
    if cap_z < 0 or cap_w < 0:
        raise ValueError(f"caps must be nonnegative, got {caps}")
    if alpha <= 2 or alpha * mu <= 1:
        return WeightedBasisNorms("hartogs-disc", (mu, alpha), {}, True, 0.0)
    fiber: dict[int, tuple[float, float]] = {}
    for m in range(cap_w + 1):
        fiber[m] = _beta_like_integral(m, alpha - 3.0, _EPSREL_D2)
    norms: dict = {}
    worst = 0.0
    for m in range(cap_w + 1):
        fib, fib_err = fiber[m]
        e = mu * (alpha + m) - 2.0
        for j in range(cap_z + 1):
            base, base_err = _beta_like_integral(j, e, _EPSREL_D2)
            norms[(j, m)] = math.pi**2 * fib * base
            worst = max(worst, math.pi**2 * (fib_err * base + fib * base_err))
    return WeightedBasisNorms("hartogs-disc", (mu, alpha), norms, False, worst)


@lru_cache(maxsize=8)
def _hartogs_norms_cached(mu: float, alpha: float, caps: tuple[int, int]):
    return hartogs_disc_norms(mu, alpha, caps)


def epsilon_point_hartogs(norms: WeightedBasisNorms, z, w) -> float:
    """epsilon at one point (z, w) of the Hartogs disc domain."""
    mu, alpha = norms.params
    if norms.divergent:
        raise TrivialSpaceError(
            f"norms diverge for mu={mu}, alpha={alpha} (needs alpha > 2 and "
            "alpha*mu > 1)"
        )
    t = abs(complex(z)) ** 2
    y = abs(complex(w)) ** 2
    if t >= 1.0 or y >= (1.0 - t) ** mu:
        raise SampleOutsideDomainError(
            f"(z, w) with |z|^2={t}, |w|^2={y} lies outside the domain"
        )
    terms = [t**j * y**m / norm for (j, m), norm in norms.norms.items()]
    return ((1.0 - t) ** mu - y) ** alpha * math.fsum(terms)


def epsilon_hartogs_disc(
    mu, alpha, grid: DiscGrid | None = None, caps: tuple[int, int] = (80, 80)
) -> EpsilonReport:
    """epsilon over an interior grid of the Hartogs disc domain."""
    mu = float(mu)
    alpha = float(alpha)
    if grid is None:
        grid = DiscGrid()
    norms = _hartogs_norms_cached(mu, alpha, caps)
    if norms.divergent:
        raise TrivialSpaceError(
            f"norms diverge for mu={mu}, alpha={alpha} (needs alpha > 2 and "
            "alpha*mu > 1)"
        )
    cap_z, cap_w = caps
    t_values = np.linspace(0.0, grid.t_max, grid.nz)
    u_values = np.linspace(0.0, grid.u_max, grid.nw)
    inv = np.empty((cap_z + 1, cap_w + 1))
    for (j, m), norm in norms.norms.items():
        inv[j, m] = 1.0 / norm
    grid_pts = []
    values = []
    tail = 0.0
    for t in t_values:
        n_mu = (1.0 - t) ** mu
        tj = np.power(float(t), np.arange(cap_z + 1))
        for u in u_values:
            y = u * n_mu
            ym = np.power(float(y), np.arange(cap_w + 1))
            total = float(tj @ inv @ ym)
            grid_pts.append((math.sqrt(t), math.sqrt(y)))
            values.append((n_mu - y) ** alpha * total)
            bound = _hartogs_tail_bound(float(t), float(y), mu, alpha, cap_z, cap_w)
            tail = max(tail, bound)
    vmax, vmin = max(values), min(values)
    return EpsilonReport(
        tuple(grid_pts),
        tuple(values),
        vmin,
        vmax,
        (vmax - vmin) / vmax,
        caps,
        tail,
    )


def _log_beta(a: float, b: float) -> float:
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def _hartogs_tail_bound(
    t: float, y: float, mu: float, alpha: float, cap_z: int, cap_w: int
) -> float:
    """Bound on the epsilon truncation error at (t, y), from exact Beta norms.

    Terms are a(j, m) = t^j y^m / (pi^2 B(m+1, alpha-2) B(j+1, c_m)) with
    c_m = mu(alpha+m) - 1.  Two pieces cover j > cap_z or m > cap_w:

    * for each m <= cap_w, the j tail is geometric with ratio
      t (j+1+c_m)/(j+1), decreasing in j; if that ratio is >= 1 at
      j = cap_z+1 the whole j sum is bounded instead by its closed form
      c_m (1-t)^(-c_m-1) (Newton's binomial series);
    * for m > cap_w the full j sums b_m = y^m c_m (1-t)^(-c_m-1) /
      (pi^2 B(m+1, alpha-2)) decay with ratio
      (y/(1-t)^mu) (m+alpha-1)/(m+1) * c_(m+1)/c_m, also decreasing.

    The result is multiplied by the weight prefactor, giving an absolute
    bound on the truncated epsilon value.
    """
    log_t = -math.inf if t == 0 else math.log(t)
    log_y = -math.inf if y == 0 else math.log(y)
    log_pi2 = 2 * math.log(math.pi)
    one_m_t = 1.0 - t

    def j_tail(m: int) -> float:
        c = mu * (alpha + m) - 1.0
        full = c * one_m_t ** (-c - 1.0)
        if t == 0.0:
            return 0.0
        ratio = t * (cap_z + 2 + c) / (cap_z + 2)
        if ratio >= 1.0:
            return full
        log_first = (cap_z + 1) * log_t - _log_beta(cap_z + 2, c)
        return math.exp(log_first) / (1.0 - ratio)

    def w_weight_log(m: int) -> float:
        return m * log_y - _log_beta(m + 1, alpha - 2.0) - log_pi2

    pieces = []
    for m in range(cap_w + 1):
        if y == 0.0 and m > 0:
            break
        weight = math.exp(w_weight_log(m)) if m > 0 or y > 0 else 1.0 / math.exp(
            _log_beta(1, alpha - 2.0) + log_pi2
        )
        pieces.append(weight * j_tail(m))
    if y > 0.0:
        m1 = cap_w + 1
        c1 = mu * (alpha + m1) - 1.0
        b1 = math.exp(w_weight_log(m1)) * c1 * one_m_t ** (-c1 - 1.0)
        ratio = (
            (y / one_m_t**mu)
            * (m1 + alpha - 1.0)
            / (m1 + 1.0)
            * (mu * (alpha + m1 + 1) - 1.0)
            / c1
        )
        pieces.append(math.inf if ratio >= 1.0 else b1 / (1.0 - ratio))
    weight_prefactor = (one_m_t**mu - y) ** alpha
    return weight_prefactor * math.fsum(pieces)
