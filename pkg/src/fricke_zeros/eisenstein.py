"""Eisenstein series for the Fricke groups of level 5 and 7, restricted to arcs.

Everything here is a pure function.  The series E_k is a sum over coprime
lattice pairs; E*_{k,p} combines E_k(z) and E_k(pz); the F functions are the
real-valued arc restrictions e^{ik\theta/2} E*_{k,p}(z(\theta)) on the two
boundary arcs of the fundamental domain.

Two evaluation engines are provided and cross-checked in the tests:

* ``shells``  -- direct enumeration of coprime pairs by ascending shell
  N = c^2 + d^2, with the |cz+d|^2 >= lambda(z) N tail bound.  Faithful to the
  textbook definition but slowly convergent at small weights.
* ``rows``    -- the same sum reorganized by rows of constant c: Moebius
  filtering turns each row into closed-form full-row sums, which converge
  geometrically.  Exact identity, rigorous tails, fast at every weight.

Arc restrictions additionally have a ``series`` route (the boundary expansion
in the vectors c e^{i\theta/2} + sqrt(p) d e^{-i\theta/2}) used automatically
at larger weights, where only a few shells survive above tolerance.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

SUPPORTED_LEVELS = (5, 7)
DEFAULT_TOL = 1e-10
DEFAULT_MAX_SHELL = 10**6
MAX_SHELL_ENV = "FRICKE_ZEROS_MAX_SHELL"
TWO_PI = 2.0 * math.pi

_ROW_CUTOFF_CAP = 1e15  # rows engine gives up past this many rows (Im z too small)
_SERIES_SHELL_CAP = 40000  # arc series route only used when this many shells suffice
_MU_SIEVE_LIMIT = 60000


class DomainError(ValueError):
    """Input outside the contract (bad level, weight, angle range, ...)."""


class NonConvergence(RuntimeError):
    """The requested tolerance is unreachable within the configured cutoff."""


class RealnessViolation(RuntimeError):
    """An arc value came back with an imaginary part far beyond its error budget."""


class Arc(Enum):
    ONE = 1
    TWO = 2


def check_level(p: int) -> int:
    if p not in SUPPORTED_LEVELS:
        raise DomainError(f"level must be one of {SUPPORTED_LEVELS}, got {p!r}")
    return p


def check_weight(k: int) -> int:
    if not isinstance(k, (int, np.integer)) or k % 2 or k < 4:
        raise DomainError(f"weight must be an even integer >= 4, got {k!r}")
    return int(k)


def max_shell_default() -> int:
    raw = os.environ.get(MAX_SHELL_ENV)
    if raw is None:
        return DEFAULT_MAX_SHELL
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"{MAX_SHELL_ENV} must be an integer, got {raw!r}") from exc
    if value < 100:
        raise DomainError(f"{MAX_SHELL_ENV} too small: {value}")
    return value


def _safe_exp(log_value: float) -> float:
    return math.inf if log_value > 700.0 else math.exp(log_value)


# ---------------------------------------------------------------------------
# angles and arcs


def alpha_p(p: int) -> float:
    """The arc opening angle: tan(alpha_5) = 2, tan(alpha_7) = 5/sqrt(3)."""
    check_level(p)
    return math.atan(2.0) if p == 5 else math.atan(5.0 / math.sqrt(3.0))


def _mod_interval(x: float, period: float) -> float:
    """Reduce x into [0, period) using an exact floor of the quotient."""
    return x - period * math.floor(x / period)


@dataclass(frozen=True)
class AngleConstants:
    p: int
    k: int
    alpha_p: float
    alpha_pk: float  # k(pi/2 + alpha_p)/2 mod pi, in [0, pi)
    beta_pk: float   # k alpha_5/2 resp. k(alpha_7 - pi/6)/2, mod pi


def angle_constants(p: int, k: int) -> AngleConstants:
    check_level(p)
    check_weight(k)
    a = alpha_p(p)
    alpha_pk = _mod_interval(0.5 * k * (0.5 * math.pi + a), math.pi)
    second = 0.5 * k * a if p == 5 else 0.5 * k * (a - math.pi / 6.0)
    beta_pk = _mod_interval(second, math.pi)
    return AngleConstants(p=p, k=k, alpha_p=a, alpha_pk=alpha_pk, beta_pk=beta_pk)


def arc_range(p: int, arc: Arc) -> tuple[float, float]:
    """Closed theta-interval for the arc parameterization."""
    a = alpha_p(p)
    if arc is Arc.ONE:
        return (0.5 * math.pi, 0.5 * math.pi + a)
    lo = a if p == 5 else a - math.pi / 6.0
    return (lo, 0.5 * math.pi)


_ARC_EPS = 1e-12


@dataclass(frozen=True)
class ArcCoordinate:
    p: int
    arc: Arc
    theta: float

    def __post_init__(self):
        check_level(self.p)
        lo, hi = arc_range(self.p, self.arc)
        if not (lo - _ARC_EPS <= self.theta <= hi + _ARC_EPS):
            raise DomainError(
                f"theta={self.theta!r} outside arc {self.arc.name} range [{lo}, {hi}] for p={self.p}"
            )


def arc_to_halfplane(a: ArcCoordinate) -> complex:
    """Map an arc coordinate to the upper half-plane point it parameterizes."""
    root = math.sqrt(a.p)
    w = cmath.exp(1j * a.theta)
    if a.arc is Arc.ONE:
        return w / root
    return w / (2.0 * root) - 0.5


# ---------------------------------------------------------------------------
# truncated values


@dataclass(frozen=True)
class TruncatedValue:
    """A numeric value plus a rigorous bound on everything left out."""

    value: complex
    tail_bound: float
    n_max: int
    imag_defect: float = field(default=0.0, compare=False)

    @property
    def real(self) -> float:
        return float(self.value.real)


# ---------------------------------------------------------------------------
# rows engine: Moebius-filtered full-row sums


@lru_cache(maxsize=1)
def _mobius_table(limit: int = _MU_SIEVE_LIMIT) -> np.ndarray:
    mu = np.ones(limit + 1, dtype=np.int64)
    primes_mask = np.ones(limit + 1, dtype=bool)
    primes_mask[:2] = False
    for q in range(2, limit + 1):
        if primes_mask[q]:
            primes_mask[2 * q :: q] = False
            mu[q::q] *= -1
            qq = q * q
            if qq <= limit:
                mu[qq::qq] = 0
    mu[0] = 0
    return mu


@lru_cache(maxsize=64)
def _mobius_prefix(k: int) -> np.ndarray:
    """Prefix sums of mu(g) g^{-k} for g up to the sieve limit."""
    mu = _mobius_table()
    g = np.arange(mu.size, dtype=np.float64)
    g[0] = 1.0
    weights = mu * g ** (-float(k))
    return np.cumsum(weights)


def _mertens_weighted(k: int, x: int) -> tuple[float, float]:
    """(sum_{g<=x} mu(g) g^{-k}, remainder bound when x exceeds the sieve)."""
    if x < 1:
        return 0.0, 0.0
    prefix = _mobius_prefix(k)
    if x < prefix.size:
        return float(prefix[x]), 0.0
    top = prefix.size - 1
    # |sum_{g>top} mu(g) g^{-k}| <= int_top^inf u^{-k} du
    return float(prefix[top]), top ** (1 - k) / (k - 1)


def _lipschitz_row(w: complex, k: int, tol: float) -> tuple[complex, float]:
    """sum_{d in Z} (w+d)^{-k} via the exponential sum, with a tail bound.

    Each term is assembled in log space so weights of a few hundred stay
    inside double range even when Im w is small.
    """
    y = w.imag
    if y <= 0:
        raise DomainError("need Im w > 0")
    log_pref = k * math.log(TWO_PI) - math.lgamma(k)
    sign = 1.0 if k % 4 == 0 else -1.0
    two_pi_i_w = 2j * math.pi * w

    total = 0.0 + 0.0j
    r = 1
    chunk = 64
    max_r = 10_000_000
    while True:
        rs = np.arange(r, r + chunk, dtype=np.float64)
        exponents = log_pref + (k - 1) * np.log(rs) + rs * two_pi_i_w
        total += complex(np.exp(exponents).sum())
        r += chunk
        # ratio of consecutive term magnitudes never exceeds this from r on
        rho = math.exp(-TWO_PI * y) * ((r + 1) / r) ** (k - 1)
        if rho < 1.0:
            tail = _safe_exp(log_pref + (k - 1) * math.log(r) - TWO_PI * y * r) / (1.0 - rho)
            if tail <= tol:
                return sign * total, tail
        if r > max_r:
            raise NonConvergence("row sum did not reach tolerance")


def _rows_Ek(z: complex, k: int, tol: float) -> TruncatedValue:
    """E_k(z) as 1 + sum over rows c >= 1 of coprime-filtered row sums.

    Partial rows up to the cutoff C collapse exactly to
    sum_m L_k(m z) * (sum_{g <= C/m} mu(g) g^{-k}); everything else is
    bounded: rows beyond C by an integral envelope, the m-truncation by the
    first-term dominance of each row sum, the Moebius prefix past the sieve
    by its own integral remainder.
    """
    y = z.imag
    ck = math.exp(0.5 * math.log(math.pi) + math.lgamma((k - 1) / 2.0) - math.lgamma(k / 2.0))

    def row_tail(c_cut: float) -> float:
        first = _safe_exp(-k * math.log(y) + (1 - k) * math.log(c_cut)) / (k - 1)
        second = _safe_exp(math.log(ck) + (1 - k) * math.log(y) + (2 - k) * math.log(c_cut)) / (k - 2)
        return first + second

    c_cut = 8.0
    while row_tail(c_cut) > 0.25 * tol:
        c_cut *= 2.0
        if c_cut > _ROW_CUTOFF_CAP:
            raise NonConvergence(
                "cannot reach tolerance: Im z too small for the row cutoff cap"
            )
    c_cut = int(c_cut)

    # past m_cut, |L_k(m z)| <= 2 e^{log_pref - 2 pi y m} (first-term dominance)
    zeta_bound = 1.0 + 2.0 ** (1 - k)  # |any Moebius prefix sum| is below this
    log_pref = k * math.log(TWO_PI) - math.lgamma(k)

    def m_tail(m_cut: int) -> float:
        lead = _safe_exp(log_pref - TWO_PI * y * (m_cut + 1))
        return 2.0 * lead / (1.0 - math.exp(-TWO_PI * y)) * zeta_bound

    m_cut = max(4, int(k * math.log(2.0) / (TWO_PI * y)) + 1)
    while m_cut < c_cut and m_tail(m_cut) > 0.25 * tol:
        m_cut = min(c_cut, m_cut * 2)
    m_cut = min(m_cut, c_cut)

    row_budget = row_tail(c_cut)
    trunc_budget = 0.0 if m_cut >= c_cut else m_tail(m_cut)

    total = 1.0 + 0.0j  # the c = 0 pairs (0, +-1)
    lips_budget = 0.0
    mertens_budget = 0.0
    tol_per_row = 0.25 * tol / max(m_cut, 1)
    for m in range(1, m_cut + 1):
        row_value, row_err = _lipschitz_row(m * z, k, tol_per_row)
        mertens_value, mertens_err = _mertens_weighted(k, c_cut // m)
        total += row_value * mertens_value
        lips_budget += row_err * abs(mertens_value)
        mertens_budget += (abs(row_value) + row_err) * mertens_err

    tail = row_budget + trunc_budget + lips_budget + mertens_budget
    return TruncatedValue(total, tail, c_cut)


# ---------------------------------------------------------------------------
# shells engine: ascending N = c^2 + d^2 enumeration


def lattice_lambda(z: complex) -> float:
    """Smallest eigenvalue of the form |cz+d|^2 in (c,d): |cz+d|^2 >= lambda N."""
    t = abs(z) ** 2 + 1.0
    disc = (abs(z) ** 2 - 1.0) ** 2 + 4.0 * z.real**2
    return 0.5 * (t - math.sqrt(disc))


def _shell_pairs(max_n: int) -> np.ndarray:
    """All coprime (c, d) with c > 0 or (c = 0, d > 0), ordered by (N, c, d).

    The half-plane convention halves the sum: for even k the (c,d) and
    (-c,-d) terms are equal, so E_k equals the sum over this half of
    (cz+d)^{-k} with no 1/2 factor.
    """
    rows = []
    c_top = int(math.isqrt(max_n))
    for c in range(0, c_top + 1):
        d_top = int(math.isqrt(max_n - c * c))
        if c == 0:
            ds = np.arange(1, d_top + 1, dtype=np.int64)
        else:
            ds = np.arange(-d_top, d_top + 1, dtype=np.int64)
        cs = np.full(ds.shape, c, dtype=np.int64)
        keep = np.gcd(cs, np.abs(ds)) == 1
        rows.append(np.stack([cs[keep], ds[keep]], axis=1))
    pairs = np.concatenate(rows, axis=0)
    n = pairs[:, 0] ** 2 + pairs[:, 1] ** 2
    order = np.lexsort((pairs[:, 1], pairs[:, 0], n))
    return pairs[order]


def _shells_tail(k: int, lam: float, max_n: int) -> float:
    """Bound on the omitted half-plane terms with N > max_n.

    Per-shell half-plane count <= 2 sqrt(N) + 1, integral comparison from
    max_n; assembled in log space to survive extreme weights.
    """
    log_lam = -0.5 * k * math.log(lam)
    t1 = _safe_exp(math.log(4.0 / (k - 3)) + log_lam + 0.5 * (3 - k) * math.log(max_n))
    t2 = _safe_exp(math.log(2.0 / (k - 2)) + log_lam + 0.5 * (2 - k) * math.log(max_n))
    return t1 + t2


def _shells_Ek(z: complex, k: int, tol: float, max_shell: int) -> TruncatedValue:
    lam = lattice_lambda(z)
    if lam <= 0:
        raise DomainError("z is not in the upper half-plane")
    max_n = 64
    while _shells_tail(k, lam, max_n) > tol:
        if max_n >= max_shell:
            raise NonConvergence(
                f"tolerance {tol} needs more than max_shell={max_shell} shells "
                f"(z={z!r}, k={k}); z may be too close to the real axis"
            )
        max_n = min(max_shell, max_n * 2)
    pairs = _shell_pairs(max_n)
    terms = (pairs[:, 0] * z + pairs[:, 1]) ** (-float(k))
    return TruncatedValue(complex(terms.sum()), _shells_tail(k, lam, max_n), max_n)


def eisenstein_Ek(
    z: complex,
    k: int,
    tol: float = DEFAULT_TOL,
    method: str = "auto",
    max_shell: int | None = None,
) -> TruncatedValue:
    """E_k(z) = (1/2) sum over coprime (c,d) of (cz+d)^{-k}, with tail bound.

    ``method``: "auto" (row-accelerated; reaches any tolerance), "rows", or
    "shells" (direct ascending-N enumeration; raises NonConvergence when the
    tolerance needs more than ``max_shell`` shells).
    """
    check_weight(k)
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("need Im z > 0")
    if not tol > 0:
        raise DomainError("tol must be positive")
    if method in ("auto", "rows"):
        return _rows_Ek(z, k, tol)
    if method == "shells":
        return _shells_Ek(z, k, tol, max_shell or max_shell_default())
    raise DomainError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# the level-p series


def star_weight(p: int, k: int) -> float:
    """p^{k/2}; overflows IEEE doubles past k ~ 880 (p=5) / 730 (p=7)."""
    return float(p) ** (k / 2)


def eisenstein_star(
    z: complex,
    k: int,
    p: int,
    tol: float = DEFAULT_TOL,
    method: str = "auto",
    max_shell: int | None = None,
) -> TruncatedValue:
    """E*_{k,p}(z) = (p^{k/2} E_k(pz) + E_k(z)) / (p^{k/2} + 1)."""
    check_level(p)
    check_weight(k)
    z = complex(z)
    if method == "coset":
        return eisenstein_star_coset(z, k, p, tol, max_shell)
    w = star_weight(p, k)
    denom = w + 1.0
    # split the absolute tolerance so each piece lands within budget
    upper = eisenstein_Ek(p * z, k, tol * denom / (2.0 * w), method, max_shell)
    lower = eisenstein_Ek(z, k, tol * denom / 2.0, method, max_shell)
    value = (w * upper.value + lower.value) / denom
    tail = (w * upper.tail_bound + lower.tail_bound) / denom
    return TruncatedValue(value, tail, max(upper.n_max, lower.n_max))


def _filtered_half_pairs(max_n: int, p: int, which: str) -> np.ndarray:
    """Half-plane coprime pairs with p | c ("p_div_c") or p | d ("p_div_d")."""
    pairs = _shell_pairs(max_n)
    col = 0 if which == "p_div_c" else 1
    return pairs[pairs[:, col] % p == 0]


def eisenstein_star_coset(
    z: complex,
    k: int,
    p: int,
    tol: float = DEFAULT_TOL,
    max_shell: int | None = None,
) -> TruncatedValue:
    """E*_{k,p} from the cusp decomposition, an independent second definition:

        (1/2) sum_{(c,d)=1, p|c} (cz+d)^{-k}
        + (p^{k/2}/2) sum_{(c,d)=1, p|d} (c(pz)+d)^{-k}

    Evaluated by direct shell enumeration (both halves share the cutoff); the
    tail bound is honest and can be sizeable at small weights.
    """
    check_level(p)
    check_weight(k)
    z = complex(z)
    if z.imag <= 0:
        raise DomainError("need Im z > 0")
    cap = max_shell or max_shell_default()
    w = star_weight(p, k)
    lam1 = lattice_lambda(z)
    lam2 = lattice_lambda(p * z)

    def tail(max_n: int) -> float:
        return _shells_tail(k, lam1, max_n) + w * _shells_tail(k, lam2, max_n)

    max_n = 64
    while tail(max_n) > tol and max_n < cap:
        max_n = min(cap, max_n * 2)
    first = _filtered_half_pairs(max_n, p, "p_div_c")
    second = _filtered_half_pairs(max_n, p, "p_div_d")
    s1 = complex(((first[:, 0] * z + first[:, 1]) ** (-float(k))).sum())
    s2 = complex(((second[:, 0] * (p * z) + second[:, 1]) ** (-float(k))).sum())
    return TruncatedValue(s1 + w * s2, tail(max_n), max_n)


# ---------------------------------------------------------------------------
# arc restrictions


def arc_quadratic_lambda(p: int, cos_theta: float) -> float:
    """Min eigenvalue of c^2 + p d^2 + 2 sqrt(p) c d cos(theta) over (c,d)."""
    t = 1.0 + p
    disc = (p - 1.0) ** 2 + 4.0 * p * cos_theta**2
    return 0.5 * (t - math.sqrt(disc))


def _arc_pairs(max_n: int, p: int, arc: Arc) -> tuple[np.ndarray, np.ndarray]:
    """Half-plane pairs (c >= 1, d) with gcd 1 and p not dividing c.

    Returns (pairs, amplified): ``amplified`` marks the odd-odd class of arc 2
    carrying the 2^k factor.  The main (1, 0) term is excluded; it is the
    2 cos(k theta / 2) part handled separately.
    """
    pairs = _shell_pairs(max_n)
    keep = (pairs[:, 0] >= 1) & (pairs[:, 0] % p != 0)
    keep &= ~((pairs[:, 0] == 1) & (pairs[:, 1] == 0))
    pairs = pairs[keep]
    if arc is Arc.ONE:
        return pairs, np.zeros(len(pairs), dtype=bool)
    odd = (pairs[:, 0] % 2 != 0) & (pairs[:, 1] % 2 != 0)
    return pairs, odd


def _arc_series_tail(p: int, arc: Arc, k: int, theta: float, max_n: int) -> float:
    """Omitted-shell bound for the boundary expansion past max_n."""
    lam = arc_quadratic_lambda(p, math.cos(theta))
    amp = 4.0 if arc is Arc.TWO else 1.0
    log_scale = 0.5 * k * math.log(amp / lam)
    t1 = _safe_exp(math.log(8.0 / (k - 3)) + log_scale + 0.5 * (3 - k) * math.log(max_n))
    t2 = _safe_exp(math.log(4.0 / (k - 2)) + log_scale + 0.5 * (2 - k) * math.log(max_n))
    return t1 + t2


def _arc_series_cost(p: int, arc: Arc, k: int, theta: float, tol: float) -> int | None:
    """Shell cutoff the series route needs, or None when impractical."""
    max_n = 32
    while _arc_series_tail(p, arc, k, theta, max_n) > tol:
        if max_n > _SERIES_SHELL_CAP:
            return None
        max_n *= 2
    return max_n


def F_arc_series(
    p: int, arc: Arc, k: int, theta: float, tol: float = DEFAULT_TOL
) -> TruncatedValue:
    """Arc restriction via the boundary expansion 2cos(k theta/2) + remainder.

    Terms never exceed O(1) in magnitude, so this route works at arbitrarily
    large weights; it is practical whenever the tolerance is reachable within
    a moderate shell cutoff.
    """
    ArcCoordinate(p, arc, theta)  # validates p, arc, theta
    check_weight(k)
    max_n = _arc_series_cost(p, arc, k, theta, tol)
    if max_n is None:
        raise NonConvergence(
            f"boundary expansion needs more than {_SERIES_SHELL_CAP} shells "
            f"(p={p}, arc={arc.name}, k={k}, theta={theta})"
        )
    pairs, amplified = _arc_pairs(max_n, p, arc)
    u = cmath.exp(0.5j * theta)
    vec = pairs[:, 0] * u + pairs[:, 1] * (math.sqrt(p) * u.conjugate())
    # the odd-odd class of arc 2 carries 2^k, folded in as (vec/2)^{-k}
    vec[amplified] *= 0.5
    with np.errstate(under="ignore"):
        remainder = float(np.real(vec ** (-float(k))).sum())
    value = 2.0 * math.cos(0.5 * k * theta) + 2.0 * remainder
    return TruncatedValue(value, _arc_series_tail(p, arc, k, theta, max_n), max_n)


def F_arc(
    a: ArcCoordinate, k: int, tol: float = DEFAULT_TOL, method: str = "auto"
) -> TruncatedValue:
    """F*_{k,p,n}(theta) = Re(e^{ik theta/2} E*_{k,p}(z(theta))), a real value.

    The imaginary part is recorded as ``imag_defect`` and must stay inside
    the propagated error budget; far outside it means a bug, and raises.
    """
    check_weight(k)
    if method == "series" or (
        method == "auto" and _arc_series_cost(a.p, a.arc, k, a.theta, tol) is not None
    ):
        return F_arc_series(a.p, a.arc, k, a.theta, tol)
    z = arc_to_halfplane(a)
    star = eisenstein_star(z, k, a.p, tol)
    rotated = cmath.exp(0.5j * k * a.theta) * star.value
    budget = star.tail_bound + 1e-13 * (1.0 + abs(rotated))
    if abs(rotated.imag) > 10.0 * max(tol, budget):
        raise RealnessViolation(
            f"imaginary defect {rotated.imag:.3e} exceeds 10x budget {budget:.3e} "
            f"at p={a.p} arc={a.arc.name} k={k} theta={a.theta}"
        )
    return TruncatedValue(rotated.real, budget, star.n_max, imag_defect=abs(rotated.imag))


# ---------------------------------------------------------------------------
# gluing the two arcs


def glued_range(p: int) -> tuple[float, float]:
    return (0.5 * math.pi, math.pi if p == 5 else 7.0 * math.pi / 6.0)


def arc2_shift(p: int) -> float:
    """Glued theta minus arc-2 theta: pi/2 for p=5, 2pi/3 for p=7."""
    return 0.5 * math.pi if p == 5 else 2.0 * math.pi / 3.0


def junction_phase(p: int, k: int) -> complex:
    """Branch mismatch factor: F_1(pi/2 + alpha_p) = phase * F_2(junction)."""
    check_level(p)
    check_weight(k)
    return cmath.exp(0.25j * math.pi * k) if p == 5 else cmath.exp(1j * math.pi * k / 3.0)


def forced_junction_zero(p: int, k: int) -> bool:
    """True when the junction phase is not real, forcing both branches to 0."""
    return (k % 4 != 0) if p == 5 else (k % 6 != 0)


def glue_sign(p: int, k: int) -> float:
    """Sign applied to branch 2 so signs are comparable across the junction."""
    if p == 5:
        residue = k % 8
        if residue == 0:
            return 1.0
        if residue == 4:
            return -1.0
        return 1.0  # phase purely imaginary: junction zero, sign immaterial
    return 1.0 if k % 6 == 0 else -1.0


def F_glued(
    p: int, k: int, theta: float, tol: float = DEFAULT_TOL, method: str = "auto"
) -> TruncatedValue:
    """The arc restriction glued into one parameter theta in [pi/2, end].

    Branch 1 covers [pi/2, pi/2 + alpha_p]; beyond, branch 2 is evaluated at
    theta - shift and multiplied by the junction bookkeeping sign.
    """
    lo, hi = glued_range(p)
    if not (lo - _ARC_EPS <= theta <= hi + _ARC_EPS):
        raise DomainError(f"theta={theta!r} outside glued range [{lo}, {hi}] for p={p}")
    junction = 0.5 * math.pi + alpha_p(p)
    if theta <= junction:
        return F_arc(ArcCoordinate(p, Arc.ONE, theta), k, tol, method)
    inner = F_arc(ArcCoordinate(p, Arc.TWO, theta - arc2_shift(p)), k, tol, method)
    sigma = glue_sign(p, k)
    return TruncatedValue(
        sigma * inner.real, inner.tail_bound, inner.n_max, imag_defect=inner.imag_defect
    )
