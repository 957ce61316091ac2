"""Argument tracking for the resonant lattice terms near the arc endpoints.

Each arc has one or two lattice pairs whose term magnitude tends to 1, so the
sign of F near an endpoint is decided by where the *argument* of those terms
lands.  For each such pair the doubled argument theta' of its defining vector
a e^{i theta/2} + sqrt(p) e^{-i theta/2} satisfies an exact tangent identity

    tan(theta'/2) = slope * tan(theta/2),

and when theta sits at distance x = t pi / k from the arc endpoint, theta'
is pinned inside an explicit window whose inner edge is controlled by an
admissible factor d (see d_window).  The companion envelopes bound the
squared magnitude of the same vectors between 1 + c x and e^{c x}.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .eisenstein import Arc, DomainError, alpha_p, arc_range, check_level

__all__ = [
    "Term",
    "PrimedAngle",
    "DWindow",
    "ModAngles",
    "TERMS_FOR_LEVEL",
    "slope_constant",
    "term_vector",
    "endpoint_theta",
    "primed_angle",
    "primed_angle_window",
    "d_window",
    "envelope_value",
    "envelope_check",
    "exp_crossover_gap",
    "primed_mod_angles",
    "half_weight_phase",
    "third_weight_phase",
]

_SQRT3 = math.sqrt(3.0)
_SQRT5 = math.sqrt(5.0)
_SQRT7 = math.sqrt(7.0)
TWO_PI = 2.0 * math.pi


class Term(Enum):
    """Resonant-term selector; the first arc carries theta1_*, the second theta2_*."""

    THETA1_1 = "theta1_1"
    THETA1_2 = "theta1_2"
    THETA2_1 = "theta2_1"
    THETA2_2 = "theta2_2"


TERMS_FOR_LEVEL = {
    5: (Term.THETA1_1, Term.THETA2_1),
    7: (Term.THETA1_1, Term.THETA1_2, Term.THETA2_1, Term.THETA2_2),
}

# coefficient a of the defining vector a e^{i theta/2} + sqrt(p) e^{-i theta/2}
_VECTOR_COEF = {
    Term.THETA1_1: 2.0,
    Term.THETA1_2: 3.0,
    Term.THETA2_1: -1.0,
    Term.THETA2_2: -3.0,
}

# each slope is exactly (a - sqrt(p)) / (a + sqrt(p)); the sign flips to
# positive for the two vectors whose coefficient a exceeds sqrt(7)
_SLOPES = {
    (5, Term.THETA1_1): -(9.0 - 4.0 * _SQRT5),
    (5, Term.THETA2_1): -(3.0 + _SQRT5) / 2.0,
    (7, Term.THETA1_1): -(11.0 - 4.0 * _SQRT7) / 3.0,
    (7, Term.THETA1_2): 8.0 - 3.0 * _SQRT7,
    (7, Term.THETA2_1): -(4.0 + _SQRT7) / 3.0,
    (7, Term.THETA2_2): 8.0 + 3.0 * _SQRT7,
}

# theta' window: shift + endpoint + lo*x < theta' < shift + endpoint + hi*x
# where x is the endpoint offset of theta and "d" marks the admissible factor
_WINDOW_SHAPE = {
    (5, Term.THETA1_1): (-math.pi, "d", 1.0),
    (5, Term.THETA2_1): (-math.pi, -1.0, "-d"),
    (7, Term.THETA1_1): (2.0 * math.pi / 3.0, "d", 3.0),
    (7, Term.THETA1_2): (-2.0 * math.pi / 3.0, -2.0, "-d"),
    (7, Term.THETA2_1): (-2.0 * math.pi / 3.0, -1.5, "-d"),
    (7, Term.THETA2_2): (2.0 * math.pi / 3.0, "d", 0.5),
}


def _window_base(p: int, which: Term) -> float:
    shift = _WINDOW_SHAPE[(p, which)][0]
    lo, hi = arc_range(p, _term_arc(which))
    return shift + (hi if _term_arc(which) is Arc.ONE else lo)

# admissible-d supremum: numerator / (offset + factor * tan((t/2)(pi/k)))
_D_SUP = {
    (5, Term.THETA1_1): (1.0, 1.0, 4.0),
    (5, Term.THETA2_1): (1.0, 1.0, 1.0),
    (7, Term.THETA1_1): (3.0, 1.0, 2.0 * _SQRT3),
    (7, Term.THETA1_2): (2.0, 1.0, _SQRT3),
    (7, Term.THETA2_1): (3.0, 2.0, _SQRT3),
    (7, Term.THETA2_2): (1.0, 2.0, 3.0 * _SQRT3),
}

# squared-magnitude envelope: (constant, cosine coefficient, divisor, rate c)
# so that 1 + c x <= (constant + coscoef * cos(theta)) / divisor <= e^{c x}
_ENVELOPES = {
    (5, Term.THETA1_1): (9.0, 4.0 * _SQRT5, 1.0, 4.0),
    (5, Term.THETA2_1): (6.0, -2.0 * _SQRT5, 4.0, 1.0),
    (7, Term.THETA1_1): (11.0, 4.0 * _SQRT7, 1.0, 2.0 * _SQRT3),
    (7, Term.THETA1_2): (16.0, 6.0 * _SQRT7, 1.0, 3.0 * _SQRT3),
    (7, Term.THETA2_1): (8.0, -2.0 * _SQRT7, 4.0, _SQRT3 / 2.0),
    (7, Term.THETA2_2): (16.0, -6.0 * _SQRT7, 4.0, 3.0 * _SQRT3 / 2.0),
}


def _check_term(p: int, which: Term) -> None:
    check_level(p)
    if not isinstance(which, Term):
        raise DomainError(f"term selector must be a Term, got {which!r}")
    if which not in TERMS_FOR_LEVEL[p]:
        raise DomainError(f"term {which.value} is not tracked at level {p}")


def _term_arc(which: Term) -> Arc:
    return Arc.ONE if which in (Term.THETA1_1, Term.THETA1_2) else Arc.TWO


def slope_constant(p: int, which: Term) -> float:
    _check_term(p, which)
    return _SLOPES[(p, which)]


def growth_rate(p: int, which: Term) -> float:
    """Envelope rate c: the term's squared magnitude grows like 1 + c t pi/k."""
    _check_term(p, which)
    return _ENVELOPES[(p, which)][3]


def term_vector(p: int, which: Term, theta: float) -> complex:
    """The defining vector a e^{i theta/2} + sqrt(p) e^{-i theta/2}."""
    _check_term(p, which)
    u = cmath.exp(0.5j * theta)
    return _VECTOR_COEF[which] * u + math.sqrt(p) * u.conjugate()


@dataclass(frozen=True)
class PrimedAngle:
    p: int
    which: Term
    theta: float
    theta_prime: float
    slope_constant: float


@dataclass(frozen=True)
class DWindow:
    d_value: float
    t: float
    k: int
    admissible: bool


@dataclass(frozen=True)
class ModAngles:
    """Endpoint phases alpha/beta and their primed images, reduced mod 2 pi."""

    p: int
    k: int
    t: float
    alpha: float
    beta: float
    alpha_primes: tuple
    beta_primes: tuple


def endpoint_theta(p: int, which: Term, t: float, k: int) -> float:
    """The sample point at offset t pi / k from the term's arc endpoint.

    First-arc terms are measured inward from the top endpoint
    pi/2 + alpha_p; second-arc terms from the bottom endpoint of the arc.
    """
    _check_term(p, which)
    if t <= 0.0 or k < 1:
        raise DomainError(f"need t > 0 and k >= 1, got t={t}, k={k}")
    x = t * math.pi / k
    if _term_arc(which) is Arc.ONE:
        return 0.5 * math.pi + alpha_p(p) - x
    return arc_range(p, Arc.TWO)[0] + x


def _endpoint_offset(p: int, which: Term, theta: float) -> float:
    lo, hi = arc_range(p, _term_arc(which))
    if not (lo - 1e-12 <= theta <= hi + 1e-12):
        raise DomainError(
            f"theta={theta!r} outside arc range [{lo}, {hi}] for {which.value} at p={p}"
        )
    return (hi - theta) if _term_arc(which) is Arc.ONE else (theta - lo)


def primed_angle(p: int, which: Term, theta: float) -> PrimedAngle:
    """Doubled argument of the term's defining vector, on the window branch.

    The principal doubled argument is shifted by a multiple of 2 pi so the
    result lies in the window around the shifted endpoint (the branch all
    endpoint reasoning uses); the tangent identity is then verified.
    """
    _check_term(p, which)
    x = _endpoint_offset(p, which, theta)
    _, lo_coef, hi_coef = _WINDOW_SHAPE[(p, which)]
    lo = 0.0 if isinstance(lo_coef, str) else lo_coef
    hi = 0.0 if isinstance(hi_coef, str) else hi_coef
    center = _window_base(p, which) + 0.5 * (lo + hi) * x
    raw = 2.0 * cmath.phase(term_vector(p, which, theta))
    theta_prime = raw + TWO_PI * round((center - raw) / TWO_PI)
    slope = _SLOPES[(p, which)]
    lhs = math.tan(0.5 * theta_prime)
    rhs = slope * math.tan(0.5 * theta)
    if abs(lhs - rhs) > 1e-12 * max(1.0, abs(lhs), abs(rhs)):
        raise DomainError(
            f"tangent identity failed at p={p} {which.value} theta={theta}: {lhs} vs {rhs}"
        )
    return PrimedAngle(p, which, theta, theta_prime, slope)


def primed_angle_window(p: int, which: Term, t: float, k: int, d: float):
    """(lower, upper) bracket for theta' when theta = endpoint_theta(p, which, t, k).

    The bracket edges are asymptotically sharp: at the supremum admissible d
    the inner edge can overshoot by an O(x^2) sliver (x = t pi / k), so a
    guaranteed bracket needs d a safe fraction below d_window(...).d_value.
    Tests certify d <= 0.8 * sup on t/k <= 1/32.
    """
    _check_term(p, which)
    if t <= 0.0 or k < 1:
        raise DomainError(f"need t > 0 and k >= 1, got t={t}, k={k}")
    if d <= 0.0:
        raise DomainError(f"need an admissible d > 0, got {d}")
    x = t * math.pi / k
    _, lo_coef, hi_coef = _WINDOW_SHAPE[(p, which)]
    base = _window_base(p, which)
    lo = (d if lo_coef == "d" else lo_coef) * x
    hi = (-d if hi_coef == "-d" else hi_coef) * x
    return base + lo, base + hi


def d_window(p: int, which: Term, t: float, k: int) -> DWindow:
    """Supremum admissible window factor d for the requested term.

    Any 0 < d < d_value keeps the inner window edge valid; d_value itself sits
    exactly on the boundary and is reported as not admissible.
    """
    _check_term(p, which)
    if t <= 0.0 or not 0.0 < 0.5 * t * math.pi / k < 0.5 * math.pi:
        raise DomainError(f"need t > 0 and (t/2)(pi/k) < pi/2, got t={t}, k={k}")
    numerator, offset, factor = _D_SUP[(p, which)]
    sup = numerator / (offset + factor * math.tan(0.5 * t * math.pi / k))
    return DWindow(d_value=sup, t=t, k=k, admissible=False)


def envelope_value(p: int, which: Term, t: float, k: int) -> float:
    """Squared magnitude of the term vector at the endpoint offset t pi / k
    (amplified terms divided by 4)."""
    _check_term(p, which)
    const, coscoef, divisor, _ = _ENVELOPES[(p, which)]
    theta = endpoint_theta(p, which, t, k)
    return (const + coscoef * math.cos(theta)) / divisor


def exp_crossover_gap(s: float) -> float:
    """e^{(sqrt(3)/2) s pi} minus the second-arc level-7 near form at offset s pi.

    Negative for 0 < s <= 1/10, which is what flips that form's exponential
    comparison into a lower bound; at s = 1/10 the value is -0.0038812...
    """
    a7 = alpha_p(7)
    form = (8.0 - 2.0 * _SQRT7 * math.cos(a7 - math.pi / 6.0 + s * math.pi)) / 4.0
    return math.exp(0.5 * _SQRT3 * s * math.pi) - form


def envelope_check(p: int, which: Term, t: float, k: int) -> tuple[bool, bool]:
    """(lower_ok, upper_ok) for the term's squared-magnitude envelopes.

    Ordinary terms check 1 + c x <= form <= e^{c x}.  The level-7 theta2_1
    form runs the exponential the other way (e^{c x} <= form, valid only for
    t/k <= 1/10) and takes 1 + c x + x^2/2 as its upper bound instead.
    """
    _check_term(p, which)
    if t <= 0.0 or k < 4:
        raise DomainError(f"need t > 0 and k >= 4, got t={t}, k={k}")
    x = t * math.pi / k
    c = _ENVELOPES[(p, which)][3]
    form = envelope_value(p, which, t, k)
    if p == 7 and which is Term.THETA2_1:
        if t / k > 0.1:
            raise DomainError(f"the reversed exponential bound needs t/k <= 1/10, got {t / k}")
        lower_ok = 1.0 + c * x <= form and math.exp(c * x) <= form
        upper_ok = form <= 1.0 + c * x + 0.5 * x * x
        return lower_ok, upper_ok
    return 1.0 + c * x <= form, form <= math.exp(c * x)


def half_weight_phase(k: int) -> float:
    """-(k/2) pi mod 2 pi for even k: 0 when 4 | k, else pi."""
    if k % 2:
        raise DomainError(f"need even k, got {k}")
    return 0.0 if k % 4 == 0 else math.pi


def third_weight_phase(k: int, sign: int = 1) -> float:
    """(sign k/3) pi mod 2 pi for even k: 0, 2pi/3 or 4pi/3 by k mod 6."""
    if k % 2 or sign not in (1, -1):
        raise DomainError(f"need even k and sign +-1, got k={k}, sign={sign}")
    residue = (sign * k) % 6
    return {0: 0.0, 2: 2.0 * math.pi / 3.0, 4: 4.0 * math.pi / 3.0}[residue]


def _mod(x: float, period: float = TWO_PI) -> float:
    return x - period * math.floor(x / period)


def primed_mod_angles(p: int, k: int, t: float) -> ModAngles:
    """Endpoint phases and their primed images at offset t pi / k.

    alpha is the first-arc endpoint phase k(pi/2 + alpha_p)/2 mod pi and beta
    the second-arc one; each primed value is k theta'/2 pulled back by the
    same integer multiple of pi and reduced mod 2 pi.
    """
    check_level(p)
    if k % 2 or k < 4:
        raise DomainError(f"need an even weight k >= 4, got {k}")
    if t <= 0.0:
        raise DomainError(f"need t > 0, got {t}")
    arc1_end = 0.5 * k * (0.5 * math.pi + alpha_p(p))
    arc2_end = 0.5 * k * arc_range(p, Arc.TWO)[0]
    alpha = _mod(arc1_end, math.pi)
    beta = _mod(arc2_end, math.pi)
    alpha_primes = []
    beta_primes = []
    for which in TERMS_FOR_LEVEL[p]:
        theta = endpoint_theta(p, which, t, k)
        half_k_prime = 0.5 * k * primed_angle(p, which, theta).theta_prime
        if _term_arc(which) is Arc.ONE:
            alpha_primes.append(_mod(half_k_prime - (arc1_end - alpha)))
        else:
            beta_primes.append(_mod(half_k_prime - (arc2_end - beta)))
    return ModAngles(p, k, t, alpha, beta, tuple(alpha_primes), tuple(beta_primes))
